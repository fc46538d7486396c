#pragma once

// *-vector spaces and positive sesquilinear forms over a fixed real basis.
//
// All matrices live in a fixed real basis of V, so complex conjugation is
// entrywise conjugation.  A covariance form S splits into a real symmetric
// part S + conj(S) and a real antisymmetric part sigma = (S - conj(S))/i.
// The ratio operator is the Hermitian matrix representing S against the
// inner product S + conj(S), restricted to its range; its spectrum sits in
// [0,1] and conj(M) = 1 - M.

#include <optional>
#include <string>
#include <vector>

#include "ccrflow/errors.hpp"
#include "ccrflow/linalg.hpp"

namespace ccrflow {

struct StarSpace {
    int dim = 0;
    std::vector<std::string> labels; // optional basis labels

    explicit StarSpace(int n) : dim(n) {
        if (n < 1) throw DimensionMismatch("StarSpace: dim must be >= 1");
    }
};

class CovarianceForm {
public:
    // Validates Hermiticity (tol 1e-10 * ||S||) and positivity.
    static CovarianceForm make(const StarSpace& space, const MatrixXcd& S);

    int dim() const { return static_cast<int>(S_.rows()); }
    const MatrixXcd& matrix() const { return S_; }
    MatrixXcd conj_matrix() const { return S_.conjugate(); }

    MatrixXd real_part() const;  // S + conj(S), real symmetric PSD
    MatrixXd sigma() const;      // (S - conj(S))/i, real antisymmetric

private:
    explicit CovarianceForm(MatrixXcd S) : S_(std::move(S)) {}
    MatrixXcd S_;
};

struct RatioOperator {
    MatrixXcd M;        // m x m Hermitian, spectrum in [0,1], conj(M) = 1 - M
    MatrixXd coord_map; // m x n, quotient coordinates of x in V^C are coord_map * x
    MatrixXd embed;     // n x m, maps quotient coordinates back to V^C

    int quotient_dim() const { return static_cast<int>(M.rows()); }
};

// Quotients out ker(S + conj(S)) and orthonormalizes; S(x,y) is recovered as
// (coord_map x)^dag M (coord_map y).
RatioOperator ratio_operator(const CovarianceForm& S);

// Pull a sesquilinear form on V^C down to the quotient coordinates of `ro`.
MatrixXcd to_quotient(const RatioOperator& ro, const MatrixXcd& form);

struct SymplecticNormalForm {
    MatrixXd B;              // columns (h_1..h_k, p_1, q_1, ..., p_m, q_m)
    std::vector<double> mus; // in (0, 1/2], descending
    int degenerate_dim = 0;  // k
};

// Normal form basis: B^T (S+conj S) B = I and sigma(q_j, p_j) = 2 mu_j.
// Requires S + conj(S) nondegenerate.
SymplecticNormalForm normal_form(const CovarianceForm& S);

struct Classification {
    bool is_extremal = false;    // spectrum(M) in {0,1}
    bool is_center_free = false; // 1/2 not an eigenvalue of M
    bool is_non_boundary = false; // spectrum avoids {0,1}
};

inline constexpr double kSpectralTol = 1e-8;

Classification classify(const CovarianceForm& S);

// Ascending spectrum of the ratio operator.
VectorXd ratio_spectrum(const CovarianceForm& S);

} // namespace ccrflow
