#include "ccrflow/star_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace ccrflow {

namespace {
constexpr double kHermTolFactor = 1e-10;
constexpr double kPsdTolFactor = 1e-10;
constexpr double kDegenerateTolFactor = 1e-12;
} // namespace

CovarianceForm CovarianceForm::make(const StarSpace& space, const MatrixXcd& S) {
    if (S.rows() != space.dim || S.cols() != space.dim)
        throw DimensionMismatch("CovarianceForm: matrix is " + std::to_string(S.rows()) + "x" +
                                std::to_string(S.cols()) + ", expected " + std::to_string(space.dim));
    const double scale = S.norm();
    if ((S - S.adjoint()).norm() > kHermTolFactor * std::max(scale, 1e-300))
        throw NotHermitian("CovarianceForm: matrix is not Hermitian");
    MatrixXcd H = hermitize(S);
    if (scale > 0.0 && min_eigenvalue(H) < -kPsdTolFactor * scale)
        throw NotPositive("CovarianceForm: matrix has a negative eigenvalue");
    return CovarianceForm(std::move(H));
}

MatrixXd CovarianceForm::real_part() const {
    return (S_ + S_.conjugate()).real();
}

MatrixXd CovarianceForm::sigma() const {
    // (S - conj S)/i is real; take the imaginary-part route to stay exactly real.
    MatrixXcd D = (S_ - S_.conjugate()) / std::complex<double>(0.0, 1.0);
    return D.real();
}

RatioOperator ratio_operator(const CovarianceForm& S) {
    const MatrixXd R = S.real_part();
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(R);
    const VectorXd d = es.eigenvalues();
    const double tol = kDegenerateTolFactor * std::max(R.norm(), 1e-300);

    std::vector<int> keep;
    for (int k = 0; k < d.size(); ++k)
        if (d[k] > tol) keep.push_back(k);
    const int m = static_cast<int>(keep.size());
    const int n = S.dim();

    MatrixXd U(n, m);
    VectorXd dr(m);
    for (int j = 0; j < m; ++j) {
        U.col(j) = es.eigenvectors().col(keep[j]);
        dr[j] = d[keep[j]];
    }

    RatioOperator ro;
    ro.coord_map = dr.cwiseSqrt().asDiagonal() * U.transpose();              // m x n
    ro.embed = U * dr.cwiseSqrt().cwiseInverse().asDiagonal();               // n x m
    ro.M = hermitize(ro.embed.transpose() * S.matrix() * ro.embed);
    return ro;
}

MatrixXcd to_quotient(const RatioOperator& ro, const MatrixXcd& form) {
    return ro.embed.transpose() * form * ro.embed;
}

SymplecticNormalForm normal_form(const CovarianceForm& S) {
    const MatrixXd R = S.real_part();
    Eigen::SelfAdjointEigenSolver<MatrixXd> esR(R);
    const double tol = kDegenerateTolFactor * std::max(R.norm(), 1e-300);
    if (esR.eigenvalues().minCoeff() <= tol)
        throw DegenerateRealPart("normal_form: S + conj(S) is degenerate");

    const int n = S.dim();
    const MatrixXd W = inv_sqrt_pd(R);
    const MatrixXd A = W * S.sigma() * W; // real antisymmetric in orthonormal coords

    // iA is Hermitian with spectrum {±2 mu_j} ∪ {0}; eigenvectors for a
    // positive eigenvalue 2mu give a (p, q) pair, the kernel gives the h_i.
    MatrixXcd iA = std::complex<double>(0.0, 1.0) * A.cast<std::complex<double>>();
    HermEig e = eig_hermitian(iA);

    const double ztol = 1e-10 * std::max(1.0, A.norm());
    struct Pair { double lambda; Eigen::VectorXd p, q; };
    std::vector<Pair> pairs;
    std::vector<Eigen::VectorXcd> kernel;
    for (int k = 0; k < n; ++k) {
        const double lam = e.values[k];
        if (std::abs(lam) <= ztol) {
            kernel.push_back(e.vectors.col(k));
        } else if (lam > 0.0) {
            // z = u + iv with ||u|| = ||v|| = 1/sqrt(2), u ⟂ v; then
            // A u = lam v, A v = -lam u and sigma(sqrt2 v, sqrt2 u) = lam.
            Eigen::VectorXcd z = e.vectors.col(k);
            Eigen::VectorXd u = std::sqrt(2.0) * z.real();
            Eigen::VectorXd v = std::sqrt(2.0) * z.imag();
            pairs.push_back({lam, u, v});
        }
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const Pair& a, const Pair& b) { return a.lambda > b.lambda; });

    // Real orthonormal basis of the kernel (a conjugation-invariant subspace).
    const int k_dim = static_cast<int>(kernel.size());
    MatrixXd H(n, k_dim);
    if (k_dim > 0) {
        MatrixXd raw(n, 2 * k_dim);
        for (int j = 0; j < k_dim; ++j) {
            raw.col(2 * j) = kernel[j].real();
            raw.col(2 * j + 1) = kernel[j].imag();
        }
        Eigen::JacobiSVD<MatrixXd> svd(raw, Eigen::ComputeThinU);
        H = svd.matrixU().leftCols(k_dim);
    }

    SymplecticNormalForm nf;
    nf.degenerate_dim = k_dim;
    MatrixXd cols(n, n);
    for (int j = 0; j < k_dim; ++j) cols.col(j) = H.col(j);
    for (size_t j = 0; j < pairs.size(); ++j) {
        nf.mus.push_back(pairs[j].lambda / 2.0);
        cols.col(k_dim + 2 * static_cast<int>(j)) = pairs[j].p;
        cols.col(k_dim + 2 * static_cast<int>(j) + 1) = pairs[j].q;
    }
    nf.B = W * cols;
    return nf;
}

Classification classify(const CovarianceForm& S) {
    const VectorXd spec = ratio_spectrum(S);
    Classification c;
    c.is_extremal = true;
    c.is_center_free = true;
    c.is_non_boundary = true;
    for (int k = 0; k < spec.size(); ++k) {
        const double s = spec[k];
        if (std::min(std::abs(s), std::abs(1.0 - s)) > kSpectralTol) c.is_extremal = false;
        if (std::abs(s - 0.5) <= kSpectralTol) c.is_center_free = false;
        if (s <= kSpectralTol || s >= 1.0 - kSpectralTol) c.is_non_boundary = false;
    }
    return c;
}

VectorXd ratio_spectrum(const CovarianceForm& S) {
    return eig_hermitian(ratio_operator(S).M).values;
}

} // namespace ccrflow
