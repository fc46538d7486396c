#include "ccrflow/random_forms.hpp"

#include <cmath>
#include <complex>

#include <unsupported/Eigen/MatrixFunctions>

namespace ccrflow {

std::uint64_t split_mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(split_mix(seed ^ split_mix(stream)));
}

MatrixXd random_orthogonal(int n, std::mt19937_64& eng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    MatrixXd G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) = nd(eng);
    Eigen::HouseholderQR<MatrixXd> qr(G);
    MatrixXd Q = qr.householderQ();
    MatrixXd Rm = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j)
        if (Rm(j, j) < 0) Q.col(j) *= -1.0;
    return Q;
}

MatrixXd random_invertible(int n, std::mt19937_64& eng, double cond) {
    MatrixXd O1 = random_orthogonal(n, eng);
    MatrixXd O2 = random_orthogonal(n, eng);
    std::uniform_real_distribution<double> ud(1.0 / cond, cond);
    VectorXd d(n);
    for (int k = 0; k < n; ++k) d[k] = ud(eng);
    return O1 * d.asDiagonal() * O2;
}

CovarianceForm random_form(int modes, int degenerate, double mu_min, double mu_max,
                           std::mt19937_64& eng, double cond) {
    const int n = 2 * modes + degenerate;
    std::uniform_real_distribution<double> umu(mu_min, mu_max);

    // K real antisymmetric with singular values mu_j; M0 = 1/2 + iK has
    // spectrum {1/2 ± mu_j} ∪ {1/2} and conj(M0) = 1 - M0.
    MatrixXd K = MatrixXd::Zero(n, n);
    for (int j = 0; j < modes; ++j) {
        const double mu = umu(eng);
        K(2 * j, 2 * j + 1) = mu;
        K(2 * j + 1, 2 * j) = -mu;
    }
    MatrixXd O = random_orthogonal(n, eng);
    K = O * K * O.transpose();

    MatrixXcd M0 = 0.5 * MatrixXcd::Identity(n, n) +
                   std::complex<double>(0.0, 1.0) * K.cast<std::complex<double>>();
    MatrixXd A = random_invertible(n, eng, cond);
    MatrixXcd S = A.transpose().cast<std::complex<double>>() * M0 * A.cast<std::complex<double>>();
    return CovarianceForm::make(StarSpace(n), S);
}

CovarianceForm random_extremal_form(int modes, std::mt19937_64& eng, double cond) {
    const int n = 2 * modes;
    MatrixXd K = MatrixXd::Zero(n, n);
    for (int j = 0; j < modes; ++j) {
        K(2 * j, 2 * j + 1) = 0.5;
        K(2 * j + 1, 2 * j) = -0.5;
    }
    MatrixXd O = random_orthogonal(n, eng);
    K = O * K * O.transpose();
    MatrixXcd M0 = 0.5 * MatrixXcd::Identity(n, n) +
                   std::complex<double>(0.0, 1.0) * K.cast<std::complex<double>>();
    MatrixXd A = random_invertible(n, eng, cond);
    MatrixXcd S = A.transpose().cast<std::complex<double>>() * M0 * A.cast<std::complex<double>>();
    return CovarianceForm::make(StarSpace(n), S);
}

MatrixXd random_symplectic(const CovarianceForm& S, std::mt19937_64& eng, double scale) {
    const int n = S.dim();
    const MatrixXd sig = S.sigma();
    // sp(V, sigma) = { Y : sigma Y symmetric }; take Y = sigma^{-1} W, W symmetric.
    std::normal_distribution<double> nd(0.0, 1.0);
    MatrixXd W(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) W(i, j) = W(j, i) = nd(eng);
    MatrixXd Y = sig.fullPivLu().solve(W);
    Y *= scale / std::max(Y.norm(), 1e-300);
    return Y.exp();
}

} // namespace ccrflow
