#include "ccrflow/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace ccrflow {

HermEig eig_hermitian(const MatrixXcd& A) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hermitize(A));
    if (es.info() != Eigen::Success)
        throw std::runtime_error("Hermitian eigensolver failed to converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

MatrixXcd apply_spectral(const MatrixXcd& A, const std::function<double(double)>& f) {
    HermEig e = eig_hermitian(A);
    VectorXd d(e.values.size());
    for (Eigen::Index k = 0; k < d.size(); ++k) d[k] = f(e.values[k]);
    return e.vectors * d.asDiagonal() * e.vectors.adjoint();
}

MatrixXd sqrt_psd(const MatrixXd& R) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (R + R.transpose()));
    VectorXd d = es.eigenvalues();
    for (Eigen::Index k = 0; k < d.size(); ++k) d[k] = std::sqrt(std::max(d[k], 0.0));
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

MatrixXd inv_sqrt_pd(const MatrixXd& R) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (R + R.transpose()));
    VectorXd d = es.eigenvalues();
    for (Eigen::Index k = 0; k < d.size(); ++k) {
        if (d[k] <= 0.0)
            throw std::runtime_error("inv_sqrt_pd: matrix is not positive definite");
        d[k] = 1.0 / std::sqrt(d[k]);
    }
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

double min_eigenvalue(const MatrixXcd& A) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(hermitize(A));
    return es.eigenvalues().minCoeff();
}

double max_abs(const MatrixXcd& A) {
    return A.cwiseAbs().maxCoeff();
}

double log_sinh(double x) {
    // sinh(x) = e^x (1 - e^{-2x}) / 2 for x > 0
    if (x <= 0.0) throw std::domain_error("log_sinh: x must be positive");
    if (x < 20.0) return std::log(std::sinh(x));
    return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
}

} // namespace ccrflow
