#pragma once

// Small helpers around Eigen's Hermitian eigensolvers: spectral functional
// calculus, symmetric square roots and norms used throughout the library.

#include <Eigen/Dense>
#include <complex>
#include <functional>

namespace ccrflow {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

struct HermEig {
    VectorXd values;   // ascending
    MatrixXcd vectors; // columns, orthonormal
};

HermEig eig_hermitian(const MatrixXcd& A);

// f applied to a Hermitian matrix through its spectrum.
MatrixXcd apply_spectral(const MatrixXcd& A, const std::function<double(double)>& f);

// Square root / inverse square root of a real symmetric PSD matrix.
MatrixXd sqrt_psd(const MatrixXd& R);
MatrixXd inv_sqrt_pd(const MatrixXd& R);

// Smallest eigenvalue of the Hermitian part of A.
double min_eigenvalue(const MatrixXcd& A);

// Entrywise max-abs deviation.
double max_abs(const MatrixXcd& A);

inline MatrixXcd hermitize(const MatrixXcd& A) { return 0.5 * (A + A.adjoint()); }

// log(sinh(x)) without overflow for large x.
double log_sinh(double x);

} // namespace ccrflow
