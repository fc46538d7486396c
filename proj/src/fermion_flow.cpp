#include "ccrflow/fermion_flow.hpp"

#include <cmath>
#include <complex>

namespace ccrflow {

namespace {

constexpr double kTol = 1e-9;
constexpr double kSpecTol = 1e-8;

// Joint diagonalization of the commuting Hermitian pair (C, conj C) through
// the normal matrix C + i conj(C).
struct JointSpectrum {
    MatrixXcd U;               // unitary
    std::vector<double> c, d;  // joint eigenvalues, clamped to [0,1]
};

JointSpectrum joint_diagonalize(const MatrixXcd& C) {
    const MatrixXcd D = C.conjugate();
    MatrixXcd N = C + std::complex<double>(0.0, 1.0) * D;
    Eigen::ComplexSchur<MatrixXcd> schur(N);
    JointSpectrum js;
    js.U = schur.matrixU();
    const int n = static_cast<int>(C.rows());
    for (int k = 0; k < n; ++k) {
        const std::complex<double> lam = schur.matrixT()(k, k);
        js.c.push_back(std::min(std::max(lam.real(), 0.0), 1.0));
        js.d.push_back(std::min(std::max(lam.imag(), 0.0), 1.0));
    }
    return js;
}

} // namespace

FermionCovariance FermionCovariance::make(const MatrixXcd& C) {
    if (C.rows() != C.cols() || C.rows() < 1)
        throw DimensionMismatch("FermionCovariance: matrix must be square");
    const double scale = std::max(C.norm(), 1.0);
    if ((C - C.adjoint()).norm() > kTol * scale)
        throw NotHermitian("FermionCovariance: matrix is not Hermitian");
    MatrixXcd H = hermitize(C);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H);
    if (es.eigenvalues().minCoeff() < -kTol || es.eigenvalues().maxCoeff() > 1.0 + kTol)
        throw NotPositive("FermionCovariance: spectrum must lie in [0,1]");
    const MatrixXcd Cb = H.conjugate();
    if ((H * Cb - Cb * H).norm() > kTol * scale)
        throw ValidationError("FermionCovariance: C does not commute with conj(C)");
    return FermionCovariance(std::move(H));
}

FermionCovariance fermion_flow(const FermionCovariance& C, double r) {
    if (r <= 0.0) throw NonPositiveR("fermion_flow: r must be > 0");
    JointSpectrum js = joint_diagonalize(C.matrix());
    const int n = C.dim();
    Eigen::VectorXcd vals(n);
    for (int k = 0; k < n; ++k) {
        const double c = js.c[k], d = js.d[k];
        if (std::max(c, d) < 1e-14)
            throw SingularDenominator("fermion_flow: joint spectrum touches (0,0)");
        double v;
        if (c >= d) {
            const double q = (d == 0.0) ? 0.0 : std::exp(r * std::log(d / c));
            v = 1.0 / (1.0 + q);
        } else {
            const double q = (c == 0.0) ? 0.0 : std::exp(r * std::log(c / d));
            v = q / (1.0 + q);
        }
        vals[k] = v;
    }
    MatrixXcd out = js.U * vals.asDiagonal() * js.U.adjoint();
    return FermionCovariance::make(hermitize(out));
}

FermionLimits fermion_limits(const FermionCovariance& C) {
    // The case tables are spectral maps in the eigenvalue c alone (the
    // standard fermionic pairing conj(C) = 1 - C is baked into them), so
    // they are applied to spectrum(C) as-is.
    HermEig e = eig_hermitian(C.matrix());
    FermionLimits out;
    VectorXd high(e.values.size()), low(e.values.size());
    for (int k = 0; k < e.values.size(); ++k) {
        const double c = e.values[k];
        if (std::abs(c - 0.5) < 1e-3) out.near_threshold.push_back(c);
        if (c <= kSpecTol) high[k] = 0.0;
        else if (c >= 1.0 - kSpecTol) high[k] = 1.0;
        else high[k] = 0.5;
        if (std::abs(c - 0.5) <= kSpecTol) low[k] = 0.5;
        else low[k] = (c < 0.5) ? 0.0 : 1.0;
    }
    out.high_temp = e.vectors * high.asDiagonal() * e.vectors.adjoint();
    out.low_temp = e.vectors * low.asDiagonal() * e.vectors.adjoint();
    return out;
}

} // namespace ccrflow
