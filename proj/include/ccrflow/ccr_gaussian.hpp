#pragma once

// Gaussian sector of the finite-dimensional twisted convolution algebra
// L^1(V, sigma): closed-form powers of free density operators, the trace
// tau(f) = f(0), the single-mode Gaussian product, and a brute-force
// quadrature oracle for the twisted convolution integral.

#include <complex>
#include <vector>

#include "ccrflow/scaling_flow.hpp"

namespace ccrflow {

enum class Measure { Liouville, Euclidean, ExplicitDensity };

struct GaussianElement {
    MatrixXd Q;       // real symmetric positive definite; element x -> w e^{-Q(x,x)/2}
    double w = 1.0;   // positive weight
    Measure measure = Measure::Liouville;
    double density = 0.0; // m, used for ExplicitDensity
};

struct TwistedAlgebraContext {
    MatrixXd sigma;  // real antisymmetric
    double density = 0.5; // measure density m per 2-dim block (mu for Liouville, 1/2 Euclidean)
};

struct ModeInfo {
    double mu = 0.0;
    double theta = 0.0; // atanh(2 mu); +inf for mu = 1/2
};

struct DensityPower {
    GaussianElement element;
    std::vector<ModeInfo> modes;
    int degenerate_dim = 0;
};

// rho_S^r = w(r) rho_{S^(r)}, with w(r) computed per mode through the
// normal form.  Liouville requires sigma nondegenerate; both require
// S + conj(S) nondegenerate.  ExplicitDensity uses a global per-block m.
DensityPower density_power(const CovarianceForm& S, double r, Measure measure,
                           double explicit_m = 0.0);

// Independent determinant route for the same weight w(r) = tau(rho_S^r),
// evaluated on the spectrum of the ratio operator.
double trace_weight_determinant(const CovarianceForm& S, double r, Measure measure);

// tau(f) = f(0) = w.
double trace(const GaussianElement& f);

// Single-mode isotropic closed form: variance parameters combine by
// a*b = (a+b)/(1+ab), weights by 4 pi m a b / (mu (a+b)).
GaussianElement twisted_convolve_gaussian(const GaussianElement& f, const GaussianElement& g,
                                          const TwistedAlgebraContext& ctx);

struct QuadratureResult {
    std::vector<Eigen::Vector2d> points;
    std::vector<std::complex<double>> values;
    double error_estimate = 0.0; // Richardson estimate between grid resolutions
};

// (fg)(x) = \int f(y) g(x-y) e^{i sigma(x,y)/2} 2m dy on a 2-dim grid of
// `nodes` x `nodes` points.  Throws GridTooCoarse when the Richardson
// estimate exceeds requested_tol (when positive).
QuadratureResult twisted_convolve_numeric(const GaussianElement& f, const GaussianElement& g,
                                          const TwistedAlgebraContext& ctx,
                                          const std::vector<Eigen::Vector2d>& sample_points,
                                          int nodes, double requested_tol = 0.0);

// Seed functions of the two determinant trace formulas, evaluated on an
// eigenvalue s of the ratio operator (t = 1 - s).
double liouville_seed(double s, double r);  // |2s-1|^r / |s^r - t^r|
double euclidean_seed(double s, double r);  // |2s-1| / |s^r - t^r|, value 2^{r-1}/r at s = 1/2

// Convolves density_power(S,r) with density_power(S,r') mode by mode via
// the closed form and compares with density_power(S, r+r'); returns the
// max relative deviation over weights and variance parameters.
double power_semigroup_check(const CovarianceForm& S, double r, double rp,
                             Measure measure = Measure::Liouville);

} // namespace ccrflow
