#include "ccrflow/ccr_gaussian.hpp"

#include <cmath>
#include <complex>
#include <limits>

namespace ccrflow {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kExtremalMuTol = 1e-12; // 2 mu >= 1 - tol takes the theta -> inf branch

// log of the per-mode factor (4 pi m / mu)^{r-1} sinh^r(theta)/sinh(r theta),
// with the mu = 1/2 case taken analytically.
double log_mode_factor(double mu, double r, double m) {
    const double two_mu = 2.0 * mu;
    const double base = 4.0 * kPi * m / mu;
    if (two_mu >= 1.0 - kExtremalMuTol) {
        // lim_{theta->inf} sinh^r/sinh(r theta) = 2^{1-r}
        return (r - 1.0) * std::log(base) + (1.0 - r) * std::log(2.0);
    }
    const double theta = std::atanh(two_mu);
    return (r - 1.0) * std::log(base) + r * log_sinh(theta) - log_sinh(r * theta);
}

double mode_density(Measure measure, double mu, double explicit_m) {
    switch (measure) {
        case Measure::Liouville: return mu;
        case Measure::Euclidean: return 0.5;
        case Measure::ExplicitDensity: return explicit_m;
    }
    return 0.0;
}

} // namespace

double liouville_seed(double s, double r) {
    s = std::min(std::max(s, 0.0), 1.0);
    const double t = 1.0 - s;
    const double u = std::abs(2.0 * s - 1.0);
    if (u < 1e-7)
        throw MeasureMismatch("liouville seed: sigma degenerate on part of the spectrum");
    const double mx = std::max(s, t), mn = std::min(s, t);
    const double log_diff = r * std::log(mx) + std::log(-std::expm1(r * std::log(mn / mx)));
    return std::exp(r * std::log(u) - log_diff);
}

double euclidean_seed(double s, double r) {
    s = std::min(std::max(s, 0.0), 1.0);
    const double t = 1.0 - s;
    const double u = std::abs(2.0 * s - 1.0);
    if (u < 1e-7) return std::exp((r - 1.0) * std::log(2.0)) / r;
    const double mx = std::max(s, t), mn = std::min(s, t);
    const double log_diff = r * std::log(mx) + std::log(-std::expm1(r * std::log(mn / mx)));
    return std::exp(std::log(u) - log_diff);
}

DensityPower density_power(const CovarianceForm& S, double r, Measure measure, double explicit_m) {
    if (r <= 0.0) throw NonPositiveR("density_power: r must be > 0");
    if (measure == Measure::ExplicitDensity && explicit_m <= 0.0)
        throw MeasureMismatch("density_power: explicit measure density must be > 0");

    SymplecticNormalForm nf = normal_form(S); // throws DegenerateRealPart
    if (nf.degenerate_dim > 0 && measure != Measure::Euclidean)
        throw MeasureMismatch("density_power: degenerate sigma requires the Euclidean measure");

    double logw = 0.0;
    std::vector<ModeInfo> modes;
    for (double mu : nf.mus) {
        const double m = mode_density(measure, mu, explicit_m);
        logw += log_mode_factor(mu, r, m);
        ModeInfo mi;
        mi.mu = mu;
        mi.theta = (2.0 * mu >= 1.0 - kExtremalMuTol)
                       ? std::numeric_limits<double>::infinity()
                       : std::atanh(2.0 * mu);
        modes.push_back(mi);
    }
    // Each sigma = 0 direction is a one-dimensional Gaussian factor; with
    // the Euclidean normalization its unit vector has S(h,h) = 1/2.
    logw += nf.degenerate_dim *
            (0.5 * (r - 1.0) * std::log(2.0 * kPi) + 0.5 * ((r - 1.0) * std::log(2.0) - std::log(r)));

    FlowPoint fp = flow(S, r);
    DensityPower dp;
    dp.element.Q = fp.form.real_part() / 2.0; // S^(r)(x,x) = x^T (R_r/2) x for real x
    dp.element.w = std::exp(logw);
    dp.element.measure = measure;
    dp.element.density = explicit_m;
    dp.modes = std::move(modes);
    dp.degenerate_dim = nf.degenerate_dim;
    return dp;
}

double trace_weight_determinant(const CovarianceForm& S, double r, Measure measure) {
    if (r <= 0.0) throw NonPositiveR("trace_weight_determinant: r must be > 0");
    if (measure == Measure::ExplicitDensity)
        throw MeasureMismatch("trace_weight_determinant: determinant route needs Liouville or Euclidean");
    const MatrixXd R = S.real_part();
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(R);
    if (es.eigenvalues().minCoeff() <= 1e-12 * std::max(R.norm(), 1e-300))
        throw DegenerateRealPart("trace_weight_determinant: S + conj(S) is degenerate");

    const VectorXd spec = ratio_spectrum(S);
    const int n = S.dim();
    double log_seed_sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double seed = (measure == Measure::Liouville) ? liouville_seed(spec[k], r)
                                                            : euclidean_seed(spec[k], r);
        log_seed_sum += std::log(seed);
    }
    return std::exp((r - 1.0) * (n / 2.0) * std::log(2.0 * kPi) + 0.5 * log_seed_sum);
}

double trace(const GaussianElement& f) {
    return f.w;
}

GaussianElement twisted_convolve_gaussian(const GaussianElement& f, const GaussianElement& g,
                                          const TwistedAlgebraContext& ctx) {
    if (ctx.sigma.rows() != 2 || ctx.sigma.cols() != 2 || f.Q.rows() != 2 || g.Q.rows() != 2)
        throw BlockMismatch("twisted_convolve_gaussian: expects a single 2-dim mode");
    if ((ctx.sigma + ctx.sigma.transpose()).norm() > 1e-12 * std::max(ctx.sigma.norm(), 1e-300))
        throw BlockMismatch("twisted_convolve_gaussian: sigma is not antisymmetric");
    const double mu = std::abs(ctx.sigma(1, 0)) / 2.0;
    if (mu <= 0.0) throw BlockMismatch("twisted_convolve_gaussian: degenerate sigma block");

    auto isotropic_param = [mu](const MatrixXd& Q) {
        const double d = Q(0, 0);
        if (d <= 0.0 || std::abs(Q(0, 0) - Q(1, 1)) > 1e-9 * d || std::abs(Q(0, 1)) > 1e-9 * d ||
            std::abs(Q(1, 0)) > 1e-9 * d)
            throw BlockMismatch("twisted_convolve_gaussian: Q is not isotropic (mu/a) I");
        return mu / d;
    };
    const double a = isotropic_param(f.Q);
    const double b = isotropic_param(g.Q);
    const double ab = (a + b) / (1.0 + a * b);

    GaussianElement out;
    out.Q = (mu / ab) * MatrixXd::Identity(2, 2);
    out.w = f.w * g.w * 4.0 * kPi * ctx.density * a * b / (mu * (a + b));
    out.measure = f.measure;
    out.density = ctx.density;
    return out;
}

QuadratureResult twisted_convolve_numeric(const GaussianElement& f, const GaussianElement& g,
                                          const TwistedAlgebraContext& ctx,
                                          const std::vector<Eigen::Vector2d>& sample_points,
                                          int nodes, double requested_tol) {
    if (f.Q.rows() != 2 || g.Q.rows() != 2 || ctx.sigma.rows() != 2)
        throw BlockMismatch("twisted_convolve_numeric: only n = 2 is supported");
    if (nodes < 16) throw GridTooCoarse("twisted_convolve_numeric: need at least 16 nodes per dim");

    const double spread_f = std::sqrt(1.0 / Eigen::SelfAdjointEigenSolver<MatrixXd>(f.Q).eigenvalues().minCoeff());
    const double spread_g = std::sqrt(1.0 / Eigen::SelfAdjointEigenSolver<MatrixXd>(g.Q).eigenvalues().minCoeff());
    double max_x = 0.0;
    for (const auto& x : sample_points) max_x = std::max(max_x, x.norm());
    const double L = 8.0 * (spread_f + spread_g) + max_x;

    auto integrate = [&](const Eigen::Vector2d& x, int N) {
        const double h = 2.0 * L / N;
        const Eigen::Vector2d c = 0.5 * ctx.sigma.transpose() * x; // phase = exp(i c.y)
        std::complex<double> acc(0.0, 0.0);
        for (int i = 0; i < N; ++i) {
            const double y1 = -L + (i + 0.5) * h;
            for (int j = 0; j < N; ++j) {
                const double y2 = -L + (j + 0.5) * h;
                Eigen::Vector2d y(y1, y2);
                Eigen::Vector2d z = x - y;
                const double ef = y.dot(f.Q * y);
                const double eg = z.dot(g.Q * z);
                const double phase = c.dot(y);
                acc += std::exp(-0.5 * (ef + eg)) * std::complex<double>(std::cos(phase), std::sin(phase));
            }
        }
        return f.w * g.w * 2.0 * ctx.density * h * h * acc;
    };

    QuadratureResult res;
    res.points = sample_points;
    double max_val = 0.0;
    std::vector<std::complex<double>> coarse;
    for (const auto& x : sample_points) {
        std::complex<double> fine = integrate(x, nodes);
        coarse.push_back(integrate(x, nodes / 2));
        res.values.push_back(fine);
        max_val = std::max(max_val, std::abs(fine));
    }
    double err = 0.0;
    for (size_t k = 0; k < res.values.size(); ++k)
        err = std::max(err, std::abs(res.values[k] - coarse[k]));
    res.error_estimate = err / std::max(max_val, 1e-300);
    if (requested_tol > 0.0 && res.error_estimate > requested_tol)
        throw GridTooCoarse("twisted_convolve_numeric: Richardson estimate above requested tolerance");
    return res;
}

double power_semigroup_check(const CovarianceForm& S, double r, double rp, Measure measure) {
    if (r <= 0.0 || rp <= 0.0) throw NonPositiveR("power_semigroup_check: powers must be > 0");
    if (measure == Measure::ExplicitDensity)
        throw MeasureMismatch("power_semigroup_check: needs Liouville or Euclidean");
    SymplecticNormalForm nf = normal_form(S);
    double dev = 0.0;
    for (double mu : nf.mus) {
        const double m = mode_density(measure, mu, 0.0);
        const bool extremal = 2.0 * mu >= 1.0 - kExtremalMuTol;
        const double theta = extremal ? 0.0 : std::atanh(2.0 * mu);
        const double a = extremal ? 1.0 : std::tanh(r * theta);
        const double b = extremal ? 1.0 : std::tanh(rp * theta);
        const double ab = (a + b) / (1.0 + a * b);
        const double ab_expected = extremal ? 1.0 : std::tanh((r + rp) * theta);
        dev = std::max(dev, std::abs(ab - ab_expected) / ab_expected);

        const double lw = log_mode_factor(mu, r, m) + log_mode_factor(mu, rp, m) +
                          std::log(4.0 * kPi * m * a * b / (mu * (a + b)));
        const double lw_expected = log_mode_factor(mu, r + rp, m);
        dev = std::max(dev, std::abs(std::expm1(lw - lw_expected)));
    }
    return dev;
}

} // namespace ccrflow
