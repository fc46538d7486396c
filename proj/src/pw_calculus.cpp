#include "ccrflow/pw_calculus.hpp"

#include <cmath>
#include <complex>

#include "ccrflow/random_forms.hpp"

namespace ccrflow {

namespace {
constexpr double kOverflowGuard = 1e12;
constexpr double kOrderTol = 1e-9;
} // namespace

double flow_section(double s, double r) {
    s = std::min(std::max(s, 0.0), 1.0);
    const double t = 1.0 - s;
    const double u = 2.0 * s - 1.0;
    if (std::abs(u) < 1e-6) {
        // phi_r(1/2 + u/2) = (1 + r u + a2 u^2) / (2r) + O(u^3)
        const double a2 = r * (r - 1.0) / 2.0 - (r - 1.0) * (r - 2.0) / 6.0;
        return (1.0 + r * u + a2 * u * u) / (2.0 * r);
    }
    if (s == 0.0) return 0.0;
    if (t == 0.0) return 1.0;
    if (s > t) {
        // u / (1 - (t/s)^r), computed through expm1 in log space
        return u / (-std::expm1(r * std::log(t / s)));
    }
    const double q = std::exp(r * std::log(s / t));
    return -u * q / (1.0 - q);
}

double g_section(double s, double r) {
    s = std::min(std::max(s, 0.0), 1.0);
    const double t = 1.0 - s;
    if (s <= 0.0 || t <= 0.0) return 0.0;
    const double L = std::log(s / t);
    if (std::abs(L) < 1e-7) return s * (1.0 - L / 2.0);
    if (std::abs(r - 1.0) < 1e-8) return s * L / std::expm1(L);
    if (r * L > 700.0) return s * (r / (r - 1.0)) * std::exp(-L);
    return s * (r / (r - 1.0)) * std::expm1((r - 1.0) * L) / std::expm1(r * L);
}

double fr_monotone(double t, double r) {
    if (t < 0.0) throw std::domain_error("fr_monotone: t must be >= 0");
    if (t == 0.0) return 1.0;
    const double u = t - 1.0;
    if (std::abs(u) < 1e-7) return (1.0 - (r - 1.0) * u / 2.0) / r;
    return (1.0 - t) / (-std::expm1(r * std::log(t)));
}

double gr_monotone(double t, double r) {
    if (t < 0.0) throw std::domain_error("gr_monotone: t must be >= 0");
    if (t == 0.0) return 0.0;
    const double L = std::log(t);
    if (std::abs(L) < 1e-7) return t * (1.0 - L / 2.0);
    if (std::abs(r - 1.0) < 1e-8) return t * L / std::expm1(L);
    if (r * L > 700.0) return t * (r / (r - 1.0)) * std::exp(-L);
    return t * (r / (r - 1.0)) * std::expm1((r - 1.0) * L) / std::expm1(r * L);
}

FormFunction make_form_function(std::function<double(double)> section, std::string label,
                                std::function<double(double, double)> two_var) {
    constexpr int kGrid = 10000;
    for (int k = 0; k <= kGrid; ++k) {
        const double s = static_cast<double>(k) / kGrid;
        const double v = section(s);
        if (!std::isfinite(v) || std::abs(v) > kOverflowGuard)
            throw UnboundedSection("form function '" + label + "' unbounded at s = " + std::to_string(s));
    }
    if (two_var) {
        for (int k = 0; k <= 200; ++k) {
            const double s = static_cast<double>(k) / 200;
            for (double scale : {0.25, 1.0, 3.0}) {
                const double lhs = two_var(scale * s, scale * (1.0 - s));
                const double rhs = scale * section(s);
                const double ref = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
                if (std::abs(lhs - rhs) > 1e-12 * std::max(ref, 1.0))
                    throw ValidationError("form function '" + label +
                                          "': two-variable evaluator is not degree-1 homogeneous");
            }
        }
    }
    return FormFunction{std::move(section), std::move(label), std::move(two_var)};
}

FormFunction catalog(const std::string& name, double param) {
    if (name == "f_r") {
        if (param <= 0.0) throw NonPositiveR("catalog: f_r needs r > 0");
        const double r = param;
        return make_form_function([r](double s) { return flow_section(s, r); }, "f_" + std::to_string(r));
    }
    if (name == "g_r") {
        if (param <= 0.0) throw NonPositiveR("catalog: g_r needs r > 0");
        const double r = param;
        return make_form_function([r](double s) { return g_section(s, r); }, "g_" + std::to_string(r));
    }
    if (name == "geo")
        return make_form_function([](double s) { return std::sqrt(std::max(s * (1.0 - s), 0.0)); }, "geo",
                                  [](double s, double t) { return std::sqrt(s * t); });
    if (name == "arith")
        return make_form_function([](double) { return 0.5; }, "arith",
                                  [](double s, double t) { return 0.5 * (s + t); });
    if (name == "left")
        return make_form_function([](double s) { return s; }, "left",
                                  [](double s, double) { return s; });
    if (name == "right")
        return make_form_function([](double s) { return 1.0 - s; }, "right",
                                  [](double, double t) { return t; });
    throw ValidationError("catalog: unknown form function '" + name + "'");
}

MatrixXcd pw_apply(const FormFunction& f, const CovarianceForm& S) {
    RatioOperator ro = ratio_operator(S);
    // Spectral values of M clipped to [0,1] before applying the section.
    // Values within 1e-12 of the endpoints snap exactly: sections with
    // exponents r < 1 would otherwise amplify O(eps) rounding at the
    // boundary to O(eps^r) in the result.
    MatrixXcd core = apply_spectral(ro.M, [&](double s) {
        s = std::min(std::max(s, 0.0), 1.0);
        if (s < 1e-12) s = 0.0;
        else if (s > 1.0 - 1e-12) s = 1.0;
        return f.section(s);
    });
    MatrixXcd out = ro.coord_map.transpose() * core * ro.coord_map;
    return hermitize(out);
}

RepIndependenceReport check_representation_independence(const FormFunction& f,
                                                        const CovarianceForm& S,
                                                        int trials, std::uint64_t seed) {
    if (trials < 1) throw ValidationError("check_representation_independence: trials must be >= 1");
    const MatrixXcd ref = pw_apply(f, S);
    const int n = S.dim();
    RepIndependenceReport rep;
    rep.trials = trials;
    for (int k = 0; k < trials; ++k) {
        auto eng = seeded_engine(seed, 0x7e9u + static_cast<std::uint64_t>(k));
        MatrixXd G = random_invertible(n, eng, 3.0);
        MatrixXcd Gc = G.cast<std::complex<double>>();
        CovarianceForm pulled = CovarianceForm::make(StarSpace(n), Gc.transpose() * S.matrix() * Gc);
        MatrixXcd back = pw_apply(f, pulled);
        // map back: compare G^T pw_apply(f,S) G with pw_apply(f, S.G)
        const double dev = max_abs(back - Gc.transpose() * ref * Gc);
        rep.max_deviation = std::max(rep.max_deviation, dev);
    }
    rep.pass = rep.max_deviation < 1e-8;
    return rep;
}

namespace {

MatrixXcd random_psd(int dim, std::mt19937_64& eng, double scale) {
    std::normal_distribution<double> nd(0.0, 1.0);
    MatrixXcd G(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) G(i, j) = std::complex<double>(nd(eng), nd(eng));
    return scale * (G * G.adjoint());
}

} // namespace

MonotoneProbeResult probe_operator_monotone(const std::function<double(double)>& phi,
                                            int dim, long trials, std::uint64_t seed) {
    if (dim < 2 || dim > 4)
        throw ValidationError("probe_operator_monotone: dim must be in {2,3,4}");
    MonotoneProbeResult res;
    std::uniform_real_distribution<double> uscale(-1.0, 1.0);
    for (long k = 0; k < trials; ++k) {
        auto e = seeded_engine(seed, static_cast<std::uint64_t>(k));
        const double sA = std::pow(10.0, uscale(e));
        const double sI = std::pow(10.0, uscale(e));
        MatrixXcd A = random_psd(dim, e, sA / dim);
        MatrixXcd B = A + random_psd(dim, e, sI / dim);
        MatrixXcd phiA = apply_spectral(A, phi);
        MatrixXcd phiB = apply_spectral(B, phi);
        const double lam = min_eigenvalue(phiB - phiA);
        if (lam < -kOrderTol) {
            res.counterexample_found = true;
            res.A = A;
            res.B = B;
            res.violation = lam;
            res.trial_index = k;
            return res;
        }
    }
    return res;
}

ConcavityProbeResult form_concavity_probe(const FormFunction& f, long trials, std::uint64_t seed) {
    ConcavityProbeResult res;
    for (long k = 0; k < trials; ++k) {
        auto eng = seeded_engine(seed, 0xc0ffeeULL + static_cast<std::uint64_t>(k));
        std::uniform_real_distribution<double> ut(0.05, 0.95);
        const int modes = 1 + static_cast<int>(eng() % 2);
        CovarianceForm S0 = random_form(modes, 0, 0.02, 0.49, eng, 3.0);
        CovarianceForm S1 = random_form(modes, 0, 0.02, 0.49, eng, 3.0);
        const double t = ut(eng);
        CovarianceForm St = CovarianceForm::make(
            StarSpace(S0.dim()), (1.0 - t) * S0.matrix() + t * S1.matrix());
        MatrixXcd lhs = (1.0 - t) * pw_apply(f, S0) + t * pw_apply(f, S1);
        MatrixXcd rhs = pw_apply(f, St);
        const double lam = min_eigenvalue(rhs - lhs);
        if (lam < -kOrderTol) {
            res.counterexample_found = true;
            res.violation = lam;
            res.trial_index = k;
            return res;
        }
    }
    return res;
}

} // namespace ccrflow
