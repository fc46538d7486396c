#include "ccrflow/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <sstream>

#include "ccrflow/ccr_gaussian.hpp"
#include "ccrflow/fermion_flow.hpp"
#include "ccrflow/matrix_io.hpp"
#include "ccrflow/random_forms.hpp"
#include "ccrflow/scaling_flow.hpp"

namespace ccrflow {

namespace {

constexpr double kPi = 3.14159265358979323846;

CheckResult make_result(std::string name, double dev, double threshold) {
    return CheckResult{std::move(name), dev < threshold, dev, threshold};
}

// h(x) of the real-part equivalence, x = (1-s)/s.
double real_part_ratio(double x, double r) {
    if (x == 0.0) return 1.0;
    const double num = (1.0 - x) * (1.0 + std::pow(x, r));
    const double den = (1.0 + x) * (1.0 - std::pow(x, r));
    if (std::abs(den) < 1e-14) return 1.0 / r; // x -> 1 limit is 1/r... see below
    return num / den;
}

} // namespace

std::vector<CheckResult> verify_star_linalg(std::uint64_t seed) {
    std::vector<CheckResult> out;

    {
        double dev = 0.0;
        for (int k = 0; k < 20; ++k) {
            auto eng = seeded_engine(seed, 100 + k);
            const int modes = 1 + static_cast<int>(eng() % 4);
            const int deg = static_cast<int>(eng() % 3);
            CovarianceForm S = random_form(modes, deg, 0.02, 0.5, eng);
            RatioOperator ro = ratio_operator(S);
            const MatrixXcd one = MatrixXcd::Identity(ro.M.rows(), ro.M.cols());
            dev = std::max(dev, max_abs(ro.M.conjugate() - (one - ro.M)));
        }
        out.push_back(make_result("star: conj(M) = 1 - M", dev, 1e-9));
    }

    {
        double dev = 0.0;
        for (int k = 0; k < 20; ++k) {
            auto eng = seeded_engine(seed, 200 + k);
            const int modes = 1 + static_cast<int>(eng() % 5);
            const int deg = static_cast<int>(eng() % 3);
            CovarianceForm S = random_form(modes, deg, 0.05, 0.45, eng);
            SymplecticNormalForm nf = normal_form(S);
            const MatrixXd R = S.real_part();
            const MatrixXd sig = S.sigma();
            const int n = S.dim();
            dev = std::max(dev, (nf.B.transpose() * R * nf.B - MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff());
            MatrixXd canon = MatrixXd::Zero(n, n);
            const int kd = nf.degenerate_dim;
            for (size_t j = 0; j < nf.mus.size(); ++j) {
                canon(kd + 2 * j + 1, kd + 2 * j) = 2.0 * nf.mus[j];  // sigma(q_j, p_j) = +2 mu_j
                canon(kd + 2 * j, kd + 2 * j + 1) = -2.0 * nf.mus[j];
            }
            dev = std::max(dev, (nf.B.transpose() * sig * nf.B - canon).cwiseAbs().maxCoeff());
        }
        out.push_back(make_result("star: normal-form round trip", dev, 1e-10));
    }

    {
        bool ok = true;
        double dev = 0.0;
        for (int k = 0; k < 100; ++k) {
            auto eng = seeded_engine(seed, 300 + k);
            const int modes = 1 + static_cast<int>(eng() % 3);
            const bool want_extremal = (k % 2 == 0);
            CovarianceForm S = want_extremal ? random_extremal_form(modes, eng)
                                             : random_form(modes, 0, 0.02, 0.45, eng);
            RatioOperator ro = ratio_operator(S);
            const MatrixXcd resid = ro.M * (MatrixXcd::Identity(ro.M.rows(), ro.M.cols()) - ro.M);
            const bool by_residual = max_abs(resid) < 1e-7;
            if (classify(S).is_extremal != by_residual) ok = false;
            if (want_extremal) dev = std::max(dev, max_abs(resid));
        }
        out.push_back(CheckResult{"star: extremal <=> ||M(1-M)|| small", ok, dev, 1e-7});
    }

    {
        // Degenerate real part: pairing through the quotient reproduces S.
        double dev = 0.0;
        for (int k = 0; k < 10; ++k) {
            auto eng = seeded_engine(seed, 400 + k);
            const int modes = 1 + static_cast<int>(eng() % 2);
            CovarianceForm inner = random_form(modes, 1, 0.05, 0.45, eng);
            const int m = inner.dim();
            const int n = m + 2;
            MatrixXd J = MatrixXd::Zero(m, n);
            J.leftCols(m) = MatrixXd::Identity(m, m);
            const MatrixXd O = random_orthogonal(n, eng);
            const MatrixXd E = J * O;
            MatrixXcd S = E.transpose().cast<std::complex<double>>() * inner.matrix() *
                          E.cast<std::complex<double>>();
            CovarianceForm big = CovarianceForm::make(StarSpace(n), S);
            RatioOperator ro = ratio_operator(big);
            MatrixXcd rebuilt = ro.coord_map.transpose().cast<std::complex<double>>() * ro.M *
                                ro.coord_map.cast<std::complex<double>>();
            dev = std::max(dev, max_abs(rebuilt - big.matrix()));
        }
        out.push_back(make_result("star: degenerate quotient pairing", dev, 1e-9));
    }

    return out;
}

std::vector<CheckResult> verify_pw(std::uint64_t seed) {
    std::vector<CheckResult> out;
    const std::vector<std::pair<std::string, double>> lib = {
        {"f_r", 0.5}, {"f_r", 2.0}, {"g_r", 1.0}, {"geo", 0.0}, {"arith", 0.0}, {"left", 0.0}};

    {
        double dev = 0.0;
        for (int k = 0; k < 10; ++k) {
            auto eng = seeded_engine(seed, 500 + k);
            CovarianceForm S = random_form(2, 0, 0.05, 0.45, eng);
            FormFunction f = catalog("geo");
            FormFunction g = catalog("arith");
            FormFunction sum = make_form_function(
                [](double s) { return std::sqrt(std::max(s * (1.0 - s), 0.0)) + 0.5; }, "geo+arith");
            dev = std::max(dev, max_abs(pw_apply(sum, S) - pw_apply(f, S) - pw_apply(g, S)));
        }
        out.push_back(make_result("pw: linearity of the calculus", dev, 1e-10));
    }

    {
        double dev = 0.0;
        int idx = 0;
        for (const auto& [name, param] : lib) {
            FormFunction f = catalog(name, param);
            for (int k = 0; k < 20; ++k) {
                auto eng = seeded_engine(seed, 600 + 100 * idx + k);
                const int modes = 1 + static_cast<int>(eng() % 2);
                CovarianceForm S = random_form(modes, 0, 0.05, 0.45, eng);
                RepIndependenceReport rep =
                    check_representation_independence(f, S, 3, split_mix(seed + k + idx));
                dev = std::max(dev, rep.max_deviation);
            }
            ++idx;
        }
        out.push_back(make_result("pw: representation independence (6 x 20)", dev, 1e-8));
    }

    {
        // g_r(t,t) = t: on S = conj(S) with nondegenerate R, pw(g_1) = S.
        double dev = 0.0;
        for (int k = 0; k < 10; ++k) {
            auto eng = seeded_engine(seed, 700 + k);
            const int n = 2 + static_cast<int>(eng() % 5);
            MatrixXd G = random_invertible(n, eng, 3.0);
            CovarianceForm S = CovarianceForm::make(
                StarSpace(n), (G.transpose() * G).cast<std::complex<double>>());
            dev = std::max(dev, max_abs(pw_apply(catalog("g_r", 1.0), S) - S.matrix()));
        }
        out.push_back(make_result("pw: g_1 on real forms is the identity", dev, 1e-9));
    }

    {
        double dev = 0.0;
        for (int k = 0; k < 10; ++k) {
            auto eng = seeded_engine(seed, 800 + k);
            CovarianceForm S = random_form(2, 1, 0.05, 0.45, eng);
            FormFunction f = catalog("f_r", 2.0);
            FormFunction swapped = make_form_function(
                [](double s) { return flow_section(1.0 - s, 2.0); }, "f_2 swapped");
            dev = std::max(dev, max_abs(pw_apply(swapped, S) - pw_apply(f, S).conjugate()));
        }
        out.push_back(make_result("pw: conjugation equivariance", dev, 1e-10));
    }

    return out;
}

std::vector<CheckResult> verify_flow(std::uint64_t seed) {
    std::vector<CheckResult> out;
    const std::vector<double> rs = {0.1, 0.5, 1.0, 2.0, 10.0};

    {
        double dev = 0.0;
        for (int k = 0; k < 20; ++k) {
            auto eng = seeded_engine(seed, 900 + k);
            const int modes = 1 + static_cast<int>(eng() % 3);
            const int deg = static_cast<int>(eng() % 2);
            CovarianceForm S = random_form(modes, deg, 0.02, 0.45, eng);
            for (double r : rs) {
                FlowPoint fp = flow(S, r);
                dev = std::max(dev, (fp.form.sigma() - S.sigma()).cwiseAbs().maxCoeff());
            }
        }
        out.push_back(make_result("flow: imaginary part conserved", dev, 1e-9));
    }

    {
        // Eigenvalues of the representing operator of S^(r) + conj lie in the
        // range of h(x) over the spectral x-values.
        double dev = 0.0;
        for (int k = 0; k < 10; ++k) {
            auto eng = seeded_engine(seed, 1000 + k);
            CovarianceForm S = random_form(2, 0, 0.05, 0.45, eng);
            RatioOperator ro = ratio_operator(S);
            HermEig e = eig_hermitian(ro.M);
            for (double r : {0.5, 2.0, 5.0}) {
                double lo = 1e300, hi = -1e300;
                for (int j = 0; j < e.values.size(); ++j) {
                    const double s = std::min(std::max(e.values[j], 1e-12), 1.0 - 1e-12);
                    const double h = real_part_ratio((1.0 - s) / s, r);
                    lo = std::min(lo, h);
                    hi = std::max(hi, h);
                }
                FlowPoint fp = flow(S, r);
                MatrixXcd rep = hermitize(to_quotient(ro, fp.form.matrix() + fp.form.matrix().conjugate()));
                HermEig er = eig_hermitian(rep);
                dev = std::max(dev, std::max(lo - er.values.minCoeff(), er.values.maxCoeff() - hi));
            }
        }
        out.push_back(make_result("flow: real parts stay equivalent (h bounds)", dev, 1e-8));
    }

    {
        double dev = 0.0;
        for (int k = 0; k < 100; ++k) {
            auto eng = seeded_engine(seed, 1100 + k);
            std::uniform_real_distribution<double> uab(0.2, 5.0);
            const int modes = 1 + static_cast<int>(eng() % 3);
            CovarianceForm S = random_form(modes, 0, 0.02, 0.49, eng);
            dev = std::max(dev, semigroup_check(S, uab(eng), uab(eng)));
        }
        out.push_back(make_result("flow: semigroup law", dev, 1e-8));
    }

    {
        bool ok = true;
        double dev = 0.0;
        for (int k = 0; k < 20; ++k) {
            auto eng = seeded_engine(seed, 1200 + k);
            const bool extremal = (k % 2 == 0);
            CovarianceForm S = extremal ? random_extremal_form(1 + static_cast<int>(eng() % 2), eng)
                                        : random_form(1 + static_cast<int>(eng() % 2), 0, 0.05, 0.45, eng);
            double move = 0.0;
            for (double r : {0.5, 2.0, 7.0})
                move = std::max(move, max_abs(flow(S, r).form.matrix() - S.matrix()));
            if (extremal) {
                dev = std::max(dev, move);
                if (move > 1e-10) ok = false;
            } else if (move < 1e-4) {
                ok = false;
            }
        }
        out.push_back(CheckResult{"flow: fixed points are the extremal forms", ok, dev, 1e-10});
    }

    {
        bool ok = true;
        double final_dist = 0.0;
        for (int k = 0; k < 10; ++k) {
            auto eng = seeded_engine(seed, 1300 + k);
            CovarianceForm S = random_form(1 + static_cast<int>(eng() % 3), 0, 0.01, 0.49, eng);
            std::vector<double> grid;
            for (int p = 0; p <= 10; ++p) grid.push_back(std::ldexp(1.0, p));
            Trajectory traj = flow_trajectory(S, grid);
            for (size_t j = 1; j < traj.rows.size(); ++j) {
                // non-strict with slack: the distance bottoms out at exactly
                // zero once every eigenvalue has snapped to the limit
                if (traj.rows[j].dist_to_limit > traj.rows[j - 1].dist_to_limit + 1e-12) ok = false;
                if (!traj.rows[j].loewner_decreasing) ok = false;
            }
            final_dist = std::max(final_dist, traj.rows.back().dist_to_limit);
        }
        if (final_dist > 1e-6) ok = false;
        out.push_back(CheckResult{"flow: monotone freeze to S^(inf)", ok, final_dist, 1e-6});
    }

    {
        double dev = 0.0;
        for (int k = 0; k < 10; ++k) {
            auto eng = seeded_engine(seed, 1400 + k);
            CovarianceForm S1 = random_form(1, 0, 0.05, 0.45, eng);
            CovarianceForm S2 = random_form(1, 1, 0.05, 0.45, eng);
            const int n1 = S1.dim(), n2 = S2.dim();
            MatrixXcd S = MatrixXcd::Zero(n1 + n2, n1 + n2);
            S.topLeftCorner(n1, n1) = S1.matrix();
            S.bottomRightCorner(n2, n2) = S2.matrix();
            CovarianceForm sum = CovarianceForm::make(StarSpace(n1 + n2), S);
            for (double r : {0.5, 3.0}) {
                MatrixXcd expect = MatrixXcd::Zero(n1 + n2, n1 + n2);
                expect.topLeftCorner(n1, n1) = flow(S1, r).form.matrix();
                expect.bottomRightCorner(n2, n2) = flow(S2, r).form.matrix();
                dev = std::max(dev, max_abs(flow(sum, r).form.matrix() - expect));
            }
        }
        out.push_back(make_result("flow: direct sums split", dev, 1e-9));
    }

    {
        double dev = 0.0;
        for (int k = 0; k < 10; ++k) {
            auto eng = seeded_engine(seed, 1500 + k);
            CovarianceForm S = random_form(1 + static_cast<int>(eng() % 2), 0, 0.05, 0.45, eng);
            MatrixXd G = random_symplectic(S, eng);
            MatrixXcd Gc = G.cast<std::complex<double>>();
            CovarianceForm pulled =
                CovarianceForm::make(StarSpace(S.dim()), Gc.transpose() * S.matrix() * Gc);
            for (double r : {0.5, 2.0}) {
                dev = std::max(dev, max_abs(flow(pulled, r).form.matrix() -
                                            Gc.transpose() * flow(S, r).form.matrix() * Gc));
            }
        }
        out.push_back(make_result("flow: Aut(V, sigma) equivariance", dev, 1e-8));
    }

    {
        double dev = 0.0;
        for (int k = 0; k < 30; ++k) {
            auto eng = seeded_engine(seed, 1600 + k);
            CovarianceForm S = random_form(1 + static_cast<int>(eng() % 3), 0, 0.02, 0.45, eng);
            for (double r : {0.3, 2.0, 5.0}) dev = std::max(dev, kms_rescaling_check(S, r));
        }
        out.push_back(make_result("flow: KMS parameter rescaling", dev, 1e-8));
    }

    {
        // e^{ith} preserves sigma_S and is a real operator.
        double dev = 0.0;
        for (int k = 0; k < 20; ++k) {
            auto eng = seeded_engine(seed, 1700 + k);
            std::uniform_real_distribution<double> ut(-3.0, 3.0);
            CovarianceForm S = random_form(1 + static_cast<int>(eng() % 2), 0, 0.05, 0.45, eng);
            const double t = ut(eng);
            MatrixXcd U = one_particle_group(S, t);
            RatioOperator ro = ratio_operator(S);
            const MatrixXcd one = MatrixXcd::Identity(U.rows(), U.cols());
            dev = std::max(dev, max_abs(U.adjoint() * U - one));
            // sigma_q = -i (2M - 1) in quotient coordinates
            MatrixXcd sig_q = std::complex<double>(0.0, -1.0) * (2.0 * ro.M - one);
            dev = std::max(dev, max_abs(U.adjoint() * sig_q * U - sig_q));
            dev = std::max(dev, max_abs(U.conjugate() - U));
        }
        out.push_back(make_result("flow: one-particle group preserves sigma", dev, 1e-10));
    }

    return out;
}

std::vector<CheckResult> verify_gaussian(std::uint64_t seed) {
    std::vector<CheckResult> out;

    {
        bool ok = true;
        for (int k = 0; k < 20; ++k) {
            auto eng = seeded_engine(seed, 1800 + k);
            std::uniform_real_distribution<double> ur(0.1, 6.0);
            CovarianceForm S = random_form(1 + static_cast<int>(eng() % 3), 0, 0.02, 0.5, eng);
            DensityPower dp = density_power(S, ur(eng), Measure::Liouville);
            Eigen::SelfAdjointEigenSolver<MatrixXd> es(dp.element.Q);
            if (es.eigenvalues().minCoeff() <= 0.0 || dp.element.w <= 0.0) ok = false;
        }
        out.push_back(CheckResult{"gaussian: density powers stay positive", ok, 0.0, 0.0});
    }

    {
        // Closed-form twisted convolution vs 2-dim quadrature.
        const double mu = 0.3;
        TwistedAlgebraContext ctx;
        ctx.sigma = MatrixXd::Zero(2, 2);
        ctx.sigma(0, 1) = -2.0 * mu;
        ctx.sigma(1, 0) = 2.0 * mu;
        ctx.density = mu;
        const std::vector<std::pair<double, double>> designs = {
            {1.0, 1.0}, {0.6, 15.0 / 17.0}, {0.6, 0.6}, {0.05, 0.9}, {0.3, 0.75}};
        double dev = 0.0;
        for (const auto& [a, b] : designs) {
            GaussianElement f{(mu / a) * MatrixXd::Identity(2, 2), 1.0, Measure::Liouville, mu};
            GaussianElement g{(mu / b) * MatrixXd::Identity(2, 2), 1.0, Measure::Liouville, mu};
            GaussianElement closed = twisted_convolve_gaussian(f, g, ctx);
            std::vector<Eigen::Vector2d> pts;
            for (int k = 0; k < 20; ++k) {
                const double ang = 2.0 * kPi * k / 20.0;
                const double rad = 0.1 + 1.8 * k / 19.0;
                pts.emplace_back(rad * std::cos(ang), rad * std::sin(ang));
            }
            QuadratureResult q = twisted_convolve_numeric(f, g, ctx, pts, 256);
            for (size_t k = 0; k < pts.size(); ++k) {
                const double expect =
                    closed.w * std::exp(-0.5 * pts[k].dot(closed.Q * pts[k]));
                dev = std::max(dev, std::abs(q.values[k] - expect) / expect);
            }
        }
        out.push_back(make_result("gaussian: quadrature oracle vs closed form", dev, 1e-6));
    }

    {
        double dev = 0.0;
        for (int n : {2, 4, 6, 8}) {
            for (int k = 0; k < 5; ++k) {
                auto eng = seeded_engine(seed, 1900 + 10 * n + k);
                CovarianceForm S = random_form(n / 2, 0, 0.02, 0.45, eng);
                for (double r : {0.5, 2.0, 3.7}) {
                    for (Measure m : {Measure::Liouville, Measure::Euclidean}) {
                        const double w1 = density_power(S, r, m).element.w;
                        const double w2 = trace_weight_determinant(S, r, m);
                        dev = std::max(dev, std::abs(w1 - w2) / w2);
                    }
                }
            }
        }
        out.push_back(make_result("gaussian: determinant vs per-mode trace", dev, 1e-9));
    }

    {
        // Degenerate sigma directions: Euclidean per-factor value agrees
        // between the seed-function limit and the Fourier route.
        double dev = 0.0;
        for (double r : {0.5, 2.0, 3.7}) {
            const double fourier = std::pow(2.0 * kPi, (r - 1.0) / 2.0) / std::sqrt(r) *
                                   std::pow(0.5, (1.0 - r) / 2.0);
            const double via_seed = std::pow(2.0 * kPi, (r - 1.0) / 2.0) *
                                    std::sqrt(euclidean_seed(0.5 + 1e-9, r));
            dev = std::max(dev, std::abs(via_seed - fourier) / fourier);
            auto eng = seeded_engine(seed, 2000 + static_cast<int>(10 * r));
            CovarianceForm S = random_form(1, 1, 0.05, 0.45, eng);
            const double w1 = density_power(S, r, Measure::Euclidean).element.w;
            const double w2 = trace_weight_determinant(S, r, Measure::Euclidean);
            dev = std::max(dev, std::abs(w1 - w2) / w2);
        }
        out.push_back(make_result("gaussian: degenerate direction consistency", dev, 1e-9));
    }

    {
        // Variance-parameter map tanh(theta) -> tanh(r theta) matches the
        // flow section on the ratio spectrum.
        double dev = 0.0;
        for (int k = 0; k < 10; ++k) {
            auto eng = seeded_engine(seed, 2100 + k);
            std::uniform_real_distribution<double> umu(0.05, 0.45), ur(0.3, 4.0);
            const double mu = umu(eng), r = ur(eng);
            const double theta = std::atanh(2.0 * mu);
            const double s = 0.5 + mu;
            // phi_r(s) + phi_r(1-s) renormalized gives (1 + tanh(r theta))/2
            const double num = flow_section(s, r);
            const double den = num + flow_section(1.0 - s, r);
            const double expect = (1.0 + std::tanh(r * theta)) / 2.0;
            dev = std::max(dev, std::abs(num / den - expect));
        }
        out.push_back(make_result("gaussian: variance map matches flow section", dev, 1e-12));
    }

    {
        double dev = 0.0;
        for (double r : {0.5, 1.0, 2.0, 5.0}) {
            auto eng = seeded_engine(seed, 2200 + static_cast<int>(10 * r));
            CovarianceForm S = random_extremal_form(1, eng);
            const double w = density_power(S, r, Measure::Liouville).element.w;
            dev = std::max(dev, std::abs(w - std::pow(2.0 * kPi, r - 1.0)) /
                                    std::pow(2.0 * kPi, r - 1.0));
        }
        out.push_back(make_result("gaussian: extremal mode power (2 pi)^(r-1)", dev, 1e-12));
    }

    {
        double dev = 0.0;
        for (int k = 0; k < 50; ++k) {
            auto eng = seeded_engine(seed, 2300 + k);
            std::uniform_real_distribution<double> umu(0.02, 0.49), ur(0.2, 5.0);
            CovarianceForm S = random_form(1, 0, umu(eng), 0.49, eng);
            dev = std::max(dev, power_semigroup_check(S, ur(eng), ur(eng)));
        }
        out.push_back(make_result("gaussian: power semigroup", dev, 1e-10));
    }

    return out;
}

namespace {

FermionCovariance random_fermion(int n_half, std::mt19937_64& eng, double margin) {
    // conj(C) = 1 - C family: C = 1/2 + iK, K antisymmetric.
    const int n = 2 * n_half;
    std::uniform_real_distribution<double> umu(margin, 0.5 - margin);
    MatrixXd K = MatrixXd::Zero(n, n);
    for (int j = 0; j < n_half; ++j) {
        const double mu = umu(eng);
        K(2 * j, 2 * j + 1) = mu;
        K(2 * j + 1, 2 * j) = -mu;
    }
    MatrixXd O = random_orthogonal(n, eng);
    K = O * K * O.transpose();
    MatrixXcd C = 0.5 * MatrixXcd::Identity(n, n) +
                  std::complex<double>(0.0, 1.0) * K.cast<std::complex<double>>();
    return FermionCovariance::make(C);
}

} // namespace

std::vector<CheckResult> verify_fermion(std::uint64_t seed) {
    std::vector<CheckResult> out;

    {
        double dev = 0.0;
        for (int k = 0; k < 20; ++k) {
            auto eng = seeded_engine(seed, 2400 + k);
            std::uniform_real_distribution<double> ur(0.3, 3.0);
            FermionCovariance C = random_fermion(1 + static_cast<int>(eng() % 3), eng, 0.02);
            const double a = ur(eng), b = ur(eng);
            FermionCovariance lhs = fermion_flow(fermion_flow(C, a), b);
            FermionCovariance rhs = fermion_flow(C, a * b);
            dev = std::max(dev, max_abs(lhs.matrix() - rhs.matrix()));
        }
        out.push_back(make_result("fermion: flow semigroup", dev, 1e-10));
    }

    {
        double dev = 0.0;
        for (int k = 0; k < 10; ++k) {
            auto eng = seeded_engine(seed, 2500 + k);
            FermionCovariance C = random_fermion(1 + static_cast<int>(eng() % 2), eng, 0.01);
            FermionLimits lim = fermion_limits(C);
            dev = std::max(dev, max_abs(fermion_flow(C, 1024.0).matrix() - lim.low_temp));
        }
        out.push_back(make_result("fermion: trajectory reaches the r->inf table", dev, 1e-6));
    }

    {
        bool ok = true;
        auto eng = seeded_engine(seed, 2600);
        // spectrum in {0, 1/2, 1} -> fixed; otherwise moved by r = 2.
        // C = 1/2 + iK with K eigenvalues {+-i/2, 0} has spectrum {0, 1/2, 1}.
        MatrixXd O = random_orthogonal(3, eng);
        MatrixXd K = MatrixXd::Zero(3, 3);
        K(0, 1) = 0.5;
        K(1, 0) = -0.5;
        K = O * K * O.transpose();
        MatrixXcd Cf = 0.5 * MatrixXcd::Identity(3, 3) +
                       std::complex<double>(0.0, 1.0) * K.cast<std::complex<double>>();
        FermionCovariance fixed = FermionCovariance::make(Cf);
        if (max_abs(fermion_flow(fixed, 2.0).matrix() - fixed.matrix()) > 1e-10) ok = false;
        FermionCovariance moving = random_fermion(2, eng, 0.05);
        if (max_abs(fermion_flow(moving, 2.0).matrix() - moving.matrix()) < 1e-4) ok = false;
        out.push_back(CheckResult{"fermion: fixed points are {0, 1/2, 1} spectra", ok, 0.0, 0.0});
    }

    return out;
}

std::vector<CheckResult> verify_all(std::uint64_t seed) {
    std::vector<CheckResult> all;
    for (auto* suite : {&verify_star_linalg, &verify_pw, &verify_flow, &verify_gaussian, &verify_fermion}) {
        auto part = (*suite)(seed);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

bool print_report(std::ostream& os, const std::vector<CheckResult>& results) {
    bool all_pass = true;
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  max_dev=" << format_double(r.deviation)
           << "  threshold=" << format_double(r.threshold) << "\n";
        if (!r.pass) all_pass = false;
    }
    os << (all_pass ? "ALL CHECKS PASSED" : "CHECKS FAILED") << " (" << results.size() << " checks)\n";
    return all_pass;
}

} // namespace ccrflow
