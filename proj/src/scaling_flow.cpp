#include "ccrflow/scaling_flow.hpp"

#include <cmath>
#include <complex>

namespace ccrflow {

namespace {

MatrixXcd spectral_norm_residual(const MatrixXcd& M) {
    return M * (MatrixXcd::Identity(M.rows(), M.cols()) - M);
}

double operator_norm(const MatrixXcd& A) {
    Eigen::JacobiSVD<MatrixXcd> svd(A);
    return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
}

} // namespace

double kms_spectral_map(double s, double r) {
    s = std::min(std::max(s, 0.0), 1.0);
    const double t = 1.0 - s;
    if (s == 0.0) return 0.0;
    if (t == 0.0) return 1.0;
    if (s >= t) {
        const double q = std::exp(r * std::log(t / s));
        return 1.0 / (1.0 + q);
    }
    const double q = std::exp(r * std::log(s / t));
    return q / (1.0 + q);
}

FlowPoint flow(const CovarianceForm& S, double r) {
    if (r <= 0.0) throw NonPositiveR("flow: r must be > 0");
    FormFunction fr{[r](double s) { return flow_section(s, r); }, "f_r", nullptr};
    MatrixXcd Sr = pw_apply(fr, S);
    return FlowPoint{r, CovarianceForm::make(StarSpace(S.dim()), Sr)};
}

double semigroup_check(const CovarianceForm& S, double a, double b) {
    if (a <= 0.0 || b <= 0.0) throw NonPositiveR("semigroup_check: a, b must be > 0");
    FlowPoint inner = flow(S, a);
    FlowPoint two_step = flow(inner.form, b);
    FlowPoint direct = flow(S, a * b);
    return max_abs(two_step.form.matrix() - direct.form.matrix());
}

CovarianceForm freeze_limit(const CovarianceForm& S) {
    FormFunction cut{[](double s) { return std::max(2.0 * s - 1.0, 0.0); }, "freeze", nullptr};
    return CovarianceForm::make(StarSpace(S.dim()), pw_apply(cut, S));
}

Trajectory flow_trajectory(const CovarianceForm& S, const std::vector<double>& r_grid) {
    if (r_grid.empty()) throw ValidationError("flow_trajectory: empty r grid");
    for (size_t k = 0; k < r_grid.size(); ++k) {
        if (r_grid[k] <= 0.0) throw NonPositiveR("flow_trajectory: grid values must be > 0");
        if (k > 0 && r_grid[k] <= r_grid[k - 1])
            throw ValidationError("flow_trajectory: grid must be strictly ascending");
    }

    const CovarianceForm limit = freeze_limit(S);
    const RatioOperator ro = ratio_operator(S);

    Trajectory traj;
    for (size_t k = 0; k < r_grid.size(); ++k) {
        FlowPoint fp = flow(S, r_grid[k]);
        TrajectoryRow row;
        row.r = r_grid[k];
        // representing operator of S^(r) with respect to the S inner product
        MatrixXcd rep = hermitize(to_quotient(ro, fp.form.matrix()));
        HermEig e = eig_hermitian(rep);
        row.lambda_min = e.values.minCoeff();
        row.lambda_max = e.values.maxCoeff();
        row.dist_to_limit = (fp.form.matrix() - limit.matrix()).norm();
        row.extremality_residual = operator_norm(spectral_norm_residual(ratio_operator(fp.form).M));
        if (k > 0) {
            const MatrixXcd diff = traj.points.back().form.matrix() - fp.form.matrix();
            row.loewner_decreasing = min_eigenvalue(diff) > -1e-9;
        }
        traj.points.push_back(std::move(fp));
        traj.rows.push_back(row);
    }
    return traj;
}

Generator generator(const CovarianceForm& S) {
    RatioOperator ro = ratio_operator(S);
    HermEig e = eig_hermitian(ro.M);
    for (int k = 0; k < e.values.size(); ++k) {
        const double s = e.values[k];
        if (s <= kSpectralTol || s >= 1.0 - kSpectralTol)
            throw BoundarySpectrum("generator: ratio operator has spectrum at the boundary");
    }
    VectorXd d(e.values.size());
    for (int k = 0; k < d.size(); ++k) d[k] = std::log((1.0 - e.values[k]) / e.values[k]);
    Generator g;
    g.h = hermitize(e.vectors * d.asDiagonal() * e.vectors.adjoint());
    g.ratio = std::move(ro);
    return g;
}

double kms_rescaling_check(const CovarianceForm& S, double r) {
    if (r <= 0.0) throw NonPositiveR("kms_rescaling_check: r must be > 0");
    Classification cls = classify(S);
    if (!cls.is_non_boundary)
        throw BoundarySpectrum("kms_rescaling_check: S must be non-boundary");
    if (!cls.is_center_free)
        throw CenterNotFree("kms_rescaling_check: S must be center-free");

    Generator g = generator(S);
    const RatioOperator& ro = g.ratio;

    // Ratio operator of S^(r) computed in the quotient coordinates of S.
    FlowPoint fp = flow(S, r);
    MatrixXcd Tq = hermitize(to_quotient(ro, fp.form.matrix()));
    MatrixXcd Rq = Tq + Tq.conjugate();
    MatrixXcd W = apply_spectral(Rq, [](double x) {
        if (x <= 0.0) throw DegenerateRealPart("kms_rescaling_check: degenerate flowed real part");
        return 1.0 / std::sqrt(x);
    });
    MatrixXcd Mr = hermitize(W * Tq * W);

    MatrixXcd predicted = apply_spectral(ro.M, [r](double s) { return kms_spectral_map(s, r); });
    const double dev_ratio = max_abs(Mr - predicted);

    MatrixXcd hr = apply_spectral(Mr, [](double s) {
        const double c = std::min(std::max(s, 1e-300), 1.0 - 1e-16);
        return std::log((1.0 - c) / c);
    });
    const double dev_gen = max_abs(hr - r * g.h);
    return std::max(dev_ratio, dev_gen);
}

MatrixXcd one_particle_group(const CovarianceForm& S, double t) {
    Generator g = generator(S);
    HermEig e = eig_hermitian(g.h);
    Eigen::VectorXcd phase(e.values.size());
    for (int k = 0; k < e.values.size(); ++k)
        phase[k] = std::exp(std::complex<double>(0.0, t * e.values[k]));
    return e.vectors * phase.asDiagonal() * e.vectors.adjoint();
}

} // namespace ccrflow
