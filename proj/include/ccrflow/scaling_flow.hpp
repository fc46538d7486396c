#pragma once

// The scaling flow S -> S^(r) on covariance forms, its semigroup law, the
// zero-temperature limit, trajectories, and the one-particle dynamics
// attached to a non-boundary form (generator h = log((1-M)/M), the unitary
// group e^{ith}, and the rescaling identity for the flowed form).

#include <vector>

#include "ccrflow/pw_calculus.hpp"

namespace ccrflow {

struct FlowPoint {
    double r = 1.0;
    CovarianceForm form;
};

// S^(r) = f_r(S, conj S).  Requires r > 0.
FlowPoint flow(const CovarianceForm& S, double r);

// Entrywise max deviation between flow(flow(S,a), b) and flow(S, a*b).
double semigroup_check(const CovarianceForm& S, double a, double b);

// S^(inf): spectral cut (2M - 1)_+ pulled back to V-coordinates.
CovarianceForm freeze_limit(const CovarianceForm& S);

struct TrajectoryRow {
    double r = 0.0;
    double lambda_min = 0.0; // of the representing operator wrt (.,.)_S
    double lambda_max = 0.0;
    double dist_to_limit = 0.0;        // ||S^(r) - S^(inf)||_F
    double extremality_residual = 0.0; // ||M_r (1 - M_r)||_2
    bool loewner_decreasing = true;    // vs previous grid point
};

struct Trajectory {
    std::vector<FlowPoint> points;
    std::vector<TrajectoryRow> rows;
};

// r_grid must be ascending and positive.
Trajectory flow_trajectory(const CovarianceForm& S, const std::vector<double>& r_grid);

struct Generator {
    MatrixXcd h;       // Hermitian on the quotient, conj(h) = -h
    RatioOperator ratio;
};

// h = log((1 - M)/M); requires the spectrum of M to avoid {0, 1}.
Generator generator(const CovarianceForm& S);

// Max of the two deviations: ratio operator of S^(r) (in aligned quotient
// coordinates) vs M^r/(M^r + (1-M)^r), and generator of S^(r) vs r*h.
double kms_rescaling_check(const CovarianceForm& S, double r);

// U_t = exp(i t h) on the quotient space; sigma_S-preserving and real.
MatrixXcd one_particle_group(const CovarianceForm& S, double t);

// Stable s^r/(s^r + (1-s)^r) for s in [0,1].
double kms_spectral_map(double s, double r);

} // namespace ccrflow
