#pragma once

// Two-variable functional calculus f(S, conj S) for commuting pairs coming
// from a covariance form, plus numerical probes for operator monotonicity
// and form concavity of the f_r / g_r families.
//
// A form function is degree-1 homogeneous on the closed first quadrant and
// is represented by its section phi(s) = f(s, 1-s) on [0,1].

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "ccrflow/star_linalg.hpp"

namespace ccrflow {

struct FormFunction {
    std::function<double(double)> section; // phi(s) on [0,1]
    std::string label;
    std::function<double(double, double)> two_var; // optional closed form f(s,t)
};

// Checks boundedness of the section on a 1e4-point grid and, when the
// two-variable evaluator is present, homogeneity f(s,t) = (s+t) phi(s/(s+t)).
FormFunction make_form_function(std::function<double(double)> section, std::string label,
                                std::function<double(double, double)> two_var = nullptr);

// Built-in catalog: "f_r" (param r), "g_r" (param r), "geo", "arith", "left", "right".
FormFunction catalog(const std::string& name, double param = 0.0);

// Stable section and monotone-function evaluators for the paper families.
double flow_section(double s, double r);    // f_r(s, 1-s), value 1/(2r) at s = 1/2
double g_section(double s, double r);       // g_r(s, 1-s), value 1/2 at s = 1/2
double fr_monotone(double t, double r);     // f_r(1,t) = (1-t)/(1-t^r) on [0,inf)
double gr_monotone(double t, double r);     // g_r(1,t) on [0,inf)

// Matrix of f(S, conj S) on V^C; zero on ker(S + conj S).
MatrixXcd pw_apply(const FormFunction& f, const CovarianceForm& S);

struct RepIndependenceReport {
    int trials = 0;
    double max_deviation = 0.0;
    bool pass = false; // max_deviation < 1e-8
};

// Pulls (S, conj S) back through random invertible real maps and compares
// the calculus in the transformed coordinates with pw_apply(f, S).
RepIndependenceReport check_representation_independence(const FormFunction& f,
                                                        const CovarianceForm& S,
                                                        int trials, std::uint64_t seed);

struct MonotoneProbeResult {
    bool counterexample_found = false;
    MatrixXcd A, B;          // the violating pair A <= B, set when found
    double violation = 0.0;  // most negative eigenvalue of phi(B) - phi(A)
    long trial_index = -1;
};

// Samples Hermitian PSD pairs A <= B and tests phi(A) <= phi(B) spectrally.
// Absence of a counterexample is probabilistic evidence only.
MonotoneProbeResult probe_operator_monotone(const std::function<double(double)>& phi,
                                            int dim, long trials, std::uint64_t seed);

struct ConcavityProbeResult {
    bool counterexample_found = false;
    double violation = 0.0;
    long trial_index = -1;
};

// Tests (1-t) f(S0,conj S0) + t f(S1,conj S1) <= f applied to the convex
// combination, on random covariance-form pairs.
ConcavityProbeResult form_concavity_probe(const FormFunction& f, long trials, std::uint64_t seed);

} // namespace ccrflow
