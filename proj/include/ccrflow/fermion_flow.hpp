#pragma once

// Fermionic analog of the scaling flow: C -> C^r / (C^r + conj(C)^r) on
// covariance operators with commuting (C, conj C), plus the high- and
// low-temperature limit tables for the standard case conj(C) = 1 - C.

#include <vector>

#include "ccrflow/errors.hpp"
#include "ccrflow/linalg.hpp"

namespace ccrflow {

class FermionCovariance {
public:
    // Validates 0 <= C <= 1 and [C, conj C] = 0.
    static FermionCovariance make(const MatrixXcd& C);

    int dim() const { return static_cast<int>(C_.rows()); }
    const MatrixXcd& matrix() const { return C_; }

private:
    explicit FermionCovariance(MatrixXcd C) : C_(std::move(C)) {}
    MatrixXcd C_;
};

// Joint spectral calculus on (C, conj C); requires the joint spectrum to
// avoid (0,0).
FermionCovariance fermion_flow(const FermionCovariance& C, double r);

struct FermionLimits {
    MatrixXcd high_temp; // r -> 0 table
    MatrixXcd low_temp;  // r -> inf table
    std::vector<double> near_threshold; // eigenvalues within 1e-3 of 1/2
};

// Limit tables; requires conj(C) = 1 - C.
FermionLimits fermion_limits(const FermionCovariance& C);

} // namespace ccrflow
