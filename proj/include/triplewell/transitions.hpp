#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "triplewell/model.hpp"
#include "triplewell/semiclassical.hpp"

namespace triplewell {

// Energy of a stationary branch over a two-parameter plane, e.g. (U, eps)
// for the J=0 family or (U, J) for the eps=0 family.
using BranchEnergy = std::function<double(double, double)>;

// Closed-form branches used for the second-order transition tests.
BranchEnergy j0_lower_branch();    // x4: U - eps
BranchEnergy j0_upper_branch();    // x5: -eps^2/(16 U) - eps/2
BranchEnergy eps0_flat_branch();   // x3: -J
BranchEnergy eps0_pair_branch();   // x4/x5: U + J^2/(4 U)

struct DirectionalDerivatives {
    double d1a = 0.0, d1b = 0.0;  // first directional derivatives
    double d2a = 0.0, d2b = 0.0;  // second directional derivatives
    bool second_order = false;    // d1 match, d2 differ (Ehrenfest criterion)
};

// Central finite differences of both branch energies along unit direction v
// at the given parameter point.
DirectionalDerivatives directional_derivative_test(const BranchEnergy& branch_a,
                                                   const BranchEnergy& branch_b,
                                                   const std::array<double, 2>& at,
                                                   const std::array<double, 2>& v);

// Analytic critical coupling ratio: U/eps = 1/4 for "J0", U/J = -1/2 for "eps0".
double critical_point(const std::string& family);

// Continuous one-parameter family of couplings.
struct ParamPath {
    std::function<ModelParams(double)> at;
    double s_begin = 0.0;
    double s_end = 1.0;
};

// Locates the parameter where new stationary branches appear and take over
// the energy minimum (or where the minimum becomes degenerate). Returns the
// change point within 1e-6 of path parameter, or nothing when no such
// change exists along the path.
std::optional<double> detect_bifurcation(const ParamPath& path);

}  // namespace triplewell
