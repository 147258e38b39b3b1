#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "triplewell/model.hpp"

namespace triplewell {

// Phase difference of a stationary point; cosines are restricted to +-1.
// J=0 leaves the phases arbitrary, reported as unspecified.
enum class Phase { zero, pi, unspecified };

const char* phase_name(Phase p);

// Semiclassical equilibrium of the mean-field energy functional.
// occ holds the occupation fractions (N1/N, N2/N, N3/N); the relative signs
// of the underlying amplitudes are carried by the phases.
struct StationaryPoint {
    std::array<double, 3> occ{};
    Phase phi12 = Phase::unspecified;
    Phase phi23 = Phase::unspecified;
    double energy = 0.0;  // E/N
    std::optional<double> lambda;
    std::string label;  // x1..x5 or "general"
};

// Mean-field energy per particle:
//   U (n1-n2+n3)^2 + eps (n3-n1) + J sqrt2 [sqrt(n1 n2) cos(phi12) + sqrt(n2 n3) cos(phi23)]
// Throws if the occupations miss the constraint by more than 1e-8, or if a
// phase is unspecified while J != 0.
double classical_energy(const std::array<double, 3>& occ_frac, Phase phi12, Phase phi23,
                        const ModelParams& p);

// Closed-form stationary points of the three integrable limits.
std::vector<StationaryPoint> stationary_points_u0(double j, double eps);
std::vector<StationaryPoint> stationary_points_j0(double u, double eps);
std::vector<StationaryPoint> stationary_points_eps0(double u, double j);

// Coefficients c[m] of the degree-7 polynomial in rho2^2 whose roots give the
// stationary points in the nonintegrable regime; depends only on U^2, J^2, eps^2.
std::array<double, 8> polynomial_coefficients(double u, double j, double eps);

// Number of real roots of the polynomial (anywhere on the real line), after
// trimming vanishing leading coefficients.
int real_root_count(const std::array<double, 8>& coeffs);

// Stationary points for arbitrary couplings. Dispatches to the integrable
// tables when a coupling is negligible against the largest one; otherwise
// solves the degree-7 polynomial, recovers the amplitudes through the
// X-branches, filters by stationarity residual and polishes by Newton
// iteration on the full four-equation system.
std::vector<StationaryPoint> general_stationary_points(const ModelParams& p);

// Closed-form/general dispatcher (same rule general_stationary_points applies).
std::vector<StationaryPoint> stationary_points(const ModelParams& p);

// Euclidean norm of the four stationarity equations (three amplitude
// gradients plus the normalization defect), evaluated with signed amplitudes.
// Uses pt.lambda when present, otherwise the least-squares multiplier.
double stationarity_residual(const StationaryPoint& pt, const ModelParams& p);

struct MinEnergyResult {
    StationaryPoint point;                // lexicographically smallest among ties
    std::vector<StationaryPoint> ties;    // every point within 1e-12 of the minimum
};

MinEnergyResult min_energy_point(const ModelParams& p);

}  // namespace triplewell
