#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "triplewell/model.hpp"

namespace triplewell {

enum class Axis { u, j, epsilon };

Axis axis_from_name(const std::string& name);

// One parameter point of a 1D cut: classical minimum vs quantum ground state.
// Occupations are per particle on both sides. A failed cell keeps its error
// message instead of aborting the sweep.
struct SweepRow {
    double ratio = 0.0;  // value of the swept parameter
    double classical_e = 0.0;
    double quantum_e = 0.0;
    std::array<double, 3> classical_occ{};
    std::array<double, 3> quantum_occ{};
    double gap1 = 0.0;
    double gap2 = 0.0;
    bool degenerate = false;  // quantum near-degeneracy or classical tie
    std::string error;        // empty on success
};

// Evaluates `steps` equally spaced points of the chosen axis over
// [from, to]; remaining parameters (and N) come from `fixed`. Rows are
// returned in ascending axis order.
std::vector<SweepRow> sweep(Axis axis, double from, double to, int steps,
                            const ModelParams& fixed);

enum class Quantity { n1, n2, n3 };

Quantity quantity_from_name(const std::string& name);

struct GridCell {
    double u_over_j = 0.0;
    double eps_over_j = 0.0;
    double value = 0.0;  // selected occupation fraction of the classical minimum
    std::string error;
};

// Semiclassical minimum-energy occupations over a (U/J, eps/J) grid at J=1
// (or the given J). Cells are emitted row-major: U ascending outer, eps
// ascending inner.
std::vector<GridCell> grid2d(double u_min, double u_max, double eps_min, double eps_max,
                             int u_steps, int eps_steps, Quantity quantity, double j = 1.0);

enum class AgreementQuantity { energy, occupations };

// Smallest N <= n_max for which the quantum/classical deviation of the
// chosen per-particle quantity stays below tol over the whole family.
std::optional<long> min_bosons_for_agreement(const std::vector<ModelParams>& family,
                                             AgreementQuantity quantity, double tol,
                                             long n_max);

}  // namespace triplewell
