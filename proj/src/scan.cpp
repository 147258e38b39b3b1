#include "triplewell/scan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "triplewell/quantum.hpp"
#include "triplewell/semiclassical.hpp"

namespace triplewell {

namespace {

ModelParams with_axis(ModelParams p, Axis axis, double value) {
    switch (axis) {
        case Axis::u: p.u = value; break;
        case Axis::j: p.j = value; break;
        case Axis::epsilon: p.epsilon = value; break;
    }
    return p;
}

}  // namespace

Axis axis_from_name(const std::string& name) {
    if (name == "u") return Axis::u;
    if (name == "j") return Axis::j;
    if (name == "eps" || name == "epsilon") return Axis::epsilon;
    throw std::invalid_argument("unknown axis '" + name + "'");
}

Quantity quantity_from_name(const std::string& name) {
    if (name == "n1") return Quantity::n1;
    if (name == "n2") return Quantity::n2;
    if (name == "n3") return Quantity::n3;
    throw std::invalid_argument("unknown quantity '" + name + "'");
}

std::vector<SweepRow> sweep(Axis axis, double from, double to, int steps,
                            const ModelParams& fixed) {
    if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    fixed.validate();

    std::vector<SweepRow> rows(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        const double value = from + (to - from) * static_cast<double>(k) / (steps - 1);
        SweepRow& row = rows[static_cast<std::size_t>(k)];
        row.ratio = value;
        const ModelParams p = with_axis(fixed, axis, value);
        try {
            const MinEnergyResult cl = min_energy_point(p);
            row.classical_e = cl.point.energy;
            row.classical_occ = cl.point.occ;
            const GroundObservables q = ground_observables(p);
            row.quantum_e = q.e0_per_particle;
            for (int i = 0; i < 3; ++i)
                row.quantum_occ[static_cast<std::size_t>(i)] =
                    q.occ[static_cast<std::size_t>(i)] / static_cast<double>(p.n);
            row.gap1 = q.gap1;
            row.gap2 = q.gap2;
            row.degenerate = q.degenerate || cl.ties.size() > 1;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SweepRow& a, const SweepRow& b) { return a.ratio < b.ratio; });
    return rows;
}

std::vector<GridCell> grid2d(double u_min, double u_max, double eps_min, double eps_max,
                             int u_steps, int eps_steps, Quantity quantity, double j) {
    if (u_steps < 2 || eps_steps < 2)
        throw std::invalid_argument("grid2d: steps must be >= 2 on each axis");
    if (!std::isfinite(u_min) || !std::isfinite(u_max) || !std::isfinite(eps_min) ||
        !std::isfinite(eps_max))
        throw std::invalid_argument("grid2d: ranges must be finite");

    std::vector<GridCell> cells;
    cells.reserve(static_cast<std::size_t>(u_steps) * static_cast<std::size_t>(eps_steps));
    const int iq = static_cast<int>(quantity);
    for (int a = 0; a < u_steps; ++a) {
        const double u = u_min + (u_max - u_min) * static_cast<double>(a) / (u_steps - 1);
        for (int b = 0; b < eps_steps; ++b) {
            const double eps =
                eps_min + (eps_max - eps_min) * static_cast<double>(b) / (eps_steps - 1);
            GridCell cell;
            cell.u_over_j = u;
            cell.eps_over_j = eps;
            try {
                const MinEnergyResult cl = min_energy_point(ModelParams{u * j, j, eps * j, 1});
                cell.value = cl.point.occ[static_cast<std::size_t>(iq)];
            } catch (const std::exception& e) {
                cell.error = e.what();
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

std::optional<long> min_bosons_for_agreement(const std::vector<ModelParams>& family,
                                             AgreementQuantity quantity, double tol,
                                             long n_max) {
    if (tol <= 0.0) throw std::invalid_argument("min_bosons_for_agreement: tol must be > 0");
    if (n_max < 1) throw std::invalid_argument("min_bosons_for_agreement: N_max must be >= 1");
    if (family.empty()) throw std::invalid_argument("min_bosons_for_agreement: empty family");

    std::vector<MinEnergyResult> classical;
    classical.reserve(family.size());
    for (const auto& p : family) classical.push_back(min_energy_point(p));

    for (long n = 1; n <= n_max; ++n) {
        double max_dev = 0.0;
        for (std::size_t i = 0; i < family.size(); ++i) {
            ModelParams p = family[i];
            p.n = n;
            const GroundObservables q = ground_observables(p);
            if (quantity == AgreementQuantity::energy) {
                max_dev = std::max(max_dev,
                                   std::abs(q.e0_per_particle - classical[i].point.energy));
            } else {
                for (int k = 0; k < 3; ++k)
                    max_dev = std::max(
                        max_dev, std::abs(q.occ[static_cast<std::size_t>(k)] /
                                              static_cast<double>(n) -
                                          classical[i].point.occ[static_cast<std::size_t>(k)]));
            }
        }
        if (max_dev < tol) return n;
    }
    return std::nullopt;
}

}  // namespace triplewell
