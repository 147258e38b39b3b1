#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "triplewell/io.hpp"
#include "triplewell/quantum.hpp"
#include "triplewell/scan.hpp"
#include "triplewell/semiclassical.hpp"
#include "triplewell/transitions.hpp"

namespace triplewell {

namespace {

double per_divisor(const RunConfig& cfg) {
    if (cfg.per == "none") return 1.0;
    if (cfg.per == "J" || cfg.per == "j") {
        if (cfg.j == 0.0) throw ConfigError("--per J requires a nonzero --j");
        return cfg.j;
    }
    if (cfg.per == "eps") {
        if (cfg.eps == 0.0) throw ConfigError("--per eps requires a nonzero --eps");
        return cfg.eps;
    }
    throw ConfigError("unknown --per value '" + cfg.per + "'");
}

ModelParams params_of(const RunConfig& cfg) {
    ModelParams p{cfg.u, cfg.j, cfg.eps, cfg.n};
    p.validate();
    return p;
}

OutputTable run_spectrum(const RunConfig& cfg) {
    const ModelParams p = params_of(cfg);
    const double div = per_divisor(cfg);
    OutputTable t;
    if (cfg.eigenvalues) {
        const Basis basis(p.n);
        const SpectrumResult s = full_spectrum(build_hamiltonian(p, basis));
        t.columns = {"index", "energy"};
        for (long i = 0; i < s.eigenvalues.size(); ++i)
            t.rows.push_back({i, s.eigenvalues[i] / div});
        return t;
    }
    const GroundObservables g = ground_observables(p);
    t.columns = {"e0", "gap1", "gap2", "qn1", "qn2", "qn3", "degenerate"};
    t.rows.push_back({g.e0_per_particle / div, g.gap1 / div, g.gap2 / div,
                      g.occ[0] / static_cast<double>(p.n), g.occ[1] / static_cast<double>(p.n),
                      g.occ[2] / static_cast<double>(p.n), g.degenerate});
    return t;
}

OutputTable run_stationary(const RunConfig& cfg) {
    const ModelParams p = params_of(cfg);
    const double div = per_divisor(cfg);
    OutputTable t;
    t.columns = {"label", "n1", "n2", "n3", "phi12", "phi23", "energy", "lambda", "residual"};
    for (const StationaryPoint& pt : stationary_points(p)) {
        OutputTable::Value lambda = pt.lambda ? OutputTable::Value{*pt.lambda / div}
                                              : OutputTable::Value{std::string{}};
        t.rows.push_back({pt.label, pt.occ[0], pt.occ[1], pt.occ[2],
                          std::string(phase_name(pt.phi12)), std::string(phase_name(pt.phi23)),
                          pt.energy / div, lambda, stationarity_residual(pt, p)});
    }
    return t;
}

OutputTable run_sweep(const RunConfig& cfg) {
    const ModelParams fixed = params_of(cfg);
    const double div = per_divisor(cfg);
    const Axis axis = axis_from_name(cfg.axis);
    OutputTable t;
    t.columns = {"ratio", "classical_e", "quantum_e", "qn1", "qn2", "qn3",
                 "cn1",   "cn2",         "cn3",       "gap1", "gap2",
                 "degenerate", "error"};
    for (const SweepRow& r : sweep(axis, cfg.from, cfg.to, cfg.steps, fixed)) {
        t.rows.push_back({r.ratio, r.classical_e / div, r.quantum_e / div, r.quantum_occ[0],
                          r.quantum_occ[1], r.quantum_occ[2], r.classical_occ[0],
                          r.classical_occ[1], r.classical_occ[2], r.gap1 / div, r.gap2 / div,
                          r.degenerate, r.error});
    }
    return t;
}

OutputTable run_grid(const RunConfig& cfg) {
    const Quantity q = quantity_from_name(cfg.quantity);
    OutputTable t;
    t.columns = {"u_over_j", "eps_over_j", cfg.quantity, "error"};
    for (const GridCell& c : grid2d(cfg.u_min, cfg.u_max, cfg.eps_min, cfg.eps_max, cfg.u_steps,
                                    cfg.eps_steps, q, cfg.j == 0.0 ? 1.0 : cfg.j)) {
        t.rows.push_back({c.u_over_j, c.eps_over_j, c.value, c.error});
    }
    return t;
}

OutputTable run_critical(const RunConfig& cfg) {
    OutputTable t;
    t.columns = {"family", "analytic", "detected", "d1a", "d1b", "d2a", "d2b", "second_order"};

    ParamPath path;
    BranchEnergy a, b;
    std::array<double, 2> at{}, v{1.0, 0.0};
    if (cfg.family == "j0" || cfg.family == "J0") {
        path.at = [&cfg](double s) { return ModelParams{s, 0.0, 1.0, cfg.n}; };
        path.s_begin = 0.05;
        path.s_end = 0.45;
        a = j0_lower_branch();
        b = j0_upper_branch();
        at = {0.25, 1.0};
    } else if (cfg.family == "eps0") {
        path.at = [&cfg](double s) { return ModelParams{s, 1.0, 0.0, cfg.n}; };
        path.s_begin = -1.0;
        path.s_end = -0.05;
        a = eps0_flat_branch();
        b = eps0_pair_branch();
        at = {-0.5, 1.0};
    } else {
        throw ConfigError("critical: --family must be j0 or eps0");
    }

    const double analytic = critical_point(cfg.family);
    const std::optional<double> detected = detect_bifurcation(path);
    const DirectionalDerivatives d = directional_derivative_test(a, b, at, v);
    OutputTable::Value det = detected ? OutputTable::Value{*detected}
                                      : OutputTable::Value{std::string{}};
    t.rows.push_back({cfg.family, analytic, det, d.d1a, d.d1b, d.d2a, d.d2b, d.second_order});
    return t;
}

OutputTable run_correspond(const RunConfig& cfg) {
    const ModelParams fixed = params_of(cfg);
    const Axis axis = axis_from_name(cfg.axis);
    if (cfg.steps < 1) throw ConfigError("correspond: --steps must be >= 1");

    std::vector<ModelParams> family;
    family.reserve(static_cast<std::size_t>(cfg.steps));
    for (int k = 0; k < cfg.steps; ++k) {
        const double value =
            cfg.steps == 1 ? cfg.from
                           : cfg.from + (cfg.to - cfg.from) * static_cast<double>(k) /
                                            (cfg.steps - 1);
        ModelParams p = fixed;
        switch (axis) {
            case Axis::u: p.u = value; break;
            case Axis::j: p.j = value; break;
            case Axis::epsilon: p.epsilon = value; break;
        }
        family.push_back(p);
    }

    AgreementQuantity q;
    if (cfg.quantity == "energy")
        q = AgreementQuantity::energy;
    else if (cfg.quantity == "occupations")
        q = AgreementQuantity::occupations;
    else
        throw ConfigError("correspond: --quantity must be energy or occupations");

    const std::optional<long> n_min = min_bosons_for_agreement(family, q, cfg.tol, cfg.n_max);
    OutputTable t;
    t.columns = {"quantity", "tol", "n_max", "n_min", "found"};
    OutputTable::Value nv = n_min ? OutputTable::Value{*n_min} : OutputTable::Value{std::string{}};
    t.rows.push_back({cfg.quantity, cfg.tol, cfg.n_max, nv, n_min.has_value()});
    return t;
}

}  // namespace

OutputTable run_command(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::spectrum: return run_spectrum(cfg);
        case Command::stationary: return run_stationary(cfg);
        case Command::sweep: return run_sweep(cfg);
        case Command::grid: return run_grid(cfg);
        case Command::critical: return run_critical(cfg);
        case Command::correspond: return run_correspond(cfg);
    }
    throw std::logic_error("run_command: unreachable");
}

}  // namespace triplewell
