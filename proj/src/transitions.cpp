#include "triplewell/transitions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace triplewell {

namespace {

double occ_distance(const StationaryPoint& a, const StationaryPoint& b) {
    double d2 = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double d = a.occ[k] - b.occ[k];
        d2 += d * d;
    }
    return std::sqrt(d2);
}

bool min_is_degenerate(const ModelParams& p) { return min_energy_point(p).ties.size() > 1; }

bool extra_branch_exists(const ModelParams& p) { return stationary_points(p).size() >= 5; }

// Bisects a boolean predicate change between s_lo and s_hi down to 1e-6.
template <typename Pred>
double bisect_change(const Pred& pred, double s_lo, double s_hi, bool value_lo) {
    while (std::abs(s_hi - s_lo) > 1e-7) {
        const double mid = 0.5 * (s_lo + s_hi);
        if (pred(mid) == value_lo)
            s_lo = mid;
        else
            s_hi = mid;
    }
    return 0.5 * (s_lo + s_hi);
}

// A genuine bifurcation requires the appearing branch to take over the
// energy minimum; a saddle-node far above the minimum does not qualify.
bool branch_takes_over_minimum(const ParamPath& path, double s_poor, double s_rich) {
    const std::vector<StationaryPoint> poor = stationary_points(path.at(s_poor));
    const std::vector<StationaryPoint> rich = stationary_points(path.at(s_rich));
    if (rich.empty()) return false;
    double emin = rich.front().energy;
    for (const auto& pt : rich) emin = std::min(emin, pt.energy);
    for (const auto& pt : rich) {
        const bool matched = std::any_of(poor.begin(), poor.end(), [&](const StationaryPoint& q) {
            return occ_distance(pt, q) < 0.02;
        });
        if (!matched && pt.energy <= emin + 1e-9) return true;
    }
    return false;
}

}  // namespace

BranchEnergy j0_lower_branch() {
    return [](double u, double eps) { return u - eps; };
}

BranchEnergy j0_upper_branch() {
    return [](double u, double eps) { return -eps * eps / (16.0 * u) - eps / 2.0; };
}

BranchEnergy eps0_flat_branch() {
    return [](double, double j) { return -j; };
}

BranchEnergy eps0_pair_branch() {
    return [](double u, double j) { return u + j * j / (4.0 * u); };
}

DirectionalDerivatives directional_derivative_test(const BranchEnergy& branch_a,
                                                   const BranchEnergy& branch_b,
                                                   const std::array<double, 2>& at,
                                                   const std::array<double, 2>& v) {
    const double vnorm = std::hypot(v[0], v[1]);
    if (vnorm == 0.0)
        throw std::invalid_argument("directional_derivative_test: zero direction");
    const double vx = v[0] / vnorm, vy = v[1] / vnorm;
    const double scale = std::max({1.0, std::abs(at[0]), std::abs(at[1])});
    const double h = 1e-4 * scale;

    auto stencil = [&](const BranchEnergy& f, double& d1, double& d2) {
        const double fp = f(at[0] + h * vx, at[1] + h * vy);
        const double f0 = f(at[0], at[1]);
        const double fm = f(at[0] - h * vx, at[1] - h * vy);
        if (!std::isfinite(fp) || !std::isfinite(f0) || !std::isfinite(fm))
            throw std::domain_error("directional_derivative_test: branch undefined on stencil");
        d1 = (fp - fm) / (2.0 * h);
        d2 = (fp - 2.0 * f0 + fm) / (h * h);
    };

    DirectionalDerivatives r;
    stencil(branch_a, r.d1a, r.d2a);
    stencil(branch_b, r.d1b, r.d2b);
    r.second_order = std::abs(r.d1a - r.d1b) < 1e-6 && std::abs(r.d2a - r.d2b) > 1e-3;
    return r;
}

double critical_point(const std::string& family) {
    if (family == "J0" || family == "j0") return 0.25;
    if (family == "eps0") return -0.5;
    throw std::invalid_argument("critical_point: unknown family '" + family + "'");
}

std::optional<double> detect_bifurcation(const ParamPath& path) {
    constexpr int kSamples = 201;
    const double span = path.s_end - path.s_begin;
    auto sample = [&](int k) {
        return path.s_begin + span * static_cast<double>(k) / (kSamples - 1);
    };

    // Primary predicate: the energy minimum is attained by more than one
    // stationary point (exact degeneracy, as in the eps=0 family).
    {
        auto pred = [&](double s) { return min_is_degenerate(path.at(s)); };
        bool prev = pred(sample(0));
        for (int k = 1; k < kSamples; ++k) {
            const bool cur = pred(sample(k));
            if (cur != prev)
                return bisect_change(pred, sample(k - 1), sample(k), prev);
            prev = cur;
        }
    }

    // Fallback: birth of the extra branch pair. Accepted only when the
    // branch count changes exactly once along the path and the appearing
    // branch takes over the minimum.
    {
        auto pred = [&](double s) { return extra_branch_exists(path.at(s)); };
        std::vector<bool> values(kSamples);
        for (int k = 0; k < kSamples; ++k) values[static_cast<std::size_t>(k)] = pred(sample(k));
        int change_at = -1;
        int changes = 0;
        for (int k = 1; k < kSamples; ++k) {
            if (values[static_cast<std::size_t>(k)] != values[static_cast<std::size_t>(k - 1)]) {
                ++changes;
                change_at = k;
            }
        }
        if (changes != 1) return std::nullopt;

        const double s_star = bisect_change(pred, sample(change_at - 1), sample(change_at),
                                            values[static_cast<std::size_t>(change_at - 1)]);
        const double delta = std::max(0.01 * std::abs(span), 1e-3);
        const bool rich_after = values[static_cast<std::size_t>(change_at)];
        const double s_rich = rich_after ? s_star + delta : s_star - delta;
        const double s_poor = rich_after ? s_star - delta : s_star + delta;
        if (branch_takes_over_minimum(path, s_poor, s_rich)) return s_star;
        return std::nullopt;
    }
}

}  // namespace triplewell
