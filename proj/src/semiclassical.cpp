#include "triplewell/semiclassical.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace triplewell {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

// Signed amplitudes plus multiplier; the working representation for the
// stationarity system. Phases live in the signs of r1, r3 (r2 kept >= 0).
struct Amplitudes {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
    double lambda = 0.0;
};

double sum_sq(const Amplitudes& a) { return a.r1 * a.r1 + a.r2 * a.r2 + a.r3 * a.r3; }

double energy_of(const Amplitudes& a, const ModelParams& p) {
    const double sig = a.r1 * a.r1 - a.r2 * a.r2 + a.r3 * a.r3;
    return p.u * sig * sig + p.epsilon * (a.r3 * a.r3 - a.r1 * a.r1) +
           p.j * kSqrt2 * (a.r1 * a.r2 + a.r2 * a.r3);
}

// The four stationarity equations: three amplitude gradients of the
// simplified mean-field functional plus the normalization defect.
Eigen::Vector4d gradient(const Amplitudes& a, const ModelParams& p) {
    const double sig = a.r1 * a.r1 - a.r2 * a.r2 + a.r3 * a.r3;
    Eigen::Vector4d g;
    g[0] = 4.0 * p.u * sig * a.r1 - 2.0 * p.epsilon * a.r1 + kSqrt2 * p.j * a.r2 -
           2.0 * a.lambda * a.r1;
    g[1] = -4.0 * p.u * sig * a.r2 + kSqrt2 * p.j * (a.r1 + a.r3) - 2.0 * a.lambda * a.r2;
    g[2] = 4.0 * p.u * sig * a.r3 + 2.0 * p.epsilon * a.r3 + kSqrt2 * p.j * a.r2 -
           2.0 * a.lambda * a.r3;
    g[3] = 1.0 - sum_sq(a);
    return g;
}

// Least-squares multiplier over the three gradient equations.
double best_fit_lambda(const Amplitudes& a, const ModelParams& p) {
    Amplitudes z = a;
    z.lambda = 0.0;
    const Eigen::Vector4d g = gradient(z, p);
    const double ss = sum_sq(a);
    if (ss <= 0.0) return 0.0;
    return (g[0] * a.r1 + g[1] * a.r2 + g[2] * a.r3) / (2.0 * ss);
}

double residual_of(const Amplitudes& a, const ModelParams& p) { return gradient(a, p).norm(); }

int phase_sign(Phase ph) { return ph == Phase::pi ? -1 : 1; }

Amplitudes amplitudes_from_point(const StationaryPoint& pt) {
    Amplitudes a;
    const double n1 = std::max(0.0, pt.occ[0]);
    const double n2 = std::max(0.0, pt.occ[1]);
    const double n3 = std::max(0.0, pt.occ[2]);
    if (n2 > 0.0) {
        a.r2 = std::sqrt(n2);
        a.r1 = phase_sign(pt.phi12) * std::sqrt(n1);
        a.r3 = phase_sign(pt.phi23) * std::sqrt(n3);
    } else {
        // phi12 and phi23 only fix the relative sign of r1 and r3 here.
        a.r1 = std::sqrt(n1);
        a.r3 = phase_sign(pt.phi12) * phase_sign(pt.phi23) * std::sqrt(n3);
    }
    return a;
}

Phase sign_phase(double product) { return product < 0.0 ? Phase::pi : Phase::zero; }

StationaryPoint point_from_amplitudes(const Amplitudes& a, const ModelParams& p,
                                      std::string label) {
    StationaryPoint pt;
    pt.occ = {a.r1 * a.r1, a.r2 * a.r2, a.r3 * a.r3};
    if (p.j == 0.0) {
        pt.phi12 = Phase::unspecified;
        pt.phi23 = Phase::unspecified;
    } else if (a.r2 != 0.0) {
        pt.phi12 = sign_phase(a.r1 * a.r2);
        pt.phi23 = sign_phase(a.r2 * a.r3);
    } else {
        pt.phi12 = Phase::zero;
        pt.phi23 = sign_phase(a.r1 * a.r3);
    }
    pt.energy = energy_of(a, p);
    pt.lambda = a.lambda;
    pt.label = std::move(label);
    return pt;
}

// Newton iteration on the full four-equation system. Returns true when the
// residual drops below tol; rejects runs that wander away.
bool newton_polish(Amplitudes& a, const ModelParams& p, double tol) {
    const double u = p.u, eps = p.epsilon, sj = kSqrt2 * p.j;
    for (int iter = 0; iter < 60; ++iter) {
        const Eigen::Vector4d g = gradient(a, p);
        if (g.norm() < tol) return true;
        const double sig = a.r1 * a.r1 - a.r2 * a.r2 + a.r3 * a.r3;
        Eigen::Matrix4d jac;
        jac(0, 0) = 4.0 * u * sig + 8.0 * u * a.r1 * a.r1 - 2.0 * eps - 2.0 * a.lambda;
        jac(0, 1) = -8.0 * u * a.r1 * a.r2 + sj;
        jac(0, 2) = 8.0 * u * a.r1 * a.r3;
        jac(0, 3) = -2.0 * a.r1;
        jac(1, 0) = -8.0 * u * a.r1 * a.r2 + sj;
        jac(1, 1) = -4.0 * u * sig + 8.0 * u * a.r2 * a.r2 - 2.0 * a.lambda;
        jac(1, 2) = -8.0 * u * a.r2 * a.r3 + sj;
        jac(1, 3) = -2.0 * a.r2;
        jac(2, 0) = 8.0 * u * a.r1 * a.r3;
        jac(2, 1) = -8.0 * u * a.r2 * a.r3 + sj;
        jac(2, 2) = 4.0 * u * sig + 8.0 * u * a.r3 * a.r3 + 2.0 * eps - 2.0 * a.lambda;
        jac(2, 3) = -2.0 * a.r3;
        jac(3, 0) = -2.0 * a.r1;
        jac(3, 1) = -2.0 * a.r2;
        jac(3, 2) = -2.0 * a.r3;
        jac(3, 3) = 0.0;

        const Eigen::Vector4d step = jac.fullPivLu().solve(g);
        if (!step.allFinite() || step.norm() > 1.0) return false;
        a.r1 -= step[0];
        a.r2 -= step[1];
        a.r3 -= step[2];
        a.lambda -= step[3];
    }
    return residual_of(a, p) < tol;
}

void canonicalize(Amplitudes& a) {
    const bool flip = a.r2 != 0.0 ? (a.r2 < 0.0) : (std::abs(a.r2) < 1e-12 && a.r1 < 0.0);
    if (flip) {
        a.r1 = -a.r1;
        a.r2 = -a.r2;
        a.r3 = -a.r3;
    }
}

double amplitude_distance(const Amplitudes& a, const Amplitudes& b) {
    return std::sqrt((a.r1 - b.r1) * (a.r1 - b.r1) + (a.r2 - b.r2) * (a.r2 - b.r2) +
                     (a.r3 - b.r3) * (a.r3 - b.r3));
}

StationaryPoint make_table_point(const std::array<double, 3>& occ, Phase phi12, Phase phi23,
                                 double energy, const ModelParams& p, std::string label) {
    StationaryPoint pt;
    pt.occ = occ;
    pt.phi12 = phi12;
    pt.phi23 = phi23;
    pt.energy = energy;
    pt.label = std::move(label);
    Amplitudes a = amplitudes_from_point(pt);
    a.lambda = best_fit_lambda(a, p);
    pt.lambda = a.lambda;
    return pt;
}

bool occ_less(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    for (int k = 0; k < 3; ++k) {
        if (a[k] != b[k]) return a[k] < b[k];
    }
    return false;
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& monic_lower) {
    // monic_lower holds b_0..b_{d-1} of t^d + sum b_m t^m.
    const long d = static_cast<long>(monic_lower.size());
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    for (long i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (long i = 0; i < d; ++i) comp(i, d - 1) = -monic_lower[static_cast<std::size_t>(i)];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(d));
    for (long i = 0; i < d; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
    return roots;
}

}  // namespace

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::zero: return "0";
        case Phase::pi: return "pi";
        default: return "unspecified";
    }
}

double classical_energy(const std::array<double, 3>& occ_frac, Phase phi12, Phase phi23,
                        const ModelParams& p) {
    const double sum = occ_frac[0] + occ_frac[1] + occ_frac[2];
    if (std::abs(sum - 1.0) > 1e-8)
        throw std::invalid_argument("classical_energy: occupations violate the constraint");
    const double t12 = std::sqrt(std::max(0.0, occ_frac[0] * occ_frac[1]));
    const double t23 = std::sqrt(std::max(0.0, occ_frac[1] * occ_frac[2]));
    if (p.j != 0.0 && ((t12 > 0.0 && phi12 == Phase::unspecified) ||
                       (t23 > 0.0 && phi23 == Phase::unspecified)))
        throw std::invalid_argument("classical_energy: phase required when J != 0");
    const double sig = occ_frac[0] - occ_frac[1] + occ_frac[2];
    const double cos12 = phi12 == Phase::pi ? -1.0 : 1.0;
    const double cos23 = phi23 == Phase::pi ? -1.0 : 1.0;
    return p.u * sig * sig + p.epsilon * (occ_frac[2] - occ_frac[0]) +
           p.j * kSqrt2 * (t12 * cos12 + t23 * cos23);
}

std::vector<StationaryPoint> stationary_points_u0(double j, double eps) {
    if (j == 0.0 && eps == 0.0)
        throw std::invalid_argument("stationary_points_u0: J and eps cannot both vanish");
    const ModelParams p{0.0, j, eps, 1};
    const double s2 = eps * eps + j * j;
    const double s = std::sqrt(s2);
    const double sg = eps < 0.0 ? -1.0 : 1.0;

    const double half_j2 = j * j / (2.0 * s2);
    const double ap = s2 + std::abs(eps) * s;
    const double am = s2 - std::abs(eps) * s;
    const double occ_hi = ap * ap / (4.0 * s2 * s2);
    const double occ_lo = am * am / (4.0 * s2 * s2);

    // Phase of r1 (r3) follows the sign of J/(lambda+eps) (J/(lambda-eps));
    // for U=0 the multiplier equals the energy.
    auto phases_for = [&](double lambda) -> std::pair<Phase, Phase> {
        if (j == 0.0) return {Phase::unspecified, Phase::unspecified};
        if (lambda == 0.0 && eps == 0.0) return {Phase::zero, Phase::pi};
        return {sign_phase(j * (lambda + eps)), sign_phase(j * (lambda - eps))};
    };

    std::vector<StationaryPoint> pts;
    const auto [p121, p231] = phases_for(0.0);
    pts.push_back(make_table_point({half_j2, eps * eps / s2, half_j2}, p121, p231, 0.0, p, "x1"));
    const auto [p122, p232] = phases_for(-sg * s);
    pts.push_back(make_table_point({occ_hi, half_j2, occ_lo}, p122, p232, -sg * s, p, "x2"));
    const auto [p123, p233] = phases_for(sg * s);
    pts.push_back(make_table_point({occ_lo, half_j2, occ_hi}, p123, p233, sg * s, p, "x3"));
    return pts;
}

std::vector<StationaryPoint> stationary_points_j0(double u, double eps) {
    const ModelParams p{u, 0.0, eps, 1};
    const Phase un = Phase::unspecified;
    std::vector<StationaryPoint> pts;
    pts.push_back(make_table_point({0.0, 0.0, 1.0}, un, un, u + eps, p, "x1"));
    if (u != 0.0 && std::abs(u) >= std::abs(eps) / 4.0) {
        const double d = eps / (8.0 * u);
        pts.push_back(make_table_point({0.0, 0.5 + d, 0.5 - d}, un, un,
                                       -eps * eps / (16.0 * u) + eps / 2.0, p, "x2"));
    }
    pts.push_back(make_table_point({0.0, 1.0, 0.0}, un, un, u, p, "x3"));
    pts.push_back(make_table_point({1.0, 0.0, 0.0}, un, un, u - eps, p, "x4"));
    if (u != 0.0 && std::abs(u) >= std::abs(eps) / 4.0) {
        const double d = eps / (8.0 * u);
        pts.push_back(make_table_point({0.5 + d, 0.5 - d, 0.0}, un, un,
                                       -eps * eps / (16.0 * u) - eps / 2.0, p, "x5"));
    }
    return pts;
}

std::vector<StationaryPoint> stationary_points_eps0(double u, double j) {
    if (j == 0.0)
        throw std::invalid_argument("stationary_points_eps0: J = 0 belongs to the J=0 family");
    const ModelParams p{u, j, 0.0, 1};

    std::vector<StationaryPoint> pts;
    pts.push_back(make_table_point({0.5, 0.0, 0.5}, Phase::zero, Phase::pi, u, p, "x1"));
    pts.push_back(make_table_point({0.25, 0.5, 0.25}, Phase::zero, Phase::zero, j, p, "x2"));
    pts.push_back(make_table_point({0.25, 0.5, 0.25}, Phase::pi, Phase::pi, -j, p, "x3"));

    if (u != 0.0 && std::abs(u) >= std::abs(j) / 2.0) {
        const double s = std::sqrt(std::max(0.0, 4.0 - j * j / (u * u)));
        const double e45 = u + j * j / (4.0 * u);
        const std::array<double, 3> occ4{0.25 + s / 8.0, 0.5 - s / 4.0, 0.25 + s / 8.0};
        const std::array<double, 3> occ5{0.25 - s / 8.0, 0.5 + s / 4.0, 0.25 - s / 8.0};
        // The phase pattern that actually satisfies stationarity depends on
        // the signs of U and J; pick it by residual.
        for (int which = 0; which < 2; ++which) {
            const auto& occ = which == 0 ? occ4 : occ5;
            StationaryPoint best;
            double best_res = std::numeric_limits<double>::infinity();
            for (Phase ph : {Phase::zero, Phase::pi}) {
                StationaryPoint cand =
                    make_table_point(occ, ph, ph, e45, p, which == 0 ? "x4" : "x5");
                const double res = stationarity_residual(cand, p);
                if (res < best_res) {
                    best_res = res;
                    best = cand;
                }
            }
            best.energy = classical_energy(best.occ, best.phi12, best.phi23, p);
            pts.push_back(best);
        }
    }
    return pts;
}

std::array<double, 8> polynomial_coefficients(double u, double j, double eps) {
    const double u2 = u * u, j2 = j * j, e2 = eps * eps;
    const double u4 = u2 * u2, j4 = j2 * j2, j6 = j4 * j2;
    const double e4 = e2 * e2, e6 = e4 * e2;
    std::array<double, 8> c{};
    c[0] = -e2 * j4;
    c[1] = 4.0 * e4 * j2 + 5.0 * e2 * j4 + j6 + 64.0 * e2 * j2 * u2;
    c[2] = -4.0 * e6 - 12.0 * e4 * j2 - 12.0 * e2 * j4 - 4.0 * j6 + 128.0 * e4 * u2 -
           576.0 * e2 * j2 * u2 - 16.0 * j4 * u2 - 1024.0 * e2 * u4;
    c[3] = 4.0 * e6 + 12.0 * e4 * j2 + 12.0 * e2 * j4 + 4.0 * j6 - 640.0 * e4 * u2 +
           1856.0 * e2 * j2 * u2 + 80.0 * j4 * u2 + 9216.0 * e2 * u4;
    c[4] = 1024.0 * e4 * u2 - 2560.0 * e2 * j2 * u2 - 128.0 * j4 * u2 - 32768.0 * e2 * u4;
    c[5] = -512.0 * e4 * u2 + 1280.0 * e2 * j2 * u2 + 64.0 * j4 * u2 + 57344.0 * e2 * u4;
    c[6] = -49152.0 * e2 * u4;
    c[7] = 16384.0 * e2 * u4;
    return c;
}

int real_root_count(const std::array<double, 8>& coeffs) {
    double cmax = 0.0;
    for (double c : coeffs) cmax = std::max(cmax, std::abs(c));
    if (cmax == 0.0) return 0;
    int degree = 7;
    while (degree > 0 && std::abs(coeffs[static_cast<std::size_t>(degree)]) <= 1e-13 * cmax)
        --degree;
    if (degree == 0) return 0;
    std::vector<double> monic(static_cast<std::size_t>(degree));
    for (int m = 0; m < degree; ++m)
        monic[static_cast<std::size_t>(m)] =
            coeffs[static_cast<std::size_t>(m)] / coeffs[static_cast<std::size_t>(degree)];
    int count = 0;
    for (const auto& z : polynomial_roots(monic))
        if (std::abs(z.imag()) <= 1e-7 * (1.0 + std::abs(z.real()))) ++count;
    return count;
}

std::vector<StationaryPoint> stationary_points(const ModelParams& p) {
    const double cmax = std::max({std::abs(p.u), std::abs(p.j), std::abs(p.epsilon)});
    if (cmax == 0.0)
        throw std::invalid_argument("stationary_points: all couplings vanish");
    const double thr = 1e-12 * cmax;
    if (std::abs(p.u) <= thr) return stationary_points_u0(p.j, p.epsilon);
    if (std::abs(p.j) <= thr) return stationary_points_j0(p.u, p.epsilon);
    if (std::abs(p.epsilon) <= thr) return stationary_points_eps0(p.u, p.j);
    return general_stationary_points(p);
}

std::vector<StationaryPoint> general_stationary_points(const ModelParams& p) {
    const double cmax = std::max({std::abs(p.u), std::abs(p.j), std::abs(p.epsilon)});
    if (cmax == 0.0)
        throw std::invalid_argument("general_stationary_points: all couplings vanish");
    const double thr = 1e-12 * cmax;
    if (std::abs(p.u) <= thr || std::abs(p.j) <= thr || std::abs(p.epsilon) <= thr)
        return stationary_points(p);

    const double u = p.u, j = p.j, eps = p.epsilon;
    const double res_scale = std::max(1.0, cmax);
    const double pre_tol = 1e-3 * res_scale;
    const double final_tol = 1e-9 * res_scale;
    const double polish_tol = 1e-13 * res_scale;

    const std::array<double, 8> c = polynomial_coefficients(u, j, eps);
    std::vector<double> monic(7);
    for (int m = 0; m < 7; ++m) monic[static_cast<std::size_t>(m)] = c[static_cast<std::size_t>(m)] / c[7];

    std::vector<Amplitudes> accepted;
    auto try_candidate = [&](Amplitudes a) {
        if (!std::isfinite(a.r1) || !std::isfinite(a.r3)) return;
        if (std::abs(sum_sq(a) - 1.0) > 1e-6) return;
        if (residual_of(a, p) > pre_tol) return;
        if (!newton_polish(a, p, polish_tol)) return;
        if (residual_of(a, p) > final_tol) return;
        canonicalize(a);
        for (const auto& b : accepted)
            if (amplitude_distance(a, b) < 1e-8) return;
        accepted.push_back(a);
    };

    for (const auto& z : polynomial_roots(monic)) {
        if (std::abs(z.imag()) > 1e-8 * (1.0 + std::abs(z.real()))) continue;
        const double t = z.real();
        if (t <= 1e-14 || t >= 1.0 - 1e-14) continue;
        const double rho2 = std::sqrt(t);
        const double inner = j * j + 8.0 * (1.0 - t) / t * eps * eps;
        for (int s_in : {1, -1}) {
            const double arg =
                eps * eps + j * t / (2.0 * (1.0 - t)) * (j + s_in * std::sqrt(inner));
            if (arg < 0.0) continue;
            for (int s_out : {1, -1}) {
                const double x = s_out * std::sqrt(arg);
                if (std::abs(x + eps) < 1e-10 * res_scale || std::abs(x - eps) < 1e-10 * res_scale)
                    continue;
                Amplitudes a;
                a.r2 = rho2;
                a.r1 = 0.5 * kSqrt2 * j * rho2 / (x + eps);
                a.r3 = 0.5 * kSqrt2 * j * rho2 / (x - eps);
                a.lambda = x + 2.0 * u * (1.0 - 2.0 * t);
                try_candidate(a);
            }
        }
    }

    // The polynomial parametrization excludes rho2 in {0,1}; pure Fock
    // configurations are screened directly (stationary only when J = 0).
    for (int well = 0; well < 3; ++well) {
        Amplitudes a;
        (well == 0 ? a.r1 : well == 1 ? a.r2 : a.r3) = 1.0;
        a.lambda = best_fit_lambda(a, p);
        if (residual_of(a, p) <= final_tol) {
            canonicalize(a);
            bool dup = false;
            for (const auto& b : accepted) dup = dup || amplitude_distance(a, b) < 1e-8;
            if (!dup) accepted.push_back(a);
        }
    }

    std::vector<StationaryPoint> pts;
    pts.reserve(accepted.size());
    for (const auto& a : accepted) pts.push_back(point_from_amplitudes(a, p, "general"));
    std::sort(pts.begin(), pts.end(), [](const StationaryPoint& a, const StationaryPoint& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return occ_less(a.occ, b.occ);
    });
    return pts;
}

double stationarity_residual(const StationaryPoint& pt, const ModelParams& p) {
    Amplitudes a = amplitudes_from_point(pt);
    a.lambda = pt.lambda ? *pt.lambda : best_fit_lambda(a, p);
    return residual_of(a, p);
}

MinEnergyResult min_energy_point(const ModelParams& p) {
    std::vector<StationaryPoint> pts = stationary_points(p);
    if (pts.empty())
        throw std::runtime_error("min_energy_point: no stationary points found");
    double emin = pts.front().energy;
    for (const auto& pt : pts) emin = std::min(emin, pt.energy);

    MinEnergyResult r;
    for (const auto& pt : pts)
        if (pt.energy <= emin + 1e-12) r.ties.push_back(pt);
    std::sort(r.ties.begin(), r.ties.end(),
              [](const StationaryPoint& a, const StationaryPoint& b) {
                  return occ_less(a.occ, b.occ);
              });
    r.point = r.ties.front();
    return r;
}

}  // namespace triplewell
