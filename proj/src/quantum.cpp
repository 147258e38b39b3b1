#include "triplewell/quantum.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace triplewell {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
    const double scale = v.cwiseAbs().maxCoeff();
    const double tol = 1e-12 * scale;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > tol) {
            if (v[i] < 0.0) v = -v;
            return;
        }
    }
}

double diagonal_energy(const ModelParams& p, const FockState& s) {
    const double q = static_cast<double>(s.n1 - s.n2 + s.n3);
    return p.u / static_cast<double>(p.n) * q * q +
           p.epsilon * static_cast<double>(s.n3 - s.n1);
}

}  // namespace

Eigen::MatrixXd build_hamiltonian(const ModelParams& p, const Basis& basis) {
    p.validate();
    if (basis.total() != p.n)
        throw std::invalid_argument("build_hamiltonian: basis N does not match params N");

    const long d = basis.dimension();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
    const double jh = p.j * kSqrtHalf;

    for (long i = 0; i < d; ++i) {
        const FockState& s = basis.state(i);
        h(i, i) = diagonal_energy(p, s);
        // a1† a2 : |n1,n2,n3> -> |n1+1,n2-1,n3>
        if (s.n2 > 0) {
            const long k = basis.index_of({s.n1 + 1, s.n2 - 1, s.n3});
            const double amp = jh * std::sqrt(static_cast<double>((s.n1 + 1) * s.n2));
            h(i, k) = amp;
            h(k, i) = amp;
        }
        // a2† a3 : |n1,n2,n3> -> |n1,n2+1,n3-1>
        if (s.n3 > 0) {
            const long k = basis.index_of({s.n1, s.n2 + 1, s.n3 - 1});
            const double amp = jh * std::sqrt(static_cast<double>((s.n2 + 1) * s.n3));
            h(i, k) = amp;
            h(k, i) = amp;
        }
    }
    return h;
}

SpectrumResult full_spectrum(const Eigen::MatrixXd& h) {
    if (h.rows() != h.cols()) throw std::invalid_argument("full_spectrum: matrix not square");
    const lapack_int n = static_cast<lapack_int>(h.rows());

    SpectrumResult r;
    r.eigenvectors = h;
    r.eigenvalues.resize(n);
    const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                           r.eigenvectors.data(), n, r.eigenvalues.data());
    if (info != 0)
        throw EigensolverError("full_spectrum: dsyevd failed to converge (info=" +
                               std::to_string(info) + ")");
    for (lapack_int i = 0; i < n; ++i) fix_sign(r.eigenvectors.col(i));
    return r;
}

std::array<double, 3> occupation_averages(const Basis& basis, const Eigen::VectorXd& v) {
    std::array<double, 3> occ{0.0, 0.0, 0.0};
    for (long i = 0; i < basis.dimension(); ++i) {
        const double w = v[i] * v[i];
        const FockState& s = basis.state(i);
        occ[0] += w * static_cast<double>(s.n1);
        occ[1] += w * static_cast<double>(s.n2);
        occ[2] += w * static_cast<double>(s.n3);
    }
    return occ;
}

GroundObservables ground_observables(const ModelParams& p) {
    p.validate();
    const Basis basis(p.n);
    const SpectrumResult spec = full_spectrum(build_hamiltonian(p, basis));

    GroundObservables g;
    const double e0 = spec.eigenvalues[0];
    g.e0_per_particle = e0 / static_cast<double>(p.n);
    g.gap1 = spec.eigenvalues.size() > 1 ? spec.eigenvalues[1] - e0 : 0.0;
    g.gap2 = spec.eigenvalues.size() > 2 ? spec.eigenvalues[2] - e0 : g.gap1;
    g.occ = occupation_averages(basis, spec.eigenvectors.col(0));

    const double cmax = std::max({std::abs(p.u), std::abs(p.j), std::abs(p.epsilon)});
    const double scale = std::max(std::abs(e0), static_cast<double>(p.n) * cmax);
    g.degenerate = basis.dimension() > 1 && g.gap1 < 1e-8 * scale;
    return g;
}

double fidelity(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size()) throw std::invalid_argument("fidelity: dimension mismatch");
    if (std::abs(a.norm() - 1.0) > 1e-8 || std::abs(b.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("fidelity: input vector not normalized");
    return std::abs(a.dot(b));
}

std::pair<FockState, double> fock_ground_j0(const ModelParams& p) {
    p.validate();
    if (p.j != 0.0) throw std::invalid_argument("fock_ground_j0: requires J = 0");
    const Basis basis(p.n);
    long best = 0;
    double best_e = std::numeric_limits<double>::infinity();
    for (long i = 0; i < basis.dimension(); ++i) {
        const double e = diagonal_energy(p, basis.state(i));
        if (e < best_e) {
            best_e = e;
            best = i;
        }
    }
    return {basis.state(best), best_e / static_cast<double>(p.n)};
}

Eigen::VectorXd double_well_spectrum(const ModelParams& p) {
    p.validate();
    if (p.epsilon != 0.0)
        throw std::invalid_argument("double_well_spectrum: requires eps = 0");

    const long d = p.n + 1;  // basis |Nb, N2> with Nb + N2 = N, indexed by N2
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
    for (long n2 = 0; n2 <= p.n; ++n2) {
        const long nb = p.n - n2;
        const double q = static_cast<double>(nb - n2);
        h(n2, n2) = p.u / static_cast<double>(p.n) * q * q;
        // b† a2 : |Nb, N2> -> |Nb+1, N2-1>
        if (n2 > 0) {
            const double amp = p.j * std::sqrt(static_cast<double>((nb + 1) * n2));
            h(n2, n2 - 1) = amp;
            h(n2 - 1, n2) = amp;
        }
    }
    return full_spectrum(h).eigenvalues;
}

std::vector<long> degeneracy_clusters(const Eigen::VectorXd& eigenvalues, double cluster_tol) {
    if (cluster_tol <= 0.0)
        throw std::invalid_argument("degeneracy_clusters: cluster_tol must be positive");
    std::vector<long> sizes;
    if (eigenvalues.size() == 0) return sizes;
    long run = 1;
    for (Eigen::Index i = 1; i < eigenvalues.size(); ++i) {
        if (eigenvalues[i] - eigenvalues[i - 1] < cluster_tol) {
            ++run;
        } else {
            sizes.push_back(run);
            run = 1;
        }
    }
    sizes.push_back(run);
    return sizes;
}

}  // namespace triplewell
