#pragma once

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "triplewell/fock_basis.hpp"
#include "triplewell/model.hpp"

namespace triplewell {

struct EigensolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hamiltonian in the Fock basis. Diagonal: (U/N)(n1-n2+n3)^2 + eps(n3-n1).
// Hopping: (J/sqrt 2) sqrt((n1+1) n2) between |n1,n2,n3> and |n1+1,n2-1,n3>,
// and (J/sqrt 2) sqrt((n2+1) n3) between |n1,n2,n3> and |n1,n2+1,n3-1>.
// Entries are assigned symmetrically, so the matrix is bit-exactly symmetric.
Eigen::MatrixXd build_hamiltonian(const ModelParams& p, const Basis& basis);

// All eigenpairs, eigenvalues ascending, eigenvectors orthonormal columns.
// Each eigenvector is sign-fixed so its first nonzero component is positive.
struct SpectrumResult {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
};

// Dense symmetric eigensolve; throws EigensolverError on non-convergence.
SpectrumResult full_spectrum(const Eigen::MatrixXd& h);

struct GroundObservables {
    double e0_per_particle = 0.0;
    double gap1 = 0.0;  // E1 - E0
    double gap2 = 0.0;  // E2 - E0
    std::array<double, 3> occ{};  // <N1>, <N2>, <N3> in the ground state
    bool degenerate = false;      // gap1 below the degeneracy threshold
};

GroundObservables ground_observables(const ModelParams& p);

// Ground-state occupation averages for an arbitrary normalized state vector.
std::array<double, 3> occupation_averages(const Basis& basis, const Eigen::VectorXd& v);

// |<a|b>| for normalized vectors of equal dimension.
double fidelity(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// Exhaustive integer minimization of the diagonal Fock energy at J=0.
// Ties resolve to the lowest basis index. Returns (state, energy per particle).
std::pair<FockState, double> fock_ground_j0(const ModelParams& p);

// Spectrum of the equivalent double-well Hamiltonian at eps=0:
// H = (U/N)(Nb - N2)^2 + J (b†a2 + a2†b) on the (N+1)-dim basis |Nb, N2>.
Eigen::VectorXd double_well_spectrum(const ModelParams& p);

// Partitions an ascending spectrum into maximal runs whose consecutive gaps
// stay below cluster_tol; returns run sizes in energy order.
std::vector<long> degeneracy_clusters(const Eigen::VectorXd& eigenvalues, double cluster_tol);

}  // namespace triplewell
