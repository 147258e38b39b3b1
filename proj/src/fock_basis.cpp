#include "triplewell/fock_basis.hpp"

#include <stdexcept>

namespace triplewell {

long basis_dimension(long n) {
    if (n < 0) throw std::invalid_argument("basis_dimension: N must be >= 0");
    return (n + 1) * (n + 2) / 2;
}

Basis::Basis(long n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Basis: N must be >= 0");
    states_.reserve(static_cast<std::size_t>(basis_dimension(n)));
    for (long n1 = n; n1 >= 0; --n1)
        for (long n2 = n - n1; n2 >= 0; --n2)
            states_.push_back(FockState{n1, n2, n - n1 - n2});
}

long Basis::index_of(const FockState& s) const {
    if (s.n1 < 0 || s.n2 < 0 || s.n3 < 0 || s.total() != n_)
        throw std::invalid_argument("Basis::index_of: state not in basis");
    // States with larger n1 precede; block for a given n1 has N-n1+1 entries.
    const long r = n_ - s.n1;
    return r * (r + 1) / 2 + (r - s.n2);
}

}  // namespace triplewell
