#pragma once

#include <cstdint>
#include <vector>

namespace triplewell {

// Occupation triple |n1, n2, n3> with n1+n2+n3 = N for the basis it belongs to.
struct FockState {
    long n1 = 0;
    long n2 = 0;
    long n3 = 0;

    long total() const { return n1 + n2 + n3; }
    bool operator==(const FockState&) const = default;
};

// Fock basis of three wells at fixed total boson number N.
// Dimension D = (N+1)(N+2)/2. Canonical order: descending n1, then descending
// n2 (n3 determined), so |N,0,0> sits at index 0.
class Basis {
  public:
    explicit Basis(long n);

    long total() const { return n_; }
    long dimension() const { return static_cast<long>(states_.size()); }
    const std::vector<FockState>& states() const { return states_; }
    const FockState& state(long i) const { return states_[static_cast<std::size_t>(i)]; }

    // Closed-form rank; throws std::invalid_argument if s does not sum to N.
    long index_of(const FockState& s) const;

  private:
    long n_;
    std::vector<FockState> states_;
};

// D = (N+1)(N+2)/2 in exact integer arithmetic.
long basis_dimension(long n);

}  // namespace triplewell
