#pragma once

#include <cmath>
#include <stdexcept>

namespace triplewell {

// Couplings of the tilted triple-well Hamiltonian and the boson count.
// Energy units are set by whichever coupling the caller treats as unit.
struct ModelParams {
    double u = 0.0;        // interaction strength (rescaled by N in the Hamiltonian)
    double j = 0.0;        // tunneling amplitude
    double epsilon = 0.0;  // tilt between wells 1 and 3
    long n = 1;            // total boson number

    void validate() const {
        if (n < 1) throw std::invalid_argument("ModelParams: N must be >= 1");
        if (!std::isfinite(u) || !std::isfinite(j) || !std::isfinite(epsilon))
            throw std::invalid_argument("ModelParams: couplings must be finite");
    }

    // The sign of J does not affect spectra or stationary energies; canonical
    // reports use |J|. Raw values are accepted everywhere.
    ModelParams canonicalized() const {
        ModelParams p = *this;
        p.j = std::abs(p.j);
        return p;
    }
};

}  // namespace triplewell
