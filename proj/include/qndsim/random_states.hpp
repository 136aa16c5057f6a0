#pragma once

// Random inputs for property tests and the verification suite: real states
// from normalized real Gaussian vectors, complex states from normalized
// complex Gaussian vectors (rotation invariant), and random rotations.

#include <cmath>
#include <cstddef>
#include <vector>

#include "qndsim/common.hpp"
#include "qndsim/observables.hpp"
#include "qndsim/rng.hpp"
#include "qndsim/statevector.hpp"

namespace qndsim {

inline BellCoefficients random_bell_coefficients(RandomStream& rng) {
  double v[4];
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& x : v) {
      x = rng.gaussian();
      n2 += x * x;
    }
  } while (n2 < 1e-12);
  const double inv = 1.0 / std::sqrt(n2);
  return {v[0] * inv, v[1] * inv, v[2] * inv, v[3] * inv};
}

inline StateVector random_real_state(RandomStream& rng) {
  return computational_from_bell(random_bell_coefficients(rng));
}

inline StateVector random_complex_state(RandomStream& rng, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<cplx> amps(dim);
  for (auto& a : amps) a = cplx(rng.gaussian(), rng.gaussian());
  return StateVector::from_unnormalized(n_qubits, std::move(amps));
}

inline Vec3 random_rotation_angles(RandomStream& rng) {
  return {rng.gaussian(), rng.gaussian(), rng.gaussian()};
}

}  // namespace qndsim
