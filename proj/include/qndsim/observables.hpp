#pragma once

// Two-qubit complementarity quantities: concurrence C, per-qubit visibility
// V_k and predictability P_k, single-partitedness S_k^2 = V_k^2 + P_k^2, and
// the residual of the identity C^2 + V_k^2 + P_k^2 = 1 for pure states.
// Everything is available both from a general complex statevector (operator
// averages) and in closed form from real Bell-basis coefficients.

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "qndsim/common.hpp"
#include "qndsim/statevector.hpp"

namespace qndsim {

// A state whose amplitudes are not real (after removing the global phase)
// has no Bell-coefficient representation and no single-copy concurrence
// estimator; such inputs are rejected with this error.
class RebitViolation : public std::runtime_error {
 public:
  explicit RebitViolation(const std::string& what) : std::runtime_error(what) {}
};

// Coefficients of |psi->, |psi+>, |phi->, |phi+> in that order.
struct BellCoefficients {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double eta = 0.0;

  double norm_squared() const {
    return alpha * alpha + beta * beta + gamma * gamma + eta * eta;
  }
};

namespace bell {

// Bell vectors over computational order |00>,|01>,|10>,|11>:
//   |psi+-> = (|10> +- |01>)/sqrt(2),  |phi+-> = (|11> +- |00>)/sqrt(2).
inline const std::array<std::array<double, 4>, 4>& basis_rows() {
  static const std::array<std::array<double, 4>, 4> rows{{
      {0.0, -kInvSqrt2, kInvSqrt2, 0.0},
      {0.0, kInvSqrt2, kInvSqrt2, 0.0},
      {-kInvSqrt2, 0.0, 0.0, kInvSqrt2},
      {kInvSqrt2, 0.0, 0.0, kInvSqrt2},
  }};
  return rows;
}

inline StateVector from_row(int k) {
  const auto& r = basis_rows()[static_cast<std::size_t>(k)];
  return StateVector(2, {cplx(r[0]), cplx(r[1]), cplx(r[2]), cplx(r[3])});
}

inline StateVector psi_minus() { return from_row(0); }
inline StateVector psi_plus() { return from_row(1); }
inline StateVector phi_minus() { return from_row(2); }
inline StateVector phi_plus() { return from_row(3); }

}  // namespace bell

namespace detail {
inline void require_two_qubits(const StateVector& s, const char* who) {
  if (s.n_qubits() != 2)
    throw std::invalid_argument(std::string(who) + ": two-qubit state required");
}

inline int require_particle_index(int k, const char* who) {
  if (k != 1 && k != 2)
    throw std::invalid_argument(std::string(who) + ": particle index must be 1 or 2");
  return k - 1;  // qubit index
}
}  // namespace detail

// Extracts real Bell coefficients after dividing out the phase of the
// largest-magnitude amplitude. Remaining imaginary parts above tol::rebit
// mean the state is genuinely complex.
inline BellCoefficients bell_from_computational(const StateVector& state) {
  detail::require_two_qubits(state, "bell_from_computational");
  std::size_t imax = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (std::abs(state.amplitudes()[i]) > std::abs(state.amplitudes()[imax])) imax = i;
  const cplx big = state.amplitudes()[imax];
  cplx phase = big / std::abs(big);
  // Fix the phase only modulo pi (divisor in the right half plane) so that
  // already-real states come through with their signs intact and the round
  // trip with computational_from_bell is the exact identity.
  if (phase.real() < 0.0 || (phase.real() == 0.0 && phase.imag() < 0.0)) phase = -phase;

  std::array<double, 4> re{};
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const cplx fixed = state.amplitudes()[i] / phase;
    re[i] = fixed.real();
    worst = std::max(worst, std::abs(fixed.imag()));
  }
  if (worst > tol::rebit)
    throw RebitViolation("state is not real up to a global phase (imaginary residue " +
                         std::to_string(worst) + ")");

  const auto& rows = bell::basis_rows();
  const auto dot = [&re](const std::array<double, 4>& r) {
    return r[0] * re[0] + r[1] * re[1] + r[2] * re[2] + r[3] * re[3];
  };
  return {dot(rows[0]), dot(rows[1]), dot(rows[2]), dot(rows[3])};
}

inline StateVector computational_from_bell(const BellCoefficients& c) {
  if (std::abs(c.norm_squared() - 1.0) > tol::norm)
    throw std::invalid_argument("computational_from_bell: coefficients not normalized");
  const auto& rows = bell::basis_rows();
  const double coef[4] = {c.alpha, c.beta, c.gamma, c.eta};
  std::vector<cplx> amps(4, cplx(0.0));
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 4; ++j) amps[j] += coef[k] * rows[k][j];
  return StateVector(2, std::move(amps));
}

// V_k = 2 |<chi| sigma_k^+ |chi>|. The raising operator annihilates the
// |0>-component, so the bracket reduces to a sum over amplitude pairs.
inline double visibility(const StateVector& state, int k) {
  detail::require_two_qubits(state, "visibility");
  const std::size_t mask = state.qubit_mask(detail::require_particle_index(k, "visibility"));
  cplx bracket(0.0);
  for (std::size_t i = 0; i < 4; ++i)
    if (!(i & mask))
      bracket += std::conj(state.amplitudes()[i]) * state.amplitudes()[i | mask];
  return 2.0 * std::abs(bracket);
}

// P_k = |<sigma_z on qubit k>|.
inline double predictability(const StateVector& state, int k) {
  detail::require_two_qubits(state, "predictability");
  const int q = detail::require_particle_index(k, "predictability");
  return std::abs(expectation(state, {{q, Pauli::Z}}));
}

// C = |<chi*| sigma_y x sigma_y |chi>|; note the bilinear (unconjugated)
// pairing with the transformed vector.
inline double concurrence_pure(const StateVector& state) {
  detail::require_two_qubits(state, "concurrence_pure");
  const StateVector t = apply_pauli(state, {{0, Pauli::Y}, {1, Pauli::Y}});
  cplx s(0.0);
  for (std::size_t i = 0; i < 4; ++i) s += state.amplitudes()[i] * t.amplitudes()[i];
  return std::abs(s);
}

inline double single_partitedness(const StateVector& state, int k) {
  const double v = visibility(state, k);
  const double p = predictability(state, k);
  return v * v + p * p;
}

inline double triality_residual(const StateVector& state, int k) {
  const double c = concurrence_pure(state);
  return 1.0 - (c * c + single_partitedness(state, k));
}

// (Delta sigma_x x 1)^2 + (Delta sigma_z x 1)^2 + (Delta sigma_y x sigma_y)^2
// with (Delta O)^2 = <O^2> - <O>^2; equals 2 for every real-amplitude state.
inline double variance_sum(const StateVector& state) {
  detail::require_two_qubits(state, "variance_sum");
  const PauliString observables[3] = {
      {{0, Pauli::X}}, {{0, Pauli::Z}}, {{0, Pauli::Y}, {1, Pauli::Y}}};
  double total = 0.0;
  for (const auto& o : observables) {
    const StateVector t = apply_pauli(state, o);
    const double second_moment = t.norm_squared();
    const double mean = expectation(state, o);
    total += second_moment - mean * mean;
  }
  return total;
}

struct ComplementarityReport {
  double concurrence = 0.0;
  // Index 0 holds the particle-1 value, index 1 the particle-2 value.
  std::array<double, 2> visibility{};
  std::array<double, 2> predictability{};
  std::array<double, 2> single_partitedness{};
  std::array<double, 2> triality_residual{};

  struct Errors {
    double concurrence = 0.0;
    std::array<double, 2> visibility{};
    std::array<double, 2> predictability{};
    std::array<double, 2> single_partitedness{};
    std::array<double, 2> triality_residual{};
  };
  // Present only for finite-shot estimates.
  std::optional<Errors> std_errors;
};

// Closed forms for real Bell coefficients:
//   V1 = 2|ag - eb|   V2 = 2|ag + eb|
//   P1 = 2|ab + eg|   P2 = 2|ab - eg|
//   C  = |a^2 - b^2 - g^2 + e^2|
inline ComplementarityReport observables_from_bell(const BellCoefficients& c) {
  if (std::abs(c.norm_squared() - 1.0) > tol::norm)
    throw std::invalid_argument("observables_from_bell: coefficients not normalized");
  const double a = c.alpha, b = c.beta, g = c.gamma, e = c.eta;
  ComplementarityReport r;
  r.concurrence = std::abs(a * a - b * b - g * g + e * e);
  r.visibility = {2.0 * std::abs(a * g - e * b), 2.0 * std::abs(a * g + e * b)};
  r.predictability = {2.0 * std::abs(a * b + e * g), 2.0 * std::abs(a * b - e * g)};
  for (int i = 0; i < 2; ++i) {
    r.single_partitedness[i] =
        r.visibility[i] * r.visibility[i] + r.predictability[i] * r.predictability[i];
    r.triality_residual[i] =
        1.0 - (r.concurrence * r.concurrence + r.single_partitedness[i]);
  }
  return r;
}

// Same report assembled from operator averages on the state itself; valid
// for arbitrary complex two-qubit pure states.
inline ComplementarityReport report_from_state(const StateVector& state) {
  detail::require_two_qubits(state, "report_from_state");
  ComplementarityReport r;
  r.concurrence = concurrence_pure(state);
  for (int k = 1; k <= 2; ++k) {
    r.visibility[k - 1] = visibility(state, k);
    r.predictability[k - 1] = predictability(state, k);
    r.single_partitedness[k - 1] = single_partitedness(state, k);
    r.triality_residual[k - 1] = triality_residual(state, k);
  }
  return r;
}

}  // namespace qndsim
