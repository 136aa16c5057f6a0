#pragma once

// Dense statevector simulation of small qubit registers (1..8 qubits).
// Qubit 0 is the leftmost ket label and the most significant bit of a basis
// index: |q0 q1 ... q_{n-1}> sits at index sum q_i * 2^(n-1-i). All
// operations are pure functions; a StateVector is immutable after
// construction and always normalized within tol::norm.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qndsim/common.hpp"

namespace qndsim {

class StateVector {
 public:
  StateVector(int n_qubits, std::vector<cplx> amplitudes)
      : n_(check_shape(n_qubits, amplitudes.size())), amps_(std::move(amplitudes)) {
    const double n2 = norm_squared();
    if (std::abs(n2 - 1.0) > tol::norm)
      throw std::invalid_argument("StateVector: amplitudes not normalized (|norm^2 - 1| = " +
                                  std::to_string(std::abs(n2 - 1.0)) + ")");
  }

  static StateVector basis_state(int n_qubits, std::size_t index) {
    const std::size_t d = dim_for(n_qubits);
    if (index >= d) throw std::out_of_range("basis_state: index out of range");
    std::vector<cplx> a(d, cplx(0.0));
    a[index] = 1.0;
    return StateVector(unchecked{}, n_qubits, std::move(a));
  }

  static StateVector from_unnormalized(int n_qubits, std::vector<cplx> amplitudes) {
    check_shape(n_qubits, amplitudes.size());
    double n2 = 0.0;
    for (const auto& a : amplitudes) n2 += std::norm(a);
    if (n2 < 1e-24) throw std::invalid_argument("from_unnormalized: zero vector");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : amplitudes) a *= inv;
    return StateVector(unchecked{}, n_qubits, std::move(amplitudes));
  }

  int n_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }

  cplx amplitude(std::size_t index) const {
    if (index >= amps_.size()) throw std::out_of_range("amplitude: index out of range");
    return amps_[index];
  }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
  }

  // Mask selecting qubit q in a basis index.
  std::size_t qubit_mask(int q) const {
    if (q < 0 || q >= n_) throw std::out_of_range("qubit index out of range");
    return std::size_t{1} << (n_ - 1 - q);
  }

 private:
  struct unchecked {};
  StateVector(unchecked, int n_qubits, std::vector<cplx> amplitudes)
      : n_(n_qubits), amps_(std::move(amplitudes)) {}

  static std::size_t dim_for(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 8)
      throw std::invalid_argument("StateVector: n_qubits must be in 1..8");
    return std::size_t{1} << n_qubits;
  }

  static int check_shape(int n_qubits, std::size_t len) {
    if (len != dim_for(n_qubits))
      throw std::invalid_argument("StateVector: amplitude count != 2^n_qubits");
    return n_qubits;
  }

  int n_;
  std::vector<cplx> amps_;

  friend class detail_access;
};

// Grants the library's internal algorithms (measurement collapse, Pauli
// application) access to the unchecked constructor. Not part of the API.
class detail_access {
 public:
  static StateVector make(int n_qubits, std::vector<cplx> amplitudes) {
    return StateVector(StateVector::unchecked{}, n_qubits, std::move(amplitudes));
  }
};

struct SingleQubitGate {
  std::array<cplx, 4> m;  // row major: [m00 m01; m10 m11]

  bool is_unitary(double tolerance = tol::exact) const {
    // G^dagger G == I, elementwise.
    const cplx g00 = std::conj(m[0]) * m[0] + std::conj(m[2]) * m[2];
    const cplx g01 = std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
    const cplx g10 = std::conj(m[1]) * m[0] + std::conj(m[3]) * m[2];
    const cplx g11 = std::conj(m[1]) * m[1] + std::conj(m[3]) * m[3];
    return std::abs(g00 - 1.0) <= tolerance && std::abs(g01) <= tolerance &&
           std::abs(g10) <= tolerance && std::abs(g11 - 1.0) <= tolerance;
  }
};

namespace gates {
inline SingleQubitGate identity() { return {{cplx(1), cplx(0), cplx(0), cplx(1)}}; }
inline SingleQubitGate pauli_x() { return {{cplx(0), cplx(1), cplx(1), cplx(0)}}; }
inline SingleQubitGate pauli_y() {
  return {{cplx(0), cplx(0, -1), cplx(0, 1), cplx(0)}};
}
inline SingleQubitGate pauli_z() { return {{cplx(1), cplx(0), cplx(0), cplx(-1)}}; }
// Raising operator; not unitary, used only inside observable formulas.
inline SingleQubitGate sigma_plus() { return {{cplx(0), cplx(1), cplx(0), cplx(0)}}; }
}  // namespace gates

// exp(-i sigma.theta / 2) via the closed form
// cos(|theta|/2) I - i sin(|theta|/2) (theta_hat . sigma).
inline SingleQubitGate rotation_gate(const Vec3& theta) {
  for (double c : theta)
    if (!std::isfinite(c)) throw std::invalid_argument("rotation_gate: non-finite angle");
  const double a = std::sqrt(theta[0] * theta[0] + theta[1] * theta[1] + theta[2] * theta[2]);
  if (a == 0.0) return gates::identity();
  const double nx = theta[0] / a, ny = theta[1] / a, nz = theta[2] / a;
  const double c = std::cos(0.5 * a), s = std::sin(0.5 * a);
  const cplx i(0.0, 1.0);
  return {{c - i * s * nz, -i * s * cplx(nx, -ny),  //
           -i * s * cplx(nx, ny), c + i * s * nz}};
}

inline StateVector apply_single(const StateVector& state, const SingleQubitGate& gate,
                                int target) {
  if (target < 0 || target >= state.n_qubits())
    throw std::out_of_range("apply_single: target out of range");
  if (!gate.is_unitary())
    throw std::invalid_argument("apply_single: gate is not unitary");
  const std::size_t mask = state.qubit_mask(target);
  std::vector<cplx> out(state.amplitudes());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i & mask) continue;
    const cplx a0 = out[i], a1 = out[i | mask];
    out[i] = gate.m[0] * a0 + gate.m[1] * a1;
    out[i | mask] = gate.m[2] * a0 + gate.m[3] * a1;
  }
  return detail_access::make(state.n_qubits(), std::move(out));
}

inline StateVector apply_cnot(const StateVector& state, int control, int target) {
  if (control < 0 || control >= state.n_qubits() || target < 0 || target >= state.n_qubits())
    throw std::out_of_range("apply_cnot: qubit index out of range");
  if (control == target) throw std::invalid_argument("apply_cnot: control equals target");
  const std::size_t cmask = state.qubit_mask(control);
  const std::size_t tmask = state.qubit_mask(target);
  std::vector<cplx> out(state.amplitudes());
  for (std::size_t i = 0; i < out.size(); ++i)
    if ((i & cmask) && !(i & tmask)) std::swap(out[i], out[i | tmask]);
  return detail_access::make(state.n_qubits(), std::move(out));
}

enum class Pauli { I, X, Y, Z };

// One factor per distinct qubit; identity on unlisted qubits.
using PauliString = std::vector<std::pair<int, Pauli>>;

namespace detail {
inline void apply_pauli_in_place(std::vector<cplx>& a, std::size_t mask, Pauli p) {
  const cplx i(0.0, 1.0);
  for (std::size_t idx = 0; idx < a.size(); ++idx) {
    if (idx & mask) continue;
    cplx& a0 = a[idx];
    cplx& a1 = a[idx | mask];
    switch (p) {
      case Pauli::I: break;
      case Pauli::X: std::swap(a0, a1); break;
      case Pauli::Y: {
        // sigma_y |0> = i|1>, sigma_y |1> = -i|0>
        const cplx b0 = -i * a1, b1 = i * a0;
        a0 = b0;
        a1 = b1;
        break;
      }
      case Pauli::Z: a1 = -a1; break;
    }
  }
}

inline void validate_pauli_string(const StateVector& state, const PauliString& ops) {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].first < 0 || ops[i].first >= state.n_qubits())
      throw std::out_of_range("pauli string: qubit index out of range");
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (ops[i].first == ops[j].first)
        throw std::invalid_argument("pauli string: duplicate qubit index");
  }
}
}  // namespace detail

inline StateVector apply_pauli(const StateVector& state, const PauliString& ops) {
  detail::validate_pauli_string(state, ops);
  std::vector<cplx> a(state.amplitudes());
  for (const auto& [q, p] : ops) detail::apply_pauli_in_place(a, state.qubit_mask(q), p);
  return detail_access::make(state.n_qubits(), std::move(a));
}

inline cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("inner_product: dimension mismatch");
  cplx s(0.0);
  for (std::size_t i = 0; i < a.dim(); ++i)
    s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  return s;
}

// <state| P |state> for a Hermitian Pauli string; the imaginary residue must
// be numerical noise only.
inline double expectation(const StateVector& state, const PauliString& ops) {
  const StateVector transformed = apply_pauli(state, ops);
  const cplx e = inner_product(state, transformed);
  if (std::abs(e.imag()) > tol::exact)
    throw std::logic_error("expectation: imaginary residue above tolerance");
  return e.real();
}

inline std::string bits_to_string(std::size_t value, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i)
    if (value & (std::size_t{1} << (width - 1 - i))) s[i] = '1';
  return s;
}

struct OutcomeEntry {
  std::string bits;  // one char per measured qubit, in measurement order
  double probability;
  StateVector post_state;
};

struct OutcomeDistribution {
  std::vector<int> measured_qubits;
  std::vector<OutcomeEntry> entries;  // ascending by bitstring value; empty outcomes omitted
};

// Born-rule projective measurement of the given qubits. Post states are
// renormalized projections onto the recorded bitstring.
inline OutcomeDistribution measure(const StateVector& state, const std::vector<int>& targets) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= state.n_qubits())
      throw std::out_of_range("measure: target out of range");
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] == targets[j]) throw std::invalid_argument("measure: duplicate target");
  }
  const std::size_t k = targets.size();
  std::vector<std::size_t> masks(k);
  for (std::size_t j = 0; j < k; ++j) masks[j] = state.qubit_mask(targets[j]);

  const std::size_t n_outcomes = std::size_t{1} << k;
  std::vector<double> prob(n_outcomes, 0.0);
  const auto outcome_of = [&](std::size_t idx) {
    std::size_t o = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (idx & masks[j]) o |= std::size_t{1} << (k - 1 - j);
    return o;
  };
  for (std::size_t idx = 0; idx < state.dim(); ++idx)
    prob[outcome_of(idx)] += std::norm(state.amplitudes()[idx]);

  OutcomeDistribution dist;
  dist.measured_qubits = targets;
  for (std::size_t o = 0; o < n_outcomes; ++o) {
    if (prob[o] < tol::branch_cutoff) continue;
    std::vector<cplx> post(state.dim(), cplx(0.0));
    const double inv = 1.0 / std::sqrt(prob[o]);
    for (std::size_t idx = 0; idx < state.dim(); ++idx)
      if (outcome_of(idx) == o) post[idx] = state.amplitudes()[idx] * inv;
    dist.entries.push_back(
        {bits_to_string(o, k), prob[o], detail_access::make(state.n_qubits(), std::move(post))});
  }
  return dist;
}

// Residual norm of (a - e^{i phi} b) minimized over the global phase phi.
inline double phase_aligned_distance(const StateVector& a, const StateVector& b) {
  const cplx ov = inner_product(b, a);
  cplx phase(1.0, 0.0);
  if (std::abs(ov) > 0.0) phase = ov / std::abs(ov);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    s += std::norm(a.amplitudes()[i] - phase * b.amplitudes()[i]);
  return std::sqrt(s);
}

}  // namespace qndsim
