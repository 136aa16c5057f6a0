#pragma once

// Finite-shot sampling of circuit runs and the estimators that map ancilla
// counts back to concurrence, predictability, and visibility. Sampling is
// inverse-CDF per shot against the exact outcome distribution, addressed by
// (seed, shot index), so shard boundaries and execution order cannot change
// the aggregate counts.

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qndsim/circuits.hpp"
#include "qndsim/rng.hpp"
#include "qndsim/statevector.hpp"

namespace qndsim {

struct CountsRecord {
  CircuitMode mode;
  std::uint64_t shots = 0;
  std::map<std::string, std::uint64_t> counts;  // bitstring -> occurrences
  std::uint64_t seed = 0;
};

struct EstimateWithError {
  double value = 0.0;
  double std_error = 0.0;  // 1-sigma, binomial per cell, summed linearly
};

// Shots [first_shot, last_shot) of the full experiment; sampling the ranges
// of a partition and merging reproduces the full record bit for bit.
inline CountsRecord sample_range(const Circuit& circuit, const StateVector& input,
                                 std::uint64_t first_shot, std::uint64_t last_shot,
                                 std::uint64_t seed) {
  if (last_shot <= first_shot)
    throw std::invalid_argument("sample_range: empty shot range");
  const RunResult run = run_exact(circuit, input);
  std::vector<double> cumulative;
  cumulative.reserve(run.branches.size());
  double acc = 0.0;
  for (const auto& b : run.branches) {
    acc += b.probability;
    cumulative.push_back(acc);
  }
  CountsRecord record;
  record.mode = circuit.mode;
  record.shots = last_shot - first_shot;
  record.seed = seed;
  for (std::uint64_t shot = first_shot; shot < last_shot; ++shot) {
    const double u = uniform_at(seed, shot);
    std::size_t pick = run.branches.size() - 1;
    for (std::size_t i = 0; i < cumulative.size(); ++i)
      if (u < cumulative[i]) {
        pick = i;
        break;
      }
    ++record.counts[run.branches[pick].bits];
  }
  return record;
}

inline CountsRecord sample(const Circuit& circuit, const StateVector& input,
                           std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
  return sample_range(circuit, input, 0, shots, seed);
}

inline CountsRecord merge_counts(const CountsRecord& a, const CountsRecord& b) {
  if (a.mode.kind != b.mode.kind || a.seed != b.seed)
    throw std::invalid_argument("merge_counts: records from different experiments");
  CountsRecord out = a;
  out.shots += b.shots;
  for (const auto& [bits, n] : b.counts) out.counts[bits] += n;
  return out;
}

namespace detail {

inline void require_counts(const CountsRecord& r, std::size_t bit_width, const char* who) {
  if (r.shots == 0) throw std::invalid_argument(std::string(who) + ": empty record");
  std::uint64_t total = 0;
  for (const auto& [bits, n] : r.counts) {
    if (bits.size() != bit_width)
      throw std::invalid_argument(std::string(who) + ": expected " +
                                  std::to_string(bit_width) + "-bit outcomes");
    for (char c : bits)
      if (c != '0' && c != '1')
        throw std::invalid_argument(std::string(who) + ": malformed bitstring");
    total += n;
  }
  if (total != r.shots)
    throw std::invalid_argument(std::string(who) + ": counts do not sum to shots");
}

inline double frequency(const CountsRecord& r, const std::string& key) {
  const auto it = r.counts.find(key);
  return it == r.counts.end()
             ? 0.0
             : static_cast<double>(it->second) / static_cast<double>(r.shots);
}

inline double cell_error(double f, double shots) { return std::sqrt(f * (1.0 - f) / shots); }

// |sum_plus - sum_minus| over the four two-bit cells, with the per-cell
// binomial errors added linearly.
inline EstimateWithError two_bit_contrast(const CountsRecord& r, bool plus00, bool plus01,
                                          bool plus10, bool plus11) {
  const double n = static_cast<double>(r.shots);
  const double f[4] = {frequency(r, "00"), frequency(r, "01"), frequency(r, "10"),
                       frequency(r, "11")};
  const bool plus[4] = {plus00, plus01, plus10, plus11};
  double signed_sum = 0.0, err = 0.0;
  for (int i = 0; i < 4; ++i) {
    signed_sum += plus[i] ? f[i] : -f[i];
    err += cell_error(f[i], n);
  }
  return {std::abs(signed_sum), err};
}

}  // namespace detail

// Single-ancilla concurrence readout: C ~ |f1 - f0|.
inline EstimateWithError estimate_concurrence_single_ancilla(const CountsRecord& r) {
  detail::require_counts(r, 1, "estimate_concurrence_single_ancilla");
  const double n = static_cast<double>(r.shots);
  const double f1 = detail::frequency(r, "1"), f0 = detail::frequency(r, "0");
  return {std::abs(f1 - f0), detail::cell_error(f1, n) + detail::cell_error(f0, n)};
}

// Universal-circuit concurrence readout: the odd-parity cells carry the
// psi-class probability, the even-parity cells the phi-class.
inline EstimateWithError estimate_concurrence_universal(const CountsRecord& r) {
  detail::require_counts(r, 2, "estimate_concurrence_universal");
  if (r.mode.kind != CircuitMode::Kind::Concurrence)
    throw std::invalid_argument("estimate_concurrence_universal: wrong circuit mode");
  return detail::two_bit_contrast(r, false, true, true, false);
}

// P1 contrasts the first ancilla bit, P2 the second.
inline std::array<EstimateWithError, 2> estimate_predictabilities(const CountsRecord& r) {
  detail::require_counts(r, 2, "estimate_predictabilities");
  if (r.mode.kind != CircuitMode::Kind::Predictability)
    throw std::invalid_argument("estimate_predictabilities: wrong circuit mode");
  return {detail::two_bit_contrast(r, true, true, false, false),
          detail::two_bit_contrast(r, true, false, true, false)};
}

// Same contrasts as the predictabilities, read from the visibility setting.
inline std::array<EstimateWithError, 2> estimate_visibilities(const CountsRecord& r) {
  detail::require_counts(r, 2, "estimate_visibilities");
  if (r.mode.kind != CircuitMode::Kind::Visibility)
    throw std::invalid_argument("estimate_visibilities: wrong circuit mode");
  return {detail::two_bit_contrast(r, true, true, false, false),
          detail::two_bit_contrast(r, true, false, true, false)};
}

// Assembles the full report from the three experiments run on one input
// state. Derived errors: se(X^2) = 2|X| se(X), sums added linearly.
inline ComplementarityReport reconstruct_complementarity(const CountsRecord& c_counts,
                                                         const CountsRecord& p_counts,
                                                         const CountsRecord& v_counts) {
  if (c_counts.mode.kind != CircuitMode::Kind::Concurrence)
    throw std::invalid_argument("reconstruct_complementarity: first record must be concurrence");
  bool single_bit = true;
  for (const auto& [bits, n] : c_counts.counts) {
    (void)n;
    single_bit = bits.size() == 1;
    break;
  }
  const EstimateWithError c = single_bit ? estimate_concurrence_single_ancilla(c_counts)
                                         : estimate_concurrence_universal(c_counts);
  const auto p = estimate_predictabilities(p_counts);
  const auto v = estimate_visibilities(v_counts);

  ComplementarityReport report;
  ComplementarityReport::Errors errors;
  report.concurrence = c.value;
  errors.concurrence = c.std_error;
  for (int i = 0; i < 2; ++i) {
    report.visibility[i] = v[i].value;
    report.predictability[i] = p[i].value;
    errors.visibility[i] = v[i].std_error;
    errors.predictability[i] = p[i].std_error;
    report.single_partitedness[i] =
        v[i].value * v[i].value + p[i].value * p[i].value;
    errors.single_partitedness[i] =
        2.0 * v[i].value * v[i].std_error + 2.0 * p[i].value * p[i].std_error;
    report.triality_residual[i] =
        1.0 - (c.value * c.value + report.single_partitedness[i]);
    errors.triality_residual[i] =
        2.0 * c.value * c.std_error + errors.single_partitedness[i];
  }
  report.std_errors = errors;
  return report;
}

}  // namespace qndsim
