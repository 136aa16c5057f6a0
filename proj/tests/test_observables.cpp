#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "qndsim/qndsim.hpp"
#include "oracles.hpp"

using namespace qndsim;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kTol = 1e-12;
constexpr double kS2 = 0.70710678118654752440;

StateVector product_state(RandomStream& rng) {
  cplx a0(rng.gaussian(), rng.gaussian()), a1(rng.gaussian(), rng.gaussian());
  cplx b0(rng.gaussian(), rng.gaussian()), b1(rng.gaussian(), rng.gaussian());
  return StateVector::from_unnormalized(2, {a0 * b0, a0 * b1, a1 * b0, a1 * b1});
}

}  // namespace

TEST_CASE("Bell basis constants", "[observables]") {
  const StateVector states[4] = {bell::psi_minus(), bell::psi_plus(), bell::phi_minus(),
                                 bell::phi_plus()};
  for (int i = 0; i < 4; ++i) {
    REQUIRE_THAT(states[i].norm_squared(), WithinAbs(1.0, kTol));
    for (int j = i + 1; j < 4; ++j)
      REQUIRE(std::abs(inner_product(states[i], states[j])) < kTol);
  }
  REQUIRE_THAT(bell::psi_minus().amplitude(1).real(), WithinAbs(-kS2, kTol));
  REQUIRE_THAT(bell::psi_minus().amplitude(2).real(), WithinAbs(kS2, kTol));
  REQUIRE_THAT(bell::phi_plus().amplitude(0).real(), WithinAbs(kS2, kTol));
}

TEST_CASE("bell_from_computational", "[observables]") {
  SECTION("basis elements and fixed conversions") {
    const auto c = bell_from_computational(bell::psi_minus());
    REQUIRE_THAT(c.alpha, WithinAbs(1.0, kTol));
    REQUIRE_THAT(c.beta, WithinAbs(0.0, kTol));

    const auto c00 = bell_from_computational(StateVector::basis_state(2, 0));
    REQUIRE_THAT(c00.alpha, WithinAbs(0.0, kTol));
    REQUIRE_THAT(c00.beta, WithinAbs(0.0, kTol));
    REQUIRE_THAT(c00.gamma, WithinAbs(-kS2, kTol));
    REQUIRE_THAT(c00.eta, WithinAbs(kS2, kTol));

    const StateVector plus_plus(2, {cplx(0.5), cplx(0.5), cplx(0.5), cplx(0.5)});
    const auto cpp = bell_from_computational(plus_plus);
    REQUIRE_THAT(cpp.alpha, WithinAbs(0.0, kTol));
    REQUIRE_THAT(cpp.beta, WithinAbs(kS2, kTol));
    REQUIRE_THAT(cpp.gamma, WithinAbs(0.0, kTol));
    REQUIRE_THAT(cpp.eta, WithinAbs(kS2, kTol));
  }

  SECTION("agrees with the inverted change-of-basis matrix") {
    const auto inv = oracle::invert(oracle::bell_basis_matrix());
    RandomStream rng(201);
    for (int trial = 0; trial < 200; ++trial) {
      const auto s = random_real_state(rng);
      const oracle::Vec amps(s.amplitudes().begin(), s.amplitudes().end());
      const oracle::Vec expected = oracle::matvec(inv, amps);
      const auto got = bell_from_computational(s);
      REQUIRE_THAT(got.alpha, WithinAbs(expected[0].real(), 1e-10));
      REQUIRE_THAT(got.beta, WithinAbs(expected[1].real(), 1e-10));
      REQUIRE_THAT(got.gamma, WithinAbs(expected[2].real(), 1e-10));
      REQUIRE_THAT(got.eta, WithinAbs(expected[3].real(), 1e-10));
    }
  }

  SECTION("a global phase is divided out before the reality check") {
    RandomStream rng(202);
    for (int trial = 0; trial < 100; ++trial) {
      const auto s = random_real_state(rng);
      const double phi = 2.0 * kPi * rng.uniform();
      std::vector<cplx> rotated(s.amplitudes());
      for (auto& a : rotated) a *= cplx(std::cos(phi), std::sin(phi));
      const auto c = bell_from_computational(StateVector(2, std::move(rotated)));
      const auto ref = bell_from_computational(s);
      // The two results may differ by an overall sign: a rotation near pi
      // comes back as the negated real representative.
      const double direct = std::abs(c.alpha - ref.alpha) + std::abs(c.beta - ref.beta) +
                            std::abs(c.gamma - ref.gamma) + std::abs(c.eta - ref.eta);
      const double flipped = std::abs(c.alpha + ref.alpha) + std::abs(c.beta + ref.beta) +
                             std::abs(c.gamma + ref.gamma) + std::abs(c.eta + ref.eta);
      REQUIRE(std::min(direct, flipped) < 1e-9);
    }
  }

  SECTION("genuinely complex states are rejected") {
    const StateVector s(2, {cplx(kS2), cplx(0.0, kS2), cplx(0.0), cplx(0.0)});
    REQUIRE_THROWS_AS(bell_from_computational(s), RebitViolation);
  }
}

TEST_CASE("computational_from_bell", "[observables]") {
  SECTION("fixed conversions") {
    const auto psi_m = computational_from_bell({1.0, 0.0, 0.0, 0.0});
    REQUIRE(phase_aligned_distance(psi_m, bell::psi_minus()) < kTol);

    // Equal coefficients sum to |1> (x) (|0>+|1>)/sqrt(2).
    const auto s = computational_from_bell({0.5, 0.5, 0.5, 0.5});
    REQUIRE_THAT(s.amplitude(0).real(), WithinAbs(0.0, kTol));
    REQUIRE_THAT(s.amplitude(1).real(), WithinAbs(0.0, kTol));
    REQUIRE_THAT(s.amplitude(2).real(), WithinAbs(kS2, kTol));
    REQUIRE_THAT(s.amplitude(3).real(), WithinAbs(kS2, kTol));

    const auto zz = computational_from_bell({0.0, 0.0, -kS2, kS2});
    REQUIRE(phase_aligned_distance(zz, StateVector::basis_state(2, 0)) < kTol);
  }

  SECTION("round trip") {
    RandomStream rng(203);
    for (int trial = 0; trial < 200; ++trial) {
      const auto c = random_bell_coefficients(rng);
      const auto back = bell_from_computational(computational_from_bell(c));
      const double direct = std::abs(back.alpha - c.alpha) + std::abs(back.beta - c.beta) +
                            std::abs(back.gamma - c.gamma) + std::abs(back.eta - c.eta);
      const double flipped = std::abs(back.alpha + c.alpha) + std::abs(back.beta + c.beta) +
                             std::abs(back.gamma + c.gamma) + std::abs(back.eta + c.eta);
      REQUIRE(std::min(direct, flipped) < 1e-10);
    }
  }

  SECTION("normalization is enforced") {
    REQUIRE_THROWS_AS(computational_from_bell({1.0, 1.0, 0.0, 0.0}), std::invalid_argument);
  }
}

TEST_CASE("visibility", "[observables]") {
  SECTION("reference values") {
    const StateVector coherent(2, {cplx(kS2), cplx(0.0), cplx(kS2), cplx(0.0)});
    REQUIRE_THAT(visibility(coherent, 1), WithinAbs(1.0, kTol));
    REQUIRE_THAT(visibility(StateVector::basis_state(2, 0), 1), WithinAbs(0.0, kTol));
    REQUIRE_THAT(visibility(computational_from_bell({0.8, 0.6, 0.0, 0.0}), 1),
                 WithinAbs(0.0, kTol));
  }

  SECTION("on real states the sigma_y average vanishes, so V_k = |<sigma_x on k>|") {
    RandomStream rng(204);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto s = random_real_state(rng);
      for (int k = 1; k <= 2; ++k) {
        REQUIRE(std::abs(expectation(s, {{k - 1, Pauli::Y}})) < kTol);
        REQUIRE_THAT(visibility(s, k),
                     WithinAbs(std::abs(expectation(s, {{k - 1, Pauli::X}})), kTol));
      }
    }
  }

  SECTION("validation") {
    REQUIRE_THROWS_AS(visibility(StateVector::basis_state(2, 0), 0), std::invalid_argument);
    REQUIRE_THROWS_AS(visibility(StateVector::basis_state(2, 0), 3), std::invalid_argument);
    REQUIRE_THROWS_AS(visibility(StateVector::basis_state(1, 0), 1), std::invalid_argument);
  }
}

TEST_CASE("predictability", "[observables]") {
  const StateVector zero_random(2, {cplx(0.6), cplx(0.8), cplx(0.0), cplx(0.0)});
  REQUIRE_THAT(predictability(zero_random, 1), WithinAbs(1.0, kTol));

  const StateVector coherent(2, {cplx(kS2), cplx(0.0), cplx(kS2), cplx(0.0)});
  REQUIRE_THAT(predictability(coherent, 1), WithinAbs(0.0, kTol));

  REQUIRE_THAT(predictability(computational_from_bell({0.8, 0.6, 0.0, 0.0}), 1),
               WithinAbs(0.96, kTol));
}

TEST_CASE("concurrence_pure", "[observables]") {
  SECTION("reference values") {
    REQUIRE_THAT(concurrence_pure(bell::psi_minus()), WithinAbs(1.0, kTol));
    REQUIRE_THAT(concurrence_pure(StateVector::basis_state(2, 0)), WithinAbs(0.0, kTol));
    REQUIRE_THAT(concurrence_pure(computational_from_bell({0.8, 0.6, 0.0, 0.0})),
                 WithinAbs(0.28, kTol));
  }

  SECTION("matches 2|c00 c11 - c01 c10| on complex states") {
    RandomStream rng(205);
    for (int trial = 0; trial < 500; ++trial) {
      const auto s = random_complex_state(rng, 2);
      const auto& c = s.amplitudes();
      REQUIRE_THAT(concurrence_pure(s), WithinAbs(2.0 * std::abs(c[0] * c[3] - c[1] * c[2]), kTol));
    }
  }
}

TEST_CASE("observables_from_bell", "[observables]") {
  SECTION("reference tuples") {
    const auto bell_state = observables_from_bell({1.0, 0.0, 0.0, 0.0});
    REQUIRE_THAT(bell_state.concurrence, WithinAbs(1.0, kTol));
    for (int i = 0; i < 2; ++i) {
      REQUIRE_THAT(bell_state.visibility[i], WithinAbs(0.0, kTol));
      REQUIRE_THAT(bell_state.predictability[i], WithinAbs(0.0, kTol));
      REQUIRE_THAT(bell_state.triality_residual[i], WithinAbs(0.0, kTol));
    }

    const auto logical = observables_from_bell({0.5, 0.5, 0.5, 0.5});
    REQUIRE_THAT(logical.concurrence, WithinAbs(0.0, kTol));
    REQUIRE_THAT(logical.predictability[0], WithinAbs(1.0, kTol));
    REQUIRE_THAT(logical.visibility[0], WithinAbs(0.0, kTol));
    REQUIRE_THAT(logical.predictability[1], WithinAbs(0.0, kTol));
    REQUIRE_THAT(logical.visibility[1], WithinAbs(1.0, kTol));

    const auto r = observables_from_bell({0.8, 0.6, 0.0, 0.0});
    REQUIRE_THAT(r.concurrence, WithinAbs(0.28, kTol));
    REQUIRE_THAT(r.predictability[0], WithinAbs(0.96, kTol));
    REQUIRE_THAT(r.visibility[0], WithinAbs(0.0, kTol));
    REQUIRE_THAT(r.single_partitedness[0], WithinAbs(0.9216, kTol));
    REQUIRE_THAT(r.triality_residual[0], WithinAbs(0.0, kTol));
  }

  SECTION("closed forms agree with operator averages") {
    RandomStream rng(206);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto c = random_bell_coefficients(rng);
      const auto closed = observables_from_bell(c);
      const auto direct = report_from_state(computational_from_bell(c));
      REQUIRE_THAT(closed.concurrence, WithinAbs(direct.concurrence, kTol));
      for (int i = 0; i < 2; ++i) {
        REQUIRE_THAT(closed.visibility[i], WithinAbs(direct.visibility[i], kTol));
        REQUIRE_THAT(closed.predictability[i], WithinAbs(direct.predictability[i], kTol));
        REQUIRE_THAT(closed.single_partitedness[i],
                     WithinAbs(direct.single_partitedness[i], kTol));
      }
    }
  }

  SECTION("normalization is enforced") {
    REQUIRE_THROWS_AS(observables_from_bell({0.9, 0.0, 0.0, 0.0}), std::invalid_argument);
  }
}

TEST_CASE("single_partitedness and triality_residual", "[observables]") {
  SECTION("product states have unit single-particle content") {
    RandomStream rng(207);
    for (int trial = 0; trial < 200; ++trial) {
      const auto s = product_state(rng);
      REQUIRE_THAT(single_partitedness(s, 1), WithinAbs(1.0, kTol));
      REQUIRE_THAT(single_partitedness(s, 2), WithinAbs(1.0, kTol));
    }
  }

  SECTION("maximally entangled states have none") {
    REQUIRE_THAT(single_partitedness(bell::phi_plus(), 1), WithinAbs(0.0, kTol));
    REQUIRE_THAT(single_partitedness(computational_from_bell({0.8, 0.6, 0.0, 0.0}), 1),
                 WithinAbs(0.9216, kTol));
  }

  SECTION("the residual vanishes for arbitrary complex pure states") {
    RandomStream rng(208);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto s = random_complex_state(rng, 2);
      REQUIRE(std::abs(triality_residual(s, 1)) < kTol);
      REQUIRE(std::abs(triality_residual(s, 2)) < kTol);
    }
    REQUIRE_THAT(triality_residual(bell::phi_minus(), 2), WithinAbs(0.0, kTol));
  }
}

TEST_CASE("variance_sum", "[observables]") {
  REQUIRE_THAT(variance_sum(StateVector::basis_state(2, 0)), WithinAbs(2.0, kTol));
  REQUIRE_THAT(variance_sum(bell::psi_minus()), WithinAbs(2.0, kTol));

  RandomStream rng(209);
  for (int trial = 0; trial < 1000; ++trial)
    REQUIRE_THAT(variance_sum(random_real_state(rng)), WithinAbs(2.0, kTol));
}

TEST_CASE("local unitary invariance", "[observables]") {
  SECTION("concurrence and single-partitedness are invariant") {
    RandomStream rng(210);
    for (int trial = 0; trial < 200; ++trial) {
      const auto s = random_complex_state(rng, 2);
      auto rotated = apply_single(s, rotation_gate(random_rotation_angles(rng)), 0);
      rotated = apply_single(rotated, rotation_gate(random_rotation_angles(rng)), 1);
      REQUIRE_THAT(concurrence_pure(rotated), WithinAbs(concurrence_pure(s), kTol));
      for (int k = 1; k <= 2; ++k)
        REQUIRE_THAT(single_partitedness(rotated, k),
                     WithinAbs(single_partitedness(s, k), kTol));
    }
  }

  SECTION("visibility and predictability trade places under a quarter y-turn") {
    const auto zz = StateVector::basis_state(2, 0);
    REQUIRE_THAT(predictability(zz, 1), WithinAbs(1.0, kTol));
    REQUIRE_THAT(visibility(zz, 1), WithinAbs(0.0, kTol));
    const auto turned = apply_single(zz, rotation_gate({0.0, kPi / 2, 0.0}), 0);
    REQUIRE_THAT(predictability(turned, 1), WithinAbs(0.0, kTol));
    REQUIRE_THAT(visibility(turned, 1), WithinAbs(1.0, kTol));
  }
}

TEST_CASE("uncertainty product bound", "[observables]") {
  // Delta(sigma_x (x) 1) * Delta(sigma_z (x) 1) >= |<sigma_y (x) 1>|, with
  // a vanishing right-hand side on real states.
  RandomStream rng(211);
  const auto dev = [](const StateVector& s, const PauliString& o) {
    const double m = expectation(s, o);
    return std::sqrt(std::max(0.0, 1.0 - m * m));
  };
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = random_complex_state(rng, 2);
    const double lhs = dev(s, {{0, Pauli::X}}) * dev(s, {{0, Pauli::Z}});
    const double rhs = std::abs(expectation(s, {{0, Pauli::Y}}));
    REQUIRE(lhs >= rhs - kTol);
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_real_state(rng);
    REQUIRE(std::abs(expectation(s, {{0, Pauli::Y}})) < kTol);
  }
}
