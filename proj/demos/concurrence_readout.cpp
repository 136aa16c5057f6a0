// Runs the single-ancilla concurrence circuit on one state, both exactly and
// with finite shots, and prints the readout next to the closed-form value.

#include <qndsim/qndsim.hpp>

#include <cstdio>

using namespace qndsim;

int main() {
    const BellCoefficients bc{0.8, 0.6, 0.0, 0.0};
    const StateVector state = computational_from_bell(bc);

    std::printf("input coefficients: alpha=%.3f beta=%.3f gamma=%.3f eta=%.3f\n", bc.alpha,
                bc.beta, bc.gamma, bc.eta);
    std::printf("closed-form concurrence: %.6f\n\n", observables_from_bell(bc).concurrence);

    const Circuit circuit = concurrence_circuit();
    const RunResult exact = run_exact(circuit, state);
    std::printf("exact ancilla distribution:\n");
    double p1 = 0.0, p0 = 0.0;
    for (const auto& br : exact.branches) {
        std::printf("  ancilla %s  p = %.6f  branch concurrence = %.6f\n", br.bits.c_str(),
                    br.probability, concurrence_pure(br.system_state));
        (br.bits == "1" ? p1 : p0) = br.probability;
    }
    std::printf("readout |p1 - p0| = %.6f\n\n", std::abs(p1 - p0));

    const std::uint64_t shots = 100000;
    const CountsRecord rec = sample(circuit, state, shots, /*seed=*/7);
    std::printf("%llu shots (seed 7):\n", static_cast<unsigned long long>(shots));
    for (const auto& [bits, n] : rec.counts) {
        std::printf("  ancilla %s  count = %llu\n", bits.c_str(),
                    static_cast<unsigned long long>(n));
    }
    const EstimateWithError est = estimate_concurrence_single_ancilla(rec);
    std::printf("estimated concurrence = %.6f +/- %.6f\n", est.value, est.std_error);
    return 0;
}
