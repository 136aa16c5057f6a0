// Tabulates C, V_k, P_k along the one-parameter family (cos t, sin t, 0, 0)
// and checks that C^2 + V_k^2 + P_k^2 stays pinned at 1.

#include <qndsim/qndsim.hpp>

#include <cmath>
#include <cstdio>

using namespace qndsim;

int main() {
    std::printf("%8s %10s %10s %10s %10s %10s %12s\n", "t/pi", "C", "V1", "P1", "V2", "P2",
                "residual1");
    const int points = 9;
    for (int i = 0; i < points; ++i) {
        const double t = kPi * i / (points - 1);
        const BellCoefficients bc{std::cos(t), std::sin(t), 0.0, 0.0};
        const ComplementarityReport rep = observables_from_bell(bc);
        std::printf("%8.3f %10.6f %10.6f %10.6f %10.6f %10.6f %12.3e\n", t / kPi,
                    rep.concurrence, rep.visibility[0], rep.predictability[0], rep.visibility[1],
                    rep.predictability[1], rep.triality_residual[0]);
    }
    return 0;
}
