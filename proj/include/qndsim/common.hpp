#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace qndsim {

using cplx = std::complex<double>;

// Rotation angle vector (x, y, z components).
using Vec3 = std::array<double, 3>;

// Numerical tolerances shared across the library. Exact identities are
// held to 1e-12; state-vector norms to 1e-10; the real-coefficient check
// tolerates 1e-9 of phase-fixed imaginary residue; measurement branches
// below 1e-14 probability are dropped as numerically empty.
namespace tol {
inline constexpr double exact = 1e-12;
inline constexpr double norm = 1e-10;
inline constexpr double rebit = 1e-9;
inline constexpr double branch_cutoff = 1e-14;
}  // namespace tol

inline constexpr double kInvSqrt2 = 0.70710678118654752440;
inline constexpr double kPi = 3.14159265358979323846;

}  // namespace qndsim
