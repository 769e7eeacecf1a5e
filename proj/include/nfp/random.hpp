#pragma once

// Portable draws from mt19937_64 (the std distributions are
// implementation-defined, which would break byte-identical reruns).

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace nfp::rnd {

using Engine = std::mt19937_64;

/// Uniform in [0, 1) with 53 random bits.
inline double unit(Engine& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

/// Uniform integer in [lo, hi].
inline long integer(Engine& g, long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(g() % span);
}

/// e^{i theta} with theta uniform in [0, 2 pi).
inline std::complex<double> unit_circle(Engine& g) {
  return std::polar(1.0, 2.0 * std::numbers::pi * unit(g));
}

}  // namespace nfp::rnd
