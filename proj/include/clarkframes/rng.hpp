#pragma once

#include <cstdint>

#include "clarkframes/measure.hpp"

namespace clarkframes {

// splitmix64: tiny deterministic generator with a portable output sequence
// (std:: distributions are implementation-defined, which would break
// byte-identical reports across toolchains).
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [-1, 1), 53-bit resolution
  double uniform_pm1() {
    return static_cast<double>(next() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
  }

  cplx uniform_cplx() {
    double re = uniform_pm1();
    double im = uniform_pm1();
    return {re, im};
  }
};

}  // namespace clarkframes
