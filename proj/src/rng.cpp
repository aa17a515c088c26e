#include "banditbo/rng.hpp"

#include <cmath>
#include <numbers>

#include "banditbo/errors.hpp"

namespace banditbo {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t word) {
  return mix(seed ^ mix(word + kGolden));
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed), gen_(mix(seed)) {}

double RngStream::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  // 1 - u1 lies in (0, 1], so the log is finite.
  const double r = std::sqrt(-2.0 * std::log1p(-u1));
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

int RngStream::uniform_int(int n) {
  if (n <= 0) throw InvalidInput("uniform_int: n must be positive");
  const int v = static_cast<int>(uniform() * static_cast<double>(n));
  return v < n ? v : n - 1;
}

RngStream RngStream::split(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
  return RngStream(combine(combine(combine(seed_, a), b), c));
}

}  // namespace banditbo
