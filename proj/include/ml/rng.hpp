#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace ml {

// Deterministic 64-bit generator (splitmix64). Hand-rolled so that seeded
// runs produce byte-identical traces on every platform; the standard
// distributions are implementation-defined and would break that.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be > 0.
  uint64_t below(uint64_t n) { return next() % n; }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  // Standard normal via Box-Muller (deterministic, no cached spare).
  double normal() {
    double u1 = unit();
    double u2 = unit();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Independent child stream; used to hand each parallel trial its own seed.
  Rng fork(uint64_t stream) {
    Rng child(state_ ^ (0x6a09e667f3bcc909ull + stream * 0x9e3779b97f4a7c15ull));
    child.next();
    return child;
  }

 private:
  uint64_t state_;
};

}  // namespace ml
