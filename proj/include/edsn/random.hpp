#pragma once

#include <cstdint>
#include <random>

#include "edsn/gf.hpp"

namespace edsn {

/// Deterministic element source: std::mt19937_64 (fully specified by the
/// C++ standard) seeded with the given value, and uniform indices drawn by
/// rejection sampling on raw 64-bit outputs so that the stream does not
/// depend on the standard library's distribution implementations.
class ElementRng {
 public:
  explicit ElementRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = (~std::uint64_t{0} / bound) * bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

  Element uniform(const Field& f) { return f.element_at(below(f.order())); }
  Element uniform_nonzero(const Field& f) { return f.element_at(1 + below(f.order() - 1)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace edsn
