#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "edsn/gf.hpp"

namespace edsn {

/// A point of affine n-space over a finite field.
struct AmbientPoint {
  Field field;
  std::vector<Element> coords;

  std::size_t size() const noexcept { return coords.size(); }
  friend bool operator==(const AmbientPoint& a, const AmbientPoint& b) {
    return a.field == b.field && a.coords == b.coords;
  }
};

/// Throws Error{InvalidArgument} for fewer than two coordinates or foreign elements.
AmbientPoint make_point(const Field& field, std::vector<Element> coords);
AmbientPoint make_point(const Field& field, std::span<const std::int64_t> values);

Element power_sum(const AmbientPoint& a, unsigned degree);

/// sum x_i = sum x_i^2 = 0 (equivalent to s_1 = s_2 = 0 in odd characteristic).
bool on_x12(const AmbientPoint& a);
/// Some pair of coordinates coincides.
bool in_discriminant(const AmbientPoint& a);
/// All coordinates coincide.
bool in_small_diagonal(const AmbientPoint& a);

/// Rank of the Jacobian of (p_1, p_2): rows (1, ..., 1) and (2x_1, ..., 2x_n).
/// 2 at smooth points, 1 on the small diagonal. Throws Error{NotOnVariety}.
std::size_t smoothness_rank(const AmbientPoint& a);

/// Given x_3..x_n, solves x_1 + x_2 = -S, x_1^2 + x_2^2 = -Q for the first
/// two coordinates. With r the canonical sqrt of the discriminant -S^2 - 2Q,
/// x_1 = (-S + r)/2 and x_2 = (-S - r)/2. nullopt on a nonsquare discriminant.
std::optional<AmbientPoint> complete_from_tail(const Field& field, std::span<const Element> tail);

struct SampleResult {
  AmbientPoint point;
  std::uint64_t tries = 0;
  std::uint64_t seed = 0;
};

inline std::uint64_t default_max_tries(const Field& field) { return 64 * field.order(); }

/// Draws x_3..x_n uniformly and completes via complete_from_tail, retrying
/// on nonsquare discriminants and discriminant-locus collisions.
/// nullopt after max_tries attempts. Requires n >= 5.
std::optional<SampleResult> sample_x12_off_delta(std::size_t n, const Field& field,
                                                 std::uint64_t seed, std::uint64_t max_tries);

}  // namespace edsn
