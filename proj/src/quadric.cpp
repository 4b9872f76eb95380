#include "edsn/quadric.hpp"

#include <algorithm>
#include <set>

#include "edsn/error.hpp"
#include "edsn/linalg.hpp"
#include "edsn/random.hpp"

namespace edsn {

AmbientPoint make_point(const Field& field, std::vector<Element> coords) {
  if (coords.size() < 2) throw Error(Errc::InvalidArgument, "points need n >= 2 coordinates");
  for (const auto& c : coords) {
    if (!field.contains(c)) throw Error(Errc::InvalidArgument, "coordinate not in field");
  }
  return AmbientPoint{field, std::move(coords)};
}

AmbientPoint make_point(const Field& field, std::span<const std::int64_t> values) {
  std::vector<Element> coords;
  coords.reserve(values.size());
  for (auto v : values) coords.push_back(field.from_int(v));
  return make_point(field, std::move(coords));
}

Element power_sum(const AmbientPoint& a, unsigned degree) {
  const Field& f = a.field;
  Element acc = f.zero();
  for (const auto& x : a.coords) acc = f.add(acc, f.pow(x, degree));
  return acc;
}

bool on_x12(const AmbientPoint& a) {
  return a.field.is_zero(power_sum(a, 1)) && a.field.is_zero(power_sum(a, 2));
}

bool in_discriminant(const AmbientPoint& a) {
  std::set<Element> seen;
  for (const auto& x : a.coords) {
    if (!seen.insert(x).second) return true;
  }
  return false;
}

bool in_small_diagonal(const AmbientPoint& a) {
  return std::all_of(a.coords.begin(), a.coords.end(),
                     [&](const Element& x) { return x == a.coords.front(); });
}

std::size_t smoothness_rank(const AmbientPoint& a) {
  if (!on_x12(a)) throw Error(Errc::NotOnVariety, "point is not on X_{1,2}");
  const Field& f = a.field;
  Matrix jac(f, 2, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    jac.at(0, i) = f.one();
    jac.at(1, i) = f.add(a.coords[i], a.coords[i]);
  }
  return rank(jac);
}

std::optional<AmbientPoint> complete_from_tail(const Field& field, std::span<const Element> tail) {
  const Field& f = field;
  Element s = f.zero();
  Element q = f.zero();
  for (const auto& x : tail) {
    s = f.add(s, x);
    q = f.add(q, f.square(x));
  }
  // x_1, x_2 are the roots of t^2 + S t + (S^2 + Q)/2.
  const Element disc = f.sub(f.neg(f.square(s)), f.add(q, q));
  auto root = f.sqrt(disc);
  if (!root) return std::nullopt;
  const Element half = f.inv(f.from_int(2));
  const Element minus_s = f.neg(s);
  std::vector<Element> coords;
  coords.reserve(tail.size() + 2);
  coords.push_back(f.mul(f.add(minus_s, *root), half));
  coords.push_back(f.mul(f.sub(minus_s, *root), half));
  coords.insert(coords.end(), tail.begin(), tail.end());
  return make_point(f, std::move(coords));
}

std::optional<SampleResult> sample_x12_off_delta(std::size_t n, const Field& field,
                                                 std::uint64_t seed, std::uint64_t max_tries) {
  if (n < 5) throw Error(Errc::InvalidArgument, "sampling X_{1,2} requires n >= 5");
  ElementRng rng(seed);
  std::vector<Element> tail(n - 2, field.zero());
  for (std::uint64_t attempt = 1; attempt <= max_tries; ++attempt) {
    for (auto& x : tail) x = rng.uniform(field);
    auto point = complete_from_tail(field, tail);
    if (point && !in_discriminant(*point)) {
      return SampleResult{std::move(*point), attempt, seed};
    }
  }
  return std::nullopt;
}

}  // namespace edsn
