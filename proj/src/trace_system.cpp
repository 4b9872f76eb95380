#include "edsn/trace_system.hpp"

#include <algorithm>

#include "edsn/error.hpp"

namespace edsn {

WeightVector weights_mod_p(const BinaryProfile& profile, std::uint32_t p) {
  WeightVector w{p, {}};
  for (std::uint32_t m : profile.exponents) {
    std::uint64_t value = 1 % p;
    for (std::uint32_t i = 0; i < m; ++i) value = value * 2 % p;
    w.weights.push_back(static_cast<Residue>(value));
  }
  return w;
}

BlockResiduals evaluate_block_system(const Field& f, std::span<const Residue> weights,
                                     std::span<const Element> c) {
  if (weights.size() != c.size()) throw Error(Errc::SizeMismatch, "weights/solution length");
  BlockResiduals res{f.zero(), f.zero()};
  for (std::size_t i = 0; i < c.size(); ++i) {
    res.linear = f.add(res.linear, f.scale(c[i], weights[i]));
    res.quadratic = f.add(res.quadratic, f.scale(f.square(c[i]), weights[i]));
  }
  return res;
}

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > (~std::uint64_t{0}) / base) return ~std::uint64_t{0};
    r *= base;
  }
  return r;
}

bool advance(std::vector<std::uint64_t>& digits, std::uint64_t base) {
  for (auto& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

std::optional<std::vector<Element>> exhaustive(const Field& f, std::span<const Residue> w) {
  const std::uint64_t q = f.order();
  const std::size_t m = w.size();
  std::vector<std::vector<Element>> lin(m), quad(m);
  for (std::size_t i = 0; i < m; ++i) {
    lin[i].reserve(q);
    quad[i].reserve(q);
    for (std::uint64_t d = 0; d < q; ++d) {
      const Element e = f.element_at(d);
      lin[i].push_back(f.scale(e, w[i]));
      quad[i].push_back(f.scale(f.square(e), w[i]));
    }
  }
  std::vector<std::uint64_t> digits(m, 0);
  while (advance(digits, q)) {
    Element l = lin[0][digits[0]];
    for (std::size_t i = 1; i < m; ++i) l = f.add(l, lin[i][digits[i]]);
    if (!f.is_zero(l)) continue;
    Element s = quad[0][digits[0]];
    for (std::size_t i = 1; i < m; ++i) s = f.add(s, quad[i][digits[i]]);
    if (!f.is_zero(s)) continue;
    std::vector<Element> c;
    for (auto d : digits) c.push_back(f.element_at(d));
    return c;
  }
  return std::nullopt;
}

// With L, Q the contributions of c_3.., substituting c_1 = -(L + w_2 c_2)/w_1 gives
//   w_2 (w_1 + w_2) c_2^2 + 2 L w_2 c_2 + (L^2 + w_1 Q) = 0.
std::optional<std::vector<Element>> parametric(const Field& f, std::span<const Residue> w) {
  const std::uint64_t q = f.order();
  const std::size_t m = w.size();
  const Element w1 = f.from_int(w[0]);
  const Element w2 = f.from_int(w[1]);
  const Element w1_inv = f.inv(w1);
  const Element a = f.mul(w2, f.add(w1, w2));

  std::vector<std::uint64_t> digits(m - 2, 0);
  do {
    std::vector<Element> tail;
    Element l = f.zero();
    Element s = f.zero();
    bool tail_zero = true;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      tail.push_back(f.element_at(digits[i]));
      l = f.add(l, f.scale(tail.back(), w[i + 2]));
      s = f.add(s, f.scale(f.square(tail.back()), w[i + 2]));
      tail_zero = tail_zero && digits[i] == 0;
    }
    const Element b = f.mul(f.add(l, l), w2);
    const Element c = f.add(f.square(l), f.mul(w1, s));

    std::vector<Element> candidates;
    if (!f.is_zero(a)) {
      const Element disc = f.sub(f.square(b), f.mul(f.from_int(4), f.mul(a, c)));
      if (auto root = f.sqrt(disc)) {
        const Element denom = f.inv(f.add(a, a));
        candidates.push_back(f.mul(f.sub(*root, b), denom));
        candidates.push_back(f.mul(f.sub(f.neg(*root), b), denom));
      }
    } else if (!f.is_zero(b)) {
      candidates.push_back(f.neg(f.div(c, b)));
    } else if (f.is_zero(c)) {
      candidates.push_back(f.element_at(0));
      candidates.push_back(f.element_at(1));
    }
    std::sort(candidates.begin(), candidates.end(), [&](const Element& x, const Element& y) {
      return f.index_of(x) < f.index_of(y);
    });
    for (const auto& c2 : candidates) {
      Element c1 = f.neg(f.mul(f.add(l, f.mul(w2, c2)), w1_inv));
      if (tail_zero && f.is_zero(c1) && f.is_zero(c2)) continue;
      std::vector<Element> sol{std::move(c1), c2};
      sol.insert(sol.end(), tail.begin(), tail.end());
      return sol;
    }
  } while (advance(digits, q));
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Element>> first_isotropic_vector(const Field& field,
                                                           std::span<const Residue> weights,
                                                           SearchStrategy strategy) {
  for (Residue w : weights) {
    if (w % field.characteristic() == 0) {
      throw Error(Errc::InvalidArgument, "weights must be nonzero mod p");
    }
  }
  if (weights.size() < 2) {
    // w_1 c_1 = 0 with w_1 != 0 has only the trivial solution.
    return std::nullopt;
  }
  if (strategy == SearchStrategy::Auto) {
    strategy = checked_power(field.order(), weights.size()) <= kExhaustiveLimit
                   ? SearchStrategy::Exhaustive
                   : SearchStrategy::Parametric;
  }
  return strategy == SearchStrategy::Exhaustive ? exhaustive(field, weights)
                                                : parametric(field, weights);
}

BlockSolution solve_block_system(const BinaryProfile& profile, std::uint32_t p,
                                 SearchStrategy strategy) {
  if (profile.r() < 4) {
    throw Error(Errc::InvalidProfile, "the block system needs r >= 4 binary digits");
  }
  if (profile.n % p != 0) throw Error(Errc::InvalidProfile, "p must divide n");
  const WeightVector w = weights_mod_p(profile, p);
  const std::span<const Residue> leading(w.weights.data(), w.weights.size() - 1);

  for (std::uint32_t degree : {1u, 2u}) {
    Field field = Field::make(p, degree);
    if (auto c = first_isotropic_vector(field, leading, strategy)) {
      c->push_back(field.zero());
      return BlockSolution{std::move(field), std::move(*c)};
    }
  }
  // Unreachable: a binary quadratic form over GF(p) is isotropic over GF(p^2).
  throw Error(Errc::InvalidProfile, "no solution over GF(p^2)");
}

AmbientPoint lift_block_solution(const BinaryProfile& profile, const BlockSolution& sol) {
  if (sol.c.size() != profile.r()) throw Error(Errc::SizeMismatch, "solution length != r");
  std::vector<Element> coords;
  coords.reserve(profile.n);
  for (std::size_t i = 0; i < profile.r(); ++i) {
    coords.insert(coords.end(), std::size_t{1} << profile.exponents[i], sol.c[i]);
  }
  return make_point(sol.field, std::move(coords));
}

}  // namespace edsn
