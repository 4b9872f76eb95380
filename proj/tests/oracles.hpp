#pragma once

// Test-only reference computations. Everything over prime fields here is
// plain integer arithmetic mod p and does not touch edsn::Field, so it can
// check the library without sharing its code paths.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "edsn/gf.hpp"
#include "edsn/quadric.hpp"

namespace oracle {

using u64 = std::uint64_t;

inline u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::set<u64> squares_mod(u64 p) {
  std::set<u64> s;
  for (u64 x = 0; x < p; ++x) s.insert(x * x % p);
  return s;
}

/// Roots of x^2 = a mod p by enumeration.
inline std::vector<u64> sqrt_enum(u64 a, u64 p) {
  std::vector<u64> roots;
  for (u64 x = 0; x < p; ++x) {
    if (x * x % p == a % p) roots.push_back(x);
  }
  return roots;
}

/// First nonzero solution of sum w_i c_i = sum w_i c_i^2 = 0 over GF(p),
/// enumerating c_1 + c_2 p + c_3 p^2 + ... upward from 1.
inline std::optional<std::vector<u64>> first_block_solution(u64 p, const std::vector<u64>& w) {
  const std::size_t m = w.size();
  u64 total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= p;
  std::vector<u64> c(m, 0);
  for (u64 idx = 1; idx < total; ++idx) {
    u64 rest = idx;
    for (std::size_t i = 0; i < m; ++i) {
      c[i] = rest % p;
      rest /= p;
    }
    u64 lin = 0, quad = 0;
    for (std::size_t i = 0; i < m; ++i) {
      lin = (lin + w[i] * c[i]) % p;
      quad = (quad + w[i] * c[i] % p * c[i]) % p;
    }
    if (lin == 0 && quad == 0) return c;
  }
  return std::nullopt;
}

/// All points of X_{1,2}(GF(p)) with n coordinates, pairwise distinct.
inline std::vector<std::vector<u64>> x12_off_delta_points(std::size_t n, u64 p) {
  std::vector<std::vector<u64>> found;
  u64 total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::vector<u64> x(n);
  for (u64 idx = 0; idx < total; ++idx) {
    u64 rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rest % p;
      rest /= p;
    }
    u64 s = 0, q = 0;
    for (u64 v : x) {
      s = (s + v) % p;
      q = (q + v * v) % p;
    }
    if (s || q) continue;
    std::set<u64> distinct(x.begin(), x.end());
    if (distinct.size() == n) found.push_back(x);
  }
  return found;
}

/// Monic degree-2 polynomials x^2 + b x + a with no root mod p, as (a, b),
/// listed in lexicographic order of (a, b).
inline std::vector<std::pair<u64, u64>> irreducible_quadratics(u64 p) {
  std::vector<std::pair<u64, u64>> out;
  for (u64 a = 0; a < p; ++a) {
    for (u64 b = 0; b < p; ++b) {
      bool root = false;
      for (u64 x = 0; x < p && !root; ++x) root = (x * x + b * x + a) % p == 0;
      if (!root) out.emplace_back(a, b);
    }
  }
  return out;
}

/// First-order arithmetic in F[eps]/(eps^2).
struct Dual {
  edsn::Element value;
  edsn::Element eps;
};

inline Dual dual_sub(const edsn::Field& f, const Dual& x, const Dual& y) {
  return {f.sub(x.value, y.value), f.sub(x.eps, y.eps)};
}

// (a + b eps) / (c + d eps) = a/c + eps (b c - a d) / c^2
inline Dual dual_div(const edsn::Field& f, const Dual& x, const Dual& y) {
  const edsn::Element c_inv = f.inv(y.value);
  const edsn::Element num = f.sub(f.mul(x.eps, y.value), f.mul(x.value, y.eps));
  return {f.mul(x.value, c_inv), f.mul(num, f.square(c_inv))};
}

}  // namespace oracle

namespace testgen {

inline std::vector<edsn::Element> random_vector(std::mt19937_64& rng, const edsn::Field& f,
                                                std::size_t n) {
  std::vector<edsn::Element> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f.element_at(rng() % f.order()));
  return v;
}

inline edsn::Element random_nonzero(std::mt19937_64& rng, const edsn::Field& f) {
  return f.element_at(1 + rng() % (f.order() - 1));
}

inline std::vector<std::size_t> random_images(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return images;
}

}  // namespace testgen
