#pragma once

// Arithmetic in GF(p^k), p odd, in the polynomial basis 1, x, ..., x^(k-1)
// modulo a fixed monic irreducible polynomial.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace edsn {

using Residue = std::uint32_t;

/// Largest field order p^k this library will construct.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 31;

/// A field element as its coefficient vector, low degree first. The
/// defaulted ordering is lexicographic on that vector; it is the canonical
/// order used everywhere a deterministic choice between elements is made.
struct Element {
  std::vector<Residue> coeffs;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

bool is_prime(std::uint64_t value);

class Field {
 public:
  /// Deterministic construction: the modulus is the lexicographically
  /// smallest monic irreducible of degree k (coefficients low-to-high).
  /// Throws Error{EvenCharacteristic | NotPrime | FieldTooLarge | InvalidArgument}.
  static Field make(std::uint32_t p, std::uint32_t k);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return order_; }
  /// Monic modulus, k + 1 coefficients, low degree first.
  const std::vector<Residue>& modulus() const noexcept { return modulus_; }

  Element zero() const;
  Element one() const;
  /// Image of an integer under Z -> GF(p) -> GF(p^k).
  Element from_int(std::int64_t value) const;
  /// Validates length k and every coefficient < p.
  Element element(std::span<const Residue> coeffs) const;
  bool contains(const Element& a) const noexcept;

  /// Enumeration in canonical order: index 0 is zero and the index is the
  /// coefficient vector read as base-p digits with coeffs[0] most significant.
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& a) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Element& a, Residue c) const;
  Element square(const Element& a) const { return mul(a, a); }
  /// Throws Error{DivisionByZero}.
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::uint64_t e) const;

  bool is_zero(const Element& a) const noexcept;
  bool is_square(const Element& a) const;
  /// The square root with the lexicographically smaller coefficient vector,
  /// or nullopt when a is a nonsquare.
  std::optional<Element> sqrt(const Element& a) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t k, std::vector<Residue> modulus);

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint64_t order_;
  std::vector<Residue> modulus_;
  // Cached for sqrt: q - 1 = 2^two_adicity_ * odd_part_, and a fixed nonsquare.
  std::uint32_t two_adicity_ = 0;
  std::uint64_t odd_part_ = 0;
  std::vector<Residue> nonsquare_;
};

namespace poly {

// Dense polynomials over GF(p), low degree first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

Poly mod(Poly a, const Poly& m, std::uint64_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p);
Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// Rabin's test. f must be monic of degree >= 1.
bool is_irreducible(const Poly& f, std::uint64_t p);

}  // namespace poly

}  // namespace edsn
