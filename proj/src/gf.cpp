#include "edsn/gf.hpp"

#include <algorithm>
#include <string>

#include "edsn/error.hpp"

namespace edsn {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::NotPrime: return "NotPrime";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::InvalidProfile: return "InvalidProfile";
    case Errc::NotOnVariety: return "NotOnVariety";
    case Errc::OnDiscriminant: return "OnDiscriminant";
    case Errc::NoPointFound: return "NoPointFound";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

namespace poly {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Poly mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = (a[shift + j] + (p - c) * m[j]) % p;
    }
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return mod(std::move(prod), m, p);
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result = mod(Poly{1}, m, p);
  base = mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = mulmod(result, base, m, p);
    base = mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t lead_inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * lead_inv % p;
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  // x^(p^j) mod f for j = 0..k
  std::vector<Poly> frob{mod(Poly{0, 1}, f, p)};
  for (std::size_t j = 1; j <= k; ++j) frob.push_back(powmod(frob.back(), p, f, p));

  auto minus_x = [&](Poly a) {
    a.resize(std::max<std::size_t>(a.size(), 2), 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
  };
  if (!minus_x(frob[k]).empty()) return false;
  std::size_t rest = k;
  for (std::size_t q = 2; q <= rest; ++q) {
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    const Poly g = gcd(f, minus_x(frob[k / q]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace poly

Field Field::make(std::uint32_t p, std::uint32_t k) {
  if (p == 2) throw Error(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    order *= p;
    if (order > kMaxFieldOrder) {
      throw Error(Errc::FieldTooLarge, "p^k exceeds the supported field order 2^31");
    }
  }

  // Lexicographic search over (a_0, ..., a_{k-1}) with a_0 most significant.
  std::vector<Residue> coeffs(k, 0);
  for (std::uint64_t index = 0; index < order; ++index) {
    std::uint64_t rest = index;
    for (std::uint32_t i = k; i-- > 0;) {
      coeffs[i] = static_cast<Residue>(rest % p);
      rest /= p;
    }
    if (k > 1 && coeffs[0] == 0) continue;  // divisible by x
    poly::Poly f(coeffs.begin(), coeffs.end());
    f.push_back(1);
    if (poly::is_irreducible(f, p)) {
      std::vector<Residue> modulus(coeffs);
      modulus.push_back(1);
      return Field(p, k, std::move(modulus));
    }
  }
  throw Error(Errc::InvalidArgument, "no irreducible polynomial found");
}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<Residue> modulus)
    : p_(p), k_(k), order_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k_; ++i) order_ *= p_;
  odd_part_ = order_ - 1;
  while (odd_part_ % 2 == 0) {
    odd_part_ /= 2;
    ++two_adicity_;
  }
  const std::uint64_t half = (order_ - 1) / 2;
  const Element minus_one = neg(one());
  for (std::uint64_t i = 1; i < order_; ++i) {
    Element z = element_at(i);
    if (pow(z, half) == minus_one) {
      nonsquare_ = std::move(z.coeffs);
      break;
    }
  }
}

Element Field::zero() const { return Element{std::vector<Residue>(k_, 0)}; }

Element Field::one() const {
  Element e = zero();
  e.coeffs[0] = 1;
  return e;
}

Element Field::from_int(std::int64_t value) const {
  const std::int64_t p = p_;
  Element e = zero();
  e.coeffs[0] = static_cast<Residue>(((value % p) + p) % p);
  return e;
}

Element Field::element(std::span<const Residue> coeffs) const {
  if (coeffs.size() != k_) {
    throw Error(Errc::SizeMismatch, "element needs exactly k coefficients");
  }
  for (Residue c : coeffs) {
    if (c >= p_) throw Error(Errc::InvalidArgument, "coefficient out of range [0, p)");
  }
  return Element{std::vector<Residue>(coeffs.begin(), coeffs.end())};
}

bool Field::contains(const Element& a) const noexcept {
  return a.coeffs.size() == k_ &&
         std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](Residue c) { return c < p_; });
}

Element Field::element_at(std::uint64_t index) const {
  if (index >= order_) throw Error(Errc::InvalidArgument, "element index out of range");
  Element e = zero();
  for (std::uint32_t i = k_; i-- > 0;) {
    e.coeffs[i] = static_cast<Residue>(index % p_);
    index /= p_;
  }
  return e;
}

std::uint64_t Field::index_of(const Element& a) const {
  std::uint64_t index = 0;
  for (Residue c : a.coeffs) index = index * p_ + c;
  return index;
}

Element Field::add(const Element& a, const Element& b) const {
  Element r = zero();
  for (std::uint32_t i = 0; i < k_; ++i) {
    const Residue s = a.coeffs[i] + b.coeffs[i];
    r.coeffs[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

Element Field::sub(const Element& a, const Element& b) const {
  Element r = zero();
  for (std::uint32_t i = 0; i < k_; ++i) {
    r.coeffs[i] = a.coeffs[i] >= b.coeffs[i] ? a.coeffs[i] - b.coeffs[i]
                                             : a.coeffs[i] + (p_ - b.coeffs[i]);
  }
  return r;
}

Element Field::neg(const Element& a) const {
  Element r = zero();
  for (std::uint32_t i = 0; i < k_; ++i) r.coeffs[i] = a.coeffs[i] == 0 ? 0 : p_ - a.coeffs[i];
  return r;
}

Element Field::scale(const Element& a, Residue c) const {
  Element r = zero();
  for (std::uint32_t i = 0; i < k_; ++i) {
    r.coeffs[i] = static_cast<Residue>(std::uint64_t{a.coeffs[i]} * (c % p_) % p_);
  }
  return r;
}

Element Field::mul(const Element& a, const Element& b) const {
  const std::uint64_t p = p_;
  if (k_ == 1) {
    return Element{{static_cast<Residue>(std::uint64_t{a.coeffs[0]} * b.coeffs[0] % p)}};
  }
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % p;
    }
  }
  // x^k = -(m_0 + ... + m_{k-1} x^{k-1})
  for (std::uint32_t d = 2 * k_ - 2; d >= k_; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[d - k_ + j] = (prod[d - k_ + j] + (p - c) * modulus_[j]) % p;
    }
  }
  Element r = zero();
  for (std::uint32_t i = 0; i < k_; ++i) r.coeffs[i] = static_cast<Residue>(prod[i]);
  return r;
}

Element Field::pow(const Element& a, std::uint64_t e) const {
  Element result = one();
  Element base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

bool Field::is_zero(const Element& a) const noexcept {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](Residue c) { return c == 0; });
}

Element Field::inv(const Element& a) const {
  if (is_zero(a)) throw Error(Errc::DivisionByZero, "division by zero");
  return pow(a, order_ - 2);
}

Element Field::div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

bool Field::is_square(const Element& a) const {
  return is_zero(a) || pow(a, (order_ - 1) / 2) == one();
}

std::optional<Element> Field::sqrt(const Element& a) const {
  if (is_zero(a)) return zero();
  if (!is_square(a)) return std::nullopt;

  // Tonelli-Shanks in the cyclic group of order q - 1.
  const Element unit = one();
  std::uint32_t m = two_adicity_;
  Element c = pow(Element{nonsquare_}, odd_part_);
  Element t = pow(a, odd_part_);
  Element r = pow(a, (odd_part_ + 1) / 2);
  while (t != unit) {
    std::uint32_t i = 0;
    Element probe = t;
    while (probe != unit) {
      probe = square(probe);
      ++i;
    }
    Element b = c;
    for (std::uint32_t j = 0; j + i + 1 < m; ++j) b = square(b);
    m = i;
    c = square(b);
    t = mul(t, c);
    r = mul(r, b);
  }
  Element other = neg(r);
  return std::min(r, other);
}

}  // namespace edsn
