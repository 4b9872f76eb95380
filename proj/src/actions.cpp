#include "edsn/actions.hpp"

#include <numeric>

#include "edsn/error.hpp"
#include "edsn/linalg.hpp"

namespace edsn {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || hit[v]) throw Error(Errc::InvalidArgument, "not a permutation");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(std::size_t n, const std::vector<std::size_t>& one_based) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  for (std::size_t i = 0; i < one_based.size(); ++i) {
    const std::size_t from = one_based[i];
    const std::size_t to = one_based[(i + 1) % one_based.size()];
    if (from == 0 || from > n || to == 0 || to > n) {
      throw Error(Errc::InvalidArgument, "cycle label out of range");
    }
    images[from - 1] = to - 1;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw Error(Errc::SizeMismatch, "permutation sizes differ");
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = images_[other.images_[i]];
  return Permutation(std::move(out));
}

AmbientPoint permute(const Permutation& sigma, const AmbientPoint& a) {
  if (sigma.size() != a.size()) throw Error(Errc::SizeMismatch, "permutation/point size");
  std::vector<Element> coords(a.size());
  // (sigma . a)_{sigma(i)} = a_i
  for (std::size_t i = 0; i < a.size(); ++i) coords[sigma(i)] = a.coords[i];
  return AmbientPoint{a.field, std::move(coords)};
}

BorelElement make_borel(const Field& field, Element alpha, Element beta) {
  if (!field.contains(alpha) || !field.contains(beta)) {
    throw Error(Errc::InvalidArgument, "Borel entries must lie in the field");
  }
  if (field.is_zero(alpha)) throw Error(Errc::InvalidArgument, "alpha must be nonzero");
  return BorelElement{std::move(alpha), std::move(beta)};
}

BorelElement compose(const Field& f, const BorelElement& g, const BorelElement& h) {
  return BorelElement{f.mul(g.alpha, h.alpha), f.add(f.mul(g.alpha, h.beta), g.beta)};
}

AmbientPoint borel_act(const BorelElement& g, const AmbientPoint& a) {
  const Field& f = a.field;
  std::vector<Element> coords;
  coords.reserve(a.size());
  for (const auto& x : a.coords) coords.push_back(f.add(f.mul(g.alpha, x), g.beta));
  return AmbientPoint{f, std::move(coords)};
}

BorelInvarianceReport borel_invariance_report(const AmbientPoint& a, const BorelElement& g) {
  if (!on_x12(a)) throw Error(Errc::NotOnVariety, "point is not on X_{1,2}");
  const Field& f = a.field;
  const AmbientPoint moved = borel_act(g, a);
  const Element n = f.from_int(static_cast<std::int64_t>(a.size() % f.characteristic()));
  BorelInvarianceReport rep{power_sum(moved, 1), power_sum(moved, 2), f.mul(n, g.beta),
                            f.mul(n, f.square(g.beta))};
  rep.identities_hold = rep.s1_after == rep.n_beta && rep.p2_after == rep.n_beta_sq;
  rep.stays_on_x12 = f.is_zero(rep.n_beta) && f.is_zero(rep.n_beta_sq);
  return rep;
}

BorelStabilizer borel_stabilizer(const AmbientPoint& a) {
  const Field& f = a.field;
  Matrix m(f, 2, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m.at(0, i) = a.coords[i];
    m.at(1, i) = f.one();
  }
  if (rank(m) == 2) return {BorelStabilizer::Kind::Trivial, std::nullopt};
  // Rank 1: every a_i equals a_1 and (alpha - 1) a_1 + beta = 0.
  return {BorelStabilizer::Kind::OneDimensional, a.coords.front()};
}

}  // namespace edsn
