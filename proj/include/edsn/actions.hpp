#pragma once

// The symmetric group acting on coordinates and the affine group
// {x -> alpha x + beta} of upper-triangular matrices in PGL_2.

#include <cstddef>
#include <optional>
#include <vector>

#include "edsn/gf.hpp"
#include "edsn/quadric.hpp"

namespace edsn {

/// Bijection of {0, ..., n-1}; images[i] is the image of i.
class Permutation {
 public:
  /// Throws Error{InvalidArgument} if images is not a bijection.
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);
  /// Cycle given in 1-based labels, e.g. {2, 4, 5}.
  static Permutation cycle(std::size_t n, const std::vector<std::size_t>& one_based);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  Permutation inverse() const;
  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// Left action: (sigma . a)_i = a_{sigma^{-1}(i)}. Throws Error{SizeMismatch}.
AmbientPoint permute(const Permutation& sigma, const AmbientPoint& a);

struct BorelElement {
  Element alpha;  ///< nonzero
  Element beta;
};

/// Throws Error{InvalidArgument} when alpha = 0.
BorelElement make_borel(const Field& field, Element alpha, Element beta);
/// (a1, b1) o (a2, b2) = (a1 a2, a1 b2 + b1).
BorelElement compose(const Field& field, const BorelElement& g, const BorelElement& h);

/// Coordinate-wise alpha x_i + beta.
AmbientPoint borel_act(const BorelElement& g, const AmbientPoint& a);

struct BorelInvarianceReport {
  Element s1_after;    ///< sum of (g.a)_i, computed directly
  Element p2_after;    ///< sum of (g.a)_i^2, computed directly
  Element n_beta;      ///< n beta
  Element n_beta_sq;   ///< n beta^2
  bool identities_hold = false;  ///< s1_after = n beta and p2_after = n beta^2
  bool stays_on_x12 = false;
};

/// Throws Error{NotOnVariety}.
BorelInvarianceReport borel_invariance_report(const AmbientPoint& a, const BorelElement& g);

struct BorelStabilizer {
  enum class Kind { Trivial, OneDimensional } kind = Kind::Trivial;
  /// For OneDimensional: the common coordinate value c; the stabilizer is
  /// {(alpha, c (1 - alpha)) : alpha != 0}.
  std::optional<Element> constant;
};

/// Solves alpha a_i + beta = a_i over the point's field via the rank of the
/// 2 x n matrix with rows (a_1, ..., a_n) and (1, ..., 1).
BorelStabilizer borel_stabilizer(const AmbientPoint& a);

}  // namespace edsn
