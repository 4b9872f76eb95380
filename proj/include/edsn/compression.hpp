#pragma once

// The map pi : a -> ((x_r - x_s) / (x_r - x_t)) over ordered triples of
// distinct indices, its symmetric-group action, and the Jacobian-rank
// certificate bounding the dimension of its image.

#include <array>
#include <cstddef>
#include <vector>

#include "edsn/actions.hpp"
#include "edsn/gf.hpp"
#include "edsn/linalg.hpp"
#include "edsn/quadric.hpp"

namespace edsn {

using Triple = std::array<std::size_t, 3>;  // 0-based (r, s, t)

/// All ordered triples of distinct indices in lexicographic order.
class TripleIndex {
 public:
  explicit TripleIndex(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_ * (n_ - 1) * (n_ - 2); }
  Triple at(std::size_t position) const;
  std::size_t position(const Triple& t) const;

 private:
  std::size_t n_;
};

struct CompressionImage {
  std::size_t n = 0;
  std::vector<Element> values;  ///< indexed by TripleIndex position

  friend bool operator==(const CompressionImage&, const CompressionImage&) = default;
};

/// Throws Error{OnDiscriminant} when some x_r = x_t, Error{InvalidArgument} when n < 3.
CompressionImage pi_eval(const AmbientPoint& a);
/// (sigma . img)(r, s, t) = img(sigma^{-1} r, sigma^{-1} s, sigma^{-1} t).
CompressionImage sigma_on_image(const Permutation& sigma, const CompressionImage& img);

/// pi(g . a) == pi(a).
bool affine_invariance_check(const AmbientPoint& a, const BorelElement& g);

struct KernelWitness {
  Element moved_component;  ///< pi(a) at (1, 2, 3)
  Element fixed_component;  ///< pi(a) at (1, 4, 3)
  bool image_moved = false; ///< sigma_on_image((2 4 5), pi(a)) != pi(a)
  bool holds = false;       ///< the two components differ and the image moved
};

/// The 3-cycle (2 4 5) does not fix pi(a). Requires n >= 5.
KernelWitness kernel_witness(const AmbientPoint& a);

/// Row per triple; d/dx_r = (x_s - x_t)/(x_r - x_t)^2, d/dx_s = -1/(x_r - x_t),
/// d/dx_t = (x_r - x_s)/(x_r - x_t)^2.
Matrix pi_jacobian(const AmbientPoint& a);

struct RankCertificate {
  std::size_t ambient_rank = 0;     ///< rank of the full Jacobian of pi
  std::size_t tangent_dim = 0;      ///< dim of the tangent space of X_{1,2} at a
  std::size_t restricted_rank = 0;  ///< rank of d pi on that tangent space
  std::size_t bound = 0;            ///< n - 4 when p | n, else n - 3
  bool satisfied = false;
};

/// Throws Error{NotOnVariety} or Error{OnDiscriminant}.
RankCertificate rank_certificate(const AmbientPoint& a);

}  // namespace edsn
