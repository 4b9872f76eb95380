#pragma once

// The weighted system
//     w_1 c_1 + ... + w_{r-1} c_{r-1} = 0
//     w_1 c_1^2 + ... + w_{r-1} c_{r-1}^2 = 0,    w_i = 2^{m_i} mod p,
// i.e. isotropic vectors of the trace form of the split algebra F^r on the
// trace-zero hyperplane, restricted to c_r = 0.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "edsn/gf.hpp"
#include "edsn/profile.hpp"
#include "edsn/quadric.hpp"

namespace edsn {

struct WeightVector {
  std::uint32_t p = 0;
  std::vector<Residue> weights;
};

WeightVector weights_mod_p(const BinaryProfile& profile, std::uint32_t p);

struct BlockSolution {
  Field field;
  /// r entries; the last one is always zero.
  std::vector<Element> c;
};

enum class SearchStrategy {
  Auto,        ///< Exhaustive when |F|^(r-1) <= kExhaustiveLimit, else Parametric.
  Exhaustive,  ///< Odometer enumeration of all of F^(r-1).
  Parametric,  ///< Enumerate c_3..c_{r-1}; solve the linear equation for c_1 and the resulting quadratic for c_2.
};

inline constexpr std::uint64_t kExhaustiveLimit = 10'000'000;

/// The first nonzero solution (c_1, ..., c_m) of the system with the given
/// m weights over `field`, in odometer order: index c_1 + c_2 q + c_3 q^2 + ...
/// where each c_i is replaced by its canonical element index. Equivalently,
/// the reversed tuple (c_m, ..., c_1) is lexicographically minimal.
std::optional<std::vector<Element>> first_isotropic_vector(const Field& field,
                                                           std::span<const Residue> weights,
                                                           SearchStrategy strategy = SearchStrategy::Auto);

/// Solves over GF(p), falling back to GF(p^2) when GF(p) has no solution.
/// Throws Error{InvalidProfile} when r < 4 or p does not divide n.
BlockSolution solve_block_system(const BinaryProfile& profile, std::uint32_t p,
                                 SearchStrategy strategy = SearchStrategy::Auto);

struct BlockResiduals {
  Element linear;
  Element quadratic;
};

/// Evaluates both equations over all r weights (the last c is normally zero).
BlockResiduals evaluate_block_system(const Field& field, std::span<const Residue> weights,
                                     std::span<const Element> c);

/// Point of n-space repeating c_i exactly 2^{m_i} times, blocks in profile order.
AmbientPoint lift_block_solution(const BinaryProfile& profile, const BlockSolution& sol);

}  // namespace edsn
