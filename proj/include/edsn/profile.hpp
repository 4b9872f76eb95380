#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace edsn {

/// n = 2^{m_1} + ... + 2^{m_r} with m_1 > ... > m_r >= 0.
struct BinaryProfile {
  std::uint64_t n = 0;
  std::vector<std::uint32_t> exponents;

  std::size_t r() const noexcept { return exponents.size(); }
};

/// Throws Error{InvalidArgument} for n = 0.
BinaryProfile binary_profile(std::uint64_t n);

enum class Reason {
  Ok,
  PNotDividingN,
  RTooSmall,
  NeedsQuadraticExtension,
  NBelowFive,
};

std::string_view reason_name(Reason reason) noexcept;

struct HypothesisDecision {
  /// p | n and r >= 4.
  bool applies = false;
  /// 2 when r = 4, otherwise 1.
  std::uint32_t required_field_degree = 1;
  /// applies, and GF(p^available_degree) contains GF(p^required_field_degree).
  bool field_sufficient = false;
  std::vector<Reason> reasons;
  BinaryProfile profile;
};

HypothesisDecision check_hypotheses(std::uint64_t n, std::uint32_t p,
                                    std::uint32_t available_degree);

}  // namespace edsn
