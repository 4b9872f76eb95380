#include "edsn/profile.hpp"

#include "edsn/error.hpp"

namespace edsn {

BinaryProfile binary_profile(std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
  BinaryProfile profile{n, {}};
  for (std::uint32_t bit = 64; bit-- > 0;) {
    if ((n >> bit) & 1) profile.exponents.push_back(bit);
  }
  return profile;
}

std::string_view reason_name(Reason reason) noexcept {
  switch (reason) {
    case Reason::Ok: return "Ok";
    case Reason::PNotDividingN: return "PNotDividingN";
    case Reason::RTooSmall: return "RTooSmall";
    case Reason::NeedsQuadraticExtension: return "NeedsQuadraticExtension";
    case Reason::NBelowFive: return "NBelowFive";
  }
  return "Unknown";
}

HypothesisDecision check_hypotheses(std::uint64_t n, std::uint32_t p,
                                    std::uint32_t available_degree) {
  if (p < 3 || available_degree == 0) {
    throw Error(Errc::InvalidArgument, "need an odd prime p and a degree >= 1");
  }
  HypothesisDecision d;
  d.profile = binary_profile(n);
  const bool divides = n % p == 0;
  const bool enough_bits = d.profile.r() >= 4;
  d.applies = divides && enough_bits;
  d.required_field_degree = d.profile.r() == 4 ? 2 : 1;

  if (!divides) d.reasons.push_back(Reason::PNotDividingN);
  if (!enough_bits) d.reasons.push_back(Reason::RTooSmall);
  if (n < 5) d.reasons.push_back(Reason::NBelowFive);
  const bool has_subfield = available_degree % d.required_field_degree == 0;
  if (d.required_field_degree == 2 && !has_subfield) {
    d.reasons.push_back(Reason::NeedsQuadraticExtension);
  }
  d.field_sufficient = d.applies && has_subfield;
  if (d.field_sufficient) d.reasons.push_back(Reason::Ok);
  return d;
}

}  // namespace edsn
