#include <algorithm>
#include <bit>

#include "doctest.h"
#include "edsn/profile.hpp"

using namespace edsn;

namespace {

bool has(const HypothesisDecision& d, Reason r) {
  return std::find(d.reasons.begin(), d.reasons.end(), r) != d.reasons.end();
}

}  // namespace

TEST_CASE("binary_profile: examples") {
  CHECK(binary_profile(15).exponents == std::vector<std::uint32_t>{3, 2, 1, 0});
  CHECK(binary_profile(45).exponents == std::vector<std::uint32_t>{5, 3, 2, 0});
  CHECK(binary_profile(31).exponents == std::vector<std::uint32_t>{4, 3, 2, 1, 0});
  CHECK(binary_profile(31).r() == 5);
  CHECK(binary_profile(1).exponents == std::vector<std::uint32_t>{0});
  CHECK_THROWS(binary_profile(0));
}

TEST_CASE("binary_profile: reconstruction and popcount up to 10^6") {
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    const BinaryProfile bp = binary_profile(n);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < bp.r(); ++i) {
      sum += std::uint64_t{1} << bp.exponents[i];
      if (i > 0 && bp.exponents[i] >= bp.exponents[i - 1]) FAIL("exponents not decreasing");
    }
    if (sum != n || bp.r() != static_cast<std::size_t>(std::popcount(n))) {
      FAIL("reconstruction failed at n = " << n);
    }
  }
}

TEST_CASE("check_hypotheses: examples") {
  const auto a = check_hypotheses(15, 3, 2);
  CHECK(a.applies);
  CHECK(a.required_field_degree == 2);
  CHECK(a.field_sufficient);
  CHECK(has(a, Reason::Ok));

  const auto b = check_hypotheses(21, 3, 1);
  CHECK_FALSE(b.applies);
  CHECK(has(b, Reason::RTooSmall));

  const auto c = check_hypotheses(16, 3, 1);
  CHECK_FALSE(c.applies);
  CHECK(has(c, Reason::PNotDividingN));

  const auto d = check_hypotheses(31, 31, 1);
  CHECK(d.applies);
  CHECK(d.required_field_degree == 1);
  CHECK(d.field_sufficient);

  const auto e = check_hypotheses(15, 3, 1);
  CHECK(e.applies);
  CHECK_FALSE(e.field_sufficient);
  CHECK(has(e, Reason::NeedsQuadraticExtension));
  CHECK_FALSE(has(e, Reason::Ok));

  CHECK(check_hypotheses(15, 3, 4).field_sufficient);
  CHECK_FALSE(check_hypotheses(15, 3, 3).field_sufficient);
  CHECK(has(check_hypotheses(3, 3, 1), Reason::NBelowFive));
}

TEST_CASE("check_hypotheses: field rule is monotone in r") {
  for (std::uint64_t n = 1; n <= 4096; ++n) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
      const auto d = check_hypotheses(n, p, 1);
      if (d.profile.r() >= 5) CHECK(d.required_field_degree == 1);
      if (d.profile.r() == 4) CHECK(d.required_field_degree == 2);
    }
  }
}
