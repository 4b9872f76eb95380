#pragma once

// Certificate documents behind the command-line subcommands. Every document
// has the envelope
//   {schema_version, command, inputs, field, payload, checks: [{name, passed}]}
// with sorted keys, integers only, and field elements as coefficient arrays.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "edsn/gf.hpp"
#include "edsn/quadric.hpp"

namespace edsn {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitHypothesisNotMet = 2,
  kExitVerificationFailed = 3,
  kExitUsage = 4,
};

struct CommandOutput {
  nlohmann::json certificate;
  int exit_code = kExitOk;
};

nlohmann::json to_json(const Element& e);
nlohmann::json to_json(const Field& f);
nlohmann::json to_json(const AmbientPoint& a);

/// Pretty-printed, two-space indent, trailing newline.
std::string render(const nlohmann::json& doc);

// The commands throw Error for unusable parameters (p not an odd prime,
// field too large, n < 5 where sampling is needed); those map to kExitUsage.
CommandOutput cmd_check(std::uint64_t n, std::uint32_t p, std::uint32_t degree);
CommandOutput cmd_solve(std::uint64_t n, std::uint32_t p);
CommandOutput cmd_construct(std::uint64_t n, std::uint32_t p);
CommandOutput cmd_sample(std::uint64_t n, std::uint32_t p, std::uint32_t degree,
                         std::uint64_t seed, std::optional<std::uint64_t> max_tries);
CommandOutput cmd_borel_check(std::uint64_t n, std::uint32_t p, std::uint32_t degree,
                              std::uint64_t seed, std::uint64_t samples);

struct CertifyOptions {
  std::uint64_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t field_degree = 1;
  std::uint64_t samples = 20;
  std::uint64_t seed = 0;
  bool control = false;
  unsigned threads = 0;  ///< 0: hardware concurrency
};

CommandOutput cmd_certify(const CertifyOptions& opts);

}  // namespace edsn
