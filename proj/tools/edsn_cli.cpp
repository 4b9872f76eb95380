// edsn: command-line front end over the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "edsn/edsn.h"

namespace {

constexpr int kExitUsage = 4;

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t k = 1;
};

// Accepts "p" or "p^k".
std::optional<FieldSpec> parse_field(const std::string& text) {
  FieldSpec spec;
  const auto caret = text.find('^');
  try {
    std::size_t used = 0;
    const std::string base = text.substr(0, caret);
    spec.p = static_cast<std::uint32_t>(std::stoul(base, &used));
    if (used != base.size()) return std::nullopt;
    if (caret != std::string::npos) {
      const std::string exp = text.substr(caret + 1);
      spec.k = static_cast<std::uint32_t>(std::stoul(exp, &used));
      if (used != exp.size()) return std::nullopt;
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return spec;
}

int finish(edsn_status status, edsn_document* doc, const std::string& json_path) {
  if (status != EDSN_OK) {
    std::cerr << "edsn: " << edsn_status_name(status) << ": " << edsn_last_error() << "\n";
    return kExitUsage;
  }
  const int code = edsn_document_exit_code(doc);
  if (json_path.empty()) {
    std::fputs(edsn_document_json(doc), stdout);
  } else {
    std::ofstream out(json_path, std::ios::binary);
    out << edsn_document_json(doc);
    if (!out) {
      std::cerr << "edsn: cannot write " << json_path << "\n";
      edsn_document_destroy(doc);
      return kExitUsage;
    }
  }
  edsn_document_destroy(doc);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-field constructions and certificates for the quadric X_{1,2} "
               "and its compression by the affine group"};
  app.require_subcommand(1);
  std::string json_path;
  app.add_option("--json", json_path, "Write the certificate to this file instead of stdout");

  std::uint64_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t degree = 1;
  std::uint64_t seed = 0;
  std::uint64_t samples = 20;
  std::uint64_t max_tries = 0;
  std::string field_text;
  bool control = false;
  unsigned threads = 0;

  auto* check = app.add_subcommand("check", "Decide the hypotheses on (n, p, field degree)");
  check->add_option("n", n)->required();
  check->add_option("p", p)->required();
  check->add_option("--degree", degree, "Degree k of the working field GF(p^k)");

  auto* solve = app.add_subcommand("solve", "Solve the weighted block system");
  solve->add_option("n", n)->required();
  solve->add_option("p", p)->required();

  auto* construct = app.add_subcommand("construct", "Solve, lift to n-space and verify");
  construct->add_option("n", n)->required();
  construct->add_option("p", p)->required();

  auto* sample = app.add_subcommand("sample", "Sample a point of X_{1,2} off the discriminant");
  sample->add_option("n", n)->required();
  sample->add_option("--field", field_text, "Field as p or p^k")->required();
  sample->add_option("--seed", seed);
  sample->add_option("--max-tries", max_tries, "0 selects 64 * |F|");

  auto* borel = app.add_subcommand("borel-check", "Trace identities under the affine group");
  borel->add_option("n", n)->required();
  borel->add_option("--field", field_text, "Field as p or p^k")->required();
  borel->add_option("--seed", seed);
  borel->add_option("--samples", samples);

  auto* certify = app.add_subcommand("certify", "Jacobian-rank certificate for the image of pi");
  certify->add_option("n", n)->required();
  certify->add_option("p", p)->required();
  certify->add_option("--field-degree", degree);
  certify->add_option("--samples", samples);
  certify->add_option("--seed", seed);
  certify->add_flag("--control", control, "Label the run as a control run");
  certify->add_option("--threads", threads, "Worker threads, 0 for all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  edsn_document* doc = nullptr;
  edsn_status status = EDSN_OK;
  if (*check) {
    status = edsn_run_check(n, p, degree, &doc);
    return finish(status, doc, json_path);
  }
  if (*solve) {
    status = edsn_run_solve(n, p, &doc);
    return finish(status, doc, json_path);
  }
  if (*construct) {
    status = edsn_run_construct(n, p, &doc);
    return finish(status, doc, json_path);
  }
  if (*sample || *borel) {
    const auto spec = parse_field(field_text);
    if (!spec) {
      std::cerr << "edsn: --field expects p or p^k, got '" << field_text << "'\n";
      return kExitUsage;
    }
    status = *sample ? edsn_run_sample(n, spec->p, spec->k, seed, max_tries, &doc)
                     : edsn_run_borel_check(n, spec->p, spec->k, seed, samples, &doc);
    return finish(status, doc, json_path);
  }
  edsn_certify_options opts;
  edsn_certify_options_init(&opts);
  opts.n = n;
  opts.p = p;
  opts.field_degree = degree;
  opts.samples = samples;
  opts.seed = seed;
  opts.control = control ? 1 : 0;
  opts.threads = threads;
  status = edsn_run_certify(&opts, &doc);
  return finish(status, doc, json_path);
}
