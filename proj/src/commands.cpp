#include "edsn/commands.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "edsn/actions.hpp"
#include "edsn/compression.hpp"
#include "edsn/error.hpp"
#include "edsn/profile.hpp"
#include "edsn/random.hpp"
#include "edsn/trace_system.hpp"

namespace edsn {

using nlohmann::json;

json to_json(const Element& e) { return json(e.coeffs); }

json to_json(const Field& f) {
  return json{{"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.modulus()}};
}

json to_json(const AmbientPoint& a) {
  json coords = json::array();
  for (const auto& c : a.coords) coords.push_back(to_json(c));
  return coords;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

namespace {

json profile_json(const BinaryProfile& profile) {
  return json{{"n", profile.n}, {"exponents", profile.exponents}, {"r", profile.r()}};
}

json decision_json(const HypothesisDecision& d) {
  json reasons = json::array();
  for (Reason r : d.reasons) reasons.push_back(std::string(reason_name(r)));
  return json{{"applies", d.applies},
              {"required_field_degree", d.required_field_degree},
              {"field_sufficient", d.field_sufficient},
              {"reasons", reasons},
              {"profile", profile_json(d.profile)}};
}

json solution_json(const BlockSolution& sol) {
  json c = json::array();
  for (const auto& e : sol.c) c.push_back(to_json(e));
  return json{{"field", to_json(sol.field)}, {"c", c}};
}

class Checks {
 public:
  void add(const std::string& name, bool passed) {
    list_.push_back(json{{"name", name}, {"passed", passed}});
    all_ = all_ && passed;
  }
  bool all() const { return all_; }
  json list() const { return list_; }

 private:
  json list_ = json::array();
  bool all_ = true;
};

json envelope(const std::string& command, json inputs, const Field& field, json payload,
              const Checks& checks) {
  return json{{"schema_version", kSchemaVersion}, {"command", command},
              {"inputs", std::move(inputs)},      {"field", to_json(field)},
              {"payload", std::move(payload)},    {"checks", checks.list()}};
}

json error_payload(const Error& e) {
  return json{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}};
}

}  // namespace

CommandOutput cmd_check(std::uint64_t n, std::uint32_t p, std::uint32_t degree) {
  const Field field = Field::make(p, degree);
  const HypothesisDecision d = check_hypotheses(n, p, degree);
  Checks checks;
  checks.add("p_divides_n", n % p == 0);
  checks.add("r_at_least_4", d.profile.r() >= 4);
  checks.add("field_contains_required_subfield", degree % d.required_field_degree == 0);
  json inputs{{"n", n}, {"p", p}, {"degree", degree}};
  return {envelope("check", inputs, field, decision_json(d), checks),
          d.field_sufficient ? kExitOk : kExitHypothesisNotMet};
}

CommandOutput cmd_solve(std::uint64_t n, std::uint32_t p) {
  const Field base = Field::make(p, 1);
  const BinaryProfile profile = binary_profile(n);
  const WeightVector w = weights_mod_p(profile, p);
  json inputs{{"n", n}, {"p", p}};
  Checks checks;
  try {
    const BlockSolution sol = solve_block_system(profile, p);
    const BlockResiduals res = evaluate_block_system(sol.field, w.weights, sol.c);
    const bool nontrivial = std::any_of(sol.c.begin(), sol.c.end(),
                                        [&](const Element& e) { return !sol.field.is_zero(e); });
    checks.add("linear_residual_zero", sol.field.is_zero(res.linear));
    checks.add("quadratic_residual_zero", sol.field.is_zero(res.quadratic));
    checks.add("nontrivial", nontrivial);
    checks.add("last_block_zero", sol.field.is_zero(sol.c.back()));
    json payload = solution_json(sol);
    payload["weights"] = w.weights;
    payload["profile"] = profile_json(profile);
    payload["checks"] = json{{"linear", to_json(res.linear)}, {"quadratic", to_json(res.quadratic)}};
    return {envelope("solve", inputs, sol.field, payload, checks),
            checks.all() ? kExitOk : kExitVerificationFailed};
  } catch (const Error& e) {
    if (e.code() != Errc::InvalidProfile) throw;
    json payload = error_payload(e);
    payload["weights"] = w.weights;
    payload["profile"] = profile_json(profile);
    return {envelope("solve", inputs, base, payload, checks), kExitHypothesisNotMet};
  }
}

CommandOutput cmd_construct(std::uint64_t n, std::uint32_t p) {
  const Field base = Field::make(p, 1);
  const BinaryProfile profile = binary_profile(n);
  const WeightVector w = weights_mod_p(profile, p);
  json inputs{{"n", n}, {"p", p}};
  Checks checks;
  try {
    const BlockSolution sol = solve_block_system(profile, p);
    const BlockResiduals res = evaluate_block_system(sol.field, w.weights, sol.c);
    const AmbientPoint point = lift_block_solution(profile, sol);
    const Element trace = power_sum(point, 1);
    const Element trace_sq = power_sum(point, 2);
    const bool on_variety = on_x12(point);
    const bool diagonal = in_small_diagonal(point);
    const std::size_t smooth = on_variety ? smoothness_rank(point) : 0;

    checks.add("block_system_solved",
               sol.field.is_zero(res.linear) && sol.field.is_zero(res.quadratic));
    checks.add("trace_zero", sol.field.is_zero(trace));
    checks.add("trace_of_square_zero", sol.field.is_zero(trace_sq));
    checks.add("on_x12", on_variety);
    checks.add("off_small_diagonal", !diagonal);
    checks.add("smooth_point", smooth == 2);

    json payload{{"profile", profile_json(profile)},
                 {"weights", w.weights},
                 {"solution", solution_json(sol)},
                 {"point", to_json(point)},
                 {"trace", to_json(trace)},
                 {"trace_of_square", to_json(trace_sq)},
                 {"in_discriminant", in_discriminant(point)},
                 {"in_small_diagonal", diagonal},
                 {"smoothness_rank", smooth}};
    return {envelope("construct", inputs, sol.field, payload, checks),
            checks.all() ? kExitOk : kExitVerificationFailed};
  } catch (const Error& e) {
    if (e.code() != Errc::InvalidProfile) throw;
    json payload = error_payload(e);
    payload["profile"] = profile_json(profile);
    return {envelope("construct", inputs, base, payload, checks), kExitHypothesisNotMet};
  }
}

namespace {

json no_point_payload(std::uint64_t seed, std::uint64_t max_tries) {
  return json{{"error", "NoPointFound"},
              {"seed", seed},
              {"max_tries", max_tries},
              {"suggestion",
               "X_{1,2} minus the discriminant may be empty or sparse over this field; "
               "retry with a larger field degree"}};
}

}  // namespace

CommandOutput cmd_sample(std::uint64_t n, std::uint32_t p, std::uint32_t degree,
                         std::uint64_t seed, std::optional<std::uint64_t> max_tries) {
  const Field field = Field::make(p, degree);
  const std::uint64_t tries = max_tries.value_or(default_max_tries(field));
  json inputs{{"n", n}, {"p", p}, {"degree", degree}, {"seed", seed}, {"max_tries", tries}};
  Checks checks;
  auto sample = sample_x12_off_delta(n, field, seed, tries);
  if (!sample) {
    checks.add("point_found", false);
    return {envelope("sample", inputs, field, no_point_payload(seed, tries), checks),
            kExitVerificationFailed};
  }
  checks.add("point_found", true);
  checks.add("on_x12", on_x12(sample->point));
  checks.add("off_discriminant", !in_discriminant(sample->point));
  json payload{{"point", to_json(sample->point)}, {"seed", seed}, {"tries", sample->tries}};
  return {envelope("sample", inputs, field, payload, checks),
          checks.all() ? kExitOk : kExitVerificationFailed};
}

CommandOutput cmd_borel_check(std::uint64_t n, std::uint32_t p, std::uint32_t degree,
                              std::uint64_t seed, std::uint64_t samples) {
  const Field field = Field::make(p, degree);
  const std::uint64_t tries = default_max_tries(field);
  const bool p_divides_n = n % p == 0;
  json inputs{{"n", n}, {"p", p}, {"degree", degree}, {"seed", seed}, {"samples", samples}};
  Checks checks;

  // Points use seeds seed, seed + 1, ...; group elements come from one
  // stream seeded with seed.
  ElementRng group_rng(seed);
  json reports = json::array();
  bool identities = true;
  bool membership_consistent = true;
  bool invariant = true;
  for (std::uint64_t i = 0; i < samples; ++i) {
    auto sample = sample_x12_off_delta(n, field, seed + i, tries);
    if (!sample) {
      checks.add("points_found", false);
      return {envelope("borel-check", inputs, field, no_point_payload(seed + i, tries), checks),
              kExitVerificationFailed};
    }
    Element alpha = group_rng.uniform_nonzero(field);
    Element beta = group_rng.uniform(field);
    const BorelElement g = make_borel(field, std::move(alpha), std::move(beta));
    const BorelInvarianceReport rep = borel_invariance_report(sample->point, g);
    const bool expect_stay = p_divides_n || field.is_zero(g.beta);
    const bool affine = affine_invariance_check(sample->point, g);
    identities = identities && rep.identities_hold;
    membership_consistent = membership_consistent && rep.stays_on_x12 == expect_stay &&
                            rep.stays_on_x12 == on_x12(borel_act(g, sample->point));
    invariant = invariant && affine;
    reports.push_back(json{{"seed", seed + i},
                           {"point", to_json(sample->point)},
                           {"g", json{{"alpha", to_json(g.alpha)}, {"beta", to_json(g.beta)}}},
                           {"s1_after", to_json(rep.s1_after)},
                           {"p2_after", to_json(rep.p2_after)},
                           {"n_beta", to_json(rep.n_beta)},
                           {"n_beta_squared", to_json(rep.n_beta_sq)},
                           {"identities_hold", rep.identities_hold},
                           {"stays_on_x12", rep.stays_on_x12},
                           {"pi_invariant", affine}});
  }
  checks.add("points_found", true);
  checks.add("trace_identities", identities);
  checks.add("membership_matches_divisibility", membership_consistent);
  checks.add("pi_affine_invariance", invariant);
  json payload{{"p_divides_n", p_divides_n}, {"reports", reports}};
  return {envelope("borel-check", inputs, field, payload, checks),
          checks.all() ? kExitOk : kExitVerificationFailed};
}

namespace {

struct SampleOutcome {
  std::optional<SampleResult> sample;
  RankCertificate cert;
  KernelWitness witness;
  std::size_t smooth = 0;
};

SampleOutcome certify_one(std::size_t n, const Field& field, std::uint64_t seed,
                          std::uint64_t tries) {
  SampleOutcome out;
  out.sample = sample_x12_off_delta(n, field, seed, tries);
  if (out.sample) {
    out.smooth = smoothness_rank(out.sample->point);
    out.cert = rank_certificate(out.sample->point);
    out.witness = kernel_witness(out.sample->point);
  }
  return out;
}

}  // namespace

CommandOutput cmd_certify(const CertifyOptions& opts) {
  const std::uint64_t n = opts.n;
  const std::uint32_t p = opts.p;
  const Field field = Field::make(p, opts.field_degree);
  if (n < 5) throw Error(Errc::InvalidArgument, "certify requires n >= 5");
  const HypothesisDecision decision = check_hypotheses(n, p, opts.field_degree);
  const bool control = opts.control || !decision.field_sufficient;
  const std::uint64_t tries = default_max_tries(field);

  json inputs{{"n", n},
              {"p", p},
              {"field_degree", opts.field_degree},
              {"samples", opts.samples},
              {"seed", opts.seed},
              {"control", opts.control}};
  Checks checks;
  json payload{{"hypotheses", decision_json(decision)},
               {"control", control},
               {"theorem_bound", n - 4},
               {"generic_bound", n - 3}};

  if (decision.applies) {
    const BlockSolution sol = solve_block_system(decision.profile, p);
    const AmbientPoint lift = lift_block_solution(decision.profile, sol);
    json block = solution_json(sol);
    block["point"] = to_json(lift);
    payload["block_solution"] = block;
    checks.add("block_solution_on_x12", on_x12(lift) && !in_small_diagonal(lift));
  } else {
    payload["block_solution"] = nullptr;
  }

  std::vector<SampleOutcome> outcomes(opts.samples);
  const unsigned workers = std::max(1u, opts.threads ? opts.threads
                                                     : std::thread::hardware_concurrency());
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::uint64_t i = w; i < opts.samples; i += workers) {
        outcomes[i] = certify_one(n, field, opts.seed + i, tries);
      }
    }));
  }
  for (auto& job : jobs) job.get();

  json per_sample = json::array();
  std::set<std::size_t> observed;
  bool within = true;
  bool witnesses = true;
  bool tangent_ok = true;
  for (std::uint64_t i = 0; i < opts.samples; ++i) {
    const SampleOutcome& o = outcomes[i];
    if (!o.sample) {
      checks.add("points_found", false);
      payload.update(no_point_payload(opts.seed + i, tries));
      payload["verdict"] = "incomplete";
      return {envelope("certify", inputs, field, payload, checks), kExitVerificationFailed};
    }
    observed.insert(o.cert.restricted_rank);
    within = within && o.cert.satisfied;
    witnesses = witnesses && o.witness.holds;
    tangent_ok = tangent_ok && o.cert.tangent_dim == n - 2 && o.smooth == 2;
    per_sample.push_back(json{
        {"seed", o.sample->seed},
        {"tries", o.sample->tries},
        {"point", to_json(o.sample->point)},
        {"smoothness_rank", o.smooth},
        {"ambient_rank", o.cert.ambient_rank},
        {"tangent_dim", o.cert.tangent_dim},
        {"restricted_rank", o.cert.restricted_rank},
        {"bound", o.cert.bound},
        {"satisfied", o.cert.satisfied},
        {"kernel_witness", json{{"holds", o.witness.holds},
                                {"component_1_2_3", to_json(o.witness.moved_component)},
                                {"component_1_4_3", to_json(o.witness.fixed_component)}}}});
  }
  checks.add("points_found", true);
  checks.add("smooth_tangent_spaces", tangent_ok);
  checks.add("restricted_rank_within_bound", within);
  checks.add("kernel_witness", witnesses);

  payload["samples"] = per_sample;
  payload["observed_ranks"] = json(std::vector<std::size_t>(observed.begin(), observed.end()));
  payload["verdict"] = checks.all() ? "satisfied" : "violated";
  return {envelope("certify", inputs, field, payload, checks),
          checks.all() ? kExitOk : kExitVerificationFailed};
}

}  // namespace edsn
