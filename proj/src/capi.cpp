#include "edsn/edsn.h"

#include <exception>
#include <string>

#include "edsn/commands.hpp"
#include "edsn/compression.hpp"
#include "edsn/error.hpp"
#include "edsn/gf.hpp"
#include "edsn/profile.hpp"
#include "edsn/quadric.hpp"

struct edsn_field {
  edsn::Field field;
};

struct edsn_point {
  edsn::AmbientPoint point;
};

struct edsn_document {
  std::string json;
  int exit_code;
};

namespace {

thread_local std::string last_error;

edsn_status to_status(edsn::Errc code) {
  using edsn::Errc;
  switch (code) {
    case Errc::InvalidArgument: return EDSN_ERR_INVALID_ARGUMENT;
    case Errc::EvenCharacteristic: return EDSN_ERR_EVEN_CHARACTERISTIC;
    case Errc::NotPrime: return EDSN_ERR_NOT_PRIME;
    case Errc::FieldTooLarge: return EDSN_ERR_FIELD_TOO_LARGE;
    case Errc::DivisionByZero: return EDSN_ERR_DIVISION_BY_ZERO;
    case Errc::DimensionMismatch: return EDSN_ERR_DIMENSION_MISMATCH;
    case Errc::SizeMismatch: return EDSN_ERR_SIZE_MISMATCH;
    case Errc::InvalidProfile: return EDSN_ERR_INVALID_PROFILE;
    case Errc::NotOnVariety: return EDSN_ERR_NOT_ON_VARIETY;
    case Errc::OnDiscriminant: return EDSN_ERR_ON_DISCRIMINANT;
    case Errc::NoPointFound: return EDSN_ERR_NO_POINT_FOUND;
  }
  return EDSN_ERR_INTERNAL;
}

edsn_status fail(edsn_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Fn>
edsn_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const edsn::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(EDSN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(EDSN_ERR_INTERNAL, "unknown exception");
  }
}

edsn_status emit(edsn::CommandOutput result, edsn_document** out) {
  *out = new edsn_document{edsn::render(result.certificate), result.exit_code};
  return EDSN_OK;
}

#define EDSN_REQUIRE(cond)                                                   \
  do {                                                                       \
    if (!(cond)) return fail(EDSN_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* edsn_status_name(edsn_status status) {
  switch (status) {
    case EDSN_OK: return "Ok";
    case EDSN_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case EDSN_ERR_EVEN_CHARACTERISTIC: return "EvenCharacteristic";
    case EDSN_ERR_NOT_PRIME: return "NotPrime";
    case EDSN_ERR_FIELD_TOO_LARGE: return "FieldTooLarge";
    case EDSN_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case EDSN_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case EDSN_ERR_SIZE_MISMATCH: return "SizeMismatch";
    case EDSN_ERR_INVALID_PROFILE: return "InvalidProfile";
    case EDSN_ERR_NOT_ON_VARIETY: return "NotOnVariety";
    case EDSN_ERR_ON_DISCRIMINANT: return "OnDiscriminant";
    case EDSN_ERR_NO_POINT_FOUND: return "NoPointFound";
    case EDSN_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* edsn_last_error(void) { return last_error.c_str(); }

const char* edsn_version(void) { return edsn::kSchemaVersion; }

edsn_status edsn_field_create(uint32_t p, uint32_t k, edsn_field** out) {
  EDSN_REQUIRE(out);
  return guarded([&] {
    *out = new edsn_field{edsn::Field::make(p, k)};
    return EDSN_OK;
  });
}

void edsn_field_destroy(edsn_field* field) { delete field; }

uint32_t edsn_field_characteristic(const edsn_field* field) {
  return field ? field->field.characteristic() : 0;
}

uint32_t edsn_field_degree(const edsn_field* field) { return field ? field->field.degree() : 0; }

uint64_t edsn_field_order(const edsn_field* field) { return field ? field->field.order() : 0; }

edsn_status edsn_field_modulus(const edsn_field* field, uint32_t* out, size_t capacity) {
  EDSN_REQUIRE(field && out);
  const auto& m = field->field.modulus();
  if (capacity < m.size()) return fail(EDSN_ERR_SIZE_MISMATCH, "modulus buffer too small");
  std::copy(m.begin(), m.end(), out);
  return EDSN_OK;
}

edsn_status edsn_field_sqrt(const edsn_field* field, const uint32_t* a, uint32_t* root,
                            int* has_root) {
  EDSN_REQUIRE(field && a && root && has_root);
  return guarded([&] {
    const auto& f = field->field;
    const auto r = f.sqrt(f.element({a, f.degree()}));
    *has_root = r ? 1 : 0;
    if (r) std::copy(r->coeffs.begin(), r->coeffs.end(), root);
    return EDSN_OK;
  });
}

edsn_status edsn_point_create(const edsn_field* field, const uint32_t* coeffs, size_t n,
                              edsn_point** out) {
  EDSN_REQUIRE(field && coeffs && out);
  return guarded([&] {
    const auto& f = field->field;
    std::vector<edsn::Element> coords;
    for (size_t i = 0; i < n; ++i) coords.push_back(f.element({coeffs + i * f.degree(), f.degree()}));
    *out = new edsn_point{edsn::make_point(f, std::move(coords))};
    return EDSN_OK;
  });
}

edsn_status edsn_point_sample(const edsn_field* field, size_t n, uint64_t seed, uint64_t max_tries,
                              edsn_point** out) {
  EDSN_REQUIRE(field && out);
  return guarded([&] {
    const auto& f = field->field;
    auto sample = edsn::sample_x12_off_delta(n, f, seed,
                                             max_tries ? max_tries : edsn::default_max_tries(f));
    if (!sample) return fail(EDSN_ERR_NO_POINT_FOUND, "no point of X_{1,2} off the discriminant found");
    *out = new edsn_point{std::move(sample->point)};
    return EDSN_OK;
  });
}

void edsn_point_destroy(edsn_point* point) { delete point; }

size_t edsn_point_size(const edsn_point* point) { return point ? point->point.size() : 0; }

edsn_status edsn_point_coords(const edsn_point* point, uint32_t* out, size_t capacity) {
  EDSN_REQUIRE(point && out);
  const auto& a = point->point;
  const size_t k = a.field.degree();
  if (capacity < a.size() * k) return fail(EDSN_ERR_SIZE_MISMATCH, "coordinate buffer too small");
  for (size_t i = 0; i < a.size(); ++i) std::copy_n(a.coords[i].coeffs.begin(), k, out + i * k);
  return EDSN_OK;
}

int edsn_point_on_x12(const edsn_point* point) { return point && edsn::on_x12(point->point); }

int edsn_point_in_discriminant(const edsn_point* point) {
  return point && edsn::in_discriminant(point->point);
}

int edsn_point_in_small_diagonal(const edsn_point* point) {
  return point && edsn::in_small_diagonal(point->point);
}

edsn_status edsn_point_smoothness_rank(const edsn_point* point, size_t* rank) {
  EDSN_REQUIRE(point && rank);
  return guarded([&] {
    *rank = edsn::smoothness_rank(point->point);
    return EDSN_OK;
  });
}

edsn_status edsn_point_rank_certificate(const edsn_point* point, edsn_rank_report* out) {
  EDSN_REQUIRE(point && out);
  return guarded([&] {
    const auto cert = edsn::rank_certificate(point->point);
    *out = edsn_rank_report{cert.ambient_rank, cert.tangent_dim, cert.restricted_rank, cert.bound,
                            cert.satisfied ? 1 : 0,
                            point->point.size() >= 5 && edsn::kernel_witness(point->point).holds};
    return EDSN_OK;
  });
}

edsn_status edsn_check_hypotheses(uint64_t n, uint32_t p, uint32_t degree, edsn_hypothesis* out) {
  EDSN_REQUIRE(out);
  return guarded([&] {
    if (!edsn::is_prime(p)) return fail(EDSN_ERR_NOT_PRIME, "p is not prime");
    const auto d = edsn::check_hypotheses(n, p, degree);
    *out = edsn_hypothesis{d.applies, d.required_field_degree, d.field_sufficient, d.profile.r()};
    return EDSN_OK;
  });
}

edsn_status edsn_run_check(uint64_t n, uint32_t p, uint32_t degree, edsn_document** out) {
  EDSN_REQUIRE(out);
  return guarded([&] { return emit(edsn::cmd_check(n, p, degree), out); });
}

edsn_status edsn_run_solve(uint64_t n, uint32_t p, edsn_document** out) {
  EDSN_REQUIRE(out);
  return guarded([&] { return emit(edsn::cmd_solve(n, p), out); });
}

edsn_status edsn_run_construct(uint64_t n, uint32_t p, edsn_document** out) {
  EDSN_REQUIRE(out);
  return guarded([&] { return emit(edsn::cmd_construct(n, p), out); });
}

edsn_status edsn_run_sample(uint64_t n, uint32_t p, uint32_t degree, uint64_t seed,
                            uint64_t max_tries, edsn_document** out) {
  EDSN_REQUIRE(out);
  return guarded([&] {
    std::optional<std::uint64_t> tries;
    if (max_tries) tries = max_tries;
    return emit(edsn::cmd_sample(n, p, degree, seed, tries), out);
  });
}

edsn_status edsn_run_borel_check(uint64_t n, uint32_t p, uint32_t degree, uint64_t seed,
                                 uint64_t samples, edsn_document** out) {
  EDSN_REQUIRE(out);
  return guarded([&] { return emit(edsn::cmd_borel_check(n, p, degree, seed, samples), out); });
}

void edsn_certify_options_init(edsn_certify_options* opts) {
  if (!opts) return;
  const edsn::CertifyOptions defaults;
  *opts = edsn_certify_options{defaults.n,       defaults.p,    defaults.field_degree,
                               defaults.samples, defaults.seed, defaults.control ? 1 : 0,
                               defaults.threads};
}

edsn_status edsn_run_certify(const edsn_certify_options* opts, edsn_document** out) {
  EDSN_REQUIRE(opts && out);
  return guarded([&] {
    edsn::CertifyOptions o;
    o.n = opts->n;
    o.p = opts->p;
    o.field_degree = opts->field_degree;
    o.samples = opts->samples;
    o.seed = opts->seed;
    o.control = opts->control != 0;
    o.threads = opts->threads;
    return emit(edsn::cmd_certify(o), out);
  });
}

const char* edsn_document_json(const edsn_document* doc) { return doc ? doc->json.c_str() : ""; }

int edsn_document_exit_code(const edsn_document* doc) { return doc ? doc->exit_code : -1; }

void edsn_document_destroy(edsn_document* doc) { delete doc; }

}  // extern "C"
