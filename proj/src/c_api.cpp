#include "g2root/g2root.h"

#include "g2root/artin_schreier.hpp"
#include "g2root/report.hpp"
#include "g2root/suites.hpp"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

using namespace g2root;

struct g2r_curve {
  genus2::Equation eq;
};

struct g2r_options {
  std::optional<unsigned> precision;
  std::map<long, Sign> assertions;
};

namespace {

thread_local std::string last_error;

g2r_status fail(g2r_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Maps exceptions from the core onto status codes.
template <class F>
g2r_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const genus2::SingularCurveError& e) {
    return fail(G2R_E_SINGULAR, e.what());
  } catch (const rootnum::AssertionConflict& e) {
    return fail(G2R_E_CONFLICT, e.what());
  } catch (const genus2::NormalizationError& e) {
    return fail(G2R_E_NORMALIZATION, e.what());
  } catch (const genus2::NotWildError& e) {
    return fail(G2R_E_NOT_WILD, e.what());
  } catch (const rootnum::UnsupportedError& e) {
    return fail(G2R_E_UNSUPPORTED, e.what());
  } catch (const report::Json::exception& e) {
    return fail(G2R_E_PARSE, e.what());
  } catch (const DomainError& e) {
    std::string m = e.what();
    bool parse = m.find("malformed") != std::string::npos || m.find("JSON") != std::string::npos ||
                 m.find("zero denominator") != std::string::npos || m.find("empty rational") != std::string::npos;
    return fail(parse ? G2R_E_PARSE : G2R_E_DOMAIN, m);
  } catch (const std::bad_alloc&) {
    return fail(G2R_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(G2R_E_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

genus2::NormalizeOptions normalize_options(const g2r_options* opts) {
  genus2::NormalizeOptions o = genus2::default_normalize_options();
  if (opts && opts->precision) o.precision = *opts->precision;
  return o;
}

}  // namespace

extern "C" {

const char* g2r_version(void) { return "1.0.0"; }

const char* g2r_last_error(void) { return last_error.c_str(); }

const char* g2r_status_name(g2r_status s) {
  switch (s) {
    case G2R_OK: return "ok";
    case G2R_E_INVALID_ARGUMENT: return "invalid argument";
    case G2R_E_PARSE: return "parse error";
    case G2R_E_SINGULAR: return "singular curve";
    case G2R_E_DOMAIN: return "domain error";
    case G2R_E_NORMALIZATION: return "normalization failed";
    case G2R_E_NOT_WILD: return "not wild at 5";
    case G2R_E_CONFLICT: return "conflicting assertion";
    case G2R_E_UNSUPPORTED: return "unsupported";
    case G2R_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void g2r_string_free(char* s) { std::free(s); }

g2r_status g2r_options_new(g2r_options** out) {
  if (!out) return fail(G2R_E_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = new g2r_options();
    return G2R_OK;
  });
}

void g2r_options_free(g2r_options* opts) { delete opts; }

g2r_status g2r_options_set_precision(g2r_options* opts, unsigned digits) {
  if (!opts) return fail(G2R_E_INVALID_ARGUMENT, "null options");
  if (digits < 4 || digits > 100000) return fail(G2R_E_INVALID_ARGUMENT, "precision must be in [4, 100000]");
  opts->precision = digits;
  return G2R_OK;
}

g2r_status g2r_options_add_assertion(g2r_options* opts, long prime, int sign) {
  if (!opts) return fail(G2R_E_INVALID_ARGUMENT, "null options");
  return guarded([&] {
    require_prime(prime);
    opts->assertions[prime] = sign_from_int(sign);
    return G2R_OK;
  });
}

g2r_status g2r_options_add_assertion_text(g2r_options* opts, const char* text) {
  if (!opts || !text) return fail(G2R_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto [p, s] = report::parse_assertion(text);
    opts->assertions[p] = s;
    return G2R_OK;
  });
}

g2r_status g2r_curve_from_json(const char* json, g2r_options* opts, g2r_curve** out) {
  if (!json || !out) return fail(G2R_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    report::CurveInput in = report::parse_curve_input(json);
    if (opts) {
      for (const auto& [p, s] : in.assertions) opts->assertions.emplace(p, s);
      if (in.precision && !opts->precision) opts->precision = in.precision;
    }
    *out = new g2r_curve{std::move(in.equation)};
    return G2R_OK;
  });
}

g2r_status g2r_curve_from_coefficients(const char* const* coeffs, size_t count, g2r_curve** out) {
  if (!coeffs || !out) return fail(G2R_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<std::string> c;
    for (size_t i = 0; i < count; ++i) {
      if (!coeffs[i]) return fail(G2R_E_INVALID_ARGUMENT, "null coefficient");
      c.emplace_back(coeffs[i]);
    }
    *out = new g2r_curve{genus2::Equation::from_strings(c)};
    return G2R_OK;
  });
}

void g2r_curve_free(g2r_curve* curve) { delete curve; }

g2r_status g2r_curve_degree(const g2r_curve* curve, int* out) {
  if (!curve || !out) return fail(G2R_E_INVALID_ARGUMENT, "null argument");
  *out = curve->eq.degree();
  return G2R_OK;
}

g2r_status g2r_curve_discriminant(const g2r_curve* curve, char** out) {
  if (!curve || !out) return fail(G2R_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(to_string(genus2::discriminant(curve->eq)));
    return G2R_OK;
  });
}

g2r_status g2r_disc_json(const g2r_curve* curve, char** out) {
  if (!curve || !out) return fail(G2R_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(report::disc_report(curve->eq).dump(2));
    return G2R_OK;
  });
}

g2r_status g2r_normalize_json(const g2r_curve* curve, const g2r_options* opts, char** out) {
  if (!curve || !out) return fail(G2R_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(report::normalize_report(curve->eq, normalize_options(opts)).dump(2));
    return G2R_OK;
  });
}

g2r_status g2r_classify_json(const g2r_curve* curve, const g2r_options* opts, char** out) {
  if (!curve || !out) return fail(G2R_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(report::classify_report(curve->eq, normalize_options(opts)).dump(2));
    return G2R_OK;
  });
}

g2r_status g2r_analyze_json(const g2r_curve* curve, const g2r_options* opts, char** out, int* global) {
  if (!curve || !out) return fail(G2R_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::map<long, Sign> as = opts ? opts->assertions : std::map<long, Sign>{};
    report::Json r = report::analyze_report(curve->eq, as, normalize_options(opts));
    if (global) *global = r["global"].is_number() ? r["global"].get<int>() : 0;
    *out = dup_string(r.dump(2));
    return G2R_OK;
  });
}

g2r_status g2r_local_root_number_5(const g2r_curve* curve, const g2r_options* opts, int* out) {
  if (!curve || !out) return fail(G2R_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto o = normalize_options(opts);
    genus2::MaximalityWitness w = genus2::is_maximal(curve->eq, o);
    if (!w.maximal)
      return fail(G2R_E_UNSUPPORTED, "inertia " + genus2::to_string(w.type) + " is not maximal; no formula applies");
    genus2::SpecialForm sf = genus2::normalize_5adic(curve->eq, o);
    *out = to_int(rootnum::local_root_number_5(sf, w.special_delta, 1));
    return G2R_OK;
  });
}

g2r_status g2r_verify_json(const char* suite, const char* params_json, char** out, int* passed) {
  if (!suite || !out) return fail(G2R_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    suites::SuiteParams params;
    if (params_json && *params_json) {
      report::Json j = report::Json::parse(params_json);
      if (!j.is_object()) return fail(G2R_E_PARSE, "suite parameters must be a JSON object");
      params.p = j.value("p", params.p);
      params.fmax = j.value("fmax", params.fmax);
      params.max_conductor = j.value("max_conductor", params.max_conductor);
      params.unif_steps = j.value("unif_steps", params.unif_steps);
      params.samples = j.value("samples", params.samples);
      params.seed = j.value("seed", params.seed);
      params.verbose = j.value("verbose", params.verbose);
    }
    report::Json r = suites::run_suite(suite, params);
    if (passed) *passed = r["pass"].get<bool>() ? 1 : 0;
    *out = dup_string(r.dump(2));
    return G2R_OK;
  });
}

g2r_status g2r_render_text(const char* report_json, char** out) {
  if (!report_json || !out) return fail(G2R_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup_string(report::render_text(report::Json::parse(report_json)));
    return G2R_OK;
  });
}

g2r_status g2r_hilbert(const char* a, const char* b, long p, int* out) {
  if (!a || !b || !out) return fail(G2R_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = to_int(hilbert(parse_rational(a), parse_rational(b), p));
    return G2R_OK;
  });
}

g2r_status g2r_trace_formula(int n, long r, unsigned f, long p, long long* out) {
  if (!out) return fail(G2R_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = ff::trace_formula(n, r, f, p);
    return G2R_OK;
  });
}

}  // extern "C"
