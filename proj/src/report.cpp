#include "g2root/report.hpp"

#include <sstream>

namespace g2root::report {

using genus2::Equation;

namespace {

std::string coefficient_text(const Json& c) {
  if (c.is_string()) return c.get<std::string>();
  if (c.is_number_integer()) return std::to_string(c.get<long long>());
  throw DomainError("curve coefficients must be strings or integers");
}

Json sign_json(std::optional<Sign> s) {
  if (!s) return nullptr;
  return to_int(*s);
}

std::string place_name(long place) { return place == rootnum::kInfinity ? "inf" : std::to_string(place); }

Json wild_section(const Equation& eq, const genus2::NormalizeOptions& opts, bool with_steps) {
  Json out;
  try {
    genus2::SpecialForm sf = genus2::normalize_5adic(eq, opts);
    out["wild5"] = {{"status", "proved"}};
    Json norm;
    if (with_steps) {
      Json steps = Json::array();
      for (const auto& s : sf.steps) steps.push_back({{"description", s.description}, {"change", change_json(s.change)}});
      norm["steps"] = steps;
      norm["composite"] = change_json(sf.composite);
    }
    Rational sd = genus2::discriminant(sf.equation);
    norm["special_form"] = {{"P", curve_json(sf.equation)["P"]},
                            {"a6", to_string(sf.a6())},
                            {"v6", sf.v6},
                            {"discriminant", to_string(sd)}};
    out["normalization"] = norm;
    long nu = ord(sd, 5);
    out["classification"] = {{"nu", nu},
                             {"inertia_type", genus2::to_string(genus2::inertia_type(sd))},
                             {"maximal", nu % 2 != 0},
                             {"conductor_parity", nu % 2 != 0 ? "odd" : "even"}};
  } catch (const genus2::NormalizationError& e) {
    out["wild5"] = {{"status", "not-detected"}, {"diagnostic", e.what()}};
  }
  return out;
}

}  // namespace

Equation curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("P") || !j["P"].is_array())
    throw DomainError("curve JSON needs an array field \"P\"");
  std::vector<std::string> coeffs;
  for (const auto& c : j["P"]) coeffs.push_back(coefficient_text(c));
  return Equation::from_strings(coeffs);
}

std::pair<long, Sign> parse_assertion(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw DomainError("assertion must look like P=+1 or P=-1, got '" + text + "'");
  std::string place = text.substr(0, eq), value = text.substr(eq + 1);
  long p = 0;
  try {
    std::size_t used = 0;
    p = std::stol(place, &used);
    if (used != place.size()) throw DomainError("bad place");
  } catch (const std::exception&) {
    throw DomainError("assertion place '" + place + "' is not an integer");
  }
  require_prime(p);
  Sign s;
  if (value == "+1" || value == "1") s = Sign::plus;
  else if (value == "-1") s = Sign::minus;
  else throw DomainError("assertion value must be +1 or -1, got '" + value + "'");
  return {p, s};
}

CurveInput parse_curve_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("curve file is not valid JSON: ") + e.what());
  }
  CurveInput in{curve_from_json(j), {}, std::nullopt};
  if (j.contains("assertions")) {
    if (!j["assertions"].is_object()) throw DomainError("\"assertions\" must be an object");
    for (const auto& [k, v] : j["assertions"].items()) {
      std::string val = v.is_string() ? v.get<std::string>() : v.is_number_integer() ? std::to_string(v.get<int>()) : "";
      if (val == "1") val = "+1";
      auto [p, s] = parse_assertion(k + "=" + val);
      in.assertions[p] = s;
    }
  }
  if (j.contains("precision")) {
    if (!j["precision"].is_number_unsigned()) throw DomainError("\"precision\" must be a positive integer");
    in.precision = j["precision"].get<unsigned>();
  }
  return in;
}

Json curve_json(const Equation& eq) {
  Json p = Json::array();
  for (const auto& s : eq.coefficient_strings()) p.push_back(s);
  return {{"P", p}};
}

Json change_json(const genus2::VariableChange& vc) {
  return {{"a", to_string(vc.a)}, {"b", to_string(vc.b)}, {"c", to_string(vc.c)}, {"d", to_string(vc.d)},
          {"e", to_string(vc.e)}};
}

Json disc_report(const Equation& eq) {
  Rational d = genus2::discriminant(eq);
  Json vals = Json::object();
  for (long p : prime_divisors(d.get_num() * d.get_den())) vals[std::to_string(p)] = ord(d, p);
  return {{"report", "disc"},
          {"curve", curve_json(eq)},
          {"discriminant", to_string(d)},
          {"valuations", vals},
          {"square_class_5", to_string(square_class(d, 5))}};
}

Json normalize_report(const Equation& eq, const genus2::NormalizeOptions& opts) {
  Json out = {{"report", "normalize"}, {"curve", curve_json(eq)}, {"precision", opts.precision}};
  Json w = wild_section(eq, opts, true);
  out["wild5"] = w["wild5"];
  if (w.contains("normalization")) out["normalization"] = w["normalization"];
  return out;
}

Json classify_report(const Equation& eq, const genus2::NormalizeOptions& opts) {
  Json out = {{"report", "classify"}, {"curve", curve_json(eq)}};
  Json w = wild_section(eq, opts, false);
  out["wild5"] = w["wild5"];
  if (w.contains("normalization")) out["special_form"] = w["normalization"]["special_form"];
  if (w.contains("classification")) out["classification"] = w["classification"];
  return out;
}

Json analyze_report(const Equation& eq, const std::map<long, Sign>& assertions,
                    const genus2::NormalizeOptions& opts) {
  rootnum::GlobalReport rep = rootnum::global_root_number(eq, assertions, opts);
  Json out = {{"report", "analyze"},
              {"curve", curve_json(eq)},
              {"discriminant", to_string(genus2::discriminant(eq))},
              {"precision", opts.precision}};
  Json as = Json::object();
  for (const auto& [p, s] : assertions) as[std::to_string(p)] = to_int(s);
  out["assertions"] = as;
  Json w = wild_section(eq, opts, true);
  for (const auto& [k, v] : w.items()) out[k] = v;
  Json places = Json::array();
  for (const auto& la : rep.places) {
    places.push_back({{"place", place_name(la.place)},
                      {"kind", rootnum::to_string(la.kind)},
                      {"root_number", sign_json(la.root_number)},
                      {"detail", la.detail},
                      {"provenance", la.provenance}});
  }
  out["places"] = places;
  out["global"] = rep.global ? Json(to_int(*rep.global)) : Json("PARTIAL");
  return out;
}

namespace {

std::string sign_text(const Json& v) {
  if (v.is_null()) return "unknown";
  if (v.is_string()) return v.get<std::string>();
  return v.get<int>() > 0 ? "+1" : "-1";
}

std::string poly_text(const Json& p) {
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    std::string c = p[i].get<std::string>();
    if (c == "0") continue;
    if (!out.empty()) out += c[0] == '-' ? " - " : " + ";
    else if (c[0] == '-') out += "-";
    if (c[0] == '-') c.erase(0, 1);
    if (i == 0 || c != "1") out += (c.find('/') != std::string::npos && i > 0) ? "(" + c + ")" : c;
    if (i >= 1) out += "X";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

void render_wild(std::ostringstream& os, const Json& r) {
  if (!r.contains("wild5")) return;
  os << "wild at 5: " << r["wild5"]["status"].get<std::string>() << "\n";
  if (r["wild5"].contains("diagnostic")) os << "  " << r["wild5"]["diagnostic"].get<std::string>() << "\n";
  const Json* sf = nullptr;
  if (r.contains("normalization")) {
    const Json& n = r["normalization"];
    if (n.contains("steps"))
      for (const auto& s : n["steps"]) os << "  step: " << s["description"].get<std::string>() << "\n";
    sf = &n["special_form"];
  } else if (r.contains("special_form")) {
    sf = &r["special_form"];
  }
  if (sf) {
    os << "special form: Y^2 = " << poly_text((*sf)["P"]) << "\n";
    os << "  a6 = " << (*sf)["a6"].get<std::string>() << ", v6 = " << (*sf)["v6"].get<long>() << "\n";
  }
  if (r.contains("classification")) {
    const Json& c = r["classification"];
    os << "nu = " << c["nu"].get<long>() << ", inertia " << c["inertia_type"].get<std::string>()
       << (c["maximal"].get<bool>() ? ", maximal" : ", not maximal") << "\n";
  }
}

}  // namespace

std::string render_text(const Json& r) {
  std::ostringstream os;
  const std::string kind = r.value("report", "");
  if (r.contains("curve")) os << "curve: Y^2 = " << poly_text(r["curve"]["P"]) << "\n";
  if (kind == "disc") {
    os << "discriminant: " << r["discriminant"].get<std::string>() << "\n";
    for (const auto& [p, v] : r["valuations"].items()) os << "  v_" << p << " = " << v.get<long>() << "\n";
    os << "square class at 5: " << r["square_class_5"].get<std::string>() << "\n";
  } else if (kind == "normalize" || kind == "classify") {
    render_wild(os, r);
  } else if (kind == "analyze") {
    os << "discriminant: " << r["discriminant"].get<std::string>() << "\n";
    render_wild(os, r);
    os << "local root numbers:\n";
    for (const auto& pl : r["places"]) {
      os << "  " << pl["place"].get<std::string>() << ": " << sign_text(pl["root_number"]) << " ("
         << pl["kind"].get<std::string>() << ") " << pl["detail"].get<std::string>() << "\n";
      if (!pl["provenance"].get<std::string>().empty())
        os << "      " << pl["provenance"].get<std::string>() << "\n";
    }
    os << "global root number: " << sign_text(r["global"]) << "\n";
  } else if (kind == "verify") {
    os << "suite " << r["suite"].get<std::string>() << ": " << (r["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    for (const auto& [k, v] : r["summary"].items()) os << "  " << k << ": " << v.dump() << "\n";
    for (const auto& row : r["rows"]) {
      if (row.value("pass", true) && !r.value("verbose", false)) continue;
      os << "  " << (row.value("pass", true) ? "ok   " : "FAIL ") << row.dump() << "\n";
    }
  } else {
    os << r.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace g2root::report
