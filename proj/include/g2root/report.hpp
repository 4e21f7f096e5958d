#pragma once

// JSON reports for curves: input parsing, the analyze pipeline and the
// plain-text rendering derived from the JSON.

#include "g2root/rootnum.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>

namespace g2root::report {

using Json = nlohmann::ordered_json;

struct CurveInput {
  genus2::Equation equation;
  std::map<long, Sign> assertions;
  std::optional<unsigned> precision;
};

/// {"P": ["c0", ..., "c5" | "c6"], "assertions": {"2": "+1"}, "precision": 40}
/// Only "P" is required. Throws DomainError on malformed input.
CurveInput parse_curve_input(const std::string& text);
genus2::Equation curve_from_json(const Json& j);

/// "2=+1", "7=-1".
std::pair<long, Sign> parse_assertion(const std::string& text);

Json curve_json(const genus2::Equation& eq);
Json change_json(const genus2::VariableChange& vc);

Json disc_report(const genus2::Equation& eq);
Json normalize_report(const genus2::Equation& eq, const genus2::NormalizeOptions& opts);
Json classify_report(const genus2::Equation& eq, const genus2::NormalizeOptions& opts);
Json analyze_report(const genus2::Equation& eq, const std::map<long, Sign>& assertions,
                    const genus2::NormalizeOptions& opts);

/// Human-readable form of any report produced here or by the suites.
std::string render_text(const Json& report);

}  // namespace g2root::report
