#pragma once

// Exhaustive verification suites behind `g2root verify`.

#include "g2root/report.hpp"

#include <cstdint>
#include <string>

namespace g2root::suites {

using report::Json;

struct SuiteParams {
  long p = 5;
  unsigned fmax = 4;
  long max_conductor = 2;
  unsigned unif_steps = 100;  // chi(5) = exp(2 pi i k / unif_steps)
  unsigned samples = 1000;
  std::uint64_t seed = 20240517;
  bool verbose = false;
};

/// Lefschetz traces against the closed form over all (n, r, f), point-count
/// consistency and the f = 1 fixed-point counts.
Json verify_traces(const SuiteParams& params);
/// |w(chi)| = 1 for every character of conductor 1..max_conductor with
/// chi(5) on the unif_steps-th roots of unity; Abbes-Saito and gauge checks
/// from conductor 2 on.
Json verify_epsilon(const SuiteParams& params);
/// Hilbert symbol identities and the product formula.
Json verify_symbols(const SuiteParams& params);
/// Discriminant transformation law and the monic-quintic identity.
Json verify_discriminant(const SuiteParams& params);

/// Dispatches on "traces", "epsilon", "symbols", "discriminant".
Json run_suite(const std::string& name, const SuiteParams& params);

}  // namespace g2root::suites
