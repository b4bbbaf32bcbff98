#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarity/analysis.hpp"
#include "polarity/certificate.hpp"
#include "polarity/mis.hpp"

namespace polarity {

inline constexpr const char* kVersion = "1.0.0";

struct SuiteOptions {
  int q = 0;
  std::optional<int> alpha;  // override theta: both must be given together
  std::optional<int> beta;
  uint64_t seed = 0;
  MisBudget mis;
  int exact_alpha_cap = 40;  // compute exact alpha only up to this many vertices
  int max_q = kDefaultMaxQ;
  int max_m = kDefaultMaxDegree;
};

// Consolidated run record. Re-running the same command yields byte-identical
// JSON except for the top-level "timings_ms" object.
struct RunReport {
  Json params = Json::object();
  std::vector<Certificate> certificates;
  Json artifacts = Json::array();
  Json timings_ms = Json::object();

  bool all_pass() const;
  Json to_json() const;
};

// The full certificate battery for one q. Every claim whose preconditions
// hold at this q is included; verdicts are honest (a claim that is false at
// this q fails with a witness).
RunReport run_suite(const SuiteOptions& opt);

// Bundled context shared by the CLI paths: field, extension, Sidon set.
struct QContext {
  FieldCtx base;
  ExtFieldCtx ext;
  SidonSet sidon;
};

QContext make_q_context(int q, std::optional<int> alpha, std::optional<int> beta,
                        int max_q = kDefaultMaxQ, int max_m = kDefaultMaxDegree);

// FNV-1a 64-bit content digest, hex encoded (artifact fingerprinting).
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace polarity
