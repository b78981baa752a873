#pragma once

#include <optional>
#include <string>
#include <vector>

#include "commgraph/extremal.hpp"
#include "commgraph/formulas.hpp"
#include "commgraph/oracle.hpp"

namespace commgraph {

// One checked claim. Gating rows compare a closed form against an
// independent measurement and decide the verify exit status. Claim rows
// record a verdict on published claims that measurement contradicts; they
// are reported but never gate, so a refuted claim does not read as a broken
// toolkit.
struct PredictionRow {
  std::string name;
  std::string formula;  // human readable statement of what is being checked
  std::string predicted;
  std::optional<std::string> measured;  // absent when beyond caps or budget
  std::optional<bool> match;            // absent when not comparable
  bool gating = true;
  std::optional<std::string> verdict;  // CONFIRMED / REFUTED / UNRESOLVED
  std::optional<std::string> note;     // erratum or context
};

struct VerifyReport {
  std::string ring;
  std::vector<PredictionRow> rows;

  // True when no gating row has match == false.
  bool all_gating_match() const;
};

struct VerifyOptions {
  double budget_seconds = 60.0;
  std::uint64_t vertex_cap = 20000;
  // Pair enumeration is quadratic, so the definition level edge recount is
  // only attempted below this vertex count.
  std::uint64_t naive_cap = 4000;
};

// Runs every check that applies to the given ring: generic census, degree
// and edge checks, plus the field, modular, prime power, CRT and product
// specific closed forms.
VerifyReport build_verify_report(const RingSpec& spec,
                                 const VerifyOptions& options = {});

// Verdict sweep of the claimed independence number over composite moduli.
struct ConjectureRow {
  std::uint64_t n = 0;
  std::string conjectured;
  std::optional<std::string> alpha;  // exact value when resolved
  std::string bounds;                // [lower, upper] when not resolved
  std::string verdict;               // CONFIRMED / REFUTED / UNRESOLVED
};

std::vector<ConjectureRow> conjecture_sweep(std::uint64_t max_n,
                                            const VerifyOptions& options = {});

// Renderings. The JSON forms are deterministic: fixed key order, sorted
// witnesses, decimal strings for big values.
std::string invariants_json(const CommutingGraph& graph, const Invariants& inv);
std::string invariants_table(const CommutingGraph& graph,
                             const Invariants& inv);
std::string verify_json(const VerifyReport& report);
std::string verify_table(const VerifyReport& report);
std::string conjecture_json(const std::vector<ConjectureRow>& rows);
std::string conjecture_table(const std::vector<ConjectureRow>& rows);

}  // namespace commgraph
