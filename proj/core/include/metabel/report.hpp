#pragma once

// End-to-end analysis of one knot record and its machine-readable report.
// The JSON layout is documented in docs/report-schema.md.

#include "metabel/decomposition.hpp"
#include "metabel/ingest.hpp"
#include "metabel/metabelian.hpp"
#include "metabel/obstruction.hpp"
#include "metabel/snf.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace metabel {

struct PipelineOptions {
  FiltrationOptions filtration;
  bool with_oracle = false;
};

struct OracleResult {
  InvariantFactors invariants;
  Decomposition decomposition;
};

struct KnotReport {
  std::string name;
  std::vector<std::vector<std::int64_t>> seifert;
  NormalizedAlexanderPoly alexander;
  RootClassSet root_classes;
  FiltrationReport filtration;
  Decomposition decomposition;
  std::optional<OracleResult> oracle;
  /// filtration and oracle decompositions agree; set when the oracle ran.
  std::optional<bool> agreement;
  /// filtration decomposition matches the record's "expected" field.
  std::optional<bool> expected_match;
  std::optional<double> elapsed_ms;

  std::size_t genus() const { return seifert.size() / 2; }
};

/// Validates, runs the filtration and optionally the oracle.
/// Propagates ValidationError and InternalError.
KnotReport analyze_knot(const KnotRecord& record, const PipelineOptions& options);

nlohmann::json to_json(const KnotReport& r, bool include_timing = true);
/// Inverse of to_json; throws ParseError on schema violations.
KnotReport knot_report_from_json(const nlohmann::json& j);

std::string to_text(const KnotReport& r, bool include_timing = true);

/// {"format_version": 1, "command": ..., "knots": [...]}.
nlohmann::json report_document(const std::string& command, const std::vector<KnotReport>& reports,
                               bool include_timing);

// --- representations ----------------------------------------------------------

struct RepresentationEntry {
  Poly factor;
  Poly modulus;
  std::size_t solution = 0;
  Matrix<NFElement> phi;
  Matrix<NFElement> meridian;
  std::vector<Matrix<NFElement>> generators;  // rho(e_i, 0)
  HomomorphismCheck check;
};

struct RepresentationReport {
  std::string knot;
  int level = 2;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<RepresentationEntry> entries;

  bool all_passed() const;
};

/// One representation per kernel basis vector, for every root class and branch.
RepresentationReport build_representations(const SeifertData& s, int level, std::size_t trials, std::uint64_t seed);

nlohmann::json to_json(const RepresentationReport& r);
std::string to_text(const RepresentationReport& r);

/// Entries as polynomial strings in `a`.
nlohmann::json matrix_to_json(const Matrix<NFElement>& m);

}  // namespace metabel
