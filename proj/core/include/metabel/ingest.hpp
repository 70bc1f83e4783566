#pragma once

// Knot tables: JSON arrays of {"name", "seifert"} objects, or CSV with a
// name column and a bracketed matrix column such as "[[-1,1],[0,-1]]".
// Both the ASCII hyphen and U+2212 are accepted as minus signs.

#include "metabel/decomposition.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace metabel {

struct KnotRecord {
  std::string name;
  std::vector<std::vector<std::int64_t>> seifert;  // rows of equal length
  std::optional<Decomposition> expected;
};

enum class KnotFileFormat { json, csv };

/// Throws ParseError with a record index or line number.
std::vector<KnotRecord> parse_knot_json(std::string_view text);
std::vector<KnotRecord> parse_knot_csv(std::string_view text);

/// Format inferred from the extension (.csv, otherwise JSON) unless given.
std::vector<KnotRecord> parse_knot_file(const std::filesystem::path& path,
                                        std::optional<KnotFileFormat> format = std::nullopt);

/// Bracketed integer matrix "[[a, b], [c, d]]"; throws std::invalid_argument.
std::vector<std::vector<std::int64_t>> parse_bracket_matrix(std::string_view text);

/// "[[-1, 1], [0, -1]]".
std::string format_matrix(const std::vector<std::vector<std::int64_t>>& m);

/// The corpus shipped with the library (3_1, 4_1, 10_99).
std::string_view bundled_corpus_json();
std::vector<KnotRecord> bundled_corpus();

/// Record with the given name; nullptr when absent.
const KnotRecord* find_knot(const std::vector<KnotRecord>& records, std::string_view name);

}  // namespace metabel
