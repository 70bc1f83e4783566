#include "metabel/ingest.hpp"

#include "metabel/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace metabel {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

// U+2212 -> '-' outside JSON string literals (inside them too when
// `inside_strings`), so numbers written with a typographic minus parse.
std::string ascii_minus(std::string_view text, bool inside_strings) {
  std::string out;
  out.reserve(text.size());
  bool in_string = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (!inside_strings && ch == '"' && (i == 0 || text[i - 1] != '\\')) in_string = !in_string;
    if (!in_string && text.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
      out += '-';
      i += kUnicodeMinus.size() - 1;
      continue;
    }
    out += ch;
  }
  return out;
}

std::string record_location(std::size_t index, const std::string& name) {
  std::string loc = "record " + std::to_string(index);
  if (!name.empty()) loc += " (" + name + ")";
  return loc;
}

Decomposition parse_expected(const nlohmann::json& j, const std::string& location) {
  Decomposition d{Provenance::oracle, {}};
  if (!j.is_array()) throw ParseError(location, "\"expected\" must be an array");
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("factor") || !entry.contains("exponents"))
      throw ParseError(location, "\"expected\" entries need \"factor\" and \"exponents\"");
    ExponentClass c;
    try {
      c.factor = parse_poly(entry.at("factor").get<std::string>(), "t");
      c.exponents = entry.at("exponents").get<std::vector<int>>();
    } catch (const std::exception& e) {
      throw ParseError(location, std::string("bad \"expected\" entry: ") + e.what());
    }
    std::sort(c.exponents.begin(), c.exponents.end());
    d.classes.push_back(std::move(c));
  }
  return d;
}

void require_rectangular(const std::vector<std::vector<std::int64_t>>& m, const std::string& location) {
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i].size() != m[0].size())
      throw ParseError(location, "ragged matrix: row " + std::to_string(i) + " has " + std::to_string(m[i].size()) +
                                     " entries, row 0 has " + std::to_string(m[0].size()));
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits one CSV line on commas outside quotes and brackets.
std::vector<std::string> split_csv_line(std::string_view line, const std::string& location) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  int depth = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (ch == '"') {
      if (quoted && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else {
        quoted = !quoted;
      }
      continue;
    }
    if (!quoted) {
      if (ch == '[') ++depth;
      if (ch == ']') --depth;
      if (ch == ',' && depth == 0) {
        fields.push_back(trim(current));
        current.clear();
        continue;
      }
    }
    current += ch;
  }
  if (quoted) throw ParseError(location, "unterminated quoted field");
  fields.push_back(trim(current));
  return fields;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

std::vector<std::vector<std::int64_t>> parse_bracket_matrix(std::string_view raw) {
  const std::string text = ascii_minus(raw, true);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (pos >= text.size() || text[pos] != ch)
      throw std::invalid_argument(std::string("expected '") + ch + "' at offset " + std::to_string(pos));
    ++pos;
  };
  auto peek = [&]() -> char {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  };

  std::vector<std::vector<std::int64_t>> rows;
  expect('[');
  if (peek() == ']') {
    ++pos;
  } else {
    for (;;) {
      expect('[');
      std::vector<std::int64_t> row;
      if (peek() == ']') {
        ++pos;
      } else {
        for (;;) {
          skip_ws();
          const std::size_t start = pos;
          if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          const std::string token = text.substr(start, pos - start);
          if (token.empty() || token == "-" || token == "+" ||
              (pos < text.size() && (text[pos] == '.' || std::isalpha(static_cast<unsigned char>(text[pos])))))
            throw std::invalid_argument("non-integer entry at offset " + std::to_string(start));
          try {
            row.push_back(std::stoll(token));
          } catch (const std::out_of_range&) {
            throw std::invalid_argument("entry out of range at offset " + std::to_string(start));
          }
          const char next = peek();
          if (next == ',') {
            ++pos;
            continue;
          }
          if (next == ']') {
            ++pos;
            break;
          }
          throw std::invalid_argument("expected ',' or ']' at offset " + std::to_string(pos));
        }
      }
      rows.push_back(std::move(row));
      const char next = peek();
      if (next == ',') {
        ++pos;
        continue;
      }
      if (next == ']') {
        ++pos;
        break;
      }
      throw std::invalid_argument("expected ',' or ']' at offset " + std::to_string(pos));
    }
  }
  skip_ws();
  if (pos != text.size()) throw std::invalid_argument("trailing characters after matrix");
  return rows;
}

std::string format_matrix(const std::vector<std::vector<std::int64_t>>& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i != 0) out << ", ";
    out << '[';
    for (std::size_t j = 0; j < m[i].size(); ++j) out << (j != 0 ? ", " : "") << m[i][j];
    out << ']';
  }
  out << ']';
  return out.str();
}

std::vector<KnotRecord> parse_knot_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(ascii_minus(text, false));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  if (!doc.is_array()) throw ParseError("document", "expected a JSON array of knot records");

  std::vector<KnotRecord> out;
  for (std::size_t idx = 0; idx < doc.size(); ++idx) {
    const auto& rec = doc[idx];
    std::string location = record_location(idx, "");
    if (!rec.is_object()) throw ParseError(location, "record is not an object");
    if (!rec.contains("name") || !rec["name"].is_string()) throw ParseError(location, "missing string \"name\"");
    KnotRecord k;
    k.name = rec["name"].get<std::string>();
    location = record_location(idx, k.name);
    if (!rec.contains("seifert") || !rec["seifert"].is_array())
      throw ParseError(location, "missing array \"seifert\"");
    for (const auto& row : rec["seifert"]) {
      if (!row.is_array()) throw ParseError(location, "\"seifert\" rows must be arrays");
      std::vector<std::int64_t> r;
      for (const auto& x : row) {
        if (!x.is_number_integer()) throw ParseError(location, "non-integer entry " + x.dump());
        r.push_back(x.get<std::int64_t>());
      }
      k.seifert.push_back(std::move(r));
    }
    require_rectangular(k.seifert, location);
    if (rec.contains("expected")) k.expected = parse_expected(rec["expected"], location);
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<KnotRecord> parse_knot_csv(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string current;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(current);
        current.clear();
      } else if (ch != '\r') {
        current += ch;
      }
    }
    if (!current.empty()) lines.push_back(current);
  }

  std::vector<KnotRecord> out;
  std::size_t name_col = 0, matrix_col = 1;
  bool header_seen = false;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string location = "line " + std::to_string(ln + 1);
    if (trim(lines[ln]).empty()) continue;
    const auto fields = split_csv_line(lines[ln], location);
    const bool has_matrix = std::any_of(fields.begin(), fields.end(),
                                        [](const std::string& f) { return f.find('[') != std::string::npos; });
    if (!header_seen && out.empty() && !has_matrix) {
      header_seen = true;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::string h = lower(fields[i]);
        if (h.find("seifert") != std::string::npos) matrix_col = i;
        else if (h == "name") name_col = i;
      }
      continue;
    }
    if (fields.size() <= std::max(name_col, matrix_col))
      throw ParseError(location, "expected at least " + std::to_string(std::max(name_col, matrix_col) + 1) + " fields");
    KnotRecord k;
    k.name = fields[name_col];
    try {
      k.seifert = parse_bracket_matrix(fields[matrix_col]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(location, e.what());
    }
    require_rectangular(k.seifert, location);
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<KnotRecord> parse_knot_file(const std::filesystem::path& path, std::optional<KnotFileFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  const KnotFileFormat f =
      format.value_or(lower(path.extension().string()) == ".csv" ? KnotFileFormat::csv : KnotFileFormat::json);
  try {
    return f == KnotFileFormat::csv ? parse_knot_csv(buf.str()) : parse_knot_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.location(), std::string(e.what()).substr(e.location().size() + 2));
  }
}

std::vector<KnotRecord> bundled_corpus() { return parse_knot_json(bundled_corpus_json()); }

const KnotRecord* find_knot(const std::vector<KnotRecord>& records, std::string_view name) {
  for (const auto& r : records)
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace metabel
