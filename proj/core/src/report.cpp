#include "metabel/report.hpp"

#include "metabel/errors.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace metabel {

using nlohmann::json;

KnotReport analyze_knot(const KnotRecord& record, const PipelineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const SeifertData s = validate_seifert(record.name, record.seifert);
  FiltrationResult fr = run_filtration(s, options.filtration);

  KnotReport r;
  r.name = record.name;
  r.seifert = record.seifert;
  r.alexander = fr.alexander;
  r.root_classes = fr.root_classes;
  r.filtration = std::move(fr.report);
  r.decomposition = std::move(fr.decomposition);
  if (options.with_oracle) {
    OracleResult o;
    o.invariants = smith_normal_form(alexander_matrix(s), true);
    o.decomposition = oracle_decomposition(o.invariants, r.root_classes);
    r.agreement = equivalent(r.decomposition, o.decomposition);
    r.oracle = std::move(o);
  }
  if (record.expected) r.expected_match = equivalent(r.decomposition, *record.expected);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

json decomposition_json(const Decomposition& d) {
  json classes = json::array();
  for (const auto& c : d.classes)
    classes.push_back({{"factor", to_string(c.factor)}, {"exponents", c.exponents}, {"over_complex", complex_summands(c)}});
  return {{"provenance", to_string(d.provenance)}, {"classes", classes}};
}

// Schema access with ParseError on violation.
const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where, std::string("missing \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key, const std::string& where) {
  try {
    return field(j, key, where).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(where, std::string("bad \"") + key + "\": " + e.what());
  }
}

Poly get_poly(const json& j, const char* key, const std::string& where) {
  try {
    return parse_poly(get<std::string>(j, key, where), "t");
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
}

Decomposition decomposition_from_json(const json& j, const std::string& where) {
  Decomposition d;
  const auto prov = get<std::string>(j, "provenance", where);
  if (prov == "filtration") d.provenance = Provenance::filtration;
  else if (prov == "oracle") d.provenance = Provenance::oracle;
  else throw ParseError(where, "unknown provenance " + prov);
  for (const auto& c : field(j, "classes", where))
    d.classes.push_back({get_poly(c, "factor", where), get<std::vector<int>>(c, "exponents", where)});
  return d;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string descending(const Poly& p) { return to_string(p, "t", TermOrder::descending); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i == 0 ? "" : sep) + parts[i];
  return out;
}

}  // namespace

json to_json(const KnotReport& r, bool include_timing) {
  json j;
  j["name"] = r.name;
  j["genus"] = r.genus();
  j["seifert"] = r.seifert;
  j["alexander"] = {{"delta", to_string(r.alexander.delta)}, {"sign", r.alexander.sign}, {"t_power", r.alexander.t_power}};

  json classes = json::array();
  for (const auto& rc : r.root_classes) classes.push_back({{"factor", to_string(rc.factor)}, {"multiplicity", rc.multiplicity}});
  j["root_classes"] = classes;

  json filtration = json::array();
  for (const auto& cf : r.filtration.classes) {
    json splits = json::array();
    for (const auto& s : cf.splits)
      splits.push_back({{"parent", to_string(s.parent)}, {"first", to_string(s.first)}, {"second", to_string(s.second)}});
    json branches = json::array();
    for (const auto& b : cf.branches) {
      json levels = json::array();
      for (const auto& l : b.levels)
        levels.push_back({{"n", l.level},
                          {"solution_dim", l.solution_dim},
                          {"projection_dim", l.projection_dim},
                          {"cocycle_dim", l.cocycle_dim()}});
      branches.push_back({{"modulus", to_string(b.modulus)}, {"levels", levels}, {"exponents", b.exponents}});
    }
    filtration.push_back({{"factor", to_string(cf.factor)},
                          {"multiplicity", cf.multiplicity},
                          {"splits", splits},
                          {"branches", branches}});
  }
  j["filtration"] = filtration;
  j["decomposition"] = decomposition_json(r.decomposition);

  if (r.oracle) {
    json inv = json::array();
    for (const auto& d : r.oracle->invariants.factors) inv.push_back(to_string(d));
    j["oracle"] = {{"invariant_factors", inv},
                   {"verified_transforms", r.oracle->invariants.verified},
                   {"decomposition", decomposition_json(r.oracle->decomposition)}};
  } else {
    j["oracle"] = nullptr;
  }
  j["agreement"] = r.agreement ? json(*r.agreement) : json(nullptr);
  j["expected_match"] = r.expected_match ? json(*r.expected_match) : json(nullptr);
  if (include_timing && r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

KnotReport knot_report_from_json(const json& j) {
  KnotReport r;
  r.name = get<std::string>(j, "name", "report");
  const std::string where = "report " + r.name;
  r.seifert = get<std::vector<std::vector<std::int64_t>>>(j, "seifert", where);
  const json& alex = field(j, "alexander", where);
  r.alexander = {get_poly(alex, "delta", where), get<int>(alex, "sign", where), get<int>(alex, "t_power", where)};
  for (const auto& rc : field(j, "root_classes", where))
    r.root_classes.push_back({get_poly(rc, "factor", where), get<int>(rc, "multiplicity", where)});

  for (const auto& cf : field(j, "filtration", where)) {
    ClassFiltration c;
    c.factor = get_poly(cf, "factor", where);
    c.multiplicity = get<int>(cf, "multiplicity", where);
    for (const auto& s : field(cf, "splits", where))
      c.splits.push_back({get_poly(s, "parent", where), get_poly(s, "first", where), get_poly(s, "second", where)});
    for (const auto& b : field(cf, "branches", where)) {
      BranchFiltration bf;
      bf.modulus = get_poly(b, "modulus", where);
      bf.exponents = get<std::vector<int>>(b, "exponents", where);
      for (const auto& l : field(b, "levels", where)) {
        LevelRecord rec{get<int>(l, "n", where), get<std::size_t>(l, "solution_dim", where),
                        get<std::size_t>(l, "projection_dim", where)};
        if (get<std::size_t>(l, "cocycle_dim", where) != rec.cocycle_dim())
          throw ParseError(where, "cocycle_dim inconsistent with projection_dim");
        bf.levels.push_back(rec);
      }
      c.branches.push_back(std::move(bf));
    }
    r.filtration.classes.push_back(std::move(c));
  }
  r.decomposition = decomposition_from_json(field(j, "decomposition", where), where);

  const json& oracle = field(j, "oracle", where);
  if (!oracle.is_null()) {
    OracleResult o;
    for (const auto& d : field(oracle, "invariant_factors", where)) {
      try {
        o.invariants.factors.push_back(parse_poly(d.get<std::string>(), "t"));
      } catch (const std::exception& e) {
        throw ParseError(where, e.what());
      }
    }
    o.invariants.verified = get<bool>(oracle, "verified_transforms", where);
    o.decomposition = decomposition_from_json(field(oracle, "decomposition", where), where);
    r.oracle = std::move(o);
  }
  if (const json& a = field(j, "agreement", where); !a.is_null()) r.agreement = a.get<bool>();
  if (const json& e = field(j, "expected_match", where); !e.is_null()) r.expected_match = e.get<bool>();
  if (j.contains("elapsed_ms")) r.elapsed_ms = get<double>(j, "elapsed_ms", where);
  return r;
}

json report_document(const std::string& command, const std::vector<KnotReport>& reports, bool include_timing) {
  json knots = json::array();
  for (const auto& r : reports) knots.push_back(to_json(r, include_timing));
  return {{"format_version", 1}, {"command", command}, {"knots", knots}};
}

std::string to_text(const KnotReport& r, bool include_timing) {
  std::ostringstream out;
  out << "knot " << r.name << " (genus " << r.genus() << ")\n";
  out << "  Alexander polynomial: " << descending(r.alexander.delta) << '\n';
  if (r.root_classes.empty()) out << "  no root classes: the Alexander module is trivial\n";
  for (const auto& cf : r.filtration.classes) {
    out << "  root class " << descending(cf.factor) << ", multiplicity " << cf.multiplicity << '\n';
    for (const auto& s : cf.splits)
      out << "    split " << descending(s.parent) << " = (" << descending(s.first) << ")(" << descending(s.second)
          << ")\n";
    for (const auto& b : cf.branches) {
      if (cf.branches.size() > 1) out << "    branch " << descending(b.modulus) << '\n';
      out << "       n   d_n  cbar_n  dim C_n\n";
      for (const auto& l : b.levels)
        out << "    " << pad(std::to_string(l.level), 4) << pad(std::to_string(l.solution_dim), 6)
            << pad(std::to_string(l.projection_dim), 8) << pad(std::to_string(l.cocycle_dim()), 9) << '\n';
      out << "    filtration exponents: " << format_exponents(b.exponents) << '\n';
      if (r.oracle)
        out << "    oracle exponents:     " << format_exponents(local_exponents(r.oracle->invariants, b.modulus))
            << '\n';
      out << "    over C: " << join(complex_summands({b.modulus, b.exponents}), " ⊕ ") << '\n';
    }
  }
  if (r.oracle) {
    std::vector<std::string> nontrivial;
    for (const auto& d : r.oracle->invariants.factors)
      if (!d.is_one()) nontrivial.push_back(descending(d));
    out << "  invariant factors: (" << join(nontrivial, ", ") << ")\n";
  }
  if (r.agreement) out << "  agreement with oracle: " << (*r.agreement ? "yes" : "NO") << '\n';
  if (r.expected_match) out << "  matches expected: " << (*r.expected_match ? "yes" : "NO") << '\n';
  if (include_timing && r.elapsed_ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", *r.elapsed_ms);
    out << "  elapsed: " << buf << " ms\n";
  }
  return out.str();
}

// --- representations ----------------------------------------------------------

bool RepresentationReport::all_passed() const {
  for (const auto& e : entries)
    if (!e.check.passed) return false;
  return true;
}

RepresentationReport build_representations(const SeifertData& s, int level, std::size_t trials, std::uint64_t seed) {
  RepresentationReport out{s.name(), level, trials, seed, {}};
  const NormalizedAlexanderPoly alex = alexander_polynomial(alexander_matrix(s));
  for (const auto& rc : root_classes(alex)) {
    auto branches = run_branches(NumberField(rc.factor), [&](const NumberField& field) {
      return solution_basis(build_obstruction_system(s, alex.delta, field, level));
    });
    for (auto& b : branches) {
      const ObstructionSystem sys = build_obstruction_system(s, alex.delta, b.field, level);
      for (std::size_t idx = 0; idx < b.value.size(); ++idx) {
        RepBuilder builder(s, b.field, level, solution_matrix(sys, b.value[idx]));
        RepresentationEntry e;
        e.factor = rc.factor;
        e.modulus = b.field.modulus();
        e.solution = idx;
        e.phi = builder.phi();
        e.meridian = builder.build_rep({LaurentRow(s.size()), 1});
        for (std::size_t i = 0; i < s.size(); ++i) {
          LaurentRow y(s.size());
          y[i] = LaurentPoly(Poly::constant(1));
          e.generators.push_back(builder.build_rep({y, 0}));
        }
        e.check = verify_homomorphism(builder, trials, seed + out.entries.size());
        out.entries.push_back(std::move(e));
      }
    }
  }
  return out;
}

json matrix_to_json(const Matrix<NFElement>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& x : m.row(i)) row.push_back(to_string(x));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const RepresentationReport& r) {
  json reps = json::array();
  for (const auto& e : r.entries) {
    json gens = json::array();
    for (std::size_t i = 0; i < e.generators.size(); ++i)
      gens.push_back({{"generator", "e_" + std::to_string(i + 1)}, {"matrix", matrix_to_json(e.generators[i])}});
    reps.push_back({{"factor", to_string(e.factor)},
                    {"modulus", to_string(e.modulus)},
                    {"solution", e.solution},
                    {"phi", matrix_to_json(e.phi)},
                    {"meridian", matrix_to_json(e.meridian)},
                    {"generators", gens},
                    {"homomorphism",
                     {{"passed", e.check.passed},
                      {"trials", e.check.trials},
                      {"witness", e.check.witness ? json(*e.check.witness) : json(nullptr)}}}});
  }
  return {{"format_version", 1},
          {"command", "rep"},
          {"knot", r.knot},
          {"level", r.level},
          {"trials", r.trials},
          {"seed", r.seed},
          {"representations", reps}};
}

namespace {

void print_matrix(std::ostringstream& out, const Matrix<NFElement>& m, const std::string& indent) {
  std::vector<std::size_t> widths(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) widths[j] = std::max(widths[j], to_string(m(i, j)).size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j == 0 ? "" : "  ") << pad(to_string(m(i, j)), widths[j]);
    out << "]\n";
  }
}

}  // namespace

std::string to_text(const RepresentationReport& r) {
  std::ostringstream out;
  out << "knot " << r.knot << ", level n = " << r.level << ", " << r.entries.size() << " solution(s)\n";
  for (const auto& e : r.entries) {
    out << "  root class " << descending(e.factor);
    if (!(e.modulus == e.factor)) out << " (branch " << descending(e.modulus) << ")";
    out << ", solution " << e.solution << '\n';
    if (r.level == 2)
      out << "    Phi (rows e_i, column phi_1):\n";
    else
      out << "    Phi (rows e_i, columns phi_1..phi_" << r.level - 1 << "):\n";
    print_matrix(out, e.phi, "      ");
    out << "    rho(meridian):\n";
    print_matrix(out, e.meridian, "      ");
    for (std::size_t i = 0; i < e.generators.size(); ++i) {
      out << "    rho(e_" << i + 1 << "):\n";
      print_matrix(out, e.generators[i], "      ");
    }
    out << "    homomorphism check: " << (e.check.passed ? "passed" : "FAILED") << " (" << e.check.trials
        << " trials)\n";
    if (e.check.witness) out << "      witness: " << *e.check.witness << '\n';
  }
  return out.str();
}

}  // namespace metabel
