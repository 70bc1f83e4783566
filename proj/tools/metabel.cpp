// metabel: Alexander module decompositions from Seifert matrices.
//
//   metabel alexander [--knot NAME]...
//   metabel decompose [--knot NAME]... [--max-n N]
//   metabel verify    [--knot NAME]...
//   metabel rep --knot NAME --level N [--trials T] [--seed S]
//
// Knots come from --knot-file (JSON or CSV) or the bundled corpus.

#include "metabel/errors.hpp"
#include "metabel/ingest.hpp"
#include "metabel/report.hpp"

#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kValidation = 3, kFailure = 4 };

struct Options {
  std::string knot_file;
  std::vector<std::string> knots;
  std::string format = "text";
  std::optional<int> max_n;
  std::uint64_t seed = 1;
  bool no_timing = false;
  int level = 2;
  std::size_t trials = 500;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<metabel::KnotRecord> load(const Options& o) {
  std::vector<metabel::KnotRecord> all =
      o.knot_file.empty() ? metabel::bundled_corpus() : metabel::parse_knot_file(o.knot_file);
  if (o.knots.empty()) return all;
  std::vector<metabel::KnotRecord> picked;
  for (const auto& name : o.knots) {
    const metabel::KnotRecord* r = metabel::find_knot(all, name);
    if (r == nullptr) throw UsageError("unknown knot '" + name + "'");
    picked.push_back(*r);
  }
  return picked;
}

// Knots are independent; results keep input order.
std::vector<metabel::KnotReport> analyze_all(const std::vector<metabel::KnotRecord>& records,
                                             const metabel::PipelineOptions& options) {
  std::vector<std::future<metabel::KnotReport>> jobs;
  for (const auto& r : records)
    jobs.push_back(std::async(std::launch::async, [&r, &options] { return metabel::analyze_knot(r, options); }));
  std::vector<metabel::KnotReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

int cmd_alexander(const Options& o) {
  const auto records = load(o);
  nlohmann::json knots = nlohmann::json::array();
  std::vector<std::pair<std::string, metabel::NormalizedAlexanderPoly>> rows;
  for (const auto& r : records) {
    const auto s = metabel::validate_seifert(r.name, r.seifert);
    rows.emplace_back(r.name, metabel::alexander_polynomial(metabel::alexander_matrix(s)));
  }
  if (o.format == "json") {
    for (const auto& [name, a] : rows)
      knots.push_back({{"name", name},
                       {"alexander", {{"delta", to_string(a.delta)}, {"sign", a.sign}, {"t_power", a.t_power}}}});
    std::cout << nlohmann::json{{"format_version", 1}, {"command", "alexander"}, {"knots", knots}}.dump(2) << '\n';
  } else {
    for (const auto& [name, a] : rows) {
      const std::string delta = metabel::to_string(a.delta, "t", metabel::TermOrder::descending);
      std::cout << (rows.size() == 1 ? delta : name + ": " + delta) << '\n';
    }
  }
  return kOk;
}

int cmd_analyze(const Options& o, bool with_oracle) {
  const auto records = load(o);
  metabel::PipelineOptions options;
  options.filtration.max_level = o.max_n;
  options.with_oracle = with_oracle;
  const auto reports = analyze_all(records, options);
  const bool timing = !o.no_timing;
  if (o.format == "json") {
    std::cout << metabel::report_document(with_oracle ? "verify" : "decompose", reports, timing).dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) std::cout << (i == 0 ? "" : "\n") << to_text(reports[i], timing);
  }
  if (!with_oracle) return kOk;
  for (const auto& r : reports)
    if (!r.agreement.value_or(false) || !r.expected_match.value_or(true)) return kFailure;
  return kOk;
}

int cmd_rep(const Options& o) {
  if (o.knots.size() != 1) throw UsageError("rep needs exactly one --knot");
  if (o.level < 2) throw UsageError("--level must be at least 2");
  const auto records = load(o);
  const auto s = metabel::validate_seifert(records[0].name, records[0].seifert);
  const auto report = metabel::build_representations(s, o.level, o.trials, o.seed);
  if (o.format == "json")
    std::cout << to_json(report).dump(2) << '\n';
  else
    std::cout << to_text(report);
  return report.all_passed() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander module decompositions by the metabelian obstruction filtration"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* cmd) {
    cmd->add_option("--knot-file", o.knot_file, "JSON or CSV knot table (default: bundled corpus)");
    cmd->add_option("--knot", o.knots, "Restrict to the named knot; repeatable");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto* alexander = app.add_subcommand("alexander", "Print the normalized Alexander polynomial");
  auto* decompose = app.add_subcommand("decompose", "Decompose the Alexander module by the filtration");
  auto* verify = app.add_subcommand("verify", "Decompose and cross-check against the Smith normal form");
  auto* rep = app.add_subcommand("rep", "Build metabelian representations at a given level");
  for (auto* cmd : {alexander, decompose, verify, rep}) common(cmd);
  for (auto* cmd : {decompose, verify}) {
    cmd->add_option("--max-n", o.max_n, "Highest filtration level (default: multiplicity + 2)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--no-timing", o.no_timing, "Omit elapsed times from reports");
  }
  rep->add_option("--level", o.level, "Representation size n");
  rep->add_option("--trials", o.trials, "Random pairs for the homomorphism check");
  rep->add_option("--seed", o.seed, "Seed for the homomorphism check");
  rep->add_flag("--no-timing", o.no_timing, "Accepted for symmetry; rep reports carry no timing");
  for (auto* cmd : {decompose, verify}) cmd->add_option("--seed", o.seed, "Accepted for symmetry; unused");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (alexander->parsed()) return cmd_alexander(o);
    if (decompose->parsed()) return cmd_analyze(o, false);
    if (verify->parsed()) return cmd_analyze(o, true);
    return cmd_rep(o);
  } catch (const UsageError& e) {
    std::cerr << "metabel: " << e.what() << '\n';
    return kUsage;
  } catch (const metabel::ParseError& e) {
    std::cerr << "metabel: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const metabel::ValidationError& e) {
    std::cerr << "metabel: invalid Seifert matrix (" << metabel::to_string(e.kind()) << "): " << e.what() << '\n';
    return kValidation;
  } catch (const metabel::InternalError& e) {
    std::cerr << "metabel: internal check failed: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "metabel: " << e.what() << '\n';
    return kFailure;
  }
}
