#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "critgraph/budget.hpp"
#include "critgraph/generators.hpp"
#include "critgraph/graph.hpp"

namespace critgraph {

enum class CheckStatus { pass, fail, skipped, error };
std::string to_string(CheckStatus status);

/// Exact bound value num/den, den > 0, kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class Relation { at_least, at_most, equal };
std::string to_string(Relation relation);

struct CheckReport {
  std::string graph_id;  // canonical graph6, parity bits appended for signed input
  std::string hash;      // graph_hash of the underlying graph
  std::string check;
  Rational bound;
  std::int64_t measured = 0;
  Relation relation = Relation::at_least;
  CheckStatus status = CheckStatus::skipped;
  bool equality = false;           // measured == bound
  double elapsed_ms = 0.0;
  nlohmann::json witness = nlohmann::json::object();
  std::string message;

  bool passed() const { return status == CheckStatus::pass; }
};

/// Report as one JSON object; timing is optional so reports can be compared.
nlohmann::json to_json(const CheckReport& report, bool include_timing = true);

/// Check names in canonical report order.
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);

/// Runs one check. Hypotheses are tested first; a graph outside them gets
/// status skipped. Library errors (budget, scale) become status error.
/// Throws Error(UnknownCheck).
CheckReport run_check(const std::string& name, const SignedGraph& sg, const Budget& budget = Budget::from_env());
CheckReport run_check(const std::string& name, const Graph& g, const Budget& budget = Budget::from_env());

/// Identifier used to sort reports.
std::string graph_id(const SignedGraph& sg);

struct SweepOptions {
  CorpusSpec corpus;
  std::vector<std::string> checks;
  int jobs = 1;
  Budget budget = Budget::from_env();
  /// Per-graph wall clock limit in milliseconds, 0 for none.
  std::int64_t time_limit_ms = 0;
};

struct StatusCounts {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t skipped = 0;
  std::uint64_t error = 0;
  void add(CheckStatus status);
};

struct SweepSummary {
  std::uint64_t graphs = 0;
  StatusCounts totals;
  std::map<std::string, StatusCounts> per_check;
  std::vector<CheckReport> reports;  // sorted by graph id, then check order

  /// 0 when nothing failed or errored, 1 otherwise.
  int exit_code() const { return totals.fail == 0 && totals.error == 0 ? 0 : 1; }
  nlohmann::json summary_json() const;
};

/// Runs every check on every corpus graph with a pool of `jobs` workers.
/// Throws Error(UnknownCheck) before any work if a name is unknown.
SweepSummary sweep(const SweepOptions& options);
SweepSummary sweep_graphs(const std::vector<SignedGraph>& graphs, const SweepOptions& options);

/// One JSON line per report.
void write_jsonl(std::ostream& out, const std::vector<CheckReport>& reports, bool include_timing = true);

}  // namespace critgraph
