#pragma once

#include <map>
#include <string>
#include <vector>

#include "hn4walk/state.hpp"
#include "hn4walk/walk.hpp"

// Catalog of the reference search experiments, the runner that evolves all
// four coins on each, and the CSV / JSON serialization of results.

namespace hn4walk {

// Exact loop weight, kept as written ("2/64") so catalog reproduction never
// picks up decimal drift.
struct Rational {
  long long num = 0;
  long long den = 1;

  double value() const { return double(num) / double(den); }
  std::string str() const;
  static Rational parse(const std::string& text);  // "a/b", "a", or decimal
};

enum class Classification { Flat, Grows };
const char* classification_name(Classification c);

// A run counts as GROWS when its peak reaches 5x the initial probability and
// clears this absolute floor; suppressed runs oscillate within O(1/N) of the
// start and stay far below it.
inline constexpr double kGrowthFloor = 0.1;

struct ExperimentSpec {
  std::string id;
  LatticeSpec lattice;
  MarkedSet marked;
  Rational loop_weight;
  int t_max = 0;
  std::vector<CoinKind> coins;  // run order (a)..(d)
  std::map<CoinKind, Classification> expected;
};

// The seven reference configurations: the 1D directed-self-loop vertex and
// the six 32x32 torus configurations, each run with all four coins.
std::vector<ExperimentSpec> catalog();

// nullptr when the id is unknown.
const ExperimentSpec* find_experiment(const std::vector<ExperimentSpec>& specs,
                                      const std::string& id);

struct CoinSummary {
  CoinKind coin = CoinKind::Grover;
  double p0 = 0.0;
  double max_prob = 0.0;
  int argmax_t = 0;
  double final_prob = 0.0;
  Classification classification = Classification::Flat;
};

struct RunResult {
  std::vector<TimeSeries> series;     // one per coin, in spec order
  std::vector<CoinSummary> summary;
};

CoinSummary summarize(const TimeSeries& ts);

// Evolves every coin of the spec; throws NumericalIntegrityError if any
// probability leaves [0, 1].
RunResult run_experiment(const ExperimentSpec& spec);

bool classifications_match(const ExperimentSpec& spec, const RunResult& r);

// <out_dir>/<id>/<coin>.csv, one file per coin, `t,probability` rows under a
// comment block encoding the configuration.
void export_run(const ExperimentSpec& spec, const RunResult& r,
                const std::string& out_dir);

struct SummaryRow {
  std::string experiment;
  CoinSummary coin;
};
void export_summary_csv(const std::vector<SummaryRow>& rows,
                        const std::string& path);

void export_catalog_json(const std::vector<ExperimentSpec>& specs,
                         const std::string& path);

}  // namespace hn4walk
