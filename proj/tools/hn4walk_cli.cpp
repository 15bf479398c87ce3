// Command-line front end: ad-hoc runs, catalog reproduction, self-checks.
//
// Exit codes: 0 success, 2 flag/validation error, 3 numerical-integrity
// failure, 4 classification mismatch in `reproduce`, 5 failed `verify`
// suites.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hn4walk/experiments.hpp"
#include "hn4walk/stationary.hpp"
#include "hn4walk/verify.hpp"
#include "hn4walk/walk.hpp"

namespace {

using namespace hn4walk;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitVerify = 5;

std::string default_out_dir() {
  const char* env = std::getenv("HN4WALK_OUT_DIR");
  return env && *env ? env : "out";
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<int> parse_marked_1d(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t used = 0;
    out.push_back(std::stoi(text.substr(pos), &used));
    pos += used;
    if (pos < text.size()) {
      if (text[pos] != ',')
        throw std::invalid_argument("bad marked list '" + text + "'");
      ++pos;
    }
  }
  if (out.empty()) throw std::invalid_argument("empty marked list");
  return out;
}

std::vector<std::array<int, 2>> parse_marked_2d(const std::string& text) {
  std::vector<std::array<int, 2>> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument("bad marked list '" + text +
                                  "' (expected '" + c + "')");
    ++pos;
  };
  auto read_int = [&] {
    skip_ws();
    std::size_t used = 0;
    const int v = std::stoi(text.substr(pos), &used);
    pos += used;
    return v;
  };
  while (true) {
    expect('(');
    const int x = read_int();
    expect(',');
    const int y = read_int();
    expect(')');
    out.push_back({x, y});
    skip_ws();
    if (pos == text.size()) break;
    expect(',');
  }
  return out;
}

void print_summary_line(const std::string& label, const CoinSummary& s) {
  std::cout << label << ": coin=" << coin_name(s.coin)
            << " p0=" << fmt_double(s.p0)
            << " max_prob=" << fmt_double(s.max_prob)
            << " argmax_t=" << s.argmax_t
            << " final_prob=" << fmt_double(s.final_prob)
            << " classification=" << classification_name(s.classification)
            << "\n";
}

struct RunArgs {
  int dim = 1;
  int n = 0;
  std::string coin;
  std::string loop_weight = "0";
  std::string marked;
  int steps = -1;
  std::string out_dir;
};

int cmd_run(const RunArgs& args) {
  const LatticeSpec lat =
      args.dim == 1 ? LatticeSpec::ring(args.n) : LatticeSpec::torus(args.n);
  const Rational lw = Rational::parse(args.loop_weight);
  const CoinKind kind = parse_coin_kind(args.coin);
  if ((kind == CoinKind::Grover || kind == CoinKind::Skw) && lw.num != 0)
    throw std::invalid_argument("--loop-weight must be 0 for the " +
                                std::string(coin_name(kind)) + " coin");

  ExperimentSpec spec;
  spec.id = "run";
  spec.lattice = lat;
  spec.marked = args.dim == 1
                    ? MarkedSet::ring_vertices(lat, parse_marked_1d(args.marked))
                    : MarkedSet::torus_vertices(lat,
                                                parse_marked_2d(args.marked));
  spec.loop_weight = lw;
  spec.t_max = args.steps >= 0 ? args.steps : default_t_max(lat);
  spec.coins = {kind};

  const RunResult result = run_experiment(spec);
  export_run(spec, result, args.out_dir);
  print_summary_line("run", result.summary.front());
  std::cout << "wrote " << args.out_dir << "/run/" << coin_name(kind)
            << ".csv (" << spec.t_max + 1 << " rows)\n";
  return 0;
}

int cmd_reproduce(const std::string& id, const std::string& out_dir,
                  int steps_override) {
  std::vector<ExperimentSpec> specs = catalog();
  if (id != "all") {
    const ExperimentSpec* found = find_experiment(specs, id);
    if (!found) {
      std::cerr << "unknown experiment id '" << id << "'; known ids:\n";
      for (const auto& s : specs) std::cerr << "  " << s.id << "\n";
      return kExitUsage;
    }
    specs = {*found};
  }

  std::vector<SummaryRow> rows;
  bool all_match = true;
  std::printf("%-22s %-14s %-12s %-12s %-8s %-7s %s\n", "experiment", "coin",
              "p0", "max_prob", "argmax_t", "class", "expected");
  for (ExperimentSpec& spec : specs) {
    if (steps_override > 0) spec.t_max = steps_override;
    const RunResult result = run_experiment(spec);
    export_run(spec, result, out_dir);
    for (const CoinSummary& s : result.summary) {
      const Classification expected = spec.expected.at(s.coin);
      std::printf("%-22s %-14s %-12.6g %-12.6g %-8d %-7s %s\n",
                  spec.id.c_str(), coin_name(s.coin), s.p0, s.max_prob,
                  s.argmax_t, classification_name(s.classification),
                  classification_name(expected));
      rows.push_back({spec.id, s});
    }
    if (!classifications_match(spec, result)) all_match = false;
  }
  export_summary_csv(rows, out_dir + "/summary.csv");
  export_catalog_json(catalog(), out_dir + "/catalog.json");
  std::cout << "wrote " << rows.size() << " summary rows to " << out_dir
            << "/summary.csv\n";
  if (!all_match) {
    std::cerr << "classification mismatch against the reference table\n";
    return kExitMismatch;
  }
  return 0;
}

int cmd_verify(const std::string& level_name, bool inject_fault) {
  const VerifyLevel level =
      level_name == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
  VerifyOptions opts;
  opts.inject_shift_fault = inject_fault;
  const std::vector<SuiteResult> results = run_verification(level, opts);

  std::vector<std::string> failed;
  for (const SuiteResult& r : results) {
    std::printf("%-22s max residual %-12.3g tolerance %-8.1g %s\n",
                r.suite.c_str(), r.max_residual, r.tolerance,
                r.pass ? "PASS" : "FAIL");
    if (!r.pass) failed.push_back(r.suite);
  }
  if (!failed.empty()) {
    std::cerr << "failed suites:";
    for (const auto& name : failed) std::cerr << " " << name;
    std::cerr << "\n";
    return kExitVerify;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete-time quantum walk search on rings and tori with "
               "HN4 long-range edges"};
  app.require_subcommand(1);

  RunArgs run_args;
  run_args.out_dir = default_out_dir();
  CLI::App* run = app.add_subcommand(
      "run", "evolve one configuration and write its time series");
  run->add_option("--dim", run_args.dim, "lattice dimension")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  run->add_option("--n", run_args.n, "hierarchy depth (side = 2^n)")
      ->required();
  run->add_option("--coin", run_args.coin,
                  "grover|skw|lackadaisical|modified-g")
      ->required();
  run->add_option("--loop-weight", run_args.loop_weight,
                  "self-loop weight, rational like 2/64 or decimal");
  run->add_option("--marked", run_args.marked,
                  "1D: v1,v2,...  2D: (x1,y1),(x2,y2),...")
      ->required();
  run->add_option("--steps", run_args.steps,
                  "iteration count (default 4*ceil(sqrt(N ln N)))")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--out", run_args.out_dir, "output directory");

  std::string repro_id;
  std::string repro_out = default_out_dir();
  int repro_steps = 0;
  CLI::App* repro = app.add_subcommand(
      "reproduce", "run catalog experiments and check classifications");
  repro->add_option("id", repro_id, "experiment id or 'all'")->required();
  repro->add_option("--out", repro_out, "output directory");
  repro->add_option("--steps", repro_steps, "override the catalog t_max");

  std::string verify_level = "quick";
  bool inject_fault = false;
  CLI::App* verify = app.add_subcommand("verify", "run the self-check suites");
  verify->add_option("level", verify_level, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_flag("--inject-shift-fault", inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(run_args);
    if (repro->parsed()) return cmd_reproduce(repro_id, repro_out, repro_steps);
    if (verify->parsed()) return cmd_verify(verify_level, inject_fault);
  } catch (const NumericalIntegrityError& e) {
    std::cerr << "numerical integrity failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
