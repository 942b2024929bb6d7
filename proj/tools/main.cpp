// Command line front end: enumerate satisfying teams, stream orbits,
// print seed sets, and generate the chain benchmark family.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "teamenum/enumerate.hpp"
#include "teamenum/formula.hpp"
#include "teamenum/orbit.hpp"
#include "teamenum/seeds.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;

struct EnumOptions {
  std::string expr;
  std::string formula_file;
  std::string algo = "orbit";
  std::uint64_t max_size = 0;
  std::string order = "emission";
  bool count_only = false;
  std::string profile_file;
};

std::string load_formula_text(const std::string& expr,
                              const std::string& file) {
  if (!expr.empty() && !file.empty())
    throw CLI::ValidationError("--expr and --formula are mutually exclusive");
  if (!expr.empty()) return expr;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("cannot open formula file: " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  throw CLI::ValidationError("one of --expr or --formula is required");
}

teamenum::Algorithm parse_algo(const std::string& name) {
  if (name == "orbit") return teamenum::Algorithm::Orbit;
  if (name == "polyspace") return teamenum::Algorithm::Polyspace;
  if (name == "brute") return teamenum::Algorithm::Brute;
  throw CLI::ValidationError("unknown algorithm: " + name);
}

struct LevelStats {
  std::uint64_t count = 0;
  std::uint64_t zero_count = 0;
  std::vector<std::uint64_t> delays;
};

void print_report(std::ostream& out,
                  const std::map<std::size_t, LevelStats>& levels,
                  int free_count, double wall_ms, bool zero_counted,
                  const teamenum::SpaceStats* space) {
  const std::uint64_t space_size = free_count >= 64
                                       ? ~std::uint64_t{0}
                                       : std::uint64_t{1} << free_count;
  std::uint64_t total = 0;
  bool identity_ok = true;
  out << "level\tc_k\tc_k0\tratio\n";
  for (const auto& [level, stats] : levels) {
    total += stats.count;
    out << level << '\t' << stats.count << '\t' << stats.zero_count << '\t'
        << stats.count << '/' << stats.zero_count << '\n';
    // Recomputed from the raw counts on every print.
    if (stats.count != 0 &&
        stats.count * level != stats.zero_count * space_size)
      identity_ok = false;
  }
  out << "# total\t" << total << '\n';
  if (zero_counted)
    out << "# ratio-identity\t" << (identity_ok ? "ok" : "VIOLATED") << '\n';
  else
    out << "# ratio-identity\tn/a\n";
  out << "# delay_steps\tlevel\tmin\tmedian\tmax\n";
  for (const auto& [level, stats] : levels) {
    std::vector<std::uint64_t> delays = stats.delays;
    std::sort(delays.begin(), delays.end());
    if (delays.empty()) continue;
    out << "# delay_steps\t" << level << '\t' << delays.front() << '\t'
        << delays[delays.size() / 2] << '\t' << delays.back() << '\n';
  }
  if (space != nullptr)
    out << "# peak_live_teams\t" << space->peak_live_teams
        << "\tpeak_assignments\t" << space->peak_assignments << '\n';
  out << "# wall_ms\t" << wall_ms << '\n';
}

int run_enum(const EnumOptions& opts) {
  const std::string text = load_formula_text(opts.expr, opts.formula_file);
  std::vector<teamenum::Formula> disjuncts = teamenum::parse_disjunction(text);

  teamenum::EnumConfig cfg;
  cfg.max_size = opts.max_size;
  cfg.algorithm = parse_algo(opts.algo);

  std::vector<teamenum::ReducedFormula> reduced;
  reduced.reserve(disjuncts.size());
  for (const auto& f : disjuncts) reduced.push_back(teamenum::reduce(f));

  int free_count = 0;
  for (const auto& rf : reduced)
    free_count = std::max(free_count, rf.free_count());

  // Seed counts only make sense against a single reduced formula: a team
  // counts toward c_k0 when it contains the expansion of the zero
  // assignment of the free space.
  std::optional<teamenum::Assignment> zero_expanded;
  if (reduced.size() == 1 && !reduced.front().contradictory())
    zero_expanded = reduced.front().zero_expansion();

  std::unique_ptr<teamenum::SolutionStream> stream;
  const teamenum::PolyspaceStream* polyspace = nullptr;
  if (reduced.size() > 1) {
    if (cfg.algorithm != teamenum::Algorithm::Polyspace) {
      std::cerr << "error: disjunctions require --algo polyspace\n";
      return kExitUsage;
    }
    stream = teamenum::merge_disjunction(std::move(reduced), cfg);
  } else {
    auto rf = std::move(reduced.front());
    if (cfg.algorithm == teamenum::Algorithm::Polyspace) {
      auto ps = teamenum::enumerate_polyspace(std::move(rf), cfg);
      polyspace = ps.get();
      stream = std::move(ps);
    } else {
      stream = teamenum::make_stream(std::move(rf), cfg);
    }
  }
  if (opts.order == "size-lex") {
    stream = teamenum::size_lex_reordered(std::move(stream));
    polyspace = nullptr;
  } else if (opts.order != "emission") {
    throw CLI::ValidationError("unknown order: " + opts.order);
  }

  std::ofstream profile;
  if (!opts.profile_file.empty()) {
    profile.open(opts.profile_file, std::ios::app);
    if (!profile)
      throw CLI::ValidationError("cannot open profile file: " +
                                 opts.profile_file);
  }

  std::map<std::size_t, LevelStats> levels;
  std::uint64_t index = 0;
  const auto start = std::chrono::steady_clock::now();
  while (auto team = stream->next()) {
    ++index;
    const std::uint64_t delay = stream->last_delay_steps();
    LevelStats& stats = levels[team->size()];
    ++stats.count;
    if (zero_expanded && team->contains(*zero_expanded)) ++stats.zero_count;
    stats.delays.push_back(delay);
    if (profile.is_open())
      profile << index << '\t' << team->size() << '\t' << delay << '\n';
    if (!opts.count_only) std::cout << team->to_string() << '\n';
  }
  const auto end = std::chrono::steady_clock::now();

  if (opts.count_only) {
    const double wall_ms =
        std::chrono::duration<double, std::milli>(end - start).count();
    print_report(std::cout, levels, free_count, wall_ms,
                 zero_expanded.has_value(),
                 polyspace ? &polyspace->space_stats() : nullptr);
  }
  return kExitOk;
}

int run_orbit(const std::string& team_text) {
  std::string text = team_text;
  if (text.empty()) {
    if (!std::getline(std::cin, text) || text.empty()) {
      std::cerr << "error: no team given (use --team or stdin)\n";
      return kExitUsage;
    }
  }
  teamenum::Team team = teamenum::Team::parse(text);
  auto stream = teamenum::enumerate_orbit(team);
  while (auto shifted = stream->next()) std::cout << shifted->to_string() << '\n';
  return kExitOk;
}

int run_seeds(const std::string& expr, const std::string& file, int level) {
  if (level < 1) throw CLI::ValidationError("--level must be >= 1");
  const std::string text = load_formula_text(expr, file);
  teamenum::Formula formula = teamenum::parse_formula(text);
  teamenum::ReducedFormula rf = teamenum::reduce(formula);
  if (rf.contradictory()) return kExitOk;  // no satisfying team at any level

  const int n = rf.free_count();
  if (level == 1) {
    teamenum::Team zero_team(n);
    zero_team.push_max(teamenum::Assignment(0, n));
    std::cout << zero_team.to_string() << '\n';
    return kExitOk;
  }
  const std::uint64_t space = n >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << n;
  if (static_cast<std::uint64_t>(level) > space) return kExitOk;

  teamenum::SeedStepper level2(rf);
  level2.run_to_completion();
  if (level == 2) {
    for (const auto& t : level2.seeds().to_vector())
      std::cout << t.to_string() << '\n';
    return kExitOk;
  }
  std::shared_ptr<teamenum::SeedIndex> pair_index = level2.take_index();
  std::shared_ptr<teamenum::SeedIndex> previous = pair_index;
  for (int k = 3; k <= level; ++k) {
    teamenum::SeedStepper stepper(rf, k, previous, pair_index);
    stepper.run_to_completion();
    if (k == level) {
      for (const auto& t : stepper.seeds().to_vector())
        std::cout << t.to_string() << '\n';
      return kExitOk;
    }
    previous = stepper.take_index();
  }
  return kExitOk;
}

int run_family(const std::string& kind, int k) {
  if (kind != "chain") throw CLI::ValidationError("unknown family: " + kind);
  if (k < 2) throw CLI::ValidationError("chain family needs --k >= 2");
  std::cout << teamenum::chain_formula_text(k) << '\n';
  return kExitOk;
}

}  // namespace

int run_main(int argc, char** argv) {
  CLI::App app{"Enumerates satisfying teams of Poor Man's propositional "
               "dependence logic formulas"};
  app.require_subcommand(1);

  EnumOptions enum_opts;
  CLI::App* cmd_enum = app.add_subcommand(
      "enum", "Enumerate all non-empty satisfying teams");
  cmd_enum->add_option("--expr", enum_opts.expr, "Formula text");
  cmd_enum->add_option("--formula", enum_opts.formula_file,
                       "File containing the formula");
  cmd_enum->add_option("--algo", enum_opts.algo,
                       "orbit | polyspace | brute (default orbit)");
  cmd_enum->add_option("--max-size", enum_opts.max_size,
                       "Largest team cardinality (default 2^n)");
  cmd_enum->add_option("--order", enum_opts.order,
                       "emission | size-lex (default emission)");
  cmd_enum->add_flag("--count-only", enum_opts.count_only,
                     "Suppress teams; print the run report");
  cmd_enum->add_option("--profile", enum_opts.profile_file,
                       "Append per-emission (index, cardinality, steps) TSV");

  std::string orbit_team;
  CLI::App* cmd_orbit =
      app.add_subcommand("orbit", "Stream the orbit of one team");
  cmd_orbit->add_option("--team", orbit_team,
                        "Team as comma-separated bitstrings (default stdin)");

  std::string seeds_expr, seeds_file;
  int seeds_level = 2;
  CLI::App* cmd_seeds = app.add_subcommand(
      "seeds", "Print the zero-containing satisfying teams of one cardinality");
  cmd_seeds->add_option("--expr", seeds_expr, "Formula text");
  cmd_seeds->add_option("--formula", seeds_file, "File containing the formula");
  cmd_seeds->add_option("--level,--seed-level", seeds_level,
                        "Team cardinality to print");

  std::string family_kind = "chain";
  int family_k = 0;
  CLI::App* cmd_family =
      app.add_subcommand("family", "Generate a benchmark formula family");
  cmd_family->add_option("--kind", family_kind, "Family kind (chain)");
  cmd_family->add_option("--k", family_k, "Family parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_enum->parsed()) return run_enum(enum_opts);
    if (cmd_orbit->parsed()) return run_orbit(orbit_team);
    if (cmd_seeds->parsed())
      return run_seeds(seeds_expr, seeds_file, seeds_level);
    if (cmd_family->parsed()) return run_family(family_kind, family_k);
  } catch (const teamenum::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const teamenum::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRefused;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // Bad user input (malformed teams, impossible levels, ...).
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (...) {
    std::cerr << "error: unexpected failure\n";
    return 1;
  }
}
