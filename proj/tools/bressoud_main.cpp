// Command-line front end: map/unmap partitions through the bijection,
// enumerate restricted partitions, verify the count identities, render
// Young diagrams.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
// 3 distinctness precondition failed, 4 inverse infeasible.

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <bressoud/bressoud.hpp>

namespace {

using namespace bressoud;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotDistinct = 3;
constexpr int kExitInfeasible = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Permutation sources: exactly one of --pi / --bressoud / --dual, with an
/// optional --d pinning the expected modulus.
struct PiFlags {
  std::string pi_text;
  bool bressoud = false;
  bool dual = false;
  int d = 0;  // 0 = unset

  void attach(CLI::App& cmd) {
    cmd.add_option("--pi", pi_text, "permutation as its image list pi(0),...,pi(d-1)");
    cmd.add_flag("--bressoud", bressoud, "shorthand for --pi 1,0 (d=2)");
    cmd.add_flag("--dual", dual, "shorthand for --pi 0,1 (d=2)");
    cmd.add_option("--d", d, "modulus; must match the permutation length");
  }

  ResiduePermutation resolve() const {
    const int sources = (pi_text.empty() ? 0 : 1) + (bressoud ? 1 : 0) + (dual ? 1 : 0);
    if (sources != 1) throw UsageError("choose exactly one of --pi, --bressoud, --dual");
    ResiduePermutation pi = bressoud ? ResiduePermutation::bressoud_original()
                          : dual    ? ResiduePermutation::bressoud_dual()
                                    : parse_permutation(pi_text);
    if (d != 0 && d != pi.d())
      throw UsageError("--d " + std::to_string(d) + " disagrees with a permutation of length " +
                       std::to_string(pi.d()));
    return pi;
  }
};

int run_map(const std::string& text, const PiFlags& flags, bool want_trace, bool want_json,
            Direction direction) {
  Partition input(std::vector<Part>{});
  ResiduePermutation pi = ResiduePermutation::identity(1);
  try {
    input = parse_partition(text);
    pi = flags.resolve();
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const StepTrace t = trace(input, pi, direction);
    if (want_json)
      std::cout << to_json(t).dump() << "\n";
    else if (want_trace)
      std::cout << render_trace(t);
    else
      std::cout << to_text(t.output) << "\n";
    return 0;
  } catch (const NotDistinctError& e) {
    std::cerr << e.what() << "\n";
    return kExitNotDistinct;
  } catch (const ConditionViolation& e) {
    std::cerr << e.what() << "\n";
    return kExitInfeasible;
  }
}

int run_enumerate(long long n, const std::string& filter, const PiFlags& flags,
                  std::optional<long long> m, bool count_only, bool want_json) {
  std::function<bool(const Partition&)> pred;
  try {
    if (filter == "all") {
      pred = predicates::all();
    } else if (filter == "1-distinct") {
      pred = predicates::one_distinct();
    } else if (filter == "d-distinct") {
      if (flags.d < 1) throw UsageError("--filter d-distinct needs --d");
      pred = predicates::d_distinct(DistinctnessGap(flags.d));
    } else if (filter == "target") {
      pred = predicates::target(flags.resolve());
    } else if (filter == "max-parts") {
      if (!m) throw UsageError("--filter max-parts needs --m");
      pred = predicates::max_parts(*m);
    } else if (filter == "max-part") {
      if (!m) throw UsageError("--filter max-part needs --m");
      pred = predicates::max_part(*m);
    } else if (filter == "all-odd") {
      pred = predicates::all_odd();
    } else if (filter == "even-part-count") {
      pred = predicates::even_part_count();
    } else {
      throw UsageError("unknown filter: " + filter);
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<Partition> matched;
  long long total = 0;
  for (const Partition& p : partitions_of(n))
    if (pred(p)) {
      ++total;
      if (!count_only) matched.push_back(p);
    }

  if (want_json) {
    nlohmann::json out{{"n", n}, {"filter", filter}, {"count", total}};
    if (!count_only) {
      nlohmann::json list = nlohmann::json::array();
      for (const Partition& p : matched) list.push_back(to_json(p));
      out["partitions"] = std::move(list);
    }
    std::cout << out.dump() << "\n";
  } else if (count_only) {
    std::cout << total << "\n";
  } else {
    for (const Partition& p : matched) std::cout << to_text(p) << "\n";
  }
  return 0;
}

int run_verify(long long n_max, int d_max) {
  const RangeSummary summary = verify_range(n_max, d_max);
  for (const VerificationReport& r : summary.reports) std::cout << to_json(r).dump() << "\n";
  std::cout << summary_to_json(summary).dump() << "\n";
  return summary.all_passed() ? 0 : kExitVerifyFailed;
}

int run_render(const std::string& text) {
  try {
    std::cout << render_young(parse_partition(text));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized gap-collapsing partition bijection"};
  app.require_subcommand(1);

  std::string map_text;
  PiFlags map_pi;
  bool map_trace = false, map_json = false;
  CLI::App& map_cmd = *app.add_subcommand("map", "image of a d-distinct partition");
  map_cmd.add_option("partition", map_text, "comma-separated parts, or - for empty")->required();
  map_pi.attach(map_cmd);
  map_cmd.add_flag("--trace", map_trace, "show every step as a diagram");
  map_cmd.add_flag("--json", map_json, "emit the full step trace as JSON");

  std::string unmap_text;
  PiFlags unmap_pi;
  bool unmap_trace = false, unmap_json = false;
  CLI::App& unmap_cmd = *app.add_subcommand("unmap", "preimage of a target-side partition");
  unmap_cmd.add_option("partition", unmap_text, "comma-separated parts, or - for empty")->required();
  unmap_pi.attach(unmap_cmd);
  unmap_cmd.add_flag("--trace", unmap_trace, "show every step as a diagram");
  unmap_cmd.add_flag("--json", unmap_json, "emit the full step trace as JSON");

  long long enum_n = 0;
  std::string enum_filter = "all";
  PiFlags enum_pi;
  long long enum_m = -1;
  bool enum_count = false, enum_json = false;
  CLI::App& enum_cmd = *app.add_subcommand("enumerate", "list partitions of n");
  enum_cmd.add_option("n", enum_n, "weight to enumerate")->required()->check(CLI::NonNegativeNumber);
  enum_cmd
      .add_option("--filter", enum_filter, "all, 1-distinct, d-distinct, target, max-parts, max-part, all-odd, even-part-count")
      ->check(CLI::IsMember({"all", "1-distinct", "d-distinct", "target", "max-parts", "max-part",
                             "all-odd", "even-part-count"}));
  enum_pi.attach(enum_cmd);
  enum_cmd.add_option("--m", enum_m, "bound for max-parts / max-part")->check(CLI::NonNegativeNumber);
  enum_cmd.add_flag("--count", enum_count, "print only the cardinality");
  enum_cmd.add_flag("--json", enum_json, "emit one JSON object");

  long long verify_n_max = 12;
  int verify_d_max = 2;
  CLI::App& verify_cmd = *app.add_subcommand("verify", "check the count identities exhaustively");
  verify_cmd.add_option("--n-max", verify_n_max, "largest weight checked (default 12)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd.add_option("--d-max", verify_d_max, "largest modulus checked (default 2)")
      ->check(CLI::PositiveNumber);

  std::string render_text;
  CLI::App& render_cmd = *app.add_subcommand("render", "draw a Young diagram");
  render_cmd.add_option("partition", render_text, "comma-separated parts, or - for empty")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the error message
    return code == 0 ? 0 : kExitUsage;
  }

  if (map_cmd.parsed())
    return run_map(map_text, map_pi, map_trace, map_json, Direction::forward);
  if (unmap_cmd.parsed())
    return run_map(unmap_text, unmap_pi, unmap_trace, unmap_json, Direction::inverse);
  if (enum_cmd.parsed())
    return run_enumerate(enum_n, enum_filter, enum_pi,
                         enum_m >= 0 ? std::optional<long long>(enum_m) : std::nullopt, enum_count,
                         enum_json);
  if (verify_cmd.parsed()) return run_verify(verify_n_max, verify_d_max);
  if (render_cmd.parsed()) return run_render(render_text);
  return kExitUsage;
}
