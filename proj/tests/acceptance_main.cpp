// Acceptance gate: every shipped claim about the bijection, checked end to
// end at desk scale. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <bressoud/bressoud.hpp>

namespace {

using namespace bressoud;

struct CommandResult {
  int status = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string cmd = std::string(BRESSOUD_CLI_PATH) + " " + args + " 2>&1";
  CommandResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int rc = pclose(pipe);
  if (rc != -1 && WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
  return r;
}

bool expect(bool ok, std::string& detail, const std::string& what) {
  if (!ok && detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
  return ok;
}

// 1. Classical counts at n=4 and n=0.
bool classical_constants(std::string& detail) {
  bool ok = true;
  ok &= expect(count(4, predicates::all()) == 5, detail, "p(4) != 5");
  ok &= expect(count(4, predicates::even_part_count()) == 3, detail, "p(4|even #parts) != 3");
  ok &= expect(count(4, predicates::all_odd()) == 2, detail, "p(4|all odd) != 2");
  ok &= expect(count(4, predicates::one_distinct()) == 2, detail, "p(4|distinct) != 2");
  ok &= expect(count(0, predicates::all()) == 1, detail, "p(0) != 1");
  return ok;
}

// 2./3. Count identity at d=2 for one permutation, n <= 40.
bool d2_identity(const ResiduePermutation& pi, std::string& detail) {
  bool ok = true;
  const DistinctnessGap two(2);
  for (Part n = 0; n <= 40; ++n) {
    std::uint64_t left = 0, right = 0;
    for (const Partition& p : partitions_of(n)) {
      if (is_d_distinct(p, two)) ++left;
      if (satisfies_conditions(p, pi)) ++right;
    }
    ok &= expect(left == right, detail,
                 "n=" + std::to_string(n) + ": " + std::to_string(left) +
                     " != " + std::to_string(right));
  }
  return ok;
}

// 4. Full bijection check for n <= 30, d <= 5, all 153 permutations.
bool general_identity(std::string& detail) {
  const RangeSummary s = verify_range(30, 5);
  bool ok = expect(s.reports.size() == 4743, detail,
                   "expected 4743 reports, got " + std::to_string(s.reports.size()));
  ok &= expect(s.all_passed(), detail, std::to_string(s.failures) + " reports failed");
  for (const VerificationReport& r : s.reports)
    if (!r.passed() && detail.size() < 400)
      detail += "; first failure at n=" + std::to_string(r.n) + " d=" + std::to_string(r.d);
  return ok;
}

// 5. Conjugation: bounded-part-count vs bounded-largest-part counts, and
// the involution property over every partition of n <= 30.
bool conjugation_identity(std::string& detail) {
  bool ok = true;
  for (Part n = 0; n <= 30; ++n)
    for (Part m = 0; m <= 10; ++m)
      ok &= expect(verify_lemma_conjugate(n, m).passed(), detail,
                   "n=" + std::to_string(n) + " m=" + std::to_string(m));
  for (Part n = 0; n <= 30; ++n)
    for (const Partition& p : partitions_of(n)) {
      const Partition c = conjugate(p);
      ok &= expect(conjugate(c) == p && c.weight() == p.weight(), detail,
                   "involution broke at " + to_text(p));
      if (!ok) return ok;
    }
  return ok;
}

// 6. Degenerate cases: d=1 identity map, empty partition fixed everywhere,
// weight and part count preserved by every tested application.
bool degenerate_cases(std::string& detail) {
  bool ok = true;
  const ResiduePermutation id1 = ResiduePermutation::identity(1);
  for (Part n = 0; n <= 30; ++n)
    for (const Partition& p : d_distinct_partitions(n, DistinctnessGap(1)))
      ok &= expect(forward(p, id1) == p && inverse(p, id1) == p, detail,
                   "d=1 moved " + to_text(p));

  const Partition empty(std::vector<Part>{});
  for (int d = 1; d <= 5; ++d)
    for (const ResiduePermutation& pi : all_permutations(d))
      ok &= expect(forward(empty, pi).empty() && inverse(empty, pi).empty(), detail,
                   "empty moved at d=" + std::to_string(d));

  for (Part n = 0; n <= 20; ++n)
    for (int d = 1; d <= 4; ++d)
      for (const ResiduePermutation& pi : all_permutations(d)) {
        for (const Partition& lam : d_distinct_partitions(n, DistinctnessGap(d))) {
          const Partition mu = forward(lam, pi);
          ok &= expect(mu.weight() == lam.weight() && mu.size() == lam.size(), detail,
                       "forward changed weight/parts of " + to_text(lam));
        }
        for (const Partition& mu : target_partitions(n, pi)) {
          const Partition rho = inverse(mu, pi);
          ok &= expect(rho.weight() == mu.weight() && rho.size() == mu.size(), detail,
                       "inverse changed weight/parts of " + to_text(mu));
        }
      }
  return ok;
}

// 7. Inverse feasibility is equivalent to the threshold conditions.
bool feasibility_equivalence(std::string& detail) {
  bool ok = true;
  for (Part n = 0; n <= 25; ++n) {
    std::vector<Partition> distinct;
    for (const Partition& p : d_distinct_partitions(n, DistinctnessGap(1))) distinct.push_back(p);
    for (int d = 1; d <= 3; ++d)
      for (const ResiduePermutation& pi : all_permutations(d))
        for (const Partition& mu : distinct) {
          bool inverted = true;
          try {
            const Partition rho = inverse(mu, pi);
            inverted = is_d_distinct(rho, DistinctnessGap(d)) && forward(rho, pi) == mu;
          } catch (const ConditionViolation&) {
            inverted = false;
          }
          ok &= expect(inverted == satisfies_conditions(mu, pi), detail,
                       "n=" + std::to_string(n) + " d=" + std::to_string(d) + " mu=" +
                           to_text(mu));
          if (!ok) return ok;
        }
  }
  return ok;
}

// 8. CLI contract: worked examples, exit codes, verify run.
bool cli_contract(std::string& detail) {
  bool ok = true;
  const auto golden = [&](const std::string& args, int status, const std::string& output) {
    const CommandResult r = run_cli(args);
    ok &= expect(r.status == status && r.output == output, detail,
                 "`" + args + "` gave exit " + std::to_string(r.status) + " output \"" +
                     r.output + "\"");
  };

  golden("map 6,3 --dual", 0, "5,4\n");
  golden("unmap 5,4 --dual", 0, "6,3\n");
  golden("map 8,1 --dual", 0, "6,3\n");
  golden("unmap 6,3 --dual", 0, "8,1\n");
  golden("map 5,3,1 --dual", 0, "5,3,1\n");
  golden("unmap 5,3,1 --dual", 0, "5,3,1\n");
  golden("map 6,3 --bressoud", 0, "6,3\n");
  golden("map 6,3 --d 2 --pi 0,1", 0, "5,4\n");

  golden("map 5,4,1 --dual", 3, "not 2-distinct at parts 5,4\n");
  golden("unmap 2,1 --dual", 4, "condition c_1 violated\n");
  ok &= expect(run_cli("map 1,2 --dual").status == 2, detail, "map 1,2 should exit 2");

  golden("enumerate 4 --count", 0, "5\n");
  golden("enumerate 9 --filter d-distinct --d 2", 0, "9\n8,1\n7,2\n6,3\n5,3,1\n");
  golden("render 5,4,1", 0, "#####\n####\n#\n");
  golden("render -", 0, "");

  const CommandResult verify = run_cli("verify --n-max 12 --d-max 2");
  ok &= expect(verify.status == 0, detail,
               "verify exited " + std::to_string(verify.status));
  return ok;
}

}  // namespace

int main() {
  using Criterion = std::pair<std::string, std::function<bool(std::string&)>>;
  const std::vector<Criterion> criteria = {
      {"classical partition counts at n=4 and n=0", classical_constants},
      {"d=2 identity, every even part beats twice the odd count, n <= 40",
       [](std::string& d) { return d2_identity(ResiduePermutation::bressoud_original(), d); }},
      {"d=2 identity, every odd part beats twice the even count, n <= 40",
       [](std::string& d) { return d2_identity(ResiduePermutation::bressoud_dual(), d); }},
      {"general identity, n <= 30, d <= 5, all 153 permutations", general_identity},
      {"conjugation pairs the bounded counts, n <= 30, m <= 10", conjugation_identity},
      {"degenerate cases: d=1 identity, empty fixed, weight/parts preserved", degenerate_cases},
      {"inverse feasibility equals the threshold conditions, n <= 25, d <= 3",
       feasibility_equivalence},
      {"CLI contract: worked examples, exit codes, verify run", cli_contract},
  };

  bool all_ok = true;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    const bool ok = check(detail);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %d. %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    all_ok &= ok;
  }
  std::printf("%s\n", all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES above");
  return all_ok ? 0 : 1;
}
