// Tabulates both sides of the count identity for small n and every
// permutation at d = 1, 2, 3. The two columns agree on every row.

#include <cstdio>

#include <bressoud/bressoud.hpp>

int main() {
  using namespace bressoud;
  std::printf("%4s %3s %-8s %12s %12s\n", "n", "d", "pi", "d-distinct", "conditions");
  for (int d = 1; d <= 3; ++d)
    for (const ResiduePermutation& pi : all_permutations(d)) {
      std::string pi_text;
      for (int r : pi.images()) pi_text += (pi_text.empty() ? "" : ",") + std::to_string(r);
      for (Part n = 0; n <= 16; ++n) {
        std::uint64_t left = 0, right = 0;
        for (const Partition& p : partitions_of(n)) {
          if (is_d_distinct(p, DistinctnessGap(d))) ++left;
          if (satisfies_conditions(p, pi)) ++right;
        }
        std::printf("%4lld %3d %-8s %12llu %12llu%s\n", static_cast<long long>(n), d,
                    pi_text.c_str(), static_cast<unsigned long long>(left),
                    static_cast<unsigned long long>(right), left == right ? "" : "  <-- MISMATCH");
      }
    }
  return 0;
}
