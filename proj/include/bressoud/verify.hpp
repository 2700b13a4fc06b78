#pragma once

/* Brute-force verification of the identities at desk scale: for a given
 * (n, d, pi), both sides of the count identity are enumerated, the forward
 * map is checked to be a bijection between them (membership, injectivity,
 * both roundtrips), and failures are reported as data rather than thrown.
 *
 * Guidance: n_max <= 40, d_max <= 5 keeps a full verify_range run within
 * minutes on one desktop core.
 */

#include <chrono>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "bijection.hpp"
#include "enumerate.hpp"

namespace bressoud {

/// Result of one (n, d, pi) identity check. Passing means: equal counts,
/// every forward image inside the target set, no collisions, and both
/// roundtrips the identity. Witnesses hold up to ten failing partitions.
struct VerificationReport {
  Part n = 0;
  int d = 1;
  ResiduePermutation pi = ResiduePermutation::identity(1);
  std::uint64_t count_left = 0;   // d-distinct side
  std::uint64_t count_right = 0;  // condition side
  bool forward_total = true;
  bool injective = true;
  bool roundtrip_fwd_inv = true;
  bool roundtrip_inv_fwd = true;
  std::vector<Partition> witnesses;

  static constexpr std::size_t kWitnessCap = 10;

  bool passed() const {
    return count_left == count_right && forward_total && injective && roundtrip_fwd_inv &&
           roundtrip_inv_fwd && witnesses.empty();
  }
};

namespace detail {

inline void add_witness(VerificationReport& report, const Partition& p) {
  if (report.witnesses.size() < VerificationReport::kWitnessCap) report.witnesses.push_back(p);
}

}  // namespace detail

/// Checks the identity on a pre-enumerated list of all partitions of n
/// (shared across many (d, pi) pairs by verify_range).
inline VerificationReport verify_identity(Part n, const ResiduePermutation& pi,
                                          const std::vector<Partition>& all_of_n) {
  VerificationReport report;
  report.n = n;
  report.d = pi.d();
  report.pi = pi;

  const DistinctnessGap gap(pi.d());
  std::vector<const Partition*> left;
  std::vector<const Partition*> right;
  std::set<std::vector<Part>> right_index;
  for (const Partition& p : all_of_n) {
    if (is_d_distinct(p, gap)) left.push_back(&p);
    if (satisfies_conditions(p, pi)) {
      right.push_back(&p);
      right_index.insert(p.parts());
    }
  }
  report.count_left = left.size();
  report.count_right = right.size();

  std::set<std::vector<Part>> images;  // keyed by canonical part sequence
  for (const Partition* lambda : left) {
    const Partition mu = forward(*lambda, pi);
    if (right_index.find(mu.parts()) == right_index.end()) {
      report.forward_total = false;
      detail::add_witness(report, *lambda);
    }
    if (!images.insert(mu.parts()).second) {
      report.injective = false;
      detail::add_witness(report, *lambda);
    }
    try {
      if (inverse(mu, pi) != *lambda) {
        report.roundtrip_fwd_inv = false;
        detail::add_witness(report, *lambda);
      }
    } catch (const std::domain_error&) {
      report.roundtrip_fwd_inv = false;
      detail::add_witness(report, *lambda);
    }
  }

  for (const Partition* mu : right) {
    try {
      const Partition rho = inverse(*mu, pi);
      if (!is_d_distinct(rho, gap) || forward(rho, pi) != *mu) {
        report.roundtrip_inv_fwd = false;
        detail::add_witness(report, *mu);
      }
    } catch (const std::domain_error&) {
      report.roundtrip_inv_fwd = false;
      detail::add_witness(report, *mu);
    }
  }
  return report;
}

inline VerificationReport verify_identity(Part n, const ResiduePermutation& pi) {
  std::vector<Partition> all_of_n;
  for (const Partition& p : partitions_of(n)) all_of_n.push_back(p);
  return verify_identity(n, pi, all_of_n);
}

/// Count identity between partitions of n with at most m parts and those
/// with every part at most m, with conjugation as the elementwise witness.
struct LemmaConjugateReport {
  Part n = 0;
  Part m = 0;
  std::uint64_t count_max_parts = 0;  // at most m parts
  std::uint64_t count_max_part = 0;   // every part <= m
  bool bijective = true;              // conjugate maps one set exactly onto the other

  bool passed() const { return count_max_parts == count_max_part && bijective; }
};

inline LemmaConjugateReport verify_lemma_conjugate(Part n, Part m) {
  LemmaConjugateReport report;
  report.n = n;
  report.m = m;

  std::vector<Partition> rows;  // at most m parts
  std::set<std::vector<Part>> columns_index;
  for (const Partition& p : partitions_of(n)) {
    if (static_cast<Part>(p.size()) <= m) {
      rows.push_back(p);
      ++report.count_max_parts;
    }
    if (p.empty() || p.parts().front() <= m) {
      columns_index.insert(p.parts());
      ++report.count_max_part;
    }
  }

  std::set<std::vector<Part>> images;
  for (const Partition& p : rows) {
    const Partition c = conjugate(p);
    if (columns_index.find(c.parts()) == columns_index.end() || !images.insert(c.parts()).second ||
        conjugate(c) != p) {
      report.bijective = false;
    }
  }
  if (images.size() != columns_index.size()) report.bijective = false;
  return report;
}

/// Every verify_identity report for n <= n_max, d <= d_max, all d!
/// permutations, ordered by (n, d, permutation image lex).
struct RangeSummary {
  Part n_max = 0;
  int d_max = 1;
  std::vector<VerificationReport> reports;
  std::uint64_t failures = 0;
  double wall_seconds = 0.0;

  bool all_passed() const { return failures == 0; }
};

inline RangeSummary verify_range(Part n_max, int d_max) {
  const auto start = std::chrono::steady_clock::now();
  RangeSummary summary;
  summary.n_max = n_max;
  summary.d_max = d_max;

  std::vector<std::vector<ResiduePermutation>> perms_by_d;
  perms_by_d.reserve(static_cast<std::size_t>(d_max));
  for (int d = 1; d <= d_max; ++d) perms_by_d.push_back(all_permutations(d));

  for (Part n = 0; n <= n_max; ++n) {
    // one enumeration of n shared across every (d, pi) pair
    std::vector<Partition> all_of_n;
    for (const Partition& p : partitions_of(n)) all_of_n.push_back(p);
    for (const auto& perms : perms_by_d)
      for (const ResiduePermutation& pi : perms) {
        VerificationReport report = verify_identity(n, pi, all_of_n);
        if (!report.passed()) ++summary.failures;
        summary.reports.push_back(std::move(report));
      }
  }

  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace bressoud
