#pragma once

/* The gap-collapsing bijection between d-distinct partitions and 1-distinct
 * partitions satisfying the residue-threshold conditions, for any residue
 * permutation pi on {0..d-1}.
 *
 * Forward, in four steps on the Young diagram of a d-distinct partition
 * a_1 > ... > a_m:
 *
 *   1. subtract the staircase: b_i = a_i - ((m-i)d + 1), keeping exactly m
 *      values, trailing zeros included;
 *   2. restack the b-values into d residue groups mod d, group of residue
 *      (pi(d-1)-1) on top down to (pi(0)-1) at the bottom, each group
 *      non-increasing;
 *   3. add the staircase back by stack position: the r-th row counted from
 *      the bottom gains r*d + 1, which shifts each value's residue from
 *      pi(j)-1 to pi(j);
 *   4. sort the rows into a partition.
 *
 * The inverse runs the same pipeline backwards; the only step that can
 * fail is the bottom-up staircase subtraction, and it fails exactly on
 * partitions violating one of the threshold conditions. Weight and part
 * count are preserved in both directions.
 */

#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace bressoud {

/// Step-1 output: exactly m non-increasing values >= 0, trailing zeros kept
/// so the row count still matches the source partition.
struct PaddedParts {
  std::vector<Part> values;

  std::size_t count() const { return values.size(); }

  friend bool operator==(const PaddedParts&, const PaddedParts&) = default;
};

/// Offsets 1, d+1, ..., (m-1)d+1 aligned with a largest-first row list:
/// row i (0-based from the top) pairs with (m-1-i)*d + 1.
inline std::vector<Part> staircase_offsets(std::size_t m, DistinctnessGap d) {
  std::vector<Part> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i)
    out.push_back(static_cast<Part>(m - 1 - i) * d.value() + 1);
  return out;
}

/// Total weight of the staircase with m rows: m + d*m*(m-1)/2.
inline Part staircase_weight(std::size_t m, DistinctnessGap d) {
  const auto mm = static_cast<Part>(m);
  return mm + static_cast<Part>(d.value()) * mm * (mm - 1) / 2;
}

/// One residue class in the step-2 stack.
struct ResidueGroup {
  int residue = 0;           // shared residue mod d of every value here
  std::vector<Part> values;  // non-increasing, top to bottom

  friend bool operator==(const ResidueGroup&, const ResidueGroup&) = default;
};

/// Step-2 output: d groups stacked top to bottom. groups[0] (top) holds
/// residue (pi(d-1)-1) mod d, groups[d-1] (bottom) holds (pi(0)-1) mod d.
struct GroupedRows {
  int d = 1;
  std::vector<ResidueGroup> groups;

  /// k_0..k_{d-1}: k_j is the size of the group fed by pi(j), i.e. the
  /// (j+1)-th group counted from the bottom of the stack.
  std::vector<std::size_t> group_sizes() const {
    std::vector<std::size_t> out;
    out.reserve(groups.size());
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) out.push_back(it->values.size());
    return out;
  }

  std::size_t total() const {
    std::size_t m = 0;
    for (const auto& g : groups) m += g.values.size();
    return m;
  }

  friend bool operator==(const GroupedRows&, const GroupedRows&) = default;
};

enum class Direction { forward, inverse };

/// Full record of one run of the pipeline. The fields always hold the same
/// mathematical objects regardless of direction: after_step1/after_step2
/// sit on the d-distinct side of the staircase, after_step3 is the stack of
/// target-side rows (top first). An inverse run visits them backwards but
/// records them in the same places, so the trace of mu under inverse is
/// field-equal to the trace of its preimage under forward.
struct StepTrace {
  Partition input;
  PaddedParts after_step1;
  std::vector<Part> staircase;  // offsets aligned with after_step1.values
  GroupedRows after_step2;
  std::vector<Part> after_step3;  // whole stack, top to bottom
  Partition output;
  Direction direction = Direction::forward;
};

/// Step 1. Requires lambda to be d-distinct; throws NotDistinctError naming
/// the first offending adjacent pair otherwise.
inline PaddedParts staircase_subtract(const Partition& lambda, DistinctnessGap d) {
  if (auto bad = first_gap_violation(lambda, d))
    throw NotDistinctError(d.value(), bad->first, bad->second);
  const auto& a = lambda.parts();
  const std::size_t m = a.size();
  PaddedParts out;
  out.values.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.values.push_back(a[i] - (static_cast<Part>(m - 1 - i) * d.value() + 1));
    assert(out.values.back() >= 0);
    // b_i - b_{i+1} = a_i - a_{i+1} - d >= 0
    assert(i == 0 || out.values[i - 1] - out.values[i] == a[i - 1] - a[i] - d.value());
  }
  return out;
}

/// Step 2. Distributes the values into d residue classes mod d (zeros land
/// in class 0) and stacks the classes in the pi-derived order.
inline GroupedRows regroup_by_residue(const PaddedParts& b, const ResiduePermutation& pi) {
  const int d = pi.d();
  GroupedRows out;
  out.d = d;
  out.groups.resize(static_cast<std::size_t>(d));

  std::vector<std::size_t> position_of_residue(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    const auto pos = static_cast<std::size_t>(d - 1 - j);
    out.groups[pos].residue = pi.group_residue(j);
    position_of_residue[static_cast<std::size_t>(pi.group_residue(j))] = pos;
  }
  // b is non-increasing, so each group fills non-increasing as well
  for (Part v : b.values)
    out.groups[position_of_residue[static_cast<std::size_t>(v % d)]].values.push_back(v);
  return out;
}

/// Step 3. Row r counted from the bottom of the whole stack gains r*d + 1;
/// returns the stack top-first. Every result in the group fed by pi(j) is
/// congruent to pi(j) mod d and at least 1.
inline std::vector<Part> staircase_add(const GroupedRows& g, DistinctnessGap d) {
  assert(g.d == d.value());
  const std::size_t m = g.total();
  std::vector<Part> stack;
  stack.reserve(m);
  std::size_t row_from_top = 0;
  for (const auto& grp : g.groups)
    for (Part v : grp.values) {
      stack.push_back(v + static_cast<Part>(m - 1 - row_from_top) * d.value() + 1);
      ++row_from_top;
    }
  return stack;
}

/// Step 4. Sorts the rows (all >= 1) into a partition.
inline Partition sort_parts(std::vector<Part> rows) {
  for (Part v : rows)
    if (v < 1) throw std::invalid_argument("parts must be positive");
  std::sort(rows.begin(), rows.end(), std::greater<>());
  return Partition::unchecked(std::move(rows));
}

namespace detail {

inline StepTrace run_forward(const Partition& lambda, const ResiduePermutation& pi) {
  const DistinctnessGap gap(pi.d());
  StepTrace t;
  t.direction = Direction::forward;
  t.input = lambda;
  t.after_step1 = staircase_subtract(lambda, gap);
  t.staircase = staircase_offsets(lambda.size(), gap);
  t.after_step2 = regroup_by_residue(t.after_step1, pi);
  t.after_step3 = staircase_add(t.after_step2, gap);
  t.output = sort_parts(t.after_step3);
  return t;
}

inline StepTrace run_inverse(const Partition& mu, const ResiduePermutation& pi) {
  const int d = pi.d();
  if (auto bad = first_gap_violation(mu, DistinctnessGap(1)))
    throw NotDistinctError(1, bad->first, bad->second);

  StepTrace t;
  t.direction = Direction::inverse;
  t.input = mu;

  // Undo step 4: stack the parts by residue class, the class of pi(d-1) on
  // top down to the class of pi(0) at the bottom. Within a class the parts
  // are distinct and share a residue, so they are strictly decreasing.
  std::vector<std::vector<Part>> stacked(static_cast<std::size_t>(d));
  std::vector<std::size_t> position_of_class(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j)
    position_of_class[static_cast<std::size_t>(pi.image(j))] = static_cast<std::size_t>(d - 1 - j);
  for (Part p : mu.parts()) stacked[position_of_class[static_cast<std::size_t>(p % d)]].push_back(p);

  const std::size_t m = mu.size();
  t.after_step3.reserve(m);
  for (const auto& grp : stacked) t.after_step3.insert(t.after_step3.end(), grp.begin(), grp.end());

  // Undo step 3: subtract r*d + 1 from row r counted from the bottom,
  // walking the groups bottom-up. A subtraction can only go negative at the
  // smallest row of a group; when it does for the group fed by pi(s), the
  // partition fails exactly threshold condition c_s.
  t.after_step2.d = d;
  t.after_step2.groups.resize(static_cast<std::size_t>(d));
  Part row_from_bottom = 0;
  for (int j = 0; j < d; ++j) {
    const auto pos = static_cast<std::size_t>(d - 1 - j);
    auto& out = t.after_step2.groups[pos];
    out.residue = pi.group_residue(j);
    const auto& grp = stacked[pos];
    out.values.resize(grp.size());
    for (std::size_t i = grp.size(); i-- > 0;) {  // bottom of the group first
      const Part offset = row_from_bottom * d + 1;
      if (grp[i] < offset) throw ConditionViolation(j);
      out.values[i] = grp[i] - offset;
      ++row_from_bottom;
    }
  }

  // Undo steps 2 and 1: sort the remainders and shift them back right.
  std::vector<Part> b;
  b.reserve(m);
  for (const auto& grp : t.after_step2.groups) b.insert(b.end(), grp.values.begin(), grp.values.end());
  std::sort(b.begin(), b.end(), std::greater<>());
  t.after_step1.values = std::move(b);
  t.staircase = staircase_offsets(m, DistinctnessGap(d));

  std::vector<Part> a(m);
  for (std::size_t i = 0; i < m; ++i) a[i] = t.after_step1.values[i] + t.staircase[i];
  t.output = Partition::unchecked(std::move(a));
  return t;
}

}  // namespace detail

/// Image of a d-distinct partition, d = pi's modulus. Preserves weight and
/// part count; the result is 1-distinct and satisfies the conditions.
inline Partition forward(const Partition& lambda, const ResiduePermutation& pi) {
  const DistinctnessGap gap(pi.d());
  return sort_parts(staircase_add(regroup_by_residue(staircase_subtract(lambda, gap), pi), gap));
}

/// Preimage of a target-side partition. Throws NotDistinctError when mu is
/// not 1-distinct and ConditionViolation(s) when threshold c_s fails; on
/// success forward(inverse(mu, pi), pi) == mu.
inline Partition inverse(const Partition& mu, const ResiduePermutation& pi) {
  return detail::run_inverse(mu, pi).output;
}

/// Full intermediate record of one forward or inverse run.
inline StepTrace trace(const Partition& p, const ResiduePermutation& pi, Direction direction) {
  return direction == Direction::forward ? detail::run_forward(p, pi) : detail::run_inverse(p, pi);
}

// ---------------------------------------------------------------------------
// Text rendering of traces: each stage as a Young diagram, with a '|'
// separator column between the staircase and the remainder while the two
// halves are split apart.
// ---------------------------------------------------------------------------

namespace detail {

inline void render_solid_rows(std::string& out, const std::vector<Part>& rows) {
  for (Part v : rows) {
    out.append(static_cast<std::size_t>(v), '#');
    out.push_back('\n');
  }
}

inline void render_split_rows(std::string& out, const std::vector<Part>& offsets,
                              const std::vector<Part>& remainders) {
  for (std::size_t i = 0; i < remainders.size(); ++i) {
    out.append(static_cast<std::size_t>(offsets[i]), '#');
    out.push_back('|');
    out.append(static_cast<std::size_t>(remainders[i]), '#');
    out.push_back('\n');
  }
}

inline void render_group_list(std::string& out, const GroupedRows& g) {
  for (const auto& grp : g.groups)
    out += "  residue " + std::to_string(grp.residue) + ": " + to_text(grp.values) + "\n";
}

/// Group listing for the target side: same stack slices as after_step3,
/// labelled with the post-shift residues (pi(j) rather than pi(j)-1).
inline void render_target_group_list(std::string& out, const GroupedRows& g,
                                     const std::vector<Part>& stack) {
  std::size_t at = 0;
  for (const auto& grp : g.groups) {
    const int residue = (grp.residue + 1) % g.d;
    const std::vector<Part> vals(stack.begin() + static_cast<std::ptrdiff_t>(at),
                                 stack.begin() + static_cast<std::ptrdiff_t>(at + grp.values.size()));
    at += grp.values.size();
    out += "  residue " + std::to_string(residue) + ": " + to_text(vals) + "\n";
  }
}

/// Stack as step 2 leaves it: grouped remainders next to the untouched
/// staircase column.
inline std::vector<Part> grouped_stack(const GroupedRows& g) {
  std::vector<Part> stack;
  stack.reserve(g.total());
  for (const auto& grp : g.groups) stack.insert(stack.end(), grp.values.begin(), grp.values.end());
  return stack;
}

}  // namespace detail

inline std::string render_trace(const StepTrace& t) {
  const int d = t.after_step2.d;
  std::string out;
  out += "input: " + to_text(t.input) + "\n";
  detail::render_solid_rows(out, t.input.parts());

  if (t.direction == Direction::forward) {
    out += "step 1: subtract staircase (d=" + std::to_string(d) + ")  ->  b = " +
           to_text(t.after_step1.values) + "\n";
    detail::render_split_rows(out, t.staircase, t.after_step1.values);

    out += "step 2: regroup by residue mod " + std::to_string(d) + " (top to bottom)\n";
    detail::render_group_list(out, t.after_step2);
    detail::render_split_rows(out, t.staircase, detail::grouped_stack(t.after_step2));

    out += "step 3: add staircase  ->  stack = " + to_text(t.after_step3) + "\n";
    detail::render_solid_rows(out, t.after_step3);

    out += "step 4: sort  ->  output = " + to_text(t.output) + "\n";
    detail::render_solid_rows(out, t.output.parts());
  } else {
    out += "undo step 4: regroup by residue mod " + std::to_string(d) + " (top to bottom)\n";
    detail::render_target_group_list(out, t.after_step2, t.after_step3);
    detail::render_solid_rows(out, t.after_step3);

    out += "undo step 3: subtract staircase  ->  b stack = " +
           to_text(detail::grouped_stack(t.after_step2)) + "\n";
    detail::render_split_rows(out, t.staircase, detail::grouped_stack(t.after_step2));

    out += "undo steps 2+1: sort and add staircase  ->  output = " + to_text(t.output) + "\n";
    detail::render_solid_rows(out, t.output.parts());
  }
  return out;
}

}  // namespace bressoud
