#pragma once

/* Core partition values: the Partition type itself, gap-distinctness,
 * conjugation, the residue-threshold conditions, and the textual forms
 * used by the CLI ("5,4,1", "-" for the empty partition).
 *
 * Conventions used throughout the library:
 *   - parts are stored largest first, matching Young-diagram row order;
 *   - parts and weights are 64-bit signed; the verification harness runs
 *     at n <= ~100 where every count fits comfortably;
 *   - the empty partition is a first-class value with weight 0;
 *   - the residue of a part mod d is its nonnegative remainder.
 */

#include <algorithm>
#include <cassert>
#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bressoud {

using Part = long long;

/// Gap violation: some adjacent pair of parts differs by less than d.
class NotDistinctError : public std::domain_error {
 public:
  NotDistinctError(int d, Part upper, Part lower)
      : std::domain_error("not " + std::to_string(d) + "-distinct at parts " +
                          std::to_string(upper) + "," + std::to_string(lower)),
        d_(d),
        upper_(upper),
        lower_(lower) {}

  int gap() const { return d_; }
  Part upper() const { return upper_; }
  Part lower() const { return lower_; }

 private:
  int d_;
  Part upper_;
  Part lower_;
};

/// Inverse-map infeasibility: threshold condition c_s fails for the given s.
class ConditionViolation : public std::domain_error {
 public:
  explicit ConditionViolation(int s)
      : std::domain_error("condition c_" + std::to_string(s) + " violated"), s_(s) {}

  int index() const { return s_; }

 private:
  int s_;
};

/**
 * A partition: a finite non-increasing sequence of positive integers,
 * largest first. Immutable after construction; the weight (sum of parts)
 * is cached. The empty sequence is the unique partition of 0.
 */
class Partition {
 public:
  Partition() = default;

  /// Validating constructor; throws std::invalid_argument("not a partition")
  /// when the sequence increases somewhere or contains a part < 1.
  explicit Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    Part prev = std::numeric_limits<Part>::max();
    for (Part p : parts_) {
      if (p < 1 || p > prev) throw std::invalid_argument("not a partition");
      prev = p;
      weight_ += p;
    }
  }

  /// Wraps a sequence the caller guarantees to be non-increasing and
  /// positive (generator output, sorted multisets, conjugates).
  static Partition unchecked(std::vector<Part> parts) {
    Partition out;
    out.weight_ = std::accumulate(parts.begin(), parts.end(), Part{0});
    out.parts_ = std::move(parts);
    return out;
  }

  const std::vector<Part>& parts() const { return parts_; }
  Part weight() const { return weight_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Part operator[](std::size_t i) const { return parts_[i]; }

  /// Lexicographic on the part sequence (the enumeration order).
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Part> parts_;
  Part weight_ = 0;
};

inline Partition make_partition(std::vector<Part> raw) { return Partition(std::move(raw)); }

/// Minimum required difference between any two parts. d=1 means all parts
/// distinct, d=2 is the "super-distinct" case.
class DistinctnessGap {
 public:
  explicit DistinctnessGap(int d) : d_(d) {
    if (d < 1) throw std::invalid_argument("distinctness gap must be >= 1");
  }

  int value() const { return d_; }

  friend bool operator==(DistinctnessGap, DistinctnessGap) = default;

 private:
  int d_;
};

/// First adjacent pair (upper, lower) with upper - lower < d, scanning from
/// the largest part; nullopt when the partition is d-distinct.
inline std::optional<std::pair<Part, Part>> first_gap_violation(const Partition& lambda,
                                                                DistinctnessGap d) {
  const auto& a = lambda.parts();
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] - a[i + 1] < d.value()) return std::make_pair(a[i], a[i + 1]);
  return std::nullopt;
}

/// True iff every pair of parts differs by at least d. Adjacent gaps
/// suffice because parts are sorted. Vacuously true for 0 or 1 parts.
inline bool is_d_distinct(const Partition& lambda, DistinctnessGap d) {
  return !first_gap_violation(lambda, d).has_value();
}

/// Reflect the Young diagram across its main diagonal: column j of the
/// diagram has one box per part of size > j. Weight is preserved and the
/// number of parts of the result equals the largest part of the input.
inline Partition conjugate(const Partition& lambda) {
  const auto& a = lambda.parts();
  if (a.empty()) return {};
  std::vector<Part> cols;
  cols.reserve(static_cast<std::size_t>(a.front()));
  std::size_t live = a.size();  // parts taller than the current column
  for (Part j = 0; j < a.front(); ++j) {
    while (live > 0 && a[live - 1] <= j) --live;
    cols.push_back(static_cast<Part>(live));
  }
  return Partition::unchecked(std::move(cols));
}

/**
 * A bijection on the residues {0..d-1}. image(j) is where index j is sent;
 * the stacking order of the bijection's residue groups and the thresholds
 * of the conditions c_1..c_{d-1} are both read off this map.
 */
class ResiduePermutation {
 public:
  explicit ResiduePermutation(std::vector<int> image) : image_(std::move(image)) {
    const int d = static_cast<int>(image_.size());
    if (d < 1) throw std::invalid_argument("permutation must cover at least residue 0");
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (int v : image_) {
      if (v < 0 || v >= d || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("not a permutation of 0.." + std::to_string(d - 1));
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static ResiduePermutation identity(int d) {
    if (d < 1) throw std::invalid_argument("modulus must be >= 1");
    std::vector<int> image(static_cast<std::size_t>(d));
    std::iota(image.begin(), image.end(), 0);
    return ResiduePermutation(std::move(image));
  }

  // The two classical d=2 instances: original = (1,0), dual = (0,1).
  static ResiduePermutation bressoud_original() { return ResiduePermutation({1, 0}); }
  static ResiduePermutation bressoud_dual() { return ResiduePermutation({0, 1}); }

  int d() const { return static_cast<int>(image_.size()); }
  int image(int j) const { return image_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& images() const { return image_; }

  /// Residue of the intermediate values feeding output class image(j):
  /// (image(j) - 1) mod d, taken nonnegative.
  int group_residue(int j) const {
    const int m = d();
    return ((image(j) - 1) % m + m) % m;
  }

  friend bool operator==(const ResiduePermutation&, const ResiduePermutation&) = default;

 private:
  std::vector<int> image_;
};

/// All d! permutations of {0..d-1}, image sequences in lexicographic order.
inline std::vector<ResiduePermutation> all_permutations(int d) {
  if (d < 1) throw std::invalid_argument("modulus must be >= 1");
  std::vector<int> image(static_cast<std::size_t>(d));
  std::iota(image.begin(), image.end(), 0);
  std::vector<ResiduePermutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

/**
 * Membership test for the target side of the identity: lambda must be
 * 1-distinct, and for every s in 1..d-1 each part congruent to image(s)
 * mod d must exceed d times the number of parts whose residue lies in
 * {image(0), ..., image(s-1)}. Parts congruent to image(0) carry no
 * threshold, and d=1 reduces to plain distinctness.
 */
inline bool satisfies_conditions(const Partition& lambda, const ResiduePermutation& pi) {
  if (!is_d_distinct(lambda, DistinctnessGap(1))) return false;
  const int d = pi.d();
  if (d == 1) return true;

  std::vector<Part> class_count(static_cast<std::size_t>(d), 0);
  std::vector<Part> class_min(static_cast<std::size_t>(d), 0);
  for (Part p : lambda.parts()) {
    const auto r = static_cast<std::size_t>(p % d);
    ++class_count[r];
    class_min[r] = p;  // descending scan, so the last write is the smallest
  }

  Part prefix = 0;  // parts counted in classes image(0)..image(s-1)
  for (int s = 0; s < d; ++s) {
    const auto r = static_cast<std::size_t>(pi.image(s));
    if (s > 0 && class_count[r] > 0 && class_min[r] <= static_cast<Part>(d) * prefix)
      return false;
    prefix += class_count[r];
  }
  return true;
}

/// Young diagram as text: one row per part, largest on top, one '#' per
/// box. The empty partition renders as the empty string.
inline std::string render_young(const Partition& lambda) {
  std::string out;
  for (Part p : lambda.parts()) {
    out.append(static_cast<std::size_t>(p), '#');
    out.push_back('\n');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Textual notation: comma-separated descending integers, "-" when empty.
// ---------------------------------------------------------------------------

inline std::string to_text(const std::vector<Part>& values) {
  if (values.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

inline std::string to_text(const Partition& lambda) { return to_text(lambda.parts()); }

namespace detail {

inline std::vector<Part> parse_csv_integers(std::string_view text, const char* what) {
  std::vector<Part> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    Part value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || token.empty())
      throw std::invalid_argument(std::string(what) + ": bad integer '" + std::string(token) + "'");
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return values;
}

}  // namespace detail

/// Parse "5,4,1" or "-" (empty). Throws std::invalid_argument on malformed
/// text, on parts < 1, and on out-of-order parts.
inline Partition parse_partition(std::string_view text) {
  if (text == "-") return {};
  if (text.empty()) throw std::invalid_argument("not a partition: empty text");
  return Partition(detail::parse_csv_integers(text, "not a partition"));
}

/// Parse a permutation image list like "2,0,1".
inline ResiduePermutation parse_permutation(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("not a permutation: empty text");
  const std::vector<Part> raw = detail::parse_csv_integers(text, "not a permutation");
  std::vector<int> image;
  image.reserve(raw.size());
  for (Part v : raw) {
    if (v < 0 || v > std::numeric_limits<int>::max())
      throw std::invalid_argument("not a permutation of 0.." + std::to_string(raw.size() - 1));
    image.push_back(static_cast<int>(v));
  }
  return ResiduePermutation(std::move(image));
}

}  // namespace bressoud
