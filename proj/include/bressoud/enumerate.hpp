#pragma once

/* Deterministic enumeration of the partitions of n in descending
 * lexicographic order, e.g. for n=4: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
 *
 * Ranges are restartable generators: begin() starts a fresh pass, nothing
 * is materialized, and distinct iterators are independent. Each iterator
 * instance is single-consumer.
 */

#include <concepts>
#include <cstdint>
#include <iterator>
#include <utility>

#include "partition.hpp"

namespace bressoud {

namespace detail {

/// Iteration state of the descending-lex successor walk.
class PartitionCursor {
 public:
  PartitionCursor() = default;  // exhausted

  explicit PartitionCursor(Part n) : done_(false) {
    if (n < 0) throw std::invalid_argument("partitions are of nonnegative integers");
    if (n > 0) buf_.push_back(n);
    current_ = Partition::unchecked(buf_);
  }

  bool done() const { return done_; }
  const Partition& current() const { return current_; }

  // Successor rule: take the rightmost part v > 1, replace it by v-1, and
  // repartition everything at or right of it greedily into parts <= v-1.
  // Entries right of that position are always all 1s.
  void advance() {
    std::size_t k = buf_.size();
    while (k > 0 && buf_[k - 1] == 1) --k;
    if (k == 0) {
      done_ = true;
      buf_.clear();
      current_ = Partition();
      return;
    }
    const Part ones = static_cast<Part>(buf_.size() - k);
    const Part rem = buf_[k - 1] + ones;
    const Part width = buf_[k - 1] - 1;
    buf_.resize(k - 1);
    for (Part left = rem; left > 0;) {
      const Part piece = left < width ? left : width;
      buf_.push_back(piece);
      left -= piece;
    }
    current_ = Partition::unchecked(buf_);
  }

 private:
  std::vector<Part> buf_;
  Partition current_;
  bool done_ = true;
};

}  // namespace detail

/// The partitions of n as an iterable range; see the header comment for
/// the order. n=0 yields exactly the empty partition.
class PartitionRange {
 public:
  explicit PartitionRange(Part n) : n_(n) {
    if (n < 0) throw std::invalid_argument("partitions are of nonnegative integers");
  }

  class iterator {
   public:
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using iterator_concept = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(Part n) : cursor_(n) {}

    const Partition& operator*() const { return cursor_.current(); }
    const Partition* operator->() const { return &cursor_.current(); }

    iterator& operator++() {
      cursor_.advance();
      return *this;
    }
    void operator++(int) { cursor_.advance(); }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.cursor_.done(); }

   private:
    detail::PartitionCursor cursor_;
  };

  iterator begin() const { return iterator(n_); }
  static std::default_sentinel_t end() { return {}; }

  Part n() const { return n_; }

 private:
  Part n_;
};

inline PartitionRange partitions_of(Part n) { return PartitionRange(n); }

/// Lazy sub-stream of partitions_of(n) passing a predicate, same order.
template <std::predicate<const Partition&> Pred>
class FilteredPartitionRange {
 public:
  FilteredPartitionRange(Part n, Pred pred) : base_(n), pred_(std::move(pred)) {}

  class iterator {
   public:
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using iterator_concept = std::input_iterator_tag;

    iterator() = default;
    iterator(PartitionRange::iterator base, const Pred* pred) : base_(base), pred_(pred) {
      settle();
    }

    const Partition& operator*() const { return *base_; }
    const Partition* operator->() const { return &*base_; }

    iterator& operator++() {
      ++base_;
      settle();
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t s) { return it.base_ == s; }

   private:
    void settle() {
      while (base_ != std::default_sentinel && !(*pred_)(*base_)) ++base_;
    }

    PartitionRange::iterator base_;
    const Pred* pred_ = nullptr;
  };

  iterator begin() const { return iterator(base_.begin(), &pred_); }
  static std::default_sentinel_t end() { return {}; }

 private:
  PartitionRange base_;
  Pred pred_;
};

/// Number of partitions of n satisfying the predicate.
template <std::predicate<const Partition&> Pred>
std::uint64_t count(Part n, Pred&& pred) {
  std::uint64_t total = 0;
  for (const Partition& p : partitions_of(n))
    if (pred(p)) ++total;
  return total;
}

inline auto d_distinct_partitions(Part n, DistinctnessGap d) {
  return FilteredPartitionRange(n, [d](const Partition& p) { return is_d_distinct(p, d); });
}

inline auto target_partitions(Part n, ResiduePermutation pi) {
  return FilteredPartitionRange(
      n, [pi = std::move(pi)](const Partition& p) { return satisfies_conditions(p, pi); });
}

// The closed predicate set the CLI exposes. Anything fancier is composed in
// calling code, not here.
namespace predicates {

inline auto all() {
  return [](const Partition&) { return true; };
}

inline auto one_distinct() {
  return [](const Partition& p) { return is_d_distinct(p, DistinctnessGap(1)); };
}

inline auto d_distinct(DistinctnessGap d) {
  return [d](const Partition& p) { return is_d_distinct(p, d); };
}

inline auto target(ResiduePermutation pi) {
  return [pi = std::move(pi)](const Partition& p) { return satisfies_conditions(p, pi); };
}

/// At most m parts.
inline auto max_parts(Part m) {
  return [m](const Partition& p) { return static_cast<Part>(p.size()) <= m; };
}

/// Every part at most m.
inline auto max_part(Part m) {
  return [m](const Partition& p) { return p.empty() || p.parts().front() <= m; };
}

inline auto all_odd() {
  return [](const Partition& p) {
    for (Part v : p.parts())
      if (v % 2 == 0) return false;
    return true;
  };
}

inline auto even_part_count() {
  return [](const Partition& p) { return p.size() % 2 == 0; };
}

}  // namespace predicates

}  // namespace bressoud
