#ifndef EXSUM_SETS_HPP
#define EXSUM_SETS_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "exsum/rat.hpp"

namespace exsum {

/// Finite set of rationals, stored strictly increasing.
class RealSet {
 public:
  RealSet() = default;
  /// Sorts and removes duplicates.
  explicit RealSet(std::vector<Rat> elems);
  RealSet(std::initializer_list<Rat> elems);

  /// Wraps an already strictly increasing sequence without re-sorting.
  static RealSet from_sorted(std::vector<Rat> elems);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const Rat& operator[](std::size_t i) const { return elems_[i]; }
  const Rat& min() const { return elems_.front(); }
  const Rat& max() const { return elems_.back(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const std::vector<Rat>& elems() const { return elems_; }

  bool contains(const Rat& x) const;
  bool is_subset_of(const RealSet& other) const;

  friend bool operator==(const RealSet&, const RealSet&) = default;

 private:
  std::vector<Rat> elems_;
};

RealSet shifted(const RealSet& s, const Rat& by);
RealSet set_union(const RealSet& a, const RealSet& b);
RealSet set_intersection(const RealSet& a, const RealSet& b);
/// Elements x with lo <= x <= hi.
RealSet clip(const RealSet& s, const Rat& lo, const Rat& hi);
/// Elements x <= hi.
RealSet clip_above(const RealSet& s, const Rat& hi);

/// Finite-support function: points strictly increasing, no zero values.
class SparseFn {
 public:
  using Entry = std::pair<Rat, Rat>;

  SparseFn() = default;
  /// Sorts by point and drops zero values; throws ContractError on a
  /// repeated point.
  explicit SparseFn(std::vector<Entry> entries);
  SparseFn(std::initializer_list<Entry> entries);

  /// Indicator function of a set (value 1 on every element).
  static SparseFn indicator(const RealSet& s);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  RealSet support() const;

  friend bool operator==(const SparseFn&, const SparseFn&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Multiset of rationals as (value, multiplicity) pairs, values strictly
/// increasing and multiplicities positive.
class RatMultiset {
 public:
  struct Item {
    Rat value;
    std::size_t multiplicity;
    friend bool operator==(const Item&, const Item&) = default;
  };

  RatMultiset() = default;
  /// Counts repeated values.
  explicit RatMultiset(const std::vector<Rat>& values);
  /// Merges equal values; drops zero multiplicities.
  explicit RatMultiset(std::vector<Item> items);

  const std::vector<Item>& items() const { return items_; }
  /// n = total multiplicity.
  std::size_t count() const;
  bool empty() const { return items_.empty(); }
  /// Every element listed with repetition, ascending.
  std::vector<Rat> expanded() const;

  friend bool operator==(const RatMultiset&, const RatMultiset&) = default;

 private:
  std::vector<Item> items_;
};

}  // namespace exsum

#endif  // EXSUM_SETS_HPP
