#include "exsum/sets.hpp"

#include <algorithm>
#include <iterator>

#include "exsum/errors.hpp"

namespace exsum {

RealSet::RealSet(std::vector<Rat> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

RealSet::RealSet(std::initializer_list<Rat> elems) : RealSet(std::vector<Rat>(elems)) {}

RealSet RealSet::from_sorted(std::vector<Rat> elems) {
  RealSet s;
  s.elems_ = std::move(elems);
  return s;
}

bool RealSet::contains(const Rat& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool RealSet::is_subset_of(const RealSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

RealSet shifted(const RealSet& s, const Rat& by) {
  std::vector<Rat> out;
  out.reserve(s.size());
  for (const Rat& x : s) out.push_back(x + by);
  return RealSet::from_sorted(std::move(out));
}

RealSet set_union(const RealSet& a, const RealSet& b) {
  std::vector<Rat> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return RealSet::from_sorted(std::move(out));
}

RealSet set_intersection(const RealSet& a, const RealSet& b) {
  std::vector<Rat> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return RealSet::from_sorted(std::move(out));
}

RealSet clip(const RealSet& s, const Rat& lo, const Rat& hi) {
  auto first = std::lower_bound(s.begin(), s.end(), lo);
  auto last = std::upper_bound(s.begin(), s.end(), hi);
  if (first >= last) return {};
  return RealSet::from_sorted(std::vector<Rat>(first, last));
}

RealSet clip_above(const RealSet& s, const Rat& hi) {
  auto last = std::upper_bound(s.begin(), s.end(), hi);
  return RealSet::from_sorted(std::vector<Rat>(s.begin(), last));
}

SparseFn::SparseFn(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].first == entries[i - 1].first) {
      throw ContractError("sparse function has repeated point " + to_string(entries[i].first));
    }
  }
  for (auto& e : entries) {
    if (e.second != 0) entries_.push_back(std::move(e));
  }
}

SparseFn::SparseFn(std::initializer_list<Entry> entries)
    : SparseFn(std::vector<Entry>(entries)) {}

SparseFn SparseFn::indicator(const RealSet& s) {
  std::vector<Entry> entries;
  entries.reserve(s.size());
  for (const Rat& x : s) entries.emplace_back(x, Rat(1));
  SparseFn f;
  f.entries_ = std::move(entries);
  return f;
}

RealSet SparseFn::support() const {
  std::vector<Rat> pts;
  pts.reserve(entries_.size());
  for (const auto& e : entries_) pts.push_back(e.first);
  return RealSet::from_sorted(std::move(pts));
}

RatMultiset::RatMultiset(const std::vector<Rat>& values) {
  std::vector<Rat> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  for (const Rat& v : sorted) {
    if (!items_.empty() && items_.back().value == v) {
      ++items_.back().multiplicity;
    } else {
      items_.push_back({v, 1});
    }
  }
}

RatMultiset::RatMultiset(std::vector<Item> items) {
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.value < b.value; });
  for (auto& it : items) {
    if (it.multiplicity == 0) continue;
    if (!items_.empty() && items_.back().value == it.value) {
      items_.back().multiplicity += it.multiplicity;
    } else {
      items_.push_back(std::move(it));
    }
  }
}

std::size_t RatMultiset::count() const {
  std::size_t n = 0;
  for (const auto& it : items_) n += it.multiplicity;
  return n;
}

std::vector<Rat> RatMultiset::expanded() const {
  std::vector<Rat> out;
  out.reserve(count());
  for (const auto& it : items_) {
    for (std::size_t k = 0; k < it.multiplicity; ++k) out.push_back(it.value);
  }
  return out;
}

}  // namespace exsum
