#pragma once

// Cyclically and multicyclically ordered finite sets, the pancake surgeries
// (merging and cutting) and geometricity arithmetic.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nsmod/error.hpp"

namespace nsmod {

using Label = std::string;
using LinearWord = std::vector<Label>;

namespace detail {

inline void require_distinct(const LinearWord& w) {
  std::vector<Label> sorted(w);
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw Error(ErrorCode::InvalidWord, "duplicate label '" + *dup + "'");
  }
}

inline LinearWord rotate_to_front(const LinearWord& w, std::size_t pos) {
  LinearWord out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(pos + i) % w.size()]);
  return out;
}

}  // namespace detail

/// A total cyclic order on a finite set of labels. The stored representative
/// is the lexicographically least rotation, which for distinct labels is the
/// rotation starting at the smallest label.
class CyclicWord {
 public:
  CyclicWord() = default;

  explicit CyclicWord(LinearWord w) : repr_(std::move(w)) {
    detail::require_distinct(repr_);
    if (!repr_.empty()) {
      auto least = std::min_element(repr_.begin(), repr_.end());
      std::rotate(repr_.begin(), least, repr_.end());
    }
  }

  const LinearWord& repr() const noexcept { return repr_; }
  std::size_t size() const noexcept { return repr_.size(); }
  bool empty() const noexcept { return repr_.empty(); }

  std::optional<std::size_t> index_of(const Label& l) const {
    auto it = std::find(repr_.begin(), repr_.end(), l);
    if (it == repr_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - repr_.begin());
  }
  bool contains(const Label& l) const { return index_of(l).has_value(); }

  /// Linear representative starting at `l`.
  LinearWord starting_at(const Label& l) const {
    auto i = index_of(l);
    if (!i) throw Error(ErrorCode::MissingLabel, "label '" + l + "' not in word");
    return detail::rotate_to_front(repr_, *i);
  }

  /// Linear representative ending at `l`.
  LinearWord ending_at(const Label& l) const {
    auto i = index_of(l);
    if (!i) throw Error(ErrorCode::MissingLabel, "label '" + l + "' not in word");
    return detail::rotate_to_front(repr_, (*i + 1) % repr_.size());
  }

  /// The cyclic successor of `l`.
  const Label& successor(const Label& l) const {
    auto i = index_of(l);
    if (!i) throw Error(ErrorCode::MissingLabel, "label '" + l + "' not in word");
    return repr_[(*i + 1) % repr_.size()];
  }

  /// Same cyclic order traversed backwards.
  CyclicWord reversed() const {
    LinearWord r(repr_.rbegin(), repr_.rend());
    return CyclicWord(std::move(r));
  }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) {
    if (a.repr_.size() != b.repr_.size()) return a.repr_.size() <=> b.repr_.size();
    return a.repr_ <=> b.repr_;
  }

 private:
  LinearWord repr_;
};

inline CyclicWord canon_cyclic(const LinearWord& w) { return CyclicWord(w); }

/// True iff w1 = A1 A2 and w2 = A2 A1 for some words A1, A2.
inline bool rotation_equal(const LinearWord& w1, const LinearWord& w2) {
  if (w1.size() != w2.size()) return false;
  if (w1.empty()) return true;
  for (std::size_t k = 0; k < w1.size(); ++k) {
    bool same = true;
    for (std::size_t i = 0; i < w1.size() && same; ++i) same = w1[(k + i) % w1.size()] == w2[i];
    if (same) return true;
  }
  return false;
}

/// Pancake merging: rotate cp so u is last, cq so v is first, drop u and v,
/// concatenate.
inline CyclicWord merge_cyclic(const CyclicWord& cp, const Label& u, const CyclicWord& cq,
                               const Label& v) {
  if (!cp.contains(u)) throw Error(ErrorCode::MissingLabel, "label '" + u + "' not in first word");
  if (!cq.contains(v)) throw Error(ErrorCode::MissingLabel, "label '" + v + "' not in second word");
  for (const auto& l : cp.repr()) {
    if (cq.contains(l)) throw Error(ErrorCode::LabelClash, "label '" + l + "' occurs in both words");
  }
  LinearWord out = cp.ending_at(u);
  out.pop_back();
  LinearWord tail = cq.starting_at(v);
  out.insert(out.end(), tail.begin() + 1, tail.end());
  return CyclicWord(std::move(out));
}

/// The two open intervals of c between u and v; first the one following u.
inline std::pair<CyclicWord, CyclicWord> cut_cyclic(const CyclicWord& c, const Label& u,
                                                    const Label& v) {
  if (u == v) throw Error(ErrorCode::InvalidCut, "cut labels coincide ('" + u + "')");
  if (!c.contains(u) || !c.contains(v)) {
    throw Error(ErrorCode::InvalidCut, "cut labels '" + u + "','" + v + "' not both in word");
  }
  LinearWord w = c.starting_at(u);
  auto vpos = std::find(w.begin(), w.end(), v);
  LinearWord first(w.begin() + 1, vpos);
  LinearWord second(vpos + 1, w.end());
  return {CyclicWord(std::move(first)), CyclicWord(std::move(second))};
}

/// A decomposition of a finite set into b >= 1 possibly empty cyclically
/// ordered components. Components form a multiset and are kept sorted.
class MulticyclicType {
 public:
  MulticyclicType() : components_{CyclicWord{}} {}

  explicit MulticyclicType(std::vector<CyclicWord> components) : components_(std::move(components)) {
    if (components_.empty()) {
      throw Error(ErrorCode::InvalidType, "a multicyclic type needs at least one component");
    }
    std::vector<Label> all;
    for (const auto& c : components_) all.insert(all.end(), c.repr().begin(), c.repr().end());
    std::sort(all.begin(), all.end());
    auto dup = std::adjacent_find(all.begin(), all.end());
    if (dup != all.end()) {
      throw Error(ErrorCode::LabelClash, "label '" + *dup + "' occurs in two components");
    }
    std::sort(components_.begin(), components_.end());
  }

  static MulticyclicType from_words(const std::vector<LinearWord>& words) {
    std::vector<CyclicWord> cs;
    cs.reserve(words.size());
    for (const auto& w : words) cs.emplace_back(w);
    return MulticyclicType(std::move(cs));
  }

  const std::vector<CyclicWord>& components() const noexcept { return components_; }
  int b() const noexcept { return static_cast<int>(components_.size()); }

  std::size_t empties() const {
    return static_cast<std::size_t>(
        std::count_if(components_.begin(), components_.end(), [](const CyclicWord& c) { return c.empty(); }));
  }

  std::vector<Label> labels() const {
    std::vector<Label> all;
    for (const auto& c : components_) all.insert(all.end(), c.repr().begin(), c.repr().end());
    std::sort(all.begin(), all.end());
    return all;
  }

  std::optional<std::size_t> component_of(const Label& l) const {
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (components_[i].contains(l)) return i;
    }
    return std::nullopt;
  }

  /// Sorted component sizes; the isomorphism class of the type.
  std::vector<std::size_t> shape() const {
    std::vector<std::size_t> s;
    for (const auto& c : components_) s.push_back(c.size());
    std::sort(s.begin(), s.end());
    return s;
  }

  friend bool operator==(const MulticyclicType&, const MulticyclicType&) = default;
  friend auto operator<=>(const MulticyclicType& a, const MulticyclicType& b) {
    if (a.components_.size() != b.components_.size()) {
      return a.components_.size() <=> b.components_.size();
    }
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<CyclicWord> components_;
};

/// Merge at u in sp and v in sq; the component count becomes b' + b'' - 1.
inline MulticyclicType mc_merge(const MulticyclicType& sp, const Label& u, const MulticyclicType& sq,
                                const Label& v) {
  auto iu = sp.component_of(u);
  auto iv = sq.component_of(v);
  if (!iu) throw Error(ErrorCode::MissingLabel, "label '" + u + "' not in first type");
  if (!iv) throw Error(ErrorCode::MissingLabel, "label '" + v + "' not in second type");
  std::vector<CyclicWord> out;
  for (std::size_t i = 0; i < sp.components().size(); ++i) {
    if (i != *iu) out.push_back(sp.components()[i]);
  }
  for (std::size_t i = 0; i < sq.components().size(); ++i) {
    if (i != *iv) out.push_back(sq.components()[i]);
  }
  out.push_back(merge_cyclic(sp.components()[*iu], u, sq.components()[*iv], v));
  return MulticyclicType(std::move(out));
}

/// The cut S \ {u,v}: fuses two components (b - 1) or splits one (b + 1).
inline MulticyclicType mc_cut(const MulticyclicType& s, const Label& u, const Label& v) {
  if (u == v) throw Error(ErrorCode::InvalidCut, "cut labels coincide ('" + u + "')");
  auto iu = s.component_of(u);
  auto iv = s.component_of(v);
  if (!iu) throw Error(ErrorCode::MissingLabel, "label '" + u + "' not in type");
  if (!iv) throw Error(ErrorCode::MissingLabel, "label '" + v + "' not in type");
  std::vector<CyclicWord> out;
  for (std::size_t i = 0; i < s.components().size(); ++i) {
    if (i != *iu && i != *iv) out.push_back(s.components()[i]);
  }
  if (*iu == *iv) {
    auto [first, second] = cut_cyclic(s.components()[*iu], u, v);
    out.push_back(std::move(first));
    out.push_back(std::move(second));
  } else {
    out.push_back(merge_cyclic(s.components()[*iu], u, s.components()[*iv], v));
  }
  return MulticyclicType(std::move(out));
}

/// Index ((S; g)) of operad components.
struct TypedArity {
  MulticyclicType stype;
  int g = 0;

  friend bool operator==(const TypedArity&, const TypedArity&) = default;
  friend auto operator<=>(const TypedArity&, const TypedArity&) = default;
};

inline bool is_geometric(int g, int b) { return g >= 0 && b >= 1 && g - b + 1 >= 0 && (g - b + 1) % 2 == 0; }

inline bool is_geometric(const TypedArity& t) { return is_geometric(t.g, t.stype.b()); }

/// G = (g - b + 1) / 2.
inline int geometric_genus(const TypedArity& t) {
  if (!is_geometric(t)) {
    throw Error(ErrorCode::NotGeometric, "g - b + 1 = " + std::to_string(t.g - t.stype.b() + 1) +
                                             " is not an even natural number");
  }
  return (t.g - t.stype.b() + 1) / 2;
}

namespace detail {

// Calls `emit` with every cyclic order of `items` (first element fixed).
inline void for_each_cyclic_order(const std::vector<Label>& items,
                                  const std::function<void(const LinearWord&)>& emit) {
  if (items.empty()) {
    emit({});
    return;
  }
  LinearWord rest(items.begin() + 1, items.end());
  std::sort(rest.begin(), rest.end());
  do {
    LinearWord w{items.front()};
    w.insert(w.end(), rest.begin(), rest.end());
    emit(w);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

// Set partitions of `labels` into at most `max_blocks` nonempty blocks
// (restricted growth strings).
inline void for_each_set_partition(const std::vector<Label>& labels, int max_blocks,
                                   const std::function<void(const std::vector<std::vector<Label>>&)>& emit) {
  std::vector<std::vector<Label>> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == labels.size()) {
      emit(blocks);
      return;
    }
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      blocks[k].push_back(labels[i]);
      rec(i + 1);
      blocks[k].pop_back();
    }
    if (static_cast<int>(blocks.size()) < max_blocks) {
      blocks.push_back({labels[i]});
      rec(i + 1);
      blocks.pop_back();
    }
  };
  rec(0);
}

}  // namespace detail

/// All multicyclic types on exactly `labels` with (type, g) geometric, in
/// canonical order. Empty components are indistinguishable.
inline std::vector<MulticyclicType> enumerate_types(std::vector<Label> labels, int g) {
  std::sort(labels.begin(), labels.end());
  detail::require_distinct(labels);
  std::set<MulticyclicType> found;
  for (int b = 1; b <= g + 1; ++b) {
    if (!is_geometric(g, b)) continue;
    detail::for_each_set_partition(labels, b, [&](const std::vector<std::vector<Label>>& blocks) {
      const std::size_t empties = static_cast<std::size_t>(b) - blocks.size();
      std::vector<CyclicWord> partial;
      std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == blocks.size()) {
          std::vector<CyclicWord> comps = partial;
          comps.insert(comps.end(), empties, CyclicWord{});
          found.insert(MulticyclicType(std::move(comps)));
          return;
        }
        detail::for_each_cyclic_order(blocks[k], [&](const LinearWord& w) {
          partial.emplace_back(w);
          rec(k + 1);
          partial.pop_back();
        });
      };
      rec(0);
    });
  }
  return {found.begin(), found.end()};
}

}  // namespace nsmod
