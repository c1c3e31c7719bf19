#pragma once

// Cog wheels with an arrow at every tooth, up to rotation and simultaneous
// reversal (reverse the cyclic order and flip every arrow).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nsmod/orders.hpp"
#include "nsmod/text.hpp"

namespace nsmod {

/// A tooth: label plus arrow (true is '>').
using Tooth = std::pair<Label, bool>;

class DihedralWheel {
 public:
  DihedralWheel(std::vector<Tooth> teeth) {
    std::vector<Label> ls;
    for (const auto& t : teeth) ls.push_back(t.first);
    detail::require_distinct(ls);
    teeth_ = canonical(std::move(teeth));
  }

  const std::vector<Tooth>& teeth() const noexcept { return teeth_; }
  std::size_t size() const noexcept { return teeth_.size(); }

  bool contains(const Label& l) const { return find(l) != teeth_.end(); }

  bool arrow(const Label& l) const {
    auto it = find(l);
    if (it == teeth_.end()) throw Error(ErrorCode::MissingLabel, "label '" + l + "' not on wheel");
    return it->second;
  }

  CyclicWord word() const {
    LinearWord w;
    for (const auto& t : teeth_) w.push_back(t.first);
    return CyclicWord(std::move(w));
  }

  DihedralWheel reflected() const { return DihedralWheel(reverse_flip(teeth_)); }

  /// Teeth listed so that `l` comes first.
  std::vector<Tooth> starting_at(const Label& l) const {
    auto it = find(l);
    if (it == teeth_.end()) throw Error(ErrorCode::MissingLabel, "label '" + l + "' not on wheel");
    std::vector<Tooth> out(it, teeth_.end());
    out.insert(out.end(), teeth_.begin(), it);
    return out;
  }

  friend bool operator==(const DihedralWheel&, const DihedralWheel&) = default;
  friend auto operator<=>(const DihedralWheel& a, const DihedralWheel& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.teeth_ <=> b.teeth_;
  }

 private:
  std::vector<Tooth>::const_iterator find(const Label& l) const {
    return std::find_if(teeth_.begin(), teeth_.end(), [&](const Tooth& t) { return t.first == l; });
  }

  static std::vector<Tooth> reverse_flip(std::vector<Tooth> t) {
    std::reverse(t.begin(), t.end());
    for (auto& x : t) x.second = !x.second;
    return t;
  }

  static std::vector<Tooth> rotate_min(std::vector<Tooth> t) {
    if (t.empty()) return t;
    auto m = std::min_element(t.begin(), t.end(), [](const Tooth& a, const Tooth& b) { return a.first < b.first; });
    std::rotate(t.begin(), m, t.end());
    return t;
  }

  static std::vector<Tooth> canonical(std::vector<Tooth> t) {
    std::vector<Tooth> a = rotate_min(t);
    std::vector<Tooth> b = rotate_min(reverse_flip(std::move(t)));
    return std::min(a, b);
  }

  std::vector<Tooth> teeth_;
};

/// Text form `(a> b< c>)`.
inline DihedralWheel parse_wheel(std::string_view s) {
  LinearWord w = text::parse_linear_word(s);
  std::vector<Tooth> teeth;
  for (auto& l : w) {
    const char last = l.empty() ? '\0' : l.back();
    if ((last != '>' && last != '<') || l.size() < 2) {
      throw Error(ErrorCode::ParseError, "tooth '" + l + "' needs a trailing '>' or '<'");
    }
    teeth.emplace_back(l.substr(0, l.size() - 1), last == '>');
  }
  return DihedralWheel(std::move(teeth));
}

inline std::string format(const DihedralWheel& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.teeth().size(); ++i) {
    if (i) out += ' ';
    out += w.teeth()[i].first;
    out += w.teeth()[i].second ? '>' : '<';
  }
  return out + ")";
}

/// All wheels on the labels; there are 2^(n-1) (n-1)! of them.
inline std::vector<DihedralWheel> enumerate_wheels(std::vector<Label> labels) {
  if (labels.empty()) throw Error(ErrorCode::Unsupported, "wheels need at least one label");
  detail::require_distinct(labels);
  std::sort(labels.begin(), labels.end());
  std::vector<DihedralWheel> out;
  const std::size_t n = labels.size();
  detail::for_each_cyclic_order(labels, [&](const LinearWord& w) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      std::vector<Tooth> t;
      for (std::size_t i = 0; i < n; ++i) t.emplace_back(w[i], ((bits >> i) & 1U) != 0);
      out.emplace_back(std::move(t));
    }
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// 2^(n-1) (n-1)! for n >= 1.
inline std::uint64_t count_wheels(int n) {
  if (n < 1) throw Error(ErrorCode::Unsupported, "wheels need at least one label");
  std::uint64_t c = std::uint64_t{1} << (n - 1);
  for (int k = 2; k < n; ++k) c *= static_cast<std::uint64_t>(k);
  return c;
}

/// Glues tooth u of x to tooth v of y. The arrows at u and v must point in
/// opposite directions; when they agree, y is reflected first.
inline DihedralWheel compose_wheels(const DihedralWheel& x, const Label& u, const DihedralWheel& y, const Label& v) {
  if (!x.contains(u)) throw Error(ErrorCode::MissingLabel, "label '" + u + "' not on first wheel");
  if (!y.contains(v)) throw Error(ErrorCode::MissingLabel, "label '" + v + "' not on second wheel");
  for (const auto& t : x.teeth()) {
    if (y.contains(t.first)) throw Error(ErrorCode::LabelClash, "label '" + t.first + "' on both wheels");
  }
  std::vector<Tooth> a = x.starting_at(u);
  std::vector<Tooth> b = y.starting_at(v);
  // Reflect on the raw sequence: the canonical form of a reflected wheel may
  // be the same representative again (two teeth).
  if (x.arrow(u) == y.arrow(v)) {
    std::reverse(b.begin() + 1, b.end());
    for (auto& t : b) t.second = !t.second;
  }
  std::vector<Tooth> out(a.begin() + 1, a.end());
  out.insert(out.end(), b.begin() + 1, b.end());
  if (out.empty()) throw Error(ErrorCode::Unsupported, "composite has no teeth");
  return DihedralWheel(std::move(out));
}

struct WheelAxiomReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::map<std::string, int> checked;
  std::map<std::string, int> failed;

  bool ok() const {
    for (const auto& [k, c] : failed) {
      if (c) return false;
    }
    return true;
  }
};

/// Spot checks of commutativity, associativity and reflection consistency
/// on random wheels.
inline WheelAxiomReport check_wheel_axioms(int trials, std::uint64_t seed, int max_teeth = 5) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto random_wheel = [&](const std::string& prefix, int min_teeth) {
    const int n = uniform(min_teeth, std::max(min_teeth, max_teeth));
    std::vector<Tooth> t;
    for (int i = 0; i < n; ++i) t.emplace_back(prefix + std::to_string(i), uniform(0, 1) == 1);
    std::shuffle(t.begin(), t.end(), rng);
    return DihedralWheel(std::move(t));
  };
  auto pick = [&](const DihedralWheel& w, int skip = -1) {
    int i;
    do {
      i = uniform(0, static_cast<int>(w.size()) - 1);
    } while (i == skip);
    return i;
  };
  WheelAxiomReport r;
  r.seed = seed;
  r.trials = trials;
  auto record = [&](const std::string& name, bool same) {
    ++r.checked[name];
    r.failed[name] += same ? 0 : 1;
  };
  for (int t = 0; t < trials; ++t) {
    DihedralWheel x = random_wheel("x", 2);
    DihedralWheel y = random_wheel("y", 2);
    DihedralWheel z = random_wheel("z", 2);
    const Label u = x.teeth()[pick(x)].first;
    const int bi = pick(y);
    const Label b = y.teeth()[bi].first;
    const Label c = y.teeth()[pick(y, bi)].first;
    const Label d = z.teeth()[pick(z)].first;
    record("commutativity", compose_wheels(x, u, y, b) == compose_wheels(y, b, x, u));
    record("associativity",
           compose_wheels(x, u, compose_wheels(y, c, z, d), b) == compose_wheels(compose_wheels(x, u, y, b), c, z, d));
    record("reflection", compose_wheels(x.reflected(), u, y.reflected(), b) == compose_wheels(x, u, y, b).reflected());
  }
  return r;
}

/// (m handles, u crosscaps, b boundaries) with g = 2m + b + u - 1 and b >= 1.
struct SignatureTriple {
  int m = 0;
  int u = 0;
  int b = 0;

  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

inline std::vector<SignatureTriple> signature_triples(int g) {
  if (g < 0) throw Error(ErrorCode::Unsupported, "genus must be a natural number");
  std::vector<SignatureTriple> out;
  for (int m = 0; 2 * m <= g; ++m) {
    for (int b = 1; 2 * m + b - 1 <= g; ++b) out.push_back({m, g + 1 - 2 * m - b, b});
  }
  return out;
}

}  // namespace nsmod
