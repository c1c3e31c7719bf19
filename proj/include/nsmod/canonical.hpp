#pragma once

// Canonical forms of graphs up to isomorphisms that fix leg labels and
// permute internal flags and vertices.
//
// Cyclic-order graphs are canonized by a rooted traversal: once one flag of a
// block is numbered, the cyclic order numbers the whole block, and sigma
// carries the numbering to neighbouring blocks. Only blocks that are not
// reachable this way (and hold no legs) need a branching choice of root; the
// encoding is the minimum over all branches. Symmetric graphs reduce to a
// vertex-level multigraph and are canonized by permuting vertices inside
// invariant classes.

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nsmod/graph.hpp"

namespace nsmod {

/// Canonical byte encoding of an isomorphism class.
struct GraphClass {
  std::string encoding;

  friend bool operator==(const GraphClass&, const GraphClass&) = default;
  friend auto operator<=>(const GraphClass&, const GraphClass&) = default;
};

/// Canonical class together with the canonically relabelled representative
/// (internal flags named `~0`, `~1`, ... in canonical order).
struct Canonized {
  GraphClass cls;
  NsGraph graph;
};

namespace detail {

inline void put_str(std::string& out, const std::string& s) {
  out += std::to_string(s.size());
  out += ':';
  out += s;
}

inline std::string internal_name(int k) { return "~" + std::to_string(k); }

class RibbonCanonizer {
 public:
  explicit RibbonCanonizer(const NsGraph& g) : g_(g), idx_(g) {}

  Canonized run() {
    State s = fresh();
    if (g_.flags.empty()) {
      s.vertex_num[0] = 0;
      s.vertex_order.push_back(0);
      return finish(s);
    }
    std::optional<int> min_leg;
    for (int f : g_.legs()) {
      if (!min_leg || g_.label(f) < g_.label(*min_leg)) min_leg = f;
    }
    if (min_leg) {
      visit(s, *min_leg);
      return complete(std::move(s));
    }
    std::optional<Canonized> best;
    for (int f = 0; f < g_.flag_count(); ++f) {
      State t = s;
      visit(t, f);
      keep_min(best, complete(std::move(t)));
    }
    return std::move(*best);
  }

 private:
  struct State {
    std::vector<int> flag_num;
    std::vector<int> vertex_num;
    std::vector<int> vertex_order;
    std::vector<std::vector<char>> visited;                // per vertex, per block
    std::vector<std::vector<std::pair<int, int>>> blocks;  // per vertex: (block, start) in visit order
    std::vector<int> queue;
    std::size_t head = 0;
    int next_flag = 0;
  };

  State fresh() const {
    State s;
    s.flag_num.assign(g_.flags.size(), -1);
    s.vertex_num.assign(g_.vertices.size(), -1);
    s.visited.resize(g_.vertices.size());
    s.blocks.resize(g_.vertices.size());
    for (int v = 0; v < g_.vertex_count(); ++v) s.visited[v].assign(g_.vertices[v].blocks.size(), 0);
    return s;
  }

  static void keep_min(std::optional<Canonized>& best, Canonized c) {
    if (!best || c.cls < best->cls) best = std::move(c);
  }

  // Numbers the block of `start` beginning at `start` and propagates along
  // sigma until nothing new is reachable.
  void visit(State& s, int start) {
    visit_block(s, start);
    while (s.head < s.queue.size()) {
      const int h = s.queue[s.head++];
      const int t = g_.sigma[h];
      if (t != h && !s.visited[idx_.vertex[t]][idx_.block[t]]) visit_block(s, t);
    }
  }

  void visit_block(State& s, int start) {
    const int v = idx_.vertex[start];
    const int bi = idx_.block[start];
    if (s.vertex_num[v] < 0) {
      s.vertex_num[v] = static_cast<int>(s.vertex_order.size());
      s.vertex_order.push_back(v);
    }
    s.visited[v][bi] = 1;
    s.blocks[v].emplace_back(bi, start);
    const auto& bl = g_.vertices[v].blocks[bi];
    const int k = static_cast<int>(bl.size());
    for (int i = 0; i < k; ++i) {
      const int f = bl[(idx_.pos[start] + i) % k];
      s.flag_num[f] = s.next_flag++;
      s.queue.push_back(f);
    }
  }

  Canonized complete(State s) {
    // Unvisited nonempty blocks at already numbered vertices.
    std::optional<int> leg_seed;
    int branch_vertex = -1;
    for (int rank = 0; rank < static_cast<int>(s.vertex_order.size()); ++rank) {
      const int v = s.vertex_order[rank];
      const auto& blocks = g_.vertices[v].blocks;
      for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi) {
        if (s.visited[v][bi] || blocks[bi].empty()) continue;
        for (int f : blocks[bi]) {
          if (g_.is_leg(f) && (!leg_seed || g_.label(f) < g_.label(*leg_seed))) leg_seed = f;
        }
        if (branch_vertex < 0) branch_vertex = v;
      }
    }
    if (leg_seed) {
      visit(s, *leg_seed);
      return complete(std::move(s));
    }
    if (branch_vertex < 0) return finish(s);
    std::optional<Canonized> best;
    const auto& blocks = g_.vertices[branch_vertex].blocks;
    for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi) {
      if (s.visited[branch_vertex][bi] || blocks[bi].empty()) continue;
      for (int f : blocks[bi]) {
        State t = s;
        visit(t, f);
        keep_min(best, complete(std::move(t)));
      }
    }
    return std::move(*best);
  }

  Canonized finish(const State& s) const {
    std::string enc = "R";
    NsGraph rep;
    rep.symmetric = false;
    const int nflags = g_.flag_count();
    std::vector<int> by_num(nflags, -1);
    for (int f = 0; f < nflags; ++f) by_num[s.flag_num[f]] = f;
    for (int k = 0; k < nflags; ++k) {
      const int f = by_num[k];
      if (g_.is_leg(f)) {
        rep.flags.push_back(g_.label(f));
        rep.leg_labels.push_back(g_.label(f));
      } else {
        rep.flags.push_back(internal_name(k));
        rep.leg_labels.emplace_back();
      }
      rep.sigma.push_back(s.flag_num[g_.sigma[f]]);
    }
    enc += std::to_string(g_.vertex_count());
    for (int v : s.vertex_order) {
      const Vertex& x = g_.vertices[v];
      Vertex out;
      out.genus = x.genus;
      out.tag = x.tag;
      int empties = 0;
      for (const auto& bl : x.blocks) empties += bl.empty() ? 1 : 0;
      enc += "|V";
      enc += std::to_string(x.genus);
      enc += ',';
      put_str(enc, x.tag);
      enc += ',';
      enc += std::to_string(empties);
      for (const auto& [bi, start] : s.blocks[v]) {
        const auto& bl = x.blocks[bi];
        const int k = static_cast<int>(bl.size());
        std::vector<int> rb;
        enc += '[';
        for (int i = 0; i < k; ++i) {
          const int f = bl[(idx_.pos[start] + i) % k];
          const int num = s.flag_num[f];
          rb.push_back(num);
          if (g_.is_leg(f)) {
            enc += 'L';
            put_str(enc, g_.label(f));
          } else {
            enc += 'I';
            enc += std::to_string(num);
            enc += '>';
            enc += std::to_string(s.flag_num[g_.sigma[f]]);
          }
          enc += ' ';
        }
        enc += ']';
        out.blocks.push_back(std::move(rb));
      }
      for (int e = 0; e < empties; ++e) out.blocks.emplace_back();
      rep.vertices.push_back(std::move(out));
    }
    return {GraphClass{std::move(enc)}, std::move(rep)};
  }

  const NsGraph& g_;
  FlagIndex idx_;
};

class SymmetricCanonizer {
 public:
  explicit SymmetricCanonizer(const NsGraph& g) : g_(g), idx_(g) {
    const int nv = g.vertex_count();
    mult_.assign(nv, std::vector<int>(nv, 0));
    legs_.resize(nv);
    for (int f = 0; f < g.flag_count(); ++f) {
      const int v = idx_.vertex[f];
      if (g.is_leg(f)) {
        legs_[v].push_back(g.label(f));
      } else if (f < g.sigma[f]) {
        const int w = idx_.vertex[g.sigma[f]];
        ++mult_[v][w];
        if (v != w) ++mult_[w][v];
      }
    }
    for (auto& l : legs_) std::sort(l.begin(), l.end());
  }

  Canonized run() const {
    const int nv = g_.vertex_count();
    std::vector<std::string> inv(nv);
    for (int v = 0; v < nv; ++v) inv[v] = invariant(v);
    std::vector<int> order(nv);
    for (int v = 0; v < nv; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
    // Groups of equal invariants are permuted independently.
    std::vector<std::pair<int, int>> groups;
    for (int i = 0; i < nv;) {
      int j = i;
      while (j < nv && inv[order[j]] == inv[order[i]]) ++j;
      groups.emplace_back(i, j);
      i = j;
    }
    std::optional<std::string> best;
    std::vector<int> best_order;
    std::function<void(std::size_t)> rec = [&](std::size_t gi) {
      if (gi == groups.size()) {
        std::string enc = encode(order, inv);
        if (!best || enc < *best) {
          best = std::move(enc);
          best_order = order;
        }
        return;
      }
      auto [lo, hi] = groups[gi];
      std::sort(order.begin() + lo, order.begin() + hi);
      do {
        rec(gi + 1);
      } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(0);
    return {GraphClass{std::move(*best)}, representative(best_order)};
  }

 private:
  std::string invariant(int v) const {
    std::string s;
    const Vertex& x = g_.vertices[v];
    s += std::to_string(x.genus);
    s += ',';
    put_str(s, x.tag);
    s += ',';
    s += std::to_string(x.valence());
    s += ',';
    s += std::to_string(mult_[v][v]);
    for (const auto& l : legs_[v]) {
      s += 'L';
      put_str(s, l);
    }
    return s;
  }

  std::string encode(const std::vector<int>& order, const std::vector<std::string>& inv) const {
    std::string enc = "S" + std::to_string(order.size());
    for (int v : order) {
      enc += "|";
      enc += inv[v];
    }
    enc += "|E";
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        enc += std::to_string(mult_[order[i]][order[j]]);
        enc += ',';
      }
    }
    return enc;
  }

  NsGraph representative(const std::vector<int>& order) const {
    NsGraph rep;
    rep.symmetric = true;
    const int nv = static_cast<int>(order.size());
    rep.vertices.resize(nv);
    for (int i = 0; i < nv; ++i) {
      rep.vertices[i].genus = g_.vertices[order[i]].genus;
      rep.vertices[i].tag = g_.vertices[order[i]].tag;
      rep.vertices[i].blocks.emplace_back();
    }
    auto add_flag = [&](int vertex, const std::string* leg) {
      const int f = rep.flag_count();
      rep.flags.push_back(leg ? *leg : internal_name(f));
      rep.leg_labels.push_back(leg ? *leg : std::string());
      rep.sigma.push_back(f);
      rep.vertices[vertex].blocks[0].push_back(f);
      return f;
    };
    auto add_edge = [&](int a, int b) {
      const int fa = add_flag(a, nullptr);
      const int fb = add_flag(b, nullptr);
      rep.sigma[fa] = fb;
      rep.sigma[fb] = fa;
    };
    for (int i = 0; i < nv; ++i) {
      for (const auto& l : legs_[order[i]]) add_flag(i, &l);
      for (int k = 0; k < mult_[order[i]][order[i]]; ++k) add_edge(i, i);
      for (int j = i + 1; j < nv; ++j) {
        for (int k = 0; k < mult_[order[i]][order[j]]; ++k) add_edge(i, j);
      }
    }
    return rep;
  }

  const NsGraph& g_;
  FlagIndex idx_;
  std::vector<std::vector<int>> mult_;
  std::vector<std::vector<Label>> legs_;
};

}  // namespace detail

inline Canonized canonize(const NsGraph& g) {
  require_valid(g);
  if (g.symmetric) return detail::SymmetricCanonizer(g).run();
  return detail::RibbonCanonizer(g).run();
}

inline GraphClass canonical(const NsGraph& g) { return canonize(g).cls; }

inline bool are_isomorphic(const NsGraph& a, const NsGraph& b) { return canonical(a) == canonical(b); }

}  // namespace nsmod
