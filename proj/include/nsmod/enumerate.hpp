#pragma once

// Bounded enumeration of connected graphs with labelled legs.
//
// Every connected graph with V >= 2 vertices has a non-loop edge, and
// contracting it leaves a graph with V - 1 vertices. Running that backwards,
// all graphs with at most vmax vertices are obtained from one-vertex graphs
// by repeatedly splitting a vertex in two along a new edge (the exact inverse
// of contract_edge), deduplicating by canonical class at every level.
// Intermediate vertices are merges of allowed vertices, so they are pruned to
// the merge-closure of the allowed shapes.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nsmod/canonical.hpp"

namespace nsmod {

/// Allowed vertex: genus, number of blocks and, optionally, the exact sorted
/// block sizes (for symmetric graphs: the valence).
struct VertexPattern {
  int genus = 0;
  int boundaries = 1;
  std::optional<std::vector<std::size_t>> sizes;

  friend bool operator==(const VertexPattern&, const VertexPattern&) = default;
};

struct VertexConstraint {
  std::vector<VertexPattern> patterns{VertexPattern{}};

  /// g_v = 0, b_v = 1, any valence: the shape of terminal cyclic generators.
  static VertexConstraint ribbon() { return {}; }

  bool accepts(const Vertex& v, bool symmetric) const {
    for (const auto& p : patterns) {
      if (p.genus != v.genus) continue;
      if (!symmetric && p.boundaries != v.b()) continue;
      if (p.sizes) {
        std::vector<std::size_t> s;
        if (symmetric) {
          s.push_back(static_cast<std::size_t>(v.valence()));
        } else {
          for (const auto& bl : v.blocks) s.push_back(bl.size());
          std::sort(s.begin(), s.end());
        }
        if (s != *p.sizes) continue;
      }
      return true;
    }
    return false;
  }
};

struct EnumeratedGraph {
  GraphClass cls;
  NsGraph graph;  // canonical representative
};

namespace detail {

using Shape = std::pair<int, int>;  // (genus, blocks)

inline std::set<Shape> merge_closure(const VertexConstraint& c, int max_genus, int vmax, bool symmetric) {
  std::set<Shape> base;
  for (const auto& p : c.patterns) {
    if (p.genus <= max_genus) base.insert({p.genus, symmetric ? 1 : p.boundaries});
  }
  std::set<Shape> all = base;
  std::set<Shape> level = base;
  for (int k = 2; k <= vmax; ++k) {
    std::set<Shape> next;
    for (const auto& [ga, ba] : level) {
      for (const auto& [gb, bb] : base) {
        if (ga + gb <= max_genus) next.insert({ga + gb, symmetric ? 1 : ba + bb - 1});
      }
    }
    all.insert(next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

class GraphEnumerator {
 public:
  GraphEnumerator(std::vector<Label> legs, int g, int vmax, VertexConstraint c, bool symmetric)
      : legs_(std::move(legs)), g_(g), vmax_(vmax), constraint_(std::move(c)), symmetric_(symmetric) {
    std::sort(legs_.begin(), legs_.end());
    closure_ = merge_closure(constraint_, g_, vmax_, symmetric_);
  }

  std::vector<EnumeratedGraph> run() {
    std::map<GraphClass, NsGraph> level;
    seed(level);
    std::map<GraphClass, NsGraph> accepted;
    for (int v = 1; v <= vmax_ && !level.empty(); ++v) {
      for (const auto& [cls, graph] : level) {
        if (all_accepted(graph)) accepted.emplace(cls, graph);
      }
      if (v == vmax_) break;
      std::map<GraphClass, NsGraph> next;
      for (const auto& entry : level) split_all(entry.second, next);
      level = std::move(next);
    }
    std::vector<EnumeratedGraph> out;
    out.reserve(accepted.size());
    for (auto& [cls, graph] : accepted) out.push_back({cls, std::move(graph)});
    return out;
  }

 private:
  bool shape_ok(int genus, int blocks) const { return closure_.count({genus, symmetric_ ? 1 : blocks}) > 0; }

  bool all_accepted(const NsGraph& graph) const {
    for (const auto& v : graph.vertices) {
      if (!constraint_.accepts(v, symmetric_)) return false;
    }
    return true;
  }

  static void insert(std::map<GraphClass, NsGraph>& into, const NsGraph& graph) {
    Canonized c = canonize(graph);
    into.emplace(std::move(c.cls), std::move(c.graph));
  }

  // One-vertex graphs: legs plus `loops` loops at a vertex of allowed shape.
  void seed(std::map<GraphClass, NsGraph>& level) const {
    for (const auto& [gv, b] : closure_) {
      const int loops = g_ - gv;
      if (loops < 0) continue;
      NsGraph base;
      base.symmetric = symmetric_;
      for (const auto& l : legs_) {
        base.flags.push_back(l);
        base.leg_labels.push_back(l);
        base.sigma.push_back(base.flag_count() - 1);
      }
      for (int k = 0; k < 2 * loops; ++k) {
        base.flags.push_back("~s" + std::to_string(k));
        base.leg_labels.emplace_back();
        const int f = base.flag_count() - 1;
        base.sigma.push_back(k % 2 == 0 ? f + 1 : f - 1);
      }
      if (symmetric_) {
        Vertex v;
        v.genus = gv;
        v.blocks.emplace_back();
        for (int f = 0; f < base.flag_count(); ++f) v.blocks[0].push_back(f);
        NsGraph g = base;
        g.vertices.push_back(std::move(v));
        insert(level, g);
        continue;
      }
      std::vector<Label> names;
      for (int f = 0; f < base.flag_count(); ++f) names.push_back(std::to_string(f));
      std::sort(names.begin(), names.end());
      for_each_set_partition(names, b, [&](const std::vector<std::vector<Label>>& blocks) {
        const int empties = b - static_cast<int>(blocks.size());
        std::vector<std::vector<int>> chosen;
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
          if (k == blocks.size()) {
            NsGraph g = base;
            Vertex v;
            v.genus = gv;
            v.blocks = chosen;
            for (int e = 0; e < empties; ++e) v.blocks.emplace_back();
            g.vertices.push_back(std::move(v));
            insert(level, g);
            return;
          }
          for_each_cyclic_order(blocks[k], [&](const LinearWord& w) {
            std::vector<int> bl;
            for (const auto& s : w) bl.push_back(std::stoi(s));
            chosen.push_back(std::move(bl));
            rec(k + 1);
            chosen.pop_back();
          });
        };
        rec(0);
      });
    }
  }

  // Graph with the vertex `w` replaced by two vertices joined by a new edge.
  static NsGraph with_split(const NsGraph& g, int w, Vertex left, Vertex right) {
    NsGraph out = g;
    out.vertices[w] = std::move(left);
    out.vertices.push_back(std::move(right));
    return out;
  }

  void split_all(const NsGraph& g, std::map<GraphClass, NsGraph>& next) const {
    for (int w = 0; w < g.vertex_count(); ++w) {
      if (symmetric_) {
        split_symmetric(g, w, next);
      } else {
        split_ribbon(g, w, next);
      }
    }
  }

  NsGraph add_edge_flags(const NsGraph& g, int& p, int& q) const {
    NsGraph out = g;
    p = out.flag_count();
    q = p + 1;
    out.flags.push_back("~new0");
    out.flags.push_back("~new1");
    out.leg_labels.emplace_back();
    out.leg_labels.emplace_back();
    out.sigma.push_back(q);
    out.sigma.push_back(p);
    return out;
  }

  void split_symmetric(const NsGraph& g, int w, std::map<GraphClass, NsGraph>& next) const {
    int p = 0;
    int q = 0;
    const NsGraph base = add_edge_flags(g, p, q);
    const Vertex& x = g.vertices[w];
    const auto& fl = x.blocks[0];
    const std::size_t k = fl.size();
    for (int g1 = 0; g1 <= x.genus; ++g1) {
      const int g2 = x.genus - g1;
      if (!shape_ok(g1, 1) || !shape_ok(g2, 1)) continue;
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Vertex left;
        Vertex right;
        left.genus = g1;
        right.genus = g2;
        left.blocks.emplace_back();
        right.blocks.emplace_back();
        for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1 ? left : right).blocks[0].push_back(fl[i]);
        left.blocks[0].push_back(p);
        right.blocks[0].push_back(q);
        insert(next, with_split(base, w, std::move(left), std::move(right)));
      }
    }
  }

  void split_ribbon(const NsGraph& g, int w, std::map<GraphClass, NsGraph>& next) const {
    int p = 0;
    int q = 0;
    const NsGraph base = add_edge_flags(g, p, q);
    const Vertex& x = g.vertices[w];
    bool empty_done = false;
    for (int m = 0; m < x.b(); ++m) {
      const auto& merged = x.blocks[m];
      if (merged.empty()) {
        if (empty_done) continue;
        empty_done = true;
      }
      std::vector<std::vector<int>> others_full;
      int others_empty = 0;
      for (int bi = 0; bi < x.b(); ++bi) {
        if (bi == m) continue;
        if (x.blocks[bi].empty()) {
          ++others_empty;
        } else {
          others_full.push_back(x.blocks[bi]);
        }
      }
      // Arc decompositions [A p] / [q B] of the merged block.
      std::vector<std::pair<std::vector<int>, std::vector<int>>> arcs;
      const int k = static_cast<int>(merged.size());
      if (k == 0) {
        arcs.push_back({{p}, {q}});
      } else {
        for (int len = 0; len <= k; ++len) {
          for (int s = 0; s < k; ++s) {
            std::vector<int> a;
            std::vector<int> b{q};
            for (int i = 0; i < len; ++i) a.push_back(merged[(s + i) % k]);
            a.push_back(p);
            for (int i = len; i < k; ++i) b.push_back(merged[(s + i) % k]);
            arcs.emplace_back(std::move(a), std::move(b));
          }
        }
      }
      const std::size_t r = others_full.size();
      for (int g1 = 0; g1 <= x.genus; ++g1) {
        const int g2 = x.genus - g1;
        for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
          int full_left = 0;
          for (std::size_t i = 0; i < r; ++i) full_left += (mask >> i) & 1 ? 1 : 0;
          for (int e1 = 0; e1 <= others_empty; ++e1) {
            const int b1 = 1 + full_left + e1;
            const int b2 = 1 + static_cast<int>(r) - full_left + (others_empty - e1);
            if (!shape_ok(g1, b1) || !shape_ok(g2, b2)) continue;
            for (const auto& [a, b] : arcs) {
              Vertex left;
              Vertex right;
              left.genus = g1;
              right.genus = g2;
              left.blocks.push_back(a);
              right.blocks.push_back(b);
              for (std::size_t i = 0; i < r; ++i) ((mask >> i) & 1 ? left : right).blocks.push_back(others_full[i]);
              for (int e = 0; e < e1; ++e) left.blocks.emplace_back();
              for (int e = e1; e < others_empty; ++e) right.blocks.emplace_back();
              insert(next, with_split(base, w, std::move(left), std::move(right)));
            }
          }
        }
      }
    }
  }

  std::vector<Label> legs_;
  int g_;
  int vmax_;
  VertexConstraint constraint_;
  bool symmetric_;
  std::set<Shape> closure_;
};

}  // namespace detail

/// All isomorphism classes of connected graphs with the given labelled legs,
/// total genus g, at most vmax vertices and every vertex accepted by the
/// constraint, sorted by canonical class.
inline std::vector<EnumeratedGraph> enumerate_graphs(std::vector<Label> legs, int g, int vmax,
                                                     const VertexConstraint& constraint = VertexConstraint::ribbon(),
                                                     bool symmetric = false) {
  if (vmax < 1) throw Error(ErrorCode::Unsupported, "vmax must be at least 1");
  if (g < 0) throw Error(ErrorCode::Unsupported, "genus must be a natural number");
  detail::require_distinct(legs);
  return detail::GraphEnumerator(std::move(legs), g, vmax, constraint, symmetric).run();
}

}  // namespace nsmod
