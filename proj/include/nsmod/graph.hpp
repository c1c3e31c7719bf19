#pragma once

// Flag graphs (involution + partition) carrying a multicyclic order and a
// genus at each vertex, with face tracing and the local graph surgeries.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nsmod/orders.hpp"

namespace nsmod {

/// Local structure at a vertex. Each block is a cyclic sequence of flag
/// indices; empty blocks are allowed. In symmetric graphs a vertex has a
/// single block whose order carries no meaning.
struct Vertex {
  int genus = 0;
  std::vector<std::vector<int>> blocks;
  std::string tag;  // generator id when the graph is decorated

  int b() const { return static_cast<int>(blocks.size()); }
  int valence() const {
    int n = 0;
    for (const auto& bl : blocks) n += static_cast<int>(bl.size());
    return n;
  }

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A connected flag graph. Legs are the fixed points of `sigma` and carry an
/// external label; internal flags are anonymous up to isomorphism.
struct NsGraph {
  std::vector<Label> flags;       // flag names, unique
  std::vector<int> sigma;         // involution on flag indices
  std::vector<Vertex> vertices;   // the partition, with decorations
  std::vector<Label> leg_labels;  // external label per flag; empty for internal flags
  bool symmetric = false;

  int flag_count() const { return static_cast<int>(flags.size()); }
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  bool is_leg(int f) const { return sigma[f] == f; }

  int edge_count() const {
    int n = 0;
    for (int f = 0; f < flag_count(); ++f) n += sigma[f] > f ? 1 : 0;
    return n;
  }

  std::vector<int> legs() const {
    std::vector<int> out;
    for (int f = 0; f < flag_count(); ++f) {
      if (is_leg(f)) out.push_back(f);
    }
    return out;
  }

  /// Label used for f when it is exposed: the external label for legs,
  /// otherwise the flag name.
  const Label& label(int f) const { return is_leg(f) && !leg_labels[f].empty() ? leg_labels[f] : flags[f]; }

  std::optional<int> find_flag(const Label& name) const {
    for (int f = 0; f < flag_count(); ++f) {
      if (flags[f] == name) return f;
    }
    return std::nullopt;
  }

  std::optional<int> find_leg(const Label& l) const {
    for (int f = 0; f < flag_count(); ++f) {
      if (is_leg(f) && label(f) == l) return f;
    }
    return std::nullopt;
  }

  std::vector<Label> leg_set() const {
    std::vector<Label> out;
    for (int f : legs()) out.push_back(label(f));
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const NsGraph&, const NsGraph&) = default;
};

/// Where every flag sits: vertex, block within the vertex, position in block.
struct FlagIndex {
  std::vector<int> vertex;
  std::vector<int> block;
  std::vector<int> pos;

  explicit FlagIndex(const NsGraph& g)
      : vertex(g.flags.size(), -1), block(g.flags.size(), -1), pos(g.flags.size(), -1) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto& blocks = g.vertices[v].blocks;
      for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi) {
        for (int p = 0; p < static_cast<int>(blocks[bi].size()); ++p) {
          int f = blocks[bi][p];
          if (f < 0 || f >= g.flag_count()) continue;
          vertex[f] = v;
          block[f] = bi;
          pos[f] = p;
        }
      }
    }
  }

  int successor(const NsGraph& g, int f) const {
    const auto& bl = g.vertices[vertex[f]].blocks[block[f]];
    return bl[(pos[f] + 1) % bl.size()];
  }
};

struct Diagnostic {
  std::string message;
};

/// Structural checks; an empty result means the graph is valid.
inline std::vector<Diagnostic> validate(const NsGraph& g) {
  std::vector<Diagnostic> out;
  const int n = g.flag_count();
  if (static_cast<int>(g.sigma.size()) != n || static_cast<int>(g.leg_labels.size()) != n) {
    out.push_back({"flag tables have inconsistent sizes"});
    return out;
  }
  if (g.vertices.empty()) out.push_back({"graph has no vertices"});
  {
    std::vector<Label> names(g.flags);
    std::sort(names.begin(), names.end());
    auto dup = std::adjacent_find(names.begin(), names.end());
    if (dup != names.end()) out.push_back({"flag name '" + *dup + "' is repeated"});
  }
  for (int f = 0; f < n; ++f) {
    const int s = g.sigma[f];
    if (s < 0 || s >= n) {
      out.push_back({"flag '" + g.flags[f] + "': involution points outside the flag set"});
    } else if (g.sigma[s] != f) {
      out.push_back({"flag '" + g.flags[f] + "': involution is not involutive"});
    }
  }
  std::vector<int> seen(n, 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& vx = g.vertices[v];
    if (vx.blocks.empty()) out.push_back({"vertex " + std::to_string(v) + " has no blocks"});
    if (vx.genus < 0) out.push_back({"vertex " + std::to_string(v) + " has negative genus"});
    if (g.symmetric && vx.blocks.size() != 1) {
      out.push_back({"vertex " + std::to_string(v) + " of a symmetric graph must have exactly one block"});
    }
    for (const auto& bl : vx.blocks) {
      for (int f : bl) {
        if (f < 0 || f >= n) {
          out.push_back({"vertex " + std::to_string(v) + " refers to a missing flag"});
        } else {
          ++seen[f];
        }
      }
    }
  }
  for (int f = 0; f < n; ++f) {
    if (seen[f] == 0) out.push_back({"flag '" + g.flags[f] + "' belongs to no vertex"});
    if (seen[f] > 1) out.push_back({"flag '" + g.flags[f] + "' belongs to several blocks"});
  }
  if (!out.empty()) return out;

  std::set<Label> leg_names;
  for (int f : g.legs()) {
    if (!leg_names.insert(g.label(f)).second) {
      out.push_back({"leg label '" + g.label(f) + "' is repeated"});
    }
  }

  // Connectivity over vertices.
  FlagIndex idx(g);
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int f = 0; f < n; ++f) parent[find(idx.vertex[f])] = find(idx.vertex[g.sigma[f]]);
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (find(v) != find(0)) {
      out.push_back({"disconnected: vertex " + std::to_string(v) + " is not reachable from vertex 0"});
      break;
    }
  }
  return out;
}

inline void require_valid(const NsGraph& g) {
  auto diags = validate(g);
  if (!diags.empty()) throw Error(ErrorCode::InvalidGraph, diags.front().message);
}

inline void require_nonsigma(const NsGraph& g, const char* what) {
  if (g.symmetric) throw Error(ErrorCode::Unsupported, std::string(what) + " needs cyclic vertex orders");
}

/// Corolla with one vertex whose legs are labelled by `blocks`.
inline NsGraph corolla(const MulticyclicType& blocks, int genus = 0, std::string tag = {}) {
  NsGraph g;
  Vertex v;
  v.genus = genus;
  v.tag = std::move(tag);
  for (const auto& c : blocks.components()) {
    std::vector<int> bl;
    for (const auto& l : c.repr()) {
      bl.push_back(g.flag_count());
      g.flags.push_back(l);
      g.leg_labels.push_back(l);
    }
    v.blocks.push_back(std::move(bl));
  }
  g.sigma.resize(g.flags.size());
  std::iota(g.sigma.begin(), g.sigma.end(), 0);
  g.vertices.push_back(std::move(v));
  return g;
}

/// Symmetric corolla: a vertex carrying a plain set of legs.
inline NsGraph sym_corolla(std::vector<Label> legs, int genus = 0, std::string tag = {}) {
  std::sort(legs.begin(), legs.end());
  NsGraph g;
  g.symmetric = true;
  Vertex v;
  v.genus = genus;
  v.tag = std::move(tag);
  v.blocks.emplace_back();
  for (const auto& l : legs) {
    v.blocks[0].push_back(g.flag_count());
    g.flags.push_back(l);
    g.leg_labels.push_back(l);
  }
  g.sigma.resize(g.flags.size());
  std::iota(g.sigma.begin(), g.sigma.end(), 0);
  g.vertices.push_back(std::move(v));
  return g;
}

/// First Betti number |E| - |V| + 1.
inline int betti(const NsGraph& g) {
  require_valid(g);
  return g.edge_count() - g.vertex_count() + 1;
}

/// Oriented edge cycle: the flags a_1..a_s visited by h -> succ(sigma(h)).
/// Faces coming from empty vertex blocks carry no flags.
struct Face {
  std::vector<int> flags;
};

/// Cycle decomposition of h -> blockSuccessor(sigma(h)), each cycle starting
/// at its smallest flag, followed by one empty face per empty vertex block.
inline std::vector<Face> faces(const NsGraph& g) {
  require_valid(g);
  require_nonsigma(g, "face tracing");
  FlagIndex idx(g);
  std::vector<Face> out;
  std::vector<bool> done(g.flags.size(), false);
  for (int start = 0; start < g.flag_count(); ++start) {
    if (done[start]) continue;
    Face face;
    int h = start;
    while (!done[h]) {
      done[h] = true;
      face.flags.push_back(h);
      h = idx.successor(g, g.sigma[h]);
    }
    out.push_back(std::move(face));
  }
  for (const auto& v : g.vertices) {
    for (const auto& bl : v.blocks) {
      if (bl.empty()) out.push_back({});
    }
  }
  return out;
}

/// Induced multicyclic order on the legs: one component per face.
inline MulticyclicType leg_type(const NsGraph& g) {
  std::vector<CyclicWord> comps;
  for (const auto& face : faces(g)) {
    LinearWord w;
    for (int f : face.flags) {
      if (g.is_leg(f)) w.push_back(g.label(f));
    }
    comps.emplace_back(std::move(w));
  }
  return MulticyclicType(std::move(comps));
}

/// betti + sum of vertex genera.
inline int genus(const NsGraph& g) {
  int total = betti(g);
  for (const auto& v : g.vertices) total += v.genus;
  return total;
}

inline TypedArity arity(const NsGraph& g) { return {leg_type(g), genus(g)}; }

/// Every vertex satisfies (g_v + 1 - b_v) / 2 in N.
inline bool is_geometric_graph(const NsGraph& g) {
  require_valid(g);
  return std::all_of(g.vertices.begin(), g.vertices.end(),
                     [](const Vertex& v) { return is_geometric(v.genus, v.b()); });
}

/// Type of a single vertex, legs under external labels and internal flags
/// under their names.
inline MulticyclicType vertex_type(const NsGraph& g, int v) {
  std::vector<CyclicWord> comps;
  for (const auto& bl : g.vertices[v].blocks) {
    LinearWord w;
    for (int f : bl) w.push_back(g.label(f));
    comps.emplace_back(std::move(w));
  }
  return MulticyclicType(std::move(comps));
}

namespace detail {

// Drops the given flags (which must not be referenced by any block) and
// renumbers the rest.
inline NsGraph remove_flags(const NsGraph& g, const std::vector<int>& dead) {
  std::vector<int> remap(g.flags.size(), -1);
  NsGraph out;
  out.symmetric = g.symmetric;
  for (int f = 0; f < g.flag_count(); ++f) {
    if (std::find(dead.begin(), dead.end(), f) != dead.end()) continue;
    remap[f] = out.flag_count();
    out.flags.push_back(g.flags[f]);
    out.leg_labels.push_back(g.leg_labels[f]);
  }
  for (int f = 0; f < g.flag_count(); ++f) {
    if (remap[f] >= 0) out.sigma.push_back(remap[g.sigma[f]]);
  }
  out.vertices = g.vertices;
  for (auto& v : out.vertices) {
    for (auto& bl : v.blocks) {
      for (int& f : bl) f = remap[f];
    }
  }
  return out;
}

inline std::vector<int> rotate_block_to_back(const std::vector<int>& bl, int f) {
  auto it = std::find(bl.begin(), bl.end(), f);
  std::vector<int> out(it + 1, bl.end());
  out.insert(out.end(), bl.begin(), it + 1);
  return out;
}

inline std::vector<int> rotate_block_to_front(const std::vector<int>& bl, int f) {
  auto it = std::find(bl.begin(), bl.end(), f);
  std::vector<int> out(it, bl.end());
  out.insert(out.end(), bl.begin(), it);
  return out;
}

// Pancake merge on flag blocks: [A u] and [v B] become [A B].
inline std::vector<int> merge_blocks(const std::vector<int>& bu, int u, const std::vector<int>& bv, int v) {
  std::vector<int> a = rotate_block_to_back(bu, u);
  a.pop_back();
  std::vector<int> b = rotate_block_to_front(bv, v);
  a.insert(a.end(), b.begin() + 1, b.end());
  return a;
}

}  // namespace detail

/// Disjoint union of g1 and g2 with sigma(u) = v.
inline NsGraph graft(const NsGraph& g1, const Label& u, const NsGraph& g2, const Label& v) {
  require_valid(g1);
  require_valid(g2);
  if (g1.symmetric != g2.symmetric) throw Error(ErrorCode::Unsupported, "cannot graft graphs of different modes");
  auto fu = g1.find_leg(u);
  auto fv = g2.find_leg(v);
  if (!fu) throw Error(ErrorCode::NotALeg, "'" + u + "' is not a leg of the first graph");
  if (!fv) throw Error(ErrorCode::NotALeg, "'" + v + "' is not a leg of the second graph");
  std::set<Label> names(g1.flags.begin(), g1.flags.end());
  for (const auto& name : g2.flags) {
    if (names.count(name)) throw Error(ErrorCode::LabelClash, "flag '" + name + "' occurs in both graphs");
  }
  std::set<Label> legs1;
  for (int f : g1.legs()) legs1.insert(g1.label(f));
  for (int f : g2.legs()) {
    if (legs1.count(g2.label(f))) throw Error(ErrorCode::LabelClash, "leg '" + g2.label(f) + "' occurs in both graphs");
  }
  NsGraph out = g1;
  const int offset = g1.flag_count();
  out.flags.insert(out.flags.end(), g2.flags.begin(), g2.flags.end());
  out.leg_labels.insert(out.leg_labels.end(), g2.leg_labels.begin(), g2.leg_labels.end());
  for (int s : g2.sigma) out.sigma.push_back(s + offset);
  for (auto vx : g2.vertices) {
    for (auto& bl : vx.blocks) {
      for (int& f : bl) f += offset;
    }
    out.vertices.push_back(std::move(vx));
  }
  const int a = *fu;
  const int b = *fv + offset;
  out.sigma[a] = b;
  out.sigma[b] = a;
  out.leg_labels[a].clear();
  out.leg_labels[b].clear();
  return out;
}

/// sigma(u) = v inside g.
inline NsGraph self_glue(const NsGraph& g, const Label& u, const Label& v) {
  require_valid(g);
  if (u == v) throw Error(ErrorCode::InvalidGlue, "cannot glue leg '" + u + "' to itself");
  auto fu = g.find_leg(u);
  auto fv = g.find_leg(v);
  if (!fu) throw Error(ErrorCode::NotALeg, "'" + u + "' is not a leg");
  if (!fv) throw Error(ErrorCode::NotALeg, "'" + v + "' is not a leg");
  NsGraph out = g;
  out.sigma[*fu] = *fv;
  out.sigma[*fv] = *fu;
  out.leg_labels[*fu].clear();
  out.leg_labels[*fv].clear();
  return out;
}

/// Contracts the non-loop edge containing flag `f`: its two vertices merge,
/// genera add and the blocks at the edge are pancake-merged.
inline NsGraph contract_edge(const NsGraph& g, int f) {
  require_valid(g);
  if (f < 0 || f >= g.flag_count() || g.is_leg(f)) {
    throw Error(ErrorCode::NoSuchEdge, "no edge at flag index " + std::to_string(f));
  }
  FlagIndex idx(g);
  const int u = f;
  const int v = g.sigma[f];
  const int wu = idx.vertex[u];
  const int wv = idx.vertex[v];
  if (wu == wv) throw Error(ErrorCode::LoopEdge, "edge '" + g.flags[u] + "' is a loop; use contract_loop");
  const Vertex& xu = g.vertices[wu];
  const Vertex& xv = g.vertices[wv];
  Vertex merged;
  merged.genus = xu.genus + xv.genus;
  merged.tag.clear();
  if (g.symmetric) {
    std::vector<int> all;
    for (int h : xu.blocks[0]) {
      if (h != u) all.push_back(h);
    }
    for (int h : xv.blocks[0]) {
      if (h != v) all.push_back(h);
    }
    merged.blocks.push_back(std::move(all));
  } else {
    for (int bi = 0; bi < xu.b(); ++bi) {
      if (bi != idx.block[u]) merged.blocks.push_back(xu.blocks[bi]);
    }
    for (int bi = 0; bi < xv.b(); ++bi) {
      if (bi != idx.block[v]) merged.blocks.push_back(xv.blocks[bi]);
    }
    merged.blocks.push_back(detail::merge_blocks(xu.blocks[idx.block[u]], u, xv.blocks[idx.block[v]], v));
  }
  NsGraph tmp = g;
  const int keep = std::min(wu, wv);
  const int drop = std::max(wu, wv);
  tmp.vertices[keep] = std::move(merged);
  tmp.vertices.erase(tmp.vertices.begin() + drop);
  return detail::remove_flags(tmp, {u, v});
}

inline NsGraph contract_edge(const NsGraph& g, const Label& flag_name) {
  auto f = g.find_flag(flag_name);
  if (!f) throw Error(ErrorCode::NoSuchEdge, "no flag named '" + flag_name + "'");
  return contract_edge(g, *f);
}

/// Contracts the loop containing flag `f`: genus + 1 and the vertex blocks
/// are cut at the loop's half-edges.
inline NsGraph contract_loop(const NsGraph& g, int f) {
  require_valid(g);
  if (f < 0 || f >= g.flag_count() || g.is_leg(f)) {
    throw Error(ErrorCode::NotALoop, "no loop at flag index " + std::to_string(f));
  }
  FlagIndex idx(g);
  const int u = f;
  const int v = g.sigma[f];
  const int w = idx.vertex[u];
  if (idx.vertex[v] != w) throw Error(ErrorCode::NotALoop, "edge '" + g.flags[u] + "' joins two vertices");
  const Vertex& x = g.vertices[w];
  Vertex out;
  out.genus = x.genus + 1;
  if (g.symmetric) {
    std::vector<int> rest;
    for (int h : x.blocks[0]) {
      if (h != u && h != v) rest.push_back(h);
    }
    out.blocks.push_back(std::move(rest));
  } else {
    const int bu = idx.block[u];
    const int bv = idx.block[v];
    for (int bi = 0; bi < x.b(); ++bi) {
      if (bi != bu && bi != bv) out.blocks.push_back(x.blocks[bi]);
    }
    if (bu == bv) {
      std::vector<int> r = detail::rotate_block_to_front(x.blocks[bu], u);
      auto vpos = std::find(r.begin(), r.end(), v);
      out.blocks.emplace_back(r.begin() + 1, vpos);
      out.blocks.emplace_back(vpos + 1, r.end());
    } else {
      out.blocks.push_back(detail::merge_blocks(x.blocks[bu], u, x.blocks[bv], v));
    }
  }
  NsGraph tmp = g;
  tmp.vertices[w] = std::move(out);
  return detail::remove_flags(tmp, {u, v});
}

inline NsGraph contract_loop(const NsGraph& g, const Label& flag_name) {
  auto f = g.find_flag(flag_name);
  if (!f) throw Error(ErrorCode::NotALoop, "no flag named '" + flag_name + "'");
  return contract_loop(g, *f);
}

/// Renames legs through `rename` (labels absent from the map are kept). Leg
/// flags named after their label follow the rename.
inline NsGraph relabel_legs(const NsGraph& g, const std::map<Label, Label>& rename) {
  NsGraph out = g;
  for (int f : g.legs()) {
    auto it = rename.find(g.label(f));
    if (it == rename.end()) continue;
    if (out.flags[f] == g.label(f)) out.flags[f] = it->second;
    out.leg_labels[f] = it->second;
  }
  return out;
}

}  // namespace nsmod
