#pragma once

// Free operad over a finitely generated module. Elements are graphs whose
// vertex tags name generators; compositions graft, contractions self-glue.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsmod/canonical.hpp"
#include "nsmod/enumerate.hpp"
#include "nsmod/graph.hpp"

namespace nsmod {

/// A generator either matches every vertex of the terminal shape or carries
/// an exact arity. Equivariance is trivial: only the shape of the arity
/// (sorted block sizes and genus) matters.
struct Generator {
  std::string id;
  bool terminal = false;
  TypedArity arity;

  VertexPattern pattern(bool symmetric) const {
    VertexPattern p;
    p.genus = terminal ? 0 : arity.g;
    p.boundaries = terminal ? 1 : static_cast<int>(arity.stype.b());
    if (!terminal) {
      if (symmetric) {
        p.sizes = std::vector<std::size_t>{arity.stype.labels().size()};
      } else {
        p.sizes = arity.stype.shape();
      }
    }
    return p;
  }

  bool matches(const Vertex& v, bool symmetric) const {
    VertexConstraint c{{pattern(symmetric)}};
    return c.accepts(v, symmetric);
  }
};

struct ModuleSpec {
  std::vector<Generator> generators;
  bool symmetric = false;

  static ModuleSpec terminal(bool symmetric = false) {
    ModuleSpec m;
    m.generators.push_back({"*", true, {}});
    m.symmetric = symmetric;
    return m;
  }

  const Generator* find(const std::string& id) const {
    for (const auto& g : generators) {
      if (g.id == id) return &g;
    }
    return nullptr;
  }

  VertexConstraint constraint() const {
    VertexConstraint c;
    c.patterns.clear();
    for (const auto& g : generators) c.patterns.push_back(g.pattern(symmetric));
    return c;
  }

  void require_valid() const {
    if (generators.empty()) throw Error(ErrorCode::InvalidType, "module has no generators");
    std::set<std::string> ids;
    for (const auto& g : generators) {
      if (g.id.empty()) throw Error(ErrorCode::InvalidType, "generator id must not be empty");
      if (!ids.insert(g.id).second) throw Error(ErrorCode::LabelClash, "generator id '" + g.id + "' repeated");
      if (g.arity.g < 0) throw Error(ErrorCode::InvalidType, "generator '" + g.id + "' has negative genus");
    }
  }
};

/// A vertex-tagged graph; every tag names a generator matching its vertex.
using FreeElement = NsGraph;

inline void require_element(const ModuleSpec& m, const FreeElement& x) {
  require_valid(x);
  if (x.symmetric != m.symmetric) throw Error(ErrorCode::InvalidGraph, "element and module differ in mode");
  for (int v = 0; v < x.vertex_count(); ++v) {
    const Generator* gen = m.find(x.vertices[v].tag);
    if (!gen) throw Error(ErrorCode::InvalidGraph, "vertex " + std::to_string(v) + " has unknown tag '" + x.vertices[v].tag + "'");
    if (!gen->matches(x.vertices[v], m.symmetric)) {
      throw Error(ErrorCode::InvalidGraph, "vertex " + std::to_string(v) + " does not match generator '" + gen->id + "'");
    }
  }
}

/// Generator corolla with the given leg arrangement.
inline FreeElement generator_corolla(const ModuleSpec& m, const std::string& id, const MulticyclicType& legs,
                                     int genus) {
  const Generator* gen = m.find(id);
  if (!gen) throw Error(ErrorCode::MissingLabel, "no generator '" + id + "'");
  FreeElement x;
  if (m.symmetric) {
    x = sym_corolla(legs.labels(), genus, id);
  } else {
    x = corolla(legs, genus, id);
  }
  if (!gen->matches(x.vertices[0], m.symmetric)) {
    throw Error(ErrorCode::InvalidType, "arity does not match generator '" + id + "'");
  }
  return x;
}

namespace detail {

// Renames every flag to prefix + index; leg labels are kept.
inline NsGraph rename_flags(const NsGraph& g, const std::string& prefix) {
  NsGraph out = g;
  for (int f = 0; f < g.flag_count(); ++f) {
    if (g.is_leg(f)) out.leg_labels[f] = g.label(f);
    out.flags[f] = prefix + std::to_string(f);
  }
  return out;
}

}  // namespace detail

inline FreeElement compose_free(const FreeElement& x, const Label& u, const FreeElement& y, const Label& v) {
  return canonize(graft(detail::rename_flags(x, "~x"), u, detail::rename_flags(y, "~y"), v)).graph;
}

inline FreeElement contract_free(const FreeElement& x, const Label& u, const Label& v) {
  return canonize(self_glue(x, u, v)).graph;
}

/// All classes of generator-decorated graphs of arity t with at most vmax
/// vertices. In symmetric mode only the label set and genus of t are used.
inline std::vector<EnumeratedGraph> free_component(const ModuleSpec& m, const TypedArity& t, int vmax) {
  m.require_valid();
  std::vector<EnumeratedGraph> shapes = enumerate_graphs(t.stype.labels(), t.g, vmax, m.constraint(), m.symmetric);
  std::map<GraphClass, NsGraph> out;
  for (const auto& eg : shapes) {
    if (!m.symmetric && leg_type(eg.graph) != t.stype) continue;
    const NsGraph& base = eg.graph;
    std::vector<std::vector<std::string>> choices;
    for (const auto& vx : base.vertices) {
      std::vector<std::string> ids;
      for (const auto& gen : m.generators) {
        if (gen.matches(vx, m.symmetric)) ids.push_back(gen.id);
      }
      choices.push_back(std::move(ids));
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      NsGraph tagged = base;
      for (std::size_t i = 0; i < pick.size(); ++i) tagged.vertices[i].tag = choices[i][pick[i]];
      Canonized c = canonize(tagged);
      out.emplace(std::move(c.cls), std::move(c.graph));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  std::vector<EnumeratedGraph> result;
  result.reserve(out.size());
  for (auto& [cls, g] : out) result.push_back({cls, std::move(g)});
  return result;
}

/// One flag per edge (the smaller one): spanning-tree edges first, chosen
/// greedily in flag order, then the remaining edges in flag order.
inline std::vector<int> default_schedule(const NsGraph& g) {
  FlagIndex idx(g);
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> tree;
  std::vector<int> rest;
  for (int f = 0; f < g.flag_count(); ++f) {
    const int s = g.sigma[f];
    if (s <= f) continue;
    const int a = find(idx.vertex[f]);
    const int b = find(idx.vertex[s]);
    if (a != b) {
      parent[a] = b;
      tree.push_back(f);
    } else {
      rest.push_back(f);
    }
  }
  tree.insert(tree.end(), rest.begin(), rest.end());
  return tree;
}

/// Folds gamma through an operad given by `ev`, one edge at a time in the
/// order of `schedule` (each edge named by one of its flags). Vertex legs are
/// named by flag names; the result has gamma's external leg labels.
///
/// The evaluator supplies
///   Element vertex(const NsGraph&, int v)
///   Element compose(const Element&, const Label&, const Element&, const Label&)
///   Element contract(const Element&, const Label&, const Label&)
///   Element relabel(const Element&, const std::map<Label, Label>&)
template <class Evaluator>
auto contract_along(const NsGraph& gamma, Evaluator& ev, std::optional<std::vector<int>> schedule = std::nullopt) {
  using Element = decltype(ev.vertex(gamma, 0));
  require_valid(gamma);
  std::vector<int> order = schedule ? *schedule : default_schedule(gamma);
  {
    std::vector<int> seen(gamma.flag_count(), 0);
    for (int f : order) {
      if (f < 0 || f >= gamma.flag_count() || gamma.is_leg(f)) {
        throw Error(ErrorCode::NoSuchEdge, "schedule names a non-edge flag");
      }
      if (seen[f]++ || seen[gamma.sigma[f]]++) throw Error(ErrorCode::InvalidGlue, "schedule repeats an edge");
    }
    if (static_cast<int>(order.size()) != gamma.edge_count()) {
      throw Error(ErrorCode::InvalidGlue, "schedule must list every edge once");
    }
  }
  FlagIndex idx(gamma);
  std::vector<int> cluster(gamma.vertex_count());
  std::iota(cluster.begin(), cluster.end(), 0);
  auto find = [&](int x) {
    while (cluster[x] != x) x = cluster[x] = cluster[cluster[x]];
    return x;
  };
  std::vector<std::optional<Element>> value(gamma.vertex_count());
  for (int v = 0; v < gamma.vertex_count(); ++v) value[v] = ev.vertex(gamma, v);
  for (int f : order) {
    const int s = gamma.sigma[f];
    const int a = find(idx.vertex[f]);
    const int b = find(idx.vertex[s]);
    if (a == b) {
      value[a] = ev.contract(*value[a], gamma.flags[f], gamma.flags[s]);
    } else {
      value[a] = ev.compose(*value[a], gamma.flags[f], *value[b], gamma.flags[s]);
      value[b].reset();
      cluster[b] = a;
    }
  }
  std::map<Label, Label> rename;
  for (int f : gamma.legs()) rename[gamma.flags[f]] = gamma.label(f);
  return ev.relabel(*value[find(0)], rename);
}

/// Evaluates into the terminal operad: an element is its arity.
struct TerminalEvaluator {
  TypedArity vertex(const NsGraph& g, int v) const {
    require_nonsigma(g, "terminal evaluation");
    std::vector<LinearWord> words;
    for (const auto& bl : g.vertices[v].blocks) {
      LinearWord w;
      for (int f : bl) w.push_back(g.flags[f]);
      words.push_back(std::move(w));
    }
    return {MulticyclicType::from_words(words), g.vertices[v].genus};
  }
  TypedArity compose(const TypedArity& x, const Label& u, const TypedArity& y, const Label& v) const {
    return {mc_merge(x.stype, u, y.stype, v), x.g + y.g};
  }
  TypedArity contract(const TypedArity& x, const Label& u, const Label& v) const {
    return {mc_cut(x.stype, u, v), x.g + 1};
  }
  TypedArity relabel(const TypedArity& x, const std::map<Label, Label>& rename) const {
    std::vector<LinearWord> words;
    for (const auto& c : x.stype.components()) {
      LinearWord w;
      for (const auto& l : c.repr()) {
        auto it = rename.find(l);
        w.push_back(it == rename.end() ? l : it->second);
      }
      words.push_back(std::move(w));
    }
    return {MulticyclicType::from_words(words), x.g};
  }
};

/// Evaluates into the free operad: the result is gamma itself, rebuilt from
/// its vertex corollas.
struct FreeEvaluator {
  FreeElement vertex(const NsGraph& g, int v) const {
    const Vertex& x = g.vertices[v];
    FreeElement c;
    c.symmetric = g.symmetric;
    Vertex out;
    out.genus = x.genus;
    out.tag = x.tag;
    for (const auto& bl : x.blocks) {
      std::vector<int> nb;
      for (int f : bl) {
        nb.push_back(c.flag_count());
        c.flags.push_back(g.flags[f]);
        c.leg_labels.push_back(g.flags[f]);
        c.sigma.push_back(c.flag_count() - 1);
      }
      out.blocks.push_back(std::move(nb));
    }
    c.vertices.push_back(std::move(out));
    return c;
  }
  FreeElement compose(const FreeElement& x, const Label& u, const FreeElement& y, const Label& v) const {
    return graft(x, u, y, v);
  }
  FreeElement contract(const FreeElement& x, const Label& u, const Label& v) const { return self_glue(x, u, v); }
  FreeElement relabel(const FreeElement& x, const std::map<Label, Label>& rename) const {
    return canonize(relabel_legs(detail::rename_flags(x, "~e"), rename)).graph;
  }
};

}  // namespace nsmod
