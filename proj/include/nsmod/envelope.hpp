#pragma once

// Envelope normal forms and move-closure verification. Two terminal-decorated
// graphs are identified when connected by non-loop edge contractions and
// their inverses; the verifier counts those classes at bounded size.

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "nsmod/enumerate.hpp"
#include "nsmod/graph.hpp"
#include "nsmod/text.hpp"

namespace nsmod {

struct EnvelopeClass {
  TypedArity arity;

  friend bool operator==(const EnvelopeClass&, const EnvelopeClass&) = default;
};

/// Labels a, b, ..., z, then l26, l27, ...
inline std::vector<Label> default_labels(int n) {
  std::vector<Label> out;
  for (int i = 0; i < n; ++i) out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "l" + std::to_string(i));
  return out;
}

inline EnvelopeClass normal_form(const NsGraph& x) {
  require_valid(x);
  require_nonsigma(x, "normal_form");
  for (int v = 0; v < x.vertex_count(); ++v) {
    const Vertex& vx = x.vertices[v];
    if (vx.genus != 0 || vx.b() != 1) {
      throw Error(ErrorCode::NotRibbon, "vertex " + std::to_string(v) + " is not a genus-0 single-block vertex");
    }
  }
  return {arity(x)};
}

enum class EnvelopeMode { NonSigma, Symmetric };
enum class VerifyStatus { Pass, Fail, Inconclusive };

inline const char* to_string(EnvelopeMode m) { return m == EnvelopeMode::NonSigma ? "nonsigma" : "symmetric"; }

inline const char* to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass:
      return "pass";
    case VerifyStatus::Fail:
      return "fail";
    case VerifyStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

struct EnvelopeReport {
  int n = 0;
  int g = 0;
  int vmax = 0;
  EnvelopeMode mode = EnvelopeMode::NonSigma;
  std::size_t graphs = 0;
  std::size_t components = 0;
  std::size_t types = 0;           // distinct normal forms realized
  std::size_t expected_types = 0;  // geometric types on the legs (1 in symmetric mode)
  bool constant = true;            // normal form constant on every component
  std::size_t dangling = 0;        // contractions that left the enumerated range
  VerifyStatus status = VerifyStatus::Pass;
  std::vector<EnumeratedGraph> enumerated;

  bool pass() const { return status == VerifyStatus::Pass; }
};

namespace detail {

// Symmetric key is the genus alone since the legs are fixed.
inline std::string envelope_key(const NsGraph& g, EnvelopeMode mode) {
  if (mode == EnvelopeMode::Symmetric) return std::to_string(genus(g));
  return text::format(normal_form(g).arity);
}

}  // namespace detail

inline EnvelopeReport verify_envelope(int n, int g, int vmax, EnvelopeMode mode = EnvelopeMode::NonSigma,
                                      bool keep_graphs = false) {
  if (n < 0 || g < 0) throw Error(ErrorCode::Unsupported, "n and g must be natural numbers");
  const bool sym = mode == EnvelopeMode::Symmetric;
  EnvelopeReport r;
  r.n = n;
  r.g = g;
  r.vmax = vmax;
  r.mode = mode;
  const std::vector<Label> legs = default_labels(n);
  std::vector<EnumeratedGraph> all = enumerate_graphs(legs, g, vmax, VertexConstraint::ribbon(), sym);
  r.graphs = all.size();
  r.expected_types = sym ? 1 : enumerate_types(legs, g).size();

  std::map<GraphClass, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i].cls, i);
  std::vector<std::size_t> parent(all.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    const NsGraph& gr = all[i].graph;
    FlagIndex idx(gr);
    for (int f = 0; f < gr.flag_count(); ++f) {
      const int s = gr.sigma[f];
      if (s <= f || idx.vertex[f] == idx.vertex[s]) continue;
      auto it = index.find(canonical(contract_edge(gr, f)));
      if (it == index.end()) {
        ++r.dangling;
        continue;
      }
      const std::size_t a = find(i);
      const std::size_t b = find(it->second);
      if (a != b) parent[a] = b;
    }
  }

  std::map<std::size_t, std::string> component_key;
  std::map<std::string, int> realized;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::string key = detail::envelope_key(all[i].graph, mode);
    ++realized[key];
    auto [it, fresh] = component_key.emplace(find(i), key);
    if (!fresh && it->second != key) r.constant = false;
  }
  r.components = component_key.size();
  r.types = realized.size();
  if (!r.constant || r.dangling > 0) {
    r.status = VerifyStatus::Fail;
  } else if (r.components != r.types) {
    r.status = VerifyStatus::Inconclusive;
  } else {
    r.status = VerifyStatus::Pass;
  }
  if (keep_graphs) r.enumerated = std::move(all);
  return r;
}

/// Number of geometric types on n labels in genus g.
inline std::size_t count_mod_ass(int n, int g) {
  if (n < 0 || g < 0) throw Error(ErrorCode::Unsupported, "n and g must be natural numbers");
  return enumerate_types(default_labels(n), g).size();
}

/// One class for every (S, g).
inline std::size_t count_mod_com(int n, int g) {
  if (n < 0 || g < 0) throw Error(ErrorCode::Unsupported, "n and g must be natural numbers");
  return 1;
}

/// Surface with G handles and one boundary circle per component, the
/// component's labels marking points on it in order.
struct SurfaceSignature {
  int G = 0;
  std::vector<CyclicWord> boundaries;

  friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

inline SurfaceSignature surface_signature(const EnvelopeClass& c) {
  return {geometric_genus(c.arity), c.arity.stype.components()};
}

inline std::string format(const SurfaceSignature& s) {
  std::string out = "G=" + std::to_string(s.G) + " b=" + std::to_string(s.boundaries.size()) + " boundaries=";
  for (std::size_t i = 0; i < s.boundaries.size(); ++i) {
    if (i) out += ' ';
    out += text::format(s.boundaries[i]);
  }
  return out;
}

}  // namespace nsmod
