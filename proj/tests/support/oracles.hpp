#pragma once

// Independent reference implementations used as test oracles. None of these
// call the canonicalizer or the enumerators under test.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nsmod/nsmod.hpp"

namespace oracle {

using nsmod::Label;
using nsmod::LinearWord;
using nsmod::NsGraph;

inline LinearWord rotate(const LinearWord& w, std::size_t k) {
  LinearWord out;
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(i + k) % w.size()]);
  return out;
}

inline bool rotations_match(const LinearWord& a, const LinearWord& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (rotate(a, k) == b) return true;
  }
  return false;
}

inline LinearWord least_rotation(const LinearWord& w) {
  LinearWord best = w;
  for (std::size_t k = 0; k < w.size(); ++k) best = std::min(best, rotate(w, k));
  return best;
}

// a1..ak then b1..bl read off explicit rotations: cp ends in u, cq starts at v.
inline LinearWord merge_linear(const LinearWord& cp, const Label& u, const LinearWord& cq, const Label& v) {
  std::size_t i = 0;
  while (rotate(cp, i).back() != u) ++i;
  std::size_t j = 0;
  while (rotate(cq, j).front() != v) ++j;
  LinearWord a = rotate(cp, i);
  LinearWord b = rotate(cq, j);
  LinearWord out(a.begin(), a.end() - 1);
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

// Walks forward from u collecting labels until v, then from v until u.
inline std::pair<LinearWord, LinearWord> intervals(const LinearWord& w, const Label& u, const Label& v) {
  const std::size_t n = w.size();
  std::size_t pu = 0;
  while (w[pu] != u) ++pu;
  LinearWord first, second;
  bool past_v = false;
  for (std::size_t k = 1; k < n; ++k) {
    const Label& l = w[(pu + k) % n];
    if (l == v) {
      past_v = true;
      continue;
    }
    (past_v ? second : first).push_back(l);
  }
  return {first, second};
}

// Every assignment of labels to b numbered slots with every slot ordered by
// a permutation, normalized to a sorted list of least rotations.
inline std::set<std::vector<LinearWord>> brute_types(std::vector<Label> labels, int g) {
  std::set<std::vector<LinearWord>> out;
  std::sort(labels.begin(), labels.end());
  const std::size_t n = labels.size();
  for (int b = 1; b <= g + 1; ++b) {
    if ((g - b + 1) % 2 != 0) continue;
    do {
      // Cut the permutation into b consecutive (possibly empty) pieces.
      std::vector<std::size_t> cuts(static_cast<std::size_t>(b - 1), 0);
      std::function<void(std::size_t, std::size_t)> place = [&](std::size_t idx, std::size_t from) {
        if (idx == cuts.size()) {
          std::vector<LinearWord> comps;
          std::size_t start = 0;
          for (std::size_t c = 0; c <= cuts.size(); ++c) {
            const std::size_t end = c < cuts.size() ? cuts[c] : n;
            comps.push_back(least_rotation(LinearWord(labels.begin() + static_cast<long>(start),
                                                      labels.begin() + static_cast<long>(end))));
            start = end;
          }
          std::sort(comps.begin(), comps.end());
          out.insert(comps);
          return;
        }
        for (std::size_t p = from; p <= n; ++p) {
          cuts[idx] = p;
          place(idx + 1, p);
        }
      };
      place(0, 0);
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
  return out;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// Face permutation traced directly from the definition: h -> next(sigma(h)).
inline std::vector<std::vector<int>> face_cycles(const NsGraph& g) {
  const int n = g.flag_count();
  std::vector<int> next(n, -1);
  for (const auto& v : g.vertices) {
    for (const auto& bl : v.blocks) {
      for (std::size_t i = 0; i < bl.size(); ++i) next[bl[i]] = bl[(i + 1) % bl.size()];
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    for (int h = s; !seen[h]; h = next[g.sigma[h]]) {
      seen[h] = true;
      cyc.push_back(h);
    }
    out.push_back(cyc);
  }
  return out;
}

// Isomorphism by backtracking over flag bijections. Legs map to legs with the
// same label; sigma, vertices, genus, tags, empty-block counts and (for
// ribbon graphs) blocks with their cyclic successor are preserved.
class IsoSearch {
 public:
  IsoSearch(const NsGraph& a, const NsGraph& b) : a_(a), b_(b), ia_(a), ib_(b) {}

  bool run() {
    if (a_.flag_count() != b_.flag_count() || a_.vertex_count() != b_.vertex_count()) return false;
    if (a_.symmetric != b_.symmetric) return false;
    if (a_.leg_set() != b_.leg_set()) return false;
    map_.assign(a_.flag_count(), -1);
    used_.assign(b_.flag_count(), false);
    vmap_.assign(a_.vertex_count(), -1);
    vused_.assign(b_.vertex_count(), false);
    return extend();
  }

 private:
  int next_flag(const nsmod::FlagIndex& idx, const NsGraph& g, int f) const { return idx.successor(g, f); }

  bool compatible(int f, int h) const {
    if (a_.is_leg(f) != b_.is_leg(h)) return false;
    if (a_.is_leg(f) && a_.label(f) != b_.label(h)) return false;
    const int vf = ia_.vertex[f];
    const int vh = ib_.vertex[h];
    if (vmap_[vf] != -1 && vmap_[vf] != vh) return false;
    if (vmap_[vf] == -1 && vused_[vh]) return false;
    const auto& xa = a_.vertices[vf];
    const auto& xb = b_.vertices[vh];
    if (xa.genus != xb.genus || xa.tag != xb.tag || xa.b() != xb.b() || xa.valence() != xb.valence()) return false;
    if (!a_.symmetric && a_.vertices[vf].blocks[ia_.block[f]].size() != b_.vertices[vh].blocks[ib_.block[h]].size()) {
      return false;
    }
    return true;
  }

  // Assigns f -> h and everything it forces; returns false on conflict.
  bool assign(int f, int h, std::vector<int>& trail, std::vector<int>& vtrail) {
    std::vector<std::pair<int, int>> todo{{f, h}};
    while (!todo.empty()) {
      auto [x, y] = todo.back();
      todo.pop_back();
      if (map_[x] != -1) {
        if (map_[x] != y) return false;
        continue;
      }
      if (used_[y] || !compatible(x, y)) return false;
      map_[x] = y;
      used_[y] = true;
      trail.push_back(x);
      const int vx = ia_.vertex[x];
      if (vmap_[vx] == -1) {
        vmap_[vx] = ib_.vertex[y];
        vused_[ib_.vertex[y]] = true;
        vtrail.push_back(vx);
      }
      todo.push_back({a_.sigma[x], b_.sigma[y]});
      if (!a_.symmetric) todo.push_back({next_flag(ia_, a_, x), next_flag(ib_, b_, y)});
    }
    return true;
  }

  void undo(const std::vector<int>& trail, const std::vector<int>& vtrail) {
    for (int x : trail) {
      used_[map_[x]] = false;
      map_[x] = -1;
    }
    for (int v : vtrail) {
      vused_[vmap_[v]] = false;
      vmap_[v] = -1;
    }
  }

  bool finished() const {
    for (int v = 0; v < a_.vertex_count(); ++v) {
      if (vmap_[v] == -1) return false;
      int ea = 0, eb = 0;
      for (const auto& bl : a_.vertices[v].blocks) ea += bl.empty() ? 1 : 0;
      for (const auto& bl : b_.vertices[vmap_[v]].blocks) eb += bl.empty() ? 1 : 0;
      if (ea != eb) return false;
    }
    return true;
  }

  bool extend() {
    int f = -1;
    for (int x = 0; x < a_.flag_count(); ++x) {
      if (map_[x] == -1) {
        f = x;
        break;
      }
    }
    if (f == -1) {
      // Flagless vertices (only possible with a single vertex) still pair up.
      for (int v = 0; v < a_.vertex_count(); ++v) {
        if (vmap_[v] == -1) {
          for (int w = 0; w < b_.vertex_count(); ++w) {
            if (!vused_[w]) {
              vmap_[v] = w;
              vused_[w] = true;
              break;
            }
          }
        }
      }
      for (int v = 0; v < a_.vertex_count(); ++v) {
        const auto& xa = a_.vertices[v];
        const auto& xb = b_.vertices[vmap_[v]];
        if (xa.genus != xb.genus || xa.tag != xb.tag || xa.b() != xb.b()) return false;
      }
      return finished();
    }
    for (int h = 0; h < b_.flag_count(); ++h) {
      if (used_[h]) continue;
      std::vector<int> trail, vtrail;
      if (assign(f, h, trail, vtrail) && extend()) return true;
      undo(trail, vtrail);
    }
    return false;
  }

  const NsGraph& a_;
  const NsGraph& b_;
  nsmod::FlagIndex ia_, ib_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> vmap_;
  std::vector<bool> vused_;
};

inline bool isomorphic(const NsGraph& a, const NsGraph& b) { return IsoSearch(a, b).run(); }

// Same graph presented differently: flags renamed and reordered, vertices
// reordered, blocks rotated and reordered.
inline NsGraph scramble(const NsGraph& g, std::mt19937_64& rng) {
  const int n = g.flag_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);  // old -> new
  NsGraph out;
  out.symmetric = g.symmetric;
  out.flags.resize(n);
  out.sigma.resize(n);
  out.leg_labels.resize(n);
  for (int f = 0; f < n; ++f) {
    out.flags[perm[f]] = "q" + std::to_string(perm[f]);
    out.sigma[perm[f]] = perm[g.sigma[f]];
    out.leg_labels[perm[f]] = g.is_leg(f) ? g.label(f) : "";
  }
  std::vector<int> vorder(g.vertex_count());
  std::iota(vorder.begin(), vorder.end(), 0);
  std::shuffle(vorder.begin(), vorder.end(), rng);
  for (int v : vorder) {
    nsmod::Vertex x = g.vertices[v];
    for (auto& bl : x.blocks) {
      for (int& f : bl) f = perm[f];
      if (!bl.empty()) {
        std::rotate(bl.begin(), bl.begin() + static_cast<long>(rng() % bl.size()), bl.end());
      }
      if (g.symmetric) std::shuffle(bl.begin(), bl.end(), rng);
    }
    std::shuffle(x.blocks.begin(), x.blocks.end(), rng);
    out.vertices.push_back(std::move(x));
  }
  return out;
}

// All connected graphs with the given legs, genus-0 single-block vertices,
// total genus g and exactly V vertices, as raw labelled presentations:
// matchings of internal flags, assignment of flags to vertices, cyclic
// orders. Symmetric graphs skip the cyclic orders.
inline std::vector<NsGraph> raw_graphs(const std::vector<Label>& legs, int g, int V, bool symmetric) {
  std::vector<NsGraph> out;
  const int E = g + V - 1;
  if (E < 0) return out;
  const int nl = static_cast<int>(legs.size());
  const int n = nl + 2 * E;
  std::vector<int> sigma(n);
  for (int i = 0; i < nl; ++i) sigma[i] = i;
  std::vector<int> owner(n, -1);

  auto connected = [&](const std::vector<int>& own) {
    std::vector<int> parent(V);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int f = 0; f < n; ++f) parent[find(own[f])] = find(own[sigma[f]]);
    for (int v = 1; v < V; ++v) {
      if (find(v) != find(0)) return false;
    }
    return true;
  };

  auto emit_orders = [&]() {
    std::vector<std::vector<int>> members(V);
    for (int f = 0; f < n; ++f) members[owner[f]].push_back(f);
    for (const auto& m : members) {
      if (m.empty() && V > 1) return;
    }
    if (!connected(owner)) return;
    std::vector<std::vector<int>> orders = members;
    std::function<void(int)> rec = [&](int v) {
      if (v == V) {
        NsGraph gr;
        gr.symmetric = symmetric;
        for (int f = 0; f < n; ++f) {
          gr.flags.push_back(f < nl ? legs[f] : "h" + std::to_string(f));
          gr.leg_labels.push_back(f < nl ? legs[f] : "");
        }
        gr.sigma = sigma;
        for (int w = 0; w < V; ++w) gr.vertices.push_back({0, {orders[w]}, ""});
        out.push_back(std::move(gr));
        return;
      }
      auto& o = orders[v];
      if (symmetric || o.size() <= 2) {
        rec(v + 1);
        return;
      }
      std::sort(o.begin() + 1, o.end());
      do {
        rec(v + 1);
      } while (std::next_permutation(o.begin() + 1, o.end()));
    };
    rec(0);
  };

  std::function<void(int)> assign_vertices = [&](int f) {
    if (f == n) {
      emit_orders();
      return;
    }
    // Vertices are unlabelled up to iso but we keep them labelled; the first
    // flag of every new vertex opens the next vertex number.
    int used = 0;
    for (int x = 0; x < f; ++x) used = std::max(used, owner[x] + 1);
    for (int v = 0; v < std::min(V, used + 1); ++v) {
      owner[f] = v;
      assign_vertices(f + 1);
    }
    owner[f] = -1;
  };

  std::vector<bool> matched(n, false);
  std::function<void()> match = [&]() {
    int f = -1;
    for (int x = nl; x < n; ++x) {
      if (!matched[x]) {
        f = x;
        break;
      }
    }
    if (f == -1) {
      assign_vertices(0);
      return;
    }
    matched[f] = true;
    for (int h = f + 1; h < n; ++h) {
      if (matched[h]) continue;
      matched[h] = true;
      sigma[f] = h;
      sigma[h] = f;
      match();
      matched[h] = false;
    }
    matched[f] = false;
  };
  match();
  return out;
}

// Number of isomorphism classes among raw graphs with at most vmax vertices,
// deduplicated by the backtracking oracle within invariant buckets.
inline std::size_t count_classes(const std::vector<Label>& legs, int g, int vmax, bool symmetric) {
  std::size_t total = 0;
  for (int V = 1; V <= vmax; ++V) {
    std::map<std::string, std::vector<NsGraph>> buckets;
    for (auto& gr : raw_graphs(legs, g, V, symmetric)) {
      std::vector<int> degs;
      for (const auto& v : gr.vertices) degs.push_back(v.valence());
      std::sort(degs.begin(), degs.end());
      std::string key;
      for (int d : degs) key += std::to_string(d) + ",";
      if (!symmetric) key += nsmod::text::format(nsmod::leg_type(gr));
      auto& reps = buckets[key];
      bool fresh = true;
      for (const auto& r : reps) {
        if (isomorphic(r, gr)) {
          fresh = false;
          break;
        }
      }
      if (fresh) reps.push_back(std::move(gr));
    }
    for (const auto& [k, reps] : buckets) total += reps.size();
  }
  return total;
}

}  // namespace oracle
