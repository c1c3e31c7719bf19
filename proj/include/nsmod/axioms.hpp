#pragma once

// Property checker for the seven structure axioms of a modular operad,
// evaluated in the free operad of a module: both sides of every instance are
// computed as canonical classes and compared.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nsmod/free_operad.hpp"

namespace nsmod {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024ULL;

struct AxiomOptions {
  int max_flags = 12;
  int trials = 200;
  std::uint64_t seed = kDefaultSeed;
  int exhaustive_flags = 8;  // 0 disables the exhaustive pass
};

struct AxiomFailure {
  std::string axiom;
  std::string detail;
};

struct AxiomReport {
  std::uint64_t seed = 0;
  int trials = 0;
  int max_flags = 0;
  int exhaustive_flags = 0;
  std::map<std::string, int> checked;
  int skipped = 0;
  std::vector<AxiomFailure> failures;

  bool ok() const { return failures.empty(); }
  int total_checked() const {
    int n = 0;
    for (const auto& [k, c] : checked) n += c;
    return n;
  }
};

namespace detail {

class AxiomRunner {
 public:
  AxiomRunner(const ModuleSpec& m, AxiomReport& report) : m_(m), report_(report) {}

  void expect_equal(const std::string& axiom, const NsGraph& lhs, const NsGraph& rhs, const std::string& what) {
    ++report_.checked[axiom];
    GraphClass a = canonical(lhs);
    GraphClass b = canonical(rhs);
    if (a != b) report_.failures.push_back({axiom, what + ": " + a.encoding + " != " + b.encoding});
  }

  void expect_arity(const std::string& law, const NsGraph& result, const TypedArity& expected, const std::string& what) {
    ++report_.checked[law];
    bool same;
    if (m_.symmetric) {
      same = result.leg_set() == expected.stype.labels() && genus(result) == expected.g;
    } else {
      same = arity(result) == expected;
    }
    if (!same) report_.failures.push_back({law, what});
  }

  static TypedArity element_arity(const NsGraph& g, bool symmetric) {
    if (symmetric) return {MulticyclicType({CyclicWord(g.leg_set())}), genus(g)};
    return arity(g);
  }

  static std::vector<Label> set_minus(std::vector<Label> a, const std::vector<Label>& b, const Label& u,
                                      const Label& v) {
    a.insert(a.end(), b.begin(), b.end());
    std::erase(a, u);
    std::erase(a, v);
    std::sort(a.begin(), a.end());
    return a;
  }

  static std::string describe(const NsGraph& g) { return canonical(g).encoding; }

  // (i) and the grafting arity law.
  void check_compose(const NsGraph& x, const Label& u, const NsGraph& y, const Label& v) {
    const std::string at = "x=" + describe(x) + " y=" + describe(y) + " at " + u + "," + v;
    NsGraph xy = compose_free(x, u, y, v);
    expect_equal("i", xy, compose_free(y, v, x, u), at);
    TypedArity ax = element_arity(x, m_.symmetric);
    TypedArity ay = element_arity(y, m_.symmetric);
    TypedArity want;
    if (m_.symmetric) {
      want = {MulticyclicType({CyclicWord(set_minus(ax.stype.labels(), ay.stype.labels(), u, v))}), ax.g + ay.g};
    } else {
      want = {mc_merge(ax.stype, u, ay.stype, v), ax.g + ay.g};
    }
    expect_arity("arity-compose", xy, want, at);
  }

  void check_contract_arity(const NsGraph& x, const Label& u, const Label& v) {
    const std::string at = "x=" + describe(x) + " at " + u + "," + v;
    NsGraph r = contract_free(x, u, v);
    TypedArity ax = element_arity(x, m_.symmetric);
    TypedArity want;
    if (m_.symmetric) {
      want = {MulticyclicType({CyclicWord(set_minus(ax.stype.labels(), {}, u, v))}), ax.g + 1};
    } else {
      want = {mc_cut(ax.stype, u, v), ax.g + 1};
    }
    expect_arity("arity-contract", r, want, at);
    // xi_uv = xi_vu
    expect_equal("xi-symmetric", r, contract_free(x, v, u), at);
  }

  // (ii) a in x; b != c in y; d in z.
  void check_ii(const NsGraph& x, const Label& a, const NsGraph& y, const Label& b, const Label& c,
                const NsGraph& z, const Label& d) {
    NsGraph lhs = compose_free(x, a, compose_free(y, c, z, d), b);
    NsGraph rhs = compose_free(compose_free(x, a, y, b), c, z, d);
    expect_equal("ii", lhs, rhs, "x=" + describe(x) + " y=" + describe(y) + " z=" + describe(z));
  }

  // (iii) distinct a, b, c, d in x.
  void check_iii(const NsGraph& x, const Label& a, const Label& b, const Label& c, const Label& d) {
    NsGraph lhs = contract_free(contract_free(x, c, d), a, b);
    NsGraph rhs = contract_free(contract_free(x, a, b), c, d);
    expect_equal("iii", lhs, rhs, "x=" + describe(x) + " at " + a + b + "," + c + d);
  }

  // (iv) a != c in x; b != d in y.
  void check_iv(const NsGraph& x, const Label& a, const Label& c, const NsGraph& y, const Label& b, const Label& d) {
    NsGraph lhs = contract_free(compose_free(x, c, y, d), a, b);
    NsGraph rhs = contract_free(compose_free(x, a, y, b), c, d);
    expect_equal("iv", lhs, rhs, "x=" + describe(x) + " y=" + describe(y));
  }

  // (v) distinct a, c, d in x; b in y.
  void check_v(const NsGraph& x, const Label& a, const Label& c, const Label& d, const NsGraph& y, const Label& b) {
    NsGraph lhs = compose_free(contract_free(x, c, d), a, y, b);
    NsGraph rhs = contract_free(compose_free(x, a, y, b), c, d);
    expect_equal("v", lhs, rhs, "x=" + describe(x) + " y=" + describe(y));
  }

  // (vi) relabel after composing equals composing relabelled inputs.
  void check_vi(const NsGraph& x, const Label& u, const NsGraph& y, const Label& v, const std::map<Label, Label>& rho,
                const std::map<Label, Label>& sig) {
    std::map<Label, Label> both;
    for (const auto& [k, val] : rho) {
      if (k != u) both[k] = val;
    }
    for (const auto& [k, val] : sig) {
      if (k != v) both[k] = val;
    }
    NsGraph lhs = relabel_legs(compose_free(x, u, y, v), both);
    NsGraph rhs = compose_free(relabel_legs(x, rho), rho.at(u), relabel_legs(y, sig), sig.at(v));
    expect_equal("vi", lhs, rhs, "x=" + describe(x) + " y=" + describe(y));
  }

  // (vii) relabel after contracting equals contracting the relabelled input.
  void check_vii(const NsGraph& x, const Label& u, const Label& v, const std::map<Label, Label>& rho) {
    std::map<Label, Label> rest;
    for (const auto& [k, val] : rho) {
      if (k != u && k != v) rest[k] = val;
    }
    NsGraph lhs = relabel_legs(contract_free(x, u, v), rest);
    NsGraph rhs = contract_free(relabel_legs(x, rho), rho.at(u), rho.at(v));
    expect_equal("vii", lhs, rhs, "x=" + describe(x));
  }

  const ModuleSpec& m_;
  AxiomReport& report_;
};

// Random elements: generator corollas extended by random grafts and
// self-gluings. Labels are prefix + counter.
class ElementSampler {
 public:
  ElementSampler(const ModuleSpec& m, std::mt19937_64& rng) : m_(m), rng_(rng) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::optional<NsGraph> corolla_with(const Generator& gen, const std::string& prefix, int& counter, int budget) {
    std::vector<std::size_t> sizes;
    int genus_v = 0;
    if (gen.terminal) {
      if (budget < 1) return std::nullopt;
      sizes.push_back(static_cast<std::size_t>(uniform(1, std::min(budget, 5))));
    } else {
      if (m_.symmetric) {
        sizes.push_back(gen.arity.stype.labels().size());
      } else {
        sizes = gen.arity.stype.shape();
      }
      genus_v = gen.arity.g;
    }
    std::size_t total = 0;
    for (auto s : sizes) total += s;
    if (static_cast<int>(total) > budget) return std::nullopt;
    std::vector<Label> names;
    for (std::size_t i = 0; i < total; ++i) names.push_back(prefix + std::to_string(counter++));
    std::shuffle(names.begin(), names.end(), rng_);
    std::vector<LinearWord> words;
    std::size_t k = 0;
    for (auto s : sizes) {
      words.emplace_back(names.begin() + static_cast<long>(k), names.begin() + static_cast<long>(k + s));
      k += s;
    }
    return generator_corolla(m_, gen.id, MulticyclicType::from_words(words), genus_v);
  }

  std::optional<NsGraph> random_corolla(const std::string& prefix, int& counter, int budget) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      const Generator& gen = m_.generators[static_cast<std::size_t>(uniform(0, static_cast<int>(m_.generators.size()) - 1))];
      auto c = corolla_with(gen, prefix, counter, budget);
      if (c) return c;
    }
    return std::nullopt;
  }

  Label pick(const std::vector<Label>& ls) { return ls[static_cast<std::size_t>(uniform(0, static_cast<int>(ls.size()) - 1))]; }

  /// An element with at most `budget` flags and at least `min_legs` legs.
  std::optional<NsGraph> sample(const std::string& prefix, int budget, int min_legs) {
    for (int attempt = 0; attempt < 40; ++attempt) {
      int counter = 0;
      auto cur = random_corolla(prefix, counter, budget);
      if (!cur) continue;
      NsGraph g = *cur;
      for (int step = 0; step < 6 && uniform(0, 9) < 7; ++step) {
        const std::vector<Label> ls = g.leg_set();
        const int room = budget - g.flag_count();
        if (uniform(0, 1) == 0 && ls.size() >= 2 + static_cast<std::size_t>(min_legs)) {
          Label u = pick(ls);
          Label v = pick(ls);
          if (u != v) g = self_glue(g, u, v);
        } else if (room >= 1 && !ls.empty()) {
          auto c = random_corolla(prefix, counter, room);
          if (c && !c->leg_set().empty()) g = graft(g, pick(ls), *c, pick(c->leg_set()));
        }
      }
      if (static_cast<int>(g.leg_set().size()) >= min_legs) return g;
    }
    return std::nullopt;
  }

  std::map<Label, Label> fresh_relabeling(const NsGraph& g, const std::string& prefix) {
    std::vector<Label> ls = g.leg_set();
    std::vector<Label> to;
    for (std::size_t i = 0; i < ls.size(); ++i) to.push_back(prefix + std::to_string(i));
    std::shuffle(to.begin(), to.end(), rng_);
    std::map<Label, Label> rho;
    for (std::size_t i = 0; i < ls.size(); ++i) rho[ls[i]] = to[i];
    return rho;
  }

 private:
  const ModuleSpec& m_;
  std::mt19937_64& rng_;
};

inline std::vector<Label> pick_distinct(ElementSampler& s, std::vector<Label> ls, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    const int j = s.uniform(static_cast<int>(i), static_cast<int>(ls.size()) - 1);
    std::swap(ls[i], ls[static_cast<std::size_t>(j)]);
  }
  ls.resize(k);
  return ls;
}

inline void run_random(const ModuleSpec& m, const AxiomOptions& opt, AxiomReport& report) {
  std::mt19937_64 rng(opt.seed);
  ElementSampler s(m, rng);
  AxiomRunner r(m, report);
  const int B = opt.max_flags;
  for (int t = 0; t < opt.trials; ++t) {
    // Two-element axioms share the flag budget.
    auto x = s.sample("x", s.uniform(1, std::max(1, B - 1)), 1);
    if (!x) {
      ++report.skipped;
      continue;
    }
    auto y = s.sample("y", B - x->flag_count(), 1);
    if (y) {
      const Label u = s.pick(x->leg_set());
      const Label v = s.pick(y->leg_set());
      r.check_compose(*x, u, *y, v);
      r.check_vi(*x, u, *y, v, s.fresh_relabeling(*x, "rx"), s.fresh_relabeling(*y, "ry"));
      if (x->leg_set().size() >= 2 && y->leg_set().size() >= 2) {
        auto ac = pick_distinct(s, x->leg_set(), 2);
        auto bd = pick_distinct(s, y->leg_set(), 2);
        r.check_iv(*x, ac[0], ac[1], *y, bd[0], bd[1]);
      } else {
        ++report.skipped;
      }
      if (x->leg_set().size() >= 3) {
        auto acd = pick_distinct(s, x->leg_set(), 3);
        r.check_v(*x, acd[0], acd[1], acd[2], *y, v);
      } else {
        ++report.skipped;
      }
    } else {
      ++report.skipped;
    }
    if (x->leg_set().size() >= 2) {
      auto uv = pick_distinct(s, x->leg_set(), 2);
      r.check_contract_arity(*x, uv[0], uv[1]);
      r.check_vii(*x, uv[0], uv[1], s.fresh_relabeling(*x, "rx"));
    }
    // (iii) wants four legs on one element.
    if (auto w = s.sample("w", B, 4)) {
      auto abcd = pick_distinct(s, w->leg_set(), 4);
      r.check_iii(*w, abcd[0], abcd[1], abcd[2], abcd[3]);
    } else {
      ++report.skipped;
    }
    // (ii) splits the budget three ways.
    auto x2 = s.sample("x", std::max(1, B / 3), 1);
    auto y2 = x2 ? s.sample("y", B / 3, 2) : std::nullopt;
    auto z2 = y2 ? s.sample("z", B - x2->flag_count() - y2->flag_count(), 1) : std::nullopt;
    if (z2) {
      auto bc = pick_distinct(s, y2->leg_set(), 2);
      r.check_ii(*x2, s.pick(x2->leg_set()), *y2, bc[0], bc[1], *z2, s.pick(z2->leg_set()));
    } else {
      ++report.skipped;
    }
  }
}

// Small elements up to iso: generator corollas, their single self-gluings and
// the grafts of two corollas, all with at most `limit` flags.
inline std::vector<NsGraph> small_pool(const ModuleSpec& m, const std::string& prefix, int limit) {
  std::vector<NsGraph> corollas;
  for (const auto& gen : m.generators) {
    std::vector<std::vector<std::size_t>> shapes;
    if (gen.terminal) {
      for (int k = 1; k <= limit; ++k) shapes.push_back({static_cast<std::size_t>(k)});
    } else if (m.symmetric) {
      shapes.push_back({gen.arity.stype.labels().size()});
    } else {
      shapes.push_back(gen.arity.stype.shape());
    }
    for (const auto& sh : shapes) {
      std::size_t total = 0;
      for (auto s : sh) total += s;
      if (static_cast<int>(total) > limit) continue;
      std::vector<LinearWord> words;
      int c = 0;
      for (auto s : sh) {
        LinearWord w;
        for (std::size_t i = 0; i < s; ++i) w.push_back(prefix + std::to_string(c++));
        words.push_back(std::move(w));
      }
      corollas.push_back(
          generator_corolla(m, gen.id, MulticyclicType::from_words(words), gen.terminal ? 0 : gen.arity.g));
    }
  }
  std::map<GraphClass, NsGraph> out;
  auto add = [&](const NsGraph& g) {
    if (g.flag_count() <= limit) out.emplace(canonical(g), g);
  };
  for (const auto& c : corollas) {
    add(c);
    const auto ls = c.leg_set();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      for (std::size_t j = i + 1; j < ls.size(); ++j) add(self_glue(c, ls[i], ls[j]));
    }
  }
  for (const auto& a : corollas) {
    for (const auto& b0 : corollas) {
      if (a.flag_count() + b0.flag_count() > limit) continue;
      std::map<Label, Label> shift;
      for (const auto& l : b0.leg_set()) shift[l] = prefix + "'" + l.substr(prefix.size());
      NsGraph b = relabel_legs(b0, shift);
      for (const auto& u : a.leg_set()) {
        for (const auto& v : b.leg_set()) add(graft(a, u, b, v));
      }
    }
  }
  std::vector<NsGraph> pool;
  for (auto& [cls, g] : out) pool.push_back(std::move(g));
  return pool;
}

inline std::map<Label, Label> shifted(const NsGraph& g, const std::string& prefix) {
  std::map<Label, Label> rho;
  const auto ls = g.leg_set();
  // Reverse order so the relabeling is not monotone.
  for (std::size_t i = 0; i < ls.size(); ++i) rho[ls[i]] = prefix + std::to_string(ls.size() - 1 - i);
  return rho;
}

inline void run_exhaustive(const ModuleSpec& m, int limit, AxiomReport& report) {
  AxiomRunner r(m, report);
  const auto px = small_pool(m, "x", limit);
  const auto py = small_pool(m, "y", limit);
  const auto pz = small_pool(m, "z", limit);
  for (const auto& x : px) {
    const auto lx = x.leg_set();
    for (std::size_t i = 0; i < lx.size(); ++i) {
      for (std::size_t j = 0; j < lx.size(); ++j) {
        if (i == j) continue;
        if (i < j) {
          r.check_contract_arity(x, lx[i], lx[j]);
          r.check_vii(x, lx[i], lx[j], shifted(x, "r"));
        }
        for (std::size_t k = 0; k < lx.size(); ++k) {
          for (std::size_t l = k + 1; l < lx.size(); ++l) {
            if (k == i || k == j || l == i || l == j || i > j) continue;
            r.check_iii(x, lx[i], lx[j], lx[k], lx[l]);
          }
        }
      }
    }
    for (const auto& y : py) {
      if (x.flag_count() + y.flag_count() > limit) continue;
      const auto ly = y.leg_set();
      for (const auto& u : lx) {
        for (const auto& v : ly) {
          r.check_compose(x, u, y, v);
          r.check_vi(x, u, y, v, shifted(x, "rx"), shifted(y, "ry"));
          for (const auto& c : lx) {
            if (c == u) continue;
            for (const auto& d : ly) {
              if (d != v) r.check_iv(x, u, c, y, v, d);
            }
            for (const auto& d : lx) {
              if (d != u && d != c && c < d) r.check_v(x, u, c, d, y, v);
            }
          }
        }
      }
      for (const auto& z : pz) {
        if (x.flag_count() + y.flag_count() + z.flag_count() > limit) continue;
        for (const auto& a : lx) {
          for (const auto& b : ly) {
            for (const auto& c : ly) {
              if (b == c) continue;
              for (const auto& d : z.leg_set()) r.check_ii(x, a, y, b, c, z, d);
            }
          }
        }
      }
    }
  }
}

// The interchange instance where a naive single-order definition breaks:
// x = (x v1 z u1), y = (y u2 v2) glued at one pair and contracted at the other.
inline void run_dead_end(const ModuleSpec& m, AxiomReport& report) {
  const Generator* term = nullptr;
  for (const auto& g : m.generators) {
    if (g.terminal) term = &g;
  }
  if (!term || m.symmetric) return;
  NsGraph x = generator_corolla(m, term->id, MulticyclicType({CyclicWord({"x", "v1", "z", "u1"})}), 0);
  NsGraph y = generator_corolla(m, term->id, MulticyclicType({CyclicWord({"y", "u2", "v2"})}), 0);
  NsGraph lhs = contract_free(compose_free(x, "v1", y, "v2"), "u1", "u2");
  NsGraph rhs = contract_free(compose_free(x, "u1", y, "u2"), "v1", "v2");
  AxiomRunner r(m, report);
  r.expect_equal("dead-end", lhs, rhs, "xi_u1u2(x o_v1v2 y) vs xi_v1v2(x o_u1u2 y)");
  const TypedArity want{MulticyclicType({CyclicWord({"x", "y"}), CyclicWord({"z"})}), 1};
  r.expect_arity("dead-end", lhs, want, "dead-end arity");
}

}  // namespace detail

inline AxiomReport check_axioms(const ModuleSpec& m, const AxiomOptions& opt = {}) {
  m.require_valid();
  AxiomReport report;
  report.seed = opt.seed;
  report.trials = opt.trials;
  report.max_flags = opt.max_flags;
  report.exhaustive_flags = opt.exhaustive_flags;
  detail::run_dead_end(m, report);
  detail::run_random(m, opt, report);
  if (opt.exhaustive_flags > 0) detail::run_exhaustive(m, opt.exhaustive_flags, report);
  return report;
}

}  // namespace nsmod
