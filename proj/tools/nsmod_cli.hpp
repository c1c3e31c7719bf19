#pragma once

// Command-line front end. run() never calls exit() so it can be driven from
// tests with string streams.
//
// Exit codes: 0 success, 1 usage or domain error, 2 verification failure,
// 3 inconclusive verification.

#include <deque>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsmod/nsmod.hpp"

namespace nsmod::cli {

using io::Json;

enum Exit { kOk = 0, kError = 1, kFailed = 2, kInconclusive = 3 };

namespace detail {

// Inline JSON when the argument starts with '{', "-" for stdin, else a path.
inline std::string read_source(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + arg + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline NsGraph load_graph(const std::string& arg) { return io::parse_graph(read_source(arg)); }

inline ModuleSpec load_module(const std::string& arg) {
  if (arg == "terminal") return ModuleSpec::terminal(false);
  if (arg == "terminal-symmetric") return ModuleSpec::terminal(true);
  try {
    return io::module_from_json(Json::parse(read_source(arg)));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid module JSON: ") + e.what());
  }
}

inline bool is_type_text(const std::string& s) {
  auto p = s.find_first_not_of(" \t");
  return p != std::string::npos && s[p] == '{';
}

inline Json word_json(const CyclicWord& w) { return Json(w.repr()); }

inline Json diagnostics_json(const std::vector<Diagnostic>& ds) {
  Json arr = Json::array();
  for (const auto& d : ds) arr.push_back(d.message);
  return arr;
}

inline Json faces_json(const NsGraph& g) {
  Json arr = Json::array();
  for (const auto& f : faces(g)) {
    Json names = Json::array();
    for (int h : f.flags) names.push_back(g.flags[h]);
    arr.push_back(names);
  }
  return arr;
}

}  // namespace detail

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Non-symmetric modular operads: cyclic orders, graphs, free operads and envelopes", "nsmod"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format_, "Output format")->check(CLI::IsMember({"text", "json"}));
    build(app);
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n" << app.help();
      return kError;
    }
    try {
      return action_();
    } catch (const Error& e) {
      if (json()) {
        out_ << Json{{"error", to_string(e.code())}, {"message", e.detail()}}.dump() << "\n";
      } else {
        err_ << "error: " << to_string(e.code()) << ": " << e.detail() << "\n";
      }
      return kError;
    }
  }

 private:
  bool json() const { return format_ == "json"; }

  void emit(const Json& j, const std::string& text) {
    if (json()) {
      out_ << j.dump() << "\n";
    } else {
      out_ << text << "\n";
    }
  }

  void emit_graph(const NsGraph& g) { out_ << io::graph_to_json(g).dump() << "\n"; }

  // Option storage for one subcommand; CLI11 writes defaults at definition
  // time, so subcommands must not share variables.
  struct Vars {
    std::string s1, s2, l1, l2;
    int i1 = 0, i2 = 0, i3 = 0;
    bool flag = false;
    std::uint64_t seed = kDefaultSeed;
  };

  CLI::App* add(CLI::App* parent, const std::string& name, const std::string& help) {
    cur_ = &vars_.emplace_back();
    return parent->add_subcommand(name, help);
  }

  template <class F>
  void on(CLI::App* sub, F f) {
    sub->callback([this, f] { action_ = f; });
  }

  void build(CLI::App& app) {
    build_orders(app);
    build_graphs(app);
    build_enumerate(app);
    build_free(app);
    build_axioms(app);
    build_envelope(app);
    build_dihedral(app);
  }

  // ---- orders -----------------------------------------------------------

  void build_orders(CLI::App& app) {
    auto* canon = add(&app, "canon", "Canonical rotation of a word `(a b c)` or type `{(a b) ()}`");
    canon->add_option("expr", cur_->s1, "Word or type")->required();
    on(canon, [this, v = cur_] {
      if (detail::is_type_text(v->s1)) {
        MulticyclicType t = text::parse_type(v->s1);
        emit(io::type_to_json(t), text::format(t));
      } else {
        CyclicWord w = canon_cyclic(text::parse_linear_word(v->s1));
        emit(detail::word_json(w), text::format(w));
      }
      return kOk;
    });

    auto* req = add(&app, "rotation-equal", "Whether two linear words are rotations of each other");
    req->add_option("first", cur_->s1)->required();
    req->add_option("second", cur_->s2)->required();
    on(req, [this, v = cur_] {
      const bool eq = rotation_equal(text::parse_linear_word(v->s1), text::parse_linear_word(v->s2));
      emit(Json(eq), eq ? "true" : "false");
      return kOk;
    });

    auto* merge = add(&app, "merge", "Pancake merge of two words (or types) at u and v");
    merge->add_option("first", cur_->s1)->required();
    merge->add_option("u", cur_->l1)->required();
    merge->add_option("second", cur_->s2)->required();
    merge->add_option("v", cur_->l2)->required();
    on(merge, [this, v = cur_] {
      if (detail::is_type_text(v->s1) || detail::is_type_text(v->s2)) {
        MulticyclicType t = mc_merge(text::parse_type(v->s1), v->l1, text::parse_type(v->s2), v->l2);
        emit(io::type_to_json(t), text::format(t));
      } else {
        CyclicWord w = merge_cyclic(text::parse_cyclic(v->s1), v->l1, text::parse_cyclic(v->s2), v->l2);
        emit(detail::word_json(w), text::format(w));
      }
      return kOk;
    });

    auto* cut = add(&app, "cut", "Cut a word at u and v into two intervals, or a type at u and v");
    cut->add_option("expr", cur_->s1)->required();
    cut->add_option("u", cur_->l1)->required();
    cut->add_option("v", cur_->l2)->required();
    on(cut, [this, v = cur_] {
      if (detail::is_type_text(v->s1)) {
        MulticyclicType t = mc_cut(text::parse_type(v->s1), v->l1, v->l2);
        emit(io::type_to_json(t), text::format(t));
      } else {
        auto [a, b] = cut_cyclic(text::parse_cyclic(v->s1), v->l1, v->l2);
        emit(Json::array({detail::word_json(a), detail::word_json(b)}), text::format(a) + " " + text::format(b));
      }
      return kOk;
    });

    auto* geo = add(&app, "geometric", "Geometricity of an arity `{(a b) ()};g`");
    geo->add_option("arity", cur_->s1)->required();
    on(geo, [this, v = cur_] {
      TypedArity a = text::parse_arity(v->s1);
      const bool ok = is_geometric(a);
      Json j{{"geometric", ok}, {"b", a.stype.b()}, {"g", a.g}};
      std::string t = ok ? "true G=" + std::to_string(geometric_genus(a)) : "false";
      if (ok) j["G"] = geometric_genus(a);
      emit(j, t);
      return kOk;
    });
  }

  // ---- graphs -----------------------------------------------------------

  void build_graphs(CLI::App& app) {
    auto* graph = add(&app, "graph", "Queries on a graph given as JSON (inline, file or -)");
    graph->require_subcommand(1);

    auto* validate_cmd = add(graph, "validate", "Structural checks");
    validate_cmd->add_option("graph", cur_->s1)->required();
    on(validate_cmd, [this, v = cur_] {
      auto ds = validate(detail::load_graph(v->s1));
      std::string t = ds.empty() ? "ok" : "";
      for (std::size_t i = 0; i < ds.size(); ++i) t += (i ? "\n" : "") + ds[i].message;
      emit(Json{{"valid", ds.empty()}, {"diagnostics", detail::diagnostics_json(ds)}}, t);
      return ds.empty() ? kOk : kError;
    });

    auto simple = [&](const char* name, const char* help, auto fn) {
      auto* c = add(graph, name, help);
      c->add_option("graph", cur_->s1)->required();
      on(c, [this, fn, v = cur_] {
        fn(detail::load_graph(v->s1));
        return kOk;
      });
    };
    simple("betti", "First Betti number", [this](const NsGraph& g) {
      emit(Json(betti(g)), std::to_string(betti(g)));
    });
    simple("faces", "Oriented edge cycles (flag names)", [this](const NsGraph& g) {
      Json j = detail::faces_json(g);
      std::string t;
      for (const auto& f : j) {
        LinearWord w = f.get<LinearWord>();
        t += (t.empty() ? "" : "\n") + text::format(w);
      }
      emit(j, t);
    });
    simple("type", "Induced multicyclic order on the legs", [this](const NsGraph& g) {
      MulticyclicType t = leg_type(g);
      emit(io::type_to_json(t), text::format(t));
    });
    simple("genus", "Total genus", [this](const NsGraph& g) { emit(Json(genus(g)), std::to_string(genus(g))); });
    simple("arity", "Leg type and genus", [this](const NsGraph& g) {
      TypedArity a = arity(g);
      emit(io::arity_to_json(a), text::format(a));
    });
    simple("geometric", "Whether every vertex is geometric", [this](const NsGraph& g) {
      const bool ok = is_geometric_graph(g);
      emit(Json(ok), ok ? "true" : "false");
    });
    simple("canon", "Canonical class and representative", [this](const NsGraph& g) {
      Canonized c = canonize(g);
      if (json()) {
        emit(Json{{"class", c.cls.encoding}, {"graph", io::graph_to_json(c.graph)}}, "");
      } else {
        out_ << c.cls.encoding << "\n" << io::dump_graph(c.graph) << "\n";
      }
    });
    simple("normal-form", "Envelope normal form of a terminal-decorated graph", [this](const NsGraph& g) {
      EnvelopeClass c = normal_form(g);
      emit(io::arity_to_json(c.arity), text::format(c.arity));
    });

    auto* iso = add(graph, "iso", "Whether two graphs are isomorphic");
    iso->add_option("first", cur_->s1)->required();
    iso->add_option("second", cur_->s2)->required();
    on(iso, [this, v = cur_] {
      const bool eq = are_isomorphic(detail::load_graph(v->s1), detail::load_graph(v->s2));
      emit(Json(eq), eq ? "true" : "false");
      return kOk;
    });

    auto* along = add(graph, "contract-along", "Fold a graph through the terminal or free operad");
    along->add_option("graph", cur_->s1)->required();
    along->add_option("--operad", cur_->s2, "terminal or free")->check(CLI::IsMember({"terminal", "free"}))->default_val("terminal");
    on(along, [this, v = cur_] {
      NsGraph g = detail::load_graph(v->s1);
      if (v->s2 == "free") {
        FreeEvaluator ev;
        emit_graph(contract_along(g, ev));
      } else {
        TerminalEvaluator ev;
        TypedArity a = contract_along(g, ev);
        emit(io::arity_to_json(a), text::format(a));
      }
      return kOk;
    });

    auto* cor = add(&app, "corolla", "One-vertex graph with the given type as its blocks");
    cor->add_option("type", cur_->s1)->required();
    cor->add_option("--genus", cur_->i1)->default_val(0);
    cor->add_option("--tag", cur_->l1)->default_val("");
    cor->add_flag("--symmetric", cur_->flag);
    on(cor, [this, v = cur_] {
      MulticyclicType t = text::parse_type(v->s1);
      emit_graph(v->flag ? sym_corolla(t.labels(), v->i1, v->l1) : corolla(t, v->i1, v->l1));
      return kOk;
    });

    auto* graft_cmd = add(&app, "graft", "Join leg u of the first graph to leg v of the second");
    graft_cmd->add_option("first", cur_->s1)->required();
    graft_cmd->add_option("u", cur_->l1)->required();
    graft_cmd->add_option("second", cur_->s2)->required();
    graft_cmd->add_option("v", cur_->l2)->required();
    on(graft_cmd, [this, v = cur_] {
      emit_graph(graft(detail::load_graph(v->s1), v->l1, detail::load_graph(v->s2), v->l2));
      return kOk;
    });

    auto* glue = add(&app, "self-glue", "Join two legs of one graph");
    glue->add_option("graph", cur_->s1)->required();
    glue->add_option("u", cur_->l1)->required();
    glue->add_option("v", cur_->l2)->required();
    on(glue, [this, v = cur_] {
      emit_graph(self_glue(detail::load_graph(v->s1), v->l1, v->l2));
      return kOk;
    });

    auto* ce = add(&app, "contract-edge", "Contract the non-loop edge containing a flag");
    ce->add_option("graph", cur_->s1)->required();
    ce->add_option("flag", cur_->l1)->required();
    on(ce, [this, v = cur_] {
      emit_graph(contract_edge(detail::load_graph(v->s1), v->l1));
      return kOk;
    });

    auto* cl = add(&app, "contract-loop", "Contract the loop containing a flag");
    cl->add_option("graph", cur_->s1)->required();
    cl->add_option("flag", cur_->l1)->required();
    on(cl, [this, v = cur_] {
      emit_graph(contract_loop(detail::load_graph(v->s1), v->l1));
      return kOk;
    });
  }

  // ---- enumeration ------------------------------------------------------

  void build_enumerate(CLI::App& app) {
    auto* en = add(&app, "enumerate", "Enumerate graph classes or types");
    en->require_subcommand(1);

    auto* gr = add(en, "graphs", "Graph classes with the given legs, genus and vertex bound");
    gr->add_option("--legs", cur_->s1, "Comma separated leg labels")->default_val("");
    gr->add_option("--g", cur_->i1)->required();
    gr->add_option("--vmax", cur_->i2)->required();
    gr->add_flag("--symmetric", cur_->flag);
    on(gr, [this, v = cur_] {
      auto all = enumerate_graphs(text::parse_label_list(v->s1), v->i1, v->i2, VertexConstraint::ribbon(), v->flag);
      if (json()) {
        Json arr = Json::array();
        for (const auto& e : all) arr.push_back(io::graph_to_json(e.graph));
        emit(Json{{"count", all.size()}, {"graphs", arr}}, "");
      } else {
        out_ << all.size() << "\n";
        for (const auto& e : all) out_ << e.cls.encoding << "\n";
      }
      return kOk;
    });

    auto* ty = add(en, "types", "Geometric multicyclic types on the labels in genus g");
    ty->add_option("--labels", cur_->s1)->default_val("");
    ty->add_option("--g", cur_->i1)->required();
    on(ty, [this, v = cur_] {
      auto all = enumerate_types(text::parse_label_list(v->s1), v->i1);
      if (json()) {
        Json arr = Json::array();
        for (const auto& t : all) arr.push_back(io::type_to_json(t));
        emit(Json{{"count", all.size()}, {"types", arr}}, "");
      } else {
        out_ << all.size() << "\n";
        for (const auto& t : all) out_ << text::format(t) << "\n";
      }
      return kOk;
    });

    auto* count = add(&app, "count", "Component sizes of the associative and commutative envelopes");
    count->require_subcommand(1);
    for (const char* which : {"mod-ass", "mod-com"}) {
      auto* c = add(count, which, "");
      c->add_option("--n", cur_->i1)->required();
      c->add_option("--g", cur_->i2)->required();
      const bool ass = std::string(which) == "mod-ass";
      on(c, [this, ass, v = cur_] {
        const std::size_t k = ass ? count_mod_ass(v->i1, v->i2) : count_mod_com(v->i1, v->i2);
        emit(Json{{"n", v->i1}, {"g", v->i2}, {"count", k}}, std::to_string(k));
        return kOk;
      });
    }

    auto* surf = add(&app, "surface", "Surface signature of an envelope class");
    surf->add_option("--class", cur_->s1, "Arity such as `{(a b) ()};1`")->required();
    on(surf, [this, v = cur_] {
      SurfaceSignature s = surface_signature({text::parse_arity(v->s1)});
      Json bs = Json::array();
      for (const auto& b : s.boundaries) bs.push_back(b.repr());
      emit(Json{{"G", s.G}, {"b", s.boundaries.size()}, {"boundaries", bs}}, format(s));
      return kOk;
    });
  }

  // ---- free operad ------------------------------------------------------

  void build_free(CLI::App& app) {
    auto* fr = add(&app, "free", "Free operad over a module");
    fr->require_subcommand(1);

    auto* comp = add(fr, "component", "Elements of a given arity with at most vmax vertices");
    comp->add_option("--module", cur_->s2, "terminal, terminal-symmetric, or module JSON")->default_val("terminal");
    comp->add_option("--type", cur_->s1, "Arity `{(a b)};g` (genus may also come from --g)")->required();
    comp->add_option("--g", cur_->i1)->default_val(-1);
    comp->add_option("--vmax", cur_->i2)->required();
    on(comp, [this, v = cur_] {
      ModuleSpec m = detail::load_module(v->s2);
      TypedArity t = text::parse_arity(v->s1, 0);
      if (v->i1 >= 0) t.g = v->i1;
      auto all = free_component(m, t, v->i2);
      if (json()) {
        Json arr = Json::array();
        for (const auto& e : all) arr.push_back(io::graph_to_json(e.graph));
        emit(Json{{"count", all.size()}, {"elements", arr}}, "");
      } else {
        out_ << all.size() << "\n";
        for (const auto& e : all) out_ << e.cls.encoding << "\n";
      }
      return kOk;
    });

    auto* compose = add(fr, "compose", "x o_uv y in the free operad");
    compose->add_option("x", cur_->s1)->required();
    compose->add_option("u", cur_->l1)->required();
    compose->add_option("y", cur_->s2)->required();
    compose->add_option("v", cur_->l2)->required();
    on(compose, [this, v = cur_] {
      emit_graph(compose_free(detail::load_graph(v->s1), v->l1, detail::load_graph(v->s2), v->l2));
      return kOk;
    });

    auto* contract = add(fr, "contract", "xi_uv x in the free operad");
    contract->add_option("x", cur_->s1)->required();
    contract->add_option("u", cur_->l1)->required();
    contract->add_option("v", cur_->l2)->required();
    on(contract, [this, v = cur_] {
      emit_graph(contract_free(detail::load_graph(v->s1), v->l1, v->l2));
      return kOk;
    });
  }

  void build_axioms(CLI::App& app) {
    auto* ax = add(&app, "axioms", "Axiom checks on the free operad");
    ax->require_subcommand(1);
    auto* check = add(ax, "check", "Randomized and exhaustive axiom checks");
    check->add_option("--module", cur_->s2, "terminal, terminal-symmetric, or module JSON")->default_val("terminal");
    check->add_option("--seed", cur_->seed)->default_val(kDefaultSeed);
    check->add_option("--trials", cur_->i1)->default_val(200);
    check->add_option("--max-flags", cur_->i2)->default_val(12);
    check->add_option("--exhaustive-flags", cur_->i3)->default_val(8);
    on(check, [this, v = cur_] {
      ModuleSpec m = detail::load_module(v->s2);
      AxiomReport r = check_axioms(m, {v->i2, v->i1, v->seed, v->i3});
      if (json()) {
        emit(io::axioms_to_json(r), "");
      } else {
        out_ << (r.ok() ? "pass" : "fail") << " seed=" << r.seed << " checked=" << r.total_checked()
             << " failures=" << r.failures.size() << "\n";
        for (const auto& [k, c] : r.checked) out_ << "  " << k << " " << c << "\n";
        for (const auto& f : r.failures) out_ << "  FAIL " << f.axiom << ": " << f.detail << "\n";
      }
      return r.ok() ? kOk : kFailed;
    });
  }

  void build_envelope(CLI::App& app) {
    auto* env = add(&app, "envelope", "Envelope normal forms and verification");
    env->require_subcommand(1);
    auto* verify = add(env, "verify", "Move-closure components against realized types");
    verify->add_option("--n", cur_->i1)->required();
    verify->add_option("--g", cur_->i2)->required();
    verify->add_option("--vmax", cur_->i3)->required();
    verify->add_option("--mode", cur_->s1)->check(CLI::IsMember({"nonsigma", "symmetric"}))->default_val("nonsigma");
    on(verify, [this, v = cur_] {
      EnvelopeReport r =
          verify_envelope(v->i1, v->i2, v->i3, v->s1 == "symmetric" ? EnvelopeMode::Symmetric : EnvelopeMode::NonSigma);
      if (json()) {
        emit(io::envelope_to_json(r), "");
      } else {
        out_ << to_string(r.status) << " mode=" << to_string(r.mode) << " n=" << r.n << " g=" << r.g
             << " vmax=" << r.vmax << " graphs=" << r.graphs << " components=" << r.components
             << " types=" << r.types << " expected_types=" << r.expected_types << "\n";
      }
      switch (r.status) {
        case VerifyStatus::Pass:
          return kOk;
        case VerifyStatus::Fail:
          return kFailed;
        case VerifyStatus::Inconclusive:
          return kInconclusive;
      }
      return kFailed;
    });

    auto* nf = add(env, "normal-form", "Normal form of a terminal-decorated graph");
    nf->add_option("graph", cur_->s1)->required();
    on(nf, [this, v = cur_] {
      EnvelopeClass c = normal_form(detail::load_graph(v->s1));
      emit(io::arity_to_json(c.arity), text::format(c.arity));
      return kOk;
    });
  }

  void build_dihedral(CLI::App& app) {
    auto* di = add(&app, "dihedral", "Arrow-decorated cog wheels");
    di->require_subcommand(1);

    auto* en = add(di, "enumerate", "All wheels on the labels");
    en->add_option("--labels", cur_->s1)->required();
    on(en, [this, v = cur_] {
      auto all = enumerate_wheels(text::parse_label_list(v->s1));
      if (json()) {
        Json arr = Json::array();
        for (const auto& w : all) arr.push_back(format(w));
        emit(Json{{"count", all.size()}, {"wheels", arr}}, "");
      } else {
        out_ << all.size() << "\n";
        for (const auto& w : all) out_ << format(w) << "\n";
      }
      return kOk;
    });

    auto* cnt = add(di, "count", "Number of wheels on n labels");
    cnt->add_option("--n", cur_->i1)->required();
    cnt->add_flag("--enumerate", cur_->flag, "Count by enumeration instead of the closed form");
    on(cnt, [this, v = cur_] {
      const std::uint64_t k = v->flag ? enumerate_wheels(default_labels(v->i1)).size() : count_wheels(v->i1);
      emit(Json{{"n", v->i1}, {"count", k}}, std::to_string(k));
      return kOk;
    });

    auto* comp = add(di, "compose", "Glue tooth u of x to tooth v of y, e.g. `(a> u<)`");
    comp->add_option("x", cur_->s1)->required();
    comp->add_option("u", cur_->l1)->required();
    comp->add_option("y", cur_->s2)->required();
    comp->add_option("v", cur_->l2)->required();
    on(comp, [this, v = cur_] {
      DihedralWheel w = compose_wheels(parse_wheel(v->s1), v->l1, parse_wheel(v->s2), v->l2);
      emit(Json(format(w)), format(w));
      return kOk;
    });

    auto* chk = add(di, "check", "Spot-check composition on random wheels");
    chk->add_option("--trials", cur_->i1)->default_val(200);
    chk->add_option("--seed", cur_->seed)->default_val(kDefaultSeed);
    on(chk, [this, v = cur_] {
      WheelAxiomReport r = check_wheel_axioms(v->i1, v->seed);
      Json j{{"seed", r.seed}, {"trials", r.trials}};
      std::string t = std::string(r.ok() ? "pass" : "fail") + " seed=" + std::to_string(r.seed);
      for (const auto& [k, c] : r.checked) {
        j["failed"][k] = r.failed[k];
        t += "\n  " + k + " " + std::to_string(c) + " checked, " + std::to_string(r.failed[k]) + " failed";
      }
      j["pass"] = r.ok();
      emit(j, t);
      return r.ok() ? kOk : kFailed;
    });

    auto* sig = add(di, "signatures", "Triples (m, u, b) with g = 2m + b + u - 1, b >= 1");
    sig->add_option("--g", cur_->i1)->required();
    on(sig, [this, v = cur_] {
      auto ts = signature_triples(v->i1);
      Json arr = Json::array();
      std::string t = std::to_string(ts.size());
      for (const auto& s : ts) {
        arr.push_back(Json{{"m", s.m}, {"u", s.u}, {"b", s.b}});
        t += "\nm=" + std::to_string(s.m) + " u=" + std::to_string(s.u) + " b=" + std::to_string(s.b);
      }
      emit(Json{{"g", v->i1}, {"count", ts.size()}, {"triples", arr}}, t);
      return kOk;
    });
  }

  std::ostream& out_;
  std::ostream& err_;
  std::string format_ = "text";
  std::function<int()> action_;
  std::deque<Vars> vars_;
  Vars* cur_ = nullptr;
};

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Cli cli(out, err);
  return cli.run(argc, argv);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"nsmod"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace nsmod::cli
