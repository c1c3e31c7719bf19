#pragma once

// JSON mirrors of types and graphs.
//
//   type:  {"components":[["a","b","c"],["d"],[]]}
//   graph: {"flags":[...], "involution":{"h":"h'",...},
//           "vertices":[{"genus":0,"blocks":[["h1","h2"],[]]}],
//           "legs":{"h3":"a"}}
//   module: {"mode":"nonsigma","generators":[{"id":"m","type":{...},"genus":0}]}
//           where {"id":"*","terminal":true} stands for the terminal generator.
//
// Graphs serialize with keys in that order, flags in graph order, so that
// dump(parse(s)) == s for any s produced by graph_to_json.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsmod/axioms.hpp"
#include "nsmod/envelope.hpp"
#include "nsmod/graph.hpp"

namespace nsmod::io {

using Json = nlohmann::ordered_json;

inline Json type_to_json(const MulticyclicType& t) {
  Json comps = Json::array();
  for (const auto& c : t.components()) comps.push_back(c.repr());
  return Json{{"components", comps}};
}

inline MulticyclicType type_from_json(const Json& j) {
  try {
    std::vector<LinearWord> words;
    for (const auto& c : j.at("components")) words.push_back(c.get<LinearWord>());
    if (words.empty()) throw Error(ErrorCode::ParseError, "type needs at least one component");
    return MulticyclicType::from_words(words);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad type JSON: ") + e.what());
  }
}

inline Json arity_to_json(const TypedArity& a) {
  Json j = type_to_json(a.stype);
  j["genus"] = a.g;
  return j;
}

inline Json graph_to_json(const NsGraph& g) {
  Json j;
  j["flags"] = g.flags;
  Json inv = Json::object();
  for (int f = 0; f < g.flag_count(); ++f) inv[g.flags[f]] = g.flags[g.sigma[f]];
  j["involution"] = inv;
  Json verts = Json::array();
  for (const auto& v : g.vertices) {
    Json jv;
    jv["genus"] = v.genus;
    Json blocks = Json::array();
    for (const auto& bl : v.blocks) {
      Json names = Json::array();
      for (int f : bl) names.push_back(g.flags[f]);
      blocks.push_back(names);
    }
    jv["blocks"] = blocks;
    if (!v.tag.empty()) jv["tag"] = v.tag;
    verts.push_back(jv);
  }
  j["vertices"] = verts;
  Json legs = Json::object();
  for (int f : g.legs()) legs[g.flags[f]] = g.label(f);
  j["legs"] = legs;
  if (g.symmetric) j["symmetric"] = true;
  return j;
}

/// Parses the graph layout; structural validity is left to validate().
inline NsGraph graph_from_json(const Json& j) {
  try {
    NsGraph g;
    g.flags = j.at("flags").get<std::vector<Label>>();
    std::map<Label, int> index;
    for (int f = 0; f < g.flag_count(); ++f) {
      if (!index.emplace(g.flags[f], f).second) {
        throw Error(ErrorCode::ParseError, "flag '" + g.flags[f] + "' listed twice");
      }
    }
    auto lookup = [&](const Label& name) {
      auto it = index.find(name);
      if (it == index.end()) throw Error(ErrorCode::ParseError, "unknown flag '" + name + "'");
      return it->second;
    };
    g.sigma.assign(g.flags.size(), -1);
    const Json& inv = j.at("involution");
    for (auto it = inv.begin(); it != inv.end(); ++it) {
      g.sigma[lookup(it.key())] = lookup(it.value().get<Label>());
    }
    for (int f = 0; f < g.flag_count(); ++f) {
      if (g.sigma[f] < 0) throw Error(ErrorCode::ParseError, "involution misses flag '" + g.flags[f] + "'");
    }
    for (const auto& jv : j.at("vertices")) {
      Vertex v;
      v.genus = jv.value("genus", 0);
      v.tag = jv.value("tag", std::string());
      for (const auto& jb : jv.at("blocks")) {
        std::vector<int> bl;
        for (const auto& name : jb) bl.push_back(lookup(name.get<Label>()));
        v.blocks.push_back(std::move(bl));
      }
      g.vertices.push_back(std::move(v));
    }
    g.symmetric = j.value("symmetric", false);
    g.leg_labels.assign(g.flags.size(), std::string());
    for (int f = 0; f < g.flag_count(); ++f) {
      if (g.sigma[f] == f) g.leg_labels[f] = g.flags[f];
    }
    if (j.contains("legs")) {
      const Json& legs = j.at("legs");
      for (auto it = legs.begin(); it != legs.end(); ++it) {
        const int f = lookup(it.key());
        if (g.sigma[f] != f) throw Error(ErrorCode::ParseError, "'" + it.key() + "' is listed as a leg but is glued");
        g.leg_labels[f] = it.value().get<Label>();
      }
    }
    return g;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad graph JSON: ") + e.what());
  }
}

inline NsGraph parse_graph(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(j);
}

inline ModuleSpec module_from_json(const Json& j) {
  try {
    ModuleSpec m;
    const std::string mode = j.value("mode", std::string("nonsigma"));
    if (mode != "nonsigma" && mode != "symmetric") throw Error(ErrorCode::ParseError, "unknown mode '" + mode + "'");
    m.symmetric = mode == "symmetric";
    for (const auto& jg : j.at("generators")) {
      Generator gen;
      gen.id = jg.at("id").get<std::string>();
      gen.terminal = jg.value("terminal", false);
      if (!gen.terminal) gen.arity = {type_from_json(jg.at("type")), jg.value("genus", 0)};
      m.generators.push_back(std::move(gen));
    }
    m.require_valid();
    return m;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad module JSON: ") + e.what());
  }
}

inline Json module_to_json(const ModuleSpec& m) {
  Json j;
  j["mode"] = m.symmetric ? "symmetric" : "nonsigma";
  Json gens = Json::array();
  for (const auto& g : m.generators) {
    Json jg;
    jg["id"] = g.id;
    if (g.terminal) {
      jg["terminal"] = true;
    } else {
      jg["type"] = type_to_json(g.arity.stype);
      jg["genus"] = g.arity.g;
    }
    gens.push_back(jg);
  }
  j["generators"] = gens;
  return j;
}

inline Json envelope_to_json(const EnvelopeReport& r) {
  Json j;
  j["n"] = r.n;
  j["g"] = r.g;
  j["vmax"] = r.vmax;
  j["graphs"] = r.graphs;
  j["components"] = r.components;
  j["types"] = r.types;
  j["pass"] = r.pass();
  j["mode"] = to_string(r.mode);
  j["status"] = to_string(r.status);
  j["expected_types"] = r.expected_types;
  j["constant"] = r.constant;
  return j;
}

inline Json axioms_to_json(const AxiomReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["max_flags"] = r.max_flags;
  j["exhaustive_flags"] = r.exhaustive_flags;
  Json checked = Json::object();
  for (const auto& [k, c] : r.checked) checked[k] = c;
  j["checked"] = checked;
  j["skipped"] = r.skipped;
  Json fails = Json::array();
  for (const auto& f : r.failures) fails.push_back(Json{{"axiom", f.axiom}, {"detail", f.detail}});
  j["failures"] = fails;
  j["pass"] = r.ok();
  return j;
}

inline std::string dump_graph(const NsGraph& g) { return graph_to_json(g).dump(); }

}  // namespace nsmod::io
