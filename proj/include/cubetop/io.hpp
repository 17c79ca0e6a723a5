#pragma once

#include <fstream>
#include <json.hpp>

#include "cubetop/cover.hpp"
#include "cubetop/fiber_ops.hpp"
#include "cubetop/gog.hpp"
#include "cubetop/small_cancellation.hpp"

namespace cubetop {

using Json = nlohmann::json;

/// Parsed input file: one document holds every block, cross-referenced by
/// string ids.
struct Document {
  std::map<std::string, ComplexPtr> complexes;
  struct MapEntry {
    std::string source, target;
    std::shared_ptr<CombinatorialMap> map;
  };
  std::map<std::string, MapEntry> maps;
  struct CoverEntry {
    std::string base;
    std::shared_ptr<CoverSpec> spec;
  };
  std::map<std::string, CoverEntry> covers;
  std::map<std::string, std::shared_ptr<GraphOfComplexes>> gogs;
  struct PresEntry {
    std::string base;
    std::shared_ptr<CubicalPresentation> pres;
  };
  std::map<std::string, PresEntry> presentations;
  std::map<std::string, std::vector<std::string>> families;  // lists of map ids
  std::vector<std::string> complex_order, map_order, cover_order, gog_order, pres_order,
      family_order;

  const std::string& only(const std::vector<std::string>& order, const std::string& kind,
                          const std::string& wanted) const {
    if (!wanted.empty()) return wanted;
    if (order.empty()) throw Error("MalformedInput", "no " + kind + " block in the input");
    return order.front();
  }

  ComplexPtr complex(const std::string& id) const {
    auto it = complexes.find(id);
    if (it == complexes.end()) throw Error("MalformedInput", "unknown complex " + id);
    return it->second;
  }
  const MapEntry& map_entry(const std::string& id) const {
    auto it = maps.find(id);
    if (it == maps.end()) throw Error("MalformedInput", "unknown map " + id);
    return it->second;
  }
  FamilyMember member(const std::string& id) const {
    const auto& e = map_entry(id);
    FamilyMember m;
    m.domain = complex(e.source);
    m.map = *e.map;
    m.name = id;
    return m;
  }
};

// ---------------------------------------------------------------------------
// Permutations in cycle notation

inline std::vector<int> parse_cycles(const std::string& s, int degree) {
  std::vector<int> perm(degree);
  for (int i = 0; i < degree; ++i) perm[i] = i;
  size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') {
      if (isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
        continue;
      }
      throw Error("MalformedInput", "cycle notation expected: " + s);
    }
    size_t close = s.find(')', pos);
    if (close == std::string::npos) throw Error("MalformedInput", "unbalanced cycle: " + s);
    std::vector<int> cycle;
    std::string inner = s.substr(pos + 1, close - pos - 1);
    size_t i = 0;
    while (i < inner.size()) {
      if (isspace(static_cast<unsigned char>(inner[i]))) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < inner.size() && isdigit(static_cast<unsigned char>(inner[j]))) ++j;
      if (i == j) throw Error("MalformedInput", "bad cycle entry: " + s);
      cycle.push_back(std::stoi(inner.substr(i, j - i)));
      i = j;
    }
    for (size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k], to = cycle[(k + 1) % cycle.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw Error("MalformedInput", "cycle entry out of range: " + s);
      perm[from] = to;
    }
    pos = close + 1;
  }
  return perm;
}

inline std::string print_cycles(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : " ") + std::to_string(j);
      first = false;
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------
// Complex block

inline Json complex_to_json(const CubeComplex& X) {
  Json j;
  j["vertices"] = X.num_vertices;
  j["edges"] = Json::array();
  for (const auto& e : X.edges) {
    Json je;
    je["tail"] = e.tail;
    je["head"] = e.head;
    if (!e.label.empty()) je["label"] = e.label;
    j["edges"].push_back(je);
  }
  j["squares"] = Json::array();
  for (const auto& s : X.squares) {
    Json b = Json::array();
    for (int k = 0; k < 4; ++k) b.push_back(Json::array({s.side[k].edge, s.side[k].rev}));
    j["squares"].push_back(Json{{"boundary", b}});
  }
  if (!X.higher.empty()) {
    j["cells"] = Json::array();
    for (const auto& c : X.higher) {
      Json jc;
      jc["dim"] = c.dim;
      jc["facets"] = Json::array();
      for (const auto& f : c.facets) {
        Json jf;
        jf["dim"] = f.cell.dim;
        jf["cell"] = f.cell.index;
        jf["perm"] = f.sym.perm;
        Json signs = Json::array();
        for (int8_t s : f.sym.sign) signs.push_back(static_cast<int>(s));
        jf["sign"] = signs;
        jc["facets"].push_back(jf);
      }
      j["cells"].push_back(jc);
    }
  }
  return j;
}

inline CubeComplex complex_from_json(const Json& j) {
  CubeComplex X;
  X.num_vertices = j.at("vertices").get<int>();
  if (j.contains("edges"))
    for (const auto& je : j.at("edges")) {
      EdgeCell e;
      e.tail = je.at("tail").get<int>();
      e.head = je.at("head").get<int>();
      if (je.contains("label")) e.label = je.at("label").get<std::string>();
      X.edges.push_back(e);
    }
  if (j.contains("squares"))
    for (const auto& js : j.at("squares")) {
      SquareCell s;
      const auto& b = js.at("boundary");
      if (b.size() != 4) throw Error("MalformedInput", "square boundary needs four sides");
      for (int k = 0; k < 4; ++k)
        s.side[k] = {b[k][0].get<int>(), b[k][1].get<bool>()};
      X.squares.push_back(s);
    }
  if (j.contains("cells"))
    for (const auto& jc : j.at("cells")) {
      HigherCell c;
      c.dim = jc.at("dim").get<int>();
      for (const auto& jf : jc.at("facets")) {
        FacetRef f;
        f.cell.dim = jf.at("dim").get<int>();
        f.cell.index = jf.at("cell").get<int>();
        f.sym.perm = jf.at("perm").get<std::vector<int>>();
        for (int s : jf.at("sign").get<std::vector<int>>())
          f.sym.sign.push_back(static_cast<int8_t>(s));
        c.facets.push_back(f);
      }
      X.higher.push_back(c);
    }
  return X;
}

// ---------------------------------------------------------------------------
// Map block

inline Json map_to_json(const CombinatorialMap& f, const std::string& source,
                        const std::string& target) {
  Json j;
  j["source"] = source;
  j["target"] = target;
  j["vertices"] = f.vertex_map;
  j["edges"] = Json::array();
  for (const auto& e : f.edge_map) j["edges"].push_back(Json::array({e.edge, e.rev}));
  if (!f.square_map.empty()) {
    j["squares"] = Json::array();
    for (const auto& s : f.square_map)
      j["squares"].push_back(Json::array({s.square, s.sym.r, s.sym.flip}));
  }
  return j;
}

inline CombinatorialMap map_from_json(const Json& j, const CubeComplex* source,
                                      const CubeComplex* target) {
  CombinatorialMap f;
  f.source = source;
  f.target = target;
  f.vertex_map = j.at("vertices").get<std::vector<int>>();
  for (const auto& je : j.at("edges")) f.edge_map.push_back({je[0].get<int>(), je[1].get<bool>()});
  if (j.contains("squares"))
    for (const auto& js : j.at("squares"))
      f.square_map.push_back(
          {js[0].get<int>(), {js[1].get<int>(), js[2].get<bool>()}});
  auto v = validate_map(f);
  if (!v.empty()) throw Error("MalformedInput", "map block: " + v.front().message);
  return f;
}

// ---------------------------------------------------------------------------
// Document

inline Document parse_document(const Json& j) {
  Document doc;
  if (j.contains("complex"))
    for (const auto& jc : j.at("complex")) {
      std::string id = jc.at("id").get<std::string>();
      auto X = complex_from_json(jc);
      auto viol = validate_complex(X);
      if (!viol.empty())
        throw Error("MalformedInput", "complex " + id + ": " + viol.front().message);
      doc.complexes[id] = make_complex(std::move(X));
      doc.complex_order.push_back(id);
    }
  if (j.contains("map"))
    for (const auto& jm : j.at("map")) {
      std::string id = jm.at("id").get<std::string>();
      Document::MapEntry e;
      e.source = jm.at("source").get<std::string>();
      e.target = jm.at("target").get<std::string>();
      e.map = std::make_shared<CombinatorialMap>(
          map_from_json(jm, doc.complex(e.source).get(), doc.complex(e.target).get()));
      doc.maps[id] = std::move(e);
      doc.map_order.push_back(id);
    }
  if (j.contains("cover"))
    for (const auto& jc : j.at("cover")) {
      std::string id = jc.at("id").get<std::string>();
      Document::CoverEntry e;
      e.base = jc.at("base").get<std::string>();
      auto spec = std::make_shared<CoverSpec>();
      spec->base = doc.complex(e.base).get();
      spec->degree = jc.at("degree").get<int>();
      spec->edge_perm.resize(spec->base->edges.size());
      for (int k = 0; k < static_cast<int>(spec->base->edges.size()); ++k) {
        std::string key = std::to_string(k);
        if (jc.at("perms").contains(key))
          spec->edge_perm[k] = parse_cycles(jc.at("perms").at(key).get<std::string>(),
                                            spec->degree);
        else
          spec->edge_perm[k] = parse_cycles("()", spec->degree);
      }
      e.spec = std::move(spec);
      doc.covers[id] = std::move(e);
      doc.cover_order.push_back(id);
    }
  if (j.contains("gog"))
    for (const auto& jg : j.at("gog")) {
      std::string id = jg.at("id").get<std::string>();
      auto G = std::make_shared<GraphOfComplexes>();
      std::map<std::string, int> vindex;
      for (const auto& jv : jg.at("vertices")) {
        GogVertex v;
        v.id = jv.at("id").get<std::string>();
        v.space = doc.complex(jv.at("space").get<std::string>());
        vindex[v.id] = static_cast<int>(G->vertices.size());
        G->vertices.push_back(std::move(v));
      }
      for (const auto& je : jg.at("edges")) {
        GogEdge e;
        e.id = je.at("id").get<std::string>();
        e.space = doc.complex(je.at("space").get<std::string>());
        e.iota_vertex = vindex.at(je.at("iota_vertex").get<std::string>());
        e.tau_vertex = vindex.at(je.at("tau_vertex").get<std::string>());
        const auto& mi = doc.map_entry(je.at("iota").get<std::string>());
        const auto& mt = doc.map_entry(je.at("tau").get<std::string>());
        e.iota = *mi.map;
        e.tau = *mt.map;
        if (e.iota.source != e.space.get() || e.tau.source != e.space.get() ||
            e.iota.target != G->vertices[e.iota_vertex].space.get() ||
            e.tau.target != G->vertices[e.tau_vertex].space.get())
          throw Error("MalformedInput", "gog edge " + e.id + " references mismatched maps");
        G->edges.push_back(std::move(e));
      }
      doc.gogs[id] = std::move(G);
      doc.gog_order.push_back(id);
    }
  if (j.contains("presentation"))
    for (const auto& jp : j.at("presentation")) {
      std::string id = jp.at("id").get<std::string>();
      Document::PresEntry e;
      e.base = jp.at("base").get<std::string>();
      auto P = std::make_shared<CubicalPresentation>();
      P->base = doc.complex(e.base);
      for (const auto& jc : jp.at("cones")) {
        Cone c;
        c.member = doc.member(jc.at("map").get<std::string>());
        if (c.member.map.target != P->base.get())
          throw Error("MalformedInput", "cone map misses the base");
        c.grade = jc.contains("grade") ? jc.at("grade").get<int>() : 1;
        P->cones.push_back(std::move(c));
      }
      e.pres = std::move(P);
      doc.presentations[id] = std::move(e);
      doc.pres_order.push_back(id);
    }
  if (j.contains("family"))
    for (const auto& jf : j.at("family")) {
      std::string id = jf.at("id").get<std::string>();
      doc.families[id] = jf.at("members").get<std::vector<std::string>>();
      doc.family_order.push_back(id);
    }
  return doc;
}

inline Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("MalformedInput", "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("MalformedInput", std::string("json parse: ") + e.what());
  }
  return parse_document(j);
}

// ---------------------------------------------------------------------------
// Canonical report output

inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

inline void write_report(const Json& body, const std::string& out_path) {
  std::string text = canonical_dump(body);
  if (out_path.empty() || out_path == "-") {
    fputs(text.c_str(), stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << text;
  }
}

}  // namespace cubetop
