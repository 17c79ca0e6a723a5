#pragma once

#include "cubetop/gog_fixtures.hpp"
#include "cubetop/io.hpp"
#include "cubetop/presentation_fixtures.hpp"

namespace cubetop::fixtures {

inline Json gog_document(const GraphOfComplexes& G, const std::string& gog_id) {
  Json doc;
  doc["schema"] = 1;
  doc["complex"] = Json::array();
  doc["map"] = Json::array();
  std::map<const CubeComplex*, std::string> ids;
  auto add_complex = [&](const ComplexPtr& p, const std::string& hint) {
    auto it = ids.find(p.get());
    if (it != ids.end()) return it->second;
    std::string id = hint;
    Json jc = complex_to_json(*p);
    jc["id"] = id;
    doc["complex"].push_back(jc);
    ids[p.get()] = id;
    return id;
  };
  Json jg;
  jg["id"] = gog_id;
  jg["vertices"] = Json::array();
  jg["edges"] = Json::array();
  for (const auto& v : G.vertices) {
    std::string sid = add_complex(v.space, v.id + "_space");
    jg["vertices"].push_back(Json{{"id", v.id}, {"space", sid}});
  }
  for (const auto& e : G.edges) {
    std::string sid = add_complex(e.space, e.id + "_space");
    std::string mi = e.id + "_iota", mt = e.id + "_tau";
    Json jmi = map_to_json(e.iota, sid, ids.at(e.iota.target));
    jmi["id"] = mi;
    doc["map"].push_back(jmi);
    Json jmt = map_to_json(e.tau, sid, ids.at(e.tau.target));
    jmt["id"] = mt;
    doc["map"].push_back(jmt);
    jg["edges"].push_back(Json{{"id", e.id},
                               {"space", sid},
                               {"iota_vertex", G.vertices[e.iota_vertex].id},
                               {"tau_vertex", G.vertices[e.tau_vertex].id},
                               {"iota", mi},
                               {"tau", mt}});
  }
  doc["gog"] = Json::array({jg});
  return doc;
}

inline Json presentation_document(const CubicalPresentation& P, const std::string& id) {
  Json doc;
  doc["schema"] = 1;
  Json jb = complex_to_json(*P.base);
  jb["id"] = "base";
  doc["complex"] = Json::array({jb});
  doc["map"] = Json::array();
  Json jp;
  jp["id"] = id;
  jp["base"] = "base";
  jp["cones"] = Json::array();
  for (size_t i = 0; i < P.cones.size(); ++i) {
    const auto& c = P.cones[i];
    std::string cid = c.member.name.empty() ? ("cone" + std::to_string(i)) : c.member.name;
    Json jc = complex_to_json(*c.member.domain);
    jc["id"] = cid + "_space";
    doc["complex"].push_back(jc);
    Json jm = map_to_json(c.member.map, cid + "_space", "base");
    jm["id"] = cid;
    doc["map"].push_back(jm);
    jp["cones"].push_back(Json{{"map", cid}, {"grade", c.grade}});
  }
  doc["presentation"] = Json::array({jp});
  // the cone maps double as a family for the Helly checks
  Json members = Json::array();
  for (size_t i = 0; i < P.cones.size(); ++i) {
    const auto& c = P.cones[i];
    members.push_back(c.member.name.empty() ? ("cone" + std::to_string(i)) : c.member.name);
  }
  doc["family"] = Json::array({Json{{"id", "cones"}, {"members", members}}});
  return doc;
}

inline Json complex_document(const CubeComplex& X, const std::string& id) {
  Json doc;
  doc["schema"] = 1;
  Json jc = complex_to_json(X);
  jc["id"] = id;
  doc["complex"] = Json::array({jc});
  return doc;
}

inline Json fixture_document(const std::string& name) {
  if (name == "circle") return complex_document(shapes::circle(), name);
  if (name == "wedge2") return complex_document(shapes::wedge2(), name);
  if (name == "c3") return complex_document(shapes::c3(), name);
  if (name == "cyc2") return complex_document(shapes::cyc(2), name);
  if (name == "cyc3") return complex_document(shapes::cyc(3), name);
  if (name == "cyc6") return complex_document(shapes::cyc(6), name);
  if (name == "torus") return complex_document(shapes::torus(), name);
  if (name == "mobius") return complex_document(shapes::mobius(), name);
  if (name == "corner3") return complex_document(shapes::corner3(), name);
  if (name == "rotation_torus") return complex_document(shapes::rotation_torus(), name);
  if (name == "subdivided_torus") return complex_document(shapes::subdivided_torus(), name);
  if (name == "interosc") {
    // the complex, the embedded triangle and the family of its edges
    Json doc = complex_document(shapes::interosc(), "interosc");
    Json tri = complex_to_json(shapes::c3());
    tri["id"] = "triangle_space";
    doc["complex"].push_back(tri);
    auto X = make_complex(shapes::interosc());
    auto T = make_complex(shapes::c3());
    CombinatorialMap incl = graph_map(T, X, {0, 1, 2}, {{0, false}, {1, false}, {2, false}});
    Json jm = map_to_json(incl, "triangle_space", "interosc");
    jm["id"] = "triangle";
    doc["map"] = Json::array({jm});
    doc["family"] = Json::array({Json{{"id", "subcomplexes"}, {"members", {"triangle"}}}});
    return doc;
  }
  if (name == "circle_deg2") {
    Json doc = complex_document(shapes::circle(), "circle");
    doc["cover"] =
        Json::array({Json{{"id", "deg2"}, {"base", "circle"}, {"degree", 2},
                          {"perms", Json{{"0", "(0 1)"}}}}});
    return doc;
  }
  if (name == "torus_deg2") {
    Json doc = complex_document(shapes::torus(), "torus");
    doc["cover"] = Json::array({Json{{"id", "deg2"},
                                     {"base", "torus"},
                                     {"degree", 2},
                                     {"perms", Json{{"0", "(0 1)"}, {"1", "()"}}}}});
    return doc;
  }
  if (name == "wedge2_deg2") {
    Json doc = complex_document(shapes::wedge2(), "wedge2");
    doc["cover"] = Json::array({Json{{"id", "deg2"},
                                     {"base", "wedge2"},
                                     {"degree", 2},
                                     {"perms", Json{{"0", "(0 1)"}, {"1", "()"}}}}});
    // a loop to elevate across the cover
    auto W = make_complex(shapes::wedge2());
    auto L = make_complex(shapes::circle());
    CombinatorialMap f = graph_map(L, W, {0}, {{0, false}});
    Json jl = complex_to_json(*L);
    jl["id"] = "loop_a_space";
    doc["complex"].push_back(jl);
    Json jm = map_to_json(f, "loop_a_space", "wedge2");
    jm["id"] = "loop_a";
    doc["map"] = Json::array({jm});
    return doc;
  }
  if (name == "ha_hb") {
    // the two loops of the wedge as a family
    Json doc = complex_document(shapes::wedge2(), "wedge2");
    auto W = make_complex(shapes::wedge2());
    doc["map"] = Json::array();
    doc["complex"].push_back([&] {
      Json j = complex_to_json(shapes::circle());
      j["id"] = "loop_a_space";
      return j;
    }());
    doc["complex"].push_back([&] {
      Json j = complex_to_json(shapes::circle("b"));
      j["id"] = "loop_b_space";
      return j;
    }());
    auto La = make_complex(shapes::circle());
    auto Lb = make_complex(shapes::circle("b"));
    Json ja = map_to_json(graph_map(La, W, {0}, {{0, false}}), "loop_a_space", "wedge2");
    ja["id"] = "loop_a";
    Json jb = map_to_json(graph_map(Lb, W, {0}, {{1, false}}), "loop_b_space", "wedge2");
    jb["id"] = "loop_b";
    doc["map"].push_back(ja);
    doc["map"].push_back(jb);
    doc["family"] = Json::array({Json{{"id", "loops"}, {"members", {"loop_a", "loop_b"}}}});
    return doc;
  }
  if (name == "ha_ha2") {
    Json doc = complex_document(shapes::wedge2(), "wedge2");
    auto W = make_complex(shapes::wedge2());
    auto La = make_complex(shapes::circle());
    auto L2 = make_complex(shapes::cyc(2));
    doc["complex"].push_back([&] {
      Json j = complex_to_json(*La);
      j["id"] = "loop_a_space";
      return j;
    }());
    doc["complex"].push_back([&] {
      Json j = complex_to_json(*L2);
      j["id"] = "cyc2_space";
      return j;
    }());
    Json ja = map_to_json(graph_map(La, W, {0}, {{0, false}}), "loop_a_space", "wedge2");
    ja["id"] = "loop_a";
    Json j2 = map_to_json(graph_map(L2, W, {0, 0}, {{0, false}, {0, false}}), "cyc2_space",
                          "wedge2");
    j2["id"] = "cyc2_over_a";
    doc["map"] = Json::array({ja, j2});
    doc["family"] =
        Json::array({Json{{"id", "nested"}, {"members", {"loop_a", "cyc2_over_a"}}}});
    return doc;
  }
  if (name == "circ23") {
    Json doc = complex_document(shapes::circle(), "circle");
    auto C = make_complex(shapes::circle());
    auto C2 = make_complex(shapes::cyc(2));
    auto C3 = make_complex(shapes::cyc(3));
    doc["complex"].push_back([&] {
      Json j = complex_to_json(*C2);
      j["id"] = "cyc2_space";
      return j;
    }());
    doc["complex"].push_back([&] {
      Json j = complex_to_json(*C3);
      j["id"] = "cyc3_space";
      return j;
    }());
    Json j2 = map_to_json(graph_map(C2, C, {0, 0}, {{0, false}, {0, false}}), "cyc2_space",
                          "circle");
    j2["id"] = "cyc2";
    Json j3 = map_to_json(graph_map(C3, C, {0, 0, 0}, {{0, false}, {0, false}, {0, false}}),
                          "cyc3_space", "circle");
    j3["id"] = "cyc3";
    doc["map"] = Json::array({j2, j3});
    doc["family"] = Json::array({Json{{"id", "covers"}, {"members", {"cyc2", "cyc3"}}}});
    return doc;
  }
  if (name == "torus_gog") return gog_document(torus_gog(), name);
  if (name == "f2z_gog") return gog_document(f2z_gog(), name);
  if (name == "free_hnn_gog") return gog_document(free_hnn_gog(), name);
  if (name == "wallmerge_gog") return gog_document(wallmerge_gog(), name);
  if (name == "interosc_gog") return gog_document(interosc_gog(), name);
  if (name == "irr_candidate_gog") return gog_document(irr_candidate_gog(), name);
  if (name == "c3_abc_path") return presentation_document(c3_abc_path(), name);
  if (name == "c3_ab_c") return presentation_document(c3_ab_c(), name);
  if (name == "c3_abc_edges") return presentation_document(c3_abc_edges(), name);
  if (name == "wedge2_cyc6") return presentation_document(wedge2_cyc6(), name);
  if (name == "wedge2_a6b") return presentation_document(wedge2_a6b(), name);
  if (name == "wedge2_graded") return presentation_document(wedge2_graded(), name);
  throw Error("UnknownFixture", name);
}

inline std::vector<std::string> fixture_names() {
  return {"circle",        "wedge2",        "c3",
          "cyc2",          "cyc3",          "cyc6",
          "torus",         "mobius",        "corner3",
          "rotation_torus", "subdivided_torus", "interosc",
          "circle_deg2",   "torus_deg2",    "wedge2_deg2",
          "ha_hb",         "ha_ha2",        "circ23",
          "torus_gog",     "f2z_gog",       "free_hnn_gog",
          "wallmerge_gog", "interosc_gog",  "irr_candidate_gog",
          "c3_abc_path",   "c3_ab_c",       "c3_abc_edges",
          "wedge2_cyc6",   "wedge2_a6b",    "wedge2_graded"};
}

}  // namespace cubetop::fixtures
