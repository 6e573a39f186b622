#pragma once

// Shared fixtures: small anchored graphs with known validity and
// presentation structure, and the five-vertex example with its span
// assignment that most suites revolve around.

#include "bipaste/diagram.hpp"
#include "bipaste/matrix_model.hpp"
#include "bipaste/span_model.hpp"

namespace fixtures {

using namespace bipaste;

inline DirectedPath path_of(const Graph& g, std::vector<Id> edges) {
  return path_from_edges(g, edges).take();
}

// Single face between shared whiskers: dom = f h1 h2 g, cod = f h3 h4 h5 g,
// the face rewriting h1 h2 into h3 h4 h5.  Seven vertices, seven edges.
inline AnchoredGraph whiskered_face() {
  Graph gr;
  for (const char* v : {"s", "sF", "u", "v", "w", "tF", "t"}) gr.vertices.insert(v);
  gr.edges["f"] = {"s", "sF"};
  gr.edges["h1"] = {"sF", "u"};
  gr.edges["h2"] = {"u", "tF"};
  gr.edges["h3"] = {"sF", "v"};
  gr.edges["h4"] = {"v", "w"};
  gr.edges["h5"] = {"w", "tF"};
  gr.edges["g"] = {"tF", "t"};
  Face F{"F", {"sF", "tF", path_of(gr, {"h1", "h2"}), path_of(gr, {"h3", "h4", "h5"})}};
  Anchor outer{"s", "t", path_of(gr, {"f", "h1", "h2", "g"}),
               path_of(gr, {"f", "h3", "h4", "h5", "g"})};
  return make_anchored(std::move(gr), {F}, std::move(outer));
}

// Smallest valid anchored graph: two parallel edges bounding one face.
inline AnchoredGraph parallel_pair() {
  Graph gr;
  gr.vertices = {"x", "y"};
  gr.edges["e"] = {"x", "y"};
  gr.edges["ep"] = {"x", "y"};
  Face F{"F", {"x", "y", path_of(gr, {"e"}), path_of(gr, {"ep"})}};
  Anchor outer{"x", "y", path_of(gr, {"e"}), path_of(gr, {"ep"})};
  return make_anchored(std::move(gr), {F}, std::move(outer));
}

// Two faces over disjoint segments of the domain; either may fire first, so
// the graph has exactly two presentations.
inline AnchoredGraph side_by_side() {
  Graph gr;
  gr.vertices = {"a", "b", "c"};
  gr.edges["e1"] = {"a", "b"};
  gr.edges["e2"] = {"b", "c"};
  gr.edges["d1"] = {"a", "b"};
  gr.edges["d2"] = {"b", "c"};
  Face P{"P", {"a", "b", path_of(gr, {"e1"}), path_of(gr, {"d1"})}};
  Face Q{"Q", {"b", "c", path_of(gr, {"e2"}), path_of(gr, {"d2"})}};
  Anchor outer{"a", "c", path_of(gr, {"e1", "e2"}), path_of(gr, {"d1", "d2"})};
  return make_anchored(std::move(gr), {P, Q}, std::move(outer));
}

// The five-vertex example: two routes V -> T, three faces, and after
// extension exactly one inverse and one direct associator factor.
inline AnchoredGraph running_anchored() {
  Graph gr;
  for (const char* v : {"V", "S", "U", "W", "T"}) gr.vertices.insert(v);
  gr.edges["h1"] = {"V", "S"};
  gr.edges["h2"] = {"S", "U"};
  gr.edges["h3"] = {"S", "W"};
  gr.edges["f1"] = {"V", "U"};
  gr.edges["f2"] = {"U", "T"};
  gr.edges["g1"] = {"V", "W"};
  gr.edges["g2"] = {"W", "T"};
  Face t1{"theta1", {"V", "U", path_of(gr, {"f1"}), path_of(gr, {"h1", "h2"})}};
  Face t2{"theta2", {"S", "T", path_of(gr, {"h2", "f2"}), path_of(gr, {"h3", "g2"})}};
  Face t3{"theta3", {"V", "W", path_of(gr, {"h1", "h3"}), path_of(gr, {"g1"})}};
  Anchor outer{"V", "T", path_of(gr, {"f1", "f2"}), path_of(gr, {"g1", "g2"})};
  return make_anchored(std::move(gr), {t1, t2, t3}, std::move(outer));
}

inline Bracketing two() { return Bracketing::node(Bracketing::leaf(), Bracketing::leaf()); }

inline BracketedGraph running_bracketed() {
  BracketedGraph bg;
  bg.g = running_anchored();
  bg.dom_shape = two();
  bg.cod_shape = two();
  bg.face_shapes["theta1"] = {Bracketing::leaf(), two()};
  bg.face_shapes["theta2"] = {two(), two()};
  bg.face_shapes["theta3"] = {two(), Bracketing::leaf()};
  return bg;
}

// Hand-picked span assignment for the running example.  Composites stay
// small: the global domain composite has the single element (d,p1).
inline Diagram<SpanModel> running_span_diagram() {
  SpanModel m;
  Diagram<SpanModel> d;
  d.shape = running_bracketed();
  d.objects["V"] = SpanModel::object({"v1", "v2"});
  d.objects["S"] = SpanModel::object({"s1"});
  d.objects["U"] = SpanModel::object({"u1", "u2"});
  d.objects["W"] = SpanModel::object({"w1"});
  d.objects["T"] = SpanModel::object({"t1", "t2"});
  auto sp = [&](const Id& e, const Id& s, const Id& t, std::vector<std::string> apex,
                std::vector<std::string> l, std::vector<std::string> r) {
    d.ones.emplace(e, SpanModel::span(d.objects.at(s), d.objects.at(t), std::move(apex),
                                      std::move(l), std::move(r))
                          .take());
  };
  sp("h1", "V", "S", {"a"}, {"v1"}, {"s1"});
  sp("h2", "S", "U", {"b1", "b2"}, {"s1", "s1"}, {"u1", "u2"});
  sp("h3", "S", "W", {"c"}, {"s1"}, {"w1"});
  sp("f1", "V", "U", {"d"}, {"v1"}, {"u1"});
  sp("f2", "U", "T", {"p1", "p2"}, {"u1", "u2"}, {"t1", "t2"});
  sp("g1", "V", "W", {"q"}, {"v1"}, {"w1"});
  sp("g2", "W", "T", {"r1", "r2"}, {"w1", "w1"}, {"t1", "t2"});

  auto cell = [&](const Id& face, const DirectedPath& dom, const Bracketing& ds,
                  const DirectedPath& cod, const Bracketing& cs,
                  std::map<std::string, std::string> mapping) {
    auto src = eval_bracketed_path(m, d.ones, dom, ds);
    auto tgt = eval_bracketed_path(m, d.ones, cod, cs);
    d.twos.emplace(face, SpanModel::two_cell(src, tgt, mapping).take());
  };
  const AnchoredGraph& g = d.shape.g;
  cell("theta1", g.face("theta1")->anchor.dom, Bracketing::leaf(),
       g.face("theta1")->anchor.cod, two(), {{"d", "(a,b1)"}});
  cell("theta2", g.face("theta2")->anchor.dom, two(), g.face("theta2")->anchor.cod, two(),
       {{"(b1,p1)", "(c,r1)"}, {"(b2,p2)", "(c,r2)"}});
  cell("theta3", g.face("theta3")->anchor.dom, two(), g.face("theta3")->anchor.cod,
       Bracketing::leaf(), {{"(a,c)", "q"}});
  return d;
}

// Matrix assignment over the same shape; each 2-cell is just a matrix of the
// right dimensions, picked to keep the composite's entries distinct.
inline Diagram<MatrixModel> running_matrix_diagram() {
  Diagram<MatrixModel> d;
  d.shape = running_bracketed();
  for (const Id& v : d.shape.g.graph.vertices) d.objects[v] = {};
  d.ones = {{"h1", {1}}, {"h2", {2}}, {"h3", {1}}, {"f1", {1}},
            {"f2", {2}}, {"g1", {1}}, {"g2", {2}}};
  d.twos["theta1"] = MatrixModel::matrix(1, 3, {1, 0, 2});
  d.twos["theta2"] = MatrixModel::matrix(4, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1});
  d.twos["theta3"] = MatrixModel::matrix(2, 1, {3, 1});
  return d;
}

// The composite of the running example spelled out by hand, innermost
// factor first: whiskered theta1, an inverse associator, whiskered theta2,
// a direct associator, whiskered theta3.
inline SpanModel::TwoCell running_hand_composite() {
  SpanModel m;
  Diagram<SpanModel> d = running_span_diagram();
  const auto& h1 = d.ones.at("h1");
  const auto& h2 = d.ones.at("h2");
  const auto& h3 = d.ones.at("h3");
  const auto& f2 = d.ones.at("f2");
  const auto& g2 = d.ones.at("g2");
  SpanModel::TwoCell t1 = m.hcomp_two(m.id_two(f2), d.twos.at("theta1"));
  SpanModel::TwoCell a_inv = m.associator_inv(f2, h2, h1);
  SpanModel::TwoCell t2 = m.hcomp_two(d.twos.at("theta2"), m.id_two(h1));
  SpanModel::TwoCell a = m.associator(g2, h3, h1);
  SpanModel::TwoCell t3 = m.hcomp_two(m.id_two(g2), d.twos.at("theta3"));
  return m.vcomp(t3, m.vcomp(a, m.vcomp(t2, m.vcomp(a_inv, t1))));
}

}  // namespace fixtures
