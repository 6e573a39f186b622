#include "doctest.h"

#include "bipaste/generate.hpp"
#include "bipaste/scheme.hpp"
#include "helpers.hpp"

using namespace bipaste;
using namespace fixtures;

TEST_CASE("path_from_edges chains incidences into a vertex sequence") {
  Graph gr = whiskered_face().graph;
  auto p = path_from_edges(gr, {"f", "h1", "h2", "g"});
  REQUIRE(p);
  CHECK(p->verts == std::vector<Id>{"s", "sF", "u", "tF", "t"});
  CHECK(p->source() == "s");
  CHECK(p->sink() == "t");
  CHECK(p->length() == 4);

  CHECK_FALSE(path_from_edges(gr, {"f", "h3", "h2"}));  // h3 ends at v, h2 starts at u
  CHECK(path_from_edges(gr, {"f", "h2"}).error() ==
        "edges 'f' and 'h2' are not consecutive");
  CHECK_FALSE(path_from_edges(gr, {"nope"}));
  CHECK_FALSE(path_from_edges(gr, {}));
}

TEST_CASE("subpath and splice cut and rejoin at shared vertices") {
  Graph gr = whiskered_face().graph;
  DirectedPath dom = path_of(gr, {"f", "h1", "h2", "g"});
  DirectedPath mid = dom.sub(1, 3);
  CHECK(mid.edges == std::vector<Id>{"h1", "h2"});
  CHECK(mid.source() == "sF");
  CHECK(mid.sink() == "tF");

  DirectedPath detour = path_of(gr, {"h3", "h4", "h5"});
  DirectedPath spliced = dom.splice(1, 3, detour);
  CHECK(spliced.edges == std::vector<Id>{"f", "h3", "h4", "h5", "g"});
  CHECK_THROWS_AS(dom.splice(0, 2, detour), std::invalid_argument);

  CHECK(dom.find_segment({"h1", "h2"}) == 1);
  CHECK(dom.find_segment({"h2", "h1"}) == std::nullopt);
  CHECK(dom.find_segment({}) == std::nullopt);
}

TEST_CASE("validation accepts the single face graph with whiskers") {
  AnchoredGraph g = whiskered_face();
  ValidationReport rep = validate_anchored(g);
  CHECK(rep.ok());
  // Seven vertices, seven edges, one interior face: 7 - 7 + 2 = 2.
  CHECK(g.graph.vertices.size() == 7);
  CHECK(g.graph.edges.size() == 7);
}

TEST_CASE("validation accepts parallel edges bounding a face") {
  CHECK(validate_anchored(parallel_pair()).ok());
}

TEST_CASE("validation accepts the five vertex example") {
  CHECK(validate_anchored(running_anchored()).ok());
}

TEST_CASE("reversing an interior edge breaks path directions") {
  AnchoredGraph g = whiskered_face();
  g.graph.edges["h4"] = {"w", "v"};
  ValidationReport rep = validate_anchored(g);
  REQUIRE_FALSE(rep.ok());
  bool mentions_h4 = false;
  for (const Violation& v : rep.violations)
    if (v.message.find("h4") != std::string::npos ||
        v.subject.find("h4") != std::string::npos)
      mentions_h4 = true;
  CHECK(mentions_h4);
}

TEST_CASE("dropping a face leaves its boundary edges covered once") {
  AnchoredGraph g = whiskered_face();
  g.faces.clear();
  ValidationReport rep = validate_anchored(g);
  REQUIRE_FALSE(rep.ok());
  bool coverage = false, euler = false;
  for (const Violation& v : rep.violations) {
    if (v.message.find("covered 1 times") != std::string::npos) coverage = true;
    if (v.message.find("Euler relation fails") != std::string::npos) euler = true;
  }
  CHECK(coverage);
  CHECK(euler);
}

TEST_CASE("edges sharing a vertex name are rejected") {
  AnchoredGraph g = parallel_pair();
  g.graph.vertices.insert("e");
  ValidationReport rep = validate_anchored(g);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.summary().find("collides") != std::string::npos);
}

TEST_CASE("atomic decomposition finds the whiskers around the face") {
  AnchoredGraph g = whiskered_face();
  auto shape = atomic_decomposition(g);
  REQUIRE(shape);
  CHECK(shape->prefix.edges == std::vector<Id>{"f"});
  CHECK(shape->suffix.edges == std::vector<Id>{"g"});
  CHECK(shape->face.id == "F");

  // Both face boundary paths sit inside the matching global boundary path,
  // contiguously, between the same cut vertices.
  size_t m = shape->prefix.length();
  size_t k = shape->face.anchor.dom.length();
  CHECK(g.outer.dom.find_segment(shape->face.anchor.dom.edges) == m);
  CHECK(g.outer.cod.find_segment(shape->face.anchor.cod.edges) == m);
  CHECK(g.outer.dom.verts[m] == shape->face.anchor.source);
  CHECK(g.outer.dom.verts[m + k] == shape->face.anchor.sink);
  CHECK(is_atomic(g));
}

TEST_CASE("graphs with several faces are not atomic") {
  CHECK_FALSE(is_atomic(running_anchored()));
  CHECK_FALSE(is_atomic(side_by_side()));
}

TEST_CASE("rename substitutes identifiers and leaves the rest alone") {
  AnchoredGraph g = parallel_pair();
  Renaming ren;
  ren.verts["x"] = "x2";
  ren.edges["e"] = "e2";
  ren.faces["F"] = "F2";
  AnchoredGraph r = rename(g, ren);
  CHECK(r.graph.has_vertex("x2"));
  CHECK_FALSE(r.graph.has_vertex("x"));
  CHECK(r.graph.edges.at("e2") == Incidence{"x2", "y"});
  CHECK(r.face("F2") != nullptr);
  CHECK(r.face("F") == nullptr);
  CHECK(r.outer.dom.edges == std::vector<Id>{"e2"});
}

namespace {

// The two atomic factors of side_by_side, as standalone graphs.
AnchoredGraph left_factor() {
  Graph gr;
  gr.vertices = {"a", "b", "c"};
  gr.edges["e1"] = {"a", "b"};
  gr.edges["e2"] = {"b", "c"};
  gr.edges["d1"] = {"a", "b"};
  Face P{"P", {"a", "b", path_of(gr, {"e1"}), path_of(gr, {"d1"})}};
  Anchor outer{"a", "c", path_of(gr, {"e1", "e2"}), path_of(gr, {"d1", "e2"})};
  return make_anchored(std::move(gr), {P}, std::move(outer));
}

AnchoredGraph right_factor() {
  Graph gr;
  gr.vertices = {"a", "b", "c"};
  gr.edges["d1"] = {"a", "b"};
  gr.edges["e2"] = {"b", "c"};
  gr.edges["d2"] = {"b", "c"};
  Face Q{"Q", {"b", "c", path_of(gr, {"e2"}), path_of(gr, {"d2"})}};
  Anchor outer{"a", "c", path_of(gr, {"d1", "e2"}), path_of(gr, {"d1", "d2"})};
  return make_anchored(std::move(gr), {Q}, std::move(outer));
}

}  // namespace

TEST_CASE("vertical composition glues along a shared interface") {
  auto composed = vertical_compose(left_factor(), right_factor());
  REQUIRE(composed);
  CHECK(*composed == side_by_side());
  CHECK(validate_anchored(*composed).ok());
}

TEST_CASE("interface mismatches report the first differing position") {
  auto same = vertical_compose(left_factor(), left_factor());
  REQUIRE_FALSE(same);
  CHECK(same.error() == "interface mismatch at edge position 0: 'd1' vs 'e1'");

  AnchoredGraph longer = right_factor();
  auto r = vertical_compose(whiskered_face(), longer);
  REQUIRE_FALSE(r);
  CHECK(r.error().find("interface mismatch") != std::string::npos);
}

TEST_CASE("colliding identifiers of the upper factor get primed") {
  AnchoredGraph a = parallel_pair();  // cod = ep
  Graph gr;
  gr.vertices = {"x", "y"};
  gr.edges["ep"] = {"x", "y"};
  gr.edges["e"] = {"x", "y"};  // collides with a's lower edge
  Face F{"F", {"x", "y", path_of(gr, {"ep"}), path_of(gr, {"e"})}};
  Anchor outer{"x", "y", path_of(gr, {"ep"}), path_of(gr, {"e"})};
  AnchoredGraph b = make_anchored(std::move(gr), {F}, std::move(outer));

  auto traced = vertical_compose_traced(a, b);
  REQUIRE(traced);
  CHECK(traced->applied.edges.at("e") == "e'");
  CHECK(traced->applied.faces.at("F") == "F'");
  CHECK(traced->graph.graph.has_edge("e'"));
  CHECK(traced->graph.outer.cod.edges == std::vector<Id>{"e'"});
  CHECK(validate_anchored(traced->graph).ok());
}

TEST_CASE("composition of presentation factors is associative up to relabeling") {
  size_t checked = 0;
  for (std::uint64_t seed = 1; checked < 25 && seed < 200; ++seed) {
    Rng rng(seed);
    GeneratorConfig cfg;
    BracketedGraph g = random_scheme(rng, cfg);
    auto rec = find_presentation(g.g);
    auto* p = std::get_if<Presentation>(&rec);
    REQUIRE(p != nullptr);
    if (p->factors.size() < 3) continue;
    const AnchoredGraph& a = p->factors[0].atomic;
    const AnchoredGraph& b = p->factors[1].atomic;
    const AnchoredGraph& c = p->factors[2].atomic;
    auto ab = vertical_compose(a, b);
    REQUIRE(ab);
    auto left = vertical_compose(*ab, c);
    auto bc = vertical_compose(b, c);
    REQUIRE(bc);
    auto right = vertical_compose(a, *bc);
    REQUIRE(left);
    REQUIRE(right);
    CHECK(isomorphic(*left, *right));
    ++checked;
  }
  CHECK(checked == 25);
}
