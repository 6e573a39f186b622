#include "bipaste/bracketed.hpp"

#include "bipaste/generate.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bipaste;

namespace {

Bracketing parsed(const std::string& s) { return Bracketing::parse(s).value(); }

// The whiskered single face with consistent bracketings: outer (--)- over the
// slots f, F, g; the face rewrites -- into -(--).
BracketedGraph bracketed_whisker() {
  BracketedGraph bg;
  bg.g = fixtures::whiskered_face();
  Bracketing outer = parsed("(--)-");
  bg.dom_shape = outer.substitute_leaf(1, fixtures::two());
  bg.cod_shape = outer.substitute_leaf(1, parsed("-(--)"));
  bg.face_shapes["F"] = {fixtures::two(), parsed("-(--)")};
  return bg;
}

// Three-edge straight line used as a frontier for associator factors.
DirectedPath three_edge_frontier(Graph& gr) {
  gr.vertices = {"a", "b", "c", "d"};
  gr.edges["p1"] = {"a", "b"};
  gr.edges["p2"] = {"b", "c"};
  gr.edges["p3"] = {"c", "d"};
  return path_from_edges(gr, {"p1", "p2", "p3"}).take();
}

ExtensionCertificate golden_certificate(const BracketedGraph& bg) {
  auto rec = find_presentation(bg.g);
  REQUIRE(std::holds_alternative<Presentation>(rec));
  auto cert = extend_to_composition_scheme(bg, std::get<Presentation>(rec));
  REQUIRE(cert.ok());
  return *cert;
}

}  // namespace

TEST_CASE("bracketed validation accepts matching shapes and flags mismatches") {
  BracketedGraph bg = fixtures::running_bracketed();
  CHECK(validate_bracketed(bg).ok());

  BracketedGraph wrong = bg;
  wrong.dom_shape = Bracketing::leaf();
  CHECK(!validate_bracketed(wrong).ok());

  BracketedGraph missing = bg;
  missing.face_shapes.erase("theta2");
  CHECK(!validate_bracketed(missing).ok());

  BracketedGraph face_wrong = bg;
  face_wrong.face_shapes["theta2"] = {Bracketing::leaf(), fixtures::two()};
  CHECK(!validate_bracketed(face_wrong).ok());
}

TEST_CASE("check_consistent recovers the outer bracketing and whisker lengths") {
  auto cg = check_consistent(bracketed_whisker());
  REQUIRE(cg.ok());
  CHECK(cg->outer.str() == "(--)-");
  CHECK(cg->prefix_len == 1);
  CHECK(cg->suffix_len == 1);
  CHECK(cg->face_id == "F");
}

TEST_CASE("check_consistent rejects boundary shapes that share no outer bracketing") {
  BracketedGraph bg = bracketed_whisker();
  bg.cod_shape = left_normalized(5);
  CHECK(!check_consistent(bg).ok());
}

TEST_CASE("check_consistent requires an atomic graph") {
  CHECK(!check_consistent(fixtures::running_bracketed()).ok());
}

TEST_CASE("whisker shapes are left normalized around the middle") {
  CHECK(whisker_shape(0, fixtures::two(), 0).str() == "--");
  CHECK(whisker_shape(1, Bracketing::leaf(), 1).str() == "(--)-");
  CHECK(whisker_shape(2, fixtures::two(), 1).str() == "((--)(--))-");
  CHECK(whisker_shape(0, Bracketing::leaf(), 2).str() == "-(--)");
}

TEST_CASE("an associator move factor carries the move as its face") {
  Graph gr;
  DirectedPath fr = three_edge_frontier(gr);
  NameSupply ns;
  ns.taken = {"a", "b", "c", "d", "p1", "p2", "p3"};

  ConsistentGraph cg =
      associator_move_factor(fr, parsed("(--)-"), {"", AssocMove::Direction::left_to_right}, ns);
  CHECK(validate_bracketed(cg.bg).ok());
  CHECK(cg.bg.dom_shape.str() == "(--)-");
  CHECK(cg.bg.cod_shape.str() == "-(--)");
  CHECK(path_str(cg.bg.g.outer.dom) == "p1 p2 p3");
  auto ag = check_associativity(cg);
  REQUIRE(ag.ok());
  CHECK(ag->form == AssocForm::form1);
  CHECK(ag->seg_lens == std::array<size_t, 3>{1, 1, 1});

  ConsistentGraph inv =
      associator_move_factor(fr, parsed("-(--)"), {"", AssocMove::Direction::right_to_left}, ns);
  CHECK(inv.bg.dom_shape.str() == "-(--)");
  CHECK(inv.bg.cod_shape.str() == "(--)-");
  auto ag2 = check_associativity(inv);
  REQUIRE(ag2.ok());
  CHECK(ag2->form == AssocForm::form2);
}

TEST_CASE("check_associativity rejects faces that are not pure rebracketings") {
  auto cg = check_consistent(bracketed_whisker());
  REQUIRE(cg.ok());
  CHECK(!check_associativity(*cg).ok());
}

TEST_CASE("collapsing an associator factor deletes the face and keeps both shapes") {
  Graph gr;
  DirectedPath fr = three_edge_frontier(gr);
  NameSupply ns;
  ns.taken = {"a", "b", "c", "d", "p1", "p2", "p3"};
  ConsistentGraph cg =
      associator_move_factor(fr, parsed("(--)-"), {"", AssocMove::Direction::left_to_right}, ns);
  auto ag = check_associativity(cg);
  REQUIRE(ag.ok());

  auto back = collapse(cg.bg, *ag);
  REQUIRE(back.ok());
  CHECK(back->g.faces.empty());
  CHECK(path_str(back->g.outer.dom) == "p1 p2 p3");
  CHECK(path_str(back->g.outer.cod) == "p1 p2 p3");
  CHECK(back->dom_shape.str() == "(--)-");
  CHECK(back->cod_shape.str() == "-(--)");
}

TEST_CASE("collapse insists the associativity data describes the face") {
  Graph gr;
  DirectedPath fr = three_edge_frontier(gr);
  NameSupply ns;
  ns.taken = {"a", "b", "c", "d", "p1", "p2", "p3"};
  ConsistentGraph cg =
      associator_move_factor(fr, parsed("(--)-"), {"", AssocMove::Direction::left_to_right}, ns);
  ConsistentGraph other =
      associator_move_factor(fr, parsed("-(--)"), {"", AssocMove::Direction::right_to_left}, ns);
  auto wrong = check_associativity(other);
  REQUIRE(wrong.ok());
  CHECK(!collapse(cg.bg, *wrong).ok());
}

TEST_CASE("the five-vertex extension has five factors with two associators") {
  BracketedGraph bg = fixtures::running_bracketed();
  ExtensionCertificate cert = golden_certificate(bg);

  REQUIRE(cert.scheme.factors.size() == 5);
  CHECK(cert.assoc_indices == std::vector<size_t>{1, 3});
  CHECK(cert.scheme.factors[0].face_id == "theta1");
  CHECK(cert.scheme.factors[2].face_id == "theta2");
  CHECK(cert.scheme.factors[4].face_id == "theta3");
  for (size_t i : cert.assoc_indices)
    CHECK(cert.scheme.factors[i].face_id.rfind("A~", 0) == 0);

  // Inverse associator first, direct associator after the middle face.
  auto a1 = check_associativity(cert.scheme.factors[1]);
  auto a3 = check_associativity(cert.scheme.factors[3]);
  REQUIRE(a1.ok());
  REQUIRE(a3.ok());
  CHECK(a1->form == AssocForm::form1);
  CHECK(a3->form == AssocForm::form2);

  // Boundary shapes of the interface chain around the first associator.
  CHECK(cert.scheme.factors[0].bg.dom_shape.str() == "--");
  CHECK(cert.scheme.factors[0].bg.cod_shape.str() == "(--)-");
  CHECK(cert.scheme.factors[1].bg.cod_shape.str() == "-(--)");
  CHECK(cert.scheme.factors[4].bg.cod_shape.str() == "--");

  CHECK(cert.scheme.composed.g.faces.size() == 5);
  CHECK(validate_bracketed(cert.scheme.composed).ok());

  std::string why;
  CHECK(verify_extension(cert, bg, &why));
  CHECK(why.empty());
}

TEST_CASE("verification rejects tampered certificates") {
  BracketedGraph bg = fixtures::running_bracketed();
  ExtensionCertificate cert = golden_certificate(bg);

  SUBCASE("swapped factors") {
    std::swap(cert.scheme.factors[0], cert.scheme.factors[2]);
    std::string why;
    CHECK(!verify_extension(cert, bg, &why));
    CHECK(!why.empty());
  }
  SUBCASE("forgotten associator index") {
    cert.assoc_indices.pop_back();
    CHECK(!verify_extension(cert, bg));
  }
  SUBCASE("associator index pointing at a real face") {
    cert.assoc_indices = {1, 4};
    CHECK(!verify_extension(cert, bg));
  }
  SUBCASE("rebracketed interface") {
    cert.scheme.factors[1].bg.cod_shape = parsed("(--)-");
    CHECK(!verify_extension(cert, bg));
  }
  SUBCASE("renamed interior edge") {
    Renaming r;
    r.edges = {{"h3", "smuggled"}};
    cert.scheme.factors[3].bg.g = rename(cert.scheme.factors[3].bg.g, r);
    CHECK(!verify_extension(cert, bg));
  }
  SUBCASE("wrong target graph") {
    BracketedGraph other = bg;
    other.dom_shape = parsed("--");
    other.cod_shape = parsed("--");
    other.face_shapes["theta1"] = {Bracketing::leaf(), parsed("--")};
    CHECK(verify_extension(cert, other));  // same content, sanity
    other.face_shapes["theta1"] = {Bracketing::leaf(), Bracketing::leaf()};
    CHECK(!verify_extension(cert, other));
  }
}

TEST_CASE("composing the certificate factors reproduces the stored composite") {
  ExtensionCertificate cert = golden_certificate(fixtures::running_bracketed());
  auto again = compose_scheme(cert.scheme.factors);
  REQUIRE(again.ok());
  CHECK(again->composed == cert.scheme.composed);
}

TEST_CASE("compose_scheme refuses factors whose interfaces do not chain") {
  ExtensionCertificate cert = golden_certificate(fixtures::running_bracketed());
  std::vector<ConsistentGraph> reordered = {cert.scheme.factors[0], cert.scheme.factors[2]};
  CHECK(!compose_scheme(reordered).ok());
}

TEST_CASE("bracketed composition separates anchored and bracketing mismatches") {
  ExtensionCertificate cert = golden_certificate(fixtures::running_bracketed());
  const BracketedGraph& first = cert.scheme.factors[0].bg;
  const BracketedGraph& second = cert.scheme.factors[1].bg;

  auto good = vertical_compose_bracketed(first, second);
  REQUIRE(std::holds_alternative<BracketedGraph>(good));
  CHECK(std::get<BracketedGraph>(good).g.faces.size() == 2);

  BracketedGraph rebracketed = second;
  rebracketed.dom_shape = parsed("-(--)");
  auto bad = vertical_compose_bracketed(first, rebracketed);
  REQUIRE(std::holds_alternative<BracketedComposeError>(bad));
  CHECK(std::get<BracketedComposeError>(bad).kind == BracketErrorKind::bracket);

  auto misaligned = vertical_compose_bracketed(first, first);
  REQUIRE(std::holds_alternative<BracketedComposeError>(misaligned));
  CHECK(std::get<BracketedComposeError>(misaligned).kind == BracketErrorKind::anchored);
}

TEST_CASE("fresh names never collide and never repeat") {
  NameSupply ns(fixtures::running_bracketed());
  CHECK(ns.taken.count("h1") == 1);
  CHECK(ns.taken.count("theta2") == 1);
  std::set<Id> seen;
  for (int i = 0; i < 20; ++i) {
    Id n = ns.fresh("h1");
    CHECK(n.rfind("h1~", 0) == 0);
    CHECK(seen.insert(n).second);
  }
  CHECK(ns.fresh("A").rfind("A~", 0) == 0);
}

TEST_CASE("random schemes extend to verifying certificates") {
  Rng rng(20260501);
  GeneratorConfig cfg;
  int with_assoc = 0;
  for (int trial = 0; trial < 100; ++trial) {
    BracketedGraph bg = random_scheme(rng, cfg);
    REQUIRE(validate_bracketed(bg).ok());
    auto rec = find_presentation(bg.g);
    REQUIRE(std::holds_alternative<Presentation>(rec));
    auto cert = extend_to_composition_scheme(bg, std::get<Presentation>(rec));
    REQUIRE(cert.ok());
    std::string why;
    bool ok = verify_extension(*cert, bg, &why);
    CAPTURE(why);
    CHECK(ok);
    CHECK(cert->scheme.factors.size() ==
          bg.g.faces.size() + cert->assoc_indices.size());
    if (!cert->assoc_indices.empty()) ++with_assoc;
  }
  // The sample must actually exercise associator insertion.
  CHECK(with_assoc > 20);
}
