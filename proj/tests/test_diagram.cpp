#include "bipaste/diagram.hpp"

#include <algorithm>

#include "bipaste/generate.hpp"
#include "bipaste/matrix_model.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace bipaste;

namespace {

// "(a,(b,c))" -> "a,b,c": nesting-blind view of a composite apex element.
std::string flat(std::string e) {
  e.erase(std::remove_if(e.begin(), e.end(), [](char c) { return c == '(' || c == ')'; }),
          e.end());
  return e;
}

// Every leg-matching chain of apex elements along the path, flattened, as an
// oracle independent of how composition nests pairs.
std::vector<std::string> brute_chains(const std::map<Id, SpanModel::OneCell>& ones,
                                      const DirectedPath& p) {
  std::vector<std::string> acc;
  std::vector<std::pair<std::string, std::string>> partial{{"", ""}};  // (text, mid label)
  for (size_t k = 0; k < p.length(); ++k) {
    const SpanModel::OneCell& f = ones.at(p.edges[k]);
    std::vector<std::pair<std::string, std::string>> next;
    for (const auto& [text, mid] : partial)
      for (size_t i = 0; i < f.apex.size(); ++i) {
        if (k > 0 && f.left[i] != mid) continue;
        next.emplace_back(text.empty() ? f.apex[i] : text + "," + f.apex[i], f.right[i]);
      }
    partial = std::move(next);
  }
  for (auto& [text, mid] : partial) acc.push_back(text);
  std::sort(acc.begin(), acc.end());
  return acc;
}

ExtensionCertificate certificate_for(const BracketedGraph& bg) {
  auto rec = find_presentation(bg.g);
  REQUIRE(std::holds_alternative<Presentation>(rec));
  auto cert = extend_to_composition_scheme(bg, std::get<Presentation>(rec));
  REQUIRE(cert.ok());
  return *cert;
}

// 1-cell table covering the copies a certificate introduces, each copy
// carrying its original's cell.
std::map<Id, SpanModel::OneCell> ones_with_copies(const Diagram<SpanModel>& d,
                                                  const ExtensionCertificate& cert) {
  std::map<Id, SpanModel::OneCell> ones = d.ones;
  for (size_t i : cert.assoc_indices) {
    const ConsistentGraph& cg = cert.scheme.factors[i];
    const Face* f = cg.bg.g.face(cg.face_id);
    for (size_t j = 0; j < f->anchor.dom.length(); ++j)
      ones.emplace(f->anchor.cod.edges[j], ones.at(f->anchor.dom.edges[j]));
  }
  return ones;
}

// Two independent faces, everything bracketed trivially.
BracketedGraph bracketed_side_by_side() {
  BracketedGraph bg;
  bg.g = fixtures::side_by_side();
  bg.dom_shape = fixtures::two();
  bg.cod_shape = fixtures::two();
  bg.face_shapes["P"] = {Bracketing::leaf(), Bracketing::leaf()};
  bg.face_shapes["Q"] = {Bracketing::leaf(), Bracketing::leaf()};
  return bg;
}

}  // namespace

TEST_CASE("path evaluation folds 1-cells with the later edge outer-left") {
  SpanModel m;
  Diagram<SpanModel> d = fixtures::running_span_diagram();
  const DirectedPath& dom = d.shape.g.outer.dom;

  SpanModel::OneCell both = eval_bracketed_path(m, d.ones, dom, fixtures::two());
  CHECK(both == m.hcomp_one(d.ones.at("f2"), d.ones.at("f1")));
  CHECK(both.apex == std::vector<SpanModel::Elem>{"(d,p1)"});

  MatrixModel mm;
  Diagram<MatrixModel> md = fixtures::running_matrix_diagram();
  CHECK(eval_bracketed_path(mm, md.ones, dom, fixtures::two()).dim == 3);
}

TEST_CASE("path evaluation rejects shapes that do not fit") {
  SpanModel m;
  Diagram<SpanModel> d = fixtures::running_span_diagram();
  const DirectedPath& dom = d.shape.g.outer.dom;
  CHECK_THROWS_AS(eval_bracketed_path(m, d.ones, dom, left_normalized(3)),
                  std::invalid_argument);
  std::map<Id, SpanModel::OneCell> missing;
  CHECK_THROWS_AS(eval_bracketed_path(m, missing, dom, fixtures::two()),
                  std::invalid_argument);
}

TEST_CASE("evaluation agrees with chain enumeration whatever the bracketing") {
  Rng rng(515151);
  GeneratorConfig cfg;
  SpanModel m;
  for (int trial = 0; trial < 50; ++trial) {
    RandomDiagram<SpanModel> rd = random_span_diagram(rng, cfg);
    const DirectedPath& dom = rd.d.shape.g.outer.dom;
    std::vector<std::string> expect = brute_chains(rd.d.ones, dom);
    for (const Bracketing& shape : enumerate_bracketings(dom.length())) {
      SpanModel::OneCell got = eval_bracketed_path(m, rd.d.ones, dom, shape);
      std::vector<std::string> flats;
      for (const auto& e : got.apex) flats.push_back(flat(e));
      std::sort(flats.begin(), flats.end());
      CHECK(flats == expect);
    }
  }
}

TEST_CASE("diagram validation accepts the five-vertex assignments") {
  SpanModel m;
  CHECK(validate_diagram(m, fixtures::running_span_diagram()).ok());
  MatrixModel mm;
  CHECK(validate_diagram(mm, fixtures::running_matrix_diagram()).ok());
}

TEST_CASE("diagram validation pinpoints missing and mismatched cells") {
  SpanModel m;
  Diagram<SpanModel> d = fixtures::running_span_diagram();

  Diagram<SpanModel> no_obj = d;
  no_obj.objects.erase("V");
  CHECK(!validate_diagram(m, no_obj).ok());

  Diagram<SpanModel> no_edge = d;
  no_edge.ones.erase("h2");
  CHECK(!validate_diagram(m, no_edge).ok());

  Diagram<SpanModel> skewed = d;
  skewed.ones["f1"] = d.ones.at("g1");  // lands on W, not U
  CHECK(!validate_diagram(m, skewed).ok());

  Diagram<SpanModel> wrong_face = d;
  wrong_face.twos["theta1"] = m.id_two(d.ones.at("f1"));
  auto rep = validate_diagram(m, wrong_face);
  REQUIRE(!rep.ok());
  CHECK(rep.summary().find("theta1") != std::string::npos);
}

TEST_CASE("a factor's constituent is the face cell whiskered by identities") {
  SpanModel m;
  Diagram<SpanModel> d = fixtures::running_span_diagram();
  ExtensionCertificate cert = certificate_for(d.shape);

  // First factor: theta1 with the remaining f2 on the right.
  SpanModel::TwoCell first =
      constituent(m, d.ones, cert.scheme.factors[0], d.twos.at("theta1"));
  CHECK(first == m.hcomp_two(m.id_two(d.ones.at("f2")), d.twos.at("theta1")));

  // Middle face: theta2 with the copied h1 whisker on the left.
  auto ones = ones_with_copies(d, cert);
  SpanModel::TwoCell third =
      constituent(m, ones, cert.scheme.factors[2], d.twos.at("theta2"));
  CHECK(third == m.hcomp_two(d.twos.at("theta2"), m.id_two(d.ones.at("h1"))));

  // Last face: theta3 with g2 on the right.
  SpanModel::TwoCell fifth =
      constituent(m, ones, cert.scheme.factors[4], d.twos.at("theta3"));
  CHECK(fifth == m.hcomp_two(m.id_two(d.ones.at("g2")), d.twos.at("theta3")));
}

TEST_CASE("inserted factors evaluate to associators at the split composites") {
  SpanModel m;
  Diagram<SpanModel> d = fixtures::running_span_diagram();
  ExtensionCertificate cert = certificate_for(d.shape);
  auto ones = ones_with_copies(d, cert);

  auto a1 = check_associativity(cert.scheme.factors[1]);
  REQUIRE(a1.ok());
  auto cell1 = canonical_extension_face(m, ones, *a1);
  REQUIRE(cell1.ok());
  CHECK(*cell1 == m.associator_inv(d.ones.at("f2"), d.ones.at("h2"), d.ones.at("h1")));

  auto a3 = check_associativity(cert.scheme.factors[3]);
  REQUIRE(a3.ok());
  auto cell3 = canonical_extension_face(m, ones, *a3);
  REQUIRE(cell3.ok());
  CHECK(*cell3 == m.associator(d.ones.at("g2"), d.ones.at("h3"), d.ones.at("h1")));
}

TEST_CASE("extension faces demand equal 1-cells on paired edges") {
  SpanModel m;
  Diagram<SpanModel> d = fixtures::running_span_diagram();
  ExtensionCertificate cert = certificate_for(d.shape);
  auto ones = ones_with_copies(d, cert);

  auto a1 = check_associativity(cert.scheme.factors[1]);
  REQUIRE(a1.ok());
  const Face* face = cert.scheme.factors[1].bg.g.face(cert.scheme.factors[1].face_id);
  const Id& copy = face->anchor.cod.edges[0];
  ones.at(copy) = d.ones.at("g1");
  auto cell = canonical_extension_face(m, ones, *a1);
  REQUIRE(!cell.ok());
  CHECK(cell.error().find("h1") != std::string::npos);
  CHECK(cell.error().find(copy) != std::string::npos);
}

TEST_CASE("the composite of the five-vertex diagram matches the hand build") {
  SpanModel m;
  Diagram<SpanModel> d = fixtures::running_span_diagram();
  ExtensionCertificate cert = certificate_for(d.shape);

  auto res = compose_diagram(m, d, cert);
  REQUIRE(res.ok());
  CHECK(res->value == fixtures::running_hand_composite());
  REQUIRE(res->trace.size() == 5);
  for (size_t i = 0; i + 1 < res->trace.size(); ++i)
    CHECK(m.one_eq(m.two_tgt(res->trace[i]), m.two_src(res->trace[i + 1])));
  CHECK(m.two_src(res->value) == m.two_src(res->trace.front()));
  CHECK(m.two_tgt(res->value) == m.two_tgt(res->trace.back()));
}

TEST_CASE("the matrix composite of the five-vertex diagram is fixed") {
  MatrixModel m;
  Diagram<MatrixModel> d = fixtures::running_matrix_diagram();
  ExtensionCertificate cert = certificate_for(d.shape);

  auto res = compose_diagram(m, d, cert);
  REQUIRE(res.ok());
  CHECK(res->value == MatrixModel::matrix(3, 3, {3, 2, 0, 0, 0, 1, 1, 1, 1}));

  // Direct build: whisker each face and multiply, associators being identities.
  MatrixModel::TwoCell t1 = m.hcomp_two(m.id_two(d.ones.at("f2")), d.twos.at("theta1"));
  MatrixModel::TwoCell t2 = m.hcomp_two(d.twos.at("theta2"), m.id_two(d.ones.at("h1")));
  MatrixModel::TwoCell t3 = m.hcomp_two(m.id_two(d.ones.at("g2")), d.twos.at("theta3"));
  CHECK(res->value == m.vcomp(t3, m.vcomp(t2, t1)));
}

TEST_CASE("composition reports missing assignments and broken chains") {
  SpanModel m;
  Diagram<SpanModel> d = fixtures::running_span_diagram();
  ExtensionCertificate cert = certificate_for(d.shape);

  Diagram<SpanModel> gap = d;
  gap.twos.erase("theta2");
  auto res = compose_diagram(m, gap, cert);
  REQUIRE(!res.ok());
  CHECK(res.error().find("theta2") != std::string::npos);

  ExtensionCertificate shuffled = cert;
  std::swap(shuffled.scheme.factors[0], shuffled.scheme.factors[4]);
  CHECK(!compose_diagram(m, d, shuffled).ok());

  ExtensionCertificate none = cert;
  none.scheme.factors.clear();
  CHECK(!compose_diagram(m, d, none).ok());
}

TEST_CASE("in a strict model the composite ignores the presentation order") {
  MatrixModel m;
  BracketedGraph bg = bracketed_side_by_side();
  Diagram<MatrixModel> d;
  d.shape = bg;
  for (const Id& v : bg.g.graph.vertices) d.objects[v] = {};
  d.ones = {{"e1", {1}}, {"e2", {2}}, {"d1", {2}}, {"d2", {1}}};
  d.twos["P"] = MatrixModel::matrix(1, 2, {1, 2});
  d.twos["Q"] = MatrixModel::matrix(2, 1, {3, 4});
  REQUIRE(validate_diagram(m, d).ok());

  auto all = enumerate_presentations(bg.g);
  REQUIRE(all.ok());
  REQUIRE(all->size() == 2);
  std::vector<MatrixModel::TwoCell> values;
  for (const Presentation& p : *all) {
    auto cert = extend_to_composition_scheme(bg, p);
    REQUIRE(cert.ok());
    auto res = compose_diagram(m, d, *cert);
    REQUIRE(res.ok());
    values.push_back(res->value);
  }
  CHECK(values[0] == values[1]);
  // By hand: P then Q gives (P ⊕ 1_2) · (1_2 ⊕ Q).
  CHECK(values[0] == MatrixModel::matrix(3, 3, {1, 2, 0, 0, 0, 3, 0, 0, 4}));
}
