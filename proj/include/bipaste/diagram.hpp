#pragma once

#include "bipaste/bracketed.hpp"

namespace bipaste {

// Assignment of model cells to a bracketed graph: objects to vertices,
// 1-cells to edges, 2-cells to faces.
template <typename M>
struct Diagram {
  BracketedGraph shape;
  std::map<Id, typename M::Object> objects;
  std::map<Id, typename M::OneCell> ones;
  std::map<Id, typename M::TwoCell> twos;
};

// Folds horizontal composition over a bracketing: the later edge of the path
// becomes the outer-left factor of the composite.
template <typename M>
class PathEvaluator {
 public:
  PathEvaluator(const M& m, const std::map<Id, typename M::OneCell>& ones)
      : m_(m), ones_(ones) {}

  typename M::OneCell eval(const DirectedPath& p, const Bracketing& shape, size_t lo = 0) {
    if (shape.length() == 0 || lo + shape.length() > p.length())
      throw std::invalid_argument("eval: bracketing does not fit the path");
    std::string key = shape.str();
    for (size_t i = lo; i < lo + shape.length(); ++i) key += cat("|", p.edges[i]);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    typename M::OneCell out = [&] {
      if (shape.is_leaf()) {
        auto jt = ones_.find(p.edges[lo]);
        if (jt == ones_.end())
          throw std::invalid_argument(cat("no 1-cell assigned to edge '", p.edges[lo], "'"));
        return jt->second;
      }
      auto left = eval(p, shape.left(), lo);
      auto right = eval(p, shape.right(), lo + shape.left().length());
      return m_.hcomp_one(right, left);
    }();
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  const M& m_;
  const std::map<Id, typename M::OneCell>& ones_;
  std::map<std::string, typename M::OneCell> memo_;
};

template <typename M>
typename M::OneCell eval_bracketed_path(const M& m,
                                        const std::map<Id, typename M::OneCell>& ones,
                                        const DirectedPath& p, const Bracketing& shape) {
  PathEvaluator<M> ev(m, ones);
  return ev.eval(p, shape);
}

// Endpoint coherence of the whole assignment: edge 1-cells live in the hom
// of their endpoint objects, face 2-cells between their bracketed boundary
// composites.
template <typename M>
ValidationReport validate_diagram(const M& m, const Diagram<M>& d) {
  ValidationReport rep;
  auto bad = [&](std::string subject, std::string msg) {
    rep.violations.push_back({std::move(subject), std::move(msg)});
  };
  for (const Id& v : d.shape.g.graph.vertices)
    if (!d.objects.count(v)) bad(cat("vertex ", v), "no object assigned");
  for (const auto& [e, inc] : d.shape.g.graph.edges) {
    auto it = d.ones.find(e);
    if (it == d.ones.end()) {
      bad(cat("edge ", e), "no 1-cell assigned");
      continue;
    }
    auto tail = d.objects.find(inc.tail);
    auto head = d.objects.find(inc.head);
    if (tail != d.objects.end() && !m.obj_eq(m.one_src(it->second), tail->second))
      bad(cat("edge ", e), "1-cell source is not the tail vertex's object");
    if (head != d.objects.end() && !m.obj_eq(m.one_tgt(it->second), head->second))
      bad(cat("edge ", e), "1-cell target is not the head vertex's object");
  }
  PathEvaluator<M> ev(m, d.ones);
  for (const Face& f : d.shape.g.faces) {
    auto it = d.twos.find(f.id);
    if (it == d.twos.end()) {
      bad(cat("face ", f.id), "no 2-cell assigned");
      continue;
    }
    auto fs = d.shape.face_shapes.find(f.id);
    if (fs == d.shape.face_shapes.end()) continue;
    try {
      if (!m.one_eq(m.two_src(it->second), ev.eval(f.anchor.dom, fs->second.dom)))
        bad(cat("face ", f.id), "2-cell source is not the bracketed domain composite");
      if (!m.one_eq(m.two_tgt(it->second), ev.eval(f.anchor.cod, fs->second.cod)))
        bad(cat("face ", f.id), "2-cell target is not the bracketed codomain composite");
    } catch (const std::invalid_argument& e) {
      bad(cat("face ", f.id), e.what());
    }
  }
  return rep;
}

// Whiskered constituent of one factor: the outer bracketing folded over
// identity 2-cells on the whisker edges with `face_cell` in the face slot.
template <typename M>
typename M::TwoCell constituent(const M& m, const std::map<Id, typename M::OneCell>& ones,
                                const ConsistentGraph& cg,
                                const typename M::TwoCell& face_cell) {
  const DirectedPath& dom = cg.bg.g.outer.dom;
  size_t face_len = cg.bg.g.face(cg.face_id)->anchor.dom.length();
  auto leaf_cell = [&](size_t slot) -> typename M::TwoCell {
    if (slot == cg.prefix_len) return face_cell;
    size_t edge_pos = slot < cg.prefix_len ? slot : slot - 1 + face_len;
    return m.id_two(ones.at(dom.edges[edge_pos]));
  };
  auto fold = [&](auto&& self, const Bracketing& b, size_t lo) -> typename M::TwoCell {
    if (b.is_leaf()) return leaf_cell(lo);
    auto l = self(self, b.left(), lo);
    auto r = self(self, b.right(), lo + b.left().length());
    return m.hcomp_two(r, l);
  };
  return fold(fold, cg.outer, 0);
}

// Associator component the certificate demands of an inserted factor:
// form1 contributes an inverse associator, form2 a direct one, at the
// segment composites.  The 1-cells over paired boundary edges must agree.
template <typename M>
Result<typename M::TwoCell> canonical_extension_face(
    const M& m, const std::map<Id, typename M::OneCell>& ones, const AssociativityGraph& a) {
  using R = Result<typename M::TwoCell>;
  const Face* f = a.cg.bg.g.face(a.cg.face_id);
  const FaceShapes& fs = a.cg.bg.face_shapes.at(a.cg.face_id);
  for (size_t i = 0; i < f->anchor.dom.length(); ++i) {
    const Id& d = f->anchor.dom.edges[i];
    const Id& c = f->anchor.cod.edges[i];
    if (!m.one_eq(ones.at(d), ones.at(c)))
      return R::fail(cat("edges '", d, "' and '", c, "' carry different 1-cells"));
  }
  Bracketing s1, s2, s3;
  if (a.form == AssocForm::form1) {
    s1 = fs.dom.left().left();
    s2 = fs.dom.left().right();
    s3 = fs.dom.right();
  } else {
    s1 = fs.dom.left();
    s2 = fs.dom.right().left();
    s3 = fs.dom.right().right();
  }
  PathEvaluator<M> ev(m, ones);
  auto f1 = ev.eval(f->anchor.dom, s1, 0);
  auto f2 = ev.eval(f->anchor.dom, s2, s1.length());
  auto f3 = ev.eval(f->anchor.dom, s3, s1.length() + s2.length());
  if (a.form == AssocForm::form1) return m.associator_inv(f3, f2, f1);
  return m.associator(f3, f2, f1);
}

template <typename M>
struct CompositeResult {
  typename M::TwoCell value;
  std::vector<typename M::TwoCell> trace;  // one constituent per factor, in order
  ExtensionCertificate certificate;
};

// Composite 2-cell of the diagram along a certificate: resolves copied
// identifiers down to g's, builds each factor's constituent and folds them
// vertically, checking that consecutive boundaries chain.
template <typename M>
Result<CompositeResult<M>> compose_diagram(const M& m, const Diagram<M>& d,
                                           const ExtensionCertificate& cert) {
  using R = Result<CompositeResult<M>>;
  if (cert.scheme.factors.empty()) return R::fail("certificate has no factors");
  std::set<size_t> assoc(cert.assoc_indices.begin(), cert.assoc_indices.end());

  // Copied edges resolve to the edge they were copied from, transitively.
  std::map<Id, Id> parent;
  for (size_t i : assoc) {
    if (i >= cert.scheme.factors.size()) return R::fail("associativity index out of range");
    const ConsistentGraph& cg = cert.scheme.factors[i];
    const Face* f = cg.bg.g.face(cg.face_id);
    for (size_t j = 0; j < f->anchor.dom.length(); ++j)
      parent[f->anchor.cod.edges[j]] = f->anchor.dom.edges[j];
  }
  auto resolve = [&parent](Id e) {
    for (auto it = parent.find(e); it != parent.end(); it = parent.find(e)) e = it->second;
    return e;
  };
  std::map<Id, typename M::OneCell> ones;
  for (const ConsistentGraph& cg : cert.scheme.factors)
    for (const auto& [e, inc] : cg.bg.g.graph.edges) {
      if (ones.count(e)) continue;
      auto it = d.ones.find(resolve(e));
      if (it == d.ones.end())
        return R::fail(cat("edge '", e, "' does not resolve to an assigned edge"));
      ones.emplace(e, it->second);
    }

  CompositeResult<M> out{typename M::TwoCell{}, {}, cert};
  for (size_t i = 0; i < cert.scheme.factors.size(); ++i) {
    const ConsistentGraph& cg = cert.scheme.factors[i];
    typename M::TwoCell face_cell;
    if (assoc.count(i)) {
      auto ag = check_associativity(cg);
      if (!ag) return R::fail(cat("factor ", i, ": ", ag.error()));
      auto cell = canonical_extension_face(m, ones, *ag);
      if (!cell) return R::fail(cat("factor ", i, ": ", cell.error()));
      face_cell = std::move(cell).take();
    } else {
      auto it = d.twos.find(cg.face_id);
      if (it == d.twos.end())
        return R::fail(cat("face '", cg.face_id, "' has no 2-cell assigned"));
      face_cell = it->second;
    }
    typename M::TwoCell layer = constituent(m, ones, cg, face_cell);
    if (!out.trace.empty() && !m.one_eq(m.two_tgt(out.value), m.two_src(layer)))
      return R::fail(cat("factor ", i, " does not chain onto the previous composite"));
    out.value = out.trace.empty() ? layer : m.vcomp(layer, out.value);
    out.trace.push_back(std::move(layer));
  }
  return out;
}

}  // namespace bipaste
