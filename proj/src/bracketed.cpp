#include "bipaste/bracketed.hpp"

#include <algorithm>

namespace bipaste {

ValidationReport validate_bracketed(const BracketedGraph& bg) {
  ValidationReport rep = validate_anchored(bg.g);
  auto bad = [&](std::string subject, std::string msg) {
    rep.violations.push_back({std::move(subject), std::move(msg)});
  };
  auto check_len = [&](const std::string& subject, const DirectedPath& p, const Bracketing& b) {
    if (b.length() != p.length())
      bad(subject, cat("bracketing of length ", b.length(), " on a path of length ", p.length()));
  };
  check_len("domain", bg.g.outer.dom, bg.dom_shape);
  check_len("codomain", bg.g.outer.cod, bg.cod_shape);
  for (const Face& f : bg.g.faces) {
    auto it = bg.face_shapes.find(f.id);
    if (it == bg.face_shapes.end()) {
      bad(cat("face ", f.id), "no bracketings assigned");
      continue;
    }
    check_len(cat("face ", f.id, " domain"), f.anchor.dom, it->second.dom);
    check_len(cat("face ", f.id, " codomain"), f.anchor.cod, it->second.cod);
  }
  for (const auto& [id, shapes] : bg.face_shapes)
    if (!bg.g.face(id)) bad(cat("face ", id), "bracketings assigned to a missing face");
  return rep;
}

Bracketing whisker_shape(size_t m, const Bracketing& mid, size_t n) {
  Bracketing t = mid;
  if (m > 0) t = Bracketing::node(left_normalized(m), t);
  if (n > 0) t = Bracketing::node(t, left_normalized(n));
  return t;
}

Result<ConsistentGraph> check_consistent(const BracketedGraph& bg) {
  using R = Result<ConsistentGraph>;
  auto decomp = atomic_decomposition(bg.g);
  if (!decomp) return R::fail("underlying graph is not atomic");
  const Face& f = decomp->face;
  auto it = bg.face_shapes.find(f.id);
  if (it == bg.face_shapes.end()) return R::fail(cat("face ", f.id, " has no bracketings"));
  const FaceShapes& fs = it->second;
  size_t m = decomp->prefix.length();
  size_t n = decomp->suffix.length();
  if (bg.dom_shape.length() != bg.g.outer.dom.length() ||
      bg.cod_shape.length() != bg.g.outer.cod.length() ||
      fs.dom.length() != f.anchor.dom.length() || fs.cod.length() != f.anchor.cod.length())
    return R::fail("bracketing lengths disagree with path lengths");

  auto pos_d = bg.dom_shape.subtree_spanning(m, m + fs.dom.length());
  if (!pos_d)
    return R::fail(cat("face domain segment [", m, ", ", m + fs.dom.length(),
                       ") is not a subtree of the domain bracketing: ", pos_d.error()));
  if (bg.dom_shape.at(*pos_d) != fs.dom)
    return R::fail(cat("domain bracketing carries ", bg.dom_shape.at(*pos_d).str(),
                       " over the face segment, face says ", fs.dom.str()));
  auto pos_c = bg.cod_shape.subtree_spanning(m, m + fs.cod.length());
  if (!pos_c)
    return R::fail(cat("face codomain segment [", m, ", ", m + fs.cod.length(),
                       ") is not a subtree of the codomain bracketing: ", pos_c.error()));
  if (bg.cod_shape.at(*pos_c) != fs.cod)
    return R::fail(cat("codomain bracketing carries ", bg.cod_shape.at(*pos_c).str(),
                       " over the face segment, face says ", fs.cod.str()));

  Bracketing b_dom = bg.dom_shape.replace(*pos_d, Bracketing::leaf());
  Bracketing b_cod = bg.cod_shape.replace(*pos_c, Bracketing::leaf());
  if (b_dom != b_cod)
    return R::fail(cat("outer bracketings differ: ", b_dom.str(), " vs ", b_cod.str()));
  ConsistentGraph cg;
  cg.bg = bg;
  cg.outer = b_dom;
  cg.prefix_len = m;
  cg.suffix_len = n;
  cg.face_id = f.id;
  return cg;
}

Result<AssociativityGraph> check_associativity(const ConsistentGraph& cg) {
  using R = Result<AssociativityGraph>;
  const FaceShapes& fs = cg.bg.face_shapes.at(cg.face_id);
  const Bracketing& bd = fs.dom;
  const Bracketing& bc = fs.cod;
  if (!bd.is_node() || !bc.is_node())
    return R::fail("face boundary bracketings are too short for an associator");
  if (bd.is_node() && bd.left().is_node()) {
    const Bracketing& e1 = bd.left().left();
    const Bracketing& e2 = bd.left().right();
    const Bracketing& e3 = bd.right();
    if (bc == Bracketing::node(e1, Bracketing::node(e2, e3))) {
      AssociativityGraph a{cg, AssocForm::form1, {e1.length(), e2.length(), e3.length()}};
      return a;
    }
  }
  if (bd.is_node() && bd.right().is_node()) {
    const Bracketing& e1 = bd.left();
    const Bracketing& e2 = bd.right().left();
    const Bracketing& e3 = bd.right().right();
    if (bc == Bracketing::node(Bracketing::node(e1, e2), e3)) {
      AssociativityGraph a{cg, AssocForm::form2, {e1.length(), e2.length(), e3.length()}};
      return a;
    }
  }
  return R::fail(cat("face bracketings ", bd.str(), " => ", bc.str(),
                     " are not a single associator instance"));
}

BracketedComposeResult vertical_compose_bracketed(const BracketedGraph& g,
                                                  const BracketedGraph& h) {
  auto traced = vertical_compose_traced(g.g, h.g);
  if (!traced)
    return BracketedComposeError{BracketErrorKind::anchored, traced.error()};
  if (g.cod_shape != h.dom_shape)
    return BracketedComposeError{
        BracketErrorKind::bracket, cat("interface bracketings differ: ", g.cod_shape.str(),
                                       " vs ", h.dom_shape.str())};
  BracketedGraph out;
  out.g = std::move(traced.value().graph);
  out.dom_shape = g.dom_shape;
  out.cod_shape = h.cod_shape;
  out.face_shapes = g.face_shapes;
  for (const auto& [id, fs] : h.face_shapes) {
    auto ren = traced.value().applied.faces.find(id);
    out.face_shapes[ren == traced.value().applied.faces.end() ? id : ren->second] = fs;
  }
  return out;
}

Result<CompositionScheme> compose_scheme(std::vector<ConsistentGraph> factors) {
  using R = Result<CompositionScheme>;
  if (factors.empty()) return R::fail("a composition scheme needs at least one factor");
  BracketedGraph acc = factors.front().bg;
  for (size_t i = 1; i < factors.size(); ++i) {
    auto step = vertical_compose_bracketed(acc, factors[i].bg);
    if (auto* err = std::get_if<BracketedComposeError>(&step))
      return R::fail(cat("factor ", i, ": ", err->message));
    acc = std::get<BracketedGraph>(std::move(step));
  }
  CompositionScheme s;
  s.factors = std::move(factors);
  s.composed = std::move(acc);
  return s;
}

Result<BracketedGraph> collapse(const BracketedGraph& h, const AssociativityGraph& a) {
  using R = Result<BracketedGraph>;
  const Face* f = h.g.face(a.cg.face_id);
  if (!f) return R::fail(cat("face ", a.cg.face_id, " does not occur in the graph"));
  auto it = h.face_shapes.find(f->id);
  if (it == h.face_shapes.end()) return R::fail(cat("face ", f->id, " has no bracketings"));
  const FaceShapes& want = a.cg.bg.face_shapes.at(a.cg.face_id);
  if (!(it->second == want))
    return R::fail(cat("face ", f->id, " bracketings do not match the associativity data"));
  size_t n = f->anchor.dom.length();
  if (f->anchor.cod.length() != n)
    return R::fail(cat("face ", f->id, " boundary paths have different lengths"));

  // Identify codomain with domain, positionwise; domain-side names survive.
  Renaming sigma;
  for (size_t i = 0; i < n; ++i) {
    const Id& d = f->anchor.dom.edges[i];
    const Id& c = f->anchor.cod.edges[i];
    if (d == c) return R::fail(cat("edge ", d, " lies on both sides of the face"));
    sigma.edges[c] = d;
  }
  std::set<Id> dom_verts(f->anchor.dom.verts.begin(), f->anchor.dom.verts.end());
  for (size_t i = 1; i + 1 < f->anchor.cod.verts.size(); ++i) {
    const Id& w = f->anchor.cod.verts[i];
    const Id& v = f->anchor.dom.verts[i];
    if (w == v) continue;
    if (dom_verts.count(w))
      return R::fail(cat("vertex ", w, " would be pinched by the collapse"));
    sigma.verts[w] = v;
  }

  AnchoredGraph g2 = h.g;
  std::vector<Face> faces;
  for (const Face& other : g2.faces)
    if (other.id != f->id) faces.push_back(other);
  g2.faces = std::move(faces);
  for (const auto& [c, d] : sigma.edges) g2.graph.edges.erase(c);
  for (const auto& [w, v] : sigma.verts) g2.graph.vertices.erase(w);
  AnchoredGraph renamed = rename(g2, sigma);

  BracketedGraph out;
  out.g = std::move(renamed);
  out.dom_shape = h.dom_shape;
  out.cod_shape = h.cod_shape;
  out.face_shapes = h.face_shapes;
  out.face_shapes.erase(f->id);
  return out;
}

void NameSupply::absorb(const BracketedGraph& g) {
  for (const Id& v : g.g.graph.vertices) taken.insert(v);
  for (const auto& [e, inc] : g.g.graph.edges) taken.insert(e);
  for (const Face& f : g.g.faces) taken.insert(f.id);
}

Id NameSupply::fresh(const Id& base) {
  Id name;
  do {
    name = cat(base, "~", ++counter);
  } while (taken.count(name));
  taken.insert(name);
  return name;
}

namespace {

DirectedPath copy_segment(const DirectedPath& seg, NameSupply& names) {
  DirectedPath out;
  out.verts.push_back(seg.source());
  for (size_t i = 1; i + 1 < seg.verts.size(); ++i)
    out.verts.push_back(names.fresh(seg.verts[i]));
  if (seg.verts.size() > 1) out.verts.push_back(seg.sink());
  for (const Id& e : seg.edges) out.edges.push_back(names.fresh(e));
  return out;
}

Graph graph_of_paths(const std::vector<const DirectedPath*>& paths) {
  Graph gr;
  for (const DirectedPath* p : paths) {
    for (const Id& v : p->verts) gr.vertices.insert(v);
    for (size_t i = 0; i < p->edges.size(); ++i)
      gr.edges[p->edges[i]] = {p->verts[i], p->verts[i + 1]};
  }
  return gr;
}

}  // namespace

ConsistentGraph associator_move_factor(const DirectedPath& frontier, const Bracketing& shape,
                                       const AssocMove& move, NameSupply& names) {
  Bracketing after = apply_move(shape, move).take();
  size_t lo = shape.leaf_offset(move.position);
  size_t span = shape.at(move.position).length();
  size_t hi = lo + span;
  DirectedPath dom_seg = frontier.sub(lo, hi);
  DirectedPath cod_seg = copy_segment(dom_seg, names);
  Id face_id = names.fresh("A");
  Face face{face_id,
            {frontier.verts[lo], frontier.verts[hi], dom_seg, cod_seg}};
  DirectedPath cod = frontier.splice(lo, hi, cod_seg);
  Anchor outer{frontier.source(), frontier.sink(), frontier, cod};
  BracketedGraph bg;
  bg.g = make_anchored(graph_of_paths({&frontier, &cod_seg}), {face}, outer);
  bg.dom_shape = shape;
  bg.cod_shape = after;
  bg.face_shapes[face_id] = {shape.at(move.position), after.at(move.position)};
  ConsistentGraph cg;
  cg.bg = std::move(bg);
  cg.outer = shape.replace(move.position, Bracketing::leaf());
  cg.prefix_len = lo;
  cg.suffix_len = frontier.length() - hi;
  cg.face_id = face_id;
  return cg;
}

namespace {

// Canonical chain between interface bracketings; segments listed in
// `frozen` are kept intact when both endpoint trees allow it.
Result<std::vector<AssocMove>> interface_chain(
    const Bracketing& from, const Bracketing& to,
    const std::vector<std::pair<size_t, size_t>>& frozen) {
  if (from == to) return std::vector<AssocMove>{};
  for (const auto& [lo, hi] : frozen) {
    auto chain = chain_with_frozen_segment(from, to, lo, hi);
    if (chain) return chain;
  }
  return associator_chain(from, to);
}

}  // namespace

Result<ExtensionCertificate> extend_to_composition_scheme(const BracketedGraph& g,
                                                          const Presentation& p) {
  using R = Result<ExtensionCertificate>;
  if (p.factors.empty()) return R::fail("presentation has no factors");
  if (p.factors.size() != g.g.faces.size())
    return R::fail("presentation does not cover the graph's faces");

  NameSupply names(g);
  DirectedPath frontier = g.g.outer.dom;
  Bracketing shape = g.dom_shape;
  std::vector<ConsistentGraph> factors;
  std::vector<size_t> assoc_indices;

  auto emit_chain = [&](const Bracketing& target,
                        const std::vector<std::pair<size_t, size_t>>& frozen) -> Result<bool> {
    auto chain = interface_chain(shape, target, frozen);
    if (!chain) return Result<bool>::fail(chain.error());
    for (const AssocMove& m : *chain) {
      ConsistentGraph a = associator_move_factor(frontier, shape, m, names);
      frontier = a.bg.g.outer.cod;
      shape = a.bg.cod_shape;
      assoc_indices.push_back(factors.size());
      factors.push_back(std::move(a));
    }
    if (shape != target) return Result<bool>::fail("chain did not reach the target bracketing");
    return true;
  };

  for (const SchemeFactor& sf : p.factors) {
    auto decomp = atomic_decomposition(sf.atomic);
    if (!decomp) return R::fail(cat("presentation factor for ", sf.face_id, " is not atomic"));
    const Face* orig = g.g.face(sf.face_id);
    if (!orig) return R::fail(cat("presentation mentions unknown face ", sf.face_id));
    auto fs_it = g.face_shapes.find(sf.face_id);
    if (fs_it == g.face_shapes.end())
      return R::fail(cat("face ", sf.face_id, " has no bracketings"));
    const FaceShapes& fs = fs_it->second;
    size_t m = decomp->prefix.length();
    size_t k = orig->anchor.dom.length();
    size_t n = decomp->suffix.length();
    if (m + k + n != frontier.length())
      return R::fail(cat("factor for ", sf.face_id, " does not fit the frontier"));

    Bracketing delta = whisker_shape(m, fs.dom, n);
    auto ok = emit_chain(delta, {{m, m + k}});
    if (!ok) return R::fail(cat("interface into ", sf.face_id, ": ", ok.error()));

    DirectedPath dom_seg = frontier.sub(m, m + k);
    // The face keeps its original codomain names so collapsing the inserted
    // associativity faces restores the input graph literally, but its
    // endpoints are the frontier's, which may be copies by now.
    DirectedPath cod_path = orig->anchor.cod;
    cod_path.verts.front() = frontier.verts[m];
    cod_path.verts.back() = frontier.verts[m + k];
    Face face{sf.face_id, {frontier.verts[m], frontier.verts[m + k], dom_seg, cod_path}};
    DirectedPath cod = frontier.splice(m, m + k, cod_path);
    BracketedGraph bg;
    bg.g = make_anchored(graph_of_paths({&frontier, &cod_path}), {face},
                         {frontier.source(), frontier.sink(), frontier, cod});
    bg.dom_shape = delta;
    bg.cod_shape = whisker_shape(m, fs.cod, n);
    bg.face_shapes[sf.face_id] = fs;
    ConsistentGraph cg;
    cg.bg = std::move(bg);
    cg.outer = whisker_shape(m, Bracketing::leaf(), n);
    cg.prefix_len = m;
    cg.suffix_len = n;
    cg.face_id = sf.face_id;

    frontier = cg.bg.g.outer.cod;
    shape = cg.bg.cod_shape;
    factors.push_back(std::move(cg));

    if (&sf == &p.factors.back()) {
      auto done = emit_chain(g.cod_shape, {{m, m + orig->anchor.cod.length()}});
      if (!done) return R::fail(cat("interface out of ", sf.face_id, ": ", done.error()));
    }
  }

  auto scheme = compose_scheme(std::move(factors));
  if (!scheme) return R::fail(scheme.error());
  ExtensionCertificate cert;
  cert.scheme = std::move(scheme).take();
  cert.assoc_indices = std::move(assoc_indices);
  return cert;
}

bool verify_extension(const ExtensionCertificate& cert, const BracketedGraph& g,
                      std::string* why) {
  auto fail = [&](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  const auto& factors = cert.scheme.factors;
  if (factors.empty()) return fail("certificate has no factors");
  std::set<size_t> assoc(cert.assoc_indices.begin(), cert.assoc_indices.end());
  if (assoc.size() != cert.assoc_indices.size()) return fail("duplicate associativity indices");

  std::vector<ConsistentGraph> checked;
  std::vector<AssociativityGraph> inserted;
  std::multiset<Id> presented;
  for (size_t i = 0; i < factors.size(); ++i) {
    auto cg = check_consistent(factors[i].bg);
    if (!cg) return fail(cat("factor ", i, " is not consistent: ", cg.error()));
    if (assoc.count(i)) {
      auto ag = check_associativity(*cg);
      if (!ag) return fail(cat("factor ", i, " is not an associativity graph: ", ag.error()));
      inserted.push_back(std::move(ag).take());
    } else {
      presented.insert(cg->face_id);
    }
    checked.push_back(std::move(cg).take());
  }
  if (assoc.size() >= factors.size())
    return fail("every factor is an associativity graph; nothing is presented");
  std::multiset<Id> want;
  for (const Face& f : g.g.faces) want.insert(f.id);
  if (presented != want) return fail("non-associativity factors do not cover g's faces");

  auto composed = compose_scheme(checked);
  if (!composed) return fail(cat("factors do not compose: ", composed.error()));
  const BracketedGraph& h = composed->composed;
  if (h.dom_shape != g.dom_shape || h.cod_shape != g.cod_shape)
    return fail("composite boundary bracketings differ from g's");
  if (!(h.g.outer.dom == g.g.outer.dom))
    return fail("composite domain path differs from g's");

  BracketedGraph collapsed = h;
  for (const AssociativityGraph& a : inserted) {
    auto next = collapse(collapsed, a);
    if (!next) return fail(cat("collapse of ", a.cg.face_id, " failed: ", next.error()));
    collapsed = std::move(next).take();
  }
  if (!(collapsed == g)) return fail("collapsing the certificate does not give g back");
  return true;
}

namespace {

void render_bracketed(const DirectedPath& p, const Bracketing& b, size_t lo, bool outer,
                      std::string& out) {
  if (b.is_leaf()) {
    out += p.edges[lo];
    return;
  }
  if (!outer) out += '(';
  render_bracketed(p, b.left(), lo, false, out);
  out += ' ';
  render_bracketed(p, b.right(), lo + b.left().length(), false, out);
  if (!outer) out += ')';
}

}  // namespace

std::string bracketed_path_str(const DirectedPath& p, const Bracketing& shape) {
  if (shape.length() != p.length())
    throw std::invalid_argument("bracketed_path_str: length mismatch");
  if (p.is_trivial()) return cat("(", p.source(), ")");
  std::string out;
  render_bracketed(p, shape, 0, true, out);
  return out;
}

}  // namespace bipaste
