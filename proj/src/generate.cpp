#include "bipaste/generate.hpp"

#include <algorithm>
#include <array>

namespace bipaste {

Bracketing random_bracketing(Rng& rng, size_t n) {
  if (n == 0) return Bracketing::empty();
  if (n == 1) return Bracketing::leaf();
  size_t k = 1 + rng.below(n - 1);
  return Bracketing::node(random_bracketing(rng, k), random_bracketing(rng, n - k));
}

BracketedGraph random_scheme(Rng& rng, const GeneratorConfig& cfg) {
  size_t vseq = 0, eseq = 0;
  auto vert = [&] { return cat("v", vseq++); };
  auto edge = [&] { return cat("e", ++eseq); };

  Graph gr;
  DirectedPath frontier;
  size_t width0 = 1 + rng.below(cfg.max_path_len);
  frontier.verts.push_back(vert());
  for (size_t i = 0; i < width0; ++i) {
    frontier.edges.push_back(edge());
    frontier.verts.push_back(vert());
  }
  for (const Id& v : frontier.verts) gr.vertices.insert(v);
  for (size_t i = 0; i < frontier.edges.size(); ++i)
    gr.edges[frontier.edges[i]] = {frontier.verts[i], frontier.verts[i + 1]};
  DirectedPath dom0 = frontier;

  std::vector<Face> faces;
  std::map<Id, FaceShapes> shapes;
  size_t nfaces = 1 + rng.below(cfg.max_faces);
  for (size_t i = 1; i <= nfaces; ++i) {
    size_t width = frontier.length();
    size_t lo = rng.below(width);
    size_t span = 1 + rng.below(width - lo);
    size_t hi = lo + span;
    size_t clen = 1 + rng.below(cfg.max_path_len - (width - span));
    DirectedPath cod;
    cod.verts.push_back(frontier.verts[lo]);
    for (size_t j = 1; j < clen; ++j) cod.verts.push_back(vert());
    cod.verts.push_back(frontier.verts[hi]);
    for (size_t j = 0; j < clen; ++j) cod.edges.push_back(edge());
    for (const Id& v : cod.verts) gr.vertices.insert(v);
    for (size_t j = 0; j < cod.edges.size(); ++j)
      gr.edges[cod.edges[j]] = {cod.verts[j], cod.verts[j + 1]};
    Id fid = cat("F", i);
    faces.push_back({fid, {frontier.verts[lo], frontier.verts[hi], frontier.sub(lo, hi), cod}});
    shapes[fid] = {random_bracketing(rng, span), random_bracketing(rng, clen)};
    frontier = frontier.splice(lo, hi, cod);
  }

  BracketedGraph bg;
  bg.g = make_anchored(std::move(gr), std::move(faces),
                       {dom0.source(), dom0.sink(), dom0, frontier});
  bg.dom_shape = random_bracketing(rng, dom0.length());
  bg.cod_shape = random_bracketing(rng, frontier.length());
  bg.face_shapes = std::move(shapes);
  return bg;
}

SpanModel::Object random_object(Rng& rng, const GeneratorConfig& cfg) {
  char base = static_cast<char>('a' + rng.below(26));
  size_t n = 1 + rng.below(cfg.max_object_size);
  std::vector<std::string> labels;
  for (size_t i = 0; i < n; ++i) labels.push_back(cat(base, i));
  return SpanModel::object(std::move(labels));
}

SpanModel::OneCell random_span(Rng& rng, const SpanModel::Object& src,
                               const SpanModel::Object& tgt) {
  size_t n = rng.below(4);
  std::vector<SpanModel::Elem> apex;
  std::vector<std::string> left, right;
  for (size_t i = 0; i < n; ++i) {
    apex.push_back(cat("a", i));
    left.push_back(src[rng.below(src.size())]);
    right.push_back(tgt[rng.below(tgt.size())]);
  }
  return SpanModel::span(src, tgt, std::move(apex), std::move(left), std::move(right)).take();
}

SpanModel::OneCell complete_span(const SpanModel::Object& src, const SpanModel::Object& tgt) {
  std::vector<SpanModel::Elem> apex;
  std::vector<std::string> left, right;
  for (const std::string& x : src)
    for (const std::string& y : tgt) {
      apex.push_back(cat(x, "*", y));
      left.push_back(x);
      right.push_back(y);
    }
  return SpanModel::span(src, tgt, std::move(apex), std::move(left), std::move(right)).take();
}

namespace {

// Rows of `c` whose legs match row `i` of `d`.
std::vector<size_t> fiber(const SpanModel::OneCell& c, const SpanModel::OneCell& d, size_t i) {
  std::vector<size_t> out;
  for (size_t j = 0; j < c.apex.size(); ++j)
    if (c.left[j] == d.left[i] && c.right[j] == d.right[i]) out.push_back(j);
  return out;
}

SpanModel::TwoCell random_map_onto(Rng& rng, const SpanModel::OneCell& d,
                                   const SpanModel::OneCell& c) {
  std::map<SpanModel::Elem, SpanModel::Elem> assignment;
  for (size_t i = 0; i < d.apex.size(); ++i) {
    std::vector<size_t> fib = fiber(c, d, i);
    assignment[d.apex[i]] = c.apex[fib[rng.below(fib.size())]];
  }
  return SpanModel::two_cell(d, c, assignment).take();
}

}  // namespace

RandomDiagram<SpanModel> random_span_diagram(Rng& rng, const GeneratorConfig& cfg) {
  RandomDiagram<SpanModel> out;
  out.g = random_scheme(rng, cfg);
  auto rec = find_presentation(out.g.g);
  out.p = std::get<Presentation>(rec);

  SpanModel m;
  out.d.shape = out.g;
  for (const Id& v : out.g.g.graph.vertices) out.d.objects[v] = random_object(rng, cfg);
  auto src_of = [&](const Id& e) -> const SpanModel::Object& {
    return out.d.objects.at(out.g.g.graph.edges.at(e).tail);
  };
  auto tgt_of = [&](const Id& e) -> const SpanModel::Object& {
    return out.d.objects.at(out.g.g.graph.edges.at(e).head);
  };
  for (const Id& e : out.g.g.outer.dom.edges)
    out.d.ones.emplace(e, random_span(rng, src_of(e), tgt_of(e)));

  for (const SchemeFactor& sf : out.p.factors) {
    const Face* f = out.g.g.face(sf.face_id);
    const FaceShapes& fs = out.g.face_shapes.at(sf.face_id);
    SpanModel::OneCell dom_comp = eval_bracketed_path(m, out.d.ones, f->anchor.dom, fs.dom);
    // Resample only this face's codomain edges until every domain apex
    // element has somewhere to go; complete spans always work.
    for (size_t attempt = 0;; ++attempt) {
      std::map<Id, SpanModel::OneCell> trial = out.d.ones;
      for (const Id& e : f->anchor.cod.edges) {
        trial.erase(e);
        trial.emplace(e, attempt < 60 ? random_span(rng, src_of(e), tgt_of(e))
                                      : complete_span(src_of(e), tgt_of(e)));
      }
      SpanModel::OneCell cod_comp = eval_bracketed_path(m, trial, f->anchor.cod, fs.cod);
      bool total = true;
      for (size_t i = 0; i < dom_comp.apex.size() && total; ++i)
        total = !fiber(cod_comp, dom_comp, i).empty();
      if (!total) continue;
      out.d.ones = std::move(trial);
      out.d.twos.emplace(sf.face_id, random_map_onto(rng, dom_comp, cod_comp));
      break;
    }
  }
  return out;
}

RandomDiagram<MatrixModel> random_matrix_diagram(Rng& rng, const GeneratorConfig& cfg) {
  RandomDiagram<MatrixModel> out;
  out.g = random_scheme(rng, cfg);
  auto rec = find_presentation(out.g.g);
  out.p = std::get<Presentation>(rec);

  out.d.shape = out.g;
  for (const Id& v : out.g.g.graph.vertices) out.d.objects[v] = MatrixModel::Object{};
  for (const Id& e : out.g.g.outer.dom.edges)
    out.d.ones.emplace(e, MatrixModel::OneCell{rng.below(3)});
  for (const SchemeFactor& sf : out.p.factors) {
    const Face* f = out.g.g.face(sf.face_id);
    std::uint64_t rows = 0, cols = 0;
    for (const Id& e : f->anchor.dom.edges) rows += out.d.ones.at(e).dim;
    for (const Id& e : f->anchor.cod.edges) {
      MatrixModel::OneCell c{rng.below(3)};
      out.d.ones.emplace(e, c);
      cols += c.dim;
    }
    std::vector<std::uint64_t> data(rows * cols);
    for (auto& x : data) x = rng.below(4);
    out.d.twos.emplace(sf.face_id, MatrixModel::matrix(rows, cols, std::move(data)));
  }
  return out;
}

SpanSkeleton random_span_skeleton(Rng& rng, const GeneratorConfig& cfg, size_t n) {
  SpanSkeleton out;
  std::vector<SpanModel::Object> objs;
  for (size_t i = 0; i <= n; ++i) objs.push_back(random_object(rng, cfg));
  out.path.verts.push_back("n0");
  for (size_t i = 1; i <= n; ++i) {
    Id e = cat("s", i);
    out.path.edges.push_back(e);
    out.path.verts.push_back(cat("n", i));
    out.ones.emplace(e, random_span(rng, objs[i - 1], objs[i]));
  }
  return out;
}

namespace {

// Parallel span mapped onto from `f`: a relabeled copy of f's apex plus a
// few extra rows, so every fiber the map needs is inhabited.
std::pair<SpanModel::OneCell, SpanModel::TwoCell> parallel_onto(Rng& rng,
                                                               const SpanModel::OneCell& f,
                                                               const std::string& tag) {
  std::vector<SpanModel::Elem> apex;
  std::vector<std::string> left, right;
  for (size_t i = 0; i < f.apex.size(); ++i) {
    apex.push_back(cat(tag, i));
    left.push_back(f.left[i]);
    right.push_back(f.right[i]);
  }
  size_t extras = rng.below(3);
  for (size_t j = 0; j < extras; ++j) {
    apex.push_back(cat(tag, "x", j));
    left.push_back(f.src[rng.below(f.src.size())]);
    right.push_back(f.tgt[rng.below(f.tgt.size())]);
  }
  SpanModel::OneCell tgt =
      SpanModel::span(f.src, f.tgt, std::move(apex), std::move(left), std::move(right)).take();
  return {tgt, random_map_onto(rng, f, tgt)};
}

}  // namespace

AxiomSample<SpanModel> random_span_sample(Rng& rng, const GeneratorConfig& cfg) {
  auto chain3 = [&](const SpanModel::Object& a, const SpanModel::Object& b) {
    SpanModel::OneCell f0 = random_span(rng, a, b);
    auto [f1, a1] = parallel_onto(rng, f0, "p");
    auto [f2, a2] = parallel_onto(rng, f1, "q");
    auto [f3, a3] = parallel_onto(rng, f2, "r");
    (void)f3;
    return std::array<SpanModel::TwoCell, 3>{a1, a2, a3};
  };
  SpanModel::Object v = random_object(rng, cfg), w = random_object(rng, cfg),
                    x = random_object(rng, cfg), y = random_object(rng, cfg),
                    z = random_object(rng, cfg);
  auto alphas = chain3(v, w);
  auto betas = chain3(w, x);
  auto gammas = chain3(x, y);
  return {alphas[0], alphas[1], alphas[2], betas[0], betas[1], gammas[0],
          random_span(rng, y, z)};
}

AxiomSample<MatrixModel> random_matrix_sample(Rng& rng) {
  auto mat = [&](std::uint64_t r, std::uint64_t c) {
    std::vector<std::uint64_t> data(r * c);
    for (auto& e : data) e = rng.below(4);
    return MatrixModel::matrix(r, c, std::move(data));
  };
  std::uint64_t f0 = rng.below(4), f1 = rng.below(4), f2 = rng.below(4), f3 = rng.below(4);
  std::uint64_t g0 = rng.below(4), g1 = rng.below(4), g2 = rng.below(4);
  std::uint64_t h0 = rng.below(4), h1 = rng.below(4);
  return {mat(f0, f1), mat(f1, f2), mat(f2, f3), mat(g0, g1),
          mat(g1, g2), mat(h0, h1), MatrixModel::OneCell{rng.below(4)}};
}

}  // namespace bipaste
