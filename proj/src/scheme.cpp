#include "bipaste/scheme.hpp"

#include <algorithm>

namespace bipaste {

namespace {

struct Candidate {
  size_t face_index;
  size_t pos;
};

// A face applies at the frontier when its domain sits there as a contiguous
// segment and its codomain brings only fresh material.
std::optional<size_t> applies_at(const DirectedPath& frontier, const Face& f) {
  auto pos = frontier.find_segment(f.anchor.dom.edges);
  if (!pos) return std::nullopt;
  size_t k = f.anchor.dom.length();
  for (size_t i = 0; i <= k; ++i)
    if (frontier.verts[*pos + i] != f.anchor.dom.verts[i]) return std::nullopt;
  std::set<Id> fverts(frontier.verts.begin(), frontier.verts.end());
  std::set<Id> fedges(frontier.edges.begin(), frontier.edges.end());
  for (const Id& e : f.anchor.cod.edges)
    if (fedges.count(e)) return std::nullopt;
  for (size_t i = 1; i + 1 < f.anchor.cod.verts.size(); ++i)
    if (fverts.count(f.anchor.cod.verts[i])) return std::nullopt;
  return pos;
}

std::vector<Candidate> candidates(const DirectedPath& frontier, const AnchoredGraph& g,
                                  const std::vector<bool>& used) {
  std::vector<Candidate> out;
  for (size_t i = 0; i < g.faces.size(); ++i) {
    if (used[i]) continue;
    if (auto pos = applies_at(frontier, g.faces[i])) out.push_back({i, *pos});
  }
  // Leftmost match first, then smallest face identifier; faces are already
  // sorted by identifier, so the index orders ties.
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.pos, a.face_index) < std::tie(b.pos, b.face_index);
  });
  return out;
}

SchemeFactor make_factor(const DirectedPath& frontier, const Face& f, size_t pos) {
  Graph gr;
  auto add_path = [&gr](const DirectedPath& p) {
    for (const Id& v : p.verts) gr.vertices.insert(v);
    for (size_t i = 0; i < p.edges.size(); ++i)
      gr.edges[p.edges[i]] = {p.verts[i], p.verts[i + 1]};
  };
  add_path(frontier);
  add_path(f.anchor.cod);
  DirectedPath cod = frontier.splice(pos, pos + f.anchor.dom.length(), f.anchor.cod);
  Anchor outer{frontier.source(), frontier.sink(), frontier, cod};
  return SchemeFactor{make_anchored(std::move(gr), {f}, std::move(outer)), f.id};
}

}  // namespace

RecognitionResult find_presentation(const AnchoredGraph& g) {
  auto fail = [&](const DirectedPath& frontier, const std::vector<bool>& used,
                  std::string reason) {
    RecognitionFailure rf;
    rf.frontier = frontier;
    for (size_t i = 0; i < g.faces.size(); ++i)
      if (!used[i]) rf.unused_faces.push_back(g.faces[i].id);
    rf.reason = std::move(reason);
    return rf;
  };

  if (g.faces.empty())
    return fail(g.outer.dom, {}, "no interior faces: not a pasting scheme");

  DirectedPath frontier = g.outer.dom;
  std::vector<bool> used(g.faces.size(), false);
  Presentation pres;
  for (size_t step = 0; step < g.faces.size(); ++step) {
    auto cands = candidates(frontier, g, used);
    if (cands.empty())
      return fail(frontier, used, "no remaining face applies along the frontier");
    const Candidate& c = cands.front();
    pres.factors.push_back(make_factor(frontier, g.faces[c.face_index], c.pos));
    frontier = pres.factors.back().atomic.outer.cod;
    used[c.face_index] = true;
  }
  if (!(frontier == g.outer.cod))
    return fail(frontier, used, "all faces consumed but the frontier is not the codomain");
  return pres;
}

namespace {

void enumerate_rec(const AnchoredGraph& g, const DirectedPath& frontier,
                   std::vector<bool>& used, std::vector<SchemeFactor>& acc,
                   std::vector<Presentation>& out) {
  if (acc.size() == g.faces.size()) {
    if (frontier == g.outer.cod) out.push_back(Presentation{acc});
    return;
  }
  for (const Candidate& c : candidates(frontier, g, used)) {
    acc.push_back(make_factor(frontier, g.faces[c.face_index], c.pos));
    used[c.face_index] = true;
    // Copy: recursion grows acc, which can reallocate under the reference.
    DirectedPath next = acc.back().atomic.outer.cod;
    enumerate_rec(g, next, used, acc, out);
    used[c.face_index] = false;
    acc.pop_back();
  }
}

}  // namespace

Result<std::vector<Presentation>> enumerate_presentations(const AnchoredGraph& g,
                                                          size_t max_faces) {
  if (g.faces.size() > max_faces)
    return Result<std::vector<Presentation>>::fail(
        cat("graph has ", g.faces.size(), " faces, enumeration capped at ", max_faces));
  std::vector<Presentation> out;
  std::vector<bool> used(g.faces.size(), false);
  std::vector<SchemeFactor> acc;
  enumerate_rec(g, g.outer.dom, used, acc, out);
  return out;
}

Result<AnchoredGraph> recompose(const Presentation& p) {
  if (p.factors.empty()) return Result<AnchoredGraph>::fail("presentation has no factors");
  AnchoredGraph acc = p.factors.front().atomic;
  for (size_t i = 1; i < p.factors.size(); ++i) {
    auto next = vertical_compose(acc, p.factors[i].atomic);
    if (!next)
      return Result<AnchoredGraph>::fail(cat("factor ", i, ": ", next.error()));
    acc = *next;
  }
  return acc;
}

Result<AnchoredGraph> canonical_relabel(const AnchoredGraph& g) {
  std::map<Id, size_t> vid, eid;
  size_t nv = 0, ne = 0;
  auto label_path = [&](const DirectedPath& p) {
    for (const Id& v : p.verts)
      if (!vid.count(v)) vid[v] = nv++;
    for (const Id& e : p.edges)
      if (!eid.count(e)) eid[e] = ne++;
  };
  label_path(g.outer.dom);

  Renaming ren;
  DirectedPath frontier = g.outer.dom;
  std::vector<bool> used(g.faces.size(), false);
  size_t nf = 0;
  for (size_t step = 0; step < g.faces.size(); ++step) {
    auto cands = candidates(frontier, g, used);
    if (cands.empty())
      return Result<AnchoredGraph>::fail("graph admits no full peel; no canonical form");
    // Prefer the face whose domain reads least in already-assigned labels.
    auto key = [&](const Candidate& c) {
      std::vector<size_t> k;
      for (const Id& e : g.faces[c.face_index].anchor.dom.edges) k.push_back(eid.at(e));
      return k;
    };
    const Candidate* best = &cands.front();
    for (const Candidate& c : cands) {
      auto kc = key(c), kb = key(*best);
      auto tc = std::tuple(kc, g.faces[c.face_index].anchor.cod.length(),
                           g.faces[c.face_index].id);
      auto tb = std::tuple(kb, g.faces[best->face_index].anchor.cod.length(),
                           g.faces[best->face_index].id);
      if (tc < tb) best = &c;
    }
    const Face& f = g.faces[best->face_index];
    label_path(f.anchor.cod);
    ren.faces[f.id] = cat("F", ++nf);
    frontier = frontier.splice(best->pos, best->pos + f.anchor.dom.length(), f.anchor.cod);
    used[best->face_index] = true;
  }
  if (!(frontier == g.outer.cod))
    return Result<AnchoredGraph>::fail("peel finished off the codomain; no canonical form");
  if (vid.size() != g.graph.vertices.size() || eid.size() != g.graph.edges.size())
    return Result<AnchoredGraph>::fail("peel did not visit every identifier");
  for (const auto& [v, i] : vid) ren.verts[v] = cat("v", i);
  for (const auto& [e, i] : eid) ren.edges[e] = cat("e", i + 1);
  return rename(g, ren);
}

bool isomorphic(const AnchoredGraph& a, const AnchoredGraph& b) {
  if (a == b) return true;
  auto ca = canonical_relabel(a);
  auto cb = canonical_relabel(b);
  if (!ca || !cb) return false;
  return *ca == *cb;
}

}  // namespace bipaste
