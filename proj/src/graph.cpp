#include "bipaste/graph.hpp"

#include <algorithm>
#include <queue>

namespace bipaste {

DirectedPath DirectedPath::sub(size_t from, size_t to) const {
  DirectedPath out;
  out.verts.assign(verts.begin() + from, verts.begin() + to + 1);
  out.edges.assign(edges.begin() + from, edges.begin() + to);
  return out;
}

DirectedPath DirectedPath::splice(size_t from, size_t to, const DirectedPath& mid) const {
  if (mid.source() != verts[from] || mid.sink() != verts[to])
    throw std::invalid_argument("splice: replacement endpoints do not match cut");
  DirectedPath out;
  out.verts.assign(verts.begin(), verts.begin() + from);
  out.verts.insert(out.verts.end(), mid.verts.begin(), mid.verts.end());
  out.verts.insert(out.verts.end(), verts.begin() + to + 1, verts.end());
  out.edges.assign(edges.begin(), edges.begin() + from);
  out.edges.insert(out.edges.end(), mid.edges.begin(), mid.edges.end());
  out.edges.insert(out.edges.end(), edges.begin() + to, edges.end());
  return out;
}

std::optional<size_t> DirectedPath::find_segment(const std::vector<Id>& segment) const {
  if (segment.empty() || segment.size() > edges.size()) return std::nullopt;
  for (size_t i = 0; i + segment.size() <= edges.size(); ++i) {
    if (std::equal(segment.begin(), segment.end(), edges.begin() + i)) return i;
  }
  return std::nullopt;
}

Result<DirectedPath> path_from_edges(const Graph& g, const std::vector<Id>& edges) {
  if (edges.empty()) return Result<DirectedPath>::fail("empty edge list has no start vertex");
  DirectedPath p;
  for (size_t i = 0; i < edges.size(); ++i) {
    auto it = g.edges.find(edges[i]);
    if (it == g.edges.end())
      return Result<DirectedPath>::fail(cat("unknown edge '", edges[i], "'"));
    if (i == 0) p.verts.push_back(it->second.tail);
    if (p.verts.back() != it->second.tail)
      return Result<DirectedPath>::fail(
          cat("edges '", edges[i - 1], "' and '", edges[i], "' are not consecutive"));
    p.verts.push_back(it->second.head);
    p.edges.push_back(edges[i]);
  }
  return p;
}

const Face* AnchoredGraph::face(const Id& id) const {
  for (const Face& f : faces)
    if (f.id == id) return &f;
  return nullptr;
}

AnchoredGraph make_anchored(Graph g, std::vector<Face> faces, Anchor outer) {
  std::sort(faces.begin(), faces.end(),
            [](const Face& a, const Face& b) { return a.id < b.id; });
  return AnchoredGraph{std::move(g), std::move(faces), std::move(outer)};
}

std::string ValidationReport::summary() const {
  std::vector<std::string> lines;
  for (const Violation& v : violations) lines.push_back(v.subject + ": " + v.message);
  return join(lines, "\n");
}

namespace {

void check_path(const Graph& g, const DirectedPath& p, const std::string& subject,
                ValidationReport& rep) {
  auto bad = [&](std::string msg) { rep.violations.push_back({subject, std::move(msg)}); };
  if (p.verts.empty()) {
    bad("path has no vertices");
    return;
  }
  if (p.verts.size() != p.edges.size() + 1) {
    bad("vertex/edge counts disagree");
    return;
  }
  std::set<Id> seen;
  for (const Id& v : p.verts) {
    if (!g.has_vertex(v)) bad(cat("unknown vertex '", v, "'"));
    if (!seen.insert(v).second) bad(cat("vertex '", v, "' repeats along the path"));
  }
  for (size_t i = 0; i < p.edges.size(); ++i) {
    auto it = g.edges.find(p.edges[i]);
    if (it == g.edges.end()) {
      bad(cat("unknown edge '", p.edges[i], "'"));
      continue;
    }
    if (it->second.tail != p.verts[i] || it->second.head != p.verts[i + 1])
      bad(cat("edge '", p.edges[i], "' does not run ", p.verts[i], " -> ", p.verts[i + 1]));
  }
}

// Interior anchors bound a disk, so their two paths may share nothing but
// the endpoints.  The exterior anchor has no such constraint: a bridge edge
// has the exterior on both sides and lies on both exterior paths.
void check_anchor(const Graph& g, const Anchor& a, const std::string& subject, bool interior,
                  ValidationReport& rep) {
  auto bad = [&](std::string msg) { rep.violations.push_back({subject, std::move(msg)}); };
  if (a.source == a.sink) bad("source equals sink");
  check_path(g, a.dom, subject + " domain", rep);
  check_path(g, a.cod, subject + " codomain", rep);
  if (!a.dom.verts.empty() && (a.dom.source() != a.source || a.dom.sink() != a.sink))
    bad("domain path does not run source -> sink");
  if (!a.cod.verts.empty() && (a.cod.source() != a.source || a.cod.sink() != a.sink))
    bad("codomain path does not run source -> sink");
  if (!interior) return;
  std::set<Id> dom_edges(a.dom.edges.begin(), a.dom.edges.end());
  for (const Id& e : a.cod.edges)
    if (dom_edges.count(e)) bad(cat("edge '", e, "' lies on both boundary paths"));
  std::set<Id> inner;
  for (size_t i = 1; i + 1 < a.dom.verts.size(); ++i) inner.insert(a.dom.verts[i]);
  for (size_t i = 1; i + 1 < a.cod.verts.size(); ++i)
    if (inner.count(a.cod.verts[i]))
      bad(cat("vertex '", a.cod.verts[i], "' pinches the face interior"));
}

bool connected(const Graph& g) {
  if (g.vertices.empty()) return false;
  std::map<Id, std::vector<Id>> adj;
  for (const auto& [e, inc] : g.edges) {
    adj[inc.tail].push_back(inc.head);
    adj[inc.head].push_back(inc.tail);
  }
  std::set<Id> seen;
  std::queue<Id> q;
  q.push(*g.vertices.begin());
  seen.insert(*g.vertices.begin());
  while (!q.empty()) {
    Id v = q.front();
    q.pop();
    for (const Id& w : adj[v])
      if (seen.insert(w).second) q.push(w);
  }
  return seen.size() == g.vertices.size();
}

}  // namespace

ValidationReport validate_anchored(const AnchoredGraph& g) {
  ValidationReport rep;
  auto bad = [&](std::string subject, std::string msg) {
    rep.violations.push_back({std::move(subject), std::move(msg)});
  };

  if (g.graph.vertices.size() < 2) bad("graph", "fewer than two vertices");
  if (g.graph.edges.size() < 2) bad("graph", "fewer than two edges");
  for (const auto& [e, inc] : g.graph.edges) {
    if (!g.graph.has_vertex(inc.tail) || !g.graph.has_vertex(inc.head))
      bad(cat("edge ", e), "incidence mentions an unknown vertex");
    if (g.graph.has_vertex(e)) bad(cat("edge ", e), "name collides with a vertex");
  }
  if (!connected(g.graph)) bad("graph", "not connected");

  std::set<Id> face_ids;
  for (const Face& f : g.faces) {
    if (!face_ids.insert(f.id).second) bad(cat("face ", f.id), "duplicate face identifier");
    check_anchor(g.graph, f.anchor, cat("face ", f.id), true, rep);
  }
  check_anchor(g.graph, g.outer, "exterior", false, rep);

  // Every edge must be covered exactly twice by the boundary walks, counting
  // the exterior walk codom_G . dom_G* as one of them.
  std::map<Id, int> cover;
  for (const Face& f : g.faces) {
    for (const Id& e : f.anchor.dom.edges) cover[e]++;
    for (const Id& e : f.anchor.cod.edges) cover[e]++;
  }
  for (const Id& e : g.outer.dom.edges) cover[e]++;
  for (const Id& e : g.outer.cod.edges) cover[e]++;
  for (const auto& [e, inc] : g.graph.edges) {
    int n = cover.count(e) ? cover.at(e) : 0;
    if (n != 2) bad(cat("edge ", e), cat("covered ", n, " times by boundary walks, want 2"));
  }
  for (const auto& [e, n] : cover)
    if (!g.graph.has_edge(e)) bad(cat("edge ", e), "appears on a boundary but not in the graph");

  long v = static_cast<long>(g.graph.vertices.size());
  long e = static_cast<long>(g.graph.edges.size());
  long f = static_cast<long>(g.faces.size()) + 1;
  if (v - e + f != 2)
    bad("graph", cat("Euler relation fails: ", v, " - ", e, " + ", f, " = ", v - e + f));

  return rep;
}

std::optional<AtomicShape> atomic_decomposition(const AnchoredGraph& g) {
  if (g.faces.size() != 1) return std::nullopt;
  const Face& f = g.faces.front();
  auto pos = g.outer.dom.find_segment(f.anchor.dom.edges);
  if (!pos) return std::nullopt;
  size_t m = *pos;
  size_t k = f.anchor.dom.length();
  if (g.outer.dom.verts[m] != f.anchor.source ||
      g.outer.dom.verts[m + k] != f.anchor.sink)
    return std::nullopt;
  // The codomain must be the same whiskers around the face codomain.
  size_t n = g.outer.dom.length() - m - k;
  if (g.outer.cod.length() != m + f.anchor.cod.length() + n) return std::nullopt;
  AtomicShape shape;
  shape.prefix = g.outer.dom.sub(0, m);
  shape.face = f;
  shape.suffix = g.outer.dom.sub(m + k, g.outer.dom.length());
  DirectedPath want = g.outer.dom.splice(m, m + k, f.anchor.cod);
  if (!(want == g.outer.cod)) return std::nullopt;
  return shape;
}

bool is_atomic(const AnchoredGraph& g) { return atomic_decomposition(g).has_value(); }

DirectedPath rename(const DirectedPath& p, const Renaming& r) {
  auto get = [](const std::map<Id, Id>& m, const Id& x) {
    auto it = m.find(x);
    return it == m.end() ? x : it->second;
  };
  DirectedPath out;
  for (const Id& v : p.verts) out.verts.push_back(get(r.verts, v));
  for (const Id& e : p.edges) out.edges.push_back(get(r.edges, e));
  return out;
}

AnchoredGraph rename(const AnchoredGraph& g, const Renaming& r) {
  auto get = [](const std::map<Id, Id>& m, const Id& x) {
    auto it = m.find(x);
    return it == m.end() ? x : it->second;
  };
  Graph gr;
  for (const Id& v : g.graph.vertices) gr.vertices.insert(get(r.verts, v));
  for (const auto& [e, inc] : g.graph.edges)
    gr.edges[get(r.edges, e)] = {get(r.verts, inc.tail), get(r.verts, inc.head)};
  auto ren_anchor = [&](const Anchor& a) {
    return Anchor{get(r.verts, a.source), get(r.verts, a.sink), rename(a.dom, r),
                  rename(a.cod, r)};
  };
  std::vector<Face> faces;
  for (const Face& f : g.faces) faces.push_back({get(r.faces, f.id), ren_anchor(f.anchor)});
  return make_anchored(std::move(gr), std::move(faces), ren_anchor(g.outer));
}

Result<ComposeTrace> vertical_compose_traced(const AnchoredGraph& g, const AnchoredGraph& h) {
  const DirectedPath& mid_g = g.outer.cod;
  const DirectedPath& mid_h = h.outer.dom;
  if (mid_g.length() != mid_h.length())
    return Result<ComposeTrace>::fail(
        cat("interface mismatch: codomain has ", mid_g.length(), " edges, domain has ",
            mid_h.length()));
  for (size_t i = 0; i < mid_g.verts.size(); ++i) {
    if (mid_g.verts[i] != mid_h.verts[i])
      return Result<ComposeTrace>::fail(cat("interface mismatch at vertex position ", i, ": '",
                                            mid_g.verts[i], "' vs '", mid_h.verts[i], "'"));
    if (i < mid_g.edges.size() && mid_g.edges[i] != mid_h.edges[i])
      return Result<ComposeTrace>::fail(cat("interface mismatch at edge position ", i, ": '",
                                            mid_g.edges[i], "' vs '", mid_h.edges[i], "'"));
  }

  // Rename h's identifiers off the interface wherever they collide with g's.
  std::set<Id> interface_ids(mid_h.verts.begin(), mid_h.verts.end());
  interface_ids.insert(mid_h.edges.begin(), mid_h.edges.end());
  std::set<Id> taken = g.graph.vertices;
  for (const auto& [e, inc] : g.graph.edges) taken.insert(e);
  for (const Id& v : h.graph.vertices) taken.insert(v);
  for (const auto& [e, inc] : h.graph.edges) taken.insert(e);

  auto fresh = [&taken](Id base) {
    Id name = std::move(base);
    do {
      name += "'";
    } while (taken.count(name));
    taken.insert(name);
    return name;
  };

  Renaming ren;
  std::set<Id> g_ids = g.graph.vertices;
  for (const auto& [e, inc] : g.graph.edges) g_ids.insert(e);
  for (const Id& v : h.graph.vertices)
    if (!interface_ids.count(v) && g_ids.count(v)) ren.verts[v] = fresh(v);
  for (const auto& [e, inc] : h.graph.edges)
    if (!interface_ids.count(e) && g_ids.count(e)) ren.edges[e] = fresh(e);
  std::set<Id> g_face_ids;
  for (const Face& f : g.faces) g_face_ids.insert(f.id);
  std::set<Id> taken_faces = g_face_ids;
  for (const Face& f : h.faces) taken_faces.insert(f.id);
  for (const Face& f : h.faces) {
    if (g_face_ids.count(f.id)) {
      Id name = f.id;
      do {
        name += "'";
      } while (taken_faces.count(name));
      taken_faces.insert(name);
      ren.faces[f.id] = name;
    }
  }

  AnchoredGraph hh = rename(h, ren);

  Graph merged = g.graph;
  for (const Id& v : hh.graph.vertices) merged.vertices.insert(v);
  for (const auto& [e, inc] : hh.graph.edges) merged.edges[e] = inc;
  std::vector<Face> faces = g.faces;
  faces.insert(faces.end(), hh.faces.begin(), hh.faces.end());
  Anchor outer{g.outer.source, g.outer.sink, g.outer.dom, hh.outer.cod};
  return ComposeTrace{make_anchored(std::move(merged), std::move(faces), std::move(outer)),
                      std::move(ren)};
}

Result<AnchoredGraph> vertical_compose(const AnchoredGraph& g, const AnchoredGraph& h) {
  auto traced = vertical_compose_traced(g, h);
  if (!traced) return Result<AnchoredGraph>::fail(traced.error());
  return std::move(traced.value().graph);
}

std::string path_str(const DirectedPath& p) {
  if (p.is_trivial()) return cat("(", p.source(), ")");
  return join(p.edges, " ");
}

}  // namespace bipaste
