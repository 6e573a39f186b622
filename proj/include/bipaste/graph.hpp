#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bipaste/util.hpp"

namespace bipaste {

using Id = std::string;

struct Incidence {
  Id tail;
  Id head;
  bool operator==(const Incidence&) const = default;
};

// Finite directed graph with named vertices and edges.  Vertex and edge name
// spaces must be disjoint; parallel edges and multi-edges are welcome.
struct Graph {
  std::set<Id> vertices;
  std::map<Id, Incidence> edges;

  bool has_vertex(const Id& v) const { return vertices.count(v) > 0; }
  bool has_edge(const Id& e) const { return edges.count(e) > 0; }
  bool operator==(const Graph&) const = default;
};

// Directed path v0 -e1-> v1 ... -en-> vn.  Vertices are pairwise distinct;
// a trivial path has one vertex and no edges.
struct DirectedPath {
  std::vector<Id> verts;
  std::vector<Id> edges;

  static DirectedPath trivial(Id v) { return DirectedPath{{std::move(v)}, {}}; }

  size_t length() const { return edges.size(); }
  bool is_trivial() const { return edges.empty(); }
  const Id& source() const { return verts.front(); }
  const Id& sink() const { return verts.back(); }

  // Subpath spanning edge positions [from, to); keeps the bounding vertices.
  DirectedPath sub(size_t from, size_t to) const;
  // Replaces edge positions [from, to) by `mid`, whose endpoints must agree
  // with the cut vertices.
  DirectedPath splice(size_t from, size_t to, const DirectedPath& mid) const;
  // First edge position where `segment`'s edges occur consecutively, if any.
  std::optional<size_t> find_segment(const std::vector<Id>& segment) const;

  bool operator==(const DirectedPath&) const = default;
};

// Rebuilds the vertex sequence of a path from consecutive edges of g.
Result<DirectedPath> path_from_edges(const Graph& g, const std::vector<Id>& edges);

// Source/sink pair with the two boundary paths between them.  Used both for
// interior faces (dom above, codom below) and for the exterior record.
struct Anchor {
  Id source;
  Id sink;
  DirectedPath dom;
  DirectedPath cod;
  bool operator==(const Anchor&) const = default;
};

struct Face {
  Id id;
  Anchor anchor;
  bool operator==(const Face&) const = default;
};

// Graph together with its interior faces (sorted by identifier) and the
// exterior anchoring.  Realizes plane anchored graphs combinatorially; the
// planarity surrogate is checked by validate_anchored.
struct AnchoredGraph {
  Graph graph;
  std::vector<Face> faces;
  Anchor outer;

  const Face* face(const Id& id) const;
  bool operator==(const AnchoredGraph&) const = default;
};

// Sorts faces by identifier.
AnchoredGraph make_anchored(Graph g, std::vector<Face> faces, Anchor outer);

struct Violation {
  std::string subject;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Checks: nonempty disjoint name spaces, well-formed incidences, connectivity,
// every anchor a pair of directed paths source -> sink with interior faces
// internally disjoint, every edge covered exactly twice by the boundary walks
// (exterior included), and the Euler relation V - E + (interior faces + 1) = 2.
ValidationReport validate_anchored(const AnchoredGraph& g);

// Whisker decomposition of an atomic graph: dom_G = prefix . dom_F . suffix
// and codom_G = prefix . codom_F . suffix around the unique interior face.
struct AtomicShape {
  DirectedPath prefix;
  Face face;
  DirectedPath suffix;
};

std::optional<AtomicShape> atomic_decomposition(const AnchoredGraph& g);
bool is_atomic(const AnchoredGraph& g);

// Substitution of vertex/edge/face identifiers; missing keys stay put.
struct Renaming {
  std::map<Id, Id> verts;
  std::map<Id, Id> edges;
  std::map<Id, Id> faces;
};

// Vertical composite of g under h along codom_G = dom_H.  The interface paths
// must agree name-for-name; h's other identifiers are renamed (prime suffix)
// where they collide with g's.  Error messages carry the first differing
// interface position.
Result<AnchoredGraph> vertical_compose(const AnchoredGraph& g, const AnchoredGraph& h);

// Same, also reporting the renaming applied to h.
struct ComposeTrace {
  AnchoredGraph graph;
  Renaming applied;
};
Result<ComposeTrace> vertical_compose_traced(const AnchoredGraph& g, const AnchoredGraph& h);

DirectedPath rename(const DirectedPath& p, const Renaming& r);
AnchoredGraph rename(const AnchoredGraph& g, const Renaming& r);

std::string path_str(const DirectedPath& p);

}  // namespace bipaste
