#pragma once

#include <variant>

#include "bipaste/graph.hpp"

namespace bipaste {

// One atomic factor of a presentation, tagged with the face of the presented
// graph it peels off.  The factor's interior face keeps that identifier.
struct SchemeFactor {
  AnchoredGraph atomic;
  Id face_id;
};

struct Presentation {
  std::vector<SchemeFactor> factors;
};

// Evidence that peeling got stuck: the frontier reached and the faces that
// never became applicable along it.
struct RecognitionFailure {
  DirectedPath frontier;
  std::vector<Id> unused_faces;
  std::string reason;
};

using RecognitionResult = std::variant<Presentation, RecognitionFailure>;

// Greedy frontier peeling: repeatedly consumes a face whose domain is a
// contiguous segment of the frontier, preferring the leftmost match and then
// the smallest face identifier, until the frontier equals the codomain.
RecognitionResult find_presentation(const AnchoredGraph& g);

// Every presentation, one per admissible face order.  Exponential; guarded.
Result<std::vector<Presentation>> enumerate_presentations(const AnchoredGraph& g,
                                                          size_t max_faces = 7);

// Vertical composite of all factors, in order.
Result<AnchoredGraph> recompose(const Presentation& p);

// Deterministic relabeling driven by the anchoring alone; fails when the
// graph admits no full peel (then no canonical order of faces exists).
Result<AnchoredGraph> canonical_relabel(const AnchoredGraph& g);

// Structural isomorphism via canonical relabeling, with literal equality as
// the fallback for graphs that cannot be canonicalized.
bool isomorphic(const AnchoredGraph& a, const AnchoredGraph& b);

}  // namespace bipaste
