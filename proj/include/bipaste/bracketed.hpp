#pragma once

#include <array>
#include <variant>

#include "bipaste/bracketing.hpp"
#include "bipaste/graph.hpp"
#include "bipaste/scheme.hpp"

namespace bipaste {

struct FaceShapes {
  Bracketing dom;
  Bracketing cod;
  bool operator==(const FaceShapes&) const = default;
};

// Anchored graph whose global boundary paths and face boundary paths all
// carry bracketings.
struct BracketedGraph {
  AnchoredGraph g;
  Bracketing dom_shape;
  Bracketing cod_shape;
  std::map<Id, FaceShapes> face_shapes;
  bool operator==(const BracketedGraph&) const = default;
};

// Anchored validity plus length agreement of every bracketing with its path.
ValidationReport validate_bracketed(const BracketedGraph& bg);

// Atomic bracketed graph whose boundary bracketings share one outer
// bracketing `outer` with the face's bracketing substituted at the slot
// after the prefix: dom = outer(e_1..e_m, (dom_F), e'_1..e'_n), same for cod.
struct ConsistentGraph {
  BracketedGraph bg;
  Bracketing outer;
  size_t prefix_len = 0;
  size_t suffix_len = 0;
  Id face_id;
};

Result<ConsistentGraph> check_consistent(const BracketedGraph& bg);

// form1 reads the face as (E1 E2) E3 => E1' (E2' E3'), form2 as
// E1 (E2 E3) => (E1' E2') E3', with matching segment shapes either way.
enum class AssocForm { form1, form2 };

struct AssociativityGraph {
  ConsistentGraph cg;
  AssocForm form;
  std::array<size_t, 3> seg_lens;
};

Result<AssociativityGraph> check_associativity(const ConsistentGraph& cg);

enum class BracketErrorKind { anchored, bracket };

struct BracketedComposeError {
  BracketErrorKind kind;
  std::string message;
};

using BracketedComposeResult = std::variant<BracketedGraph, BracketedComposeError>;

// Vertical composite; fails on anchored interface mismatch or, separately,
// when the interface bracketings disagree.
BracketedComposeResult vertical_compose_bracketed(const BracketedGraph& g,
                                                  const BracketedGraph& h);

// Stack of consistent graphs with matching bracketed interfaces, together
// with its composite.
struct CompositionScheme {
  std::vector<ConsistentGraph> factors;
  BracketedGraph composed;
};

Result<CompositionScheme> compose_scheme(std::vector<ConsistentGraph> factors);

// Identifies the face's codomain with its domain edge-for-edge and deletes
// the face; domain-side names win.  The face must carry associativity data
// matching `a`.
Result<BracketedGraph> collapse(const BracketedGraph& h, const AssociativityGraph& a);

// Composition scheme whose non-associativity factors realize a presentation
// of g and whose associativity factors, listed by position, collapse away to
// give g back.
struct ExtensionCertificate {
  CompositionScheme scheme;
  std::vector<size_t> assoc_indices;
};

// Builds the certificate for presentation p: each factor rebracketed as
// ((P)(dom_F))(P') with left normalized whiskers, canonical associator
// chains inserted wherever consecutive interface bracketings differ.
Result<ExtensionCertificate> extend_to_composition_scheme(const BracketedGraph& g,
                                                          const Presentation& p);

// Re-derives every factor's consistency and associativity data, replays all
// collapses, and compares the result with g.
bool verify_extension(const ExtensionCertificate& cert, const BracketedGraph& g,
                      std::string* why = nullptr);

// ((P)(mid))(P') with left normalized whiskers of the given lengths.
Bracketing whisker_shape(size_t m, const Bracketing& mid, size_t n);

std::string bracketed_path_str(const DirectedPath& p, const Bracketing& shape);

// Fresh-name supply seeded with every identifier in sight; generated names
// carry a '~' so they can never collide with identifiers admitted by the
// surface syntax.
struct NameSupply {
  std::set<Id> taken;
  size_t counter = 0;

  NameSupply() = default;
  explicit NameSupply(const BracketedGraph& g) { absorb(g); }

  void absorb(const BracketedGraph& g);
  Id fresh(const Id& base);
};

// One associator move realized as an atomic factor over the given frontier:
// the face's codomain is a fresh copy of the moved segment, everything else
// is shared with the frontier.
ConsistentGraph associator_move_factor(const DirectedPath& frontier, const Bracketing& shape,
                                       const AssocMove& move, NameSupply& names);

}  // namespace bipaste
