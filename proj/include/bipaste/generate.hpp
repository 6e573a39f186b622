#pragma once

#include <random>

#include "bipaste/axioms.hpp"
#include "bipaste/diagram.hpp"
#include "bipaste/matrix_model.hpp"
#include "bipaste/span_model.hpp"

namespace bipaste {

// Seeded generator; all sampling goes through `below` so runs reproduce
// exactly from a seed.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  size_t below(size_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    return static_cast<size_t>(eng() % n);
  }
  bool coin() { return below(2) == 1; }
};

struct GeneratorConfig {
  size_t max_faces = 5;
  size_t max_path_len = 5;     // caps every boundary path and every frontier
  size_t max_object_size = 3;  // span objects only
};

Bracketing random_bracketing(Rng& rng, size_t n);

// Random pasting scheme built by stacking faces onto a frontier, with
// random bracketings on every boundary.  Every path stays within
// max_path_len, so later span composites stay small.
BracketedGraph random_scheme(Rng& rng, const GeneratorConfig& cfg);

SpanModel::Object random_object(Rng& rng, const GeneratorConfig& cfg);
SpanModel::OneCell random_span(Rng& rng, const SpanModel::Object& src,
                               const SpanModel::Object& tgt);
// Span whose apex is every (src, tgt) pair; composites of these have a
// nonempty fiber over everything, so it backstops rejection sampling.
SpanModel::OneCell complete_span(const SpanModel::Object& src, const SpanModel::Object& tgt);

template <typename M>
struct RandomDiagram {
  BracketedGraph g;
  Presentation p;  // assignment order used while sampling the faces
  Diagram<M> d;
};

RandomDiagram<SpanModel> random_span_diagram(Rng& rng, const GeneratorConfig& cfg);
RandomDiagram<MatrixModel> random_matrix_diagram(Rng& rng, const GeneratorConfig& cfg);

// Straight-line diagram with no faces: a path of n edges with spans chained
// along it.  This is the shape coherence chains quantify over.
struct SpanSkeleton {
  DirectedPath path;
  std::map<Id, SpanModel::OneCell> ones;
};

SpanSkeleton random_span_skeleton(Rng& rng, const GeneratorConfig& cfg, size_t n);

AxiomSample<SpanModel> random_span_sample(Rng& rng, const GeneratorConfig& cfg);
AxiomSample<MatrixModel> random_matrix_sample(Rng& rng);

}  // namespace bipaste
