#pragma once

#include "bipaste/generate.hpp"

namespace bipaste {

// Ways of producing a composition scheme certificate for the same diagram.
// `canonical` is the standard extension; `redundant_pair` splices a mutually
// inverse pair of associator factors into it at a random interface;
// `reordered` extends a different presentation of the same graph.
enum class Strategy { canonical, redundant_pair, reordered };

const char* strategy_name(Strategy s);

Result<ExtensionCertificate> alternate_certificate(const BracketedGraph& g,
                                                   const Presentation& p, Strategy s,
                                                   Rng& rng);

// Breadth-first shortest associator chain; the independent yardstick the
// canonical chain is compared against.
Result<std::vector<AssocMove>> bfs_associator_chain(const Bracketing& from,
                                                    const Bracketing& to);

struct UniquenessVerdict {
  bool ok = false;
  bool trivially_unique = false;  // fewer than two certificates exist to compare
  size_t certificates = 0;
  std::vector<std::string> notes;
};

struct MacLaneOutcome {
  bool ok = false;
  std::string detail;
};

// Composite 2-cell of a rebracketing chain run over the skeleton's spans,
// built by extending the chain into a one-factor-per-move scheme and
// evaluating it. An empty chain gives the identity 2-cell.
Result<SpanModel::TwoCell> span_chain_composite(const SpanSkeleton& sk,
                                                const Bracketing& from,
                                                const std::vector<AssocMove>& moves);

// Evaluates the canonical and the shortest rebracketing chain from `from` to
// `to` over the skeleton's spans and compares the composites.
MacLaneOutcome check_maclane_instance(const SpanSkeleton& sk, const Bracketing& from,
                                      const Bracketing& to);

struct SuiteReport {
  std::string name;
  size_t trials = 0;
  size_t passed = 0;
  std::map<std::string, size_t> counters;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty() && trials == passed; }
  std::string summary() const;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  size_t trials = 200;
  GeneratorConfig gen;
};

SuiteReport uniqueness_suite_span(const SuiteConfig& cfg);
SuiteReport uniqueness_suite_matrix(const SuiteConfig& cfg);
// Every ordered pair of bracketings up to max_len, several skeletons each.
SuiteReport maclane_suite(std::uint64_t seed, size_t max_len, size_t skeletons_per_pair);
// In the strict model every presentation of a random scheme must give the
// same composite, with no associator factors needed at all.
SuiteReport strict_presentation_suite(const SuiteConfig& cfg);
SuiteReport axiom_suite_span(std::uint64_t seed, size_t samples);
SuiteReport axiom_suite_matrix(std::uint64_t seed, size_t samples);

// Certificates from every requested strategy, composites compared pairwise.
template <typename M>
UniquenessVerdict check_uniqueness(const M& m, const BracketedGraph& g, const Diagram<M>& d,
                                   const std::vector<Strategy>& strategies, Rng& rng) {
  UniquenessVerdict v;
  auto rec = find_presentation(g.g);
  if (!std::holds_alternative<Presentation>(rec)) {
    v.notes.push_back("graph is not a pasting scheme");
    return v;
  }
  const Presentation& p = std::get<Presentation>(rec);

  std::vector<std::pair<Strategy, CompositeResult<M>>> composites;
  for (Strategy s : strategies) {
    auto cert = alternate_certificate(g, p, s, rng);
    if (!cert) {
      v.notes.push_back(cat(strategy_name(s), ": unavailable (", cert.error(), ")"));
      continue;
    }
    std::string why;
    if (!verify_extension(*cert, g, &why)) {
      v.notes.push_back(cat(strategy_name(s), ": certificate rejected: ", why));
      return v;
    }
    auto comp = compose_diagram(m, d, *cert);
    if (!comp) {
      v.notes.push_back(cat(strategy_name(s), ": ", comp.error()));
      return v;
    }
    composites.emplace_back(s, std::move(comp).take());
  }
  v.certificates = composites.size();
  if (composites.empty()) {
    v.notes.push_back("no certificate could be produced");
    return v;
  }
  v.ok = true;
  v.trivially_unique = composites.size() < 2;
  for (size_t i = 1; i < composites.size(); ++i)
    if (!m.two_eq(composites[0].second.value, composites[i].second.value)) {
      v.ok = false;
      v.notes.push_back(cat("composite via ", strategy_name(composites[i].first),
                            " differs from composite via ",
                            strategy_name(composites[0].first)));
    }
  return v;
}

}  // namespace bipaste
