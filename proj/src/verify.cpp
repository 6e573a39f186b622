#include "bipaste/verify.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "bipaste/format.hpp"

namespace bipaste {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::canonical: return "canonical";
    case Strategy::redundant_pair: return "redundant-pair";
    case Strategy::reordered: return "reordered";
  }
  return "?";
}

namespace {

// Inserts a mutually inverse pair of associator factors at a random
// interface with an applicable move, renaming the factors above so the
// interfaces still chain by name.
Result<ExtensionCertificate> splice_redundant_pair(const BracketedGraph& g,
                                                   const Presentation& p, Rng& rng) {
  using R = Result<ExtensionCertificate>;
  auto cert = extend_to_composition_scheme(g, p);
  if (!cert) return cert;
  std::vector<ConsistentGraph> factors = cert->scheme.factors;

  std::vector<std::pair<size_t, std::vector<AssocMove>>> applicable;
  for (size_t pos = 0; pos <= factors.size(); ++pos) {
    const Bracketing& shape = pos == 0 ? g.dom_shape : factors[pos - 1].bg.cod_shape;
    std::vector<AssocMove> moves = legal_moves(shape);
    if (!moves.empty()) applicable.emplace_back(pos, std::move(moves));
  }
  if (applicable.empty()) return R::fail("no interface admits an associator move");
  auto& [pos, moves] = applicable[rng.below(applicable.size())];
  AssocMove mv = moves[rng.below(moves.size())];

  const DirectedPath& frontier = pos == 0 ? g.g.outer.dom : factors[pos - 1].bg.g.outer.cod;
  const Bracketing& shape = pos == 0 ? g.dom_shape : factors[pos - 1].bg.cod_shape;
  NameSupply names(g);
  for (const ConsistentGraph& f : factors) names.absorb(f.bg);

  ConsistentGraph a1 = associator_move_factor(frontier, shape, mv, names);
  ConsistentGraph a2 =
      associator_move_factor(a1.bg.g.outer.cod, a1.bg.cod_shape, mv.inverse(), names);

  // The pair's net effect replaces the moved segment with a twice-copied
  // one; factors above only ever see that segment as frontier content.
  const DirectedPath& after = a2.bg.g.outer.cod;
  Renaming sigma;
  for (size_t i = 0; i < frontier.edges.size(); ++i)
    if (frontier.edges[i] != after.edges[i]) sigma.edges[frontier.edges[i]] = after.edges[i];
  for (size_t i = 0; i < frontier.verts.size(); ++i)
    if (frontier.verts[i] != after.verts[i]) sigma.verts[frontier.verts[i]] = after.verts[i];

  std::vector<ConsistentGraph> out;
  out.reserve(factors.size() + 2);
  for (size_t i = 0; i < pos; ++i) out.push_back(factors[i]);
  out.push_back(std::move(a1));
  out.push_back(std::move(a2));
  for (size_t i = pos; i < factors.size(); ++i) {
    ConsistentGraph f = factors[i];
    f.bg.g = rename(f.bg.g, sigma);
    out.push_back(std::move(f));
  }

  std::vector<size_t> indices;
  for (size_t i : cert->assoc_indices) indices.push_back(i < pos ? i : i + 2);
  indices.push_back(pos);
  indices.push_back(pos + 1);
  std::sort(indices.begin(), indices.end());

  auto scheme = compose_scheme(std::move(out));
  if (!scheme) return R::fail(cat("splice broke the scheme: ", scheme.error()));
  return ExtensionCertificate{std::move(scheme).take(), std::move(indices)};
}

Result<ExtensionCertificate> reordered_certificate(const BracketedGraph& g,
                                                   const Presentation& p, Rng& rng) {
  using R = Result<ExtensionCertificate>;
  auto all = enumerate_presentations(g.g);
  if (!all) return R::fail(all.error());
  auto order = [](const Presentation& q) {
    std::vector<Id> ids;
    for (const SchemeFactor& f : q.factors) ids.push_back(f.face_id);
    return ids;
  };
  std::vector<const Presentation*> others;
  for (const Presentation& q : *all)
    if (order(q) != order(p)) others.push_back(&q);
  if (others.empty()) return R::fail("the graph has only one presentation");
  return extend_to_composition_scheme(g, *others[rng.below(others.size())]);
}

}  // namespace

Result<ExtensionCertificate> alternate_certificate(const BracketedGraph& g,
                                                   const Presentation& p, Strategy s,
                                                   Rng& rng) {
  switch (s) {
    case Strategy::canonical: return extend_to_composition_scheme(g, p);
    case Strategy::redundant_pair: return splice_redundant_pair(g, p, rng);
    case Strategy::reordered: return reordered_certificate(g, p, rng);
  }
  return Result<ExtensionCertificate>::fail("unknown strategy");
}

Result<std::vector<AssocMove>> bfs_associator_chain(const Bracketing& from,
                                                    const Bracketing& to) {
  using R = Result<std::vector<AssocMove>>;
  if (from.length() != to.length()) return R::fail("bracketings have different lengths");
  if (from == to) return std::vector<AssocMove>{};

  std::map<std::string, std::pair<std::string, AssocMove>> parent;
  std::deque<Bracketing> queue{from};
  parent[from.str()] = {"", {}};
  while (!queue.empty()) {
    Bracketing b = queue.front();
    queue.pop_front();
    for (const AssocMove& mv : legal_moves(b)) {
      Bracketing nb = apply_move(b, mv).take();
      std::string key = nb.str();
      if (parent.count(key)) continue;
      parent[key] = {b.str(), mv};
      if (nb == to) {
        std::vector<AssocMove> chain;
        std::string cur = key;
        while (cur != from.str()) {
          auto& [prev, pm] = parent[cur];
          chain.push_back(pm);
          cur = prev;
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
      }
      queue.push_back(nb);
    }
  }
  return R::fail("no rebracketing chain found");
}

Result<SpanModel::TwoCell> span_chain_composite(const SpanSkeleton& sk,
                                                const Bracketing& from,
                                                const std::vector<AssocMove>& moves) {
  using R = Result<SpanModel::TwoCell>;
  SpanModel m;
  if (from.length() != sk.path.length())
    return R::fail("bracketing does not fit the skeleton");
  if (moves.empty())
    return m.id_two(eval_bracketed_path(m, sk.ones, sk.path, from));
  NameSupply names;
  for (const Id& v : sk.path.verts) names.taken.insert(v);
  for (const Id& e : sk.path.edges) names.taken.insert(e);

  std::vector<ConsistentGraph> factors;
  DirectedPath frontier = sk.path;
  Bracketing shape = from;
  for (const AssocMove& mv : moves) {
    ConsistentGraph cg = associator_move_factor(frontier, shape, mv, names);
    frontier = cg.bg.g.outer.cod;
    shape = cg.bg.cod_shape;
    factors.push_back(std::move(cg));
  }
  auto scheme = compose_scheme(std::move(factors));
  if (!scheme) return R::fail(scheme.error());
  std::vector<size_t> idx(moves.size());
  std::iota(idx.begin(), idx.end(), 0);
  ExtensionCertificate cert{std::move(scheme).take(), std::move(idx)};

  Diagram<SpanModel> d;
  Graph gr;
  for (const Id& v : sk.path.verts) gr.vertices.insert(v);
  for (size_t i = 0; i < sk.path.edges.size(); ++i)
    gr.edges[sk.path.edges[i]] = {sk.path.verts[i], sk.path.verts[i + 1]};
  d.shape.g = make_anchored(std::move(gr), {},
                            {sk.path.source(), sk.path.sink(), sk.path, sk.path});
  d.shape.dom_shape = from;
  d.shape.cod_shape = from;
  d.ones = sk.ones;
  auto comp = compose_diagram(m, d, cert);
  if (!comp) return R::fail(comp.error());
  return comp->value;
}

MacLaneOutcome check_maclane_instance(const SpanSkeleton& sk, const Bracketing& from,
                                      const Bracketing& to) {
  size_t n = sk.path.length();
  if (from.length() != n || to.length() != n)
    return {false, "bracketings do not fit the skeleton"};
  if (from == to) return {true, "identical bracketings"};
  auto canonical = associator_chain(from, to);
  if (!canonical) return {false, cat("canonical chain: ", canonical.error())};
  auto shortest = bfs_associator_chain(from, to);
  if (!shortest) return {false, cat("shortest chain: ", shortest.error())};
  auto vc = span_chain_composite(sk, from, *canonical);
  if (!vc) return {false, cat("canonical composite: ", vc.error())};
  auto vs = span_chain_composite(sk, from, *shortest);
  if (!vs) return {false, cat("shortest composite: ", vs.error())};
  SpanModel m;
  if (!m.two_eq(*vc, *vs))
    return {false, cat("composites differ between chains of length ", canonical->size(),
                       " and ", shortest->size())};
  return {true, cat("chains of length ", canonical->size(), " and ", shortest->size(),
                    " agree")};
}

std::string SuiteReport::summary() const {
  std::string s = cat(name, ": ", passed, "/", trials, " passed");
  for (const auto& [k, v] : counters) s += cat("; ", k, ": ", v);
  return s;
}

namespace {

std::uint64_t trial_seed(std::uint64_t base, size_t t) {
  return base + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(t + 1);
}

template <typename M, typename Gen, typename Attach>
SuiteReport uniqueness_suite(const std::string& name, const SuiteConfig& cfg, Gen gen,
                             Attach attach) {
  SuiteReport r;
  r.name = name;
  M m;
  for (size_t t = 0; t < cfg.trials; ++t) {
    std::uint64_t seed = trial_seed(cfg.seed, t);
    Rng rng(seed);
    auto rd = gen(rng, cfg.gen);
    UniquenessVerdict v = check_uniqueness(
        m, rd.g, rd.d, {Strategy::canonical, Strategy::redundant_pair, Strategy::reordered},
        rng);
    ++r.trials;
    if (v.ok) {
      ++r.passed;
      ++r.counters[v.trivially_unique ? "single certificate" : "multiple certificates"];
    } else {
      DiagramDocument doc = document_of(rd.g, cat("trial", t));
      attach(doc, rd.d);
      r.failures.push_back(cat("trial ", t, " (seed ", seed, "): ", join(v.notes, "; "),
                               "\n", print_document(doc)));
    }
  }
  return r;
}

}  // namespace

SuiteReport uniqueness_suite_span(const SuiteConfig& cfg) {
  return uniqueness_suite<SpanModel>(
      "uniqueness[span]", cfg,
      [](Rng& rng, const GeneratorConfig& g) { return random_span_diagram(rng, g); },
      [](DiagramDocument& doc, const Diagram<SpanModel>& d) { attach_span_model(doc, d); });
}

SuiteReport uniqueness_suite_matrix(const SuiteConfig& cfg) {
  return uniqueness_suite<MatrixModel>(
      "uniqueness[matrix]", cfg,
      [](Rng& rng, const GeneratorConfig& g) { return random_matrix_diagram(rng, g); },
      [](DiagramDocument& doc, const Diagram<MatrixModel>& d) { attach_matrix_model(doc, d); });
}

SuiteReport maclane_suite(std::uint64_t seed, size_t max_len, size_t skeletons_per_pair) {
  SuiteReport r;
  r.name = "coherence[span]";
  Rng rng(seed);
  GeneratorConfig cfg;
  for (size_t n = 1; n <= max_len; ++n) {
    std::vector<Bracketing> all = enumerate_bracketings(n);
    r.counters[cat("pairs of length ", n)] = all.size() * all.size();
    for (const Bracketing& b1 : all)
      for (const Bracketing& b2 : all)
        for (size_t k = 0; k < skeletons_per_pair; ++k) {
          SpanSkeleton sk = random_span_skeleton(rng, cfg, n);
          MacLaneOutcome out = check_maclane_instance(sk, b1, b2);
          ++r.trials;
          if (out.ok)
            ++r.passed;
          else
            r.failures.push_back(
                cat(b1.str(), " to ", b2.str(), " (skeleton ", k, "): ", out.detail));
        }
  }
  return r;
}

SuiteReport strict_presentation_suite(const SuiteConfig& cfg) {
  SuiteReport r;
  r.name = "strict-presentations[matrix]";
  MatrixModel m;
  for (size_t t = 0; t < cfg.trials; ++t) {
    std::uint64_t seed = trial_seed(cfg.seed, t);
    Rng rng(seed);
    auto rd = random_matrix_diagram(rng, cfg.gen);
    ++r.trials;
    auto all = enumerate_presentations(rd.g.g);
    if (!all) {
      r.failures.push_back(cat("trial ", t, " (seed ", seed, "): ", all.error()));
      continue;
    }
    r.counters["presentations compared"] += all->size();
    bool good = true;
    std::optional<MatrixModel::TwoCell> first;
    for (const Presentation& p : *all) {
      auto cert = extend_to_composition_scheme(rd.g, p);
      if (!cert) {
        r.failures.push_back(cat("trial ", t, " (seed ", seed, "): ", cert.error()));
        good = false;
        break;
      }
      auto comp = compose_diagram(m, rd.d, *cert);
      if (!comp) {
        r.failures.push_back(cat("trial ", t, " (seed ", seed, "): ", comp.error()));
        good = false;
        break;
      }
      if (!first)
        first = comp->value;
      else if (!m.two_eq(*first, comp->value)) {
        r.failures.push_back(
            cat("trial ", t, " (seed ", seed, "): presentations disagree"));
        good = false;
        break;
      }
    }
    if (good) ++r.passed;
  }
  return r;
}

namespace {

template <typename M, typename Gen>
SuiteReport axiom_suite(const std::string& name, std::uint64_t seed, size_t samples,
                        Gen gen) {
  SuiteReport r;
  r.name = name;
  M m;
  Rng rng(seed);
  for (size_t i = 0; i < samples; ++i) {
    AxiomSample<M> s = gen(rng);
    AxiomReport rep = check_axioms(m, {s});
    ++r.trials;
    if (rep.ok())
      ++r.passed;
    else
      for (const std::string& f : rep.failures)
        r.failures.push_back(cat("sample ", i, ": ", f.substr(f.find(": ") + 2)));
    for (const auto& [law, n] : rep.checks) r.counters[law] += n;
  }
  return r;
}

}  // namespace

SuiteReport axiom_suite_span(std::uint64_t seed, size_t samples) {
  GeneratorConfig cfg;
  return axiom_suite<SpanModel>("axioms[span]", seed, samples,
                                [&cfg](Rng& rng) { return random_span_sample(rng, cfg); });
}

SuiteReport axiom_suite_matrix(std::uint64_t seed, size_t samples) {
  return axiom_suite<MatrixModel>("axioms[matrix]", seed, samples,
                                  [](Rng& rng) { return random_matrix_sample(rng); });
}

}  // namespace bipaste
