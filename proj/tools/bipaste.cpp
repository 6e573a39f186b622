#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bipaste/format.hpp"
#include "bipaste/verify.hpp"

using nlohmann::ordered_json;
using namespace bipaste;

namespace {

constexpr int kSchemaVersion = 1;

// 0 success, 1 usage or I/O, 2 invalid input, 3 verification failure.
enum ExitCode { kOk = 0, kUsage = 1, kInvalid = 2, kFailed = 3 };

ordered_json base_json(const std::string& command) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

int emit(const ordered_json& j) {
  std::cout << j.dump(2) << "\n";
  return j.value("exit", 0);
}

struct LoadedFile {
  DiagramDocument doc;
  BracketedGraph graph;
};

// Parse + assemble; on failure prints (or JSON-reports) and exits the
// command with kInvalid.
std::optional<LoadedFile> load_file(const std::string& path, bool json, int& rc,
                                    ordered_json& out) {
  std::ifstream in(path);
  if (!in) {
    if (json) {
      out["error"] = cat("cannot read '", path, "'");
      out["exit"] = kUsage;
    } else {
      std::cerr << "error: cannot read '" << path << "'\n";
    }
    rc = kUsage;
    return std::nullopt;
  }
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  ParseOutcome parsed = parse_document(text);
  if (const ParseError* pe = std::get_if<ParseError>(&parsed)) {
    if (json) {
      out["error"] = pe->message;
      out["line"] = pe->line;
      out["column"] = pe->col;
      out["exit"] = kInvalid;
    } else {
      std::cerr << path << ": " << pe->str() << "\n";
    }
    rc = kInvalid;
    return std::nullopt;
  }
  LoadedFile lf;
  lf.doc = std::get<DiagramDocument>(std::move(parsed));
  auto g = document_graph(lf.doc);
  if (!g) {
    if (json) {
      out["error"] = g.error();
      out["exit"] = kInvalid;
    } else {
      std::cerr << path << ": " << g.error() << "\n";
    }
    rc = kInvalid;
    return std::nullopt;
  }
  lf.graph = std::move(g).take();
  return lf;
}

ordered_json violations_json(const ValidationReport& rep) {
  ordered_json arr = ordered_json::array();
  for (const Violation& v : rep.violations) {
    ordered_json jv;
    jv["subject"] = v.subject;
    jv["message"] = v.message;
    arr.push_back(jv);
  }
  return arr;
}

std::vector<std::string> presentation_ids(const Presentation& p) {
  std::vector<std::string> ids;
  for (const SchemeFactor& f : p.factors) ids.push_back(f.face_id);
  return ids;
}

int run_check(const std::string& path, bool json) {
  ordered_json out = base_json("check");
  int rc = kOk;
  auto lf = load_file(path, json, rc, out);
  if (!lf) return json ? emit(out) : rc;

  ValidationReport rep = validate_bracketed(lf->graph);
  RecognitionResult rec = find_presentation(lf->graph.g);
  const Presentation* p = std::get_if<Presentation>(&rec);
  bool valid = rep.violations.empty();
  int exit_code = valid && p ? kOk : kInvalid;

  if (json) {
    out["valid"] = valid;
    out["violations"] = violations_json(rep);
    out["pasting_scheme"] = p != nullptr;
    if (p) {
      out["presentation"] = presentation_ids(*p);
    } else {
      const RecognitionFailure& f = std::get<RecognitionFailure>(rec);
      ordered_json jf;
      jf["reason"] = f.reason;
      jf["frontier"] = f.frontier.edges;
      jf["unused_faces"] = f.unused_faces;
      out["obstruction"] = jf;
    }
    out["exit"] = exit_code;
    return emit(out);
  }

  if (valid) {
    std::cout << "anchored graph: valid\n";
  } else {
    std::cout << "anchored graph: invalid\n";
    for (const Violation& v : rep.violations)
      std::cout << "  " << v.subject << ": " << v.message << "\n";
  }
  if (p) {
    std::cout << "pasting scheme: yes (presentation: " << join(presentation_ids(*p), " ")
              << ")\n";
  } else {
    const RecognitionFailure& f = std::get<RecognitionFailure>(rec);
    std::cout << "pasting scheme: no (" << f.reason << ")\n";
    std::cout << "  frontier: " << join(f.frontier.edges, " ") << "\n";
    if (!f.unused_faces.empty())
      std::cout << "  unused faces: " << join(f.unused_faces, " ") << "\n";
  }
  return exit_code;
}

int run_schemes(const std::string& path, bool all, bool json) {
  ordered_json out = base_json("schemes");
  int rc = kOk;
  auto lf = load_file(path, json, rc, out);
  if (!lf) return json ? emit(out) : rc;

  std::vector<Presentation> found;
  std::string error;
  if (all) {
    auto every = enumerate_presentations(lf->graph.g);
    if (every)
      found = std::move(every).take();
    else
      error = every.error();
  } else {
    RecognitionResult rec = find_presentation(lf->graph.g);
    if (Presentation* p = std::get_if<Presentation>(&rec))
      found.push_back(std::move(*p));
    else
      error = std::get<RecognitionFailure>(rec).reason;
  }
  int exit_code = !found.empty() ? kOk : kInvalid;

  if (json) {
    out["presentations"] = ordered_json::array();
    for (const Presentation& p : found) out["presentations"].push_back(presentation_ids(p));
    if (!error.empty()) out["error"] = error;
    out["exit"] = exit_code;
    return emit(out);
  }
  if (found.empty()) {
    std::cout << "no presentation: " << error << "\n";
    return exit_code;
  }
  for (size_t i = 0; i < found.size(); ++i)
    std::cout << (i + 1) << ". " << join(presentation_ids(found[i]), " ") << "\n";
  return exit_code;
}

ordered_json factor_json(const ConsistentGraph& cg, bool is_assoc) {
  ordered_json j;
  j["kind"] = is_assoc ? "associator" : "face";
  j["face"] = cg.face_id;
  j["dom"] = bracketed_path_str(cg.bg.g.outer.dom, cg.bg.dom_shape);
  j["cod"] = bracketed_path_str(cg.bg.g.outer.cod, cg.bg.cod_shape);
  if (is_assoc) {
    auto ag = check_associativity(cg);
    if (ag) j["direction"] = ag->form == AssocForm::form2 ? "a" : "a^-1";
  }
  return j;
}

int run_extend(const std::string& path, const std::string& strategy, std::uint64_t seed,
               bool json) {
  ordered_json out = base_json("extend");
  int rc = kOk;
  auto lf = load_file(path, json, rc, out);
  if (!lf) return json ? emit(out) : rc;

  RecognitionResult rec = find_presentation(lf->graph.g);
  const Presentation* p = std::get_if<Presentation>(&rec);
  if (!p) {
    const std::string& reason = std::get<RecognitionFailure>(rec).reason;
    if (json) {
      out["error"] = cat("not a pasting scheme: ", reason);
      out["exit"] = kInvalid;
      return emit(out);
    }
    std::cerr << "not a pasting scheme: " << reason << "\n";
    return kInvalid;
  }

  Strategy s = Strategy::canonical;
  if (strategy == "redundant-pair") s = Strategy::redundant_pair;
  if (strategy == "reordered") s = Strategy::reordered;
  Rng rng(seed);
  auto cert = alternate_certificate(lf->graph, *p, s, rng);
  if (!cert) {
    if (json) {
      out["error"] = cert.error();
      out["exit"] = kInvalid;
      return emit(out);
    }
    std::cerr << "extension failed: " << cert.error() << "\n";
    return kInvalid;
  }
  std::string why;
  bool verified = verify_extension(*cert, lf->graph, &why);

  std::set<size_t> assoc(cert->assoc_indices.begin(), cert->assoc_indices.end());
  if (json) {
    out["strategy"] = strategy;
    out["factors"] = ordered_json::array();
    for (size_t i = 0; i < cert->scheme.factors.size(); ++i)
      out["factors"].push_back(factor_json(cert->scheme.factors[i], assoc.count(i) > 0));
    out["assoc_indices"] = cert->assoc_indices;
    out["verified"] = verified;
    if (!verified) out["why"] = why;
    out["exit"] = verified ? kOk : kFailed;
    return emit(out);
  }
  for (size_t i = 0; i < cert->scheme.factors.size(); ++i) {
    const ConsistentGraph& cg = cert->scheme.factors[i];
    std::string kind = "face ";
    if (assoc.count(i)) {
      auto ag = check_associativity(cg);
      kind = ag && ag->form == AssocForm::form2 ? "assoc a     " : "assoc a^-1  ";
    }
    std::cout << (i + 1) << ". " << kind << cg.face_id << " : "
              << bracketed_path_str(cg.bg.g.outer.dom, cg.bg.dom_shape) << " -> "
              << bracketed_path_str(cg.bg.g.outer.cod, cg.bg.cod_shape) << "\n";
  }
  if (!verified) {
    std::cerr << "certificate failed verification: " << why << "\n";
    return kFailed;
  }
  std::cout << "verified: certificate collapses back to the diagram\n";
  return kOk;
}

template <typename M>
int eval_with_model(const M& m, const Diagram<M>& d, const BracketedGraph& g,
                    const std::string& kind, bool trace, bool json, ordered_json& out) {
  ValidationReport rep = validate_diagram(m, d);
  if (!rep.violations.empty()) {
    if (json) {
      out["violations"] = violations_json(rep);
      out["exit"] = kInvalid;
      return emit(out);
    }
    for (const Violation& v : rep.violations)
      std::cerr << v.subject << ": " << v.message << "\n";
    return kInvalid;
  }
  RecognitionResult rec = find_presentation(g.g);
  const Presentation* p = std::get_if<Presentation>(&rec);
  if (!p) {
    const std::string& reason = std::get<RecognitionFailure>(rec).reason;
    if (json) {
      out["error"] = cat("not a pasting scheme: ", reason);
      out["exit"] = kInvalid;
      return emit(out);
    }
    std::cerr << "not a pasting scheme: " << reason << "\n";
    return kInvalid;
  }
  auto cert = extend_to_composition_scheme(g, *p);
  if (!cert) {
    if (json) {
      out["error"] = cert.error();
      out["exit"] = kInvalid;
      return emit(out);
    }
    std::cerr << "extension failed: " << cert.error() << "\n";
    return kInvalid;
  }
  auto comp = compose_diagram(m, d, *cert);
  if (!comp) {
    if (json) {
      out["error"] = comp.error();
      out["exit"] = kFailed;
      return emit(out);
    }
    std::cerr << "evaluation failed: " << comp.error() << "\n";
    return kFailed;
  }
  if (json) {
    out["model"] = kind;
    out["factors"] = comp->trace.size();
    out["src"] = m.one_str(m.two_src(comp->value));
    out["tgt"] = m.one_str(m.two_tgt(comp->value));
    out["composite"] = m.two_str(comp->value);
    if (trace) {
      out["trace"] = ordered_json::array();
      for (const auto& layer : comp->trace) out["trace"].push_back(m.two_str(layer));
    }
    out["exit"] = kOk;
    return emit(out);
  }
  std::cout << "composite : " << m.one_str(m.two_src(comp->value)) << " => "
            << m.one_str(m.two_tgt(comp->value)) << "\n";
  std::cout << m.two_str(comp->value) << "\n";
  if (trace) {
    std::cout << "factors:\n";
    for (size_t i = 0; i < comp->trace.size(); ++i)
      std::cout << "  " << (i + 1) << ". " << m.two_str(comp->trace[i]) << "\n";
  }
  return kOk;
}

int run_eval(const std::string& path, const std::string& model,
             const std::string& assignments, bool trace, bool json) {
  ordered_json out = base_json("eval");
  int rc = kOk;
  auto lf = load_file(path, json, rc, out);
  if (!lf) return json ? emit(out) : rc;

  auto invalid = [&](const std::string& msg) -> int {
    if (json) {
      out["error"] = msg;
      out["exit"] = kInvalid;
      return emit(out);
    }
    std::cerr << msg << "\n";
    return kInvalid;
  };

  ModelBlock mb;
  if (!assignments.empty()) {
    std::ifstream in(assignments);
    if (!in) {
      if (json) {
        out["error"] = cat("cannot read '", assignments, "'");
        out["exit"] = kUsage;
        return emit(out);
      }
      std::cerr << "error: cannot read '" << assignments << "'\n";
      return kUsage;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    AssignmentOutcome parsed = parse_assignment(text);
    if (const ParseError* pe = std::get_if<ParseError>(&parsed)) {
      if (json) {
        out["error"] = pe->message;
        out["line"] = pe->line;
        out["column"] = pe->col;
        out["exit"] = kInvalid;
        return emit(out);
      }
      std::cerr << assignments << ": " << pe->str() << "\n";
      return kInvalid;
    }
    mb = std::get<ModelBlock>(std::move(parsed));
  } else if (lf->doc.model) {
    mb = *lf->doc.model;
  } else {
    return invalid("file has no model block; give one with --assignments");
  }

  if (model == "span") {
    auto d = bind_span_model(mb, lf->graph);
    if (!d) return invalid(d.error());
    return eval_with_model(SpanModel{}, *d, lf->graph, "span", trace, json, out);
  }
  auto d = bind_matrix_model(mb, lf->graph);
  if (!d) return invalid(d.error());
  return eval_with_model(MatrixModel{}, *d, lf->graph, "matrix", trace, json, out);
}

ordered_json suite_json(const SuiteReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["trials"] = r.trials;
  j["passed"] = r.passed;
  j["counters"] = ordered_json(r.counters);
  j["failures"] = r.failures;
  return j;
}

int run_verify(const std::string& suite, const std::string& model, std::uint64_t seed,
               size_t trials, size_t samples, size_t max_faces, size_t max_path_len,
               size_t max_objects, size_t max_len, size_t skeletons, bool json) {
  SuiteConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.gen.max_faces = max_faces;
  cfg.gen.max_path_len = max_path_len;
  cfg.gen.max_object_size = max_objects;

  std::vector<SuiteReport> reports;
  auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
  bool span = model != "matrix", matrix = model != "span";
  if (want("uniqueness")) {
    if (span) reports.push_back(uniqueness_suite_span(cfg));
    if (matrix) reports.push_back(uniqueness_suite_matrix(cfg));
  }
  // Coherence compares associator chains, so it only means something in the
  // span model; the strict suite only means something where associators are
  // identities.
  if (want("coherence") && span) reports.push_back(maclane_suite(seed, max_len, skeletons));
  if (want("strict") && matrix) reports.push_back(strict_presentation_suite(cfg));
  if (want("axioms")) {
    if (span) reports.push_back(axiom_suite_span(seed, samples));
    if (matrix) reports.push_back(axiom_suite_matrix(seed, samples));
  }

  bool ok = true;
  for (const SuiteReport& r : reports) ok = ok && r.ok();
  if (json) {
    ordered_json out = base_json("verify");
    out["suites"] = ordered_json::array();
    for (const SuiteReport& r : reports) out["suites"].push_back(suite_json(r));
    out["ok"] = ok;
    out["exit"] = ok ? kOk : kFailed;
    return emit(out);
  }
  for (const SuiteReport& r : reports) {
    std::cout << r.summary() << "\n";
    for (const std::string& f : r.failures) std::cout << "  FAIL " << f << "\n";
  }
  std::cout << (ok ? "all suites passed" : "some suites failed") << "\n";
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pasting diagrams in bicategories: recognition, extension, evaluation"};
  app.require_subcommand(1);

  std::string path, strategy = "canonical", suite = "all", model, assignments,
              verify_model = "all";
  std::uint64_t seed = 1;
  size_t trials = 200, samples = 500, max_faces = 5, max_path_len = 5, max_objects = 3,
         max_len = 5, skeletons = 20;
  bool json = false, all = false, trace = false;

  CLI::App* check = app.add_subcommand("check", "validate a diagram file");
  check->add_option("file", path, "diagram file")->required();
  check->add_flag("--json", json, "machine readable output");

  CLI::App* schemes = app.add_subcommand("schemes", "list presentations");
  schemes->add_option("file", path, "diagram file")->required();
  schemes->add_flag("--all", all, "enumerate every presentation");
  schemes->add_flag("--json", json, "machine readable output");

  CLI::App* extend = app.add_subcommand("extend", "compute a composition scheme certificate");
  extend->add_option("file", path, "diagram file")->required();
  extend->add_option("--strategy", strategy, "canonical, redundant-pair or reordered")
      ->check(CLI::IsMember({"canonical", "redundant-pair", "reordered"}));
  extend->add_option("--seed", seed, "seed for randomized strategies");
  extend->add_flag("--json", json, "machine readable output");

  CLI::App* eval = app.add_subcommand("eval", "evaluate the composite in a model");
  eval->add_option("file", path, "diagram file")->required();
  eval->add_option("--model", model, "span or matrix")
      ->required()
      ->check(CLI::IsMember({"span", "matrix"}));
  eval->add_option("--assignments", assignments,
                   "model block file; overrides the one in the diagram file");
  eval->add_flag("--trace", trace, "print every vertical factor");
  eval->add_flag("--json", json, "machine readable output");

  CLI::App* verify = app.add_subcommand("verify", "run randomized verification suites");
  verify->add_option("--suite", suite, "all, uniqueness, coherence, strict or axioms")
      ->check(CLI::IsMember({"all", "uniqueness", "coherence", "strict", "axioms"}));
  verify->add_option("--model", verify_model, "restrict suites to one model")
      ->check(CLI::IsMember({"all", "span", "matrix"}));
  verify->add_option("--seed", seed, "base seed");
  verify->add_option("--trials", trials, "diagrams per uniqueness suite");
  verify->add_option("--samples", samples, "samples per axiom suite");
  verify->add_option("--max-faces", max_faces, "face cap for random schemes");
  verify->add_option("--max-path-len", max_path_len, "path length cap for random schemes");
  verify->add_option("--max-objects", max_objects, "object size cap for random spans");
  verify->add_option("--max-len", max_len, "bracketing length cap for coherence");
  verify->add_option("--skeletons", skeletons, "skeletons per bracketing pair");
  verify->add_flag("--json", json, "machine readable output");

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) return run_check(path, json);
  if (schemes->parsed()) return run_schemes(path, all, json);
  if (extend->parsed()) return run_extend(path, strategy, seed, json);
  if (eval->parsed()) return run_eval(path, model, assignments, trace, json);
  if (verify->parsed())
    return run_verify(suite, verify_model, seed, trials, samples, max_faces, max_path_len,
                      max_objects, max_len, skeletons, json);
  return kUsage;
}
