#pragma once

#include <map>
#include <string>
#include <vector>

#include "bipaste/util.hpp"

namespace bipaste {

// One random instance of every composable shape the bicategory laws quantify
// over.  The 1-cells are recovered from the 2-cell boundaries:
//
//   alpha1,2,3 : a vertical chain in hom(V, W)
//   beta1,2    : a vertical chain in hom(W, X)
//   gamma1     : a 2-cell in hom(X, Y)
//   k          : a 1-cell in hom(Y, Z)
template <typename M>
struct AxiomSample {
  typename M::TwoCell alpha1, alpha2, alpha3;
  typename M::TwoCell beta1, beta2;
  typename M::TwoCell gamma1;
  typename M::OneCell k;
};

struct AxiomReport {
  size_t samples = 0;
  std::map<std::string, size_t> checks;  // law name -> instances checked
  std::vector<std::string> failures;     // "sample 17: pentagon"
  bool ok() const { return failures.empty(); }
};

// Checks every bicategory axiom on each sample with exact equality: category
// laws of vertical composition, functoriality and interchange of horizontal
// composition, naturality and invertibility of the constraints, the unity
// triangle, and the pentagon.
template <typename M>
AxiomReport check_axioms(const M& m, const std::vector<AxiomSample<M>>& samples) {
  AxiomReport rep;
  rep.samples = samples.size();
  for (size_t i = 0; i < samples.size(); ++i) {
    const AxiomSample<M>& s = samples[i];
    auto law = [&](const std::string& name, bool pass) {
      ++rep.checks[name];
      if (!pass) rep.failures.push_back(cat("sample ", i, ": ", name));
    };

    auto f0 = m.two_src(s.alpha1);
    auto f1 = m.two_tgt(s.alpha1);
    auto g0 = m.two_src(s.beta1);
    auto g1 = m.two_tgt(s.beta1);
    auto h0 = m.two_src(s.gamma1);
    auto h1 = m.two_tgt(s.gamma1);
    auto w = m.one_tgt(f0);

    law("vertical associativity",
        m.two_eq(m.vcomp(s.alpha3, m.vcomp(s.alpha2, s.alpha1)),
                 m.vcomp(m.vcomp(s.alpha3, s.alpha2), s.alpha1)));
    law("vertical identities",
        m.two_eq(m.vcomp(s.alpha1, m.id_two(f0)), s.alpha1) &&
            m.two_eq(m.vcomp(m.id_two(f1), s.alpha1), s.alpha1));
    law("horizontal composition preserves identities",
        m.two_eq(m.hcomp_two(m.id_two(g0), m.id_two(f0)),
                 m.id_two(m.hcomp_one(g0, f0))));
    law("middle four interchange",
        m.two_eq(m.vcomp(m.hcomp_two(s.beta2, s.alpha2), m.hcomp_two(s.beta1, s.alpha1)),
                 m.hcomp_two(m.vcomp(s.beta2, s.beta1), m.vcomp(s.alpha2, s.alpha1))));
    law("associator naturality",
        m.two_eq(m.vcomp(m.associator(h1, g1, f1),
                         m.hcomp_two(m.hcomp_two(s.gamma1, s.beta1), s.alpha1)),
                 m.vcomp(m.hcomp_two(s.gamma1, m.hcomp_two(s.beta1, s.alpha1)),
                         m.associator(h0, g0, f0))));
    law("left unitor naturality",
        m.two_eq(m.vcomp(m.lunitor(f1), m.hcomp_two(m.id_two(m.id_one(w)), s.alpha1)),
                 m.vcomp(s.alpha1, m.lunitor(f0))));
    law("right unitor naturality",
        m.two_eq(m.vcomp(m.runitor(f1),
                         m.hcomp_two(s.alpha1, m.id_two(m.id_one(m.one_src(f0))))),
                 m.vcomp(s.alpha1, m.runitor(f0))));
    law("associator invertibility",
        m.two_eq(m.vcomp(m.associator_inv(h0, g0, f0), m.associator(h0, g0, f0)),
                 m.id_two(m.hcomp_one(m.hcomp_one(h0, g0), f0))) &&
            m.two_eq(m.vcomp(m.associator(h0, g0, f0), m.associator_inv(h0, g0, f0)),
                     m.id_two(m.hcomp_one(h0, m.hcomp_one(g0, f0)))));
    law("unitor invertibility",
        m.two_eq(m.vcomp(m.lunitor_inv(f0), m.lunitor(f0)),
                 m.id_two(m.hcomp_one(m.id_one(w), f0))) &&
            m.two_eq(m.vcomp(m.lunitor(f0), m.lunitor_inv(f0)), m.id_two(f0)) &&
            m.two_eq(m.vcomp(m.runitor_inv(f0), m.runitor(f0)),
                     m.id_two(m.hcomp_one(f0, m.id_one(m.one_src(f0))))) &&
            m.two_eq(m.vcomp(m.runitor(f0), m.runitor_inv(f0)), m.id_two(f0)));
    law("unity triangle",
        m.two_eq(m.vcomp(m.hcomp_two(m.id_two(g0), m.lunitor(f0)),
                         m.associator(g0, m.id_one(w), f0)),
                 m.hcomp_two(m.runitor(g0), m.id_two(f0))));
    law("pentagon",
        m.two_eq(m.vcomp(m.associator(s.k, h0, m.hcomp_one(g0, f0)),
                         m.associator(m.hcomp_one(s.k, h0), g0, f0)),
                 m.vcomp(m.hcomp_two(m.id_two(s.k), m.associator(h0, g0, f0)),
                         m.vcomp(m.associator(s.k, m.hcomp_one(h0, g0), f0),
                                 m.hcomp_two(m.associator(s.k, h0, g0), m.id_two(f0))))));
  }
  return rep;
}

}  // namespace bipaste
