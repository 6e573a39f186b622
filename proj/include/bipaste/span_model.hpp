#pragma once

#include <map>
#include <string>
#include <vector>

#include "bipaste/util.hpp"

namespace bipaste {

// Bicategory of spans of finite sets: objects are finite label sets, a
// 1-cell X -> Y is a span X <- A -> Y, a 2-cell is a map of apexes commuting
// with both legs.  Horizontal composition pulls back along the shared leg;
// apex elements of composites are nested pairs rendered as strings, so the
// associators are honest re-nesting bijections rather than identities.
class SpanModel {
 public:
  using Object = std::vector<std::string>;  // sorted labels
  using Elem = std::string;                 // label or "(x,y)"

  struct OneCell {
    Object src, tgt;
    std::vector<Elem> apex;          // sorted
    std::vector<std::string> left;   // apex[i] -> src label
    std::vector<std::string> right;  // apex[i] -> tgt label
    bool operator==(const OneCell&) const = default;
  };

  struct TwoCell {
    OneCell src, tgt;
    std::vector<size_t> map;  // apex index of src -> apex index of tgt
    bool operator==(const TwoCell&) const = default;
  };

  static Object object(std::vector<std::string> labels);
  static Elem pair(const Elem& a, const Elem& b) { return "(" + a + "," + b + ")"; }

  // Sorts rows by apex element; rejects duplicate elements and stray labels.
  static Result<OneCell> span(Object src, Object tgt, std::vector<Elem> apex,
                              std::vector<std::string> left, std::vector<std::string> right);
  static Result<TwoCell> two_cell(const OneCell& src, const OneCell& tgt,
                                  const std::map<Elem, Elem>& assignment);

  bool obj_eq(const Object& a, const Object& b) const { return a == b; }
  bool one_eq(const OneCell& a, const OneCell& b) const { return a == b; }
  bool two_eq(const TwoCell& a, const TwoCell& b) const { return a == b; }

  Object one_src(const OneCell& f) const { return f.src; }
  Object one_tgt(const OneCell& f) const { return f.tgt; }
  OneCell two_src(const TwoCell& a) const { return a.src; }
  OneCell two_tgt(const TwoCell& a) const { return a.tgt; }

  OneCell id_one(const Object& x) const;
  TwoCell id_two(const OneCell& f) const;

  OneCell hcomp_one(const OneCell& g, const OneCell& f) const;  // g after f
  TwoCell hcomp_two(const TwoCell& beta, const TwoCell& alpha) const;
  TwoCell vcomp(const TwoCell& beta, const TwoCell& alpha) const;  // beta after alpha

  TwoCell associator(const OneCell& h, const OneCell& g, const OneCell& f) const;
  TwoCell associator_inv(const OneCell& h, const OneCell& g, const OneCell& f) const;
  TwoCell lunitor(const OneCell& f) const;
  TwoCell lunitor_inv(const OneCell& f) const;
  TwoCell runitor(const OneCell& f) const;
  TwoCell runitor_inv(const OneCell& f) const;

  std::string one_str(const OneCell& f) const;
  std::string two_str(const TwoCell& a) const;
};

}  // namespace bipaste
