#pragma once

#include <cstdint>
#include <vector>

#include "bipaste/util.hpp"

namespace bipaste {

// One-object strict bicategory: 1-cells are natural numbers with addition as
// horizontal composition, a 2-cell m -> n is an m-by-n matrix of naturals,
// vertical composition is matrix product and horizontal composition is the
// block-diagonal sum.  Associators and unitors are identity matrices, so
// every coherence constraint holds on the nose.
class MatrixModel {
 public:
  struct Object {
    bool operator==(const Object&) const = default;
  };

  struct OneCell {
    std::uint64_t dim = 0;
    bool operator==(const OneCell&) const = default;
  };

  struct TwoCell {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::vector<std::uint64_t> data;  // row-major
    bool operator==(const TwoCell&) const = default;

    std::uint64_t at(std::uint64_t r, std::uint64_t c) const { return data[r * cols + c]; }
  };

  static TwoCell matrix(std::uint64_t rows, std::uint64_t cols,
                        std::vector<std::uint64_t> data);

  bool obj_eq(const Object&, const Object&) const { return true; }
  bool one_eq(const OneCell& a, const OneCell& b) const { return a == b; }
  bool two_eq(const TwoCell& a, const TwoCell& b) const { return a == b; }

  Object one_src(const OneCell&) const { return {}; }
  Object one_tgt(const OneCell&) const { return {}; }
  OneCell two_src(const TwoCell& a) const { return {a.rows}; }
  OneCell two_tgt(const TwoCell& a) const { return {a.cols}; }

  OneCell id_one(const Object&) const { return {0}; }
  TwoCell id_two(const OneCell& f) const;

  OneCell hcomp_one(const OneCell& g, const OneCell& f) const;
  TwoCell hcomp_two(const TwoCell& beta, const TwoCell& alpha) const;
  TwoCell vcomp(const TwoCell& beta, const TwoCell& alpha) const;

  TwoCell associator(const OneCell& h, const OneCell& g, const OneCell& f) const;
  TwoCell associator_inv(const OneCell& h, const OneCell& g, const OneCell& f) const;
  TwoCell lunitor(const OneCell& f) const { return id_two(f); }
  TwoCell lunitor_inv(const OneCell& f) const { return id_two(f); }
  TwoCell runitor(const OneCell& f) const { return id_two(f); }
  TwoCell runitor_inv(const OneCell& f) const { return id_two(f); }

  std::string one_str(const OneCell& f) const;
  std::string two_str(const TwoCell& a) const;
};

}  // namespace bipaste
