#include "bipaste/matrix_model.hpp"

namespace bipaste {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("matrix entry overflow");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("matrix entry overflow");
  return r;
}

}  // namespace

MatrixModel::TwoCell MatrixModel::matrix(std::uint64_t rows, std::uint64_t cols,
                                         std::vector<std::uint64_t> data) {
  if (data.size() != rows * cols)
    throw std::invalid_argument("matrix: data size does not match dimensions");
  return {rows, cols, std::move(data)};
}

MatrixModel::TwoCell MatrixModel::id_two(const OneCell& f) const {
  TwoCell a{f.dim, f.dim, std::vector<std::uint64_t>(f.dim * f.dim, 0)};
  for (std::uint64_t i = 0; i < f.dim; ++i) a.data[i * f.dim + i] = 1;
  return a;
}

MatrixModel::OneCell MatrixModel::hcomp_one(const OneCell& g, const OneCell& f) const {
  return {checked_add(f.dim, g.dim)};
}

MatrixModel::TwoCell MatrixModel::hcomp_two(const TwoCell& beta, const TwoCell& alpha) const {
  // Block diagonal; the earlier (path-order) factor occupies the leading block.
  TwoCell out{checked_add(alpha.rows, beta.rows), checked_add(alpha.cols, beta.cols), {}};
  out.data.assign(out.rows * out.cols, 0);
  for (std::uint64_t r = 0; r < alpha.rows; ++r)
    for (std::uint64_t c = 0; c < alpha.cols; ++c)
      out.data[r * out.cols + c] = alpha.at(r, c);
  for (std::uint64_t r = 0; r < beta.rows; ++r)
    for (std::uint64_t c = 0; c < beta.cols; ++c)
      out.data[(alpha.rows + r) * out.cols + (alpha.cols + c)] = beta.at(r, c);
  return out;
}

MatrixModel::TwoCell MatrixModel::vcomp(const TwoCell& beta, const TwoCell& alpha) const {
  if (alpha.cols != beta.rows)
    throw std::invalid_argument("vcomp: inner matrix dimensions differ");
  TwoCell out{alpha.rows, beta.cols, std::vector<std::uint64_t>(alpha.rows * beta.cols, 0)};
  for (std::uint64_t r = 0; r < alpha.rows; ++r)
    for (std::uint64_t k = 0; k < alpha.cols; ++k) {
      if (alpha.at(r, k) == 0) continue;
      for (std::uint64_t c = 0; c < beta.cols; ++c)
        out.data[r * out.cols + c] =
            checked_add(out.at(r, c), checked_mul(alpha.at(r, k), beta.at(k, c)));
    }
  return out;
}

MatrixModel::TwoCell MatrixModel::associator(const OneCell& h, const OneCell& g,
                                             const OneCell& f) const {
  return id_two(hcomp_one(h, hcomp_one(g, f)));
}

MatrixModel::TwoCell MatrixModel::associator_inv(const OneCell& h, const OneCell& g,
                                                 const OneCell& f) const {
  return associator(h, g, f);
}

std::string MatrixModel::one_str(const OneCell& f) const { return cat(f.dim); }

std::string MatrixModel::two_str(const TwoCell& a) const {
  std::string out = cat("[", a.rows, "x", a.cols, "]");
  for (std::uint64_t r = 0; r < a.rows; ++r) {
    out += r == 0 ? " " : " ; ";
    for (std::uint64_t c = 0; c < a.cols; ++c) {
      if (c) out += ' ';
      out += cat(a.at(r, c));
    }
  }
  return out;
}

}  // namespace bipaste
