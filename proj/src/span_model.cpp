#include "bipaste/span_model.hpp"

#include <algorithm>

namespace bipaste {

namespace {

void sort_rows(SpanModel::OneCell& f) {
  std::vector<size_t> order(f.apex.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return f.apex[a] < f.apex[b]; });
  SpanModel::OneCell out = f;
  for (size_t i = 0; i < order.size(); ++i) {
    out.apex[i] = f.apex[order[i]];
    out.left[i] = f.left[order[i]];
    out.right[i] = f.right[order[i]];
  }
  f = std::move(out);
}

size_t apex_index(const SpanModel::OneCell& f, const SpanModel::Elem& e) {
  auto it = std::lower_bound(f.apex.begin(), f.apex.end(), e);
  if (it == f.apex.end() || *it != e)
    throw std::invalid_argument("element '" + e + "' is not in the apex");
  return static_cast<size_t>(it - f.apex.begin());
}

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

SpanModel::Object SpanModel::object(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

Result<SpanModel::OneCell> SpanModel::span(Object src, Object tgt, std::vector<Elem> apex,
                                           std::vector<std::string> left,
                                           std::vector<std::string> right) {
  using R = Result<OneCell>;
  if (apex.size() != left.size() || apex.size() != right.size())
    return R::fail("apex and leg lists have different lengths");
  for (size_t i = 0; i < apex.size(); ++i) {
    if (!std::binary_search(src.begin(), src.end(), left[i]))
      return R::fail(cat("left leg of '", apex[i], "' hits unknown label '", left[i], "'"));
    if (!std::binary_search(tgt.begin(), tgt.end(), right[i]))
      return R::fail(cat("right leg of '", apex[i], "' hits unknown label '", right[i], "'"));
  }
  OneCell f{std::move(src), std::move(tgt), std::move(apex), std::move(left), std::move(right)};
  sort_rows(f);
  for (size_t i = 1; i < f.apex.size(); ++i)
    if (f.apex[i] == f.apex[i - 1])
      return R::fail(cat("duplicate apex element '", f.apex[i], "'"));
  return f;
}

Result<SpanModel::TwoCell> SpanModel::two_cell(const OneCell& src, const OneCell& tgt,
                                               const std::map<Elem, Elem>& assignment) {
  using R = Result<TwoCell>;
  if (!(src.src == tgt.src) || !(src.tgt == tgt.tgt))
    return R::fail("spans do not share endpoints");
  if (assignment.size() != src.apex.size())
    return R::fail(cat("assignment covers ", assignment.size(), " of ", src.apex.size(),
                       " apex elements"));
  TwoCell a{src, tgt, std::vector<size_t>(src.apex.size())};
  for (const auto& [from, to] : assignment) {
    auto it = std::lower_bound(src.apex.begin(), src.apex.end(), from);
    if (it == src.apex.end() || *it != from)
      return R::fail(cat("'", from, "' is not in the source apex"));
    size_t i = static_cast<size_t>(it - src.apex.begin());
    auto jt = std::lower_bound(tgt.apex.begin(), tgt.apex.end(), to);
    if (jt == tgt.apex.end() || *jt != to)
      return R::fail(cat("'", to, "' is not in the target apex"));
    size_t j = static_cast<size_t>(jt - tgt.apex.begin());
    if (src.left[i] != tgt.left[j] || src.right[i] != tgt.right[j])
      return R::fail(cat("'", from, "' -> '", to, "' does not commute with the legs"));
    a.map[i] = j;
  }
  return a;
}

SpanModel::OneCell SpanModel::id_one(const Object& x) const {
  OneCell f;
  f.src = f.tgt = x;
  for (const std::string& l : x) {
    f.apex.push_back(l);
    f.left.push_back(l);
    f.right.push_back(l);
  }
  return f;
}

SpanModel::TwoCell SpanModel::id_two(const OneCell& f) const {
  TwoCell a{f, f, std::vector<size_t>(f.apex.size())};
  for (size_t i = 0; i < f.apex.size(); ++i) a.map[i] = i;
  return a;
}

SpanModel::OneCell SpanModel::hcomp_one(const OneCell& g, const OneCell& f) const {
  require(f.tgt == g.src, "hcomp_one: inner endpoints differ");
  OneCell out;
  out.src = f.src;
  out.tgt = g.tgt;
  for (size_t i = 0; i < f.apex.size(); ++i)
    for (size_t j = 0; j < g.apex.size(); ++j)
      if (f.right[i] == g.left[j]) {
        out.apex.push_back(pair(f.apex[i], g.apex[j]));
        out.left.push_back(f.left[i]);
        out.right.push_back(g.right[j]);
      }
  sort_rows(out);
  return out;
}

SpanModel::TwoCell SpanModel::hcomp_two(const TwoCell& beta, const TwoCell& alpha) const {
  OneCell src = hcomp_one(beta.src, alpha.src);
  OneCell tgt = hcomp_one(beta.tgt, alpha.tgt);
  TwoCell out{src, tgt, std::vector<size_t>(src.apex.size())};
  for (size_t i = 0; i < alpha.src.apex.size(); ++i)
    for (size_t j = 0; j < beta.src.apex.size(); ++j)
      if (alpha.src.right[i] == beta.src.left[j]) {
        size_t from = apex_index(src, pair(alpha.src.apex[i], beta.src.apex[j]));
        size_t to = apex_index(
            tgt, pair(alpha.tgt.apex[alpha.map[i]], beta.tgt.apex[beta.map[j]]));
        out.map[from] = to;
      }
  return out;
}

SpanModel::TwoCell SpanModel::vcomp(const TwoCell& beta, const TwoCell& alpha) const {
  require(alpha.tgt == beta.src, "vcomp: middle spans differ");
  TwoCell out{alpha.src, beta.tgt, std::vector<size_t>(alpha.map.size())};
  for (size_t i = 0; i < alpha.map.size(); ++i) out.map[i] = beta.map[alpha.map[i]];
  return out;
}

SpanModel::TwoCell SpanModel::associator(const OneCell& h, const OneCell& g,
                                         const OneCell& f) const {
  // (hg)f -> h(gf): apexes (x,(y,z)) -> ((x,y),z).
  OneCell src = hcomp_one(hcomp_one(h, g), f);
  OneCell tgt = hcomp_one(h, hcomp_one(g, f));
  TwoCell out{src, tgt, std::vector<size_t>(src.apex.size())};
  for (size_t i = 0; i < f.apex.size(); ++i)
    for (size_t j = 0; j < g.apex.size(); ++j) {
      if (f.right[i] != g.left[j]) continue;
      for (size_t k = 0; k < h.apex.size(); ++k) {
        if (g.right[j] != h.left[k]) continue;
        size_t from = apex_index(src, pair(f.apex[i], pair(g.apex[j], h.apex[k])));
        size_t to = apex_index(tgt, pair(pair(f.apex[i], g.apex[j]), h.apex[k]));
        out.map[from] = to;
      }
    }
  return out;
}

SpanModel::TwoCell SpanModel::associator_inv(const OneCell& h, const OneCell& g,
                                             const OneCell& f) const {
  TwoCell a = associator(h, g, f);
  TwoCell out{a.tgt, a.src, std::vector<size_t>(a.map.size())};
  for (size_t i = 0; i < a.map.size(); ++i) out.map[a.map[i]] = i;
  return out;
}

SpanModel::TwoCell SpanModel::lunitor(const OneCell& f) const {
  OneCell src = hcomp_one(id_one(f.tgt), f);
  TwoCell out{src, f, std::vector<size_t>(src.apex.size())};
  for (size_t i = 0; i < f.apex.size(); ++i)
    out.map[apex_index(src, pair(f.apex[i], f.right[i]))] = i;
  return out;
}

SpanModel::TwoCell SpanModel::lunitor_inv(const OneCell& f) const {
  TwoCell l = lunitor(f);
  TwoCell out{l.tgt, l.src, std::vector<size_t>(l.map.size())};
  for (size_t i = 0; i < l.map.size(); ++i) out.map[l.map[i]] = i;
  return out;
}

SpanModel::TwoCell SpanModel::runitor(const OneCell& f) const {
  OneCell src = hcomp_one(f, id_one(f.src));
  TwoCell out{src, f, std::vector<size_t>(src.apex.size())};
  for (size_t i = 0; i < f.apex.size(); ++i)
    out.map[apex_index(src, pair(f.left[i], f.apex[i]))] = i;
  return out;
}

SpanModel::TwoCell SpanModel::runitor_inv(const OneCell& f) const {
  TwoCell r = runitor(f);
  TwoCell out{r.tgt, r.src, std::vector<size_t>(r.map.size())};
  for (size_t i = 0; i < r.map.size(); ++i) out.map[r.map[i]] = i;
  return out;
}

std::string SpanModel::one_str(const OneCell& f) const {
  std::vector<std::string> rows;
  for (size_t i = 0; i < f.apex.size(); ++i)
    rows.push_back(cat(f.apex[i], ":", f.left[i], "->", f.right[i]));
  return cat("{", join(rows, " ; "), "}");
}

std::string SpanModel::two_str(const TwoCell& a) const {
  std::vector<std::string> rows;
  for (size_t i = 0; i < a.map.size(); ++i)
    rows.push_back(cat(a.src.apex[i], " -> ", a.tgt.apex[a.map[i]]));
  return cat("{", join(rows, " ; "), "}");
}

}  // namespace bipaste
