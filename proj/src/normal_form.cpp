#include "chow_obstruct/normal_form.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace chowob {
namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the lower-right block starting at (t, t).
std::optional<Position> min_abs_entry(const IntegerMatrix& s, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      const Integer& x = s(i, j);
      if (x == 0) continue;
      Integer ax = abs(x);
      if (!best || ax < best_abs) {
        best = Position{i, j};
        best_abs = std::move(ax);
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace

IntegerVector SnfDecomposition::diagonal() const {
  IntegerVector d(std::min(s.rows(), s.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = s(i, i);
  return d;
}

SnfDecomposition smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SnfDecomposition out{IntegerMatrix::identity(m), a, IntegerMatrix::identity(n)};
  IntegerMatrix& s = out.s;
  IntegerMatrix& u = out.u;
  IntegerMatrix& v = out.v;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      auto pivot = min_abs_entry(s, t);
      if (!pivot) return out;  // remaining block is zero
      s.swap_rows(t, pivot->row);
      u.swap_rows(t, pivot->row);
      s.swap_cols(t, pivot->col);
      v.swap_cols(t, pivot->col);

      bool cleared = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = -floor_div(s(i, t), s(t, t));
        s.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (s(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = -floor_div(s(t, j), s(t, t));
        s.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        if (s(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Pivot must divide the whole remaining block; otherwise fold the offending
      // row into row t and go around again with a strictly smaller pivot.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending) break;
      s.add_row_multiple(t, *offending, 1);
      u.add_row_multiple(t, *offending, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return out;
}

HermiteDecomposition hermite_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  HermiteDecomposition out{a, IntegerMatrix::identity(m), {}};
  IntegerMatrix& h = out.h;
  IntegerMatrix& u = out.u;

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (!best || abs(h(i, c)) < abs(h(*best, c)))) best = i;
      if (!best) break;
      h.swap_rows(r, *best);
      u.swap_rows(r, *best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Integer q = -floor_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, q);
        u.add_row_multiple(i, r, q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(r, c) == 0) continue;  // no pivot in this column
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = -floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, q);
      u.add_row_multiple(i, r, q);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

IntegerVector reduce_modulo(const HermiteDecomposition& hnf, std::span<const Integer> v) {
  if (v.size() != hnf.h.cols()) throw std::invalid_argument("reduce_modulo: length mismatch");
  IntegerVector out(v.begin(), v.end());
  for (std::size_t k = 0; k < hnf.rank(); ++k) {
    const std::size_t p = hnf.pivot_cols[k];
    Integer q = floor_div(out[p], hnf.h(k, p));
    if (q == 0) continue;
    for (std::size_t j = p; j < out.size(); ++j) out[j] -= q * hnf.h(k, j);
  }
  return out;
}

bool lattice_contains(const HermiteDecomposition& hnf, std::span<const Integer> v) {
  auto r = reduce_modulo(hnf, v);
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

bool lattice_contains(const IntegerMatrix& basis, std::span<const Integer> v) {
  if (v.size() != basis.cols()) throw std::invalid_argument("lattice_contains: length mismatch");
  return lattice_contains(hermite_normal_form(basis), v);
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("unimodular_inverse: not square");
  // u * m = h; h is the identity exactly when m is unimodular.
  auto hnf = hermite_normal_form(m);
  if (!(hnf.h == IntegerMatrix::identity(m.rows())))
    throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
  return hnf.u;
}

}  // namespace chowob
