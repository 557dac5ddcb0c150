#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace chowob {

using Integer = mpz_class;
using IntegerVector = std::vector<Integer>;

/// Dense row-major matrix over Z with exact (GMP) entries.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<IntegerVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  IntegerVector row_vector(std::size_t r) const;
  IntegerVector column_vector(std::size_t c) const;

  void append_row(std::span<const Integer> values);

  // Elementary operations; each is unimodular.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);

  IntegerMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Row vector times matrix: returns v * m.
IntegerVector multiply(std::span<const Integer> v, const IntegerMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination. Requires a square matrix;
/// the empty matrix has determinant 1.
Integer determinant(const IntegerMatrix& m);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Floor division quotient (rounds toward negative infinity).
Integer floor_div(const Integer& a, const Integer& b);

/// Extended gcd: returns {g, s, t} with s*a + t*b = g >= 0.
struct Bezout {
  Integer g;
  Integer s;
  Integer t;
};
Bezout extended_gcd(const Integer& a, const Integer& b);

}  // namespace chowob
