// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact integer and half-integer matrices. Nothing in here touches floating
// point: entries are arbitrary-precision integers and every elimination is
// fraction free.

#ifndef PRYMDICE_EXACTMAT_H_
#define PRYMDICE_EXACTMAT_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace prymdice {

using Integer = boost::multiprecision::cpp_int;

// Floor division and the matching non-negative remainder (for b > 0).
Integer floor_div(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

// Raised by every text parser in the library; `line` is 1-based, 0 when the
// error is not tied to a particular line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<Integer>& entries() const { return entries_; }

  std::vector<Integer> row(std::size_t r) const;
  std::vector<Integer> column(std::size_t c) const;
  bool column_is_zero(std::size_t c) const;
  bool is_zero() const;

  IntMatrix transpose() const;
  IntMatrix submatrix(std::span<const std::size_t> rows,
                      std::span<const std::size_t> cols) const;
  IntMatrix select_columns(std::span<const std::size_t> cols) const;
  IntMatrix select_rows(std::span<const std::size_t> rows) const;
  IntMatrix scaled(const Integer& factor) const;

  void swap_rows(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source,
                        const Integer& factor);
  void negate_row(std::size_t r);
  void negate_column(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

// A value in (1/2)Z, stored as twice its value so arithmetic stays integral.
class HalfInt {
 public:
  HalfInt() = default;
  HalfInt(long long whole) : twice_(2 * Integer(whole)) {}  // NOLINT
  explicit HalfInt(const Integer& whole) : twice_(2 * whole) {}

  static HalfInt from_twice(Integer twice);

  const Integer& twice() const { return twice_; }
  bool is_integer() const;
  bool is_zero() const { return twice_ == 0; }
  // Throws std::domain_error when the value is not an integer.
  Integer integer_value() const;
  std::string to_string() const;

  HalfInt operator-() const { return from_twice(-twice_); }
  friend HalfInt operator+(const HalfInt& a, const HalfInt& b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend HalfInt operator-(const HalfInt& a, const HalfInt& b) {
    return from_twice(a.twice_ - b.twice_);
  }
  friend HalfInt operator*(const Integer& k, const HalfInt& a) {
    return from_twice(k * a.twice_);
  }
  friend bool operator==(const HalfInt& a, const HalfInt& b) = default;
  friend std::strong_ordering operator<=>(const HalfInt& a, const HalfInt& b) {
    return a.twice_ < b.twice_   ? std::strong_ordering::less
           : a.twice_ > b.twice_ ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }

 private:
  Integer twice_ = 0;
};

// Matrix over (1/2)Z: numerator / denominator with denominator in {1, 2}.
// Kept canonical: a denominator of 2 over an all-even numerator is reduced.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(IntMatrix numerator, int denominator);

  const IntMatrix& numerator() const { return numerator_; }
  int denominator() const { return denominator_; }
  std::size_t rows() const { return numerator_.rows(); }
  std::size_t cols() const { return numerator_.cols(); }
  HalfInt at(std::size_t r, std::size_t c) const;
  // Twice the matrix, always integral.
  IntMatrix doubled() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  IntMatrix numerator_;
  int denominator_ = 1;
};

struct HermiteForm {
  IntMatrix h;  // row-echelon Hermite normal form, zero rows last
  IntMatrix u;  // unimodular, h == u * m
  std::size_t rank = 0;
};

// Row-style Hermite normal form: pivots strictly move right, are positive, and
// entries above each pivot lie in [0, pivot). Throws std::invalid_argument on
// an empty matrix.
HermiteForm hnf(const IntMatrix& m);

// The nonzero rows of hnf(m), i.e. a canonical basis of the row lattice.
IntMatrix row_lattice_basis(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Fraction-free (Bareiss) determinant. Throws std::invalid_argument when m is
// not square.
Integer det(const IntMatrix& m);

// Classical adjugate, so that m * adjugate(m) == det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

// Advances `indices` (a strictly increasing k-subset of [0, n)) to the next
// subset in lexicographic order. Returns false once the last one is passed.
bool next_combination(std::vector<std::size_t>& indices, std::size_t n);

std::size_t binomial(std::size_t n, std::size_t k);

struct Minor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  IntMatrix matrix;
};

// All k x k submatrices, row sets in lexicographic order and column sets
// lexicographically within each row set.
class SquareSubmatrices {
 public:
  SquareSubmatrices(const IntMatrix& m, std::size_t k);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Minor;
    using difference_type = std::ptrdiff_t;
    using pointer = const Minor*;
    using reference = const Minor&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ &&
             (a.done_ || (a.current_.rows == b.current_.rows &&
                          a.current_.cols == b.current_.cols));
    }

   private:
    friend class SquareSubmatrices;
    void load();

    const IntMatrix* source_ = nullptr;
    Minor current_;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return iterator(); }
  std::size_t size() const;

 private:
  const IntMatrix* source_;
  std::size_t k_;
};

// Text format: optional `denominator 2` line, a `rows cols` header, then one
// line per row. Blank lines and `#` comments are ignored.
IntMatrix parse_int_matrix(std::string_view text);
RationalMatrix parse_rational_matrix(std::string_view text);
std::string format_matrix(const IntMatrix& m);
std::string format_matrix(const RationalMatrix& m);

std::string to_string(const Integer& value);

}  // namespace prymdice

#endif  // PRYMDICE_EXACTMAT_H_
