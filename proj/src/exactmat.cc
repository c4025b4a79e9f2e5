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

#include "prymdice/exactmat.h"

#include <algorithm>
#include <sstream>
#include <utility>

namespace prymdice {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a);
  Integer y = abs(b);
  while (y != 0) {
    Integer t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

std::string to_string(const Integer& value) { return value.str(); }

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ": " +
                                         message),
      line_(line) {}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("IntMatrix: entry count does not match shape");
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("IntMatrix: ragged initializer");
    }
    for (long long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_};
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool IntMatrix::column_is_zero(std::size_t c) const {
  for (std::size_t r = 0; r < rows_; ++r) {
    if ((*this)(r, c) != 0) return false;
  }
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer& v) { return v == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> rows,
                               std::span<const std::size_t> cols) const {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(i, j) = (*this)(rows[i], cols[j]);
    }
  }
  return out;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> cols) const {
  std::vector<std::size_t> all(rows_);
  for (std::size_t r = 0; r < rows_; ++r) all[r] = r;
  return submatrix(all, cols);
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> rows) const {
  std::vector<std::size_t> all(cols_);
  for (std::size_t c = 0; c < cols_; ++c) all[c] = c;
  return submatrix(rows, all);
}

IntMatrix IntMatrix::scaled(const Integer& factor) const {
  IntMatrix out = *this;
  for (auto& v : out.entries_) v *= factor;
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap((*this)(a, c), (*this)(b, c));
  }
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    (*this)(target, c) += factor * (*this)(source, c);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_column(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("IntMatrix: shape mismatch in product");
  }
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

// ------------------------------------------------------------------ HalfInt

HalfInt HalfInt::from_twice(Integer twice) {
  HalfInt h;
  h.twice_ = std::move(twice);
  return h;
}

bool HalfInt::is_integer() const { return (twice_ & 1) == 0; }

Integer HalfInt::integer_value() const {
  if (!is_integer()) {
    throw std::domain_error("HalfInt: " + to_string() + " is not an integer");
  }
  return twice_ / 2;
}

std::string HalfInt::to_string() const {
  if (is_integer()) return Integer(twice_ / 2).str();
  return twice_.str() + "/2";
}

// ----------------------------------------------------------- RationalMatrix

RationalMatrix::RationalMatrix(IntMatrix numerator, int denominator)
    : numerator_(std::move(numerator)), denominator_(denominator) {
  if (denominator_ != 1 && denominator_ != 2) {
    throw std::invalid_argument("RationalMatrix: denominator must be 1 or 2");
  }
  if (denominator_ == 2 &&
      std::all_of(numerator_.entries().begin(), numerator_.entries().end(),
                  [](const Integer& v) { return (v & 1) == 0; })) {
    for (std::size_t r = 0; r < numerator_.rows(); ++r) {
      for (std::size_t c = 0; c < numerator_.cols(); ++c) {
        numerator_(r, c) /= 2;
      }
    }
    denominator_ = 1;
  }
}

HalfInt RationalMatrix::at(std::size_t r, std::size_t c) const {
  return HalfInt::from_twice(numerator_(r, c) * (2 / denominator_));
}

IntMatrix RationalMatrix::doubled() const {
  return denominator_ == 2 ? numerator_ : numerator_.scaled(2);
}

// ----------------------------------------------------------------- HNF etc.

HermiteForm hnf(const IntMatrix& m) {
  if (m.empty()) throw std::invalid_argument("hnf: empty matrix");
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  const std::size_t rows = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < rows; ++c) {
    // Euclid on column c below row r until a single nonzero entry remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h(i, c) != 0 && (best == rows || abs(h(i, c)) < abs(h(best, c)))) {
          best = i;
        }
      }
      if (best == rows) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Integer q = h(i, c) / h(r, c);
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

IntMatrix row_lattice_basis(const IntMatrix& m) {
  if (m.empty()) return IntMatrix(0, m.cols());
  HermiteForm form = hnf(m);
  std::vector<std::size_t> keep(form.rank);
  for (std::size_t i = 0; i < form.rank; ++i) keep[i] = i;
  return form.h.select_rows(keep);
}

std::size_t rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  return hnf(m).rank;
}

Integer det(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("det: matrix is not square");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("adjugate: matrix is not square");
  }
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  std::vector<std::size_t> rows(n - 1);
  std::vector<std::size_t> cols(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = 0, k = 0; a < n; ++a) {
        if (a != j) rows[k++] = a;
      }
      for (std::size_t b = 0, k = 0; b < n; ++b) {
        if (b != i) cols[k++] = b;
      }
      Integer cofactor = det(m.submatrix(rows, cols));
      adj(i, j) = ((i + j) % 2 == 0) ? cofactor : Integer(-cofactor);
    }
  }
  return adj;
}

bool next_combination(std::vector<std::size_t>& indices, std::size_t n) {
  const std::size_t k = indices.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (indices[i] < n - k + i) {
      ++indices[i];
      for (std::size_t j = i + 1; j < k; ++j) indices[j] = indices[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// -------------------------------------------------------- SquareSubmatrices

SquareSubmatrices::SquareSubmatrices(const IntMatrix& m, std::size_t k)
    : source_(&m), k_(k) {
  if (k == 0 || k > std::min(m.rows(), m.cols())) {
    throw std::invalid_argument("square_submatrices: k out of range");
  }
}

SquareSubmatrices::iterator SquareSubmatrices::begin() const {
  iterator it;
  it.source_ = source_;
  it.current_.rows.resize(k_);
  it.current_.cols.resize(k_);
  for (std::size_t i = 0; i < k_; ++i) {
    it.current_.rows[i] = i;
    it.current_.cols[i] = i;
  }
  it.done_ = false;
  it.load();
  return it;
}

std::size_t SquareSubmatrices::size() const {
  return binomial(source_->rows(), k_) * binomial(source_->cols(), k_);
}

SquareSubmatrices::iterator& SquareSubmatrices::iterator::operator++() {
  if (done_) return *this;
  if (!next_combination(current_.cols, source_->cols())) {
    if (!next_combination(current_.rows, source_->rows())) {
      done_ = true;
      return *this;
    }
    for (std::size_t i = 0; i < current_.cols.size(); ++i) current_.cols[i] = i;
  }
  load();
  return *this;
}

void SquareSubmatrices::iterator::load() {
  current_.matrix = source_->submatrix(current_.rows, current_.cols);
}

// ------------------------------------------------------------------ text io

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

Integer parse_integer(const std::string& token, std::size_t line) {
  std::size_t i = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (i == token.size() ||
      !std::all_of(token.begin() + i, token.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return Integer(token[0] == '+' ? token.substr(1) : token);
}

std::size_t parse_count(const std::string& token, std::size_t line) {
  Integer v = parse_integer(token, line);
  if (v < 0 || v > 1'000'000) {
    throw ParseError(line, "dimension out of range: " + token);
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

RationalMatrix parse_rational_matrix(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  std::size_t at = 0;
  int denominator = 1;
  if (at < lines.size() && lines[at].tokens[0] == "denominator") {
    const Line& d = lines[at];
    if (d.tokens.size() != 2 || (d.tokens[1] != "1" && d.tokens[1] != "2")) {
      throw ParseError(d.number, "denominator line must be 'denominator 1|2'");
    }
    denominator = d.tokens[1] == "2" ? 2 : 1;
    ++at;
  }
  if (at == lines.size()) throw ParseError(0, "missing 'rows cols' header");
  const Line& header = lines[at++];
  if (header.tokens.size() != 2) {
    throw ParseError(header.number, "header must be 'rows cols'");
  }
  const std::size_t rows = parse_count(header.tokens[0], header.number);
  const std::size_t cols = parse_count(header.tokens[1], header.number);
  if (lines.size() - at != rows) {
    throw ParseError(lines.empty() ? 0 : lines.back().number,
                     "expected " + std::to_string(rows) + " rows, found " +
                         std::to_string(lines.size() - at));
  }
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& line = lines[at + r];
    if (line.tokens.size() != cols) {
      throw ParseError(line.number, "expected " + std::to_string(cols) +
                                        " entries, found " +
                                        std::to_string(line.tokens.size()));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = parse_integer(line.tokens[c], line.number);
    }
  }
  return RationalMatrix(std::move(m), denominator);
}

IntMatrix parse_int_matrix(std::string_view text) {
  RationalMatrix m = parse_rational_matrix(text);
  if (m.denominator() != 1) {
    throw ParseError(0, "expected an integer matrix, found denominator 2");
  }
  return m.numerator();
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(r, c);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_matrix(const RationalMatrix& m) {
  std::string body = format_matrix(m.numerator());
  return m.denominator() == 2 ? "denominator 2\n" + body : body;
}

}  // namespace prymdice
