#include "cyclespace/matrix.hpp"

#include <algorithm>

#include "cyclespace/errors.hpp"

namespace cyclespace {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<Vec>& columns) {
  if (columns.empty()) return RatMatrix(0, 0);
  RatMatrix m(columns[0].size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows())
      fail(ErrorCode::BadInput, "column length mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(ErrorCode::BadInput, "matrix shape mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail(ErrorCode::BadInput, "matrix shape mismatch");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail(ErrorCode::BadInput, "matrix shape mismatch");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] * s;
  return out;
}

Vec RatMatrix::apply(const Vec& x) const {
  if (x.size() != cols_) fail(ErrorCode::BadInput, "vector length mismatch");
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) y[i] += at(i, j) * x[j];
  return y;
}

Vec RatMatrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Vec RatMatrix::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

bool RatMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& r) { return r == 0; });
}

RrefResult rref(const RatMatrix& m) {
  RrefResult res{m, {}, 0};
  RatMatrix& a = res.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a.at(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < a.cols(); ++j)
        swap(a.at(pivot, j), a.at(r, j));
    Rational inv = 1 / a.at(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rational f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a.at(i, j) -= f * a.at(r, j);
    }
    res.pivot_columns.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::vector<Vec> nullspace(const RatMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < rr.rank; ++r)
      v[rr.pivot_columns[r]] = -rr.reduced.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve(const RatMatrix& m, const Vec& b, Vec& x) {
  if (b.size() != m.rows()) fail(ErrorCode::BadInput, "rhs length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  for (std::size_t c : rr.pivot_columns)
    if (c == m.cols()) return false;  // inconsistent
  x.assign(m.cols(), Rational(0));
  for (std::size_t r = 0; r < rr.pivot_columns.size(); ++r)
    x[rr.pivot_columns[r]] = rr.reduced.at(r, m.cols());
  return true;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::BadInput, "inverse of non-square");
  std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult rr = rref(aug);
  if (rr.rank < n || rr.pivot_columns[n - 1] != n - 1)
    fail(ErrorCode::DependentBasis, "singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.reduced.at(i, n + j);
  return inv;
}

RatMatrix orth_project_onto_span(const std::vector<Vec>& basis) {
  if (basis.empty()) fail(ErrorCode::BadInput, "empty basis");
  RatMatrix c = RatMatrix::from_columns(basis);
  RatMatrix ct = c.transpose();
  RatMatrix gram = ct * c;
  RatMatrix gram_inv;
  try {
    gram_inv = inverse(gram);
  } catch (const Error&) {
    fail(ErrorCode::DependentBasis, "basis vectors are linearly dependent");
  }
  return c * (gram_inv * ct);
}

Rational l1_operator_norm(const RatMatrix& m) {
  Rational best = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += abs(m.at(i, j));
    if (s > best) best = s;
  }
  return best;
}

Rational linf_operator_norm(const RatMatrix& m) {
  Rational best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += abs(m.at(i, j));
    if (s > best) best = s;
  }
  return best;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorCode::BadInput, "vector length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

Rational l1_norm(const Vec& v) {
  Rational s = 0;
  for (const Rational& x : v) s += abs(x);
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorCode::BadInput, "vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorCode::BadInput, "vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale(const Vec& v, const Rational& s) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& r) { return r == 0; });
}

std::size_t span_rank(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  // Incremental elimination; cheap when the rank is much smaller than the
  // number of candidate vectors.
  std::vector<Vec> rows;                  // reduced, each with leading 1
  std::vector<std::size_t> lead;          // leading index per row
  for (const Vec& cand : vectors) {
    Vec v = cand;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (v[lead[r]] != 0) {
        Rational f = v[lead[r]];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
      }
    std::size_t l = 0;
    while (l < v.size() && v[l] == 0) ++l;
    if (l == v.size()) continue;
    Rational inv = 1 / v[l];
    for (std::size_t j = l; j < v.size(); ++j) v[j] *= inv;
    rows.push_back(std::move(v));
    lead.push_back(l);
  }
  return rows.size();
}

}  // namespace cyclespace
