#pragma once

#include <cstddef>
#include <vector>

#include "cyclespace/rational.hpp"

namespace cyclespace {

// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_columns(const std::vector<Vec>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rational& s) const;
  bool operator==(const RatMatrix& rhs) const = default;

  Vec apply(const Vec& x) const;  // matrix * column vector
  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  bool is_zero() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank;
};

// Exact reduced row echelon form; pivot = first nonzero entry in column order.
RrefResult rref(const RatMatrix& m);

// Exact basis of ker(m), one vector per free column.
std::vector<Vec> nullspace(const RatMatrix& m);

// Solves m * x = b exactly. Returns false if inconsistent; when the system is
// underdetermined, free variables are set to zero.
bool solve(const RatMatrix& m, const Vec& b, Vec& x);

// Inverse of a square matrix. Throws Error(DependentBasis) if singular.
RatMatrix inverse(const RatMatrix& m);

// Orthogonal projection onto span of the given (independent) vectors:
// P = C (C^T C)^{-1} C^T. Throws Error(DependentBasis) on dependence.
RatMatrix orth_project_onto_span(const std::vector<Vec>& basis);

Rational l1_operator_norm(const RatMatrix& m);    // max column abs sum
Rational linf_operator_norm(const RatMatrix& m);  // max row abs sum

Rational dot(const Vec& a, const Vec& b);
Rational l1_norm(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& v, const Rational& s);
bool is_zero(const Vec& v);

// Rank of the span of a set of vectors of common length.
std::size_t span_rank(const std::vector<Vec>& vectors);

}  // namespace cyclespace
