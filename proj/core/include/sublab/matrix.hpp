#pragma once

#include "sublab/types.hpp"

#include <cstddef>
#include <initializer_list>

namespace sublab {

/// Dense row-major matrix over exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

  bool is_zero() const;

  RationalMatrix transpose() const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator*(const Rational& s) const;

  RVec row(std::size_t i) const;
  RVec col(std::size_t j) const;
  void set_row(std::size_t i, const RVec& v);
  void set_col(std::size_t j, const RVec& v);

  /// Matrix-vector product.
  RVec apply(const RVec& v) const;

  /// Columns are the given vectors.
  static RationalMatrix from_columns(const std::vector<RVec>& cols);
  /// Rows are the given vectors.
  static RationalMatrix from_rows(const std::vector<RVec>& rows);

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact dot product.
Rational dot(const RVec& a, const RVec& b);

/// a + s*b, sizes must match.
RVec axpy(const RVec& a, const Rational& s, const RVec& b);

/// In-place a += s*b.
void axpy_inplace(RVec& a, const Rational& s, const RVec& b);

bool is_zero_vec(const RVec& v);

}  // namespace sublab
