#include "sublab/matrix.hpp"

#include <sstream>

namespace sublab {

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.assign(rows_ * cols_, Rational(0));
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix initializer");
    std::size_t j = 0;
    for (long v : r) at(i, j++) = Rational(v);
    ++i;
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InputError("matrix shape mismatch in +");
  RationalMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InputError("matrix shape mismatch in -");
  RationalMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
  return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix shape mismatch in *");
  RationalMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o.at(k, j);
        if (b != 0) r.at(i, j) += a * b;
      }
    }
  return r;
}

RationalMatrix RationalMatrix::operator*(const Rational& s) const {
  RationalMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * s;
  return r;
}

RVec RationalMatrix::row(std::size_t i) const {
  RVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

RVec RationalMatrix::col(std::size_t j) const {
  RVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void RationalMatrix::set_row(std::size_t i, const RVec& v) {
  if (v.size() != cols_) throw InputError("row size mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void RationalMatrix::set_col(std::size_t j, const RVec& v) {
  if (v.size() != rows_) throw InputError("col size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

RVec RationalMatrix::apply(const RVec& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector size mismatch");
  RVec out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc(0);
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) acc += at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RVec>& cols) {
  if (cols.empty()) return RationalMatrix();
  RationalMatrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RVec>& rows) {
  if (rows.empty()) return RationalMatrix();
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "\n[" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? " " : "") << to_fraction_string(at(i, j));
    os << "]";
  }
  return os.str();
}

Rational dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw InputError("dot size mismatch");
  Rational acc(0);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) acc += a[k] * b[k];
  return acc;
}

RVec axpy(const RVec& a, const Rational& s, const RVec& b) {
  if (a.size() != b.size()) throw InputError("axpy size mismatch");
  RVec r = a;
  axpy_inplace(r, s, b);
  return r;
}

void axpy_inplace(RVec& a, const Rational& s, const RVec& b) {
  if (a.size() != b.size()) throw InputError("axpy size mismatch");
  if (s == 0) return;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (b[k] != 0) a[k] += s * b[k];
}

bool is_zero_vec(const RVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace sublab
