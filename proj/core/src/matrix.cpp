#include "pb/matrix.hpp"

#include <string>

namespace pb {

GfMatrix::GfMatrix(std::size_t rows, std::size_t cols, FieldCtx ctx)
    : rows_(rows), cols_(cols), ctx_(ctx), data_(rows * cols, zero(ctx)) {}

GfMatrix GfMatrix::from_ints(const std::vector<std::vector<long long>>& rows,
                             FieldCtx ctx) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  GfMatrix m(r, c, ctx);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged row in from_ints");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Fp(rows[i][j], ctx);
  }
  return m;
}

GfMatrix GfMatrix::identity(std::size_t n, FieldCtx ctx) {
  GfMatrix m(n, n, ctx);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one(ctx);
  return m;
}

Vec GfMatrix::row(std::size_t r) const {
  Vec v(cols_, zero(ctx_));
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

Vec GfMatrix::col(std::size_t c) const {
  Vec v(rows_, zero(ctx_));
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

void GfMatrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw DimensionError("set_row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(r, j) = v[j];
}

void GfMatrix::set_col(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw DimensionError("set_col length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, c) = v[i];
}

GfMatrix GfMatrix::select_cols(const std::vector<std::size_t>& which) const {
  GfMatrix m(rows_, which.size(), ctx_);
  for (std::size_t j = 0; j < which.size(); ++j) {
    if (which[j] >= cols_) throw DimensionError("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) m.at(i, j) = at(i, which[j]);
  }
  return m;
}

bool GfMatrix::is_zero() const {
  for (const Fp& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

GfMatrix GfMatrix::operator+(const GfMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionError("matrix add shape mismatch");
  GfMatrix m(rows_, cols_, ctx_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    m.data_[i] = data_[i] + rhs.data_[i];
  return m;
}

GfMatrix GfMatrix::operator-(const GfMatrix& rhs) const {
  return *this + rhs.scaled(Fp(-1, ctx_));
}

GfMatrix GfMatrix::scaled(Fp k) const {
  GfMatrix m(rows_, cols_, ctx_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * k;
  return m;
}

GfMatrix mat_mul(const GfMatrix& a, const GfMatrix& b) {
  if (a.ctx() != b.ctx()) throw FieldMismatchError("mat_mul mixed fields");
  if (a.cols() != b.rows())
    throw DimensionError("mat_mul shape mismatch: " +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()));
  GfMatrix m(a.rows(), b.cols(), a.ctx());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      Fp aij = a.at(i, l);
      if (aij.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        m.at(i, j) += aij * b.at(l, j);
    }
  return m;
}

Vec mat_vec(const GfMatrix& a, const Vec& x) {
  if (x.size() != a.cols()) throw DimensionError("mat_vec length mismatch");
  Vec out(a.rows(), zero(a.ctx()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a.at(i, j) * x[j];
  return out;
}

Vec vec_mat(const Vec& x, const GfMatrix& a) {
  if (x.size() != a.rows()) throw DimensionError("vec_mat length mismatch");
  Vec out(a.cols(), zero(a.ctx()));
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) out[j] += x[i] * a.at(i, j);
  return out;
}

Fp dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("dot length mismatch");
  if (a.empty()) throw DimensionError("dot of empty vectors");
  Fp s = zero(a[0].ctx());
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vec_add length mismatch");
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_scaled(const Vec& a, Fp k) {
  Vec out(a);
  for (Fp& x : out) x = x * k;
  return out;
}

bool vec_is_zero(const Vec& v) {
  for (const Fp& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::size_t weight(const Vec& v) {
  std::size_t w = 0;
  for (const Fp& x : v)
    if (!x.is_zero()) ++w;
  return w;
}

GfMatrix transpose(const GfMatrix& a) {
  GfMatrix m(a.cols(), a.rows(), a.ctx());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(j, i) = a.at(i, j);
  return m;
}

GfMatrix stack_rows(const std::vector<Vec>& rows, FieldCtx ctx,
                    std::size_t cols) {
  GfMatrix m(rows.size(), cols, ctx);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Fp frobenius(const GfMatrix& a, const GfMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("frobenius shape mismatch");
  Fp s = zero(a.ctx());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += a.at(i, j) * b.at(i, j);
  return s;
}

namespace {

// Elimination into RREF; returns pivot columns.
std::vector<std::size_t> eliminate(GfMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(piv, j), m.at(r, j));
    Fp inv = m.at(r, c).inv();
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Fp f = m.at(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

GfMatrix rref(const GfMatrix& a) {
  GfMatrix m = a;
  eliminate(m);
  return m;
}

std::size_t rank(const GfMatrix& a) {
  GfMatrix m = a;
  return eliminate(m).size();
}

std::optional<Vec> solve(const GfMatrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionError("solve rhs length mismatch");
  GfMatrix aug(a.rows(), a.cols() + 1, a.ctx());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = eliminate(aug);
  // pivot in the rhs column means inconsistency
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), zero(a.ctx()));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug.at(i, a.cols());
  return x;
}

std::vector<Vec> kernel_basis(const GfMatrix& a) {
  GfMatrix m = a;
  std::vector<std::size_t> pivots = eliminate(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(a.cols(), zero(a.ctx()));
    v[c] = one(a.ctx());
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -m.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b,
               FieldCtx ctx, std::size_t len) {
  GfMatrix ma = stack_rows(a, ctx, len);
  GfMatrix mb = stack_rows(b, ctx, len);
  std::size_t ra = rank(ma);
  std::size_t rb = rank(mb);
  if (ra != rb) return false;
  std::vector<Vec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return rank(stack_rows(all, ctx, len)) == ra;
}

}  // namespace pb
