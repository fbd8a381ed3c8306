#ifndef PB_MATRIX_HPP
#define PB_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "pb/field.hpp"

namespace pb {

using Vec = std::vector<Fp>;

/// Dense row-major matrix over GF(q).
class GfMatrix {
 public:
  GfMatrix(std::size_t rows, std::size_t cols, FieldCtx ctx);

  /// Builds from integer literals, reducing mod q. Rows must be equal length.
  static GfMatrix from_ints(const std::vector<std::vector<long long>>& rows,
                            FieldCtx ctx);
  static GfMatrix identity(std::size_t n, FieldCtx ctx);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldCtx ctx() const { return ctx_; }

  Fp& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Fp& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);
  void set_col(std::size_t c, const Vec& v);

  /// Columns selected by `which`, in the given order.
  GfMatrix select_cols(const std::vector<std::size_t>& which) const;

  bool is_zero() const;
  bool operator==(const GfMatrix&) const = default;

  GfMatrix operator+(const GfMatrix& rhs) const;
  GfMatrix operator-(const GfMatrix& rhs) const;
  GfMatrix scaled(Fp k) const;

 private:
  std::size_t rows_, cols_;
  FieldCtx ctx_;
  std::vector<Fp> data_;
};

GfMatrix mat_mul(const GfMatrix& a, const GfMatrix& b);
Vec mat_vec(const GfMatrix& a, const Vec& x);     // A x, x as column
Vec vec_mat(const Vec& x, const GfMatrix& a);     // x A, x as row
Fp dot(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, Fp k);
bool vec_is_zero(const Vec& v);
std::size_t weight(const Vec& v);
GfMatrix transpose(const GfMatrix& a);
GfMatrix stack_rows(const std::vector<Vec>& rows, FieldCtx ctx,
                    std::size_t cols);

/// Frobenius inner product <A, B> = sum_ij a_ij b_ij.
Fp frobenius(const GfMatrix& a, const GfMatrix& b);

/// Reduced row echelon form; first-nonzero pivoting, deterministic.
GfMatrix rref(const GfMatrix& a);
std::size_t rank(const GfMatrix& a);

/// One solution of A x = b with free variables set to zero,
/// or nullopt if the system is inconsistent.
std::optional<Vec> solve(const GfMatrix& a, const Vec& b);

/// Basis of the right null space {x : A x = 0}, in ascending
/// free-column order.
std::vector<Vec> kernel_basis(const GfMatrix& a);

/// Span equality of two sets of row vectors of equal length.
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b,
               FieldCtx ctx, std::size_t len);

}  // namespace pb

#endif
