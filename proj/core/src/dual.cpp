#include "pb/dual.hpp"

#include <cmath>

namespace pb {

DualWitness in_dual(const PiggybackCode& code, const GfMatrix& x) {
  std::size_t n = code.n(), t = code.t();
  if (x.rows() != n || x.cols() != t || x.ctx() != code.ctx())
    throw DimensionError("dual candidate must be n x t over the code's field");
  DualWitness w;
  w.member = true;
  for (std::size_t i = 0; i < t; ++i) {
    Vec res = mat_vec(code.base().generator(), x.col(i));
    for (std::size_t j = i + 1; j < t; ++j)
      res = vec_add(res, mat_vec(code.piggy_at(i, j), x.col(j)));
    if (!vec_is_zero(res)) w.member = false;
    w.residuals.push_back(std::move(res));
  }
  return w;
}

bool frobenius_check(const PiggybackCode& code, const GfMatrix& x,
                     std::size_t trials, std::uint64_t seed) {
  std::size_t k = code.k(), t = code.t();
  // Basis messages make this exact; random messages are gravy.
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t c = 0; c < k; ++c) {
      Message msg = zero_message(code);
      msg.chunks[i][c] = one(code.ctx());
      if (!frobenius(x, encode(code, msg).mat).is_zero()) return false;
    }
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Message msg = random_message(code, seed + trial);
    if (!frobenius(x, encode(code, msg).mat).is_zero()) return false;
  }
  return true;
}

GfMatrix dual_constraint_matrix(const PiggybackCode& code) {
  std::size_t n = code.n(), k = code.k(), t = code.t();
  GfMatrix a(k * t, n * t, code.ctx());
  for (std::size_t i = 0; i < t; ++i) {
    // block row i: F on substripe i, P(i,j) on substripes j > i
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c)
        a.at(i * k + r, i * n + c) = code.base().generator().at(r, c);
    for (std::size_t j = i + 1; j < t; ++j) {
      GfMatrix p = code.piggy_at(i, j);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c)
          a.at(i * k + r, j * n + c) = p.at(r, c);
    }
  }
  return a;
}

GfMatrix unflatten_dual(const PiggybackCode& code, const Vec& flat) {
  std::size_t n = code.n(), t = code.t();
  if (flat.size() != n * t) throw DimensionError("bad flat dual length");
  GfMatrix x(n, t, code.ctx());
  for (std::size_t j = 0; j < t; ++j)
    for (std::size_t i = 0; i < n; ++i) x.at(i, j) = flat[j * n + i];
  return x;
}

std::vector<GfMatrix> dual_basis(const PiggybackCode& code) {
  std::vector<GfMatrix> basis;
  for (const Vec& v : kernel_basis(dual_constraint_matrix(code)))
    basis.push_back(unflatten_dual(code, v));
  return basis;
}

std::vector<GfMatrix> enumerate_dual(const PiggybackCode& code,
                                     std::size_t budget) {
  std::vector<GfMatrix> basis = dual_basis(code);
  std::size_t q = code.ctx().q();
  double log_count = basis.size() * std::log2(static_cast<double>(q));
  if (log_count > 62 ||
      std::pow(static_cast<double>(q), static_cast<double>(basis.size())) >
          static_cast<double>(budget))
    throw BudgetError("dual space larger than enumeration budget");

  std::vector<GfMatrix> out;
  std::vector<std::uint32_t> coeff(basis.size(), 0);
  while (true) {
    GfMatrix x(code.n(), code.t(), code.ctx());
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (coeff[b] != 0)
        x = x + basis[b].scaled(Fp(coeff[b], code.ctx()));
    out.push_back(std::move(x));
    // lexicographic increment, most significant coefficient first
    std::size_t pos = basis.size();
    while (pos-- > 0) {
      if (++coeff[pos] < q) break;
      coeff[pos] = 0;
      if (pos == 0) return out;
    }
    if (basis.empty()) return out;
  }
}

}  // namespace pb
