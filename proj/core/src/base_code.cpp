#include "pb/base_code.hpp"

#include <random>
#include <string>

namespace pb {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  if (k == 0) return {{}};
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i-- > 0) {
      if (cur[i] != i + n - k) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
}

BaseCode BaseCode::rs(std::size_t n, std::size_t k, FieldCtx ctx) {
  if (k == 0 || k > n)
    throw ParameterError("need 1 <= k <= n");
  if (n > ctx.q())
    throw ParameterError("Reed-Solomon on distinct points needs n <= q (n=" +
                         std::to_string(n) + ", q=" + std::to_string(ctx.q()) +
                         ")");
  // Vandermonde on evaluation points 0..n-1, then systematic form.
  GfMatrix v(k, n, ctx);
  for (std::size_t j = 0; j < n; ++j) {
    Fp x(static_cast<std::int64_t>(j), ctx);
    Fp p = one(ctx);
    for (std::size_t i = 0; i < k; ++i) {
      v.at(i, j) = p;
      p *= x;
    }
  }
  BaseCode code(systematize(v));
  if (!is_mds(code)) throw ParameterError("RS construction failed MDS check");
  return code;
}

BaseCode BaseCode::from_generator(GfMatrix generator) {
  if (generator.rows() == 0 || generator.rows() > generator.cols())
    throw ParameterError("generator must be k x n with k <= n");
  return BaseCode(std::move(generator));
}

bool is_mds(const BaseCode& code) {
  const GfMatrix& g = code.generator();
  std::size_t n = code.n(), k = code.k();
  if (n <= 12) {
    for (const auto& cols : subsets(n, k))
      if (rank(g.select_cols(cols)) < k) return false;
    return true;
  }
  std::mt19937_64 rng(0xC0DE);
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (int trial = 0; trial < 2000; ++trial) {
    for (std::size_t i = 0; i < k; ++i)
      std::swap(idx[i], idx[i + rng() % (n - i)]);
    std::vector<std::size_t> cols(idx.begin(), idx.begin() + k);
    if (rank(g.select_cols(cols)) < k) return false;
  }
  return true;
}

bool in_base_dual(const BaseCode& code, const Vec& x) {
  if (x.size() != code.n())
    throw DimensionError("in_base_dual: vector length != n");
  return vec_is_zero(mat_vec(code.generator(), x));
}

GfMatrix systematize(const GfMatrix& generator) {
  std::size_t k = generator.rows();
  GfMatrix r = rref(generator);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (r.at(i, j) != Fp(i == j ? 1 : 0, generator.ctx()))
        throw ParameterError("first k columns of generator are singular");
  return r;
}

}  // namespace pb
