#include "pb/piggyback.hpp"

#include <random>
#include <string>

namespace pb {

namespace {

GfMatrix inverse(const GfMatrix& a) {
  std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionError("inverse of non-square matrix");
  GfMatrix aug(n, 2 * n, a.ctx());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = one(a.ctx());
  }
  GfMatrix r = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r.at(i, j) != Fp(i == j ? 1 : 0, a.ctx()))
        throw ParameterError("matrix is singular");
  GfMatrix inv(n, n, a.ctx());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

// First k columns of a k x n matrix.
GfMatrix prefix(const GfMatrix& m) {
  std::vector<std::size_t> cols(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) cols[i] = i;
  return m.select_cols(cols);
}

}  // namespace

PiggybackCode::PiggybackCode(BaseCode base, std::size_t t, PiggyMap piggy,
                             CodeKind kind)
    : base_(std::move(base)), t_(t), piggy_(std::move(piggy)), kind_(kind) {
  std::size_t n = base_.n(), k = base_.k();
  if (t < 2 || t > n - k)
    throw ParameterError("substripe count must satisfy 2 <= t <= n-k (t=" +
                         std::to_string(t) + ", n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + ")");
  for (const auto& [key, m] : piggy_) {
    auto [i, j] = key;
    if (!(i < j && j <= t - 1))
      throw ParameterError("piggyback index (i,j) must satisfy i < j <= t-1");
    if (m.rows() != k || m.cols() != n || m.ctx() != base_.ctx())
      throw DimensionError(
          "piggyback matrix must be k x n over the base field");
    if (kind_ == CodeKind::lineback && j != t - 1 && !m.is_zero())
      throw ParameterError(
          "lineback code must have zero piggyback matrices off the last "
          "substripe");
  }
}

GfMatrix PiggybackCode::piggy_at(std::size_t i, std::size_t j) const {
  auto it = piggy_.find({i, j});
  if (it != piggy_.end()) return it->second;
  return GfMatrix(k(), n(), ctx());
}

Codeword encode(const PiggybackCode& code, const Message& msg) {
  std::size_t n = code.n(), k = code.k(), t = code.t();
  if (msg.chunks.size() != t)
    throw DimensionError("message must have t chunks");
  for (const Vec& a : msg.chunks)
    if (a.size() != k) throw DimensionError("message chunk must have length k");
  GfMatrix cw(n, t, code.ctx());
  for (std::size_t i = 0; i < t; ++i) {
    // c_{.,i} = (a_0 P(0,i) + ... + a_{i-1} P(i-1,i) + a_i F)^T
    Vec sub = vec_mat(msg.chunks[i], code.base().generator());
    for (std::size_t j = 0; j < i; ++j)
      sub = vec_add(sub, vec_mat(msg.chunks[j], code.piggy_at(j, i)));
    cw.set_col(i, sub);
  }
  return Codeword{std::move(cw)};
}

Message decode_from_nodes(const PiggybackCode& code,
                          const std::vector<std::size_t>& nodes,
                          const std::vector<Vec>& rows) {
  std::size_t n = code.n(), k = code.k(), t = code.t();
  if (nodes.size() < k)
    throw ParameterError("need at least k node rows to decode");
  if (rows.size() != nodes.size())
    throw DimensionError("one row per node required");
  // Unknowns: the kt message symbols, chunk-major. Each provided
  // (node, substripe) pair contributes one linear equation.
  GfMatrix a(nodes.size() * t, k * t, code.ctx());
  Vec b(nodes.size() * t, zero(code.ctx()));
  for (std::size_t r = 0; r < nodes.size(); ++r) {
    std::size_t node = nodes[r];
    if (node >= n) throw ParameterError("node index out of range");
    if (rows[r].size() != t) throw DimensionError("node row must have length t");
    for (std::size_t i = 0; i < t; ++i) {
      std::size_t eq = r * t + i;
      for (std::size_t c = 0; c < k; ++c)
        a.at(eq, i * k + c) = code.base().generator().at(c, node);
      for (std::size_t j = 0; j < i; ++j) {
        GfMatrix p = code.piggy_at(j, i);
        for (std::size_t c = 0; c < k; ++c)
          a.at(eq, j * k + c) = p.at(c, node);
      }
      b[eq] = rows[r][i];
    }
  }
  std::optional<Vec> x = solve(a, b);
  if (!x) throw InconsistentRowsError("node rows match no codeword");
  Message msg;
  msg.chunks.resize(t);
  for (std::size_t i = 0; i < t; ++i)
    msg.chunks[i] = Vec(x->begin() + i * k, x->begin() + (i + 1) * k);
  return msg;
}

PiggybackCode remap_systematic(const PiggybackCode& code) {
  std::size_t k = code.k(), t = code.t();
  const GfMatrix& f = code.base().generator();
  GfMatrix rf_inv = inverse(prefix(f));

  // The encoding restricted to the first k nodes is block lower
  // triangular in the message chunks; invert it chunk by chunk.
  // m[j][i] is the k x k coefficient of new chunk b_j in old chunk a_i.
  std::vector<std::vector<GfMatrix>> m(
      t, std::vector<GfMatrix>(t, GfMatrix(k, k, code.ctx())));
  for (std::size_t i = 0; i < t; ++i) {
    m[i][i] = rf_inv;
    for (std::size_t j = 0; j < i; ++j) {
      GfMatrix acc(k, k, code.ctx());
      for (std::size_t l = j; l < i; ++l)
        acc = acc + mat_mul(m[j][l], prefix(code.piggy_at(l, i)));
      m[j][i] = acc.scaled(Fp(-1, code.ctx()));
      m[j][i] = mat_mul(m[j][i], rf_inv);
    }
  }

  GfMatrix new_f = mat_mul(rf_inv, f);
  PiggybackCode::PiggyMap new_piggy;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      GfMatrix p = mat_mul(m[j][i], f);
      for (std::size_t l = j; l < i; ++l)
        p = p + mat_mul(m[j][l], code.piggy_at(l, i));
      if (!p.is_zero()) new_piggy.emplace(std::make_pair(j, i), std::move(p));
    }
  return PiggybackCode(BaseCode::from_generator(std::move(new_f)), t,
                       std::move(new_piggy), code.kind());
}

Message zero_message(const PiggybackCode& code) {
  Message msg;
  msg.chunks.assign(code.t(), Vec(code.k(), zero(code.ctx())));
  return msg;
}

Message random_message(const PiggybackCode& code, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, code.ctx().q() - 1);
  Message msg = zero_message(code);
  for (Vec& chunk : msg.chunks)
    for (Fp& x : chunk) x = Fp(dist(rng), code.ctx());
  return msg;
}

}  // namespace pb
