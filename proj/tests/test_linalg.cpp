#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "pb/base_code.hpp"
#include "pb/matrix.hpp"

using namespace pb;

namespace {

GfMatrix fig3_f(FieldCtx ctx) {
  return GfMatrix::from_ints(
      {{1, 0, 0, 1, 3, 6}, {0, 1, 0, 4, 6, 6}, {0, 0, 1, 3, 6, 3}}, ctx);
}

GfMatrix random_matrix(std::size_t r, std::size_t c, FieldCtx ctx,
                       std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, ctx.q() - 1);
  GfMatrix m(r, c, ctx);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Fp(dist(rng), ctx);
  return m;
}

// Ground-truth rank: count the vectors spanned by the rows.
std::size_t rank_by_span_enumeration(const GfMatrix& a) {
  std::uint32_t q = a.ctx().q();
  std::set<std::vector<std::uint32_t>> span;
  std::vector<std::uint32_t> coeff(a.rows(), 0);
  while (true) {
    Vec v(a.cols(), zero(a.ctx()));
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (coeff[r] != 0)
        v = vec_add(v, vec_scaled(a.row(r), Fp(coeff[r], a.ctx())));
    std::vector<std::uint32_t> raw;
    for (Fp x : v) raw.push_back(x.value());
    span.insert(raw);
    std::size_t pos = coeff.size();
    bool wrapped = true;
    while (pos-- > 0) {
      if (++coeff[pos] < q) {
        wrapped = false;
        break;
      }
      coeff[pos] = 0;
    }
    if (wrapped) break;
  }
  std::size_t r = 0;
  while ((std::size_t)std::pow((double)q, (double)r) < span.size()) ++r;
  return r;
}

}  // namespace

TEST_CASE("mat_mul basics") {
  FieldCtx ctx(7);
  GfMatrix f = fig3_f(ctx);
  Vec x = {Fp(1, ctx), Fp(6, ctx), Fp(0, ctx), Fp(3, ctx), Fp(0, ctx),
           Fp(4, ctx)};
  CHECK(vec_is_zero(mat_vec(f, x)));

  std::mt19937_64 rng(1);
  GfMatrix a = random_matrix(3, 4, ctx, rng);
  CHECK(mat_mul(GfMatrix::identity(3, ctx), a) == a);
  CHECK(mat_mul(GfMatrix(2, 3, ctx), a).is_zero());
  CHECK_THROWS_AS(mat_mul(a, a), DimensionError);
}

TEST_CASE("rank") {
  FieldCtx ctx(7);
  CHECK(rank(GfMatrix::from_ints({{4, 1}, {2, 1}}, ctx)) == 2);
  CHECK(rank(GfMatrix(3, 3, ctx)) == 0);
  CHECK(rank(GfMatrix::identity(5, ctx)) == 5);

  FieldCtx q3(3);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    GfMatrix a = random_matrix(4, 4, q3, rng);
    CHECK(rank(a) == rank_by_span_enumeration(a));
  }
}

TEST_CASE("rank(A) == rank(A^T) on random matrices") {
  std::mt19937_64 rng(11);
  FieldCtx ctx(5);
  for (int trial = 0; trial < 50; ++trial) {
    GfMatrix a = random_matrix(3, 6, ctx, rng);
    CHECK(rank(a) == rank(transpose(a)));
  }
}

TEST_CASE("solve") {
  FieldCtx ctx(7);
  Vec b = {Fp(3, ctx), Fp(1, ctx), Fp(6, ctx)};
  auto x = solve(GfMatrix::identity(3, ctx), b);
  REQUIRE(x);
  CHECK(*x == b);

  // any 3x3 minor of an MDS generator is invertible
  GfMatrix minor = fig3_f(ctx).select_cols({0, 3, 4});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> dist(0, 6);
  for (int trial = 0; trial < 20; ++trial) {
    Vec rhs = {Fp(dist(rng), ctx), Fp(dist(rng), ctx), Fp(dist(rng), ctx)};
    auto sol = solve(minor, rhs);
    REQUIRE(sol);
    CHECK(mat_vec(minor, *sol) == rhs);
  }

  // inconsistent overdetermined system
  GfMatrix tall = GfMatrix::from_ints({{1, 0}, {0, 1}, {1, 1}}, ctx);
  Vec bad = {Fp(1, ctx), Fp(1, ctx), Fp(0, ctx)};
  CHECK_FALSE(solve(tall, bad));
  CHECK_THROWS_AS(solve(tall, Vec(4, zero(ctx))), DimensionError);
}

TEST_CASE("solve reproduces b whenever it returns") {
  std::mt19937_64 rng(5);
  FieldCtx ctx(5);
  for (int trial = 0; trial < 100; ++trial) {
    GfMatrix a = random_matrix(3, 5, ctx, rng);
    Vec b = random_matrix(3, 1, ctx, rng).col(0);
    auto x = solve(a, b);
    if (x) CHECK(mat_vec(a, *x) == b);
  }
}

TEST_CASE("kernel_basis") {
  FieldCtx ctx(7);
  GfMatrix f = fig3_f(ctx);
  std::vector<Vec> ker = kernel_basis(f);
  CHECK(ker.size() == 3);
  for (const Vec& v : ker) CHECK(vec_is_zero(mat_vec(f, v)));
  GfMatrix stacked = stack_rows(ker, ctx, 6);
  CHECK(rank(stacked) == ker.size());

  CHECK(kernel_basis(GfMatrix::identity(4, ctx)).empty());
}

TEST_CASE("MDS generator minors all have full rank") {
  FieldCtx ctx(7);
  BaseCode rs = BaseCode::rs(6, 3, ctx);
  for (const auto& cols : subsets(6, 3))
    CHECK(rank(rs.generator().select_cols(cols)) == 3);
}

TEST_CASE("rref is deterministic and idempotent") {
  std::mt19937_64 rng(13);
  FieldCtx ctx(3);
  for (int trial = 0; trial < 30; ++trial) {
    GfMatrix a = random_matrix(4, 6, ctx, rng);
    GfMatrix r = rref(a);
    CHECK(rref(r) == r);
    CHECK(rank(r) == rank(a));
  }
}

TEST_CASE("same_span") {
  FieldCtx ctx(7);
  Vec a = {Fp(1, ctx), Fp(2, ctx)};
  Vec b = {Fp(2, ctx), Fp(4, ctx)};
  Vec c = {Fp(1, ctx), Fp(0, ctx)};
  CHECK(same_span({a}, {b}, ctx, 2));
  CHECK_FALSE(same_span({a}, {c}, ctx, 2));
  CHECK(same_span({a, c}, {b, c}, ctx, 2));
}

TEST_CASE("frobenius inner product") {
  FieldCtx ctx(7);
  GfMatrix a = GfMatrix::from_ints({{1, 2}, {3, 4}}, ctx);
  GfMatrix b = GfMatrix::from_ints({{5, 6}, {0, 1}}, ctx);
  // 5 + 12 + 0 + 4 = 21 = 0 mod 7
  CHECK(frobenius(a, b).is_zero());
  CHECK(frobenius(a, GfMatrix(2, 2, ctx)).is_zero());
}
