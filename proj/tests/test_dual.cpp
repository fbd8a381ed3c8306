#include <doctest.h>

#include <random>

#include "pb/construct.hpp"
#include "pb/dual.hpp"

using namespace pb;

namespace {

// (4,2) MDS base over GF(3): extended RS (no n <= q Vandermonde exists).
BaseCode mds_4_2_q3() {
  FieldCtx ctx(3);
  return BaseCode::from_generator(
      GfMatrix::from_ints({{1, 0, 1, 1}, {0, 1, 1, 2}}, ctx));
}

// (5,3) full-rank base over GF(3) with pairwise-independent columns
// (no (5,3) MDS code exists over GF(3)).
BaseCode base_5_3_q3() {
  FieldCtx ctx(3);
  return BaseCode::from_generator(GfMatrix::from_ints(
      {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 1}, {0, 0, 1, 1, 2}}, ctx));
}

GfMatrix random_matrix(std::size_t r, std::size_t c, FieldCtx ctx,
                       std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, ctx.q() - 1);
  GfMatrix m(r, c, ctx);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Fp(dist(rng), ctx);
  return m;
}

}  // namespace

TEST_CASE("fig3 repair matrices are dual codewords") {
  auto [code, schemes] = fig3_fixture();
  for (const auto& [node, scheme] : schemes)
    for (const GfMatrix& w : scheme.matrices) {
      DualWitness witness = in_dual(code, w);
      CHECK(witness.member);
      for (const Vec& r : witness.residuals) CHECK(vec_is_zero(r));
      CHECK(frobenius_check(code, w, 50, 17));
    }
  CHECK(in_dual(code, GfMatrix(6, 2, code.ctx())).member);
}

TEST_CASE("perturbing a member in its rightmost nonzero column breaks it") {
  auto [code, schemes] = fig3_fixture();
  FieldCtx ctx = code.ctx();
  for (const auto& [node, scheme] : schemes) {
    GfMatrix x = scheme.matrices[0];
    // rightmost nonzero column of these fixtures is the last
    std::size_t col = x.cols() - 1;
    std::size_t row = 0;
    while (x.at(row, col).is_zero()) ++row;
    x.at(row, col) += one(ctx);
    if (x.at(row, col).is_zero()) x.at(row, col) += one(ctx);
    DualWitness witness = in_dual(code, x);
    CHECK_FALSE(witness.member);
    CHECK_FALSE(frobenius_check(code, x, 50, 3));
  }
}

TEST_CASE("in_dual and frobenius_check agree on random inputs") {
  FieldCtx ctx(3);
  std::mt19937_64 rng(23);
  PiggybackCode::PiggyMap piggy;
  piggy.emplace(std::make_pair(0, 1), random_matrix(3, 5, ctx, rng));
  PiggybackCode code(base_5_3_q3(), 2, std::move(piggy), CodeKind::piggyback);
  for (int trial = 0; trial < 1000; ++trial) {
    GfMatrix x = random_matrix(5, 2, ctx, rng);
    CHECK(in_dual(code, x).member == frobenius_check(code, x, 20, trial));
  }
  // also in the membership direction: every basis element agrees
  for (const GfMatrix& d : dual_basis(code)) {
    CHECK(in_dual(code, d).member);
    CHECK(frobenius_check(code, d, 20, 99));
  }
}

TEST_CASE("dual space dimension is (n-k)t") {
  auto [fig3, schemes] = fig3_fixture();
  CHECK(dual_basis(fig3).size() == (6 - 3) * 2);
  FieldCtx q5(5);
  PiggybackCode rs52(BaseCode::rs(5, 3, q5), 2, {}, CodeKind::piggyback);
  CHECK(dual_basis(rs52).size() == 4);
}

TEST_CASE("enumerate_dual is exhaustive") {
  FieldCtx ctx(3);
  PiggybackCode::PiggyMap piggy;
  GfMatrix p(2, 4, ctx);
  p.at(0, 2) = one(ctx);
  piggy.emplace(std::make_pair(0, 1), p);
  PiggybackCode code(mds_4_2_q3(), 2, std::move(piggy), CodeKind::piggyback);
  std::vector<GfMatrix> all = enumerate_dual(code);
  CHECK(all.size() == 81);  // 3^((4-2)*2)
  for (const GfMatrix& x : all) CHECK(in_dual(code, x).member);
  // distinct elements
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      CHECK_FALSE(all[a] == all[b]);
}

TEST_CASE("enumerate_dual respects its budget") {
  FieldCtx ctx(7);
  PiggybackCode big(BaseCode::rs(10, 2, FieldCtx(11)), 8, {},
                    CodeKind::piggyback);
  CHECK_THROWS_AS(enumerate_dual(big), BudgetError);
}

TEST_CASE("rightmost nonzero column of a dual codeword has weight >= k+1") {
  // MDS bases only; this is where the bound holds
  FieldCtx q3(3), q5(5);
  PiggybackCode::PiggyMap piggy;
  GfMatrix p(2, 4, q3);
  p.at(0, 3) = one(q3);
  piggy.emplace(std::make_pair(0, 1), p);
  PiggybackCode a(mds_4_2_q3(), 2, std::move(piggy), CodeKind::piggyback);
  PiggybackCode b(BaseCode::rs(5, 3, q5), 2, {}, CodeKind::piggyback);
  for (const PiggybackCode& code : {a, b}) {
    std::size_t k = code.k();
    for (const GfMatrix& x : enumerate_dual(code)) {
      if (x.is_zero()) continue;
      std::size_t col = code.t();
      while (col-- > 0)
        if (!vec_is_zero(x.col(col))) break;
      CHECK(weight(x.col(col)) >= k + 1);
    }
  }
}

TEST_CASE("unflatten uses substripe-major ordering") {
  auto [code, schemes] = fig3_fixture();
  FieldCtx ctx = code.ctx();
  Vec flat(12, zero(ctx));
  flat[2] = Fp(5, ctx);       // substripe 0, node 2
  flat[6 + 4] = Fp(3, ctx);   // substripe 1, node 4
  GfMatrix x = unflatten_dual(code, flat);
  CHECK(x.at(2, 0) == Fp(5, ctx));
  CHECK(x.at(4, 1) == Fp(3, ctx));
}
