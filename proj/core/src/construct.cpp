#include "pb/construct.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

namespace pb {

namespace {

Vec vec_neg(const Vec& v) {
  Vec out;
  out.reserve(v.size());
  for (Fp x : v) out.push_back(-x);
  return out;
}

std::vector<std::size_t> support_rows(const std::vector<GfMatrix>& ms) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ms[0].rows(); ++i)
    for (const GfMatrix& m : ms)
      if (!vec_is_zero(m.row(i))) {
        out.push_back(i);
        break;
      }
  return out;
}

RepairScheme make_scheme(std::size_t failed, std::vector<GfMatrix> ms) {
  RepairScheme s;
  s.failed = failed;
  for (std::size_t i : support_rows(ms))
    if (i != failed) s.repair_set.push_back(i);
  s.matrices = std::move(ms);
  return s;
}

// Entries of x with F restricted to `cols` solving F|_cols x = rhs.
Vec solve_on_cols(const GfMatrix& f, const std::vector<std::size_t>& cols,
                  const Vec& rhs) {
  std::optional<Vec> x = solve(f.select_cols(cols), rhs);
  if (!x) throw Error("internal: restricted generator system unsolvable");
  return *x;
}

GfMatrix inverse_of(const GfMatrix& m) {
  std::size_t t = m.rows();
  GfMatrix mt = transpose(m);
  GfMatrix a(t, t, m.ctx());
  for (std::size_t j = 0; j < t; ++j) {
    Vec e(t, zero(m.ctx()));
    e[j] = one(m.ctx());
    std::optional<Vec> col = solve(mt, e);
    if (!col) throw Error("internal: matrix not invertible");
    for (std::size_t i = 0; i < t; ++i) a.at(j, i) = (*col)[i];
  }
  return a;
}

GfMatrix random_matrix(std::size_t rows, std::size_t cols, FieldCtx ctx,
                       std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, ctx.q() - 1);
  GfMatrix m(rows, cols, ctx);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Fp(dist(rng), ctx);
  return m;
}

double binom(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double out = 1.0;
  for (std::size_t i = 0; i < k; ++i)
    out = out * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return out;
}

}  // namespace

double lineback_union_bound(std::size_t n, std::size_t t, std::uint32_t q) {
  double prod = 1.0;
  for (std::size_t i = 1; i < t; ++i)
    prod *= 1.0 - std::pow(static_cast<double>(q), -static_cast<double>(i));
  return static_cast<double>(n) * binom(n - 1, t + 1) * (1.0 - prod);
}

std::pair<PiggybackCode, std::map<std::size_t, RepairScheme>> fig3_fixture() {
  FieldCtx ctx(7);
  GfMatrix f = GfMatrix::from_ints({{1, 0, 0, 1, 3, 6},
                                    {0, 1, 0, 4, 6, 6},
                                    {0, 0, 1, 3, 6, 3}},
                                   ctx);
  GfMatrix p = GfMatrix::from_ints({{0, 0, 0, 1, 0, 0},
                                    {0, 0, 0, 0, 0, 0},
                                    {0, 0, 0, 0, 1, 0}},
                                   ctx);
  PiggybackCode::PiggyMap piggy;
  piggy.emplace(std::make_pair<std::size_t, std::size_t>(0, 1), p);
  PiggybackCode code(BaseCode::from_generator(f), 2, std::move(piggy),
                     CodeKind::piggyback);

  // Two repair matrices per failed node, rows listed node by node.
  const std::vector<std::vector<std::vector<long long>>> raw = {
      // failed node 0
      {{4, 1}, {0, 6}, {0, 0}, {0, 3}, {0, 0}, {0, 4}},
      {{2, 1}, {0, 0}, {0, 2}, {0, 5}, {0, 0}, {0, 6}},
      // failed node 1
      {{1, 1}, {6, 5}, {0, 0}, {0, 2}, {6, 6}, {0, 0}},
      {{0, 0}, {6, 1}, {0, 4}, {0, 3}, {6, 6}, {0, 0}},
      // failed node 2
      {{0, 1}, {0, 0}, {2, 6}, {0, 0}, {0, 5}, {0, 2}},
      {{0, 0}, {0, 1}, {5, 5}, {0, 0}, {0, 2}, {0, 6}},
      // failed node 3
      {{0, 1}, {0, 0}, {0, 0}, {6, 4}, {0, 1}, {3, 1}},
      {{0, 0}, {3, 1}, {0, 0}, {4, 1}, {0, 1}, {5, 4}},
      // failed node 4
      {{0, 0}, {6, 1}, {0, 0}, {0, 1}, {3, 1}, {3, 4}},
      {{0, 0}, {0, 0}, {0, 1}, {0, 4}, {6, 3}, {1, 6}},
      // failed node 5
      {{2, 1}, {0, 0}, {0, 0}, {0, 4}, {2, 1}, {5, 1}},
      {{0, 0}, {0, 0}, {0, 1}, {0, 4}, {6, 3}, {1, 6}},
  };

  std::map<std::size_t, RepairScheme> schemes;
  for (std::size_t node = 0; node < 6; ++node) {
    std::vector<GfMatrix> ms = {GfMatrix::from_ints(raw[2 * node], ctx),
                                GfMatrix::from_ints(raw[2 * node + 1], ctx)};
    schemes.emplace(node, make_scheme(node, std::move(ms)));
  }
  return {std::move(code), std::move(schemes)};
}

std::pair<PiggybackCode, std::map<std::size_t, RepairScheme>> construct_k2_t2(
    const BaseCode& base) {
  std::size_t n = base.n();
  FieldCtx ctx = base.ctx();
  if (base.k() != 2) throw ParameterError("construction requires k = 2");
  if (n < 4) throw ParameterError("construction requires n >= 4");
  if (ctx.q() < 3)
    throw ParameterError("q must be at least k + 1 = 3 for perfect repair");
  if (!is_mds(base)) throw ParameterError("base code must be MDS");
  const GfMatrix& f = base.generator();

  // i: first position with a nonzero bottom generator entry.
  std::size_t pos = n;
  for (std::size_t c = 0; c < n; ++c)
    if (!f.at(1, c).is_zero()) {
      pos = c;
      break;
    }
  if (pos == n) throw ParameterError("generator has a zero row");

  GfMatrix p(2, n, ctx);
  p.at(0, pos) = one(ctx);
  PiggybackCode::PiggyMap piggy;
  piggy.emplace(std::make_pair<std::size_t, std::size_t>(0, 1), p);
  PiggybackCode code(base, 2, std::move(piggy), CodeKind::piggyback);

  std::map<std::size_t, RepairScheme> schemes;
  for (std::size_t fail = 0; fail < n; ++fail) {
    std::vector<std::size_t> others;
    for (std::size_t c = 0; c < n; ++c)
      if (c != fail && c != pos) others.push_back(c);

    GfMatrix w0(n, 2, ctx), w1(n, 2, ctx);
    if (fail != pos) {
      std::size_t i0 = others[0], i1 = others[1];
      // W^(1): column 1 supported on {fail, i0, i1}, zero column 0.
      w1.at(fail, 1) = one(ctx);
      Vec xy = solve_on_cols(f, {i0, i1}, vec_neg(f.col(fail)));
      w1.at(i0, 1) = xy[0];
      w1.at(i1, 1) = xy[1];
      // W^(0): column 0 on {fail, pos}; column 1 on {pos, i0, i1}.
      Fp u = -(f.at(1, fail) / f.at(1, pos));
      w0.at(fail, 0) = one(ctx);
      w0.at(pos, 0) = u;
      Fp xi = -(f.at(0, fail) + u * f.at(0, pos));
      w0.at(pos, 1) = xi;
      Vec uv = solve_on_cols(f, {i0, i1}, vec_scaled(f.col(pos), -xi));
      w0.at(i0, 1) = uv[0];
      w0.at(i1, 1) = uv[1];
    } else {
      std::size_t i0 = others[0], i1 = others[1], i2 = others[2];
      Vec ab = solve_on_cols(f, {i0, i1}, vec_neg(f.col(pos)));
      Fp a = ab[0], b = ab[1];
      // kappa_0 a, kappa_1 b satisfy F|_{i0,i1} . = -e_0
      Vec neg_e0 = {-one(ctx), zero(ctx)};
      Vec kab = solve_on_cols(f, {i0, i1}, neg_e0);
      Fp k0 = kab[0] / a, k1 = kab[1] / b;

      w0.at(pos, 0) = one(ctx);
      w0.at(i0, 0) = a;
      w0.at(i1, 0) = b;
      w1.at(i0, 0) = k0 * a;
      w1.at(i1, 0) = k1 * b;
      w1.at(pos, 1) = one(ctx);

      bool done = false;
      for (std::uint32_t zi = 1; zi < ctx.q() && !done; ++zi) {
        Fp z(zi, ctx);
        Vec alpha_beta =
            solve_on_cols(f, {i1, i2}, vec_scaled(f.col(i0), -z));
        Vec rhs = vec_neg(vec_add(f.col(pos), vec_scaled(f.col(i0), k0 * z)));
        Vec delta_eps = solve_on_cols(f, {i1, i2}, rhs);
        if (delta_eps[0] != k1 * alpha_beta[0]) continue;
        w0.at(i0, 1) = z;
        w0.at(i1, 1) = alpha_beta[0];
        w0.at(i2, 1) = alpha_beta[1];
        w1.at(i0, 1) = k0 * z;
        w1.at(i1, 1) = delta_eps[0];
        w1.at(i2, 1) = delta_eps[1];
        done = true;
      }
      if (!done)
        throw Error("internal: no admissible free entry for own-position case");
    }

    RepairScheme scheme = make_scheme(fail, {std::move(w0), std::move(w1)});
    QueryPlan plan = verify_scheme(code, scheme);
    if (plan.bandwidth != 3)
      throw Error("internal: constructed scheme is not bandwidth 3");
    schemes.emplace(fail, std::move(scheme));
  }
  return {std::move(code), std::move(schemes)};
}

LinebackResult construct_k2_lineback(const BaseCode& base, std::size_t t,
                                     const SearchBudget& budget) {
  std::size_t n = base.n();
  FieldCtx ctx = base.ctx();
  if (base.k() != 2) throw ParameterError("construction requires k = 2");
  if (t < 2 || t > n - 2)
    throw ParameterError("construction requires 2 <= t <= n - 2");
  if (!is_mds(base)) throw ParameterError("base code must be MDS");
  const GfMatrix& f = base.generator();

  LinebackResult result;
  result.union_bound = lineback_union_bound(n, t, ctx.q());
  std::vector<std::vector<std::size_t>> all_subsets = subsets(n, t + 1);
  // pairs (i*, S) with i* outside S
  result.pair_count = 0;
  for (std::size_t fail = 0; fail < n; ++fail)
    for (const auto& s : all_subsets)
      if (std::find(s.begin(), s.end(), fail) == s.end()) ++result.pair_count;

  std::mt19937_64 rng(budget.seed);
  std::size_t max_draws = budget.max_candidates == 0 ? 1 : budget.max_candidates;

  for (std::size_t draw = 0; draw < max_draws; ++draw) {
    ++result.draws;
    PiggybackCode::PiggyMap piggy;
    for (std::size_t i = 0; i + 1 < t; ++i)
      piggy.emplace(std::make_pair(i, t - 1), random_matrix(2, n, ctx, rng));
    PiggybackCode code(base, t, std::move(piggy), CodeKind::lineback);

    std::size_t covered = 0;
    bool all_ok = true;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, RepairScheme>
        schemes;
    for (std::size_t fail = 0; fail < n && all_ok; ++fail) {
      for (const auto& s : all_subsets) {
        if (std::find(s.begin(), s.end(), fail) != s.end()) continue;
        std::size_t rstar = s[0];
        std::vector<GfMatrix> ms;
        for (std::size_t j = 0; j < t; ++j) {
          std::size_t rj = s[j + 1];
          GfMatrix w(n, t, ctx);
          w.at(fail, t - 1) = one(ctx);
          Vec uv = solve_on_cols(f, {rj, rstar}, vec_neg(f.col(fail)));
          w.at(rj, t - 1) = uv[0];
          w.at(rstar, t - 1) = uv[1];
          Vec last = w.col(t - 1);
          for (std::size_t i = 0; i + 1 < t; ++i) {
            Vec z = vec_neg(mat_vec(code.piggy_at(i, t - 1), last));
            Vec xy = solve_on_cols(f, {fail, rj}, z);
            w.at(fail, i) = xy[0];
            w.at(rj, i) = xy[1];
          }
          ms.push_back(std::move(w));
        }
        GfMatrix at_fail(t, t, ctx);
        for (std::size_t j = 0; j < t; ++j)
          at_fail.set_row(j, ms[j].row(fail));
        if (rank(at_fail) != t) {
          all_ok = false;
          break;
        }
        RepairScheme scheme = make_scheme(fail, std::move(ms));
        QueryPlan plan = verify_scheme(code, scheme);
        if (plan.bandwidth != t + 1) {
          all_ok = false;
          break;
        }
        ++covered;
        schemes.emplace(std::make_pair(fail, s), std::move(scheme));
      }
    }
    result.best_coverage = std::max(result.best_coverage, covered);
    if (all_ok) {
      result.status = SearchStatus::found;
      result.code = std::move(code);
      result.schemes = std::move(schemes);
      return result;
    }
  }
  result.status = SearchStatus::budget;
  return result;
}

std::pair<PiggybackCode, std::map<std::size_t, RepairScheme>> reduce_substripe(
    const PiggybackCode& code,
    const std::map<std::size_t, RepairScheme>& schemes) {
  std::size_t t = code.t(), n = code.n();
  FieldCtx ctx = code.ctx();
  if (t < 3) throw ParameterError("reduction requires t >= 3");

  PiggybackCode::PiggyMap piggy;
  for (const auto& [key, mat] : code.piggy())
    if (key.first >= 1)
      piggy.emplace(std::make_pair(key.first - 1, key.second - 1), mat);
  PiggybackCode reduced(code.base(), t - 1, std::move(piggy), code.kind());

  std::map<std::size_t, RepairScheme> out;
  for (const auto& [fail, scheme] : schemes) {
    QueryPlan plan = verify_scheme(code, scheme);

    // Normalize so the failed-node rows become the identity.
    GfMatrix m(t, t, ctx);
    for (std::size_t j = 0; j < t; ++j)
      m.set_row(j, scheme.matrices[j].row(fail));
    GfMatrix a = inverse_of(m);
    std::vector<GfMatrix> v;
    for (std::size_t j = 0; j < t; ++j) {
      GfMatrix w(n, t, ctx);
      for (std::size_t l = 0; l < t; ++l)
        w = w + scheme.matrices[l].scaled(a.at(j, l));
      v.push_back(std::move(w));
    }

    // First nonzero entry of V^(0) off the failed row; cancel it from
    // the others, then discard V^(0) and substripe-0 columns.
    std::size_t fi = n, fj = t;
    for (std::size_t i = 0; i < n && fi == n; ++i) {
      if (i == fail) continue;
      for (std::size_t j = 0; j < t; ++j)
        if (!v[0].at(i, j).is_zero()) {
          fi = i;
          fj = j;
          break;
        }
    }
    if (fi == n) throw Error("internal: pivot matrix vanishes off failed row");
    for (std::size_t l = 1; l < t; ++l) {
      Fp e = v[l].at(fi, fj);
      if (!e.is_zero()) v[l] = v[l] + v[0].scaled(-(e / v[0].at(fi, fj)));
    }

    std::vector<GfMatrix> ms;
    for (std::size_t l = 1; l < t; ++l) {
      GfMatrix w(n, t - 1, ctx);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 1; j < t; ++j) w.at(i, j - 1) = v[l].at(i, j);
      ms.push_back(std::move(w));
    }
    RepairScheme red = make_scheme(fail, std::move(ms));
    QueryPlan red_plan = verify_scheme(reduced, red);
    if (red_plan.bandwidth + 1 > plan.bandwidth)
      throw Error("internal: reduction failed to save bandwidth");
    out.emplace(fail, std::move(red));
  }
  return {std::move(reduced), std::move(out)};
}

SearchOutcome exhaustive_scheme_search(const PiggybackCode& code,
                                       std::size_t failed,
                                       const std::vector<std::size_t>& s,
                                       std::size_t target_b,
                                       const SearchBudget& budget) {
  std::size_t n = code.n(), t = code.t();
  FieldCtx ctx = code.ctx();
  std::uint32_t q = ctx.q();
  if (failed >= n) throw ParameterError("failed node out of range");
  for (std::size_t i : s)
    if (i >= n || i == failed)
      throw ParameterError("repair set must avoid the failed node");

  std::vector<std::size_t> allowed = {failed};
  allowed.insert(allowed.end(), s.begin(), s.end());
  std::sort(allowed.begin(), allowed.end());

  // Dual space restricted to the allowed rows.
  GfMatrix full = dual_constraint_matrix(code);
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < t; ++j)
    for (std::size_t i : allowed) cols.push_back(j * n + i);
  std::vector<Vec> ker = kernel_basis(full.select_cols(cols));
  std::vector<GfMatrix> basis;
  for (const Vec& v : ker) {
    GfMatrix x(n, t, ctx);
    for (std::size_t c = 0; c < cols.size(); ++c)
      x.at(cols[c] % n, cols[c] / n) = v[c];
    basis.push_back(std::move(x));
  }
  std::size_t m = basis.size();

  SearchOutcome out;
  // Rows at the failed node as a linear map of basis coefficients; it
  // must be onto F^t for a full-rank scheme to exist at all.
  GfMatrix phi(t, m, ctx);
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t r = 0; r < t; ++r) phi.at(r, b) = basis[b].at(failed, r);
  if (rank(phi) != t) {
    out.status = SearchStatus::exhausted;
    return out;
  }

  // One representative per equivalence class: failed rows = identity.
  std::vector<GfMatrix> part;
  for (std::size_t j = 0; j < t; ++j) {
    Vec e(t, zero(ctx));
    e[j] = one(ctx);
    std::optional<Vec> c = solve(phi, e);
    if (!c) throw Error("internal: surjective map left unsolvable target");
    GfMatrix w(n, t, ctx);
    for (std::size_t b = 0; b < m; ++b)
      if (!(*c)[b].is_zero()) w = w + basis[b].scaled((*c)[b]);
    part.push_back(std::move(w));
  }
  std::vector<GfMatrix> kfree;
  for (const Vec& kv : kernel_basis(phi)) {
    GfMatrix w(n, t, ctx);
    for (std::size_t b = 0; b < m; ++b)
      if (!kv[b].is_zero()) w = w + basis[b].scaled(kv[b]);
    kfree.push_back(std::move(w));
  }
  std::size_t d = kfree.size();

  auto started = std::chrono::steady_clock::now();
  std::vector<std::uint32_t> coeff(d * t, 0);
  while (true) {
    if (out.candidates_tried >= budget.max_candidates) return out;
    if (out.candidates_tried % 1024 == 0) {
      std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - started;
      if (elapsed.count() > budget.time_limit_s) return out;
    }
    ++out.candidates_tried;

    std::vector<GfMatrix> ms;
    for (std::size_t j = 0; j < t; ++j) {
      GfMatrix w = part[j];
      for (std::size_t u = 0; u < d; ++u) {
        std::uint32_t c = coeff[j * d + u];
        if (c != 0) w = w + kfree[u].scaled(Fp(c, ctx));
      }
      ms.push_back(std::move(w));
    }
    std::size_t bandwidth = 0;
    for (std::size_t i : s) {
      GfMatrix rows(t, t, ctx);
      for (std::size_t j = 0; j < t; ++j) rows.set_row(j, ms[j].row(i));
      bandwidth += rank(rows);
      if (bandwidth > target_b) break;
    }
    if (bandwidth <= target_b) {
      RepairScheme scheme;
      scheme.failed = failed;
      scheme.repair_set = s;
      std::sort(scheme.repair_set.begin(), scheme.repair_set.end());
      scheme.matrices = std::move(ms);
      verify_scheme(code, scheme);
      out.status = SearchStatus::found;
      out.scheme = std::move(scheme);
      return out;
    }

    std::size_t pos = coeff.size();
    bool wrapped = true;
    while (pos-- > 0) {
      if (++coeff[pos] < q) {
        wrapped = false;
        break;
      }
      coeff[pos] = 0;
    }
    if (coeff.empty() || wrapped) break;
  }
  out.status = SearchStatus::exhausted;
  return out;
}

SearchOutcome witness_any_d_impossibility(std::size_t n, std::size_t k,
                                          std::size_t t, std::uint32_t q,
                                          std::size_t num_codes,
                                          const SearchBudget& budget) {
  FieldCtx ctx(q);
  if (k + t > n) throw ParameterError("need k + t <= n");
  BaseCode base = BaseCode::rs(n, k, ctx);
  std::mt19937_64 rng(budget.seed);
  std::size_t perfect = k + t - 1;

  SearchOutcome out;
  for (std::size_t c = 0; c < num_codes; ++c) {
    PiggybackCode::PiggyMap piggy;
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = i + 1; j < t; ++j)
        piggy.emplace(std::make_pair(i, j), random_matrix(k, n, ctx, rng));
    PiggybackCode code(base, t, std::move(piggy), CodeKind::piggyback);

    // Perfect schemes for nodes 0 and 1 whose nonzero rows are exactly
    // {0 .. k+t-1} would contradict the two-scheme obstruction.
    std::vector<RepairScheme> pair_schemes;
    bool both = true;
    for (std::size_t fail : {std::size_t{0}, std::size_t{1}}) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i <= perfect; ++i)
        if (i != fail) s.push_back(i);
      SearchBudget inner = budget;
      inner.max_candidates = budget.max_candidates > out.candidates_tried
                                 ? budget.max_candidates - out.candidates_tried
                                 : 0;
      SearchOutcome res = exhaustive_scheme_search(code, fail, s, perfect, inner);
      out.candidates_tried += res.candidates_tried;
      if (res.status == SearchStatus::budget) {
        out.status = SearchStatus::budget;
        return out;
      }
      if (res.status != SearchStatus::found) {
        both = false;
        break;
      }
      pair_schemes.push_back(std::move(*res.scheme));
    }
    if (!both) continue;
    bool full_support = true;
    for (const RepairScheme& sch : pair_schemes)
      if (support_rows(sch.matrices).size() != k + t) full_support = false;
    if (full_support) {
      out.status = SearchStatus::found;
      out.scheme = std::move(pair_schemes.front());
      return out;
    }
  }
  out.status = SearchStatus::exhausted;
  return out;
}

}  // namespace pb
