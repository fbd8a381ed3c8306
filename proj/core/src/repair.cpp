#include "pb/repair.hpp"

#include <algorithm>
#include <string>

namespace pb {

namespace {

void check_shapes(const PiggybackCode& code, const RepairScheme& scheme) {
  std::size_t n = code.n(), t = code.t();
  if (scheme.failed >= n) throw ParameterError("failed node out of range");
  if (scheme.matrices.size() != t)
    throw DimensionError("scheme needs exactly t repair matrices");
  for (const GfMatrix& w : scheme.matrices)
    if (w.rows() != n || w.cols() != t)
      throw DimensionError("repair matrix must be n x t");
  for (std::size_t i : scheme.repair_set) {
    if (i >= n) throw ParameterError("repair-set node out of range");
    if (i == scheme.failed)
      throw ParameterError("failed node cannot be in its own repair set");
  }
}

// Rows {W^(j)_i | j} stacked as a t x t matrix.
GfMatrix node_rows(const RepairScheme& scheme, std::size_t node,
                   FieldCtx ctx) {
  std::size_t t = scheme.matrices.size();
  GfMatrix m(t, t, ctx);
  for (std::size_t j = 0; j < t; ++j)
    m.set_row(j, scheme.matrices[j].row(node));
  return m;
}

std::vector<Vec> nonzero_rref_rows(const GfMatrix& m) {
  GfMatrix r = rref(m);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    Vec v = r.row(i);
    if (!vec_is_zero(v)) rows.push_back(std::move(v));
  }
  return rows;
}

}  // namespace

std::vector<std::vector<Vec>> row_sets(const RepairScheme& scheme,
                                       std::size_t n) {
  std::vector<std::vector<Vec>> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const GfMatrix& w : scheme.matrices) out[i].push_back(w.row(i));
  return out;
}

QueryPlan verify_scheme(const PiggybackCode& code,
                        const RepairScheme& scheme) {
  check_shapes(code, scheme);
  std::size_t n = code.n(), t = code.t();

  for (std::size_t j = 0; j < t; ++j) {
    DualWitness w = in_dual(code, scheme.matrices[j]);
    if (!w.member) {
      std::size_t sub = 0, row = 0;
      for (std::size_t i = 0; i < w.residuals.size(); ++i)
        for (std::size_t r = 0; r < w.residuals[i].size(); ++r)
          if (!w.residuals[i][r].is_zero()) {
            sub = i;
            row = r;
            goto located;
          }
    located:
      throw VerifyError("not-dual",
                        "matrix " + std::to_string(j) +
                            " violates the constraint at (row=" +
                            std::to_string(row) + ",col=" + std::to_string(j) +
                            ",substripe=" + std::to_string(sub) + ")");
    }
  }

  std::vector<bool> allowed(n, false);
  allowed[scheme.failed] = true;
  for (std::size_t i : scheme.repair_set) allowed[i] = true;
  for (std::size_t j = 0; j < t; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!allowed[i] && !vec_is_zero(scheme.matrices[j].row(i)))
        throw VerifyError("support-violation",
                          "matrix " + std::to_string(j) + " nonzero on row " +
                              std::to_string(i) +
                              " outside the repair set and failed node");

  if (rank(node_rows(scheme, scheme.failed, code.ctx())) != t)
    throw VerifyError("rank-deficient-at-i*",
                      "failed-node rows do not have full rank t");

  QueryPlan plan;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == scheme.failed) continue;
    std::vector<Vec> basis = nonzero_rref_rows(node_rows(scheme, i, code.ctx()));
    if (basis.empty()) continue;
    plan.bandwidth += basis.size();
    plan.queries.emplace(i, std::move(basis));
  }
  return plan;
}

Vec execute_repair(const PiggybackCode& code, const RepairScheme& scheme,
                   const Codeword& cw) {
  QueryPlan plan = verify_scheme(code, scheme);
  std::size_t t = code.t();
  if (cw.mat.rows() != code.n() || cw.mat.cols() != t)
    throw DimensionError("codeword must be n x t");

  // Downloads: one symbol q . c_{i,.} per query vector.
  std::map<std::size_t, Vec> responses;
  for (const auto& [node, queries] : plan.queries) {
    Vec r;
    for (const Vec& q : queries) r.push_back(dot(q, cw.mat.row(node)));
    responses.emplace(node, std::move(r));
  }

  // For each j: W^(j)_{i*} . c_{i*} = - sum_{i != i*} W^(j)_i . c_i,
  // where each summand is a combination of that node's responses.
  Vec rhs(t, zero(code.ctx()));
  for (std::size_t j = 0; j < t; ++j) {
    Fp acc = zero(code.ctx());
    for (const auto& [node, queries] : plan.queries) {
      Vec row = scheme.matrices[j].row(node);
      if (vec_is_zero(row)) continue;
      // express row in the query basis: coeffs with Q^T coeffs = row
      GfMatrix qt(t, queries.size(), code.ctx());
      for (std::size_t c = 0; c < queries.size(); ++c)
        qt.set_col(c, queries[c]);
      std::optional<Vec> coeffs = solve(qt, row);
      if (!coeffs)
        throw Error("internal: node row not in its own query span");
      for (std::size_t c = 0; c < queries.size(); ++c)
        acc += (*coeffs)[c] * responses.at(node)[c];
    }
    rhs[j] = -acc;
  }

  GfMatrix m = node_rows(scheme, scheme.failed, code.ctx());
  std::optional<Vec> x = solve(m, rhs);
  if (!x) throw Error("internal: failed-node system unsolvable");
  return *x;
}

RepairScheme scale_matrix(const RepairScheme& scheme, std::size_t j,
                          Fp kappa) {
  if (j >= scheme.matrices.size())
    throw ParameterError("matrix index out of range");
  if (kappa.is_zero())
    throw ParameterError("scaling a repair matrix by zero is not allowed");
  RepairScheme out = scheme;
  out.matrices[j] = out.matrices[j].scaled(kappa);
  return out;
}

RepairScheme add_matrix(const RepairScheme& scheme, std::size_t j,
                        std::size_t l, Fp kappa) {
  if (j >= scheme.matrices.size() || l >= scheme.matrices.size())
    throw ParameterError("matrix index out of range");
  if (j == l) throw ParameterError("source and target matrix must differ");
  RepairScheme out = scheme;
  out.matrices[l] = out.matrices[l] + out.matrices[j].scaled(kappa);
  return out;
}

RepairScheme add_last_column(const PiggybackCode& code,
                             const RepairScheme& scheme,
                             std::size_t target_col, Fp kappa) {
  std::size_t t = code.t();
  if (target_col >= t) throw ParameterError("column index out of range");
  if (code.kind() == CodeKind::piggyback && target_col != 0)
    throw VerifyError("illegal-column",
                      "piggybacking only permits adding the last column to "
                      "column 0");
  if (target_col == t - 1)
    throw VerifyError("illegal-column",
                      "cannot add the last column onto itself");
  RepairScheme out = scheme;
  for (GfMatrix& w : out.matrices) {
    Vec last = w.col(t - 1);
    w.set_col(target_col, vec_add(w.col(target_col), vec_scaled(last, kappa)));
  }
  return out;
}

std::pair<RepairScheme, StandardFormInfo> to_standard_form(
    const PiggybackCode& code, const RepairScheme& scheme) {
  QueryPlan plan = verify_scheme(code, scheme);
  std::size_t k = code.k(), t = code.t();
  std::size_t perfect = k + t - 1;
  if (plan.bandwidth != perfect)
    throw VerifyError("not-perfect-bandwidth",
                      "standard form requires bandwidth k+t-1, got " +
                          std::to_string(plan.bandwidth));

  std::vector<std::size_t> s;
  for (const auto& [node, queries] : plan.queries) s.push_back(node);
  std::sort(s.begin(), s.end());
  if (s.size() != perfect)
    throw VerifyError("not-perfect-bandwidth",
                      "perfect scheme must query exactly k+t-1 nodes");

  StandardFormInfo info;
  info.shared_rows.assign(s.begin(), s.begin() + (k - 1));
  std::vector<std::size_t> pool(s.begin() + (k - 1), s.end());

  RepairScheme out = scheme;
  for (std::size_t j = 0; j < t; ++j) {
    // r_j: smallest unclaimed helper row still nonzero in W^(j)
    std::size_t rj = code.n();
    for (std::size_t cand : pool)
      if (!vec_is_zero(out.matrices[j].row(cand))) {
        rj = cand;
        break;
      }
    if (rj == code.n())
      throw Error("internal: no eligible exclusive row for matrix " +
                  std::to_string(j));
    pool.erase(std::find(pool.begin(), pool.end(), rj));
    info.exclusive_rows.push_back(rj);
    // zero out row r_j in every other matrix (row has dimension 1)
    Vec base = out.matrices[j].row(rj);
    std::size_t piv = 0;
    while (base[piv].is_zero()) ++piv;
    for (std::size_t l = 0; l < t; ++l) {
      if (l == j) continue;
      Fp e = out.matrices[l].at(rj, piv);
      if (e.is_zero()) continue;
      out.matrices[l] =
          out.matrices[l] + out.matrices[j].scaled(-(e / base[piv]));
    }
  }
  return {out, info};
}

std::vector<Fp> t2_row_scalars(const PiggybackCode& code,
                               const RepairScheme& scheme) {
  QueryPlan plan = verify_scheme(code, scheme);
  std::size_t t = code.t(), k = code.k();
  if (t != 2) throw ParameterError("row scalars are defined for t=2 only");
  if (plan.bandwidth != k + 1)
    throw VerifyError("not-perfect-bandwidth",
                      "row scalars require a perfect t=2 scheme");

  // Normalize failed rows to [1 0], [0 1] by an invertible combination.
  GfMatrix m = node_rows(scheme, scheme.failed, code.ctx());
  // transform A with A m = I, via m^T A^T = I column by column
  GfMatrix mt = transpose(m);
  GfMatrix a(t, t, code.ctx());
  for (std::size_t j = 0; j < t; ++j) {
    Vec e(t, zero(code.ctx()));
    e[j] = one(code.ctx());
    std::optional<Vec> col = solve(mt, e);
    if (!col) throw Error("internal: failed-node rows not invertible");
    for (std::size_t i = 0; i < t; ++i) a.at(j, i) = (*col)[i];
  }
  std::vector<GfMatrix> norm;
  for (std::size_t j = 0; j < t; ++j) {
    GfMatrix w(code.n(), t, code.ctx());
    for (std::size_t l = 0; l < t; ++l)
      w = w + scheme.matrices[l].scaled(a.at(j, l));
    norm.push_back(std::move(w));
  }

  std::vector<Fp> kappas;
  for (const auto& [node, queries] : plan.queries) {
    Vec w0 = norm[0].row(node);
    Vec w1 = norm[1].row(node);
    if (vec_is_zero(w0))
      throw Error("perfect t=2 scheme has a zero W^(0) helper row");
    std::size_t piv = 0;
    while (w0[piv].is_zero()) ++piv;
    Fp kappa = w1[piv] / w0[piv];
    if (w1 != vec_scaled(w0, kappa))
      throw Error("helper row is not a scalar multiple across matrices");
    kappas.push_back(kappa);
  }
  return kappas;
}

}  // namespace pb
