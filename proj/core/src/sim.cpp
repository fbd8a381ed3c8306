#include "pb/sim.hpp"

#include <algorithm>

namespace pb {

ClusterState::ClusterState(PiggybackCode c)
    : code(std::move(c)),
      alive(code.n(), true),
      meters(code.n(), 0) {}

std::size_t symbols_per_byte(FieldCtx ctx) {
  std::size_t s = 0;
  std::uint64_t reach = 1;
  while (reach < 256) {
    reach *= ctx.q();
    ++s;
  }
  return s;
}

std::size_t bytes_per_stripe(const PiggybackCode& code) {
  return (code.k() * code.t()) / symbols_per_byte(code.ctx());
}

std::size_t ingest(ClusterState& cluster,
                   const std::vector<std::uint8_t>& payload) {
  const PiggybackCode& code = cluster.code;
  FieldCtx ctx = code.ctx();
  std::size_t k = code.k(), t = code.t();
  std::size_t spb = symbols_per_byte(ctx);
  std::size_t bps = bytes_per_stripe(code);
  if (bps == 0)
    throw ParameterError("stripe of kt symbols cannot hold a whole byte");

  std::size_t added = 0;
  for (std::size_t off = 0; off < payload.size(); off += bps) {
    std::size_t take = std::min(bps, payload.size() - off);
    // base-q digits, most significant first, spb per byte
    Vec symbols;
    symbols.reserve(k * t);
    for (std::size_t b = 0; b < bps; ++b) {
      std::uint32_t v = b < take ? payload[off + b] : 0;
      std::vector<std::uint32_t> digits(spb, 0);
      for (std::size_t d = spb; d-- > 0;) {
        digits[d] = v % ctx.q();
        v /= ctx.q();
      }
      for (std::uint32_t d : digits) symbols.push_back(Fp(d, ctx));
    }
    symbols.resize(k * t, zero(ctx));

    Message msg;
    for (std::size_t i = 0; i < t; ++i)
      msg.chunks.emplace_back(symbols.begin() + i * k,
                              symbols.begin() + (i + 1) * k);
    cluster.stripes.push_back(encode(code, msg));
    cluster.pads.push_back(bps - take);
    ++added;
  }
  return added;
}

std::vector<std::uint8_t> read_back(const ClusterState& cluster) {
  const PiggybackCode& code = cluster.code;
  FieldCtx ctx = code.ctx();
  std::size_t k = code.k(), t = code.t();
  std::size_t spb = symbols_per_byte(ctx);
  std::size_t bps = bytes_per_stripe(code);

  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < k; ++i) nodes.push_back(i);

  std::vector<std::uint8_t> out;
  for (std::size_t s = 0; s < cluster.stripes.size(); ++s) {
    std::vector<Vec> rows;
    for (std::size_t i : nodes) rows.push_back(cluster.stripes[s].mat.row(i));
    Message msg = decode_from_nodes(code, nodes, rows);
    Vec symbols;
    for (const Vec& chunk : msg.chunks)
      symbols.insert(symbols.end(), chunk.begin(), chunk.end());
    std::size_t keep = bps - cluster.pads[s];
    for (std::size_t b = 0; b < keep; ++b) {
      std::uint32_t v = 0;
      for (std::size_t d = 0; d < spb; ++d)
        v = v * ctx.q() + symbols[b * spb + d].value();
      out.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return out;
}

RepairReport fail_and_repair(
    ClusterState& cluster, std::size_t failed,
    const std::map<std::size_t, RepairScheme>& schemes) {
  const PiggybackCode& code = cluster.code;
  std::size_t t = code.t(), k = code.k();
  if (failed >= code.n()) throw ParameterError("failed node out of range");
  if (!cluster.alive[failed]) throw ParameterError("node already failed");
  if (std::find(cluster.alive.begin(), cluster.alive.end(), false) !=
      cluster.alive.end())
    throw ParameterError("another node is down; single-failure model");
  auto it = schemes.find(failed);
  if (it == schemes.end())
    throw ParameterError("no-scheme-for-node: " + std::to_string(failed));
  QueryPlan plan = verify_scheme(code, it->second);

  cluster.alive[failed] = false;
  RepairReport report;
  report.failed = failed;
  for (Codeword& stripe : cluster.stripes) {
    Vec before = stripe.mat.row(failed);
    // erase, then rebuild from helper downloads only
    stripe.mat.set_row(failed, Vec(t, zero(code.ctx())));
    Vec repaired = execute_repair(code, it->second, stripe);
    for (const auto& [node, queries] : plan.queries)
      cluster.meters[node] += queries.size();
    if (repaired != before)
      throw Error("internal: repaired row differs from original");
    stripe.mat.set_row(failed, repaired);
    report.per_stripe.push_back(plan.bandwidth);
    report.total += plan.bandwidth;
  }
  cluster.alive[failed] = true;

  report.baseline = k * t * cluster.stripes.size();
  report.savings =
      report.baseline == 0
          ? 0.0
          : 1.0 - static_cast<double>(report.total) /
                      static_cast<double>(report.baseline);
  return report;
}

}  // namespace pb
