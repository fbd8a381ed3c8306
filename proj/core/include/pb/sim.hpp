#ifndef PB_SIM_HPP
#define PB_SIM_HPP

#include <cstdint>

#include "pb/repair.hpp"

namespace pb {

/// Desk-scale cluster: n virtual nodes each storing one row of every
/// encoded stripe, with per-node downloaded-symbol meters.
struct ClusterState {
  explicit ClusterState(PiggybackCode c);

  PiggybackCode code;
  std::vector<Codeword> stripes;
  std::vector<std::size_t> pads;  // padding bytes recorded per stripe
  std::vector<bool> alive;
  std::vector<std::size_t> meters;  // symbols served by each node
};

struct RepairReport {
  std::size_t failed = 0;
  std::vector<std::size_t> per_stripe;
  std::size_t total = 0;
  std::size_t baseline = 0;  // naive decode-from-k: kt symbols per stripe
  double savings = 0.0;
};

/// Symbols needed to hold one byte: the least s with q^s >= 256.
std::size_t symbols_per_byte(FieldCtx ctx);

/// Whole bytes representable in one stripe of kt symbols.
std::size_t bytes_per_stripe(const PiggybackCode& code);

/// Packs the payload into base-q digits, encodes it kt symbols at a
/// time (zero-padding the tail and recording the pad), and stores the
/// stripes. Returns the number of stripes added.
std::size_t ingest(ClusterState& cluster,
                   const std::vector<std::uint8_t>& payload);

/// Inverse of ingest over all stored stripes, dropping recorded padding.
std::vector<std::uint8_t> read_back(const ClusterState& cluster);

/// Fails one node, repairs every stripe through the node's scheme,
/// advances helper meters by the exact query counts, restores the node,
/// and reports the download total against the naive kt-per-stripe
/// baseline.
RepairReport fail_and_repair(
    ClusterState& cluster, std::size_t failed,
    const std::map<std::size_t, RepairScheme>& schemes);

}  // namespace pb

#endif
