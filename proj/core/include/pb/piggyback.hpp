#ifndef PB_PIGGYBACK_HPP
#define PB_PIGGYBACK_HPP

#include <map>
#include <utility>

#include "pb/base_code.hpp"

namespace pb {

enum class CodeKind { piggyback, lineback };

/// Message of t chunks a_0..a_{t-1}, each a length-k row vector.
struct Message {
  std::vector<Vec> chunks;
  std::size_t t() const { return chunks.size(); }
  bool operator==(const Message&) const = default;
};

/// n x t codeword matrix; node i stores row i.
struct Codeword {
  GfMatrix mat;
  bool operator==(const Codeword&) const = default;
};

/// Array code built from a scalar base code F plus k x n matrices
/// P(i,j) that add linear functions of earlier message chunks onto
/// substripe j. A lineback code only targets the last substripe.
class PiggybackCode {
 public:
  using PiggyMap = std::map<std::pair<std::size_t, std::size_t>, GfMatrix>;

  PiggybackCode(BaseCode base, std::size_t t, PiggyMap piggy, CodeKind kind);

  const BaseCode& base() const { return base_; }
  std::size_t n() const { return base_.n(); }
  std::size_t k() const { return base_.k(); }
  std::size_t t() const { return t_; }
  FieldCtx ctx() const { return base_.ctx(); }
  CodeKind kind() const { return kind_; }
  const PiggyMap& piggy() const { return piggy_; }

  /// P(i,j) for 0 <= i < j <= t-1; a zero matrix if never set.
  GfMatrix piggy_at(std::size_t i, std::size_t j) const;

  bool operator==(const PiggybackCode&) const = default;

 private:
  BaseCode base_;
  std::size_t t_;
  PiggyMap piggy_;
  CodeKind kind_;
};

Codeword encode(const PiggybackCode& code, const Message& msg);

/// Recovers the message from node rows. Accepts k or more nodes; with
/// more than k the extra rows are consistency-checked and
/// InconsistentRowsError is thrown on mismatch. (With exactly k nodes
/// the restriction map is a bijection, so every input decodes.)
Message decode_from_nodes(const PiggybackCode& code,
                          const std::vector<std::size_t>& nodes,
                          const std::vector<Vec>& rows);

/// Equivalent code (same codeword set) whose encoding is systematic:
/// substripe i restricted to nodes 0..k-1 equals chunk a_i.
PiggybackCode remap_systematic(const PiggybackCode& code);

Message zero_message(const PiggybackCode& code);
Message random_message(const PiggybackCode& code, std::uint64_t seed);

}  // namespace pb

#endif
