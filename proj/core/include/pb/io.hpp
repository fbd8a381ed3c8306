#ifndef PB_IO_HPP
#define PB_IO_HPP

#include <string>

#include "pb/sim.hpp"

namespace pb {

/// JSON code document: {q, n, k, t, kind, F, piggy: [{i, j, matrix}]}.
/// Integers are canonical residues; matrices are row-major arrays.
/// Serialization is deterministic (fixed key order, 2-space indent).
std::string code_to_json(const PiggybackCode& code);
PiggybackCode code_from_json(const std::string& text);

/// JSON scheme document: {failed, repair_set, matrices}. The field
/// context comes from the accompanying code.
std::string scheme_to_json(const RepairScheme& scheme);
RepairScheme scheme_from_json(const std::string& text, FieldCtx ctx);

std::string report_to_text(const RepairReport& report);
std::string report_to_json(const RepairReport& report);

}  // namespace pb

#endif
