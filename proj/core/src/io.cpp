#include "pb/io.hpp"

#include <sstream>

#include <json.hpp>

namespace pb {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json matrix_to_json(const GfMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).value());
    rows.push_back(std::move(row));
  }
  return rows;
}

GfMatrix matrix_from_json(const ordered_json& j, std::size_t rows,
                          std::size_t cols, FieldCtx ctx,
                          const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw FileFormatError(where + ": expected " + std::to_string(rows) +
                          " rows");
  GfMatrix m(rows, cols, ctx);
  for (std::size_t r = 0; r < rows; ++r) {
    const ordered_json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw FileFormatError(where + " row " + std::to_string(r) +
                            ": expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!row[c].is_number_integer())
        throw FileFormatError(where + " entry (" + std::to_string(r) + "," +
                              std::to_string(c) + "): expected an integer");
      m.at(r, c) = Fp(row[c].get<long long>(), ctx);
    }
  }
  return m;
}

ordered_json parse(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw FileFormatError("document is not valid JSON");
  return j;
}

const ordered_json& field(const ordered_json& j, const std::string& name) {
  auto it = j.find(name);
  if (it == j.end()) throw FileFormatError("missing field: " + name);
  return *it;
}

std::size_t uint_field(const ordered_json& j, const std::string& name) {
  const ordered_json& f = field(j, name);
  if (!f.is_number_unsigned())
    throw FileFormatError("field " + name + ": expected a non-negative integer");
  return f.get<std::size_t>();
}

}  // namespace

std::string code_to_json(const PiggybackCode& code) {
  ordered_json j;
  j["q"] = code.ctx().q();
  j["n"] = code.n();
  j["k"] = code.k();
  j["t"] = code.t();
  j["kind"] = code.kind() == CodeKind::lineback ? "lineback" : "piggyback";
  j["F"] = matrix_to_json(code.base().generator());
  ordered_json piggy = ordered_json::array();
  for (const auto& [key, mat] : code.piggy()) {
    ordered_json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    entry["matrix"] = matrix_to_json(mat);
    piggy.push_back(std::move(entry));
  }
  j["piggy"] = std::move(piggy);
  return j.dump(2) + "\n";
}

PiggybackCode code_from_json(const std::string& text) {
  ordered_json j = parse(text);
  std::size_t q = uint_field(j, "q");
  if (q < 2 || q > 65536 || !is_prime(static_cast<std::uint32_t>(q)))
    throw FileFormatError("field q: expected a prime in [2, 65536]");
  FieldCtx ctx(static_cast<std::uint32_t>(q));
  std::size_t n = uint_field(j, "n");
  std::size_t k = uint_field(j, "k");
  std::size_t t = uint_field(j, "t");

  const ordered_json& kind_j = field(j, "kind");
  if (!kind_j.is_string())
    throw FileFormatError("field kind: expected \"piggyback\" or \"lineback\"");
  std::string kind_s = kind_j.get<std::string>();
  CodeKind kind;
  if (kind_s == "piggyback")
    kind = CodeKind::piggyback;
  else if (kind_s == "lineback")
    kind = CodeKind::lineback;
  else
    throw FileFormatError("field kind: expected \"piggyback\" or \"lineback\"");

  GfMatrix f = matrix_from_json(field(j, "F"), k, n, ctx, "F");
  PiggybackCode::PiggyMap piggy;
  const ordered_json& pj = field(j, "piggy");
  if (!pj.is_array()) throw FileFormatError("field piggy: expected an array");
  for (std::size_t e = 0; e < pj.size(); ++e) {
    const ordered_json& entry = pj[e];
    std::string where = "piggy[" + std::to_string(e) + "]";
    if (!entry.is_object()) throw FileFormatError(where + ": expected object");
    std::size_t i = uint_field(entry, "i");
    std::size_t jj = uint_field(entry, "j");
    if (!(i < jj && jj < t))
      throw FileFormatError(where + ": need 0 <= i < j <= t-1");
    if (!piggy
             .emplace(std::make_pair(i, jj),
                      matrix_from_json(field(entry, "matrix"), k, n, ctx,
                                       where + ".matrix"))
             .second)
      throw FileFormatError(where + ": duplicate (i, j)");
  }
  try {
    return PiggybackCode(BaseCode::from_generator(std::move(f)), t,
                         std::move(piggy), kind);
  } catch (const Error& e) {
    throw FileFormatError(std::string("invalid code: ") + e.what());
  }
}

std::string scheme_to_json(const RepairScheme& scheme) {
  ordered_json j;
  j["failed"] = scheme.failed;
  j["repair_set"] = scheme.repair_set;
  ordered_json ms = ordered_json::array();
  for (const GfMatrix& m : scheme.matrices) ms.push_back(matrix_to_json(m));
  j["matrices"] = std::move(ms);
  return j.dump(2) + "\n";
}

RepairScheme scheme_from_json(const std::string& text, FieldCtx ctx) {
  ordered_json j = parse(text);
  RepairScheme scheme;
  scheme.failed = uint_field(j, "failed");
  const ordered_json& rs = field(j, "repair_set");
  if (!rs.is_array())
    throw FileFormatError("field repair_set: expected an array");
  for (const ordered_json& e : rs) {
    if (!e.is_number_unsigned())
      throw FileFormatError("repair_set: expected non-negative integers");
    scheme.repair_set.push_back(e.get<std::size_t>());
  }
  const ordered_json& ms = field(j, "matrices");
  if (!ms.is_array() || ms.empty())
    throw FileFormatError("field matrices: expected a non-empty array");
  std::size_t t = ms.size();
  for (std::size_t w = 0; w < t; ++w) {
    const ordered_json& mj = ms[w];
    if (!mj.is_array() || mj.empty())
      throw FileFormatError("matrices[" + std::to_string(w) +
                            "]: expected a non-empty array of rows");
    scheme.matrices.push_back(matrix_from_json(
        mj, mj.size(), t, ctx, "matrices[" + std::to_string(w) + "]"));
  }
  return scheme;
}

std::string report_to_text(const RepairReport& report) {
  std::ostringstream out;
  out << "failed=" << report.failed << "\n";
  out << "stripes=" << report.per_stripe.size() << "\n";
  out << "total=" << report.total << "\n";
  out << "baseline=" << report.baseline << "\n";
  out << "savings=" << report.savings << "\n";
  return out.str();
}

std::string report_to_json(const RepairReport& report) {
  ordered_json j;
  j["failed"] = report.failed;
  j["per_stripe"] = report.per_stripe;
  j["total"] = report.total;
  j["baseline"] = report.baseline;
  j["savings"] = report.savings;
  return j.dump(2) + "\n";
}

}  // namespace pb
