#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "pb/construct.hpp"
#include "pb/io.hpp"
#include "pb/sim.hpp"

namespace {

// exit codes: 0 ok, 2 verification failure, 3 parse error, 4 parameter
// error, 5 budget exhausted
constexpr int kOk = 0;
constexpr int kVerifyFail = 2;
constexpr int kParseError = 3;
constexpr int kParamError = 4;
constexpr int kBudget = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pb::FileFormatError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pb::FileFormatError("cannot write file: " + path);
  out << content;
}

std::vector<std::size_t> parse_set(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw pb::ParameterError("bad node list entry: " + item);
    }
  }
  return out;
}

struct GenOpts {
  std::size_t n = 0, k = 0, t = 0;
  std::uint32_t q = 0;
  std::string kind = "piggyback";
  std::string fixture, construct, out = "code";
  std::uint64_t seed = 0;
  std::size_t retries = 10;
};

void write_schemes(const std::string& out,
                   const std::map<std::size_t, pb::RepairScheme>& schemes) {
  for (const auto& [node, scheme] : schemes) {
    std::string path = out + ".scheme" + std::to_string(node) + ".json";
    write_file(path, pb::scheme_to_json(scheme));
    std::cout << "wrote " << path << "\n";
  }
}

int cmd_gen(const GenOpts& o) {
  if (o.fixture == "fig3") {
    if ((o.n && o.n != 6) || (o.k && o.k != 3) || (o.t && o.t != 2) ||
        (o.q && o.q != 7))
      throw pb::ParameterError("fixture fig3 has n=6, k=3, t=2, q=7");
    auto [code, schemes] = pb::fig3_fixture();
    write_file(o.out + ".json", pb::code_to_json(code));
    std::cout << "wrote " << o.out << ".json\n";
    write_schemes(o.out, schemes);
    return kOk;
  }
  if (!o.fixture.empty())
    throw pb::ParameterError("unknown fixture: " + o.fixture);

  if (o.n == 0 || o.q == 0)
    throw pb::ParameterError("gen requires --n and --q");
  std::size_t k = o.k;
  if (!o.construct.empty()) {
    if (k == 0) k = 2;
    if (k != 2)
      throw pb::ParameterError("constructions require k = 2");
  }
  if (k == 0) throw pb::ParameterError("gen requires --k");
  if (o.q < k + 1)
    throw pb::ParameterError("q must be at least k + 1 = " +
                             std::to_string(k + 1) + " for perfect repair");
  pb::FieldCtx ctx(o.q);

  if (o.construct == "thm8") {
    if (o.t && o.t != 2)
      throw pb::ParameterError("this construction has t = 2");
    auto [code, schemes] = pb::construct_k2_t2(pb::BaseCode::rs(o.n, 2, ctx));
    write_file(o.out + ".json", pb::code_to_json(code));
    std::cout << "wrote " << o.out << ".json\n";
    write_schemes(o.out, schemes);
    return kOk;
  }
  if (o.construct == "thm3") {
    if (o.t == 0) throw pb::ParameterError("--t is required");
    pb::SearchBudget budget;
    budget.seed = o.seed;
    budget.max_candidates = o.retries;
    pb::LinebackResult res =
        pb::construct_k2_lineback(pb::BaseCode::rs(o.n, 2, ctx), o.t, budget);
    std::cout << "draws=" << res.draws << " union_bound=" << res.union_bound
              << " pairs=" << res.pair_count
              << " best_coverage=" << res.best_coverage << "\n";
    if (res.status != pb::SearchStatus::found) {
      std::cerr << "no covering draw within " << o.retries << " retries\n";
      return kBudget;
    }
    write_file(o.out + ".json", pb::code_to_json(*res.code));
    std::cout << "wrote " << o.out << ".json\n";
    std::size_t idx = 0;
    for (const auto& [key, scheme] : res.schemes) {
      std::string path = o.out + ".scheme" + std::to_string(idx++) + ".json";
      write_file(path, pb::scheme_to_json(scheme));
    }
    std::cout << "wrote " << idx << " scheme files\n";
    return kOk;
  }
  if (!o.construct.empty())
    throw pb::ParameterError("unknown construction: " + o.construct);

  if (o.t == 0) throw pb::ParameterError("gen requires --t");
  pb::CodeKind kind;
  if (o.kind == "piggyback")
    kind = pb::CodeKind::piggyback;
  else if (o.kind == "lineback")
    kind = pb::CodeKind::lineback;
  else
    throw pb::ParameterError("kind must be piggyback or lineback");
  pb::PiggybackCode code(pb::BaseCode::rs(o.n, k, ctx), o.t, {}, kind);
  write_file(o.out + ".json", pb::code_to_json(code));
  std::cout << "wrote " << o.out << ".json\n";
  return kOk;
}

int cmd_verify(const std::string& code_path, const std::string& scheme_path) {
  pb::PiggybackCode code = pb::code_from_json(read_file(code_path));
  pb::RepairScheme scheme =
      pb::scheme_from_json(read_file(scheme_path), code.ctx());
  try {
    pb::QueryPlan plan = pb::verify_scheme(code, scheme);
    std::cout << "bandwidth=" << plan.bandwidth << "\n";
    for (const auto& [node, queries] : plan.queries)
      std::cout << "node=" << node << " queries=" << queries.size() << "\n";
    return kOk;
  } catch (const pb::VerifyError& e) {
    std::cout << e.condition << "\n";
    std::cerr << e.what() << "\n";
    return kVerifyFail;
  }
}

int cmd_search(const std::string& code_path, std::size_t failed,
               const std::string& set, std::size_t target,
               std::size_t max_candidates, double time_limit,
               std::uint64_t seed, const std::string& out) {
  pb::PiggybackCode code = pb::code_from_json(read_file(code_path));
  pb::SearchBudget budget;
  budget.max_candidates = max_candidates;
  budget.time_limit_s = time_limit;
  budget.seed = seed;
  pb::SearchOutcome res =
      pb::exhaustive_scheme_search(code, failed, parse_set(set), target, budget);
  std::cout << "candidates=" << res.candidates_tried << "\n";
  switch (res.status) {
    case pb::SearchStatus::found:
      std::cout << "status=found\n";
      if (!out.empty()) {
        write_file(out, pb::scheme_to_json(*res.scheme));
        std::cout << "wrote " << out << "\n";
      }
      return kOk;
    case pb::SearchStatus::exhausted:
      std::cout << "status=exhausted\n";
      return kVerifyFail;
    default:
      std::cout << "status=budget\n";
      return kBudget;
  }
}

int cmd_reduce(const std::string& code_path,
               const std::vector<std::string>& scheme_paths,
               const std::string& out) {
  pb::PiggybackCode code = pb::code_from_json(read_file(code_path));
  std::map<std::size_t, pb::RepairScheme> schemes;
  for (const std::string& path : scheme_paths) {
    pb::RepairScheme s = pb::scheme_from_json(read_file(path), code.ctx());
    schemes.emplace(s.failed, std::move(s));
  }
  auto [reduced, red_schemes] = pb::reduce_substripe(code, schemes);
  write_file(out + ".json", pb::code_to_json(reduced));
  std::cout << "wrote " << out << ".json\n";
  write_schemes(out, red_schemes);
  for (const auto& [node, scheme] : red_schemes)
    std::cout << "node=" << node
              << " bandwidth=" << pb::verify_scheme(reduced, scheme).bandwidth
              << "\n";
  return kOk;
}

int cmd_simulate(const std::string& code_path, std::size_t stripes,
                 std::size_t fail,
                 const std::vector<std::string>& scheme_paths,
                 std::uint64_t seed, const std::string& out) {
  pb::PiggybackCode code = pb::code_from_json(read_file(code_path));
  std::map<std::size_t, pb::RepairScheme> schemes;
  if (!scheme_paths.empty()) {
    for (const std::string& path : scheme_paths) {
      pb::RepairScheme s = pb::scheme_from_json(read_file(path), code.ctx());
      schemes.emplace(s.failed, std::move(s));
    }
  } else {
    auto [fig3, fig3_schemes] = pb::fig3_fixture();
    if (code == fig3)
      schemes = std::move(fig3_schemes);
    else
      throw pb::ParameterError(
          "no-scheme-for-node: pass --scheme files for this code");
  }

  pb::ClusterState cluster(code);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> byte(0, 255);
  std::vector<std::uint8_t> payload(stripes * pb::bytes_per_stripe(code));
  for (std::uint8_t& b : payload) b = static_cast<std::uint8_t>(byte(rng));
  pb::ingest(cluster, payload);
  pb::RepairReport report = pb::fail_and_repair(cluster, fail, schemes);
  if (pb::read_back(cluster) != payload)
    throw pb::Error("internal: payload round-trip mismatch");
  std::cout << pb::report_to_text(report);
  if (!out.empty()) {
    write_file(out, pb::report_to_json(report));
    std::cout << "wrote " << out << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"piggybacking/linebacking array-code toolkit"};
  app.require_subcommand(1);

  GenOpts gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a code and schemes");
  gen_cmd->add_option("--n", gen.n, "code length");
  gen_cmd->add_option("--k", gen.k, "code dimension");
  gen_cmd->add_option("--t", gen.t, "substripe count");
  gen_cmd->add_option("--q", gen.q, "field size (prime)");
  gen_cmd->add_option("--kind", gen.kind, "piggyback|lineback");
  gen_cmd->add_option("--fixture", gen.fixture, "named fixture (fig3)");
  gen_cmd->add_option("--construct", gen.construct,
                      "construction (thm8|thm3)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--retries", gen.retries, "randomized retry budget");
  gen_cmd->add_option("--out", gen.out, "output path prefix");

  std::string v_code, v_scheme;
  CLI::App* verify_cmd = app.add_subcommand("verify", "verify a scheme");
  verify_cmd->add_option("--code", v_code)->required();
  verify_cmd->add_option("--scheme", v_scheme)->required();

  std::string s_code, s_set, s_out;
  std::size_t s_failed = 0, s_target = 0, s_max = 1'000'000;
  double s_time = 300.0;
  std::uint64_t s_seed = 0;
  CLI::App* search_cmd =
      app.add_subcommand("search", "exhaustive scheme search");
  search_cmd->add_option("--code", s_code)->required();
  search_cmd->add_option("--failed", s_failed)->required();
  search_cmd->add_option("--set", s_set, "repair set, comma separated")
      ->required();
  search_cmd->add_option("--target", s_target, "bandwidth target")->required();
  search_cmd->add_option("--max-candidates", s_max);
  search_cmd->add_option("--time-limit", s_time, "seconds");
  search_cmd->add_option("--seed", s_seed);
  search_cmd->add_option("--out", s_out, "scheme output path");

  std::string r_code, r_out = "reduced";
  std::vector<std::string> r_schemes;
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "drop one substripe");
  reduce_cmd->add_option("--code", r_code)->required();
  reduce_cmd->add_option("--schemes", r_schemes, "scheme files")->required();
  reduce_cmd->add_option("--out", r_out, "output path prefix");

  std::string m_code, m_out;
  std::vector<std::string> m_schemes;
  std::size_t m_stripes = 0, m_fail = 0;
  std::uint64_t m_seed = 0;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "metered failure/repair");
  sim_cmd->add_option("--code", m_code)->required();
  sim_cmd->add_option("--stripes", m_stripes)->required();
  sim_cmd->add_option("--fail", m_fail)->required();
  sim_cmd->add_option("--schemes", m_schemes, "scheme files");
  sim_cmd->add_option("--seed", m_seed);
  sim_cmd->add_option("--out", m_out, "report JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (verify_cmd->parsed()) return cmd_verify(v_code, v_scheme);
    if (search_cmd->parsed())
      return cmd_search(s_code, s_failed, s_set, s_target, s_max, s_time,
                        s_seed, s_out);
    if (reduce_cmd->parsed()) return cmd_reduce(r_code, r_schemes, r_out);
    if (sim_cmd->parsed())
      return cmd_simulate(m_code, m_stripes, m_fail, m_schemes, m_seed, m_out);
  } catch (const pb::FileFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const pb::VerifyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFail;
  } catch (const pb::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const pb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParamError;
  }
  return kOk;
}
