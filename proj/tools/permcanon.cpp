// permcanon: command-line front end.
//
//   permcanon canon --expr 'R[-b,1,d,1] R[-c,b,a,c]'
//   permcanon canon --json request.json
//   permcanon sgs|order|member [FILE]
//   permcanon bench chain|riemann|hard --nmax N [--per-n K] [--seed S] [--out FILE]

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "permcanon/bench.hpp"

using namespace permcanon;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_all(std::cin);
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot open " + path);
  return read_all(f);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

bool looks_like_json(const std::string& s) {
  auto it = std::find_if(s.begin(), s.end(), [](unsigned char c) { return !std::isspace(c); });
  return it != s.end() && (*it == '{' || *it == '[');
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

/// "1073741824", "512M", "2G", "64k".
std::size_t parse_size(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw UsageError("bad memory limit '" + text + "'");
  }
  std::string suffix = text.substr(pos);
  unsigned long long mult = 1;
  if (suffix == "k" || suffix == "K")
    mult = 1ULL << 10;
  else if (suffix == "m" || suffix == "M")
    mult = 1ULL << 20;
  else if (suffix == "g" || suffix == "G")
    mult = 1ULL << 30;
  else if (!suffix.empty())
    throw UsageError("bad memory limit '" + text + "'");
  return static_cast<std::size_t>(v * mult);
}

struct CommonOptions {
  std::string mem_limit;
  bool dedup = false;

  CanonOptions canon() const {
    CanonOptions o;
    if (!mem_limit.empty()) o.memory_limit_bytes = parse_size(mem_limit);
    o.dedup = dedup;
    return o;
  }
};

void add_common(CLI::App* cmd, CommonOptions& c) {
  cmd->add_option("--mem-limit", c.mem_limit, "Candidate-table budget in bytes (suffix K, M or G)")
      ->envname("PERMCANON_MEM_LIMIT");
  cmd->add_flag("--dedup", c.dedup, "Drop duplicate candidates after every slot");
}

int cmd_canon(const std::string& expr, const std::string& json_path, const std::string& file,
              const std::string& config, const CommonOptions& common) {
  const auto opt = common.canon();
  if (!json_path.empty()) {
    std::cout << run_canon_request(parse_json(read_input(json_path)), opt).dump() << '\n';
    return 0;
  }
  std::string text = expr;
  if (text.empty()) text = read_input(file);
  if (blank(text)) throw UsageError("no input: give --expr, --json, a file, or text on stdin");
  if (looks_like_json(text)) {
    std::cout << run_canon_request(parse_json(text), opt).dump() << '\n';
    return 0;
  }
  const auto reg = config.empty() ? tensor::default_registry() : tensor::registry_from_json(parse_json(read_input(config)));
  std::cout << tensor::canonicalize_expression(text, reg, opt) << '\n';
  return 0;
}

Json group_input(const std::string& file) {
  const auto text = read_input(file);
  if (blank(text)) throw UsageError("no input JSON");
  return parse_json(text);
}

int cmd_sgs(const std::string& file) {
  const auto j = group_input(file);
  const auto gs = generating_set_from_json(j);
  std::vector<Point> base;
  if (j.contains("base"))
    for (int b : permcanon::detail::int_list(j["base"], "base"))
      base.push_back(permcanon::detail::to_point(b, gs.degree(), "base"));
  std::cout << to_json(schreier_sims(base, gs)).dump() << '\n';
  return 0;
}

int cmd_order(const std::string& file) {
  std::cout << order_to_json(group_from_json(group_input(file)).order()).dump() << '\n';
  return 0;
}

int cmd_member(const std::string& file) {
  const auto j = group_input(file);
  const auto g = group_from_json(j);
  const auto p = perm_from_json(permcanon::detail::require(j, "perm"));
  if (p.degree() != g.degree()) throw FormatError("perm degree differs from group degree");
  std::cout << Json{{"member", perm_member(p, g)}}.dump() << '\n';
  return 0;
}

int cmd_bench(const std::string& which, std::size_t nmax, std::size_t per_n, std::uint64_t seed, std::size_t reps,
              const std::string& out, const CommonOptions& common) {
  const auto opt = common.canon();
  std::vector<bench::BenchRecord> records;
  if (which == "chain") {
    records = bench::antisymmetric_chain_bench(nmax, reps, opt);
    if (nmax >= 5) std::cerr << "log-log slope (n >= 4): " << bench::loglog_slope(records, 4) << '\n';
  } else if (which == "riemann") {
    records = bench::random_riemann_bench(nmax, per_n, seed, opt);
  } else {
    records = bench::hard_cycle_bench(nmax, opt);
    for (std::size_t k = 1; k < records.size(); ++k)
      if (records[k].result != "resource-limit" && records[k - 1].peak > 0)
        std::cerr << "peak ratio n=" << records[k].n << "/" << records[k - 1].n << ": "
                  << static_cast<double>(records[k].peak) / static_cast<double>(records[k - 1].peak) << '\n';
  }
  if (out.empty() || out == "-") {
    bench::write_csv(std::cout, records);
  } else {
    std::ofstream f(out);
    if (!f) throw InvalidArgument("cannot write " + out);
    bench::write_csv(f, records);
    std::cerr << "wrote " << records.size() << " records to " << out << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index canonicalization with signed permutation groups"};
  app.require_subcommand(1);

  CommonOptions canon_common, bench_common;
  std::string expr, json_path, config, canon_file;
  auto* canon = app.add_subcommand("canon", "Canonicalize a tensor expression or a JSON request");
  canon->add_option("--expr", expr, "Expression text, e.g. 'R[-b,1,d,1] R[-c,b,a,c]'");
  canon->add_option("--json", json_path, "JSON request file ('-' for stdin)");
  canon->add_option("--config", config, "Tensor registry JSON (default: R, F, g over space M)");
  canon->add_option("file", canon_file, "Input file (default: stdin)");
  add_common(canon, canon_common);

  std::string group_file;
  auto* sgs = app.add_subcommand("sgs", "Strong generating set of {\"genset\": [...]}");
  auto* order = app.add_subcommand("order", "Group order of an SGS or generating set");
  auto* member = app.add_subcommand("member", "Membership of \"perm\" in the group");
  for (auto* c : {sgs, order, member}) c->add_option("file", group_file, "Input JSON file (default: stdin)");

  std::string which;
  std::size_t nmax = 8, per_n = 5, reps = 1;
  std::uint64_t seed = 1;
  std::string out;
  auto* bench = app.add_subcommand("bench", "Run a benchmark and write CSV");
  bench->add_option("experiment", which, "chain, riemann or hard")
      ->required()
      ->check(CLI::IsMember({"chain", "riemann", "hard"}));
  bench->add_option("--nmax", nmax, "Largest n")->check(CLI::Range(2, 100000));
  bench->add_option("--per-n", per_n, "Random instances per n")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "Master seed for random instances");
  bench->add_option("--reps", reps, "Timings per n for the chain")->check(CLI::PositiveNumber);
  bench->add_option("--out", out, "CSV output file (default: stdout)");
  add_common(bench, bench_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*canon) return cmd_canon(expr, json_path, canon_file, config, canon_common);
    if (*sgs) return cmd_sgs(group_file);
    if (*order) return cmd_order(group_file);
    if (*member) return cmd_member(group_file);
    if (*bench) return cmd_bench(which, nmax, per_n, seed, reps, out, bench_common);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
