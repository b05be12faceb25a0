#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "garside/bench.hpp"
#include "garside/braid.hpp"
#include "garside/error.hpp"
#include "garside/io.hpp"
#include "garside/reductions.hpp"

using namespace garside;

namespace {

struct Common {
  std::string structure = "artin";
  int n = 4;
  std::size_t cap = 100000;
  bool mod_tau = false;
  bool minimal_simples = true;
  bool deterministic = false;
  std::uint64_t seed = 1;
  std::string out;
  int word_length = -1;
};

void add_common(CLI::App* app, Common& c)
{
  app->add_option("--structure", c.structure, "artin | bkl")
      ->check(CLI::IsMember({"artin", "bkl"}));
  app->add_option("--n", c.n, "number of strands");
  app->add_option("--cap", c.cap, "maximal set size before giving up");
  app->add_flag("--mod-tau", c.mod_tau, "identify tau-orbits");
  app->add_flag("--minimal-simples,!--all-simples", c.minimal_simples,
                "expand orbits with minimal simple elements only (default)");
  app->add_flag("--deterministic", c.deterministic,
                "single-threaded, with members listed in key order");
  app->add_option("--seed", c.seed, "random seed");
  app->add_option("--out", c.out, "output file (default stdout)");
  app->add_option("--word-length", c.word_length, "letters per random element");
}

void write(const Common& c, const std::string& text)
{
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error(Errc::io_error, "cannot open " + c.out);
  f << text;
}

OrbitOptions orbit_options(const Common& c)
{
  OrbitOptions o;
  o.cap = c.cap;
  o.mod_tau = c.mod_tau;
  o.use_minimal = c.minimal_simples;
  return o;
}

InvariantKind parse_kind(const std::string& s)
{
  if (s == "lss") return InvariantKind::lss;
  if (s == "lsss") return InvariantKind::lsss;
  if (s == "lsssp") return InvariantKind::lsss_prime;
  throw Error(Errc::bad_parameter, "unknown invariant kind '" + s + "'");
}

std::vector<std::size_t> parse_list(const std::string& s)
{
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::stoul(item));
  if (out.empty()) throw Error(Errc::bad_parameter, "empty list");
  return out;
}

std::string read_file(const std::string& path)
{
  std::ifstream f(path);
  if (!f) throw Error(Errc::io_error, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Simultaneous conjugacy in Garside groups"};
  app.require_subcommand(1);
  Common c;

  // scp decide | search | invariant
  auto* scp = app.add_subcommand("scp", "simultaneous conjugacy queries");
  scp->require_subcommand(1);
  std::string a_text, c_text, kind = "lsss";
  bool members = false;
  auto* decide = scp->add_subcommand("decide", "are the tuples simultaneously conjugate?");
  auto* search = scp->add_subcommand("search", "find a conjugator");
  auto* invariant = scp->add_subcommand("invariant", "compute an invariant set");
  for (auto* sub : {decide, search}) {
    add_common(sub, c);
    sub->add_option("--a", a_text, "first tuple, coordinates separated by ';'")->required();
    sub->add_option("--c", c_text, "second tuple")->required();
    sub->add_option("--kind", kind, "invariant used: lsss | lsssp | lss");
  }
  add_common(invariant, c);
  invariant->add_option("--a", a_text, "tuple, coordinates separated by ';'")->required();
  invariant->add_option("--kind", kind, "lsss | lsssp | lss");
  invariant->add_flag("--members", members, "list the members");

  // attack
  auto* attack = app.add_subcommand("attack", "solve a protocol instance through the SCP");
  add_common(attack, c);
  std::string problem = "dh";
  attack->add_option("--problem", problem, "dh | dcp | commutator | centralizer")
      ->check(CLI::IsMember({"dh", "dcp", "commutator", "centralizer"}));

  // bench table1 | table2
  auto* bench = app.add_subcommand("bench", "set-size experiments");
  bench->require_subcommand(1);
  auto* table1 = bench->add_subcommand("table1", "all set kinds, both structures");
  auto* table2 = bench->add_subcommand("table2", "LSSS for several dimensions r");
  std::size_t trials = 100;
  std::string r_list = "8", config_path, format = "csv";
  for (auto* sub : {table1, table2}) {
    add_common(sub, c);
    sub->add_option("--r", r_list, "dimension(s), comma separated");
    sub->add_option("--trials", trials, "trials per cell");
    sub->add_option("--config", config_path, "JSON experiment configuration");
    sub->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (scp->parsed()) {
      StructurePtr g = make_structure(c.structure, c.n);
      ScpOptions opts;
      opts.orbit = orbit_options(c);
      opts.kind = parse_kind(kind);
      if (decide->parsed() || search->parsed()) {
        TupleElement a = parse_tuple(g, a_text), b = parse_tuple(g, c_text);
        ScpResult res = scp_search(a, b, opts);
        if (decide->parsed()) {
          write(c, to_string(res.outcome));
        } else {
          nlohmann::json j;
          j["outcome"] = to_string(res.outcome);
          j["explored"] = res.explored;
          j["witness"] = res.witness ? nlohmann::json(format_element(*res.witness)) : nullptr;
          write(c, j.dump(2));
        }
      } else {
        TupleElement a = parse_tuple(g, a_text);
        InvariantKind k = parse_kind(kind);
        MinimalIntervalResult iv = invariant_interval(a, k);
        OrbitSet set = invariant_set(a, k, opts.orbit);
        std::string text = invariant_to_json(set, k, iv.conjugator, members);
        if (members && c.deterministic) {
          auto j = nlohmann::json::parse(text);
          std::sort(j["members"].begin(), j["members"].end());
          text = j.dump(2);
        }
        write(c, text);
      }
    } else if (attack->parsed()) {
      StructurePtr g = make_structure(c.structure, c.n);
      InstanceParams params;
      if (c.word_length >= 0) params.word_length = c.word_length;
      Problem p = parse_problem(problem);
      Instance inst = gen_instance(p, g, params, c.seed);
      ScpOptions opts;
      opts.orbit = orbit_options(c);
      ScpOracle base = search_oracle(opts);
      std::size_t calls = 0;
      ScpOracle counting = [&](const TupleElement& x, const TupleElement& y) {
        ++calls;
        return base(x, y);
      };
      auto start = std::chrono::steady_clock::now();
      bool success = false;
      std::string error;
      try {
        success = recover(inst, counting) == shared_value(inst);
      } catch (const Error& e) {
        error = e.what();
      }
      double ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start).count();
      nlohmann::json j;
      j["problem"] = to_string(p);
      j["params"] = {{"structure", c.structure}, {"n", c.n},     {"seed", c.seed},
                     {"word_length", params.word_length},         {"cap", c.cap}};
      j["success"] = success;
      j["oracle_calls"] = calls;
      j["wall_time_ms"] = ms;
      if (!error.empty()) j["error"] = error;
      write(c, j.dump(2));
      return success ? 0 : 1;
    } else if (bench->parsed()) {
      if (c.deterministic) unsetenv("GARSIDE_WORKERS");
      ExperimentConfig base;
      if (!config_path.empty()) {
        base = config_from_json(read_file(config_path));
      } else {
        base.n = c.n;
        base.cap = c.cap;
        base.trials = trials;
        base.seed = c.seed;
        base.word_length = c.word_length;
        base.mod_tau = true;
      }
      std::string out = c.out.empty() ? base.out : c.out;
      std::vector<StatRow> rows;
      if (table1->parsed()) {
        std::vector<std::string> structures{"artin", "bkl"};
        if (!config_path.empty()) structures = {base.structure};
        for (std::size_t r : config_path.empty() ? parse_list(r_list)
                                                 : std::vector<std::size_t>{base.r})
          for (const std::string& s : structures) {
            ExperimentConfig cfg = base;
            cfg.structure = s;
            cfg.r = r;
            for (StatRow& row : run_experiment(cfg)) rows.push_back(std::move(row));
          }
      } else {
        for (std::size_t r : config_path.empty() ? parse_list(r_list)
                                                 : std::vector<std::size_t>{base.r}) {
          ExperimentConfig cfg = base;
          if (config_path.empty()) {
            cfg.structure = table2->count("--structure") ? c.structure : "bkl";
            cfg.kinds = {SetKind::lsss};
          }
          cfg.r = r;
          for (StatRow& row : run_experiment(cfg)) rows.push_back(std::move(row));
        }
      }
      std::string text = format == "json" ? to_json(rows) : to_csv(rows);
      if (out.empty()) {
        std::cout << text;
      } else {
        emit(rows, format == "json" ? OutputFormat::json : OutputFormat::csv, out);
      }
      for (const StatRow& r : rows)
        std::cerr << r.kind << ' ' << r.structure << " N=" << r.n << " r=" << r.r << ": "
                  << r.seconds << " s\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
