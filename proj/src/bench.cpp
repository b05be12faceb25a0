#include "garside/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "garside/braid.hpp"
#include "garside/error.hpp"

namespace garside {

int default_word_length(int n)
{
  if (n < 2) return 0;
  return static_cast<int>(std::ceil(2.0 * n * std::log2(static_cast<double>(n)) - 1e-9));
}

Element random_element(const StructurePtr& g, std::mt19937_64& rng, int length)
{
  std::uniform_int_distribution<int> atom(1, g->n_atoms());
  std::bernoulli_distribution invert(0.5);
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(std::max(length, 0)));
  for (int i = 0; i < length; ++i) {
    int x = atom(rng);
    w.push_back(invert(rng) ? -x : x);
  }
  return make_element(g, w);
}

Element random_element(const StructurePtr& g, std::uint64_t seed, int length)
{
  std::mt19937_64 rng(seed);
  return random_element(g, rng, length < 0 ? default_word_length(g->strands()) : length);
}

ConjugatePair random_conjugate_pair(const StructurePtr& g, std::size_t r, std::uint64_t seed,
                                    int length)
{
  if (r == 0) throw Error(Errc::bad_parameter, "tuples need r >= 1");
  if (length < 0) length = default_word_length(g->strands());
  std::mt19937_64 rng(seed);
  std::vector<Element> b;
  for (std::size_t i = 0; i < r; ++i)
    b.push_back(random_element(g, rng, length));
  TupleElement base(std::move(b));
  Element x = random_element(g, rng, length);
  Element y = random_element(g, rng, length);
  return {conjugate(base, x), conjugate(base, y), x, y};
}

SetKind parse_set_kind(std::string_view token)
{
  if (token == "LL_interval") return SetKind::ll_interval;
  if (token == "inf_sup_interval") return SetKind::inf_sup_interval;
  if (token == "LSS") return SetKind::lss;
  if (token == "LSSS") return SetKind::lsss;
  throw Error(Errc::bad_parameter, "unknown set kind '" + std::string(token) + "'");
}

const char* to_string(SetKind k)
{
  switch (k) {
    case SetKind::ll_interval: return "LL_interval";
    case SetKind::inf_sup_interval: return "inf_sup_interval";
    case SetKind::lss: return "LSS";
    case SetKind::lsss: return "LSSS";
  }
  return "?";
}

void validate(const ExperimentConfig& cfg)
{
  if (cfg.trials < 1) throw Error(Errc::bad_parameter, "trials must be >= 1");
  if (cfg.cap < 1) throw Error(Errc::bad_parameter, "cap must be >= 1");
  if (cfg.r < 1) throw Error(Errc::bad_parameter, "r must be >= 1");
  if (cfg.n < 2) throw Error(Errc::bad_parameter, "N must be >= 2");
  if (cfg.kinds.empty()) throw Error(Errc::bad_parameter, "no set kinds requested");
}

std::optional<std::size_t> set_size(const ConjugatePair& pair, SetKind kind, std::size_t cap,
                                    bool mod_tau)
{
  OrbitOptions opts;
  opts.cap = cap;
  opts.mod_tau = mod_tau;
  OrbitSet set = [&] {
    switch (kind) {
      // The non-invariant baselines are computed around c, which lies in them.
      case SetKind::ll_interval: return orbit_in_interval(pair.c, Interval::from_inf(pair.c), opts);
      case SetKind::inf_sup_interval: return orbit_in_interval(pair.c, Interval::of(pair.c), opts);
      case SetKind::lss: return invariant_set(pair.a, InvariantKind::lss, opts);
      case SetKind::lsss: break;
    }
    return invariant_set(pair.a, InvariantKind::lsss_prime, opts);
  }();
  if (set.truncated()) return std::nullopt;
  return set.size();
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t i)
{
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

namespace {

TrialResult run_trial(const StructurePtr& g, const ExperimentConfig& cfg, std::size_t i)
{
  auto start = std::chrono::steady_clock::now();
  ConjugatePair pair = random_conjugate_pair(g, cfg.r, trial_seed(cfg.seed, i), cfg.word_length);
  TrialResult res;
  for (SetKind k : cfg.kinds)
    res.sizes.push_back(set_size(pair, k, cfg.cap, cfg.mod_tau));
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::size_t worker_count()
{
  const char* env = std::getenv("GARSIDE_WORKERS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1)
    throw Error(Errc::bad_parameter, "GARSIDE_WORKERS must be a positive integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

TrialResult run_trial(const ExperimentConfig& cfg, std::size_t i)
{
  validate(cfg);
  return run_trial(make_structure(cfg.structure, cfg.n), cfg, i);
}

StatRow aggregate(std::vector<std::optional<std::size_t>> sizes)
{
  StatRow row;
  row.trials = sizes.size();
  if (sizes.empty()) return row;
  // nullopt (∞) sorts above every size.
  std::sort(sizes.begin(), sizes.end(), [](const auto& x, const auto& y) {
    if (!x || !y) return x.has_value() && !y.has_value();
    return *x < *y;
  });
  std::size_t fails = static_cast<std::size_t>(
      std::count_if(sizes.begin(), sizes.end(), [](const auto& s) { return !s; }));
  row.min = sizes.front();
  row.median = sizes[(sizes.size() - 1) / 2];
  row.max = sizes.back();
  row.failure_pct = 100.0 * static_cast<double>(fails) / static_cast<double>(sizes.size());
  return row;
}

std::vector<StatRow> run_experiment(const ExperimentConfig& cfg)
{
  validate(cfg);
  StructurePtr g = make_structure(cfg.structure, cfg.n);
  std::vector<TrialResult> results(cfg.trials);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cfg.trials; i = next++)
      results[i] = run_trial(g, cfg, i);
  };
  std::size_t workers = std::min(worker_count(), cfg.trials);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(work);
    for (auto& t : pool)
      t.join();
  }

  std::vector<StatRow> rows;
  for (std::size_t k = 0; k < cfg.kinds.size(); ++k) {
    std::vector<std::optional<std::size_t>> sizes;
    double seconds = 0;
    for (const TrialResult& t : results) {
      sizes.push_back(t.sizes[k]);
      seconds += t.seconds;
    }
    StatRow row = aggregate(std::move(sizes));
    row.kind = to_string(cfg.kinds[k]);
    row.structure = cfg.structure;
    row.n = cfg.n;
    row.r = cfg.r;
    row.seconds = seconds;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string cell(const std::optional<std::size_t>& v)
{
  return v ? std::to_string(*v) : "inf";
}

std::string pct(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

nlohmann::json json_cell(const std::optional<std::size_t>& v)
{
  return v ? nlohmann::json(*v) : nlohmann::json("inf");
}

std::optional<std::size_t> cell_from_json(const nlohmann::json& j)
{
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw Error(Errc::parse_error, "bad size cell");
    return std::nullopt;
  }
  return j.get<std::size_t>();
}

}  // namespace

std::string to_csv(const std::vector<StatRow>& rows)
{
  std::ostringstream out;
  out << "kind,structure,N,r,min,median,max,failure_pct,trials\n";
  for (const StatRow& r : rows)
    out << r.kind << ',' << r.structure << ',' << r.n << ',' << r.r << ',' << cell(r.min) << ','
        << cell(r.median) << ',' << cell(r.max) << ',' << pct(r.failure_pct) << ',' << r.trials
        << '\n';
  return out.str();
}

std::string to_json(const std::vector<StatRow>& rows)
{
  nlohmann::json arr = nlohmann::json::array();
  for (const StatRow& r : rows)
    arr.push_back({{"kind", r.kind},
                   {"structure", r.structure},
                   {"N", r.n},
                   {"r", r.r},
                   {"min", json_cell(r.min)},
                   {"median", json_cell(r.median)},
                   {"max", json_cell(r.max)},
                   {"failure_pct", r.failure_pct},
                   {"trials", r.trials}});
  return arr.dump(2) + "\n";
}

std::vector<StatRow> rows_from_json(std::string_view text)
{
  std::vector<StatRow> rows;
  try {
    for (const auto& j : nlohmann::json::parse(text)) {
      StatRow r;
      r.kind = j.at("kind").get<std::string>();
      r.structure = j.at("structure").get<std::string>();
      r.n = j.at("N").get<int>();
      r.r = j.at("r").get<std::size_t>();
      r.min = cell_from_json(j.at("min"));
      r.median = cell_from_json(j.at("median"));
      r.max = cell_from_json(j.at("max"));
      r.failure_pct = j.at("failure_pct").get<double>();
      r.trials = j.at("trials").get<std::size_t>();
      rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
  return rows;
}

void emit(const std::vector<StatRow>& rows, OutputFormat format, const std::string& path)
{
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::io_error, "cannot open " + path);
  f << (format == OutputFormat::csv ? to_csv(rows) : to_json(rows));
  if (!f) throw Error(Errc::io_error, "write failed for " + path);
}

ExperimentConfig config_from_json(std::string_view text)
{
  ExperimentConfig cfg;
  try {
    auto j = nlohmann::json::parse(text);
    cfg.structure = j.value("structure", cfg.structure);
    cfg.n = j.value("n", cfg.n);
    cfg.r = j.value("r", cfg.r);
    cfg.trials = j.value("trials", cfg.trials);
    cfg.cap = j.value("cap", cfg.cap);
    cfg.mod_tau = j.value("mod_tau", cfg.mod_tau);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.word_length = j.value("word_length", cfg.word_length);
    cfg.out = j.value("out", cfg.out);
    if (j.contains("kinds")) {
      cfg.kinds.clear();
      for (const auto& k : j.at("kinds"))
        cfg.kinds.push_back(parse_set_kind(k.get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
  validate(cfg);
  return cfg;
}

}  // namespace garside
