#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "garside/solver.hpp"

namespace garside {

/// ⌈2N·log₂N⌉, the default number of letters in a random element.
int default_word_length(int n);

/// Normal form of a random word: uniformly chosen atoms, each inverted with
/// probability 1/2.
Element random_element(const StructurePtr& g, std::mt19937_64& rng, int length);
Element random_element(const StructurePtr& g, std::uint64_t seed, int length = -1);

struct ConjugatePair {
  TupleElement a, c;
  Element x, y;  // a = b^x, c = b^y, so conjugate(a, x^{-1} y) == c
  Element witness() const { return multiply(inverse(x), y); }
};

/// b, x, y random; a = b^x, c = b^y.
ConjugatePair random_conjugate_pair(const StructurePtr& g, std::size_t r, std::uint64_t seed,
                                    int length = -1);

enum class SetKind { ll_interval, inf_sup_interval, lss, lsss };

SetKind parse_set_kind(std::string_view token);
const char* to_string(SetKind k);

struct ExperimentConfig {
  std::string structure = "artin";
  int n = 4;
  std::size_t r = 8;
  std::size_t trials = 100;
  std::size_t cap = 100000;
  bool mod_tau = true;
  std::vector<SetKind> kinds{SetKind::ll_interval, SetKind::inf_sup_interval, SetKind::lss,
                             SetKind::lsss};
  std::uint64_t seed = 1;
  int word_length = -1;  // -1: default_word_length(n)
  std::string out;
};

/// Throws BadParameter on an invalid configuration.
void validate(const ExperimentConfig& cfg);

/// Size of the requested set for one trial, or nothing if it exceeded the cap.
std::optional<std::size_t> set_size(const ConjugatePair& pair, SetKind kind, std::size_t cap,
                                    bool mod_tau);

struct TrialResult {
  std::vector<std::optional<std::size_t>> sizes;  // one per kind; nothing = over cap
  double seconds = 0;
};

struct StatRow {
  std::string kind;
  std::string structure;
  int n = 0;
  std::size_t r = 0;
  std::optional<std::size_t> min, median, max;  // nothing = ∞
  double failure_pct = 0;
  std::size_t trials = 0;
  double seconds = 0;  // wall time summed over trials, not part of the CSV
};

/// Seed of trial `i` derived from the experiment seed.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t i);

TrialResult run_trial(const ExperimentConfig& cfg, std::size_t i);

/// One StatRow per requested kind. Trials run on GARSIDE_WORKERS threads
/// (default 1); the result does not depend on the thread count.
std::vector<StatRow> run_experiment(const ExperimentConfig& cfg);

/// Aggregates per-trial sizes: lower median, ∞ above every integer.
StatRow aggregate(std::vector<std::optional<std::size_t>> sizes);

std::string to_csv(const std::vector<StatRow>& rows);
std::string to_json(const std::vector<StatRow>& rows);
std::vector<StatRow> rows_from_json(std::string_view text);

enum class OutputFormat { csv, json };
void emit(const std::vector<StatRow>& rows, OutputFormat format, const std::string& path);

ExperimentConfig config_from_json(std::string_view text);

}  // namespace garside
