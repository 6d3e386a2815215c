#pragma once

// Corpus generation and the invariant suites behind `radsupp selftest`.
// Every suite is a list of independent cases; they run either through a
// plain loop (the reference) or an OpenMP loop, and results are merged by
// case index so both paths report identically.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "radsupp/field.hpp"
#include "radsupp/support.hpp"

namespace radsupp {

/// All multisets of 1..max_s non-empty subsets of [n], with n fixed.
/// Subsets are indexed by bitmask; multisets are nondecreasing index lists.
std::vector<Support> exhaustive_corpus(int max_s, int n);

/// s uniform in [1, max_s], each set a uniform non-empty subset of [n].
Support random_support(Rng& rng, int max_s, int n);

/// Like random_support but each new set is redrawn (falling back to a
/// singleton) until the collection stays a radical support.
Support random_radical_support(Rng& rng, int max_s, int n);

enum class Exec { Serial, Parallel };

/// kernel(i) for every i < count. Exceptions are captured per case and the
/// one with the smallest index is rethrown once all cases are done.
void for_each_case(std::size_t count, const std::function<void(std::size_t)>& kernel, Exec exec);

/// Maps every case to an optional failure message.
std::vector<std::optional<std::string>> check_cases(std::size_t count,
                                                    const std::function<std::optional<std::string>(std::size_t)>& kernel,
                                                    Exec exec);

struct SelftestConfig {
  int max_s = 4;
  int max_n = 4;
  std::uint64_t seed = 1;
  int trials = 50;
  Exec exec = Exec::Parallel;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few, in case order
  double seconds = 0;
  bool passed() const { return failures == 0; }
};

std::vector<std::string> selftest_suite_names();

/// Runs one suite by name; throws for an unknown name.
SuiteResult run_suite(const std::string& name, const SelftestConfig& config);

std::vector<SuiteResult> run_selftest(const SelftestConfig& config);

}  // namespace radsupp
