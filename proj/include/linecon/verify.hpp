#pragma once

#include <string>
#include <vector>

namespace linecon::verify {

struct SuiteResult {
  std::string name;
  std::string scope;
  bool passed = true;
  long long checks = 0;
  std::string counterexample;  // first failure, empty when passed
};

/// Enumeration versus brute force for n <= min(max_n, cap).
SuiteResult characterization(int max_n, int cap);
/// Closed-form meet and gcd law on nontrivial joins.
SuiteResult meet(int max_n);
/// Closure join, lcm law, step of join and permutability.
SuiteResult join(int max_n);
/// Five-clause criterion versus closure.
SuiteResult criterion(int max_n);
/// Crossing and extreme counts on pairs with common extremes {0, n}.
SuiteResult counting(int max_n);
/// Catalog uniqueness up to max_n, listed examples, and the two tables on
/// catalog candidates up to table_max_n.
SuiteResult catalog(int max_n, int table_max_n = 44);
/// Frequency-two law and permutability of mirrored partners.
SuiteResult frequency_two(int max_n);
/// Pentagon and antichain witnesses, divisor embedding and distributive
/// ideals.
SuiteResult embedding(int max_n, int cap);

std::vector<std::string> suite_names();

/// Runs one named suite, or every suite except frequency-two for "all". Throws DomainError on an
/// unknown name.
std::vector<SuiteResult> run(const std::string& suite, int max_n, int cap);

std::string format(const SuiteResult& r);

}  // namespace linecon::verify
