#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ezd/catalog.hpp"
#include "ezd/criterion.hpp"
#include "ezd/pairs.hpp"

namespace ezd {

// One comparison inside a suite case: a label, the stored expectation, and
// what the run produced.
struct CheckLine {
  std::string label;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct CaseResult {
  std::string name;
  std::vector<CheckLine> checks;
  std::vector<std::uint64_t> seeds;  // randomness consumed by the case
  bool passed = false;
};

// Every exact pair any case verified, kept so the suite can close with the
// blanket consistency check: a verified pair forces the all-ones divisor of
// its degree sum and kills every alternating residue-sum combination.
struct VerifiedPair {
  std::string case_name;
  std::string theta1;
  std::string theta2;
  int d1 = 0;
  int d2 = 0;
  HilbertData hf;
  bool divides_ok = false;
  bool residuals_vanish = false;
};

struct SuiteResult {
  std::vector<CaseResult> cases;
  std::vector<VerifiedPair> pairs;
  bool all_passed = false;
};

// Names of the packaged examples, in run order.
std::vector<std::string> suite_case_names();

// Runs the named cases (all of them when `names` is empty).  `corrupt`
// deliberately breaks the stored expectation of that one case; the run must
// then report a failure, which exercises the comparison machinery itself.
// `base_seed` offsets the seeds of the randomized cases.
SuiteResult run_example_suite(const std::vector<std::string>& names = {},
                              const std::string& corrupt = "",
                              std::uint64_t base_seed = 0);

}  // namespace ezd
