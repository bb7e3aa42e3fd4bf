#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ndlogic/logics.hpp"

namespace ndlogic {

/// Artifacts the battery runs against. Defaults are the bundled ones;
/// tests swap in corrupted copies to see items fail.
struct SuiteInputs {
  logics::MciArtifacts mci = logics::mci_artifacts();
  std::uint64_t seed = 20240617;
  int chain_max_k = 3;
};

struct SuiteItem {
  std::string name;
  int criterion = 0;
  bool passed = false;
  std::string detail;
  double millis = 0;
};

struct SuiteReport {
  std::vector<SuiteItem> items;

  bool all_passed() const;
  /// True iff every item for the criterion passed (false if it has none).
  bool criterion_passed(int criterion) const;
};

/// Runs every check in a fixed order.
SuiteReport verify_paper_suite(const SuiteInputs& inputs = {});

/// One `PASS|FAIL  name  (ms)  detail` line per item, without timings when
/// `timings` is false so the text is reproducible.
std::string to_string(const SuiteReport& r, bool timings = true);

}  // namespace ndlogic
