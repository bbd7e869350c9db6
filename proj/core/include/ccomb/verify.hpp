#ifndef CCOMB_VERIFY_HPP
#define CCOMB_VERIFY_HPP

// Exact identity checks across the library, grouped into suites. Each check
// compares independent computation routes (walk counting, tensor operators,
// series transforms, defining recursions) on fixed fixtures and seeded random
// cases. Reports are deterministic for a given configuration.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ccomb {

struct VerifyConfig {
  /// Moment order of the additive checks.
  unsigned order = 12;
  /// Coefficient order of the multiplicative (eta) checks.
  unsigned eta_order = 8;
  /// Order of the randomized series identities.
  unsigned series_order = 10;
  /// Longest word in the two-algebra independence checks.
  unsigned max_word = 8;
  /// Longest word in the three-algebra checks.
  unsigned family_max_word = 6;
  std::uint64_t seed = 1;
  unsigned random_graphs = 20;
  unsigned random_models = 50;
  unsigned random_series = 25;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class Suite { products, transforms, independence, all };

/// Parses products | transforms | independence | all; throws ccomb::Error otherwise.
Suite parse_suite(std::string_view name);

struct CheckSpec {
  std::string name;
  Suite suite;
  /// Acceptance criterion this check belongs to (1..6), 0 for module invariants.
  int criterion;
  std::function<CheckResult(const VerifyConfig&)> run;
};

/// Every check, in report order.
const std::vector<CheckSpec>& all_checks();

class Report {
 public:
  void add(CheckResult result) { checks_.push_back(std::move(result)); }
  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  /// One "CHECK <name> PASS|FAIL <detail>" line per check and a summary footer.
  void write(std::ostream& os) const;

 private:
  std::vector<CheckResult> checks_;
};

Report run_suite(Suite suite, const VerifyConfig& config);
Report run_criterion(int criterion, const VerifyConfig& config);

}  // namespace ccomb

#endif  // CCOMB_VERIFY_HPP
