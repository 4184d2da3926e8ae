#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abfactor/enumerate.hpp"
#include "abfactor/factor.hpp"

namespace abfactor {

using Params = std::map<std::string, int>;

struct VerifyOptions {
  int max_order = default_max_order();
  SearchLimits search;
  double tie_tol = 1e-9;  // spectral ties and closed-form agreement
};

enum class Verdict { pass, fail, skipped };

std::string to_string(Verdict v);

/// A reported value; integral for edge counts and violation counts.
struct ReportNumber {
  double value = 0.0;
  bool integral = false;
};

struct VerificationStats {
  std::uint64_t graphs_scanned = 0;
  std::uint64_t factor_decisions = 0;
  double wall_time_ms = 0.0;
};

struct VerificationReport {
  std::string target;
  Params params;
  ReportNumber brute_value;
  std::vector<std::string> brute_extremal;  // canonical graph6 codes, sorted
  ReportNumber formula_value;
  std::vector<std::string> formula_extremal;  // canonical graph6 codes, sorted
  std::string case_label;
  Verdict verdict = Verdict::fail;
  std::optional<std::string> counterexample;  // graph6
  std::vector<std::string> notes;
  VerificationStats stats;
};

/// Target ids accepted by Verifier::verify, with their parameter names.
struct TargetInfo {
  std::string id;
  std::vector<std::string> params;
};
const std::vector<TargetInfo>& verify_targets();

/// Runs verification targets, caching enumerated catalogs and spectral radii
/// between calls. Not thread-safe; use one Verifier per thread.
class Verifier {
 public:
  explicit Verifier(VerifyOptions options = {});
  ~Verifier();
  Verifier(const Verifier&) = delete;
  Verifier& operator=(const Verifier&) = delete;

  /// Throws InvalidArgument for unknown targets or bad parameters,
  /// ParityExcluded where the theorem's hypothesis excludes (a, b, n), and
  /// ResourceLimit when an enumeration cap is hit.
  VerificationReport verify(const std::string& target, const Params& params);

  const VerifyOptions& options() const { return options_; }

  struct Cache;

 private:
  VerifyOptions options_;
  std::unique_ptr<Cache> cache_;
};

struct VerifyJob {
  std::string target;
  Params params;
};

/// Parameter grids: "acceptance" is the full desk-scale matrix, "quick" a
/// small subset. Parity-excluded points are included (they report skipped).
std::vector<VerifyJob> batch_jobs(const std::string& suite, int max_order = default_max_order());

/// verify() for a job, turning ParityExcluded into a skipped report.
VerificationReport run_job(Verifier& verifier, const VerifyJob& job);

}  // namespace abfactor
