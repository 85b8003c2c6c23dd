#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cardzkp/audit.hpp"

namespace cardzkp {

/// Upper-tail p-value of the chi-square distribution.
double chi_square_pvalue(double statistic, int dof);

struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
  double p = 1.0;
};

/// Goodness of fit against the uniform distribution over counts.size() bins.
ChiSquare chi_square_uniform(const std::vector<long long>& counts);

/// Two-sample homogeneity test over matching category bins.
ChiSquare chi_square_homogeneity(const std::vector<long long>& a, const std::vector<long long>& b);

struct SiteFailure {
  std::size_t ordinal = 0;
  SiteKind kind = SiteKind::kFixed;
  std::string detail;
  double p = 0.0;
};

struct DistributionReport {
  std::size_t runs_a = 0;
  std::size_t runs_b = 0;
  double alpha = 0.0;
  double site_alpha = 0.0;  // Bonferroni-corrected per random site
  std::size_t fixed_sites = 0;
  std::size_t random_sites = 0;
  double min_p = 1.0;
  std::vector<SiteFailure> failures;
  std::optional<std::size_t> structural_mismatch_at;
  bool pass = false;

  std::string summary() const;
};

/// Streaming comparison of two transcript populations over one protocol
/// structure. The reference transcript pins the expected event sequence and
/// the per-site expectations (from the auditor); every added transcript
/// must align event for event. Fixed sites demand exact equality; uniform-
/// position sites are chi-square-tested arm A against arm B at the
/// Bonferroni-corrected alpha.
class ZkEquivalence {
 public:
  ZkEquivalence(const Transcript& reference, const AuditResult& reference_audit);

  void add(const Transcript& t, bool arm_a);
  DistributionReport finalize(double alpha) const;

 private:
  struct Site {
    SiteKind kind;
    std::string fixed_line;           // kFixed
    int categories = 0;               // kUniformPos: q
    std::vector<long long> counts_a;  // per category
    std::vector<long long> counts_b;
    long long mismatches_a = 0;  // kFixed: lines differing from reference
    long long mismatches_b = 0;
    std::string first_mismatch;
  };
  std::vector<Site> sites_;
  std::size_t runs_a_ = 0;
  std::size_t runs_b_ = 0;
  std::optional<std::size_t> structural_mismatch_at_;
};

/// Convenience wrapper over transcript sets (spec operation shape).
DistributionReport zk_equivalence(const std::vector<Transcript>& real_arm,
                                  const std::vector<Transcript>& sim_arm,
                                  const Transcript& reference, const AuditResult& reference_audit,
                                  double alpha);

}  // namespace cardzkp
