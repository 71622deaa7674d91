#ifndef BHC_VERIFY_HPP
#define BHC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace bhc {

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  double worst = 0.0;  // worst residual/violation observed
  bool passed() const { return failures == 0 && checks > 0; }
};

// Seeded numerical property suites over random instances of both models and
// both gauges.  Suite names:
//   gauges       subgradient inequality, projection optimality, support oracle
//   smoothing    finite-difference gradient of phi_mu, sandwich, mu-monotonicity
//   gradients    finite differences for grad g_mu and the smooth h parts
//   sandwich     f_mu <= f <= f_mu + width, both models
//   dc-identity  g0 - h0 = f for model I
//   subgradient  subgradient inequality for h_mu, both models
//   lemma51      closed-form inverse residuals
//   conjugate    conjugate-step round trips, both models
//   monotonicity nonincreasing f_mu traces in inner DCA runs
std::vector<SuiteResult> run_verification(const std::vector<std::string>& suites,
                                          std::uint64_t seed);

std::vector<std::string> all_suite_names();

}  // namespace bhc

#endif
