#ifndef QDISK_VERIFY_HPP
#define QDISK_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qdisk {

struct SuiteReport {
  std::string suite;
  long cases = 0;
  long passes = 0;
  double max_deviation = 0.0;
  double wall_ms = 0.0;
  std::uint64_t seed = 0;

  bool passed() const { return passes == cases && cases > 0; }
};

struct VerifyConfig {
  int n_max = 4;
  int k_max = 8;          // combinatorics exhaustive range
  int weight_k_max = 7;   // weight bruteforce range
  int quotient_k_max = 6;
  int defo_k_max = 4;     // omega exhaustive range
  long defo_p_max = 20;
  int star_order = 6;
  int random_pairs = 1000;
  int random_triples = 100;
  std::uint64_t seed = 12345;
  double rel_tol = 1e-9;
  std::string q = "1/2";  // exact scalar literal for q-dependent suites
  double rho = 0.5;
  double tau = 2.0;
};

/// Runs one named invariant suite: combinatorics | norms | quotient |
/// deformation | star | fock. "all" runs every suite.
std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyConfig& cfg);

} // namespace qdisk

#endif
