#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ellclass/identities.hpp"
#include "ellclass/serialize.hpp"

namespace ellclass {

struct RunConfig {
  double tau_im = 1.0;
  int n_terms = 40;
  double tol = 1e-8;
  int samples = 64;
  std::uint64_t seed = 0;
  int points = 4;      // sample points printed by compute, restrict and weights
  std::string output;  // empty: stdout

  /// Throws InvalidArgument unless Im tau >= 0.3, samples >= 1, points >= 0 and tol > 0.
  void validate() const;
  ModularParams params() const;
  CheckConfig check_config() const;
};

/// "2,3,1" or "231" in one-line notation.
Permutation parse_sigma(const std::string& text);

Json cmd_compute(const std::string& pattern, const RunConfig& cfg);
/// Array of reports; see reports_passed.
Json cmd_verify(const std::string& suite, const RunConfig& cfg);
bool reports_passed(const Json& reports);
/// BFS lattice dump; throws InvalidArgument for m > 6.
Json cmd_orbits(int m, int r, const RunConfig& cfg);
Json cmd_restrict(const std::string& pattern, const std::string& sigma, const RunConfig& cfg);
Json cmd_weights(const std::string& pattern, bool rtv, const RunConfig& cfg);
Json cmd_multiplicities(const std::string& pattern, const std::vector<std::string>& lambda, const RunConfig& cfg);

/// Parses arguments, runs one subcommand and writes JSON to out (or --out).
/// Exit status: 0 success, 1 a verification failed, 2 usage or math error.
int run_cli(int argc, const char* const* argv, std::ostream& out);

}  // namespace ellclass
