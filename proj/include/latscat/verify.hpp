#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "latscat/lattice.hpp"
#include "latscat/quadrature.hpp"

namespace latscat {

struct NamedPotential {
  std::string name;
  Potential q;
};

/// 5 sites on [-2, 2] with values uniform in [-2, 2], drawn from a 64-bit
/// Mersenne twister (53-bit mantissa mapping, platform independent).
Potential seeded_random_potential(std::uint64_t seed, int sites = 5, int offset = -2, double amplitude = 2.0);

inline constexpr std::uint64_t kRandomSeedA = 20240611;
inline constexpr std::uint64_t kRandomSeedB = 777001;

/// zero, delta+1, delta-1, delta-2, delta+2, delta+4, delta-4, random-a, random-b
std::vector<NamedPotential> builtin_potentials();
/// Throws InvalidArgument for an unknown name.
Potential builtin_potential(const std::string& name);

/// sin^6(theta) (1 + cos theta + 0.5 sin 2 theta): vanish to high order at 0 and pi,
/// so its distorted inverse transform decays fast.
std::vector<cplx> smooth_test_function(const AngleGrid& grid);

struct RunConfig {
  std::string potential_path;
  std::string builtin;              ///< name, or "all" for verify
  int window = 64;                  ///< N
  int nodes = 0;                    ///< nodes per panel K, 0 = default for N
  double tol = 1e-12;               ///< eigenvalue tolerance
  double eps_res = 0.0;             ///< 0 = 1e-8 (1 + ||q||_1)
  std::filesystem::path out = "out";

  int nodes_for(int half_width) const;
  nlohmann::json echo() const;
  /// N >= support radius + band buffer, K >= min_nodes. Throws InvalidArgument.
  void validate(const Potential& q, int min_nodes = 64) const;
};

struct CheckResult {
  std::string potential;
  std::string check;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  nlohmann::json to_json(const RunConfig& config) const;
};

/// Property suite on the built-in potentials (or on the configured potential).
/// Allows K < 64 so that deliberately starved quadrature can be exercised.
VerifyReport run_verify(const RunConfig& config);

}  // namespace latscat
