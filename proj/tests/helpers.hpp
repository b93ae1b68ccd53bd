#pragma once

#include <random>
#include <vector>

#include "latscat/lattice.hpp"
#include "latscat/verify.hpp"

namespace testing {

inline latscat::Potential random_potential(std::mt19937_64& rng, int sites = 5, int offset = -2, double amp = 2.0) {
  std::uniform_real_distribution<double> u(-amp, amp);
  std::vector<double> v(static_cast<std::size_t>(sites));
  for (auto& x : v) x = u(rng);
  return latscat::Potential(offset, std::move(v));
}

inline std::vector<latscat::Potential> builtins() {
  std::vector<latscat::Potential> out;
  for (auto& p : latscat::builtin_potentials()) out.push_back(p.q);
  return out;
}

}  // namespace testing
