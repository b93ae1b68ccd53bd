#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "latscat/error.hpp"
#include "latscat/evolution.hpp"

using namespace latscat;

namespace {

Eigen::VectorXcd interior_vector(std::mt19937_64& rng, const Window& w, int reach) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd u = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(w.size()));
  for (int n = -reach; n <= reach; ++n) u(static_cast<Eigen::Index>(w.index(n))) = {g(rng), g(rng)};
  return u;
}

}  // namespace

TEST_SUITE("evolution") {

TEST_CASE("t = 0 gives the continuous projection") {
  const Window w(40);
  const AngleGrid g = AngleGrid::gauss_legendre(default_nodes_per_panel(40));
  for (const auto& q : testing::builtins()) {
    const OperatorMatrix k0 = evolve_pc_kernel(q, 0.0, w, g);
    const ProjectionRoutes r = projection_continuous_two_routes(q, w, g);
    const int c = core_half_width(q, w);
    CHECK(max_abs(k0.core(c) - r.eig.core(c)) < 1e-6);
    const DecayReport d = decay_probe(q, {0.0}, w, g);
    CHECK(d.sup_entry[0] == doctest::Approx(max_abs(k0.core(c))));
  }
}

TEST_CASE("free propagator is the Bessel kernel") {
  const Window w(30);
  const double t = 4.0;
  const OperatorMatrix k = evolve_pc_kernel(Potential(), t, w, AngleGrid::gauss_legendre(256));
  for (int n = -10; n <= 10; n += 3)
    for (int m = -10; m <= 10; m += 4) CHECK(std::abs(k(n, m) - free_evolution_kernel(-t, n - m)) < 1e-12);
}

TEST_CASE("isometry on the continuous subspace") {
  std::mt19937_64 rng(71);
  const Window w(64);
  const AngleGrid g = AngleGrid::gauss_legendre(propagator_nodes_per_panel(64, 7.0));
  for (const auto& q : testing::builtins()) {
    const PlaneWaveTable table(q, g, w);
    const Eigen::VectorXcd u = interior_vector(rng, w, 5);
    const Eigen::VectorXcd pcu = evolve_pc_kernel(table, 0.0).matrix() * u;
    const Eigen::VectorXcd ut = evolve_pc_kernel(table, 7.0).matrix() * u;
    CHECK(std::abs(ut.norm() - pcu.norm()) < 1e-6);
  }
}

TEST_CASE("group property and conjugation") {
  const Window w(64);
  const AngleGrid g = AngleGrid::gauss_legendre(default_nodes_per_panel(64));
  for (const auto& q : testing::builtins()) {
    const PlaneWaveTable table(q, g, w);
    const Eigen::MatrixXcd a = evolve_pc_kernel(table, 2.0).matrix();
    const Eigen::MatrixXcd b = evolve_pc_kernel(table, 3.0).matrix();
    const Eigen::MatrixXcd ab = evolve_pc_kernel(table, 5.0).matrix();
    CHECK(max_abs(core_block(a * b - ab, w, 12)) < 1e-6);
    const Eigen::MatrixXcd m = evolve_pc_kernel(table, -3.0).matrix();
    CHECK(max_abs(m - b.adjoint()) < 1e-12);
  }
}

TEST_CASE("agreement with the dense propagator") {
  const Window w(48);
  for (const auto& q : testing::builtins()) {
    const int c = core_half_width(q, w);
    for (double t : {1.0, 5.0, 20.0}) {
      const AngleGrid g = AngleGrid::gauss_legendre(propagator_nodes_per_panel(48, t));
      const OperatorMatrix k = evolve_pc_kernel(q, t, w, g);
      const Eigen::MatrixXcd dense = dense_propagator_pc(q, t, w);
      CHECK(max_abs(k.core(c) - core_block(dense, w, c)) < 1e-6);
    }
  }
}

TEST_CASE("node count guard") {
  const Window w(10);
  const AngleGrid g = AngleGrid::gauss_legendre(256);
  CHECK_NOTHROW(evolve_pc_kernel(Potential(), 32.0, w, g));
  CHECK_THROWS_AS(evolve_pc_kernel(Potential(), 33.0, w, g), InvalidArgument);
  CHECK(propagator_nodes_per_panel(64, 100.0) == 800);
  CHECK(propagator_nodes_per_panel(512, 1.0) == default_nodes_per_panel(512));
}

TEST_CASE("free decay probe") {
  const Window w(64);
  std::vector<double> ts;
  for (double t = 1.0; t <= 20.0; t *= 1.35) ts.push_back(t);
  const DecayReport r = decay_probe(Potential(), ts, w, AngleGrid::gauss_legendre(propagator_nodes_per_panel(64, ts.back())));
  CHECK(r.t.size() == ts.size());
  CHECK_FALSE(r.alarm);
  CHECK(r.c_star == doctest::Approx(std::cbrt(std::sqrt(2.0)) * std::cyl_bessel_j(1.0, 2.0)).epsilon(1e-9));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    CHECK(r.sup_entry[i] <= 1.0);
    CHECK(r.rescaled[i] == doctest::Approx(std::cbrt(bracket(ts[i])) * r.sup_entry[i]));
  }
}

}
