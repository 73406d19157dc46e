#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "doctest.h"
#include "maxlin/model.hpp"
#include "support/fixtures.hpp"
#include "support/random_ttt.hpp"

using namespace maxlin;

namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::invalid_argument;
}

// Independent route for b_vv: 1 + sum over parents u and all paths p from u
// to v of (-1)^{|p|} c_p, with the paths enumerated explicitly.
double bvv_path_sum(const TttGraph& g, const EdgeWeights& theta, NodeId v) {
  double total = 1.0;
  for (NodeId u : g.parents(v)) {
    for (const auto& path : g.all_paths(u, v)) {
      double c = 1.0;
      for (const auto& e : path) c *= theta.at(e.from, e.to);
      total += (path.size() % 2 == 0 ? 1.0 : -1.0) * c;
    }
  }
  return total;
}

}  // namespace

TEST_SUITE_BEGIN("model");

TEST_CASE("triangle weights validate, competing path loses") {
  TttGraph g = fixtures::triangle();
  CHECK_NOTHROW(validate_theta(g, fixtures::triangle_weights(0.5, 0.4, 0.3)));
  CHECK(code_of([&] {
          validate_theta(g, fixtures::triangle_weights(0.5, 0.4, 0.1));
        }) == errc::criticality_violated);
  CHECK(code_of([&] {
          validate_theta(g, fixtures::triangle_weights(0.5, 0.4, 0.2));
        }) == errc::criticality_tie);
  CHECK(code_of([&] {
          validate_theta(fixtures::chain3(), fixtures::chain3_weights(1.0, 0.4));
        }) == errc::weight_out_of_range);
}

TEST_CASE("triangle coefficient matrix matches the hand computation") {
  auto model = MaxLinearModel::build(fixtures::triangle(),
                                     fixtures::triangle_weights());
  const double expected[3][3] = {
      {1.0, 0.0, 0.0}, {0.5, 0.5, 0.0}, {0.3, 0.2, 0.5}};
  for (int v = 1; v <= 3; ++v)
    for (int i = 1; i <= 3; ++i)
      CHECK(model.coefficient(v, i) ==
            doctest::Approx(expected[v - 1][i - 1]).epsilon(1e-15));
}

TEST_CASE("source rows and unique-parent diagonals") {
  auto model =
      MaxLinearModel::build(fixtures::chain3(), fixtures::chain3_weights());
  CHECK(model.coefficient(1, 1) == 1.0);
  CHECK(model.coefficient(1, 2) == 0.0);
  CHECK(model.diagonal(2) == doctest::Approx(1.0 - 0.5).epsilon(1e-15));
}

TEST_CASE("bvv via the tournament system") {
  TttGraph g = fixtures::triangle();
  auto theta = validate_theta(g, fixtures::triangle_weights());
  CHECK(bvv_via_tournament(g, theta, 3) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(bvv_via_tournament(g, theta, 1) == 1.0);
  CHECK(bvv_via_tournament(g, theta, 2) ==
        doctest::Approx(0.5).epsilon(1e-13));

  TttGraph multi = fixtures::three_source_graph();
  std::mt19937_64 rng(81);
  auto w = testgen::random_theta(rng, multi);
  CHECK(code_of([&] {
          bvv_via_tournament(multi, validate_theta(multi, w), 3);
        }) == errc::not_unique_source);
}

TEST_CASE("bvv cross-check: recursion vs tournament system vs path sum") {
  std::mt19937_64 rng(82);
  for (int rep = 0; rep < 50; ++rep) {
    TttGraph g = testgen::random_ttt(rng, 8, true);
    EdgeWeights theta = testgen::random_theta(rng, g);
    auto validated = validate_theta(g, theta);
    MaxLinearModel model(g, validated);
    for (NodeId v : g.nodes()) {
      double recursion = model.diagonal(v);
      CHECK(bvv_via_tournament(g, validated, v) ==
            doctest::Approx(recursion).epsilon(1e-12));
      CHECK(bvv_path_sum(g, theta, v) ==
            doctest::Approx(recursion).epsilon(1e-12));
    }
  }
}

TEST_CASE("rows are stochastic and supports match ancestor sets") {
  std::mt19937_64 rng(83);
  for (int rep = 0; rep < 40; ++rep) {
    TttGraph g = testgen::random_ttt(rng, 8, rep % 2 == 0);
    MaxLinearModel model(g, validate_theta(g, testgen::random_theta(rng, g)));
    for (NodeId v : g.nodes()) {
      double sum = 0.0;
      for (NodeId i : g.nodes()) {
        double b = model.coefficient(v, i);
        sum += b;
        CHECK((b > 0.0) == g.reaches(i, v));
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("stdf on the triangle") {
  auto model = MaxLinearModel::build(fixtures::triangle(),
                                     fixtures::triangle_weights());
  CHECK(model.stdf(std::vector<double>{1, 1, 1}) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK(model.stdf(std::vector<double>{0, 1, 0}) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(model.stdf(std::vector<double>{0, 0, 0}) == 0.0);
  CHECK(code_of([&] { model.stdf(std::vector<double>{-1, 0, 0}); }) ==
        errc::negative_input);
}

TEST_CASE("stdf is homogeneous on random rays") {
  std::mt19937_64 rng(84);
  std::uniform_real_distribution<double> unif(0.0, 3.0);
  for (int rep = 0; rep < 25; ++rep) {
    TttGraph g = testgen::random_ttt(rng, 8, rep % 2 == 0);
    MaxLinearModel model(g, validate_theta(g, testgen::random_theta(rng, g)));
    std::vector<double> x(g.nodes().size());
    for (auto& c : x) c = unif(rng);
    double s = unif(rng);
    std::vector<double> sx = x;
    for (auto& c : sx) c *= s;
    CHECK(model.stdf(sx) == doctest::Approx(s * model.stdf(x)).epsilon(1e-12));
  }
}

TEST_CASE("joint cdf margins and corners") {
  auto model = MaxLinearModel::build(fixtures::triangle(),
                                     fixtures::triangle_weights());
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(model.joint_cdf(std::vector<double>{inf, inf, 1.0}) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(model.joint_cdf(std::vector<double>{1, 1, 1}) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  CHECK(model.joint_cdf(std::vector<double>{inf, inf, inf}) == 1.0);
  CHECK(code_of([&] {
          model.joint_cdf(std::vector<double>{0.0, 1.0, 1.0});
        }) == errc::non_positive_threshold);
}

TEST_CASE("scale_witness rescales the edges around the node") {
  auto model =
      MaxLinearModel::build(fixtures::chain3(), fixtures::chain3_weights());
  EdgeWeights scaled = scale_witness(model, 2, 1.1);
  CHECK(scaled.at(1, 2) == doctest::Approx(0.55).epsilon(1e-15));
  CHECK(scaled.at(2, 3) == doctest::Approx(0.4 / 1.1).epsilon(1e-15));

  CHECK(scale_witness(model, 2, 1.0) == model.theta());
  CHECK(code_of([&] { scale_witness(model, 2, 10.0); }) ==
        errc::leaves_parameter_space);
  CHECK(code_of([&] { scale_witness(model, 3, 1.1); }) ==
        errc::not_single_child);
}

TEST_CASE("scale_witness leaves the sub-vector stdf unchanged") {
  std::mt19937_64 rng(85);
  std::uniform_real_distribution<double> unif(0.0, 2.0);
  auto model =
      MaxLinearModel::build(fixtures::chain3(), fixtures::chain3_weights());
  MaxLinearModel other(model.graph(),
                       validate_theta(model.graph(), scale_witness(model, 2, 1.05)));
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> x{unif(rng), 0.0, unif(rng)};
    CHECK(std::fabs(model.stdf(x) - other.stdf(x)) <= 1e-12);
  }
}

TEST_SUITE_END();
