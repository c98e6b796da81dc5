#include <doctest.h>

#include "extlift/active_bijection.hpp"
#include "extlift/errors.hpp"
#include "extlift/extension_lifting.hpp"
#include "extlift/oriented_matroid.hpp"
#include "extlift/realizable.hpp"
#include "extlift/verify.hpp"
#include "support/instances.hpp"
#include "support/signs.hpp"

using namespace extlift;
using namespace extlift::testing;

namespace {

struct Pipeline {
  Chirotope m = chirotope_from_matrix(m4());
  ExtensionSignature sigma_star = localization_from_vector(m4(), GenericVector{{1, 1}});
  LiftingSignature sigma = lifting_from_heights(m4(), HeightVector{{0, 1, 0, 1}});
  ExtensionLifting mbar = compose_compliant(m, sigma_star, sigma);
};

constexpr Mask kG = bit(ExtensionLifting::kG);
constexpr Mask kF = bit(ExtensionLifting::kF);

Mask up(Mask b) { return ExtensionLifting::lift_mask(b) | kG; }

}  // namespace

TEST_CASE("compatibility on M4") {
  const Pipeline p;
  CHECK(is_compatible_ext(p.m, 0, p.sigma_star));
  CHECK_FALSE(is_compatible_ext(p.m, set({1, 2}), p.sigma_star));
  CHECK(is_compatible_lift(p.m, 0, p.sigma));
  // Flipping 2 makes the canonical circuit (1:+, 2:-) positive, and sigma is +
  // on it.
  CHECK(is_compatible_lift(p.m, set({2}), p.sigma));
  CHECK(is_compatible_lift(p.m, set({2, 4}), p.sigma));
  // Flipping 1 makes its negation positive, where sigma is -.
  CHECK_FALSE(is_compatible_lift(p.m, set({1}), p.sigma));

  CHECK(compatible_reorientations(p.m, p.sigma_star, p.sigma) ==
        std::vector<Mask>{0, set({2}), set({4}), set({2, 4})});

  const Chirotope m2c = chirotope_from_matrix(m2());
  CHECK(compatible_reorientations(m2c, localization_from_vector(m2(), GenericVector{{1}}),
                                  lifting_from_heights(m2(), HeightVector{{0, 1}}))
            .size() == 2);
}

TEST_CASE("bounded regions are the compatible reorientations") {
  const Pipeline p;
  CHECK(bounded_regions(p.mbar) == compatible_reorientations(p.m, p.sigma_star, p.sigma));
}

TEST_CASE("Theorem A map on M4") {
  const Pipeline p;
  CHECK(reorientation_of_basis(p.m, p.sigma_star, p.sigma, set({1, 3})) == set({2, 4}));
  CHECK(reorientation_of_basis(p.m, p.sigma_star, p.sigma, set({1, 4})) == set({2}));
  CHECK(reorientation_of_basis(p.m, p.sigma_star, p.sigma, set({2, 3})) == set({4}));
  CHECK(reorientation_of_basis(p.m, p.sigma_star, p.sigma, set({2, 4})) == 0);
  CHECK_THROWS_AS(reorientation_of_basis(p.m, p.sigma_star, p.sigma, set({1, 2})), InvalidInput);
}

TEST_CASE("optimal bases and regions on M4") {
  const Pipeline p;
  CHECK(optimal_basis(p.mbar, 0) == up(set({2, 4})));
  CHECK(optimal_basis(p.mbar, set({2, 4})) == up(set({1, 3})));
  CHECK(basis_to_region(p.mbar, up(set({1, 3}))) == set({2, 4}));
  for (Mask b : bases_with_g_without_f(p.mbar)) CHECK(optimal_basis(p.mbar, basis_to_region(p.mbar, b)) == b);
  for (Mask a : bounded_regions(p.mbar)) CHECK(basis_to_region(p.mbar, optimal_basis(p.mbar, a)) == a);
  CHECK_THROWS_AS(basis_to_region(p.mbar, up(set({1, 3})) | kF), InvalidInput);
}

TEST_CASE("inverse map on M4") {
  const Pipeline p;
  CHECK(basis_of_reorientation(p.m, p.sigma_star, p.sigma, set({2, 4})) == set({1, 3}));
  CHECK(basis_of_reorientation(p.m, p.sigma_star, p.sigma, 0) == set({2, 4}));
  CHECK_THROWS_AS(basis_of_reorientation(p.m, p.sigma_star, p.sigma, set({1})), InvalidInput);
}

TEST_CASE("full optimality and activities on M4") {
  const Pipeline p;
  const auto candidates = bases_with_g_without_f(p.mbar);
  CHECK(candidates.size() == 4);
  for (Mask a : bounded_regions(p.mbar))
    for (Mask b : candidates) CHECK(is_fully_optimal(p.mbar, a, b) == (optimal_basis(p.mbar, a) == b));
  for (Mask b : candidates) {
    CHECK(fully_optimal_check(p.mbar, b));
    CHECK(activities(p.mbar.chirotope(), b) == Activities{1, 0});
  }
  CHECK(activities(p.mbar.chirotope(), up(set({1, 3}))) == Activities{1, 0});

  // Not offered on a non-compliant Mbar.
  const auto far = ExtensionLifting::from_realization(
      lifted_matrix(m4(), GenericVector{{1, 1}}, HeightVector{{0, 1, 0, 1}}, Integer(-1000)));
  CHECK_THROWS_AS(fully_optimal_check(far, up(set({1, 3}))), InvalidInput);
}

TEST_CASE("bijection table on M4") {
  const Pipeline p;
  const auto rows = bijection_table(p.m, p.sigma_star, p.sigma);
  REQUIRE(rows.size() == 4);
  const std::vector<std::pair<Mask, Mask>> expected = {
      {set({1, 3}), set({2, 4})}, {set({1, 4}), set({2})}, {set({2, 3}), set({4})}, {set({2, 4}), 0}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].basis == expected[i].first);
    CHECK(rows[i].reorientation == expected[i].second);
    CHECK(rows[i].region == rows[i].reorientation);
    CHECK(rows[i].optimal_basis == up(rows[i].basis));
    CHECK(rows[i].verified);
  }
}

TEST_CASE("verify_all on M4 passes every check") {
  const Pipeline p;
  const Report report = verify_all(p.m, p.sigma_star, p.sigma);
  CHECK(report.passed());
  CHECK(report.checks.size() >= 15);
  CHECK(report.to_text().find("FAIL") == std::string::npos);
}

TEST_CASE("verify reports a non-compliant extension-lifting") {
  const auto far = ExtensionLifting::from_realization(
      lifted_matrix(m4(), GenericVector{{1, 1}}, HeightVector{{0, 1, 0, 1}}, Integer(-1000)));
  const Report report = verify_extension_lifting(far);
  REQUIRE_FALSE(report.passed());
  const auto failures = report.failures();
  REQUIRE(failures.size() == 1);
  CHECK(failures.front().name == "compliance");
  CHECK(failures.front().witness.find("cocircuit") != std::string::npos);
}
