#include <doctest.h>

#include "extlift/errors.hpp"
#include "extlift/extension_lifting.hpp"
#include "extlift/oriented_matroid.hpp"
#include "extlift/realizable.hpp"
#include "support/instances.hpp"
#include "support/signs.hpp"

using namespace extlift;
using namespace extlift::testing;

TEST_CASE("exact linear algebra") {
  const IntMatrix a(3, 3, {2, 0, 1, 1, 3, 2, 1, 1, 2});
  CHECK(determinant(a) == 6);
  CHECK(matrix_rank(IntMatrix(2, 3, {1, 2, 3, 2, 4, 6})) == 1);
  const auto k = kernel(IntMatrix(1, 3, {1, 1, -2}));
  CHECK(k.size() == 2);
  // Large entries stay exact.
  const Integer big("1000000000000000000000");
  const IntMatrix b(2, 2, {big, big + 1, big - 1, big});
  CHECK(determinant(b) == 1);
  CHECK_THROWS_AS(RealizationMatrix(IntMatrix(2, 2, {1, 2, 2, 4})), InvalidInput);
}

TEST_CASE("chirotope from matrix") {
  CHECK(chirotope_from_matrix(m4()).sign_string() == "0++++0");
  CHECK(chirotope_from_matrix(matrix_of(2, 2, {1, 0, 0, 1})).sign_string() == "+");
  // det(a2, a3) = -1.
  CHECK(chirotope_from_matrix(u23()).sign_string() == "++-");
}

TEST_CASE("oracles on the fixtures") {
  CHECK(oracle_circuits(m4()) == circuits(chirotope_from_matrix(m4())));
  CHECK(oracle_cocircuits(m4()) == std::vector<SignedSet>{sv("++00"), sv("00++")});
  CHECK(oracle_circuits(u23()) == std::vector<SignedSet>{sv("++-")});
  const auto c = cocircuit_functional(m4(), sv("00++"));
  CHECK(c[0] == 0);
  CHECK(c[1] > 0);
  const auto u = circuit_coefficients(m4(), sv("+-00"));
  CHECK(u[0] == 2 * -u[1]);
}

TEST_CASE("localization from a vector") {
  const auto sigma_star = localization_from_vector(m4(), GenericVector{{1, 1}});
  CHECK(sigma_star(sv("++00")) == Sign::Positive);
  CHECK(sigma_star(sv("00++")) == Sign::Positive);
  CHECK(sigma_star(sv("--00")) == Sign::Negative);

  const auto on_u = localization_from_vector(u23(), GenericVector{{1, 2}});
  CHECK(on_u(sv("0++")) == Sign::Positive);
  CHECK(on_u(sv("+0+")) == Sign::Positive);
  CHECK(on_u(sv("+-0")) == Sign::Negative);

  try {
    localization_from_vector(m4(), GenericVector{{1, 0}});
    FAIL("expected NotGeneric");
  } catch (const NotGeneric& e) {
    CHECK(e.witness().canonical().first == sv("00++"));
  }
}

TEST_CASE("lifting from heights") {
  const auto sigma = lifting_from_heights(m4(), HeightVector{{0, 1, 0, 1}});
  CHECK(sigma(sv("+-00")) == Sign::Positive);
  CHECK(sigma(sv("00+-")) == Sign::Positive);
  try {
    lifting_from_heights(m4(), HeightVector{{1, 2, 0, 0}});
    FAIL("expected NotGeneric");
  } catch (const NotGeneric& e) {
    CHECK(e.witness().canonical().first == sv("+-00"));
  }
}

TEST_CASE("sampling is generic and deterministic") {
  const auto v = sample_generic_vector(m4(), 0);
  CHECK_NOTHROW(localization_from_vector(m4(), v));
  CHECK(sample_generic_vector(m4(), 0) == v);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto h = sample_generic_heights(m2(), seed);
    CHECK(h.heights[0] != h.heights[1]);
    CHECK(sample_generic_heights(m2(), seed) == h);
  }
}

TEST_CASE("realized extension-lifting of M4") {
  const auto real = realize_extension_lifting(m4(), GenericVector{{1, 1}}, HeightVector{{0, 1, 0, 1}});
  CHECK(real.matrix.rank() == 3);
  CHECK(real.matrix.size() == 6);
  const ExtensionLifting mbar = ExtensionLifting::from_realization(real.matrix);
  CHECK(mbar.base() == chirotope_from_matrix(m4()));
  CHECK(is_compliant(mbar));
  CHECK(is_generic_extension(mbar.chirotope(), ExtensionLifting::kF));
  CHECK(is_generic_lifting(mbar.chirotope(), ExtensionLifting::kG));

  const auto [ext, lif] = signatures_of(mbar);
  CHECK(ext == localization_from_vector(m4(), GenericVector{{1, 1}}));
  CHECK(lif == lifting_from_heights(m4(), HeightVector{{0, 1, 0, 1}}));
}

TEST_CASE("f far on the other side is not compliant") {
  const GenericVector v{{1, 1}};
  const HeightVector h{{0, 1, 0, 1}};
  const auto matrix = lifted_matrix(m4(), v, h, Integer(-1000));
  const ExtensionLifting mbar = ExtensionLifting::from_realization(matrix);
  CHECK_FALSE(is_compliant(mbar));
  CHECK(mbar.base() == chirotope_from_matrix(m4()));
}

TEST_CASE("genericity predicates on degenerate matrices") {
  // U23 with f a copy of element 1: the circuit {1, f} does not span.
  const auto copy = chirotope_from_matrix(matrix_of(2, 4, {1, 1, 0, 1, 0, 0, 1, 1}));
  CHECK_FALSE(is_generic_extension(copy, 0));
  // M4 lifted with heights (1,2,0,0): g is on the line through 1 and 2.
  const auto flat = chirotope_from_matrix(matrix_of(3, 5, {1, 1, 2, 0, 0, 0, 1, 2, 0, 0, 0, 0, 0, 1, 2}));
  CHECK_FALSE(is_generic_lifting(flat, 0));
}
