#include <doctest.h>

#include <algorithm>
#include <set>

#include "extlift/errors.hpp"
#include "extlift/extension_lifting.hpp"
#include "extlift/oriented_matroid.hpp"
#include "extlift/realizable.hpp"
#include "support/instances.hpp"
#include "support/signs.hpp"

using namespace extlift;
using namespace extlift::testing;

namespace {

struct Pipeline {
  Chirotope m = chirotope_from_matrix(m4());
  ExtensionSignature sigma_star = localization_from_vector(m4(), GenericVector{{1, 1}});
  LiftingSignature sigma = lifting_from_heights(m4(), HeightVector{{0, 1, 0, 1}});
};

}  // namespace

TEST_CASE("signature validation") {
  const Chirotope m = chirotope_from_matrix(m4());
  const std::vector<std::pair<SignedSet, Sign>> good = {{sv("++00"), Sign::Positive}, {sv("00--"), Sign::Negative}};
  const ExtensionSignature s(m, good);
  CHECK(s(sv("00++")) == Sign::Positive);

  const std::vector<std::pair<SignedSet, Sign>> partial = {{sv("++00"), Sign::Positive}};
  CHECK_THROWS_AS(ExtensionSignature(m, partial), NotGeneric);

  // A flipped value on the antipode breaks antisymmetry.
  const std::vector<std::pair<SignedSet, Sign>> clash = {
      {sv("++00"), Sign::Positive}, {sv("--00"), Sign::Positive}, {sv("00++"), Sign::Positive}};
  CHECK_THROWS_AS(ExtensionSignature(m, clash), InvalidInput);

  const std::vector<std::pair<SignedSet, Sign>> stranger = {{sv("+-00"), Sign::Positive}};
  CHECK_THROWS_AS(ExtensionSignature(m, stranger), InvalidInput);
}

TEST_CASE("extend matches the determinant oracle") {
  const auto u = chirotope_from_matrix(u23());
  const Chirotope ext = extend(u, localization_from_vector(u23(), GenericVector{{1, 2}}));
  // f is element 0; chi'(x, f) = -chi'(f, x) in rank 2.
  CHECK(ext({1, 0}) == Sign::Positive);
  CHECK(ext({2, 0}) == Sign::Negative);
  CHECK(ext({3, 0}) == Sign::Positive);
  CHECK(delete_elements(ext, bit(0)) == u);
  CHECK(is_generic_extension(ext, 0));

  const Pipeline p;
  const Chirotope m4_ext = extend(p.m, p.sigma_star);
  const auto oracle = chirotope_from_matrix(matrix_of(2, 5, {1, 1, 2, 0, 0, 1, 0, 0, 1, 2}));
  CHECK(m4_ext == oracle);
  CHECK(is_generic_extension(extend(chirotope_from_matrix(m2()), localization_from_vector(m2(), GenericVector{{1}})), 0));
}

TEST_CASE("lift of M4") {
  const Pipeline p;
  const Chirotope l = lift(p.m, p.sigma);
  CHECK(l.rank() == 3);
  CHECK(l.size() == 5);
  CHECK(contract(l, bit(0)) == p.m);
  CHECK(is_generic_lifting(l, 0));

  std::set<Mask> through_g;
  for (const auto& y : cocircuits(l))
    if (contains(y.support(), 0)) through_g.insert(y.support());
  // {2,4,g}, {2,3,g}, {1,4,g}, {1,3,g} with g = element 0.
  CHECK(through_g == std::set<Mask>{(set({2, 4}) << 1) | 1, (set({2, 3}) << 1) | 1, (set({1, 4}) << 1) | 1,
                                    (set({1, 3}) << 1) | 1});
  // The lifted circuit of (1:+, 2:-) has g positive.
  bool found = false;
  for (const auto& c : circuits(l)) {
    if (c.without(bit(0)).canonical().first == sv("+-00") && contains(c.support(), 0)) {
      const auto [canon, s] = c.without(bit(0)).canonical();
      CHECK(s * c[0] == Sign::Positive);
      found = true;
    }
  }
  CHECK(found);
  CHECK(is_generic_extension(dual(l), 0) == is_generic_lifting(l, 0));
}

TEST_CASE("compliant composition for M4") {
  const Pipeline p;
  const ExtensionLifting mbar = compose_compliant(p.m, p.sigma_star, p.sigma);
  CHECK(mbar.chirotope().size() == 6);
  CHECK(mbar.chirotope().rank() == 3);
  CHECK(mbar.base() == p.m);
  CHECK(contract(mbar.deletion(), bit(0)) == p.m);
  CHECK(is_compliant(mbar));
  for (const auto& y : cocircuits(mbar.chirotope()))
    if (y[ExtensionLifting::kG] == Sign::Positive) CHECK(y[ExtensionLifting::kF] != Sign::Negative);

  const auto [ext, lif] = signatures_of(mbar);
  CHECK(ext == p.sigma_star);
  CHECK(lif == p.sigma);
  CHECK(std::ranges::equal(ext.values(), std::vector<Sign>{Sign::Positive, Sign::Positive}));
  CHECK(std::ranges::equal(lif.values(), std::vector<Sign>{Sign::Positive, Sign::Positive}));

  // The realized compliant matrix gives the same chirotope.
  const auto real = realize_extension_lifting(m4(), GenericVector{{1, 1}}, HeightVector{{0, 1, 0, 1}});
  CHECK(chirotope_from_matrix(real.matrix) == mbar.chirotope());
}

TEST_CASE("extension-lifting validation rejects broken input") {
  // U23 with two extra loops in front.
  const Chirotope loops = Chirotope::from_string(5, 2, "0000000+++");
  CHECK_THROWS_AS(ExtensionLifting{loops}, InvariantViolation);
  CHECK_FALSE(extension_lifting_violations(loops).empty());
}
