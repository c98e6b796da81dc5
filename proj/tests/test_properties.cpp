#include <doctest.h>

#include <map>
#include <random>

#include "extlift/active_bijection.hpp"
#include "extlift/errors.hpp"
#include "extlift/extension_lifting.hpp"
#include "extlift/oriented_matroid.hpp"
#include "extlift/realizable.hpp"
#include "extlift/verify.hpp"
#include "support/instances.hpp"

using namespace extlift;
using namespace extlift::testing;

namespace {

const std::vector<RandomInstance>& suite() {
  static const std::vector<RandomInstance> instances = random_suite(3);
  return instances;
}

bool sign_rule_holds(const Chirotope& m) {
  const Mask all = full_mask(m.size());
  for (Mask b : bases(m))
    for (int x : elements_of(b)) {
      const SignedSet co = fundamental_cocircuit(m, b, x);
      for (int e : elements_of(all & ~b)) {
        const SignedSet c = fundamental_circuit(m, b, e);
        if (contains(co.support(), e) != contains(c.support(), x)) return false;
        if (contains(co.support(), e) && ((c.support() & co.support()) != (bit(e) | bit(x)) || c[x] != -co[e]))
          return false;
      }
    }
  return true;
}

// Every circuit/cocircuit pair with meeting supports has an agreement and a
// disagreement.
bool orthogonal(const Chirotope& m) {
  const auto cs = with_negatives(circuits(m));
  const auto ds = cocircuits(m);
  for (const auto& c : cs)
    for (const auto& d : ds) {
      const Mask agree = (c.positive() & d.positive()) | (c.negative() & d.negative());
      const Mask differ = (c.positive() & d.negative()) | (c.negative() & d.positive());
      if ((c.support() & d.support()) != 0 && (agree == 0 || differ == 0)) return false;
    }
  return true;
}

// Region -> basis of M for a given Mbar.
std::map<Mask, Mask> region_map(const ExtensionLifting& mbar) {
  std::map<Mask, Mask> out;
  for (Mask a : bounded_regions(mbar)) out[a] = basis_of_reorientation(mbar, a);
  return out;
}

}  // namespace

TEST_CASE("chirotope circuits and cocircuits agree with exact linear algebra") {
  for (const auto& inst : suite()) {
    CAPTURE(instance_name(inst));
    const Chirotope m = chirotope_from_matrix(inst.matrix);
    CHECK(circuits(m) == oracle_circuits(inst.matrix));
    CHECK(cocircuits(m) == oracle_cocircuits(inst.matrix));
  }
  // A few rank-4 configurations as well.
  for (std::uint64_t seed = 500; seed < 504; ++seed) {
    const auto inst = random_instance(seed, 4, 7);
    const Chirotope m = chirotope_from_matrix(inst.matrix);
    CHECK(circuits(m) == oracle_circuits(inst.matrix));
    CHECK(cocircuits(m) == oracle_cocircuits(inst.matrix));
  }
}

TEST_CASE("realizable chirotopes satisfy the axioms and orthogonality") {
  for (const auto& inst : suite()) {
    CAPTURE(instance_name(inst));
    const Chirotope m = chirotope_from_matrix(inst.matrix);
    CHECK_FALSE(find_axiom_violation(m).has_value());
    CHECK(sign_rule_holds(m));
    CHECK(sign_rule_holds(dual(m)));
    CHECK(orthogonal(m));
  }
}

TEST_CASE("dual is an involution up to the sign (-1)^{r(n-r)}") {
  for (const auto& inst : suite()) {
    CAPTURE(instance_name(inst));
    const Chirotope m = chirotope_from_matrix(inst.matrix);
    const int r = m.rank();
    const int n = m.size();
    const Chirotope dd = dual(dual(m));
    CHECK(dd == ((r * (n - r)) % 2 == 0 ? m : m.negated()));
    CHECK(circuits(dual(m)) == cocircuits(m));
    CHECK(cocircuits(dual(m)) == circuits(m));
  }
}

TEST_CASE("deletion agrees with dropping matrix columns") {
  std::mt19937_64 rng(7);
  for (const auto& inst : suite()) {
    const Chirotope m = chirotope_from_matrix(inst.matrix);
    const int e = static_cast<int>(rng() % static_cast<std::uint64_t>(m.size()));
    std::vector<int> rest;
    for (int j = 0; j < m.size(); ++j)
      if (j != e) rest.push_back(j);
    // No coloops, so the rank is kept.
    const auto oracle = chirotope_from_matrix(RealizationMatrix(inst.matrix.entries().columns(rest)));
    CHECK(delete_elements(m, bit(e)) == oracle);
  }
}

TEST_CASE("reorientation flips circuits and cocircuits") {
  std::mt19937_64 rng(11);
  for (const auto& inst : suite()) {
    const Chirotope m = chirotope_from_matrix(inst.matrix);
    const Mask a = static_cast<Mask>(rng()) & full_mask(m.size());
    std::vector<SignedSet> cs, ds;
    for (const auto& c : circuits(m)) cs.push_back(c.reoriented(a).canonical().first);
    for (const auto& d : cocircuits(m)) ds.push_back(d.reoriented(a).canonical().first);
    std::sort(cs.begin(), cs.end());
    std::sort(ds.begin(), ds.end());
    const Reorientation r(m, a);
    CHECK(circuits(r) == cs);
    CHECK(cocircuits(r) == ds);
    CHECK(is_acyclic(r) == is_acyclic(r.materialize()));
  }
}

TEST_CASE("compliant composition equals the compliant realization") {
  for (const auto& inst : suite()) {
    CAPTURE(instance_name(inst));
    const Chirotope m = chirotope_from_matrix(inst.matrix);
    const auto sigma_star = localization_from_vector(inst.matrix, inst.v);
    const auto sigma = lifting_from_heights(inst.matrix, inst.h);
    const ExtensionLifting composed = compose_compliant(m, sigma_star, sigma);
    const auto real = realize_extension_lifting(inst.matrix, inst.v, inst.h);
    CHECK(chirotope_from_matrix(real.matrix) == composed.chirotope());
    CHECK(is_compliant(composed));

    const auto [ext, lif] = signatures_of(ExtensionLifting::from_realization(real.matrix));
    CHECK(ext == sigma_star);
    CHECK(lif == sigma);
  }
}

TEST_CASE("extend and lift agree with the realized columns") {
  for (const auto& inst : suite()) {
    CAPTURE(instance_name(inst));
    const Chirotope m = chirotope_from_matrix(inst.matrix);
    const auto& a = inst.matrix.entries();
    const int r = a.rows();
    const int n = a.cols();

    IntMatrix with_f(r, n + 1);
    for (int i = 0; i < r; ++i) {
      with_f(i, 0) = inst.v.coords[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j) with_f(i, j + 1) = a(i, j);
    }
    CHECK(extend(m, localization_from_vector(inst.matrix, inst.v)) == chirotope_from_matrix(RealizationMatrix(with_f)));

    IntMatrix with_g(r + 1, n + 1);
    with_g(0, 0) = 1;
    for (int j = 0; j < n; ++j) {
      with_g(0, j + 1) = inst.h.heights[static_cast<std::size_t>(j)];
      for (int i = 0; i < r; ++i) with_g(i + 1, j + 1) = a(i, j);
    }
    CHECK(lift(m, lifting_from_heights(inst.matrix, inst.h)) == chirotope_from_matrix(RealizationMatrix(with_g)));
  }
}

TEST_CASE("verify_all passes on the randomized suite") {
  for (const auto& inst : suite()) {
    CAPTURE(instance_name(inst));
    const Chirotope m = chirotope_from_matrix(inst.matrix);
    const Report report = verify_all(m, localization_from_vector(inst.matrix, inst.v),
                                     lifting_from_heights(inst.matrix, inst.h));
    CAPTURE(report.to_text());
    CHECK(report.passed());
  }
}

TEST_CASE("region to basis map does not depend on where f sits") {
  for (const auto& inst : suite()) {
    CAPTURE(instance_name(inst));
    const auto compliant = realize_extension_lifting(inst.matrix, inst.v, inst.h);
    const auto near = ExtensionLifting::from_realization(compliant.matrix);
    // Push f far to the other side; skip t values where f is not generic.
    std::optional<ExtensionLifting> far;
    for (Integer t = -(compliant.t * 64 + 1000); !far; --t) {
      try {
        far.emplace(ExtensionLifting::from_realization(lifted_matrix(inst.matrix, inst.v, inst.h, t)));
      } catch (const InvariantViolation&) {
      }
    }
    const auto [ext, lif] = signatures_of(*far);
    CHECK(ext == localization_from_vector(inst.matrix, inst.v));
    CHECK(lif == lifting_from_heights(inst.matrix, inst.h));
    CHECK(region_map(*far) == region_map(near));
  }
}
