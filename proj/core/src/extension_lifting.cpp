#include "extlift/extension_lifting.hpp"

#include <algorithm>
#include <set>

#include "extlift/errors.hpp"
#include "extlift/oriented_matroid.hpp"

namespace extlift {

Chirotope extend(const Chirotope& m, const ExtensionSignature& sigma_star, const std::string& label) {
  if (!(sigma_star.base() == m)) throw InvalidInput("extension signature belongs to a different matroid");
  const int n = m.size();
  const int r = m.rank();
  const std::string front[] = {label};
  // Moving f from the last slot of (x, f) to the front crosses r - 1 elements.
  const bool front_flip = (r - 1) % 2 != 0;
  return Chirotope::from_function(m.ground().prepended(front), r, [&](Mask t) {
    if (!contains(t, 0)) return m.at(t >> 1);
    const Mask x = t >> 1;
    SignedSet y(n, 0, 0);
    for (int e = 0; e < n; ++e) {
      if (contains(x, e)) continue;
      // chi(x, e): e moves from the last slot past the elements of x above it.
      const Sign s = m.at(x | bit(e));
      y.set(e, popcount(x & ~full_mask(e + 1)) % 2 == 0 ? s : -s);
    }
    if (y.empty()) return Sign::Zero;
    const Sign value = sigma_star(y);
    return front_flip ? -value : value;
  });
}

Chirotope lift(const Chirotope& m, const LiftingSignature& sigma, const std::string& label) {
  if (!(sigma.base() == m)) throw InvalidInput("lifting signature belongs to a different matroid");
  const Chirotope m_dual = dual(m);
  std::vector<std::pair<SignedSet, Sign>> assignments;
  for (std::size_t i = 0; i < sigma.keys().size(); ++i) assignments.emplace_back(sigma.keys()[i], sigma.values()[i]);
  const ExtensionSignature on_dual(m_dual, assignments);
  Chirotope lifted = dual(extend(m_dual, on_dual, label));
  const Chirotope below = contract(lifted, bit(0));
  if (below == m) return lifted;
  if (below == m.negated()) return lifted.negated();
  throw InvariantViolation("lifting does not contract back to the base matroid");
}

bool is_generic_extension(const Chirotope& n, int f) {
  const int size = n.rank() + 1;
  for (const auto& c : circuits(n))
    if (contains(c.support(), f) && popcount(c.support()) != size) return false;
  return true;
}

bool is_generic_lifting(const Chirotope& n, int g) {
  std::set<Mask> through_g;
  for (const auto& y : cocircuits(n))
    if (contains(y.support(), g)) through_g.insert(y.support());
  std::set<Mask> expected;
  const Mask others = full_mask(n.size()) & ~bit(g);
  for (Mask b : bases(contract(n, bit(g)))) expected.insert((others & ~expand(b, bit(g))) | bit(g));
  return through_g == expected;
}

std::vector<std::string> extension_lifting_violations(const Chirotope& om) {
  std::vector<std::string> out;
  if (om.size() < 2) {
    out.emplace_back("an extension-lifting needs the two elements g and f");
    return out;
  }
  const Mask g = bit(ExtensionLifting::kG);
  const Mask f = bit(ExtensionLifting::kF);
  const auto all_bases = bases(om);
  auto in_every = [&](Mask e) {
    return std::all_of(all_bases.begin(), all_bases.end(), [&](Mask b) { return (b & e) != 0; });
  };
  auto in_none = [&](Mask e) {
    return std::none_of(all_bases.begin(), all_bases.end(), [&](Mask b) { return (b & e) != 0; });
  };
  if (in_none(g)) out.emplace_back("g is a loop");
  if (in_every(g)) out.emplace_back("g is a coloop");
  if (in_none(f)) out.emplace_back("f is a loop");
  if (in_every(f)) out.emplace_back("f is a coloop");
  if (!out.empty()) return out;

  const Chirotope via_contraction = delete_elements(contract(om, g), bit(0));
  const Chirotope via_deletion = contract(delete_elements(om, f), bit(0));
  if (!(via_contraction == via_deletion)) out.emplace_back("Mbar/g\\f and Mbar\\f/g differ");
  if (!is_generic_extension(om, ExtensionLifting::kF)) out.emplace_back("Mbar is not a generic extension of Mbar\\f");
  if (!is_generic_lifting(om, ExtensionLifting::kG)) out.emplace_back("Mbar is not a generic lifting of Mbar/g");
  return out;
}

ExtensionLifting::ExtensionLifting(Chirotope om) : om_(std::move(om)) {
  const auto violations = extension_lifting_violations(om_);
  if (!violations.empty()) {
    std::string what = "not a generic extension-lifting:";
    for (const auto& v : violations) what += " " + v + ";";
    throw InvariantViolation(what);
  }
  const auto all = cocircuits(om_);
  compliant_ = std::none_of(all.begin(), all.end(), [](const SignedSet& y) {
    const Sign g = y[kG];
    return g != Sign::Zero && y[kF] == -g;
  });
}

ExtensionLifting ExtensionLifting::from_realization(const RealizationMatrix& matrix) {
  ExtensionLifting out(chirotope_from_matrix(matrix, extension_lifting_ground(matrix.size() - 2)));
  out.realization_ = matrix;
  return out;
}

Chirotope ExtensionLifting::base() const { return delete_elements(contraction(), bit(0)); }
Chirotope ExtensionLifting::deletion() const { return delete_elements(om_, bit(kF)); }
Chirotope ExtensionLifting::contraction() const { return contract(om_, bit(kG)); }

bool is_compliant(const ExtensionLifting& mbar) { return mbar.compliant(); }

ExtensionLifting compose_compliant(const Chirotope& m, const ExtensionSignature& sigma_star,
                                   const LiftingSignature& sigma) {
  if (!(sigma_star.base() == m) || !(sigma.base() == m)) throw InvalidInput("signatures belong to a different matroid");
  const Chirotope lifted = lift(m, sigma);
  const auto composite = ExtensionSignature::from_function(lifted, [&](const SignedSet& y) {
    const Sign on_g = y[0];
    if (on_g != Sign::Zero) return on_g;
    return sigma_star(y.without(bit(0)));
  });
  const Chirotope extended = extend(lifted, composite, "f");
  // extended has f at 0, g at 1; swap them into the (g, f, E) layout.
  std::vector<int> order(static_cast<std::size_t>(extended.size()));
  for (int i = 0; i < extended.size(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::swap(order[0], order[1]);
  return ExtensionLifting(permute(extended, order));
}

std::pair<ExtensionSignature, LiftingSignature> signatures_of(const ExtensionLifting& mbar) {
  const Chirotope m = mbar.base();
  const Chirotope contraction = mbar.contraction();
  const Chirotope deletion = mbar.deletion();

  std::vector<std::pair<SignedSet, Sign>> ext;
  for (const auto& w : witnessed_cocircuits(m)) {
    const SignedSet upstairs = fundamental_cocircuit(contraction, w.basis << 1, w.element + 1);
    const SignedSet restricted = upstairs.without(bit(0));
    ext.emplace_back(restricted, upstairs[0]);
  }
  std::vector<std::pair<SignedSet, Sign>> lif;
  for (const auto& w : witnessed_circuits(m)) {
    const Mask basis = (w.basis << 1) | bit(0);
    if (!deletion.is_basis(basis)) throw InvariantViolation("B + g is not a basis of Mbar\\f");
    const SignedSet upstairs = fundamental_circuit(deletion, basis, w.element + 1);
    lif.emplace_back(upstairs.without(bit(0)), upstairs[0]);
  }
  return {ExtensionSignature(m, ext), LiftingSignature(m, lif)};
}

}  // namespace extlift
