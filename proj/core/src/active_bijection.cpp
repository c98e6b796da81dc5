#include "extlift/active_bijection.hpp"

#include <algorithm>
#include <bit>

#include "extlift/errors.hpp"
#include "extlift/oriented_matroid.hpp"

namespace extlift {

namespace {

constexpr Mask kG = bit(ExtensionLifting::kG);
constexpr Mask kF = bit(ExtensionLifting::kF);

void check_enumerable(int n) {
  if (n > kMaxEnumerationSize)
    throw InvalidInput("ground set of " + std::to_string(n) + " elements exceeds the enumeration cap of " +
                       std::to_string(kMaxEnumerationSize));
}

// Signature-side compatibility: for each canonical key X with value s, -_A X
// positive requires s = +, and -_A X negative requires s = -.
template <class Sig>
bool signature_compatible(const Sig& signature, Mask a) {
  const auto keys = signature.keys();
  const auto values = signature.values();
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const SignedSet x = keys[i].reoriented(a);
    if (x.is_positive() && values[i] != Sign::Positive) return false;
    if ((-x).is_positive() && values[i] != Sign::Negative) return false;
  }
  return true;
}

Sign min_sign(const SignedSet& s) { return s[std::countr_zero(s.support())]; }

}  // namespace

bool is_compatible_ext(const Chirotope& m, Mask a, const ExtensionSignature& sigma_star) {
  if (!(sigma_star.base() == m)) throw InvalidInput("extension signature belongs to a different matroid");
  return signature_compatible(sigma_star, a);
}

bool is_compatible_ext_via_extension(const Chirotope& extension, Mask a) {
  return is_totally_cyclic(Reorientation(extension, (a << 1) | 1U));
}

bool is_compatible_lift(const Chirotope& m, Mask a, const LiftingSignature& sigma) {
  if (!(sigma.base() == m)) throw InvalidInput("lifting signature belongs to a different matroid");
  return signature_compatible(sigma, a);
}

bool is_compatible_lift_via_lifting(const Chirotope& lifting, Mask a) {
  return is_acyclic(Reorientation(lifting, (a << 1) | 1U));
}

std::vector<Mask> compatible_reorientations(const Chirotope& m, const ExtensionSignature& sigma_star,
                                            const LiftingSignature& sigma) {
  check_enumerable(m.size());
  if (!(sigma_star.base() == m) || !(sigma.base() == m)) throw InvalidInput("signatures belong to a different matroid");
  std::vector<Mask> out;
  const Mask limit = full_mask(m.size());
  for (Mask a = 0;; ++a) {
    if (signature_compatible(sigma_star, a) && signature_compatible(sigma, a)) out.push_back(a);
    if (a == limit) break;
  }
  return out;
}

bool is_bounded_region(const ExtensionLifting& mbar, Mask a) {
  return is_acyclic(Reorientation(mbar.deletion(), (a << 1) | 1U)) &&
         is_totally_cyclic(Reorientation(mbar.contraction(), (a << 1) | 1U));
}

std::vector<Mask> bounded_regions(const ExtensionLifting& mbar) {
  check_enumerable(mbar.base_size());
  const auto deletion_circuits = circuits(mbar.deletion());
  const auto contraction_cocircuits = cocircuits(mbar.contraction());
  std::vector<Mask> out;
  const Mask limit = full_mask(mbar.base_size());
  for (Mask a = 0;; ++a) {
    const Mask flipped = (a << 1) | 1U;
    if (!any_one_signed(deletion_circuits, flipped) && !any_one_signed(contraction_cocircuits, flipped))
      out.push_back(a);
    if (a == limit) break;
  }
  return out;
}

std::vector<Mask> bases_with_g_without_f(const ExtensionLifting& mbar) {
  std::vector<Mask> out;
  for (Mask b : bases(mbar.chirotope()))
    if ((b & kG) != 0 && (b & kF) == 0) out.push_back(b);
  return out;
}

namespace {

bool optimal_in(const Reorientation& r, Mask basis) {
  const SignedSet at_g = fundamental_cocircuit(r, basis, ExtensionLifting::kG);
  if ((at_g.negative() & ~kF) != 0) return false;
  const SignedSet at_f = fundamental_circuit(r, basis, ExtensionLifting::kF);
  return (at_f.negative() & ~kG) == 0;
}

}  // namespace

Mask optimal_basis(const ExtensionLifting& mbar, Mask region) {
  const Reorientation r(mbar.chirotope(), ExtensionLifting::lift_mask(region) | kG | kF);
  std::vector<Mask> found;
  for (Mask b : bases_with_g_without_f(mbar))
    if (optimal_in(r, b)) found.push_back(b);
  if (found.size() != 1)
    throw InvariantViolation("region has " + std::to_string(found.size()) + " optimal bases instead of one");
  return found.front();
}

Mask basis_to_region(const ExtensionLifting& mbar, Mask basis) {
  if ((basis & kG) == 0 || (basis & kF) != 0) throw InvalidInput("basis must contain g and not f");
  if (!mbar.chirotope().is_basis(basis)) throw InvalidInput("not a basis of the extension-lifting");
  const Reorientation r(mbar.chirotope(), kG | kF);
  const SignedSet at_g = fundamental_cocircuit(r, basis, ExtensionLifting::kG);
  const SignedSet at_f = fundamental_circuit(r, basis, ExtensionLifting::kF);
  const Mask e_part = ~(kG | kF);
  const Mask flipped = (at_g.negative() & ~basis & e_part) | (at_f.negative() & basis & e_part);
  return ExtensionLifting::base_mask(flipped);
}

bool is_fully_optimal(const ExtensionLifting& mbar, Mask region, Mask basis) {
  if (!is_compliant(mbar)) throw InvalidInput("fully optimal bases are only defined here for compliant extension-liftings");
  const Reorientation r(mbar.chirotope(), ExtensionLifting::lift_mask(region) | kG | kF);
  const Mask all = full_mask(mbar.chirotope().size());
  for (int e : elements_of(all & ~basis)) {
    const SignedSet c = fundamental_circuit(r, basis, e);
    if (c[e] != -min_sign(c)) return false;
  }
  for (int b : elements_of(basis & ~kG)) {
    const SignedSet d = fundamental_cocircuit(r, basis, b);
    if (d[b] != -min_sign(d)) return false;
  }
  return true;
}

bool fully_optimal_check(const ExtensionLifting& mbar, Mask basis) {
  return is_fully_optimal(mbar, basis_to_region(mbar, basis), basis);
}

Activities activities(const Chirotope& m, Mask basis) {
  Activities out;
  const Mask all = full_mask(m.size());
  for (int b : elements_of(basis))
    if (std::countr_zero(fundamental_cocircuit(m, basis, b).support()) == b) ++out.internal;
  for (int e : elements_of(all & ~basis))
    if (std::countr_zero(fundamental_circuit(m, basis, e).support()) == e) ++out.external;
  return out;
}

Mask reorientation_of_basis(const Chirotope& m, const ExtensionSignature& sigma_star, const LiftingSignature& sigma,
                            Mask basis) {
  if (!m.is_basis(basis)) throw InvalidInput("not a basis");
  Mask out = 0;
  for (int e : elements_of(full_mask(m.size()) & ~basis))
    if (sigma(fundamental_circuit(m, basis, e)) == Sign::Negative) out |= bit(e);
  for (int b : elements_of(basis))
    if (sigma_star(fundamental_cocircuit(m, basis, b)) == Sign::Negative) out |= bit(b);
  return out;
}

Mask basis_of_reorientation(const ExtensionLifting& mbar, Mask a) {
  if (!is_bounded_region(mbar, a)) throw InvalidInput("reorientation is not compatible with the extension-lifting");
  return ExtensionLifting::base_mask(optimal_basis(mbar, a) & ~kG);
}

Mask basis_of_reorientation(const Chirotope& m, const ExtensionSignature& sigma_star, const LiftingSignature& sigma,
                            Mask a) {
  if (!is_compatible_ext(m, a, sigma_star) || !is_compatible_lift(m, a, sigma))
    throw InvalidInput("reorientation is not (sigma*, sigma)-compatible");
  return basis_of_reorientation(compose_compliant(m, sigma_star, sigma), a);
}

std::vector<BijectionRecord> bijection_table(const Chirotope& m, const ExtensionSignature& sigma_star,
                                             const LiftingSignature& sigma) {
  check_enumerable(m.size());
  const ExtensionLifting mbar = compose_compliant(m, sigma_star, sigma);
  std::vector<BijectionRecord> out;
  for (Mask b : bases(m)) {
    BijectionRecord row;
    row.basis = b;
    row.reorientation = reorientation_of_basis(m, sigma_star, sigma, b);
    row.region = row.reorientation;
    row.optimal_basis = optimal_basis(mbar, row.region);
    row.verified = row.optimal_basis == (ExtensionLifting::lift_mask(b) | kG) &&
                   basis_of_reorientation(mbar, row.reorientation) == b;
    out.push_back(row);
  }
  return out;
}

}  // namespace extlift
