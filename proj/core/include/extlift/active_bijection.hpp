#pragma once

#include <vector>

#include "extlift/chirotope.hpp"
#include "extlift/extension_lifting.hpp"
#include "extlift/signature.hpp"

namespace extlift {

/// Hard cap on |E| for the exhaustive enumerations over all 2^|E| subsets.
inline constexpr int kMaxEnumerationSize = 20;

// ---------------------------------------------------------------------------
// Compatibility. Reorientations are subsets A of E; -_A M flips A.

/// Every cocircuit of M that is positive in -_A M has sigma* value +.
bool is_compatible_ext(const Chirotope& m, Mask a, const ExtensionSignature& sigma_star);
/// Second route: -_f -_A (extension) is totally cyclic. `extension` is the
/// result of extend(M, sigma*), with f as element 0.
bool is_compatible_ext_via_extension(const Chirotope& extension, Mask a);

/// Every circuit of M that is positive in -_A M has sigma value +.
bool is_compatible_lift(const Chirotope& m, Mask a, const LiftingSignature& sigma);
/// Second route: -_g -_A (lifting) is acyclic. `lifting` is lift(M, sigma), with
/// g as element 0.
bool is_compatible_lift_via_lifting(const Chirotope& lifting, Mask a);

/// All (sigma*, sigma)-compatible A, by brute force over 2^|E|, in increasing
/// mask order.
std::vector<Mask> compatible_reorientations(const Chirotope& m, const ExtensionSignature& sigma_star,
                                            const LiftingSignature& sigma);

// ---------------------------------------------------------------------------
// Bounded regions and the central bijection. Regions are given as subsets A
// of E and stand for the reorientation -_{fg} -_A Mbar: with f and g flipped,
// A is a bounded region exactly when -_A M is (sigma*, sigma)-compatible.

/// -_{A+g}(Mbar \ f) is acyclic and -_{A+f}(Mbar / g) is totally cyclic.
bool is_bounded_region(const ExtensionLifting& mbar, Mask a);
std::vector<Mask> bounded_regions(const ExtensionLifting& mbar);

/// Bases of Mbar containing g and not f.
std::vector<Mask> bases_with_g_without_f(const ExtensionLifting& mbar);

/// The unique basis of Mbar (a mask over E + {f, g}) containing g, not f, with
/// C*(B;g) \ f and C(B;f) \ g positive in -_{fg} -_A Mbar. Found by exhaustive
/// search; throws InvariantViolation unless exactly one candidate qualifies.
Mask optimal_basis(const ExtensionLifting& mbar, Mask region);

/// Inverse of optimal_basis: flips e outside B where C*(B;g) is negative and
/// b in B - g where C(B;f) is negative (both read in -_{fg} Mbar).
Mask basis_to_region(const ExtensionLifting& mbar, Mask basis);

/// Fully optimal basis test in -_{fg} -_A Mbar under the order g < f < E: for
/// every e outside B, e and min C(B;e) have opposite signs; for every b in
/// B - g, b and min C*(B;b) have opposite signs. Throws InvalidInput on a
/// non-compliant Mbar.
bool is_fully_optimal(const ExtensionLifting& mbar, Mask region, Mask basis);
/// Same test over the region basis_to_region(mbar, basis).
bool fully_optimal_check(const ExtensionLifting& mbar, Mask basis);

struct Activities {
  int internal = 0;
  int external = 0;
  friend bool operator==(const Activities&, const Activities&) = default;
};

/// Internal: b in B minimal in C*(B;b). External: e outside B minimal in
/// C(B;e). Order is the element order of the chirotope.
Activities activities(const Chirotope& m, Mask basis);

// ---------------------------------------------------------------------------
// The bijection between bases and compatible reorientations.

/// O(B): e outside B is flipped when sigma is negative on the e-positive C(B;e);
/// b in B is flipped when sigma* is negative on the b-positive C*(B;b).
Mask reorientation_of_basis(const Chirotope& m, const ExtensionSignature& sigma_star, const LiftingSignature& sigma,
                            Mask basis);

/// Inverse of reorientation_of_basis through the compliant extension-lifting:
/// optimal basis of the region, with g removed. Throws InvalidInput when A is
/// not compatible.
Mask basis_of_reorientation(const Chirotope& m, const ExtensionSignature& sigma_star, const LiftingSignature& sigma,
                            Mask a);
Mask basis_of_reorientation(const ExtensionLifting& mbar, Mask a);

struct BijectionRecord {
  Mask basis = 0;          // basis of M
  Mask reorientation = 0;  // O(basis), a subset of E
  Mask region = 0;         // the same subset read as a region of Mbar
  Mask optimal_basis = 0;  // basis + g, as a mask over E + {f, g}
  bool verified = false;   // the inverse map sends reorientation back to basis
};

/// One record per basis of M, in lexicographic basis order.
std::vector<BijectionRecord> bijection_table(const Chirotope& m, const ExtensionSignature& sigma_star,
                                             const LiftingSignature& sigma);

}  // namespace extlift
