#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extlift/chirotope.hpp"
#include "extlift/realizable.hpp"
#include "extlift/signature.hpp"

namespace extlift {

/// Generic single-element extension of M by the localization `sigma_star`.
///
/// The new element is element 0 of the result (labelled `label`) and the
/// elements of M follow in order. For an independent (r-1)-tuple x,
/// chi'(x, f) = sigma*(Y) where Y(e) = chi(x, e); chi'(x, f) = 0 when x is
/// dependent. Deleting element 0 gives back M sign-for-sign.
Chirotope extend(const Chirotope& m, const ExtensionSignature& sigma_star, const std::string& label = "f");

/// Generic single-element lifting: dual(extend(dual(M), sigma)), with sigma read
/// as a localization on the cocircuits of dual(M) (which are the circuits of M).
/// The new element g is element 0 and the global sign is fixed so that
/// contracting g gives back M sign-for-sign.
Chirotope lift(const Chirotope& m, const LiftingSignature& sigma, const std::string& label = "g");

/// Every circuit of N through f spans: it has rank(N) + 1 elements.
bool is_generic_extension(const Chirotope& n, int f);

/// The supports of the cocircuits of N through g are exactly the sets
/// (E \ B) + g over the bases B of N / g.
bool is_generic_lifting(const Chirotope& n, int g);

/// An oriented matroid on E + {f, g} with g = element 0, f = element 1 and the
/// elements of M at 2..n+1, which is a generic extension of itself minus f and a
/// generic lifting of itself contracted by g.
class ExtensionLifting {
 public:
  static constexpr int kG = 0;
  static constexpr int kF = 1;

  /// Element e of M as an element of the extension-lifting.
  static constexpr int element(int e) { return e + 2; }
  /// A subset of E as a subset of E + {f, g}.
  static constexpr Mask lift_mask(Mask subset) { return subset << 2; }
  /// The E-part of a subset of E + {f, g}.
  static constexpr Mask base_mask(Mask subset) { return subset >> 2; }

  /// Checks every structural invariant; throws InvariantViolation listing the
  /// failures.
  explicit ExtensionLifting(Chirotope om);

  /// From a realization whose column 0 is g and column 1 is f (the layout of
  /// lifted_matrix).
  static ExtensionLifting from_realization(const RealizationMatrix& matrix);

  const Chirotope& chirotope() const { return om_; }
  /// Number of elements of M.
  int base_size() const { return om_.size() - 2; }
  int base_rank() const { return om_.rank() - 1; }

  /// M = Mbar / g \ f, on 0..n-1.
  Chirotope base() const;
  /// Mbar \ f: g is element 0, e is element e + 1.
  Chirotope deletion() const;
  /// Mbar / g: f is element 0, e is element e + 1.
  Chirotope contraction() const;

  const std::optional<RealizationMatrix>& realization() const { return realization_; }

  /// No cocircuit is positive on g and negative on f (decided at construction).
  bool compliant() const { return compliant_; }

 private:
  Chirotope om_;
  bool compliant_ = false;
  std::optional<RealizationMatrix> realization_;
};

/// Human-readable list of the extension-lifting invariants that `om` violates
/// (g = element 0, f = element 1). Empty when valid.
std::vector<std::string> extension_lifting_violations(const Chirotope& om);

/// No cocircuit is positive on g and negative on f.
bool is_compliant(const ExtensionLifting& mbar);

/// The compliant extension-lifting: N = lift(M, sigma), then N is extended by f
/// with the localization Y -> Y(g) when Y(g) != 0 and Y -> sigma*(Y|E) otherwise.
ExtensionLifting compose_compliant(const Chirotope& m, const ExtensionSignature& sigma_star,
                                   const LiftingSignature& sigma);

/// Recovers (sigma*, sigma): sigma* from the cocircuits of Mbar / g and sigma from
/// the circuits of Mbar \ f.
std::pair<ExtensionSignature, LiftingSignature> signatures_of(const ExtensionLifting& mbar);

}  // namespace extlift
