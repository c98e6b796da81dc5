#pragma once

#include <string>
#include <vector>

#include "extlift/chirotope.hpp"
#include "extlift/extension_lifting.hpp"
#include "extlift/signature.hpp"

namespace extlift {

struct Check {
  std::string name;
  bool passed = true;
  std::string witness;  // empty when passed
};

struct Report {
  std::vector<Check> checks;

  bool passed() const;
  std::vector<Check> failures() const;
  /// One line per check: "PASS name" / "FAIL name: witness".
  std::string to_text() const;
};

struct VerifyOptions {
  /// Exhaustive chirotope axiom validation of M (exponential); skipped above
  /// this many elements.
  int axiom_check_max_size = 9;
};

/// Runs every structural property of the extension-lifting bijection for M with
/// generic (sigma*, sigma): orthogonality, the extension-lifting invariants,
/// both compatibility statements, bounded regions, optimal-basis uniqueness,
/// bijectivity of O, agreement of the direct and extension-lifting routes,
/// cardinalities, full optimality and activities. Never throws on a failed
/// property; failures carry a witness.
Report verify_all(const Chirotope& m, const ExtensionSignature& sigma_star, const LiftingSignature& sigma,
                  const VerifyOptions& options = {});

/// The checks that only need an extension-lifting (its signatures are
/// recovered from it). Compliance-dependent checks are reported as failures
/// only when Mbar is compliant; otherwise the compliance check itself fails.
Report verify_extension_lifting(const ExtensionLifting& mbar, const VerifyOptions& options = {});

}  // namespace extlift
