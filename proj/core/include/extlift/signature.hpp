#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "extlift/chirotope.hpp"
#include "extlift/sign.hpp"

namespace extlift {

struct CocircuitDomain {
  static constexpr const char* kName = "cocircuit";
  static std::vector<SignedSet> sets(const Chirotope& m);
};

struct CircuitDomain {
  static constexpr const char* kName = "circuit";
  static std::vector<SignedSet> sets(const Chirotope& m);
};

/// A total, antisymmetric sign map on the signed cocircuits (extension
/// signatures) or signed circuits (lifting signatures) of a base matroid.
///
/// Only canonical representatives are stored; the value on -X is the negation
/// of the value on X by construction. For an extension signature, value + on Y
/// means the cocircuit of the extension restricting to Y is positive on the new
/// element f. For a lifting signature, value + on C means the circuit of the
/// lifting restricting to C is positive on g.
template <class Domain>
class Signature {
 public:
  /// Validates that every assigned set is a (co)circuit of `base`, that the
  /// assignments are nonzero and antisymmetric, and that every (co)circuit is
  /// covered. Throws InvalidInput for foreign sets or inconsistent values and
  /// NotGeneric when some (co)circuit is missing or assigned zero.
  Signature(Chirotope base, std::span<const std::pair<SignedSet, Sign>> assignments);

  /// Evaluates `value` on every canonical (co)circuit.
  static Signature from_function(Chirotope base, const std::function<Sign(const SignedSet&)>& value);

  const Chirotope& base() const { return base_; }
  std::span<const SignedSet> keys() const { return keys_; }
  std::span<const Sign> values() const { return values_; }

  /// Value on any signed (co)circuit of the base. Throws InvalidInput when the
  /// argument is not one.
  Sign operator()(const SignedSet& s) const;

  /// The same values with every sign flipped (the signature of -_f or -_g).
  Signature negated() const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.base_ == b.base_ && a.keys_ == b.keys_ && a.values_ == b.values_;
  }

 private:
  Signature(Chirotope base, std::vector<SignedSet> keys, std::vector<Sign> values)
      : base_(std::move(base)), keys_(std::move(keys)), values_(std::move(values)) {}

  Chirotope base_;
  std::vector<SignedSet> keys_;
  std::vector<Sign> values_;
};

extern template class Signature<CocircuitDomain>;
extern template class Signature<CircuitDomain>;

/// sigma*: signature of a generic single-element extension.
using ExtensionSignature = Signature<CocircuitDomain>;
/// sigma: signature of a generic single-element lifting.
using LiftingSignature = Signature<CircuitDomain>;

}  // namespace extlift
