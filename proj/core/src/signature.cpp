#include "extlift/signature.hpp"

#include <algorithm>

#include "extlift/errors.hpp"
#include "extlift/oriented_matroid.hpp"

namespace extlift {

std::vector<SignedSet> CocircuitDomain::sets(const Chirotope& m) { return cocircuits(m); }
std::vector<SignedSet> CircuitDomain::sets(const Chirotope& m) { return circuits(m); }

template <class Domain>
Signature<Domain>::Signature(Chirotope base, std::span<const std::pair<SignedSet, Sign>> assignments)
    : base_(std::move(base)), keys_(Domain::sets(base_)), values_(keys_.size(), Sign::Zero) {
  for (const auto& [set, value] : assignments) {
    const auto [key, orientation] = set.canonical();
    const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || *it != key)
      throw InvalidInput(set.to_string() + " is not a " + Domain::kName + " of the base matroid");
    if (value == Sign::Zero) throw NotGeneric(std::string(Domain::kName) + " " + set.to_string() + " is assigned 0", set);
    Sign& slot = values_[static_cast<std::size_t>(it - keys_.begin())];
    const Sign canonical_value = orientation * value;
    if (slot != Sign::Zero && slot != canonical_value)
      throw InvalidInput("signature is not antisymmetric on " + key.to_string());
    slot = canonical_value;
  }
  for (std::size_t i = 0; i < keys_.size(); ++i)
    if (values_[i] == Sign::Zero)
      throw NotGeneric(std::string("signature has no value on ") + Domain::kName + " " + keys_[i].to_string(), keys_[i]);
}

template <class Domain>
Signature<Domain> Signature<Domain>::from_function(Chirotope base, const std::function<Sign(const SignedSet&)>& value) {
  auto keys = Domain::sets(base);
  std::vector<Sign> values;
  values.reserve(keys.size());
  for (const auto& k : keys) {
    const Sign s = value(k);
    if (s == Sign::Zero) throw NotGeneric(std::string("signature vanishes on ") + Domain::kName + " " + k.to_string(), k);
    values.push_back(s);
  }
  return Signature(std::move(base), std::move(keys), std::move(values));
}

template <class Domain>
Sign Signature<Domain>::operator()(const SignedSet& s) const {
  const auto [key, orientation] = s.canonical();
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key)
    throw InvalidInput(s.to_string() + " is not a " + Domain::kName + " of the base matroid");
  return orientation * values_[static_cast<std::size_t>(it - keys_.begin())];
}

template <class Domain>
Signature<Domain> Signature<Domain>::negated() const {
  std::vector<Sign> flipped(values_.size());
  std::transform(values_.begin(), values_.end(), flipped.begin(), [](Sign x) { return -x; });
  return Signature(base_, keys_, std::move(flipped));
}

template class Signature<CocircuitDomain>;
template class Signature<CircuitDomain>;

}  // namespace extlift
