#include "extlift/oriented_matroid.hpp"

#include <algorithm>
#include <map>

#include "extlift/errors.hpp"

namespace extlift {

namespace {

std::string tuple_string(Mask m) {
  std::string out = "{";
  for (int e : elements_of(m)) {
    if (out.size() > 1) out += ',';
    out += std::to_string(e + 1);
  }
  return out + "}";
}

// chi(B with b replaced by e in b's position), given chi on sorted subsets.
// Moving e from b's slot to its sorted slot crosses every element of B \ b
// lying strictly between b and e.
template <class Oriented>
Sign replaced_sign(const Oriented& m, Mask basis, int b, int e) {
  const Mask rest = basis & ~bit(b);
  if (contains(rest, e)) return Sign::Zero;
  const int lo = std::min(b, e);
  const int hi = std::max(b, e);
  const Mask between = full_mask(hi) & ~full_mask(lo + 1);
  const Sign s = m.at(rest | bit(e));
  return popcount(rest & between) % 2 == 0 ? s : -s;
}

template <class Oriented>
SignedSet fundamental_cocircuit_impl(const Oriented& m, int n, Mask basis, int b) {
  if (!contains(basis, b)) throw InvalidInput("element " + std::to_string(b + 1) + " is not in the basis");
  const Sign chi_b = m.at(basis);
  if (chi_b == Sign::Zero) throw InvalidInput(tuple_string(basis) + " is not a basis");
  SignedSet out(n, 0, 0);
  for (int e = 0; e < n; ++e) {
    if (contains(basis, e) && e != b) continue;
    out.set(e, chi_b * replaced_sign(m, basis, b, e));
  }
  return out;
}

template <class Oriented>
SignedSet fundamental_circuit_impl(const Oriented& m, int n, Mask basis, int e) {
  if (contains(basis, e)) throw InvalidInput("element " + std::to_string(e + 1) + " is in the basis");
  const Sign chi_b = m.at(basis);
  if (chi_b == Sign::Zero) throw InvalidInput(tuple_string(basis) + " is not a basis");
  SignedSet out(n, bit(e), 0);
  for (int b : elements_of(basis)) out.set(b, -(chi_b * replaced_sign(m, basis, b, e)));
  return out;
}

std::vector<Witnessed> dedupe(std::vector<Witnessed> found) {
  std::map<SignedSet, Witnessed> unique;
  for (auto& w : found) {
    w.set = w.set.canonical().first;
    unique.try_emplace(w.set, w);
  }
  std::vector<Witnessed> out;
  out.reserve(unique.size());
  for (auto& [_, w] : unique) out.push_back(w);
  return out;
}

std::vector<SignedSet> sets_of(const std::vector<Witnessed>& ws) {
  std::vector<SignedSet> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(w.set);
  return out;
}

std::vector<SignedSet> reoriented_canonical(std::vector<SignedSet> sets, Mask flipped) {
  for (auto& s : sets) s = s.reoriented(flipped).canonical().first;
  std::sort(sets.begin(), sets.end());
  return sets;
}

// Evaluates chi on (prefix..., tail...) as an ordered tuple.
Sign eval_concat(const Chirotope& m, std::span<const int> prefix, std::span<const int> tail) {
  std::vector<int> tuple(prefix.begin(), prefix.end());
  tuple.insert(tuple.end(), tail.begin(), tail.end());
  return m(tuple);
}

}  // namespace

std::vector<Mask> bases(const Chirotope& m) {
  std::vector<Mask> out;
  std::size_t i = 0;
  const auto signs = m.signs();
  for_each_subset(m.size(), m.rank(), [&](Mask s) {
    if (signs[i++] != Sign::Zero) out.push_back(s);
  });
  return out;
}

int rank_of(const Chirotope& m, Mask subset) {
  int best = 0;
  for (Mask b : bases(m)) best = std::max(best, popcount(b & subset));
  return best;
}

SignedSet fundamental_cocircuit(const Chirotope& m, Mask basis, int b) {
  return fundamental_cocircuit_impl(m, m.size(), basis, b);
}

SignedSet fundamental_cocircuit(const Reorientation& m, Mask basis, int b) {
  return fundamental_cocircuit_impl(m, m.base().size(), basis, b);
}

SignedSet fundamental_circuit(const Chirotope& m, Mask basis, int e) {
  return fundamental_circuit_impl(m, m.size(), basis, e);
}

SignedSet fundamental_circuit(const Reorientation& m, Mask basis, int e) {
  return fundamental_circuit_impl(m, m.base().size(), basis, e);
}

std::vector<Witnessed> witnessed_circuits(const Chirotope& m) {
  std::vector<Witnessed> found;
  const Mask all = full_mask(m.size());
  for (Mask b : bases(m))
    for (int e : elements_of(all & ~b)) found.push_back({fundamental_circuit(m, b, e), b, e});
  return dedupe(std::move(found));
}

std::vector<Witnessed> witnessed_cocircuits(const Chirotope& m) {
  std::vector<Witnessed> found;
  for (Mask b : bases(m))
    for (int x : elements_of(b)) found.push_back({fundamental_cocircuit(m, b, x), b, x});
  return dedupe(std::move(found));
}

std::vector<SignedSet> circuits(const Chirotope& m) { return sets_of(witnessed_circuits(m)); }
std::vector<SignedSet> cocircuits(const Chirotope& m) { return sets_of(witnessed_cocircuits(m)); }

std::vector<SignedSet> circuits(const Reorientation& m) {
  return reoriented_canonical(circuits(m.base()), m.flipped());
}

std::vector<SignedSet> cocircuits(const Reorientation& m) {
  return reoriented_canonical(cocircuits(m.base()), m.flipped());
}

std::vector<SignedSet> with_negatives(std::span<const SignedSet> canonical) {
  std::vector<SignedSet> out;
  out.reserve(canonical.size() * 2);
  for (const auto& s : canonical) {
    out.push_back(s);
    out.push_back(-s);
  }
  return out;
}

Chirotope dual(const Chirotope& m) {
  const int n = m.size();
  const Mask all = full_mask(n);
  return Chirotope::from_function(m.ground(), n - m.rank(), [&](Mask t) {
    const Mask complement = all & ~t;
    const Sign s = m.at(complement);
    if (s == Sign::Zero) return Sign::Zero;
    // Inversions of (E \ T, T): pairs (c, x) with c in E \ T, x in T, c > x.
    int inversions = 0;
    for (int x : elements_of(t)) inversions += popcount(complement & ~full_mask(x + 1));
    return inversions % 2 == 0 ? s : -s;
  });
}

Chirotope delete_elements(const Chirotope& m, Mask removed) {
  removed &= full_mask(m.size());
  const Mask kept = full_mask(m.size()) & ~removed;
  const auto all_bases = bases(m);
  Mask best = all_bases.front();
  for (Mask b : all_bases)
    if (popcount(b & kept) > popcount(best & kept)) best = b;
  const int new_rank = popcount(best & kept);
  const std::vector<int> completion = elements_of(best & removed);
  return Chirotope::from_function(m.ground().without(removed), new_rank, [&](Mask t) {
    const auto local = elements_of(expand(t, removed));
    return eval_concat(m, local, completion);
  });
}

Chirotope contract(const Chirotope& m, Mask contracted) {
  contracted &= full_mask(m.size());
  const auto all_bases = bases(m);
  Mask best = all_bases.front();
  for (Mask b : all_bases)
    if (popcount(b & contracted) > popcount(best & contracted)) best = b;
  const std::vector<int> independent = elements_of(best & contracted);
  const int new_rank = m.rank() - static_cast<int>(independent.size());
  return Chirotope::from_function(m.ground().without(contracted), new_rank, [&](Mask t) {
    const auto local = elements_of(expand(t, contracted));
    return eval_concat(m, independent, local);
  });
}

Chirotope permute(const Chirotope& m, std::span<const int> order) {
  if (static_cast<int>(order.size()) != m.size()) throw InvalidInput("permutation length differs from ground set size");
  std::vector<std::string> labels;
  for (int old : order) labels.push_back(m.ground().label(old));
  if (mask_of(order) != full_mask(m.size())) throw InvalidInput("not a permutation of the ground set");
  return Chirotope::from_function(GroundSet(std::move(labels)), m.rank(), [&](Mask t) {
    std::vector<int> tuple;
    for (int e : elements_of(t)) tuple.push_back(order[static_cast<std::size_t>(e)]);
    return m(tuple);
  });
}

bool any_one_signed(std::span<const SignedSet> sets, Mask flipped) {
  return std::any_of(sets.begin(), sets.end(), [&](const SignedSet& s) { return s.reoriented(flipped).is_one_signed(); });
}

bool is_acyclic(const Chirotope& m) { return !any_one_signed(circuits(m), 0); }
bool is_acyclic(const Reorientation& m) { return !any_one_signed(circuits(m.base()), m.flipped()); }
bool is_totally_cyclic(const Chirotope& m) { return !any_one_signed(cocircuits(m), 0); }
bool is_totally_cyclic(const Reorientation& m) { return !any_one_signed(cocircuits(m.base()), m.flipped()); }

std::optional<std::string> find_axiom_violation(const Chirotope& m) {
  const int n = m.size();
  const int r = m.rank();
  const auto all_bases = bases(m);

  for (Mask b1 : all_bases)
    for (Mask b2 : all_bases)
      for (int b : elements_of(b1 & ~b2)) {
        bool exchanged = false;
        for (int e : elements_of(b2 & ~b1))
          if (m.at((b1 & ~bit(b)) | bit(e)) != Sign::Zero) exchanged = true;
        if (!exchanged)
          return "basis exchange fails for bases " + tuple_string(b1) + " and " + tuple_string(b2) +
                 " removing element " + std::to_string(b + 1);
      }

  if (r >= 2) {
    std::optional<std::string> violation;
    for_each_subset(n, r - 2, [&](Mask x) {
      if (violation) return;
      const auto prefix = elements_of(x);
      for_each_subset(n - (r - 2), 4, [&](Mask quad) {
        if (violation) return;
        const auto q = elements_of(expand(quad, x));
        auto chi = [&](int u, int v) {
          std::vector<int> t = prefix;
          t.push_back(u);
          t.push_back(v);
          return m(t);
        };
        const Sign s1 = chi(q[0], q[1]) * chi(q[2], q[3]);
        const Sign s2 = -(chi(q[0], q[2]) * chi(q[1], q[3]));
        const Sign s3 = chi(q[0], q[3]) * chi(q[1], q[2]);
        const bool all_zero = s1 == Sign::Zero && s2 == Sign::Zero && s3 == Sign::Zero;
        const bool has_pos = s1 == Sign::Positive || s2 == Sign::Positive || s3 == Sign::Positive;
        const bool has_neg = s1 == Sign::Negative || s2 == Sign::Negative || s3 == Sign::Negative;
        if (!all_zero && !(has_pos && has_neg))
          violation = "Grassmann-Pluecker relation fails for " + tuple_string(x) + " with " + tuple_string(mask_of(q));
      });
    });
    if (violation) return violation;
  }

  const auto cs = circuits(m);
  const auto ds = cocircuits(m);
  for (const auto& c : cs)
    for (const auto& d : ds) {
      const Mask common = c.support() & d.support();
      if (common == 0) continue;
      const Mask agree = (c.positive() & d.positive()) | (c.negative() & d.negative());
      const Mask disagree = common & ~agree;
      if (agree == 0 || disagree == 0)
        return "orthogonality fails for circuit " + c.to_string() + " and cocircuit " + d.to_string();
    }
  return std::nullopt;
}

}  // namespace extlift
