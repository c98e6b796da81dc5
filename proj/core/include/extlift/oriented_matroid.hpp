#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extlift/chirotope.hpp"
#include "extlift/sign.hpp"

namespace extlift {

/// Bases of M: the r-subsets with nonzero sign, in lexicographic order.
std::vector<Mask> bases(const Chirotope& m);

/// Rank of a subset of the ground set.
int rank_of(const Chirotope& m, Mask subset);

/// C*(B;b): the cocircuit with support E \ cl(B \ b), positive on b.
/// Sign of e is chi(B) * chi(B with b replaced by e in b's position).
/// Throws InvalidInput when B is not a basis or b is not in B.
SignedSet fundamental_cocircuit(const Chirotope& m, Mask basis, int b);
SignedSet fundamental_cocircuit(const Reorientation& m, Mask basis, int b);

/// C(B;e): the circuit supported in B + e, positive on e.
/// Sign of b in B is -chi(B) * chi(B with b replaced by e).
/// Throws InvalidInput when B is not a basis or e is in B.
SignedSet fundamental_circuit(const Chirotope& m, Mask basis, int e);
SignedSet fundamental_circuit(const Reorientation& m, Mask basis, int e);

/// A canonical signed (co)circuit together with one (basis, element) pair whose
/// fundamental (co)circuit produces it up to sign.
struct Witnessed {
  SignedSet set;
  Mask basis = 0;
  int element = -1;
};

/// One canonical representative per antipodal pair {X, -X}, sorted.
std::vector<SignedSet> circuits(const Chirotope& m);
std::vector<SignedSet> cocircuits(const Chirotope& m);
std::vector<Witnessed> witnessed_circuits(const Chirotope& m);
std::vector<Witnessed> witnessed_cocircuits(const Chirotope& m);

/// Circuits / cocircuits of -_A M (canonical, sorted).
std::vector<SignedSet> circuits(const Reorientation& m);
std::vector<SignedSet> cocircuits(const Reorientation& m);

/// Both members of every antipodal pair.
std::vector<SignedSet> with_negatives(std::span<const SignedSet> canonical);

/// Dual chirotope: chi*(T) = chi(E \ T) * sign(E \ T, T), where (E \ T, T) is the
/// permutation listing E \ T then T, each in increasing order.
///
/// With this convention dual(dual(M)) = (-1)^{r(n-r)} M sign-for-sign, which is
/// the same oriented matroid. The signed circuits of dual(M) are exactly the
/// signed cocircuits of M.
Chirotope dual(const Chirotope& m);

/// M \ S on the ground set E \ S (elements keep their relative order). When S
/// contains a coloop the rank drops and the result is (M / U) \ (S \ U) for an
/// independent U in S that completes a basis of E \ S.
Chirotope delete_elements(const Chirotope& m, Mask removed);

/// M / S on E \ S: chi'(T) = chi(I, T) with I a maximal independent subset of S
/// listed first. Contracting loops is the same as deleting them.
Chirotope contract(const Chirotope& m, Mask contracted);

/// Renumbers elements: new element i is old element order[i].
Chirotope permute(const Chirotope& m, std::span<const int> order);

/// No positive circuit.
bool is_acyclic(const Chirotope& m);
bool is_acyclic(const Reorientation& m);
/// No positive cocircuit.
bool is_totally_cyclic(const Chirotope& m);
bool is_totally_cyclic(const Reorientation& m);

/// True when some member of `sets`, reoriented by `flipped`, is one-signed.
/// With canonical circuits this is "-_A M has a positive circuit".
bool any_one_signed(std::span<const SignedSet> sets, Mask flipped);

/// Opt-in axiom validation: basis exchange, the three-term Grassmann-Pluecker
/// relations and orthogonality of derived circuits and cocircuits. Exhaustive
/// and exponential; intended for small ground sets. Returns a description of
/// the first violation found, naming the offending sets.
std::optional<std::string> find_axiom_violation(const Chirotope& m);

}  // namespace extlift
