#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "extlift/sign.hpp"

namespace extlift {

/// Binomial coefficient C(n, k) for 0 <= n <= 32 (0 when k is out of range).
std::uint64_t binomial(int n, int k);

/// Position of the sorted r-subset `subset` of {0..n-1} in lexicographic order.
std::size_t lex_rank(Mask subset, int n);

/// All r-subsets of {0..n-1} in lexicographic order of their sorted tuples.
std::vector<Mask> lex_subsets(int n, int r);

/// Calls f(mask) for each r-subset of {0..n-1} in lexicographic order.
void for_each_subset(int n, int r, const std::function<void(Mask)>& f);

/// Sign of the permutation that sorts `tuple`; Zero if it has a repeat.
Sign sorting_sign(std::span<const int> tuple);

/// The elements of an oriented matroid. Elements are the indices 0..n-1 in
/// their natural order; labels are only used for display.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(int size);
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int e) const { return labels_.at(static_cast<std::size_t>(e)); }
  std::span<const std::string> labels() const { return labels_; }

  /// The ground set with the elements of `removed` taken out.
  GroundSet without(Mask removed) const;
  /// Prepends new labeled elements (they take indices 0..k-1).
  GroundSet prepended(std::span<const std::string> front) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// An oriented matroid of rank r given by its chirotope, stored densely as the
/// signs of the sorted r-subsets in lexicographic order.
///
/// Evaluating on an arbitrary r-tuple sorts it and multiplies by the parity of
/// the sorting permutation; tuples with repeats evaluate to zero. The chirotope
/// is never identically zero. Two chirotopes that differ by a global sign
/// describe the same oriented matroid; operator== compares sign-for-sign.
class Chirotope {
 public:
  Chirotope(GroundSet ground, int rank, std::vector<Sign> signs);

  /// Builds the chirotope by evaluating `sign` on every sorted r-subset.
  static Chirotope from_function(GroundSet ground, int rank, const std::function<Sign(Mask)>& sign);
  /// Parses a string over {+,-,0} of length C(n, r).
  static Chirotope from_string(int n, int rank, std::string_view signs);

  int size() const { return ground_.size(); }
  int rank() const { return rank_; }
  const GroundSet& ground() const { return ground_; }
  std::span<const Sign> signs() const { return signs_; }

  /// Value on a sorted subset of size rank().
  Sign at(Mask subset) const;
  /// Value on an ordered tuple (alternating).
  Sign operator()(std::span<const int> tuple) const;
  Sign operator()(std::initializer_list<int> tuple) const {
    return (*this)(std::span<const int>(tuple.begin(), tuple.size()));
  }

  bool is_basis(Mask subset) const { return popcount(subset) == rank_ && at(subset) != Sign::Zero; }

  std::string sign_string() const;
  Chirotope negated() const;
  /// Same signs, different display labels.
  Chirotope relabeled(GroundSet ground) const;

  /// Sign-for-sign equality (labels are ignored).
  friend bool operator==(const Chirotope& a, const Chirotope& b) {
    return a.rank_ == b.rank_ && a.size() == b.size() && a.signs_ == b.signs_;
  }
  /// Equality as oriented matroids: equal up to a global sign.
  bool same_oriented_matroid(const Chirotope& other) const;

 private:
  GroundSet ground_;
  int rank_ = 0;
  std::vector<Sign> signs_;
};

/// The matroid -_A M: evaluation on T picks up (-1)^{|T ∩ A|}. Holds a
/// non-owning reference to its base; the base must outlive it.
class Reorientation {
 public:
  Reorientation(const Chirotope& base, Mask flipped) : base_(&base), flipped_(flipped) {}

  const Chirotope& base() const { return *base_; }
  Mask flipped() const { return flipped_; }

  Sign at(Mask subset) const {
    const Sign s = base_->at(subset);
    return popcount(subset & flipped_) % 2 == 0 ? s : -s;
  }
  /// The reoriented chirotope as a standalone value.
  Chirotope materialize() const;

 private:
  const Chirotope* base_;
  Mask flipped_;
};

}  // namespace extlift
