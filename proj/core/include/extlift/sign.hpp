#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace extlift {

/// Bitmask over a ground set of at most 32 elements; bit e is element e.
using Mask = std::uint32_t;

/// Largest ground set a chirotope may live on (masks are 32 bits wide, and the
/// extension-lifting of a 20-element matroid has 22 elements).
inline constexpr int kMaxGroundSize = 24;

enum class Sign : std::int8_t { Negative = -1, Zero = 0, Positive = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }

constexpr Sign sign_of(int v) {
  return v > 0 ? Sign::Positive : (v < 0 ? Sign::Negative : Sign::Zero);
}

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-to_int(s)); }
constexpr Sign operator*(Sign a, Sign b) { return static_cast<Sign>(to_int(a) * to_int(b)); }

constexpr char sign_char(Sign s) {
  return s == Sign::Positive ? '+' : (s == Sign::Negative ? '-' : '0');
}

constexpr Mask bit(int e) { return Mask{1} << e; }
constexpr bool contains(Mask m, int e) { return (m >> e) & 1U; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (bit(n) - 1); }

/// Elements of `m` in increasing order.
std::vector<int> elements_of(Mask m);
Mask mask_of(std::span<const int> elements);

/// Drops the bits in `removed` and shifts the surviving bits down to close the
/// gaps, i.e. reindexes a subset of E onto E \ removed.
Mask compress(Mask m, Mask removed);
/// Inverse of compress: spreads `m` over the positions not in `inserted`.
Mask expand(Mask m, Mask inserted);

/// A sign vector over a ground set of `size` elements. Used for circuits,
/// cocircuits and the fundamental (co)circuits of a basis.
class SignedSet {
 public:
  SignedSet() = default;
  SignedSet(int size, Mask positive, Mask negative);

  static SignedSet from_signs(std::span<const Sign> signs);

  int size() const { return size_; }
  Mask positive() const { return pos_; }
  Mask negative() const { return neg_; }
  Mask support() const { return pos_ | neg_; }
  bool empty() const { return support() == 0; }

  Sign operator[](int e) const {
    return contains(pos_, e) ? Sign::Positive : (contains(neg_, e) ? Sign::Negative : Sign::Zero);
  }
  void set(int e, Sign s);

  SignedSet operator-() const { return SignedSet(size_, neg_, pos_); }

  /// Signs negated on `flipped`: the same signed set seen in -_A M.
  SignedSet reoriented(Mask flipped) const;

  /// Nonempty and no negative entry.
  bool is_positive() const { return pos_ != 0 && neg_ == 0; }
  /// Positive or negative: one of the two antipodes is positive.
  bool is_one_signed() const { return support() != 0 && (pos_ == 0 || neg_ == 0); }

  /// Removes the elements in `removed` and reindexes the rest.
  SignedSet without(Mask removed) const;
  /// Inverse of without(): inserts zero entries at the positions of `inserted`
  /// in a ground set of size() + popcount(inserted).
  SignedSet with_zeros(Mask inserted) const;

  /// The representative of {X, -X} whose smallest support element is positive,
  /// together with the sign that maps *this onto it.
  std::pair<SignedSet, Sign> canonical() const;
  bool is_canonical() const;

  /// "+1 -2" with 1-based element numbers, or with the given labels.
  std::string to_string() const;
  std::string to_string(std::span<const std::string> labels) const;

  friend bool operator==(const SignedSet&, const SignedSet&) = default;
  /// Orders by support (as sorted element tuples, lexicographically) then signs.
  friend std::strong_ordering operator<=>(const SignedSet& a, const SignedSet& b);

 private:
  int size_ = 0;
  Mask pos_ = 0;
  Mask neg_ = 0;
};

/// Lexicographic comparison of two masks read as sorted element tuples.
std::strong_ordering compare_as_tuples(Mask a, Mask b);

}  // namespace extlift
