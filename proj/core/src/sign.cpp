#include "extlift/sign.hpp"

#include <stdexcept>

namespace extlift {

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask mask_of(std::span<const int> elements) {
  Mask m = 0;
  for (int e : elements) m |= bit(e);
  return m;
}

Mask compress(Mask m, Mask removed) {
  Mask out = 0;
  int j = 0;
  for (int i = 0; i < 32; ++i) {
    if (contains(removed, i)) continue;
    if (contains(m, i)) out |= bit(j);
    ++j;
  }
  return out;
}

Mask expand(Mask m, Mask inserted) {
  Mask out = 0;
  int j = 0;
  for (int i = 0; i < 32 && (m >> j) != 0; ++i) {
    if (contains(inserted, i)) continue;
    if (contains(m, j)) out |= bit(i);
    ++j;
  }
  return out;
}

SignedSet::SignedSet(int size, Mask positive, Mask negative) : size_(size), pos_(positive), neg_(negative) {
  if (size < 0 || size > kMaxGroundSize) throw std::invalid_argument("signed set size out of range");
  if ((pos_ & neg_) != 0) throw std::invalid_argument("element signed both + and -");
  if (((pos_ | neg_) & ~full_mask(size)) != 0) throw std::invalid_argument("signed set entry outside ground set");
}

SignedSet SignedSet::from_signs(std::span<const Sign> signs) {
  Mask p = 0, n = 0;
  for (std::size_t e = 0; e < signs.size(); ++e) {
    if (signs[e] == Sign::Positive) p |= bit(static_cast<int>(e));
    if (signs[e] == Sign::Negative) n |= bit(static_cast<int>(e));
  }
  return SignedSet(static_cast<int>(signs.size()), p, n);
}

void SignedSet::set(int e, Sign s) {
  pos_ &= ~bit(e);
  neg_ &= ~bit(e);
  if (s == Sign::Positive) pos_ |= bit(e);
  if (s == Sign::Negative) neg_ |= bit(e);
}

SignedSet SignedSet::reoriented(Mask flipped) const {
  return SignedSet(size_, (pos_ & ~flipped) | (neg_ & flipped), (neg_ & ~flipped) | (pos_ & flipped));
}

SignedSet SignedSet::without(Mask removed) const {
  return SignedSet(size_ - popcount(removed & full_mask(size_)), compress(pos_, removed), compress(neg_, removed));
}

SignedSet SignedSet::with_zeros(Mask inserted) const {
  return SignedSet(size_ + popcount(inserted), expand(pos_, inserted), expand(neg_, inserted));
}

std::pair<SignedSet, Sign> SignedSet::canonical() const {
  if (empty() || is_canonical()) return {*this, Sign::Positive};
  return {-*this, Sign::Negative};
}

bool SignedSet::is_canonical() const {
  const Mask s = support();
  return s == 0 || (pos_ & (s & (~s + 1))) != 0;
}

std::string SignedSet::to_string() const {
  std::string out;
  for (int e : elements_of(support())) {
    if (!out.empty()) out += ' ';
    out += sign_char((*this)[e]);
    out += std::to_string(e + 1);
  }
  return out;
}

std::string SignedSet::to_string(std::span<const std::string> labels) const {
  std::string out;
  for (int e : elements_of(support())) {
    if (!out.empty()) out += ' ';
    out += sign_char((*this)[e]);
    out += labels[static_cast<std::size_t>(e)];
  }
  return out;
}

std::strong_ordering compare_as_tuples(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x <=> y;
    a &= a - 1;
    b &= b - 1;
  }
  return (a != 0) <=> (b != 0);
}

std::strong_ordering operator<=>(const SignedSet& a, const SignedSet& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  if (auto c = compare_as_tuples(a.support(), b.support()); c != 0) return c;
  return a.neg_ <=> b.neg_;
}

}  // namespace extlift
