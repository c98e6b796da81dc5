#include "extlift/chirotope.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "extlift/errors.hpp"

namespace extlift {

namespace {

constexpr int kBinomialRows = 33;

using BinomialTable = std::array<std::array<std::uint64_t, kBinomialRows>, kBinomialRows>;

constexpr BinomialTable make_binomials() {
  BinomialTable t{};
  for (int n = 0; n < kBinomialRows; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
  }
  return t;
}

constexpr BinomialTable kBinomials = make_binomials();

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n >= kBinomialRows) return 0;
  return kBinomials[n][k];
}

std::size_t lex_rank(Mask subset, int n) {
  int remaining = popcount(subset);
  std::size_t rank = 0;
  int next = 0;
  while (subset != 0) {
    const int a = std::countr_zero(subset);
    for (int j = next; j < a; ++j) rank += binomial(n - 1 - j, remaining - 1);
    next = a + 1;
    --remaining;
    subset &= subset - 1;
  }
  return rank;
}

void for_each_subset(int n, int r, const std::function<void(Mask)>& f) {
  if (r < 0 || r > n) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Mask m = 0;
    for (int x : idx) m |= bit(x);
    f(m);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<Mask> lex_subsets(int n, int r) {
  std::vector<Mask> out;
  out.reserve(static_cast<std::size_t>(binomial(n, r)));
  for_each_subset(n, r, [&](Mask m) { out.push_back(m); });
  return out;
}

Sign sorting_sign(std::span<const int> tuple) {
  int inversions = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) return Sign::Zero;
      if (tuple[i] > tuple[j]) ++inversions;
    }
  return inversions % 2 == 0 ? Sign::Positive : Sign::Negative;
}

GroundSet::GroundSet(int size) {
  if (size < 0 || size > kMaxGroundSize) throw InvalidInput("ground set size out of range");
  for (int e = 0; e < size; ++e) labels_.push_back(std::to_string(e + 1));
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (size() > kMaxGroundSize) throw InvalidInput("ground set size out of range");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw InvalidInput("ground set labels must be distinct");
}

GroundSet GroundSet::without(Mask removed) const {
  std::vector<std::string> kept;
  for (int e = 0; e < size(); ++e)
    if (!contains(removed, e)) kept.push_back(labels_[static_cast<std::size_t>(e)]);
  return GroundSet(std::move(kept));
}

GroundSet GroundSet::prepended(std::span<const std::string> front) const {
  std::vector<std::string> all(front.begin(), front.end());
  all.insert(all.end(), labels_.begin(), labels_.end());
  return GroundSet(std::move(all));
}

Chirotope::Chirotope(GroundSet ground, int rank, std::vector<Sign> signs)
    : ground_(std::move(ground)), rank_(rank), signs_(std::move(signs)) {
  if (rank_ < 0 || rank_ > size()) throw InvalidInput("rank out of range");
  if (signs_.size() != binomial(size(), rank_))
    throw InvalidInput("chirotope needs C(" + std::to_string(size()) + "," + std::to_string(rank_) + ") = " +
                       std::to_string(binomial(size(), rank_)) + " signs, got " + std::to_string(signs_.size()));
  if (std::all_of(signs_.begin(), signs_.end(), [](Sign s) { return s == Sign::Zero; }))
    throw InvalidInput("chirotope is identically zero");
}

Chirotope Chirotope::from_function(GroundSet ground, int rank, const std::function<Sign(Mask)>& sign) {
  std::vector<Sign> signs;
  signs.reserve(static_cast<std::size_t>(binomial(ground.size(), rank)));
  for_each_subset(ground.size(), rank, [&](Mask m) { signs.push_back(sign(m)); });
  return Chirotope(std::move(ground), rank, std::move(signs));
}

Chirotope Chirotope::from_string(int n, int rank, std::string_view text) {
  std::vector<Sign> signs;
  signs.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '+': signs.push_back(Sign::Positive); break;
      case '-': signs.push_back(Sign::Negative); break;
      case '0': signs.push_back(Sign::Zero); break;
      default: throw InvalidInput(std::string("unexpected character '") + c + "' in chirotope string");
    }
  }
  return Chirotope(GroundSet(n), rank, std::move(signs));
}

Sign Chirotope::at(Mask subset) const {
  if (popcount(subset) != rank_) return Sign::Zero;
  return signs_[lex_rank(subset, size())];
}

Sign Chirotope::operator()(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != rank_) throw InvalidInput("tuple length differs from rank");
  const Sign parity = sorting_sign(tuple);
  if (parity == Sign::Zero) return Sign::Zero;
  return parity * at(mask_of(tuple));
}

std::string Chirotope::sign_string() const {
  std::string out;
  out.reserve(signs_.size());
  for (Sign s : signs_) out += sign_char(s);
  return out;
}

Chirotope Chirotope::negated() const {
  std::vector<Sign> flipped(signs_.size());
  std::transform(signs_.begin(), signs_.end(), flipped.begin(), [](Sign s) { return -s; });
  return Chirotope(ground_, rank_, std::move(flipped));
}

Chirotope Chirotope::relabeled(GroundSet ground) const {
  if (ground.size() != size()) throw InvalidInput("relabeling must keep the ground set size");
  return Chirotope(std::move(ground), rank_, signs_);
}

bool Chirotope::same_oriented_matroid(const Chirotope& other) const {
  return *this == other || *this == other.negated();
}

Chirotope Reorientation::materialize() const {
  return Chirotope::from_function(base_->ground(), base_->rank(), [this](Mask m) { return at(m); });
}

}  // namespace extlift
