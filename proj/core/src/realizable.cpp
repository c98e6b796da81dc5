#include "extlift/realizable.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "extlift/errors.hpp"
#include "extlift/oriented_matroid.hpp"

namespace extlift {

namespace {

Sign sign_of(const Integer& x) { return x > 0 ? Sign::Positive : (x < 0 ? Sign::Negative : Sign::Zero); }

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Reduced row echelon form over the rationals; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Rational>>& m, int cols) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(m.size());
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = row;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    const Rational lead = m[row][col];
    for (auto& x : m[row]) x /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational factor = m[i][col];
      for (int j = 0; j < cols; ++j) m[i][j] -= factor * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rational>> to_rational(const IntMatrix& m) {
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(m.rows()), std::vector<Rational>(static_cast<std::size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i][j] = Rational(m(i, j));
  return out;
}

std::vector<Integer> primitive(const std::vector<Rational>& v) {
  Integer lcm = 1;
  for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(x)));
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& x : v) {
    out.push_back(Integer(boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x))));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

SignedSet signs_of(std::span<const Integer> values) {
  std::vector<Sign> s;
  for (const auto& x : values) s.push_back(sign_of(x));
  return SignedSet::from_signs(s);
}

std::vector<Integer> evaluate_functional(const RealizationMatrix& a, std::span<const Integer> c) {
  std::vector<Integer> out;
  for (int e = 0; e < a.size(); ++e) out.push_back(dot(c, a.column(e)));
  return out;
}

std::vector<std::vector<Integer>> all_cocircuit_functionals(const RealizationMatrix& a) {
  std::vector<std::vector<Integer>> out;
  for (const auto& y : oracle_cocircuits(a)) out.push_back(cocircuit_functional(a, y));
  return out;
}

std::vector<std::vector<Integer>> all_circuit_coefficients(const RealizationMatrix& a) {
  std::vector<std::vector<Integer>> out;
  for (const auto& c : oracle_circuits(a)) out.push_back(circuit_coefficients(a, c));
  return out;
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols, std::vector<Integer> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != static_cast<std::size_t>(rows * cols)) throw InvalidInput("matrix entry count mismatch");
}

IntMatrix IntMatrix::columns(std::span<const int> columns) const {
  IntMatrix out(rows_, static_cast<int>(columns.size()));
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) out(i, static_cast<int>(j)) = (*this)(i, columns[j]);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Integer determinant(const IntMatrix& square) {
  if (square.rows() != square.cols()) throw InvalidInput("determinant of a non-square matrix");
  const int k = square.rows();
  if (k == 0) return 1;
  IntMatrix m = square;
  Integer prev = 1;
  int sign = 1;
  for (int i = 0; i < k - 1; ++i) {
    if (m(i, i) == 0) {
      int p = i + 1;
      while (p < k && m(p, i) == 0) ++p;
      if (p == k) return 0;
      for (int j = 0; j < k; ++j) std::swap(m(i, j), m(p, j));
      sign = -sign;
    }
    for (int r = i + 1; r < k; ++r) {
      for (int c = i + 1; c < k; ++c) m(r, c) = (m(r, c) * m(i, i) - m(r, i) * m(i, c)) / prev;
    }
    prev = m(i, i);
  }
  return sign * m(k - 1, k - 1);
}

int matrix_rank(const IntMatrix& m) {
  auto q = to_rational(m);
  return static_cast<int>(rref(q, m.cols()).size());
}

std::vector<std::vector<Integer>> kernel(const IntMatrix& m) {
  auto q = to_rational(m);
  const auto pivots = rref(q, m.cols());
  std::vector<std::vector<Integer>> out;
  for (int free = 0; free < m.cols(); ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> x(static_cast<std::size_t>(m.cols()), Rational(0));
    x[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[static_cast<std::size_t>(pivots[r])] = -q[r][free];
    out.push_back(primitive(x));
  }
  return out;
}

RealizationMatrix::RealizationMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.cols() > kMaxGroundSize) throw InvalidInput("too many columns");
  const int rank = matrix_rank(entries_);
  if (rank != entries_.rows())
    throw InvalidInput("matrix has " + std::to_string(entries_.rows()) + " rows but column rank " + std::to_string(rank));
}

std::vector<Integer> RealizationMatrix::column(int e) const {
  std::vector<Integer> out;
  for (int i = 0; i < rank(); ++i) out.push_back(entries_(i, e));
  return out;
}

Chirotope chirotope_from_matrix(const RealizationMatrix& a) { return chirotope_from_matrix(a, GroundSet(a.size())); }

Chirotope chirotope_from_matrix(const RealizationMatrix& a, GroundSet ground) {
  if (ground.size() != a.size()) throw InvalidInput("ground set does not match the matrix");
  return Chirotope::from_function(std::move(ground), a.rank(), [&](Mask t) {
    const auto cols = elements_of(t);
    return sign_of(determinant(a.entries().columns(cols)));
  });
}

std::vector<SignedSet> oracle_circuits(const RealizationMatrix& a) {
  std::set<SignedSet> found;
  const int n = a.size();
  for (int k = 1; k <= std::min(n, a.rank() + 1); ++k)
    for_each_subset(n, k, [&](Mask s) {
      const auto cols = elements_of(s);
      const auto ker = kernel(a.entries().columns(cols));
      if (ker.size() != 1) return;
      if (std::any_of(ker[0].begin(), ker[0].end(), [](const Integer& x) { return x == 0; })) return;
      SignedSet c(n, 0, 0);
      for (std::size_t i = 0; i < cols.size(); ++i) c.set(cols[i], sign_of(ker[0][i]));
      found.insert(c.canonical().first);
    });
  return {found.begin(), found.end()};
}

std::vector<SignedSet> oracle_cocircuits(const RealizationMatrix& a) {
  std::set<SignedSet> found;
  const int r = a.rank();
  if (r == 0) return {};
  for_each_subset(a.size(), r - 1, [&](Mask t) {
    const auto cols = elements_of(t);
    const auto ker = kernel(a.entries().columns(cols).transposed());
    if (ker.size() != 1) return;
    found.insert(signs_of(evaluate_functional(a, ker[0])).canonical().first);
  });
  return {found.begin(), found.end()};
}

std::vector<Integer> cocircuit_functional(const RealizationMatrix& a, const SignedSet& y) {
  if (y.size() != a.size()) throw InvalidInput("signed set lives on a different ground set");
  std::vector<int> span;
  for (int e : elements_of(full_mask(a.size()) & ~y.support())) {
    auto trial = span;
    trial.push_back(e);
    if (matrix_rank(a.entries().columns(trial)) == static_cast<int>(trial.size())) span = trial;
    if (static_cast<int>(span.size()) == a.rank() - 1) break;
  }
  if (static_cast<int>(span.size()) != a.rank() - 1) throw InvalidInput(y.to_string() + " is not a cocircuit");
  auto ker = kernel(a.entries().columns(span).transposed());
  auto& c = ker.at(0);
  const SignedSet got = signs_of(evaluate_functional(a, c));
  if (got == -y) {
    for (auto& x : c) x = -x;
  } else if (got != y) {
    throw InvalidInput(y.to_string() + " is not a cocircuit");
  }
  return c;
}

std::vector<Integer> circuit_coefficients(const RealizationMatrix& a, const SignedSet& c) {
  if (c.size() != a.size()) throw InvalidInput("signed set lives on a different ground set");
  const auto cols = elements_of(c.support());
  const auto ker = kernel(a.entries().columns(cols));
  if (ker.size() != 1) throw InvalidInput(c.to_string() + " is not a circuit");
  std::vector<Integer> u(static_cast<std::size_t>(a.size()), Integer(0));
  for (std::size_t i = 0; i < cols.size(); ++i) u[static_cast<std::size_t>(cols[i])] = ker[0][i];
  const SignedSet got = signs_of(u);
  if (got == -c) {
    for (auto& x : u) x = -x;
  } else if (got != c) {
    throw InvalidInput(c.to_string() + " is not a circuit");
  }
  return u;
}

ExtensionSignature localization_from_vector(const RealizationMatrix& a, const GenericVector& v) {
  if (static_cast<int>(v.coords.size()) != a.rank()) throw InvalidInput("extension vector length differs from rank");
  return ExtensionSignature::from_function(chirotope_from_matrix(a), [&](const SignedSet& y) {
    const Sign s = sign_of(dot(cocircuit_functional(a, y), v.coords));
    if (s == Sign::Zero) throw NotGeneric("extension vector lies on the hyperplane of cocircuit " + y.to_string(), y);
    return s;
  });
}

LiftingSignature lifting_from_heights(const RealizationMatrix& a, const HeightVector& h) {
  if (static_cast<int>(h.heights.size()) != a.size()) throw InvalidInput("height vector length differs from element count");
  return LiftingSignature::from_function(chirotope_from_matrix(a), [&](const SignedSet& c) {
    const Sign s = -sign_of(dot(circuit_coefficients(a, c), h.heights));
    if (s == Sign::Zero) throw NotGeneric("heights are annihilated by circuit " + c.to_string(), c);
    return s;
  });
}

namespace {

constexpr int kAttemptsPerRadius = 32;

std::vector<Integer> sample_avoiding(std::size_t length, const std::vector<std::vector<Integer>>& forms,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::uint64_t radius = 2;; radius *= 2) {
    for (int attempt = 0; attempt < kAttemptsPerRadius; ++attempt) {
      std::vector<Integer> x;
      for (std::size_t i = 0; i < length; ++i)
        x.emplace_back(static_cast<std::int64_t>(rng() % (2 * radius + 1)) - static_cast<std::int64_t>(radius));
      if (std::all_of(forms.begin(), forms.end(), [&](const auto& f) { return dot(f, x) != 0; })) return x;
    }
  }
}

}  // namespace

GenericVector sample_generic_vector(const RealizationMatrix& a, std::uint64_t seed) {
  return {sample_avoiding(static_cast<std::size_t>(a.rank()), all_cocircuit_functionals(a), seed)};
}

HeightVector sample_generic_heights(const RealizationMatrix& a, std::uint64_t seed) {
  return {sample_avoiding(static_cast<std::size_t>(a.size()), all_circuit_coefficients(a), seed)};
}

RealizationMatrix lifted_matrix(const RealizationMatrix& a, const GenericVector& v, const HeightVector& h,
                                const Integer& t) {
  const int r = a.rank();
  const int n = a.size();
  if (static_cast<int>(v.coords.size()) != r) throw InvalidInput("extension vector length differs from rank");
  if (static_cast<int>(h.heights.size()) != n) throw InvalidInput("height vector length differs from element count");
  IntMatrix m(r + 1, n + 2);
  m(0, 0) = 1;
  m(0, 1) = t;
  for (int i = 0; i < r; ++i) m(i + 1, 1) = v.coords[static_cast<std::size_t>(i)];
  for (int e = 0; e < n; ++e) {
    m(0, e + 2) = h.heights[static_cast<std::size_t>(e)];
    for (int i = 0; i < r; ++i) m(i + 1, e + 2) = a.entries()(i, e);
  }
  return RealizationMatrix(std::move(m));
}

ExtensionLiftingRealization realize_extension_lifting(const RealizationMatrix& a, const GenericVector& v,
                                                      const HeightVector& h) {
  // Both calls throw NotGeneric with a witness when the data is degenerate.
  localization_from_vector(a, v);
  lifting_from_heights(a, h);

  // Cocircuit functionals c = (c_g; c') of the lifted configuration without f.
  // f = (t; v) is generic iff c_g t + c'.v != 0 for all c, and compliant iff
  // that value has the sign of c_g whenever c_g != 0. Both hold once
  // t > max |c'.v|, which bounds the search.
  const RealizationMatrix with_f = lifted_matrix(a, v, h, 0);
  std::vector<int> without_f_cols{0};
  for (int e = 0; e < a.size(); ++e) without_f_cols.push_back(e + 2);
  const RealizationMatrix lifted(with_f.entries().columns(without_f_cols));
  const auto functionals = all_cocircuit_functionals(lifted);

  Integer bound = 0;
  for (const auto& c : functionals) {
    const Integer off_g = dot(std::span<const Integer>(c).subspan(1), v.coords);
    if (c[0] != 0) bound = std::max(bound, Integer(abs(off_g)));
  }
  for (Integer t = 1;; t *= 2) {
    const bool ok = std::all_of(functionals.begin(), functionals.end(), [&](const auto& c) {
      const Integer value = c[0] * t + dot(std::span<const Integer>(c).subspan(1), v.coords);
      return value != 0 && (c[0] == 0 || sign_of(value) == sign_of(c[0]));
    });
    if (ok) return {lifted_matrix(a, v, h, t), t};
    if (t > 2 * bound + 2) throw InvariantViolation("compliant position search did not terminate within its bound");
  }
}

GroundSet extension_lifting_ground(int n) {
  std::vector<std::string> labels{"g", "f"};
  for (int e = 0; e < n; ++e) labels.push_back(std::to_string(e + 1));
  return GroundSet(std::move(labels));
}

}  // namespace extlift
