#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extlift/chirotope.hpp"
#include "extlift/errors.hpp"
#include "extlift/realizable.hpp"
#include "extlift/signature.hpp"

namespace extlift::cli {

class ParseError : public InvalidInput {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// How a signature is supplied: a realization vector (v for sigma*, heights for
// sigma), a sampling seed, or an explicit list of signed sets with values.
struct SignatureSpec {
  enum class Kind { Values, Seed, Signs };
  Kind kind = Kind::Seed;
  std::vector<Integer> values;
  std::uint64_t seed = 0;
  std::vector<std::pair<SignedSet, Sign>> signs;
};

/*
 * Instance file:
 *
 *   # comment
 *   matrix                 | chirotope
 *   r n                    | elements g f 1 2 3 4   (optional labels)
 *   r rows of n integers   | n r
 *                          | sign string in lex order of r-subsets
 *   extension vector 1 1   | extension seed 3     | extension signs ... end
 *   lifting heights 0 1 0 1 | lifting seed 3      | lifting signs ... end
 *   compliant: true        (optional, written by extlift)
 *
 * A signs block lists one signed set per line, "+1 -2 : +", and ends with
 * "end". A chirotope whose elements are labelled g f 1 .. n is read as an
 * extension-lifting.
 */
struct Instance {
  std::optional<RealizationMatrix> matrix;
  Chirotope chirotope{GroundSet(1), 1, {Sign::Positive}};
  std::optional<SignatureSpec> extension;
  std::optional<SignatureSpec> lifting;
  bool compliant_attested = false;

  bool is_extension_lifting() const;
};

Instance parse_instance(std::string_view text);
Instance read_instance(const std::string& path);

/// The chirotope file form; labels other than 1..n are written on an
/// "elements" line.
std::string format_chirotope(const Chirotope& m, bool compliant_attestation = false);

/// Comma or space separated integers, e.g. "1,2" or "0 1 0 1".
std::vector<Integer> parse_integers(std::string_view text);

}  // namespace extlift::cli
