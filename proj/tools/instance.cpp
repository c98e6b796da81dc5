#include "instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace extlift::cli {

ParseError::ParseError(int line, int column, const std::string& message)
    : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

bool Instance::is_extension_lifting() const {
  const auto labels = chirotope.ground().labels();
  if (labels.size() < 2 || labels[0] != "g" || labels[1] != "f") return false;
  for (std::size_t i = 2; i < labels.size(); ++i)
    if (labels[i] != std::to_string(i - 1)) return false;
  return true;
}

namespace {

struct Token {
  std::string text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.tokens.push_back({std::string(raw.substr(i, j - i)), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

bool is_integer(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer to_integer(const Token& t, int line) {
  if (!is_integer(t.text)) throw ParseError(line, t.column, "expected an integer, got '" + t.text + "'");
  return Integer(t.text[0] == '+' ? t.text.substr(1) : t.text);
}

int to_small(const Token& t, int line, int lo, int hi, const char* what) {
  const Integer v = to_integer(t, line);
  if (v < lo || v > hi)
    throw ParseError(line, t.column, std::string(what) + " must lie in [" + std::to_string(lo) + ", " +
                                         std::to_string(hi) + "]");
  return static_cast<int>(v);
}

std::uint64_t to_seed(const Token& t, int line) {
  std::string digits = t.text;
  if (digits.rfind("seed:", 0) == 0) digits = digits.substr(5);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(line, t.column, "expected a seed, got '" + t.text + "'");
  try {
    return std::stoull(digits);
  } catch (const std::out_of_range&) {
    throw ParseError(line, t.column, "seed does not fit in 64 bits");
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Line> lines) : lines_(std::move(lines)) {}

  Instance parse() {
    if (lines_.empty()) throw ParseError(1, 1, "empty instance");
    const Line& tag = next();
    expect_arity(tag, 1);
    Instance out;
    if (tag.tokens[0].text == "matrix")
      parse_matrix(out);
    else if (tag.tokens[0].text == "chirotope")
      parse_chirotope(out);
    else
      throw ParseError(tag.number, tag.tokens[0].column, "expected 'matrix' or 'chirotope', got '" + tag.tokens[0].text + "'");
    while (pos_ < lines_.size()) parse_directive(out);
    resolve_signs(out);
    return out;
  }

 private:
  const Line& next() {
    if (pos_ >= lines_.size()) {
      const int last = lines_.empty() ? 1 : lines_.back().number;
      throw ParseError(last + 1, 1, "unexpected end of input");
    }
    return lines_[pos_++];
  }

  static void expect_arity(const Line& l, std::size_t n) {
    if (l.tokens.size() > n) throw ParseError(l.number, l.tokens[n].column, "unexpected '" + l.tokens[n].text + "'");
    if (l.tokens.size() < n) {
      const Token& last = l.tokens.back();
      throw ParseError(l.number, last.column + static_cast<int>(last.text.size()), "missing value");
    }
  }

  void parse_matrix(Instance& out) {
    const Line& dims = next();
    expect_arity(dims, 2);
    const int r = to_small(dims.tokens[0], dims.number, 1, kMaxGroundSize, "rank");
    const int n = to_small(dims.tokens[1], dims.number, 1, kMaxGroundSize, "size");
    IntMatrix a(r, n);
    for (int i = 0; i < r; ++i) {
      const Line& row = next();
      expect_arity(row, static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) a(i, j) = to_integer(row.tokens[static_cast<std::size_t>(j)], row.number);
    }
    try {
      out.matrix.emplace(std::move(a));
    } catch (const InvalidInput& e) {
      throw ParseError(dims.number, 1, e.what());
    }
    out.chirotope = chirotope_from_matrix(*out.matrix);
  }

  void parse_chirotope(Instance& out) {
    std::optional<std::vector<std::string>> labels;
    int labels_line = 0;
    if (pos_ < lines_.size() && lines_[pos_].tokens[0].text == "elements") {
      const Line& l = next();
      labels_line = l.number;
      labels.emplace();
      for (std::size_t i = 1; i < l.tokens.size(); ++i) labels->push_back(l.tokens[i].text);
    }
    const Line& dims = next();
    expect_arity(dims, 2);
    const int n = to_small(dims.tokens[0], dims.number, 1, kMaxGroundSize, "size");
    const int r = to_small(dims.tokens[1], dims.number, 0, n, "rank");
    const Line& body = next();
    expect_arity(body, 1);
    const Token& s = body.tokens[0];
    for (std::size_t i = 0; i < s.text.size(); ++i)
      if (s.text[i] != '+' && s.text[i] != '-' && s.text[i] != '0')
        throw ParseError(body.number, s.column + static_cast<int>(i), std::string("unexpected sign character '") + s.text[i] + "'");
    if (s.text.size() != binomial(n, r))
      throw ParseError(body.number, s.column,
                       "expected " + std::to_string(binomial(n, r)) + " signs, got " + std::to_string(s.text.size()));
    try {
      out.chirotope = Chirotope::from_string(n, r, s.text);
      if (labels) {
        if (static_cast<int>(labels->size()) != n)
          throw ParseError(labels_line, 1, "expected " + std::to_string(n) + " element labels");
        out.chirotope = out.chirotope.relabeled(GroundSet(*labels));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InvalidInput& e) {
      throw ParseError(body.number, s.column, e.what());
    }
  }

  void parse_directive(Instance& out) {
    const Line& l = next();
    const std::string& head = l.tokens[0].text;
    if (head == "compliant:") {
      expect_arity(l, 2);
      if (l.tokens[1].text != "true" && l.tokens[1].text != "false")
        throw ParseError(l.number, l.tokens[1].column, "expected true or false");
      out.compliant_attested = l.tokens[1].text == "true";
      return;
    }
    const bool extension = head == "extension";
    if (!extension && head != "lifting")
      throw ParseError(l.number, l.tokens[0].column, "unknown directive '" + head + "'");
    auto& slot = extension ? out.extension : out.lifting;
    if (slot) throw ParseError(l.number, l.tokens[0].column, head + " given twice");
    if (l.tokens.size() < 2) throw ParseError(l.number, l.tokens[0].column + static_cast<int>(head.size()), "missing kind");
    const Token& kind = l.tokens[1];
    SignatureSpec spec;
    if (kind.text == (extension ? "vector" : "heights")) {
      spec.kind = SignatureSpec::Kind::Values;
      if (l.tokens.size() < 3) throw ParseError(l.number, kind.column + static_cast<int>(kind.text.size()), "missing values");
      for (std::size_t i = 2; i < l.tokens.size(); ++i) spec.values.push_back(to_integer(l.tokens[i], l.number));
    } else if (kind.text == "seed" || kind.text.rfind("seed:", 0) == 0) {
      spec.kind = SignatureSpec::Kind::Seed;
      if (kind.text == "seed") {
        expect_arity(l, 3);
        spec.seed = to_seed(l.tokens[2], l.number);
      } else {
        expect_arity(l, 2);
        spec.seed = to_seed(kind, l.number);
      }
    } else if (kind.text == "signs") {
      expect_arity(l, 2);
      spec.kind = SignatureSpec::Kind::Signs;
      std::vector<Line> block;
      for (;;) {
        const Line& entry = next();
        if (entry.tokens[0].text == "end") {
          expect_arity(entry, 1);
          break;
        }
        block.push_back(entry);
      }
      (extension ? extension_block_ : lifting_block_) = std::move(block);
    } else {
      throw ParseError(l.number, kind.column,
                       std::string("expected '") + (extension ? "vector" : "heights") + "', 'seed' or 'signs'");
    }
    slot = std::move(spec);
  }

  // Signed sets refer to element labels, so they are read once the ground set
  // is known.
  void resolve_signs(Instance& out) {
    const auto labels = out.chirotope.ground().labels();
    auto read = [&](const std::vector<Line>& block, SignatureSpec& spec) {
      for (const Line& l : block) {
        std::size_t colon = 0;
        while (colon < l.tokens.size() && l.tokens[colon].text != ":") ++colon;
        if (colon == l.tokens.size()) throw ParseError(l.number, l.tokens.back().column, "expected ': <sign>'");
        if (colon + 2 != l.tokens.size())
          throw ParseError(l.number, l.tokens[colon].column, "expected exactly one sign after ':'");
        SignedSet set(out.chirotope.size(), 0, 0);
        for (std::size_t i = 0; i < colon; ++i) {
          const Token& t = l.tokens[i];
          if (t.text.size() < 2 || (t.text[0] != '+' && t.text[0] != '-'))
            throw ParseError(l.number, t.column, "expected a signed element such as +1 or -2");
          const auto it = std::find(labels.begin(), labels.end(), t.text.substr(1));
          if (it == labels.end()) throw ParseError(l.number, t.column + 1, "unknown element '" + t.text.substr(1) + "'");
          const int e = static_cast<int>(it - labels.begin());
          if (set[e] != Sign::Zero) throw ParseError(l.number, t.column, "element repeated");
          set.set(e, t.text[0] == '+' ? Sign::Positive : Sign::Negative);
        }
        const Token& v = l.tokens[colon + 1];
        if (v.text != "+" && v.text != "-") throw ParseError(l.number, v.column, "expected + or -");
        spec.signs.emplace_back(set, v.text == "+" ? Sign::Positive : Sign::Negative);
      }
    };
    if (out.extension && out.extension->kind == SignatureSpec::Kind::Signs) read(extension_block_, *out.extension);
    if (out.lifting && out.lifting->kind == SignatureSpec::Kind::Signs) read(lifting_block_, *out.lifting);
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::vector<Line> extension_block_;
  std::vector<Line> lifting_block_;
};

}  // namespace

Instance parse_instance(std::string_view text) { return Parser(tokenize(text)).parse(); }

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string format_chirotope(const Chirotope& m, bool compliant_attestation) {
  std::ostringstream out;
  out << "chirotope\n";
  if (!(m.ground() == GroundSet(m.size()))) {
    out << "elements";
    for (const auto& l : m.ground().labels()) out << ' ' << l;
    out << '\n';
  }
  out << m.size() << ' ' << m.rank() << '\n' << m.sign_string() << '\n';
  if (compliant_attestation) out << "compliant: true\n";
  return out.str();
}

std::vector<Integer> parse_integers(std::string_view text) {
  std::vector<Integer> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (!is_integer(token)) throw InvalidInput("expected an integer, got '" + token + "'");
    out.emplace_back(token[0] == '+' ? token.substr(1) : token);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      token += c;
  }
  flush();
  if (out.empty()) throw InvalidInput("expected a list of integers");
  return out;
}

}  // namespace extlift::cli
