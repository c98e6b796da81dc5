#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "extlift/active_bijection.hpp"
#include "extlift/extension_lifting.hpp"
#include "extlift/oriented_matroid.hpp"
#include "extlift/verify.hpp"

namespace extlift::cli {

namespace {

using nlohmann::json;

std::vector<std::string> labels_of(Mask m, std::span<const std::string> labels) {
  std::vector<std::string> out;
  for (int e : elements_of(m)) out.push_back(labels[static_cast<std::size_t>(e)]);
  return out;
}

std::string set_text(Mask m, std::span<const std::string> labels) {
  if (m == 0) return "-";
  std::string out;
  for (const auto& l : labels_of(m, labels)) {
    if (!out.empty()) out += ' ';
    out += l;
  }
  return out;
}

json signed_json(const SignedSet& s, std::span<const std::string> labels) {
  return {{"positive", labels_of(s.positive(), labels)}, {"negative", labels_of(s.negative(), labels)}};
}

json chirotope_json(const Chirotope& m) {
  const auto labels = m.ground().labels();
  return {{"elements", std::vector<std::string>(labels.begin(), labels.end())},
          {"size", m.size()},
          {"rank", m.rank()},
          {"signs", m.sign_string()}};
}

Mask parse_subset(const std::string& text, std::span<const std::string> labels) {
  Mask out = 0;
  std::string token;
  auto flush = [&] {
    if (token.empty() || token == "-") {
      token.clear();
      return;
    }
    const auto it = std::find(labels.begin(), labels.end(), token);
    if (it == labels.end()) throw InvalidInput("unknown element '" + token + "'");
    out |= bit(static_cast<int>(it - labels.begin()));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ')
      flush();
    else
      token += c;
  }
  flush();
  return out;
}

// Everything a command might need, built on first use. For an extension-lifting
// instance M and the signatures are recovered from it; otherwise Mbar is the
// compliant one.
class Context {
 public:
  // `structural` commands read the chirotope as given, even when it is an
  // extension-lifting.
  Context(const Instance& instance, const Options& options, bool structural)
      : instance_(instance), options_(options) {
    if (!structural && instance.is_extension_lifting()) {
      given_.emplace(instance.chirotope);
      m_ = given_->base();
    } else {
      m_ = instance.chirotope;
    }
  }

  const Chirotope& m() const { return *m_; }
  bool given_extension_lifting() const { return given_.has_value(); }

  const ExtensionSignature& sigma_star() {
    if (!sigma_star_) {
      if (given_) {
        load_from_given();
      } else {
        sigma_star_.emplace(resolve_extension());
      }
    }
    return *sigma_star_;
  }

  const LiftingSignature& sigma() {
    if (!sigma_) {
      if (given_) {
        load_from_given();
      } else {
        sigma_.emplace(resolve_lifting());
      }
    }
    return *sigma_;
  }

  const ExtensionLifting& mbar() {
    if (given_) return *given_;
    if (!composed_) composed_.emplace(compose_compliant(m(), sigma_star(), sigma()));
    return *composed_;
  }

  std::span<const std::string> labels() const { return m_->ground().labels(); }
  std::span<const std::string> mbar_labels() {
    if (mbar_labels_.empty()) {
      const std::string front[] = {"g", "f"};
      const auto ground = m_->ground().prepended(front);
      mbar_labels_.assign(ground.labels().begin(), ground.labels().end());
    }
    return mbar_labels_;
  }

 private:
  void load_from_given() {
    auto [ext, lif] = signatures_of(*given_);
    sigma_star_.emplace(std::move(ext));
    sigma_.emplace(std::move(lif));
  }

  const RealizationMatrix& matrix(const char* what) const {
    if (!instance_.matrix) throw InvalidInput(std::string(what) + " needs a matrix instance");
    return *instance_.matrix;
  }

  std::optional<SignatureSpec> pick(const std::optional<std::string>& flag, const std::optional<SignatureSpec>& in_file) const {
    if (flag) {
      SignatureSpec spec;
      spec.kind = SignatureSpec::Kind::Values;
      spec.values = parse_integers(*flag);
      return spec;
    }
    if (in_file) return in_file;
    if (options_.seed) {
      SignatureSpec spec;
      spec.kind = SignatureSpec::Kind::Seed;
      spec.seed = *options_.seed;
      return spec;
    }
    return std::nullopt;
  }

  ExtensionSignature resolve_extension() const {
    const auto spec = pick(options_.vector, instance_.extension);
    if (!spec) throw InvalidInput("no extension signature: pass --vector or --seed, or add an 'extension' line");
    switch (spec->kind) {
      case SignatureSpec::Kind::Values: {
        const auto& a = matrix("an extension vector");
        if (static_cast<int>(spec->values.size()) != a.rank())
          throw InvalidInput("extension vector needs " + std::to_string(a.rank()) + " coordinates");
        return localization_from_vector(a, GenericVector{spec->values});
      }
      case SignatureSpec::Kind::Seed: {
        const auto& a = matrix("a seeded extension");
        return localization_from_vector(a, sample_generic_vector(a, spec->seed));
      }
      case SignatureSpec::Kind::Signs:
        return ExtensionSignature(m(), spec->signs);
    }
    throw InvalidInput("unreachable");
  }

  LiftingSignature resolve_lifting() const {
    const auto spec = pick(options_.heights, instance_.lifting);
    if (!spec) throw InvalidInput("no lifting signature: pass --heights or --seed, or add a 'lifting' line");
    switch (spec->kind) {
      case SignatureSpec::Kind::Values: {
        const auto& a = matrix("a height vector");
        if (static_cast<int>(spec->values.size()) != a.size())
          throw InvalidInput("height vector needs " + std::to_string(a.size()) + " entries");
        return lifting_from_heights(a, HeightVector{spec->values});
      }
      case SignatureSpec::Kind::Seed: {
        const auto& a = matrix("a seeded lifting");
        return lifting_from_heights(a, sample_generic_heights(a, spec->seed));
      }
      case SignatureSpec::Kind::Signs:
        return LiftingSignature(m(), spec->signs);
    }
    throw InvalidInput("unreachable");
  }

  const Instance& instance_;
  const Options& options_;
  std::optional<Chirotope> m_;
  std::optional<ExtensionLifting> given_;
  std::optional<ExtensionLifting> composed_;
  std::optional<ExtensionSignature> sigma_star_;
  std::optional<LiftingSignature> sigma_;
  std::vector<std::string> mbar_labels_;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string text() const {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
      out << '\n';
    };
    if (!header.empty()) line(header);
    for (const auto& r : rows) line(r);
    return out.str();
  }
};

CommandResult ok(std::string output) { return {std::move(output), {}, 0}; }

CommandResult cmd_sets(Context& ctx, const Options& opt, bool circuit_side) {
  const auto sets = circuit_side ? circuits(ctx.m()) : cocircuits(ctx.m());
  if (opt.json) {
    json list = json::array();
    for (const auto& s : sets) list.push_back(signed_json(s, ctx.labels()));
    return ok(json{{circuit_side ? "circuits" : "cocircuits", list}}.dump(2) + "\n");
  }
  std::string out;
  for (const auto& s : sets) out += s.to_string(ctx.labels()) + "\n";
  return ok(out);
}

CommandResult cmd_bases(Context& ctx, const Options& opt) {
  const auto all = bases(ctx.m());
  if (opt.json) {
    json list = json::array();
    for (Mask b : all) list.push_back(labels_of(b, ctx.labels()));
    return ok(json{{"bases", list}}.dump(2) + "\n");
  }
  std::string out;
  for (Mask b : all) out += set_text(b, ctx.labels()) + "\n";
  return ok(out);
}

CommandResult chirotope_output(const Chirotope& m, const Options& opt, bool attest = false) {
  if (opt.json) {
    json j = chirotope_json(m);
    if (attest) j["compliant"] = true;
    return ok(j.dump(2) + "\n");
  }
  return ok(format_chirotope(m, attest));
}

CommandResult cmd_extlift(Context& ctx, const Options& opt) {
  const ExtensionLifting& mbar = ctx.mbar();
  const bool compliant = is_compliant(mbar);
  const Chirotope labelled = mbar.chirotope().relabeled(GroundSet(std::vector<std::string>(ctx.mbar_labels().begin(), ctx.mbar_labels().end())));
  if (opt.json) {
    json j = chirotope_json(labelled);
    j["compliant"] = compliant;
    return ok(j.dump(2) + "\n");
  }
  std::string out = format_chirotope(labelled);
  out += compliant ? "compliant: true\n" : "compliant: false\n";
  return ok(out);
}

CommandResult cmd_bijection(Context& ctx, const Options& opt) {
  const auto& mbar = ctx.mbar();
  const auto& ss = ctx.sigma_star();
  const auto& s = ctx.sigma();
  constexpr Mask kG = bit(ExtensionLifting::kG);
  Table table{{"basis", "reorientation", "optimal_basis", "verified"}, {}};
  json rows = json::array();
  for (Mask b : bases(ctx.m())) {
    const Mask a = reorientation_of_basis(ctx.m(), ss, s, b);
    const Mask opt_basis = optimal_basis(mbar, a);
    const bool verified =
        opt_basis == (ExtensionLifting::lift_mask(b) | kG) && basis_of_reorientation(mbar, a) == b;
    table.rows.push_back({set_text(b, ctx.labels()), set_text(a, ctx.labels()), set_text(opt_basis, ctx.mbar_labels()),
                          verified ? "true" : "false"});
    rows.push_back({{"basis", labels_of(b, ctx.labels())},
                    {"reorientation", labels_of(a, ctx.labels())},
                    {"optimal_basis", labels_of(opt_basis, ctx.mbar_labels())},
                    {"verified", verified}});
  }
  if (opt.json) return ok(json{{"bijection", rows}}.dump(2) + "\n");
  return ok(table.text());
}

CommandResult cmd_inverse(Context& ctx, const Options& opt) {
  const auto& mbar = ctx.mbar();
  std::vector<Mask> targets;
  if (opt.reorientation) {
    targets.push_back(parse_subset(*opt.reorientation, ctx.labels()));
    if (!is_bounded_region(mbar, targets.front()))
      throw InvalidInput("reorientation " + set_text(targets.front(), ctx.labels()) + " is not compatible");
  } else {
    targets = bounded_regions(mbar);
  }
  Table table{{"reorientation", "basis"}, {}};
  json rows = json::array();
  for (Mask a : targets) {
    const Mask b = basis_of_reorientation(mbar, a);
    table.rows.push_back({set_text(a, ctx.labels()), set_text(b, ctx.labels())});
    rows.push_back({{"reorientation", labels_of(a, ctx.labels())}, {"basis", labels_of(b, ctx.labels())}});
  }
  if (opt.json) return ok(json{{"inverse", rows}}.dump(2) + "\n");
  return ok(table.text());
}

CommandResult cmd_compatible(Context& ctx, const Options& opt) {
  const auto all = compatible_reorientations(ctx.m(), ctx.sigma_star(), ctx.sigma());
  if (opt.json) {
    json list = json::array();
    for (Mask a : all) list.push_back(labels_of(a, ctx.labels()));
    return ok(json{{"compatible", list}}.dump(2) + "\n");
  }
  std::string out;
  for (Mask a : all) out += set_text(a, ctx.labels()) + "\n";
  return ok(out);
}

CommandResult cmd_regions(Context& ctx, const Options& opt) {
  const auto& mbar = ctx.mbar();
  Table table{{"region", "optimal_basis"}, {}};
  json rows = json::array();
  for (Mask a : bounded_regions(mbar)) {
    const Mask b = optimal_basis(mbar, a);
    table.rows.push_back({set_text(a, ctx.labels()), set_text(b, ctx.mbar_labels())});
    rows.push_back({{"region", labels_of(a, ctx.labels())}, {"optimal_basis", labels_of(b, ctx.mbar_labels())}});
  }
  if (opt.json) return ok(json{{"regions", rows}}.dump(2) + "\n");
  return ok(table.text());
}

CommandResult cmd_count(Context& ctx, const Options& opt) {
  const std::size_t nb = bases(ctx.m()).size();
  const std::size_t nc = compatible_reorientations(ctx.m(), ctx.sigma_star(), ctx.sigma()).size();
  const std::size_t nr = bounded_regions(ctx.mbar()).size();
  if (opt.json) return ok(json{{"bases", nb}, {"compatible", nc}, {"regions", nr}}.dump(2) + "\n");
  return ok("bases\t" + std::to_string(nb) + "\ncompatible\t" + std::to_string(nc) + "\nregions\t" + std::to_string(nr) + "\n");
}

CommandResult report_output(const Report& report, const Options& opt) {
  CommandResult out;
  out.exit_code = report.passed() ? 0 : 1;
  if (opt.json) {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
    out.output = json{{"passed", report.passed()}, {"checks", checks}}.dump(2) + "\n";
    return out;
  }
  out.output = report.to_text();
  out.output += std::to_string(report.checks.size()) + " checks, " + std::to_string(report.failures().size()) + " failed\n";
  return out;
}

CommandResult cmd_verify(const Instance& instance, const Options& opt) {
  Report report;
  if (auto bad = find_axiom_violation(instance.chirotope)) {
    report.checks.push_back({"chirotope axioms", false, *bad});
    return report_output(report, opt);
  }
  if (instance.is_extension_lifting()) {
    std::optional<ExtensionLifting> mbar;
    try {
      mbar.emplace(instance.chirotope);
    } catch (const InvariantViolation& e) {
      report.checks.push_back({"extension-lifting invariants", false, e.what()});
      return report_output(report, opt);
    }
    report = verify_extension_lifting(*mbar);
    if (instance.compliant_attested && !is_compliant(*mbar))
      report.checks.push_back({"compliance attestation", false, "file claims compliant: true"});
    return report_output(report, opt);
  }
  Context ctx(instance, opt, false);
  return report_output(verify_all(ctx.m(), ctx.sigma_star(), ctx.sigma()), opt);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"bases",  "circuits",  "cocircuits", "dual",       "extend",
                                                 "lift",   "extlift",   "bijection",  "inverse",    "compatible",
                                                 "regions", "verify",   "count"};
  return names;
}

CommandResult run_command(const std::string& name, const Instance& instance, const Options& options) {
  try {
    if (options.max_n < 1 || options.max_n > kHardMaxN)
      throw InvalidInput("--max-n must lie in [1, " + std::to_string(kHardMaxN) + "]");
    const bool structural = name == "bases" || name == "circuits" || name == "cocircuits" || name == "dual";
    Context ctx(instance, options, structural);
    if (ctx.m().size() > options.max_n)
      throw InvalidInput("instance has " + std::to_string(ctx.m().size()) + " elements, above --max-n " +
                         std::to_string(options.max_n));
    if (name == "bases") return cmd_bases(ctx, options);
    if (name == "circuits") return cmd_sets(ctx, options, true);
    if (name == "cocircuits") return cmd_sets(ctx, options, false);
    if (name == "dual") return chirotope_output(dual(ctx.m()), options);
    if (name == "extend") return chirotope_output(extend(ctx.m(), ctx.sigma_star()), options);
    if (name == "lift") return chirotope_output(lift(ctx.m(), ctx.sigma()), options);
    if (name == "extlift") return cmd_extlift(ctx, options);
    if (name == "bijection") return cmd_bijection(ctx, options);
    if (name == "inverse") return cmd_inverse(ctx, options);
    if (name == "compatible") return cmd_compatible(ctx, options);
    if (name == "regions") return cmd_regions(ctx, options);
    if (name == "verify") return cmd_verify(instance, options);
    if (name == "count") return cmd_count(ctx, options);
    throw InvalidInput("unknown command '" + name + "'");
  } catch (const std::exception& e) {
    return {{}, e.what(), 2};
  }
}

}  // namespace extlift::cli
