#include "extlift/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "extlift/active_bijection.hpp"
#include "extlift/errors.hpp"
#include "extlift/oriented_matroid.hpp"

namespace extlift {

namespace {

constexpr Mask kG = bit(ExtensionLifting::kG);
constexpr Mask kF = bit(ExtensionLifting::kF);

std::string set_string(Mask m, std::span<const std::string> labels) {
  std::string out = "{";
  for (int e : elements_of(m)) {
    if (out.size() > 1) out += ',';
    out += labels[static_cast<std::size_t>(e)];
  }
  return out + "}";
}

std::string base_set(Mask m) {
  std::string out = "{";
  for (int e : elements_of(m)) {
    if (out.size() > 1) out += ',';
    out += std::to_string(e + 1);
  }
  return out + "}";
}

// Runs `body`, which returns an empty string on success or a witness.
Check run(std::string name, const std::function<std::string()>& body) {
  Check c{std::move(name), true, {}};
  try {
    c.witness = body();
  } catch (const std::exception& ex) {
    c.witness = std::string("exception: ") + ex.what();
  }
  c.passed = c.witness.empty();
  return c;
}

std::string orthogonality_witness(const Chirotope& m) {
  const auto labels = m.ground().labels();
  const Mask all = full_mask(m.size());
  for (Mask b : bases(m))
    for (int x : elements_of(b)) {
      const SignedSet co = fundamental_cocircuit(m, b, x);
      for (int e : elements_of(all & ~b)) {
        const SignedSet c = fundamental_circuit(m, b, e);
        const bool in_co = contains(co.support(), e);
        const bool in_c = contains(c.support(), x);
        if (in_co != in_c)
          return "membership asymmetry at basis " + set_string(b, labels) + ", b=" + labels[x] + ", e=" + labels[e];
        if (!in_co) continue;
        if ((c.support() & co.support()) != (bit(e) | bit(x)) || c[x] != -co[e])
          return "sign rule fails at basis " + set_string(b, labels) + ", b=" + labels[x] + ", e=" + labels[e];
      }
    }
  return {};
}

template <class Sig>
std::string signature_mismatch(const Sig& expected, const Sig& got, const char* what) {
  for (std::size_t i = 0; i < expected.keys().size(); ++i)
    if (got(expected.keys()[i]) != expected.values()[i])
      return std::string(what) + " differs on " + expected.keys()[i].to_string();
  return {};
}

// Signature route against the reorientation route for every A: -_f -_A of the
// extension totally cyclic, or -_g -_A of the lifting acyclic (new element at
// index 0). The (co)circuits are enumerated once rather than per subset.
std::string compatibility_witness(const Chirotope& m, const ExtensionSignature& sigma_star, const LiftingSignature& sigma,
                                  const Chirotope& extension, const Chirotope& lifting, bool extension_side) {
  const auto sets = extension_side ? cocircuits(extension) : circuits(lifting);
  const Mask limit = full_mask(m.size());
  for (Mask a = 0;; ++a) {
    const bool by_signature = extension_side ? is_compatible_ext(m, a, sigma_star) : is_compatible_lift(m, a, sigma);
    const bool by_reorientation = !any_one_signed(sets, (a << 1) | 1U);
    if (by_signature != by_reorientation)
      return std::string(extension_side ? "extension" : "lifting") + " routes disagree at A=" + base_set(a);
    if (a == limit) break;
  }
  return {};
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<Check> Report::failures() const {
  std::vector<Check> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const Check& c) { return !c.passed; });
  return out;
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) out << ": " << c.witness;
    out << '\n';
  }
  return out.str();
}

Report verify_extension_lifting(const ExtensionLifting& mbar, const VerifyOptions& options) {
  Report report;
  auto& checks = report.checks;
  const Chirotope& om = mbar.chirotope();
  const auto labels = om.ground().labels();
  const Chirotope m = mbar.base();
  const int n = m.size();
  const auto m_bases = bases(m);

  if (n <= options.axiom_check_max_size + 2)
    checks.push_back(run("extension-lifting chirotope axioms", [&]() -> std::string {
      return find_axiom_violation(om).value_or("");
    }));
  checks.push_back(run("orthogonality sign rule (M)", [&] { return orthogonality_witness(m); }));
  checks.push_back(run("orthogonality sign rule (Mbar)", [&] { return orthogonality_witness(om); }));

  const bool compliant = is_compliant(mbar);
  checks.push_back(run("compliance", [&]() -> std::string {
    if (compliant) return {};
    for (const auto& y : cocircuits(om))
      if (y[ExtensionLifting::kG] != Sign::Zero && y[ExtensionLifting::kF] == -y[ExtensionLifting::kG])
        return "cocircuit " + y.to_string(labels) + " separates g and f";
    return "not compliant";
  }));

  checks.push_back(run("cocircuits through f and g are complements of bases", [&]() -> std::string {
    std::set<Mask> got;
    for (const auto& y : cocircuits(om))
      if ((y.support() & (kF | kG)) == (kF | kG)) got.insert(y.support());
    std::set<Mask> expected;
    for (Mask b : m_bases) expected.insert(ExtensionLifting::lift_mask(full_mask(n) & ~b) | kF | kG);
    for (Mask s : expected)
      if (!got.count(s)) return "no cocircuit with support " + set_string(s, labels);
    for (Mask s : got)
      if (!expected.count(s)) return "unexpected cocircuit support " + set_string(s, labels);
    return {};
  }));

  checks.push_back(run("bases of Mbar with g and without f are B + g", [&]() -> std::string {
    std::vector<Mask> expected;
    for (Mask b : m_bases) expected.push_back(ExtensionLifting::lift_mask(b) | kG);
    std::sort(expected.begin(), expected.end());
    auto got = bases_with_g_without_f(mbar);
    std::sort(got.begin(), got.end());
    if (got == expected) return {};
    for (Mask b : expected)
      if (!std::binary_search(got.begin(), got.end(), b)) return set_string(b, labels) + " is not a basis of Mbar";
    for (Mask b : got)
      if (!std::binary_search(expected.begin(), expected.end(), b)) return "extra basis " + set_string(b, labels);
    return "mismatch";
  }));

  checks.push_back(run("fundamental sets of B + g meet f and g", [&]() -> std::string {
    const Mask all = full_mask(om.size());
    for (Mask b : m_bases) {
      const Mask up = ExtensionLifting::lift_mask(b) | kG;
      for (int x : elements_of(up & ~kG))
        if (!contains(fundamental_cocircuit(om, up, x).support(), ExtensionLifting::kF))
          return "f missing from C*(" + set_string(up, labels) + ";" + labels[x] + ")";
      for (int e : elements_of(all & ~up & ~kF))
        if (!contains(fundamental_circuit(om, up, e).support(), ExtensionLifting::kG))
          return "g missing from C(" + set_string(up, labels) + ";" + labels[e] + ")";
      if (fundamental_circuit(om, up, ExtensionLifting::kF).support() != (up | kF))
        return "C(" + set_string(up, labels) + ";f) does not have support B + {f,g}";
    }
    return {};
  }));

  // Everything below is phrased in terms of the recovered signatures.
  const auto [sigma_star, sigma] = signatures_of(mbar);
  const Chirotope extension = mbar.contraction();
  const Chirotope lifting = mbar.deletion();

  checks.push_back(run("compatibility equivalence (extension)", [&]() -> std::string {
    return compatibility_witness(m, sigma_star, sigma, extension, lifting, true);
  }));
  checks.push_back(run("compatibility equivalence (lifting)", [&]() -> std::string {
    return compatibility_witness(m, sigma_star, sigma, extension, lifting, false);
  }));

  const auto compatible = compatible_reorientations(m, sigma_star, sigma);
  const auto regions = bounded_regions(mbar);
  checks.push_back(run("compatible reorientations are the bounded regions", [&]() -> std::string {
    for (Mask a : compatible)
      if (!std::binary_search(regions.begin(), regions.end(), a)) return "compatible A=" + base_set(a) + " is not a region";
    for (Mask a : regions)
      if (!std::binary_search(compatible.begin(), compatible.end(), a)) return "region A=" + base_set(a) + " is not compatible";
    return {};
  }));

  std::map<Mask, Mask> region_basis;
  checks.push_back(run("unique optimal basis per bounded region", [&]() -> std::string {
    const Reorientation none(om, 0);
    for (Mask a : regions) region_basis[a] = optimal_basis(mbar, a);
    return {};
  }));
  checks.push_back(run("optimal basis and basis-to-region are inverse", [&]() -> std::string {
    for (const auto& [a, b] : region_basis)
      if (basis_to_region(mbar, b) != a) return "region A=" + base_set(a) + " does not come back";
    for (Mask b : bases_with_g_without_f(mbar)) {
      const Mask a = basis_to_region(mbar, b);
      if (!is_bounded_region(mbar, a)) return set_string(b, labels) + " yields A=" + base_set(a) + ", not a region";
      if (optimal_basis(mbar, a) != b) return set_string(b, labels) + " is not optimal for its region";
    }
    return {};
  }));

  std::vector<Mask> images;
  checks.push_back(run("bijection onto compatible reorientations", [&]() -> std::string {
    std::map<Mask, Mask> preimage;
    for (Mask b : m_bases) {
      const Mask a = reorientation_of_basis(m, sigma_star, sigma, b);
      if (auto [it, fresh] = preimage.emplace(a, b); !fresh)
        return "bases " + base_set(it->second) + " and " + base_set(b) + " both map to " + base_set(a);
      images.push_back(a);
    }
    std::sort(images.begin(), images.end());
    if (images != compatible) {
      for (Mask a : images)
        if (!std::binary_search(compatible.begin(), compatible.end(), a)) return "image " + base_set(a) + " is not compatible";
      for (Mask a : compatible)
        if (!std::binary_search(images.begin(), images.end(), a)) return "compatible " + base_set(a) + " is not hit";
    }
    return {};
  }));

  checks.push_back(run("direct formula agrees with the extension-lifting route", [&]() -> std::string {
    for (Mask b : m_bases) {
      const Mask direct = reorientation_of_basis(m, sigma_star, sigma, b);
      const Mask routed = basis_to_region(mbar, ExtensionLifting::lift_mask(b) | kG);
      if (direct != routed)
        return "basis " + base_set(b) + ": direct " + base_set(direct) + " vs routed " + base_set(routed);
    }
    return {};
  }));

  checks.push_back(run("cardinality identity", [&]() -> std::string {
    if (m_bases.size() == compatible.size() && compatible.size() == regions.size()) return {};
    return "bases " + std::to_string(m_bases.size()) + ", compatible " + std::to_string(compatible.size()) +
           ", regions " + std::to_string(regions.size());
  }));

  if (compliant)
    checks.push_back(run("fully optimal coincides with optimal", [&]() -> std::string {
      const auto candidates = bases_with_g_without_f(mbar);
      for (Mask a : regions)
        for (Mask b : candidates) {
          const bool optimal = region_basis.count(a) && region_basis.at(a) == b;
          if (is_fully_optimal(mbar, a, b) != optimal)
            return "region A=" + base_set(a) + ", basis " + set_string(b, labels);
        }
      return {};
    }));

  checks.push_back(run("activities of bases with g and without f", [&]() -> std::string {
    for (Mask b : bases_with_g_without_f(mbar)) {
      const Activities act = activities(om, b);
      if (act != Activities{1, 0})
        return set_string(b, labels) + " has activities (" + std::to_string(act.internal) + "," +
               std::to_string(act.external) + ")";
    }
    return {};
  }));

  checks.push_back(run("inverse map", [&]() -> std::string {
    for (Mask b : m_bases) {
      const Mask a = reorientation_of_basis(m, sigma_star, sigma, b);
      const Mask back = basis_of_reorientation(mbar, a);
      if (back != b) return base_set(b) + " -> " + base_set(a) + " -> " + base_set(back);
    }
    return {};
  }));

  return report;
}

Report verify_all(const Chirotope& m, const ExtensionSignature& sigma_star, const LiftingSignature& sigma,
                  const VerifyOptions& options) {
  Report report;
  auto& checks = report.checks;

  if (m.size() <= options.axiom_check_max_size)
    checks.push_back(run("chirotope axioms", [&]() -> std::string { return find_axiom_violation(m).value_or(""); }));

  const std::optional<Check> bad_input = [&]() -> std::optional<Check> {
    if (!(sigma_star.base() == m) || !(sigma.base() == m))
      return Check{"signatures belong to M", false, "signature base differs from M"};
    if (m.size() > kMaxEnumerationSize)
      return Check{"size", false, "more than " + std::to_string(kMaxEnumerationSize) + " elements"};
    return std::nullopt;
  }();
  if (bad_input) {
    checks.push_back(*bad_input);
    return report;
  }

  checks.push_back(run("compatibility equivalence via extend and lift", [&]() -> std::string {
    const Chirotope extension = extend(m, sigma_star);
    const Chirotope lifting = lift(m, sigma);
    if (auto w = compatibility_witness(m, sigma_star, sigma, extension, lifting, true); !w.empty()) return w;
    return compatibility_witness(m, sigma_star, sigma, extension, lifting, false);
  }));

  std::optional<ExtensionLifting> mbar;
  checks.push_back(run("compliant extension-lifting construction", [&]() -> std::string {
    mbar.emplace(compose_compliant(m, sigma_star, sigma));
    if (!(mbar->base() == m)) return "Mbar/g\\f differs from M";
    return {};
  }));
  if (!mbar) return report;

  checks.push_back(run("signature recovery", [&]() -> std::string {
    const auto [ext, lif] = signatures_of(*mbar);
    if (auto w = signature_mismatch(sigma_star, ext, "sigma*"); !w.empty()) return w;
    return signature_mismatch(sigma, lif, "sigma");
  }));

  auto rest = verify_extension_lifting(*mbar, options);
  checks.insert(checks.end(), rest.checks.begin(), rest.checks.end());
  return report;
}

}  // namespace extlift
