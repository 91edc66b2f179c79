// Acceptance criteria AC1-AC12. One PASS/FAIL line per criterion; the exit
// status is non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lures/builtins.hpp"
#include "lures/completion.hpp"
#include "lures/cones.hpp"
#include "lures/props.hpp"
#include "lures/residuation.hpp"
#include "lures/search.hpp"
#include "oracles.hpp"
#include "parity.hpp"

using namespace lures;

namespace {

/// Collects failed expectations of one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<void(Checks&)> body;
};

std::string pair_names(const Poset& p, const Verdict& v) {
  if (!v.witness) return "";
  std::string out;
  for (const auto& [var, e] : v.witness->assignment) out += (out.empty() ? "" : ",") + p.name(e);
  return out;
}

void ac1(Checks& c) {
  const Poset p = builtin("fig1").poset;
  c.expect(p.size() == 10 && p.bounded(), "fig1 bounded");
  c.expect(is_lattice(p).holds, "fig1 lattice");
  c.expect(is_modular_lattice(p).holds, "fig1 modular lattice");
  const ComplementedPoset cp = builtin_complemented("fig1");
  c.expect(!complementation_violation(p, cp.complement()), "complementation valid");
  c.expect(unary_properties(cp).involution.holds, "involution");
  const Verdict anti = unary_properties(cp).antitone;
  c.expect(!anti.holds && pair_names(p, anti) == "b,c'", "antitone fails at (b,c')");
}

void ac2(Checks& c) {
  const ComplementedPoset cp = builtin_complemented("fig1");
  const TermResiduation t(cp);
  c.expect(check_unit_laws(t).holds, "unit laws");
  c.expect(check_adjointness(t).holds, "1000 adjointness triples");
  c.expect(check_divisibility(t).holds, "100 divisibility pairs");
  c.expect(verify_left_residuated_lattice(cp).holds, "verify_left_residuated_lattice");
}

void ac3(Checks& c) {
  const ComplementedPoset cp = builtin_complemented("fig1xfig2");
  const Poset& p = cp.poset();
  c.expect(p.size() == 120, "120 elements");
  c.expect(strongly_modular_identity(p, 1).holds, "identity 1");
  c.expect(strongly_modular_identity(p, 2).holds, "identity 2");
  c.expect(!is_lattice(p).holds, "not a lattice");
  c.expect(!is_boolean_poset(cp).holds, "not Boolean");
  c.expect(!unary_properties(cp).antitone.holds, "not antitone");
}

void ac4(Checks& c) {
  const ComplementedPoset cp = builtin_complemented("fig1xfig2");
  const OperatorResiduation o(cp);
  c.expect(check_operator_units(o).holds, "unit laws and R(x,0) = L(x')");
  c.expect(check_operator_adjointness(o).holds, "operator adjointness");
  c.expect(check_operator_divisibility(o).holds, "divisibility");
  c.expect(verify_operator_left_residuated(cp).holds, "verify_operator_left_residuated");
  c.expect(residuum_order_test(cp).holds, "residuum order");
}

void ac5(Checks& c) {
  c.expect(is_strictly_modular(builtin("fig1").poset).holds, "fig1 strictly modular");
  const Poset p = builtin("fig1xp6").poset;
  c.expect(p.size() == 60, "60 elements");
  c.expect(is_strictly_modular(p).holds, "fig1 x p6 strictly modular");
  c.expect(!is_lattice(p).holds, "fig1 x p6 not a lattice");
  c.expect(!is_distributive_poset(p).holds, "fig1 x p6 not distributive");
}

void ac6(Checks& c) {
  const ComplementedPoset cp = builtin_complemented("fig1");
  c.expect(is_strictly_modular(cp.poset()).holds, "fig1 strictly modular");
  c.expect(verify_operator_left_residuated(cp).holds, "operator residuated");
  c.expect(lattice_operator_agreement(cp).holds, "100 pairs agree");
}

void ac7(Checks& c) {
  const Poset p6 = builtin("p6").poset;
  const CompletionLattice d = dm_completion(p6);
  std::vector<std::string> labels;
  for (const auto& s : d.closed_sets()) labels.push_back(format_set(p6, s));
  c.expect(labels == std::vector<std::string>{"{0}", "{0,a}", "{0,b}", "{0,a,b}", "{0,a,b,c}", "{0,a,b,d}",
                                              "{0,a,b,c,d,1}"},
           "seven closed sets of p6");
  std::set<std::vector<Element>> got;
  for (const auto& s : d.closed_sets()) got.insert(s.elements());
  c.expect(got == oracle::closed_sets(p6), "brute-force closed sets");
  c.expect(d0_sublattice(d).closed_sets() == d.closed_sets(), "D0(p6) = D(p6)");
  const auto report = completion_modularity_report(p6);
  c.expect(report.d_modular.holds, "D(p6) modular");
  c.expect(report.p_strictly_modular.holds && report.strict_implication_ok(), "strict implication");
  for (const auto& name : builtin_names()) {
    const Poset p = builtin(name).poset;
    if (!is_lattice(p).holds) continue;
    const CompletionLattice dl = dm_completion(p);
    c.expect(dl.size() == p.size() && isomorphic(dl.as_poset(), p), "completion of " + name + " isomorphic");
  }
}

void ac8(Checks& c) {
  const ComplementedPoset cp = builtin_complemented("fig2");
  c.expect(is_orthoposet(cp).holds, "fig2 orthoposet");
  const CompletionLattice d = star_extension(dm_completion(cp.poset()), cp);
  const StarChecks s = verify_star(d, cp);
  c.expect(s.cone_image.holds, "cone image");
  c.expect(s.antitone.holds, "antitone");
  c.expect(s.involution.holds, "involution");
  c.expect(s.join_top.holds, "join with star is top");
  c.expect(s.meet_bottom.holds, "meet with star is bottom");
  c.expect(s.extends.holds, "extends the complement");
  for (Element x = 0; x < cp.size(); ++x)
    c.expect(d.set((*d.star())[d.embedding(x)]) == cp.poset().down(cp.comp(x)),
             "(L(" + cp.poset().name(x) + "))* = L(" + cp.poset().name(x) + "')");
}

void ac9(Checks& c) {
  std::size_t compared = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Poset& p : enumerate_posets(n, true)) {
      ++compared;
      c.expect(is_strictly_modular(p).holds == oracle::strictly_modular(p),
               "disagreement on " + std::to_string(n) + "-element poset");
    }
  c.expect(compared > 0, "posets compared");
}

void ac10(Checks& c) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Poset& p : enumerate_posets(n, false)) {
      const bool modular = is_modular_poset(p).holds;
      const auto report = completion_modularity_report(p);
      if (report.p_strongly_modular.holds) c.expect(modular, "strongly modular => modular");
      if (report.p_strictly_modular.holds) c.expect(modular, "strictly modular => modular");
      if (is_distributive_poset(p).holds) c.expect(modular, "distributive => modular");
      c.expect(report.strong_implication_ok(), "D0 modular => strongly modular");
      c.expect(report.strict_implication_ok(), "D modular => strictly modular");
      if (!p.bounded() || !is_lattice(p).holds) continue;
      const bool modular_lattice = is_modular_lattice(p).holds;
      for (const auto& cp : enumerate_complementations(p))
        if (modular_lattice && is_ortholattice(cp).holds)
          c.expect(is_orthomodular_lattice(cp).holds, "modular ortholattice => orthomodular");
    }
}

void ac11(Checks& c) {
  for (const char* name : {"fig1", "fig2", "p6", "n5", "boolean8", "fig1xp6"}) {
    const PosetDocument doc = builtin(name);
    for (const auto& [formula, checker] : parity::checkers()) {
      const auto direct = parity::capture([&] { return checker(doc); });
      c.expect(parity::same(parity::dsl(formula, doc), direct), formula + " on " + name);
    }
  }
}

void ac12(Checks& c) {
  const std::vector<std::size_t> expected{1, 2, 5, 16, 63};
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t got = enumerate_posets(n, false).size();
    const std::size_t reference = oracle::poset_class_count(n);
    c.expect(got == expected[n - 1] && reference == expected[n - 1],
             "n=" + std::to_string(n) + ": " + std::to_string(got) + " vs oracle " + std::to_string(reference));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "fig1 suite", 1, ac1},
      {"AC2", "fig1 divisible left residuated lattice", 1, ac2},
      {"AC3", "fig1 x fig2 strongly modular, not lattice, not Boolean", 60, ac3},
      {"AC4", "fig1 x fig2 divisible operator left residuated", 300, ac4},
      {"AC5", "fig1 and fig1 x p6 strictly modular", 120, ac5},
      {"AC6", "fig1 operator residuation and agreement", 0, ac6},
      {"AC7", "completion suite", 0, ac7},
      {"AC8", "star extension on D(fig2)", 0, ac8},
      {"AC9", "strict modularity oracle equivalence, bounded n <= 6", 0, ac9},
      {"AC10", "implication battery, n <= 6", 600, ac10},
      {"AC11", "DSL and checker parity", 0, ac11},
      {"AC12", "enumeration counts 1 2 5 16 63", 0, ac12},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.budget_seconds > 0 && seconds >= criterion.budget_seconds)
      checks.expect(false, "over time budget of " + std::to_string(criterion.budget_seconds) + " s");
    const bool ok = checks.failures().empty();
    std::printf("%-5s %s  %s (%.3f s)\n", criterion.id, ok ? "PASS" : "FAIL", criterion.title, seconds);
    for (const auto& f : checks.failures()) std::printf("        - %s\n", f.c_str());
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
