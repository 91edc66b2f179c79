// Command-line front end. Exit codes: 0 property holds / output written,
// 1 property fails (witness on stdout), 2 usage or validation error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lures/builtins.hpp"
#include "lures/cones.hpp"
#include "lures/completion.hpp"
#include "lures/formula.hpp"
#include "lures/poset_io.hpp"
#include "lures/properties.hpp"
#include "lures/residuation.hpp"
#include "lures/search.hpp"

namespace {

using namespace lures;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

/// `builtin:NAME` loads a built-in structure instead of a file.
PosetDocument load(const std::string& path) {
  constexpr std::string_view prefix = "builtin:";
  if (path.rfind(prefix, 0) == 0) return builtin(path.substr(prefix.size()));
  try {
    return read_poset_file(path);
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

int report(const Verdict& v, const Poset& p) {
  if (v.holds) {
    std::cout << "holds\n";
    return kHolds;
  }
  std::cout << "fails\n";
  if (v.witness) {
    std::string line;
    for (const auto& [var, e] : v.witness->assignment) line += (line.empty() ? "" : ", ") + var + "=" + p.name(e);
    for (const auto& [var, s] : v.witness->sets) line += (line.empty() ? "" : ", ") + var + "=" + format_set(p, s);
    std::cout << line << "\n";
    if (!v.witness->note.empty()) std::cout << "# " << v.witness->note << "\n";
  }
  return kFails;
}

std::string lattice_tables(const TermResiduation& t) {
  const Poset& p = t.structure().poset();
  std::string out;
  auto table = [&](const char* title, auto&& entry) {
    out += std::string("table ") + title + "\ncolumns:";
    for (const auto& n : p.names()) out += " " + n;
    out += "\n";
    for (Element x = 0; x < p.size(); ++x) {
      out += p.name(x) + ":";
      for (Element y = 0; y < p.size(); ++y) out += " " + p.name(entry(x, y));
      out += "\n";
    }
  };
  table("odot", [&](Element x, Element y) { return t.odot(x, y); });
  table("arrow", [&](Element x, Element y) { return t.arrow(x, y); });
  return out;
}

std::string operator_tables(const OperatorResiduation& o) {
  const Poset& p = o.structure().poset();
  std::string out;
  auto table = [&](const char* title, auto&& entry) {
    out += std::string("table ") + title + "\ncolumns:";
    for (const auto& n : p.names()) out += " " + n;
    out += "\n";
    for (Element x = 0; x < p.size(); ++x) {
      out += p.name(x) + ":";
      for (Element y = 0; y < p.size(); ++y) out += " " + format_set(p, entry(x, y));
      out += "\n";
    }
  };
  table("M", [&](Element x, Element y) { return o.m(x, y); });
  table("R", [&](Element x, Element y) { return o.r(x, y); });
  return out;
}

std::string completion_text(const CompletionLattice& c) {
  std::string out = "# " + std::to_string(c.size()) + " closed sets\n";
  for (Element x = 0; x < c.base().size(); ++x)
    out += "# embedding: " + c.base().name(x) + " -> " + c.label(c.embedding(x)) + "\n";
  out += c.star() ? format_poset(c.as_complemented()) : format_poset(c.as_poset());
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Finite posets with complementation: LU-identities, residuation, completions"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned jobs = 1;
  app.add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::Range(1U, 256U));

  std::string file, file2, output, property, formula_src, builtin_name;
  bool operator_flag = false, d0_flag = false, star_flag = false;
  bool complemented = false, unbounded = false, all_flag = false;
  std::size_t size = 0;
  std::vector<std::string> requires_list;

  auto* check = app.add_subcommand("check", "Check a named property");
  check->add_option("file", file, "Poset file or builtin:NAME")->required();
  check->add_option("--property,-p", property, "Property name")->required();

  auto* residuate = app.add_subcommand("residuate", "Print residuation tables");
  residuate->add_option("file", file)->required();
  residuate->add_flag("--operator", operator_flag, "M/R operator tables instead of term tables");

  auto* complete = app.add_subcommand("complete", "Dedekind-MacNeille completion");
  complete->add_option("file", file)->required();
  complete->add_flag("--d0", d0_flag, "Only the sublattice generated by the principal ideals");
  complete->add_flag("--star", star_flag, "Extend the orthocomplementation");

  auto* eval = app.add_subcommand("eval", "Evaluate an LU-identity");
  eval->add_option("file", file)->required();
  auto* formula_opt = eval->add_option("--formula,-f", formula_src, "Formula text");
  auto* builtin_opt = eval->add_option("--builtin,-b", builtin_name, "Registry formula name");
  formula_opt->excludes(builtin_opt);

  auto* product = app.add_subcommand("product", "Direct product of two posets");
  product->add_option("file1", file)->required();
  product->add_option("file2", file2)->required();
  product->add_option("-o,--output", output)->required();

  auto* search = app.add_subcommand("search", "Find a small poset with given properties");
  search->add_option("--size,-n", size, "Largest size to try")->required();
  search->add_option("--require,-r", requires_list, "prop, prop=true or prop=false");
  search->add_flag("--complemented", complemented, "Search complemented posets");
  search->add_flag("--unbounded", unbounded, "Include posets without bounds");
  search->add_flag("--all", all_flag, "List every class of exactly --size elements matching");

  auto* emit = app.add_subcommand("builtin", "Write a built-in structure");
  emit->add_option("name", builtin_name)->required();
  emit->add_option("-o,--output", output);

  auto* list = app.add_subcommand("list", "List built-in structures, properties and formulas");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  if (*check) {
    const PosetDocument doc = load(file);
    const ComplementedPoset* cp = doc.complemented ? &*doc.complemented : nullptr;
    return report(check_property(property, doc.poset, cp, jobs), doc.poset);
  }

  if (*residuate) {
    const PosetDocument doc = load(file);
    if (!doc.complemented) throw Error("residuation needs a complementation");
    if (operator_flag) {
      if (!doc.poset.bounded()) throw Error("operator residuation needs a bounded poset");
      std::cout << operator_tables(OperatorResiduation(*doc.complemented));
    } else {
      if (!is_lattice(doc.poset)) throw Error("term residuation needs a lattice; try --operator");
      std::cout << lattice_tables(TermResiduation(*doc.complemented));
    }
    return kHolds;
  }

  if (*complete) {
    const PosetDocument doc = load(file);
    CompletionLattice c = dm_completion(doc.poset);
    if (star_flag) {
      if (!doc.complemented) throw Error("--star needs a complementation");
      c = star_extension(c, *doc.complemented);
    }
    if (d0_flag) c = d0_sublattice(c);
    std::cout << completion_text(c);
    return kHolds;
  }

  if (*eval) {
    if (formula_src.empty() && builtin_name.empty()) throw Error("eval needs --formula or --builtin");
    const PosetDocument doc = load(file);
    Formula f;
    try {
      f = builtin_name.empty() ? parse_formula(formula_src) : builtin_formula(builtin_name).formula;
    } catch (const ParseError& e) {
      throw Error(std::string("formula:") + e.what());
    }
    const Verdict v = doc.complemented ? evaluate(f, *doc.complemented, jobs) : evaluate(f, doc.poset, jobs);
    return report(v, doc.poset);
  }

  if (*product) {
    const PosetDocument a = load(file);
    const PosetDocument b = load(file2);
    const std::string text = a.complemented && b.complemented
                                 ? format_poset(direct_product(*a.complemented, *b.complemented))
                                 : format_poset(direct_product(a.poset, b.poset));
    write_output(output, text);
    return kHolds;
  }

  if (*search) {
    std::vector<PropertyRequirement> reqs;
    for (const auto& r : requires_list) {
      const auto eq = r.find('=');
      PropertyRequirement req{r.substr(0, eq), true};
      if (eq != std::string::npos) {
        const std::string value = r.substr(eq + 1);
        if (value != "true" && value != "false") throw Error("requirement value must be true or false: " + r);
        req.expected = value == "true";
      }
      reqs.push_back(std::move(req));
    }
    SearchOptions options;
    options.complemented = complemented;
    options.bounded_only = !unbounded;
    options.jobs = jobs;
    if (all_flag) {
      find_witness(reqs, 0, options);  // validates requirement names
      bool any = false;
      for (const Poset& p : enumerate_posets(size, !unbounded, kMaxEnumerationSize)) {
        std::vector<ComplementedPoset> comps;
        if (complemented) {
          if (!p.bounded()) continue;
          comps = enumerate_complementations(p);
        }
        auto matches = [&](const ComplementedPoset* cp) {
          for (const auto& r : reqs)
            if (check_property(r.property, p, cp, jobs).holds != r.expected) return false;
          return true;
        };
        if (!complemented) {
          if (matches(nullptr)) {
            std::cout << (any ? "---\n" : "") << format_poset(p);
            any = true;
          }
          continue;
        }
        for (const auto& cp : comps)
          if (matches(&cp)) {
            std::cout << (any ? "---\n" : "") << format_poset(cp);
            any = true;
          }
      }
      return any ? kHolds : kFails;
    }
    if (auto found = find_witness(reqs, size, options)) {
      std::cout << format_document(*found);
      return kHolds;
    }
    std::cout << "none up to size " << size << "\n";
    return kFails;
  }

  if (*emit) {
    write_output(output, builtin_text(builtin_name));
    return kHolds;
  }

  if (*list) {
    std::cout << "structures:";
    for (const auto& n : builtin_names()) std::cout << " " << n;
    std::cout << "\nproperties:";
    for (const auto& p : property_catalog()) std::cout << " " << p.name;
    std::cout << "\nformulas:\n";
    for (const auto& b : builtin_registry()) std::cout << "  " << b.name << ": " << b.source << "\n";
    return kHolds;
  }
  return kError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
