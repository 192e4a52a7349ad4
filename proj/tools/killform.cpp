// killform: Killing forms of conjugacy classes of finite permutation groups.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "killform/characters.hpp"
#include "killform/decomposition.hpp"
#include "killform/errors.hpp"
#include "killform/killing.hpp"
#include "killform/named_groups.hpp"
#include "killform/specht.hpp"
#include "killform/survey.hpp"

using namespace killform;

namespace {

struct Flags {
  std::string format = "md";
  std::size_t cap = kDefaultElementCap;
  std::size_t matrix_cap = kDefaultMatrixCap;
  std::string char_table;
  std::size_t jobs = 1;
  std::uint64_t seed = 1;

  SurveyOptions survey() const {
    SurveyOptions o;
    o.matrix_cap = matrix_cap;
    o.jobs = jobs;
    o.seed = seed;
    return o;
  }
};

bool is_symmetric_name(const Group& G) {
  const std::string& n = G.name();
  return n.size() > 1 && n[0] == 'S' && n.find_first_not_of("0123456789", 1) == std::string::npos &&
         G.order() > 1;
}

CharTable load_table(const Group& G, const Flags& f) {
  CharTable T;
  if (!f.char_table.empty()) {
    std::ifstream in(f.char_table);
    if (!in) throw ParseError("cannot open " + f.char_table);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(f.char_table + ": " + e.what());
    }
    T = char_table_from_json(j);
    check_table_matches(T, G);
  } else {
    T = character_table(G);
  }
  if (is_symmetric_name(G)) label_symmetric_table(T, G);
  return T;
}

int cmd_survey(const std::string& spec, const Flags& f) {
  const Group G = build_named_group(spec, f.cap);
  const SurveyReport r = survey(G, f.survey());
  if (f.format == "csv")
    std::cout << to_csv(r);
  else if (f.format == "json")
    std::cout << to_json(r).dump(2) << '\n';
  else
    std::cout << to_markdown(r);
  for (const SurveyRow& row : r.rows)
    if (row.error) std::cerr << "error: " << row.class_label << ": " << *row.error << '\n';
  for (const std::string& w : r.warnings) std::cerr << "warning: " << w << '\n';
  return 0;
}

int cmd_decompose(const std::string& spec, const std::string& selector, const Flags& f) {
  const Group G = build_named_group(spec, f.cap);
  const ConjClass& C = resolve_class(G, selector);
  const CharTable T = load_table(G, f);
  const KillingForm K = killing_matrix(G, C, f.matrix_cap, f.jobs);
  const Decomposition D = eigenspace_decomposition(K, T);
  const std::vector<std::string> audit = integrality_audit(D, T);

  if (f.format == "json") {
    nlohmann::json j;
    j["group"] = G.name();
    j["order"] = G.order();
    j["class"] = C.label;
    j["dim"] = C.size();
    j["decomposition"] = format_decomposition(D, T);
    nlohmann::json entries = nlohmann::json::array();
    for (const DecompositionEntry& e : D.entries) {
      nlohmann::json irreps = nlohmann::json::object();
      for (std::size_t i = 0; i < T.size(); ++i)
        if (e.multiplicities[i]) irreps[T.labels[i]] = e.multiplicities[i];
      entries.push_back({{"eigenvalue", format_eigenvalue(e)},
                         {"dim", e.dim},
                         {"irrational", !e.integral},
                         {"irreps", irreps}});
    }
    j["eigenspaces"] = entries;
    j["audit"] = audit;
    std::cout << j.dump(2) << '\n';
  } else if (f.format == "csv") {
    std::cout << "eigenvalue,dim,irrational,irrep,copies\n";
    for (const DecompositionEntry& e : D.entries)
      for (std::size_t i = 0; i < T.size(); ++i)
        if (e.multiplicities[i])
          std::cout << format_eigenvalue(e) << ',' << e.dim << ',' << (e.integral ? "False" : "True") << ','
                    << T.labels[i] << ',' << e.multiplicities[i] << '\n';
  } else {
    std::cout << "## " << G.name() << " " << C.label << " (dim " << C.size() << ")\n\n";
    std::cout << format_decomposition(D, T) << "\n\n";
    std::cout << "| Eigenvalue | Dim | Irreps | Flag |\n|---|---|---|---|\n";
    for (const DecompositionEntry& e : D.entries) {
      std::string irreps;
      for (std::size_t i = 0; i < T.size(); ++i)
        if (e.multiplicities[i])
          irreps += (irreps.empty() ? "" : " + ") +
                    (e.multiplicities[i] > 1 ? std::to_string(e.multiplicities[i]) + "x" : std::string()) +
                    T.labels[i];
      std::cout << "| " << format_eigenvalue(e) << " | " << e.dim << " | " << irreps << " | "
                << (e.integral ? "" : "irrational") << " |\n";
    }
    if (!audit.empty()) {
      std::cout << "\nAudit:\n";
      for (const std::string& a : audit) std::cout << "- " << a << '\n';
    }
  }
  for (const std::string& a : audit) std::cerr << "audit: " << a << '\n';
  return 0;
}

int cmd_casimir(const std::string& spec, const std::string& selector, const Flags& f) {
  const Group G = build_named_group(spec, f.cap);
  const ConjClass& C = resolve_class(G, selector);
  KillingForm K = killing_matrix(G, C, f.matrix_cap, f.jobs);
  IndexVector c;
  try {
    c = casimir(K);
  } catch (const SingularMatrix&) {
    SignatureOptions so;
    so.seed = f.seed;
    const KillingAnalysis& A = analyze(K, so);
    std::cerr << "error: degenerate Killing form on class " << C.label << " of " << G.name() << ", signature ("
              << A.signature.positive << "," << A.signature.negative << "," << A.signature.zero
              << "); no Casimir\n";
    return 1;
  }
  if (f.format == "json") {
    nlohmann::json j;
    j["group"] = G.name();
    j["class"] = C.label;
    j["casimir"] = format_class_combination(c, G);
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [k, q] : c.terms()) terms[k == 0 ? "e" : G.class_at(k).label] = q.get_str();
    j["coefficients"] = terms;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << format_class_combination(c, G) << '\n';
  if (f.format == "md")
    for (const auto& [k, q] : c.terms())
      if (k != 0)
        std::cout << "theta(" << G.class_at(k).label << "): sum over the class of "
                  << G.class_at(k).rep.to_cycles() << '\n';
  return 0;
}

int cmd_spectrogram(const std::string& spec, const Flags& f) {
  const Group G = build_named_group(spec, f.cap);
  std::vector<std::string> errors;
  const auto rows = spectrogram(G, f.survey(), &errors);
  std::cout << spectrogram_csv(rows, errors);
  for (const std::string& e : errors) std::cerr << "error: " << e << '\n';
  return 0;
}

int cmd_matrix(const std::string& spec, const std::string& selector, const Flags& f) {
  const Group G = build_named_group(spec, f.cap);
  const ConjClass& C = resolve_class(G, selector);
  std::cout << killing_matrix(G, C, f.matrix_cap, f.jobs).matrix.dump();
  return 0;
}

int cmd_table(const std::string& spec, const Flags& f) {
  const Group G = build_named_group(spec, f.cap);
  std::cout << to_json(load_table(G, f)).dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Killing forms of conjugacy classes of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json", "md"}));
  app.add_option("--cap", f.cap, "Maximum group order");
  app.add_option("--matrix-cap", f.matrix_cap, "Maximum Killing matrix dimension");
  app.add_option("--char-table", f.char_table, "Import a character table (JSON)");
  app.add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", f.seed, "Seed for the primes used in rank certification");

  std::string group, cls;
  int rc = 0;
  auto with_group = [&](CLI::App* sub) { sub->add_option("group", group, "Group spec: S4, A5, PSL(2,7), M11, file:<path>")->required(); };
  auto with_class = [&](CLI::App* sub) {
    sub->add_option("class", cls, "Class label (2A), cycle type (2,1,1 or 2-cycles) or representative")->required();
  };

  auto* s = app.add_subcommand("survey", "Per-class Killing form table");
  with_group(s);
  s->callback([&] { rc = cmd_survey(group, f); });

  auto* d = app.add_subcommand("decompose", "Eigenspace decomposition into irreps");
  with_group(d);
  with_class(d);
  d->callback([&] { rc = cmd_decompose(group, cls, f); });

  auto* c = app.add_subcommand("casimir", "Quadratic Casimir as a combination of class sums");
  with_group(c);
  with_class(c);
  c->callback([&] { rc = cmd_casimir(group, cls, f); });

  auto* sp = app.add_subcommand("spectrogram", "Distinct eigenvalues of every class form, as CSV");
  with_group(sp);
  sp->callback([&] { rc = cmd_spectrogram(group, f); });

  auto* m = app.add_subcommand("matrix", "Dump the Killing matrix of a class");
  with_group(m);
  with_class(m);
  m->callback([&] { rc = cmd_matrix(group, cls, f); });

  auto* t = app.add_subcommand("table", "Character table as JSON");
  with_group(t);
  t->callback([&] { rc = cmd_table(group, f); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
