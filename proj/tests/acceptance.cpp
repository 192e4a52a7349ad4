// Acceptance checks. Each criterion prints one PASS/FAIL line followed by
// indented detail lines; the exit status is nonzero if any selected
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "killform/characters.hpp"
#include "killform/decomposition.hpp"
#include "killform/errors.hpp"
#include "killform/killing.hpp"
#include "killform/linalg.hpp"
#include "killform/named_groups.hpp"
#include "killform/specht.hpp"
#include "killform/survey.hpp"

using namespace killform;

namespace {

// Tolerances.
constexpr double kEigenTol = 1e-6;        // S_n spectra, irrational eigenvalues
constexpr double kSpectrumMatchTol = 1e-6;  // inverse-class spectra, relative to the largest |eigenvalue|
constexpr double kPairingTol = 1e-6;      // m-vector orthogonality
constexpr std::size_t kPropertyOrderCap = 2000;
constexpr std::size_t kSymmetricCap = 400000;  // S_9 has 362880 elements

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void fail(const std::string& why) {
    pass = false;
    details.push_back("FAIL " + why);
  }
  void note(const std::string& s) { details.push_back(s); }
};

std::string golden_path(const std::string& name) { return std::string(KILLFORM_GOLDEN_DIR) + "/" + name; }

// Splits one CSV line; fields may be double-quoted.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (char c : line) {
    if (c == '"')
      quoted = !quoted;
    else if (c == ',' && !quoted)
      out.emplace_back();
    else
      out.back() += c;
  }
  return out;
}

std::vector<std::map<std::string, std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::map<std::string, std::string>> rows;
  std::vector<std::string> header;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_csv(line);
    if (header.empty()) {
      header = fields;
      continue;
    }
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = i < fields.size() ? fields[i] : "";
    rows.push_back(std::move(row));
  }
  return rows;
}

bool is_symmetric_spec(const std::string& s) {
  return s.size() > 1 && s[0] == 'S' && s.find_first_not_of("0123456789", 1) == std::string::npos;
}

class GroupCache {
 public:
  const Group& get(const std::string& spec) {
    auto it = groups_.find(spec);
    if (it == groups_.end())
      it = groups_.emplace(spec, std::make_unique<Group>(build_named_group(spec, kSymmetricCap))).first;
    return *it->second;
  }
  const CharTable& table(const std::string& spec) {
    auto it = tables_.find(spec);
    if (it == tables_.end()) {
      const Group& G = get(spec);
      CharTable T = character_table(G);
      if (is_symmetric_spec(spec)) label_symmetric_table(T, G);
      it = tables_.emplace(spec, std::move(T)).first;
    }
    return it->second;
  }
  const SurveyReport& survey_of(const std::string& spec) {
    auto it = surveys_.find(spec);
    if (it == surveys_.end()) {
      SurveyOptions opt;
      opt.jobs = std::max(1u, std::thread::hardware_concurrency());
      it = surveys_.emplace(spec, survey(get(spec), opt)).first;
    }
    return it->second;
  }

 private:
  std::map<std::string, std::unique_ptr<Group>> groups_;
  std::map<std::string, CharTable> tables_;
  std::map<std::string, SurveyReport> surveys_;
};

GroupCache cache;

// ---------------------------------------------------------------------------
// 1. Survey tables.

using RowKey = std::tuple<std::size_t, std::size_t, bool, bool, std::size_t, std::int64_t, std::size_t,
                          std::size_t, std::size_t>;

std::string key_str(const RowKey& k) {
  auto [size, chi, real, irr, comp, lam, p, n, z] = k;
  std::ostringstream os;
  os << "|C|=" << size << " chi=" << chi << " real=" << real << " irred=" << irr;
  if (!irr) os << "(" << comp << ")";
  os << " lmax=" << lam << " sig=(" << p << "," << n << "," << z << ")";
  return os.str();
}

// "5A-B" -> 2, "17A-H" -> 8, "2A" -> 1.
std::size_t label_count(const std::string& label) {
  const auto dash = label.find('-');
  if (dash == std::string::npos) return 1;
  return static_cast<std::size_t>(label.back() - label[dash - 1]) + 1;
}

const std::vector<std::string> kSurveyGroups = {"A5",       "PSL(2,7)",  "A6",       "PSL(2,8)", "PSL(2,11)",
                                                "PSL(2,13)", "PSL(2,17)", "A7",       "PSL(2,19)", "PSL(2,16)",
                                                "PSL(3,3)",  "PSU(3,3)",  "PSL(2,23)", "PSL(2,25)", "M11"};

Outcome criterion_survey() {
  Outcome out;
  const auto golden = read_csv(golden_path("survey_tables.csv"));
  std::size_t matched = 0;
  for (const std::string& spec : kSurveyGroups) {
    std::vector<std::pair<std::string, RowKey>> want;
    std::size_t order = 0;
    for (const auto& r : golden) {
      if (r.at("group") != spec) continue;
      order = std::stoul(r.at("order"));
      RowKey k{std::stoul(r.at("size")),        std::stoul(r.at("chi")),
               r.at("real") == "True",          r.at("irreducible") == "True",
               std::stoul(r.at("components")),  std::stoll(r.at("lambda_max")),
               std::stoul(r.at("sig_pos")),     std::stoul(r.at("sig_neg")),
               std::stoul(r.at("sig_zero"))};
      for (std::size_t i = 0; i < label_count(r.at("label")); ++i) want.emplace_back(r.at("label"), k);
    }
    const auto t0 = std::chrono::steady_clock::now();
    const Group& G = cache.get(spec);
    const SurveyReport& rep = cache.survey_of(spec);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool ok = G.order() == order;
    if (!ok) out.fail(spec + ": order " + std::to_string(G.order()) + ", table says " + std::to_string(order));
    std::multiset<RowKey> have;
    std::map<RowKey, std::vector<std::string>> our_labels;
    for (const SurveyRow& x : rep.rows) {
      if (x.error) {
        ok = false;
        out.fail(spec + " " + x.class_label + ": " + *x.error);
        continue;
      }
      RowKey k{x.class_size,    x.chi,         x.is_real, x.irreducible, x.components, x.lambda_max,
               x.signature.positive, x.signature.negative, x.signature.zero};
      have.insert(k);
      our_labels[k].push_back(x.class_label);
    }
    std::multiset<RowKey> missing;
    for (const auto& [label, k] : want) {
      auto it = have.find(k);
      if (it == have.end()) {
        missing.insert(k);
        continue;
      }
      have.erase(it);
    }
    if (!missing.empty() || !have.empty()) {
      ok = false;
      for (const RowKey& k : std::set<RowKey>(missing.begin(), missing.end()))
        for (const auto& [label, kk] : want)
          if (kk == k) {
            out.fail(spec + " " + label + ": printed row " + key_str(k) + " not produced");
            break;
          }
      for (const RowKey& k : std::set<RowKey>(have.begin(), have.end())) {
        std::string labels;
        for (const std::string& l : our_labels[k]) labels += (labels.empty() ? "" : ",") + l;
        out.fail(spec + " " + labels + ": produced row " + key_str(k) + " not printed");
      }
    }
    // Same numbers under a different class name are relabellings, not failures.
    for (const auto& r : golden) {
      if (r.at("group") != spec) continue;
      RowKey k{std::stoul(r.at("size")),       std::stoul(r.at("chi")),      r.at("real") == "True",
               r.at("irreducible") == "True",  std::stoul(r.at("components")), std::stoll(r.at("lambda_max")),
               std::stoul(r.at("sig_pos")),    std::stoul(r.at("sig_neg")),  std::stoul(r.at("sig_zero"))};
      auto it = our_labels.find(k);
      if (it == our_labels.end()) continue;
      const std::string printed = r.at("label");
      std::string ours;
      for (const std::string& l : it->second) ours += (ours.empty() ? "" : ",") + l;
      const std::string printed_order = printed.substr(0, printed.find_first_not_of("0123456789"));
      const bool seen = std::any_of(it->second.begin(), it->second.end(), [&](const std::string& l) {
        return l.substr(0, l.find_first_not_of("0123456789")) == printed_order;
      });
      if (!seen)
        out.note(spec + ": printed label " + printed + " names element order " + printed_order +
                 "; the classes with these values are " + ours);
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1fs", secs);
    out.note(spec + ": " + (ok ? "match" : "MISMATCH") + " (" + std::to_string(rep.rows.size()) + " classes, " +
             buf + ")");
    matched += ok;
  }
  out.summary = std::to_string(matched) + "/" + std::to_string(kSurveyGroups.size()) + " groups reproduce every column";
  return out;
}

// ---------------------------------------------------------------------------
// 2. Closed forms for the transpositions of S_n.

Outcome criterion_symmetric() {
  Outcome out;
  int good = 0;
  for (int n = 4; n <= 9; ++n) {
    const Group& G = cache.get("S" + std::to_string(n));
    const ConjClass& C = resolve_class(G, "2-cycles");
    const KillingForm K = killing_matrix(G, C);
    const TwoCycleEigenvalues E = two_cycles_eigenvalues(n);
    std::map<std::int64_t, std::size_t> want;
    want[E.trivial] += 1;
    want[E.standard] += static_cast<std::size_t>(n - 1);
    want[E.two_row] += static_cast<std::size_t>(n * (n - 3) / 2);

    bool ok = true;
    std::map<std::int64_t, std::size_t> got;
    for (const SpectrumEntry& e : spectrum(K.matrix, kDefaultMergeTol, false)) {
      const double r = std::round(e.eigenvalue);
      if (std::abs(e.eigenvalue - r) > kEigenTol) {
        ok = false;
        out.fail("S" + std::to_string(n) + ": eigenvalue " + std::to_string(e.eigenvalue) + " is not an integer");
      }
      got[static_cast<std::int64_t>(r)] += e.multiplicity;
    }
    if (got != want) {
      ok = false;
      out.fail("S" + std::to_string(n) + ": floating spectrum differs from the closed forms");
    }
    // Exact: K - E I has corank equal to the multiplicity of E.
    for (const auto& [ev, mult] : want) {
      const std::size_t rank = exact_rank(K.matrix.shifted(ev));
      if (rank + mult != K.dim()) {
        ok = false;
        out.fail("S" + std::to_string(n) + ": exact corank of K - " + std::to_string(ev) + "I is " +
                 std::to_string(K.dim() - rank) + ", expected " + std::to_string(mult));
      }
      if (ev <= 0) {
        ok = false;
        out.fail("S" + std::to_string(n) + ": eigenvalue " + std::to_string(ev) + " is not positive");
      }
    }
    if (n == 7 && want != std::map<std::int64_t, std::size_t>{{14, 14}, {19, 6}, {131, 1}}) {
      ok = false;
      out.fail("S7: closed forms do not give {131x1, 19x6, 14x14}");
    }
    std::ostringstream os;
    os << "S" << n << ": {";
    bool first = true;
    for (auto it = want.rbegin(); it != want.rend(); ++it) {
      os << (first ? "" : ", ") << it->first << "x" << it->second;
      first = false;
    }
    os << "} " << (ok ? "exact" : "MISMATCH");
    out.note(os.str());
    good += ok;
  }
  out.summary = std::to_string(good) + "/6 spectra equal the closed forms exactly";
  return out;
}

// ---------------------------------------------------------------------------
// 3. Casimir examples.

Outcome criterion_casimir() {
  Outcome out;
  struct Case {
    std::string group, cls, theta;
    std::string expected;  // with THETA standing for theta(<label of the class of `theta`>)
  };
  const std::vector<Case> cases = {{"A5", "2A", "(1,2)(3,4)", "15/14*e - 1/42*THETA"},
                                   {"S4", "2-cycles", "(1,2)(3,4)", "9/8*e - 1/8*THETA"}};
  int good = 0;
  for (const Case& c : cases) {
    const Group& G = cache.get(c.group);
    const ConjClass& C = resolve_class(G, c.cls);
    const std::string theta = "theta(" + resolve_class(G, c.theta).label + ")";
    std::string expected = c.expected;
    expected.replace(expected.find("THETA"), 5, theta);
    const std::string got = format_class_combination(casimir(killing_matrix(G, C)), G);
    const bool ok = got == expected;
    if (ok)
      out.note(c.group + " " + c.cls + ": " + got);
    else
      out.fail(c.group + " " + c.cls + ": got " + got + ", expected " + expected);
    good += ok;
  }
  out.summary = std::to_string(good) + "/2 Casimir elements exact";
  return out;
}

// ---------------------------------------------------------------------------
// 4. Decomposition tables.

struct Term {
  std::string label;
  std::string value;
};

std::vector<Term> parse_terms(const std::string& s) {
  std::vector<Term> out;
  std::istringstream in(s);
  for (std::string t; in >> t;) {
    const auto open = t.find('(');
    if (open == std::string::npos || t.back() != ')') throw std::runtime_error("bad term " + t);
    out.push_back({t.substr(0, open), t.substr(open + 1, t.size() - open - 2)});
  }
  return out;
}

bool value_matches(const std::string& printed, double x, bool integral) {
  if (printed.front() == '~') return std::abs(x - std::stod(printed.substr(1))) <= kEigenTol;
  const auto dot = printed.find('.');
  if (dot == std::string::npos) return integral && std::llround(x) == std::stoll(printed);
  const int decimals = static_cast<int>(printed.size() - dot - 1);
  const double scale = std::pow(10.0, decimals);
  const double target = std::stod(printed.size() == dot + 1 ? printed.substr(0, dot) : printed);
  return std::abs(std::trunc(x * scale) / scale - target) < 0.5 / scale;
}

Outcome criterion_decompositions() {
  Outcome out;
  const auto golden = read_csv(golden_path("decompositions.csv"));
  std::size_t good = 0;
  for (const auto& r : golden) {
    const std::string spec = r.at("group"), sel = r.at("class");
    const std::string tag = spec + " " + sel;
    try {
      const Group& G = cache.get(spec);
      const CharTable& T = cache.table(spec);
      const ConjClass& C = resolve_class(G, sel);
      std::map<std::string, std::string> canon;
      std::istringstream ps(r.at("pairs"));
      for (std::string p; ps >> p;) {
        const auto bar = p.find('|');
        canon[p.substr(bar + 1)] = p.substr(0, bar);
      }
      auto canonical = [&](const std::string& l) { return canon.count(l) ? canon[l] : l; };

      const KillingForm K = killing_matrix(G, C);
      const Decomposition D = eigenspace_decomposition(K, T);
      struct Produced {
        std::string label;
        double value;
        bool integral;
        bool used = false;
      };
      std::vector<Produced> produced;
      for (const DecompositionEntry& e : D.entries)
        for (std::size_t i = 0; i < T.size(); ++i)
          for (long m = 0; m < e.multiplicities[i]; ++m)
            produced.push_back({canonical(T.labels[i]), e.eigenvalue, e.integral});

      bool ok = C.size() == std::stoul(r.at("size"));
      if (!ok) out.fail(tag + ": class size " + std::to_string(C.size()) + ", table says " + r.at("size"));
      const auto terms = parse_terms(r.at("terms"));
      for (const Term& t : terms) {
        auto it = std::find_if(produced.begin(), produced.end(), [&](const Produced& p) {
          return !p.used && p.label == canonical(t.label) && value_matches(t.value, p.value, p.integral);
        });
        if (it == produced.end()) {
          ok = false;
          out.fail(tag + ": printed term " + t.label + "(" + t.value + ") not produced");
        } else {
          it->used = true;
        }
      }
      for (const Produced& p : produced)
        if (!p.used) {
          ok = false;
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.6f", p.value);
          out.fail(tag + ": produced term " + p.label + "(" + buf + ") not printed");
        }
      out.note(tag + ": " + (ok ? "match" : "MISMATCH") + "  " + format_decomposition(D, T));
      good += ok;
    } catch (const std::exception& e) {
      out.fail(tag + ": " + e.what());
    }
  }
  out.summary = std::to_string(good) + "/" + std::to_string(golden.size()) + " table rows reproduced";
  return out;
}

// ---------------------------------------------------------------------------
// 5. Property suites.

const std::vector<std::string> kPropertyGroups = {"S3",       "A4",        "S4",       "A5",       "PSL(2,7)",
                                                  "A6",       "PSL(2,8)",  "PSL(2,11)", "PSL(2,13)"};

void class_properties(const Group& G, const ConjClass& C, Outcome& out, std::size_t& checks) {
  const std::string tag = G.name() + " " + C.label;
  const KillingForm K = killing_matrix(G, C);
  const std::size_t n = K.dim();
  const IntSymMatrix& M = K.matrix;
  auto bad = [&](const std::string& what) { out.fail(tag + ": " + what); };

  if (!M.is_symmetric()) bad("not symmetric");
  for (const Perm& g : G.generators()) {
    const Perm gi = g.inverse();
    std::vector<std::size_t> img(n);
    for (std::size_t a = 0; a < n; ++a) img[a] = *C.position(g * C.members[a] * gi);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (M(img[a], img[b]) != M(a, b)) {
          bad("not ad-invariant");
          a = b = n;
        }
  }
  std::int64_t lam = 0;
  for (std::size_t b = 0; b < n; ++b) lam += M(0, b);
  for (std::size_t a = 0; a < n; ++a) {
    std::int64_t s = 0;
    for (std::size_t b = 0; b < n; ++b) s += M(a, b);
    if (s != lam) bad("row sums differ");
    if (M(a, a) < 1) bad("diagonal entry below 1");
  }
  const IndexVector Kt = apply(K, theta_vector(K));
  IndexVector want;
  for (std::size_t a = 0; a < n; ++a) want.add(a, lam);
  if (!(Kt == want)) bad("K theta != lambda_max theta");
  // Brute force |Z(ab) ∩ C| entrywise.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const Perm ab = C.members[a] * C.members[b];
      std::int64_t count = 0;
      for (const Perm& c : C.members) count += c.commutes_with(ab);
      if (count != M(a, b)) {
        bad("entry (" + std::to_string(a) + "," + std::to_string(b) + ") differs from brute force");
        a = b = n;
      }
    }
  if (C.inverse_class != C.index) {
    const KillingForm Ki = killing_matrix(G, G.class_at(C.inverse_class));
    Eigen::VectorXd x = eigenvalues(M), y = eigenvalues(Ki.matrix);
    const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
    if ((x - y).cwiseAbs().maxCoeff() > kSpectrumMatchTol * scale) bad("spectrum differs from the inverse class");
  }
  const CharTable& T = cache.table(G.name());
  const Decomposition D = eigenspace_decomposition(K, T);
  for (const DecompositionEntry& e : D.entries)
    for (std::size_t i = 0; i < T.size(); ++i)
      if (e.multiplicities[i] != e.multiplicities[T.dual[i]])
        bad("irreps " + T.labels[i] + " and " + T.labels[T.dual[i]] + " differ in one eigenspace");
  ++checks;
}

Outcome criterion_properties() {
  Outcome out;
  std::size_t checks = 0;
  for (const std::string& spec : kPropertyGroups) {
    const Group& G = cache.get(spec);
    if (G.order() > kPropertyOrderCap) continue;
    const std::size_t before = out.details.size();
    for (std::size_t k = 1; k < G.classes().size(); ++k) class_properties(G, G.class_at(k), out, checks);

    const CharTable& T = cache.table(spec);
    ClassFunction reg(G.classes().size(), 0.0);
    reg[0] = static_cast<double>(G.order());
    std::vector<long> degrees(T.degrees.begin(), T.degrees.end());
    if (multiplicities(reg, T) != degrees) out.fail(spec + ": regular character multiplicities differ from degrees");

    std::string roth_note;
    const RothResult roth = roth_check(G, T);
    if (roth.holds) {
      const KillingForm W = universal_killing(G);
      if (exact_rank(W.matrix) != W.dim()) out.fail(spec + ": Roth property holds but universal form is degenerate");
      const auto mult = multiplicities(universal_character(G), T);
      const IndexVector m = m_vector(G, mult, T);
      const auto pairing = m_pairing(G, m, universal_character_values(G));
      for (std::size_t k = 1; k < pairing.size(); ++k)
        if (std::abs(pairing[k].get_d()) > kPairingTol)
          out.fail(spec + ": K_W(m, x_a) = " + pairing[k].get_str() + " on class " + G.class_at(k).label);
      roth_note = "Roth holds, universal form nondegenerate, m-vector orthogonal";
    } else {
      roth_note = "Roth fails, universal implication vacuous";
    }
    const bool clean = out.details.size() == before;
    out.note(spec + ": " + (clean ? "all properties hold" : "VIOLATIONS") + " (" +
             std::to_string(G.classes().size() - 1) + " classes; " + roth_note + ")");
  }
  out.summary = std::to_string(checks) + " class forms checked on " + std::to_string(kPropertyGroups.size()) +
                " groups";
  return out;
}

// ---------------------------------------------------------------------------
// 6. Sign representation and Euler's identity.

Outcome criterion_sign() {
  Outcome out;
  std::size_t classes = 0;
  for (int n = 1; n <= 8; ++n) {
    const Group& G = cache.get("S" + std::to_string(n));
    const Partition sign_shape(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const ConjClass& C : G.classes()) {
      const Partition mu = Partition::of_perm(C.rep);
      const ClassFunction chi = conjugation_character(G, C);
      double s = 0;
      for (const ConjClass& D : G.classes())
        s += static_cast<double>(D.size()) * chi[D.index].real() *
             static_cast<double>(symmetric_character(sign_shape, Partition::of_perm(D.rep)));
      s /= static_cast<double>(G.order());
      const long mult = std::lround(s);
      if (std::abs(s - static_cast<double>(mult)) > 1e-9 || mult < 0 || mult > 1)
        out.fail("S" + std::to_string(n) + " " + mu.str() + ": sign multiplicity " + std::to_string(s));
      if ((mult == 1) != sign_rep_occurs(mu))
        out.fail("S" + std::to_string(n) + " " + mu.str() + ": distinct-odd-parts test disagrees with characters");
      ++classes;
    }
  }
  out.note(std::to_string(classes) + " classes of S_1..S_8 agree with the character computation");
  for (int n = 1; n <= 20; ++n) {
    long long odd_distinct = 0, even_minus_odd = 0;
    for (const Partition& p : partitions(n)) {
      std::set<int> seen(p.parts.begin(), p.parts.end());
      bool all_odd = std::all_of(p.parts.begin(), p.parts.end(), [](int x) { return x % 2 == 1; });
      odd_distinct += all_odd && seen.size() == p.parts.size();
      even_minus_odd += (n - static_cast<int>(p.length())) % 2 == 0 ? 1 : -1;
    }
    const auto [a, b] = euler_count(n);
    if (a != odd_distinct || b != even_minus_odd || a != b)
      out.fail("n=" + std::to_string(n) + ": euler_count (" + std::to_string(a) + "," + std::to_string(b) +
               "), enumeration (" + std::to_string(odd_distinct) + "," + std::to_string(even_minus_odd) + ")");
  }
  out.note("euler_count agrees with enumeration for n <= 20");
  out.summary = "sign occurrence and Euler counts";
  return out;
}

// ---------------------------------------------------------------------------
// 7. Conjectures as warnings on the fixture set.

Outcome criterion_conjectures() {
  Outcome out;
  // Classes of involutions in these groups are the only reducible ones seen.
  const std::set<std::string> char2 = {"A5", "PSL(2,8)", "PSL(2,16)"};
  std::size_t rows = 0, violations = 0;
  for (const std::string& spec : kSurveyGroups) {
    const SurveyReport& rep = cache.survey_of(spec);
    for (const std::string& w : rep.warnings) {
      out.fail(spec + " " + w);
      ++violations;
    }
    for (const SurveyRow& x : rep.rows) {
      ++rows;
      if (!x.error && !x.irreducible && !(x.element_order == 2 && char2.count(spec))) {
        out.fail(spec + " " + x.class_label + ": reducible outside the characteristic 2 involution classes");
        ++violations;
      }
    }
  }
  out.note(std::to_string(rows) + " class forms on " + std::to_string(kSurveyGroups.size()) +
           " groups: real classes nondegenerate, involutions positive definite, other real classes split evenly");
  for (const std::string& spec : kSurveyGroups) {
    const Group& G = cache.get(spec);
    if (G.order() > kPropertyOrderCap) continue;
    const KillingForm W = universal_killing(G);
    if (exact_rank(W.matrix) != W.dim()) {
      out.fail(spec + ": universal form degenerate");
      ++violations;
    }
  }
  out.note("universal form nondegenerate on the fixture groups of order <= " + std::to_string(kPropertyOrderCap));
  out.note("groups beyond the fixture set (orders up to 75000) are not attempted");
  out.summary = std::to_string(violations) + " violations on the fixture set";
  return out;
}

// ---------------------------------------------------------------------------
// Extended: PSL(3,4) 7A, a degenerate 2880-dimensional form.

Outcome extended_psl34() {
  Outcome out;
  const Group G = build_named_group("PSL(3,4)");
  SurveyOptions opt;
  opt.jobs = std::max(1u, std::thread::hardware_concurrency());
  for (const ConjClass& C : G.classes()) {
    if (C.element_order != 7) continue;
    const SurveyRow x = survey_class(G, C, opt);
    if (x.error) {
      out.fail(C.label + ": " + *x.error);
      continue;
    }
    const bool ok = x.class_size == 2880 && x.chi == 3 && !x.is_real && x.irreducible && x.lambda_max == 2466 &&
                    x.signature == Signature{1398, 1302, 180};
    const std::string row = "|C|=" + std::to_string(x.class_size) + " lmax=" + std::to_string(x.lambda_max) +
                            " sig=(" + std::to_string(x.signature.positive) + "," +
                            std::to_string(x.signature.negative) + "," + std::to_string(x.signature.zero) + ")";
    if (ok)
      out.note(C.label + ": " + row);
    else
      out.fail(C.label + ": " + row + ", expected |C|=2880 lmax=2466 sig=(1398,1302,180)");
  }
  out.summary = "PSL(3,4) order-7 classes";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> selected;
  bool extended = false;
  app.add_option("--criterion", selected, "Criteria to run (default: all)")->check(CLI::Range(1, 7));
  app.add_flag("--extended", extended, "Also run the PSL(3,4) order-7 classes");
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7};

  const std::map<int, std::pair<std::string, Outcome (*)()>> criteria = {
      {1, {"survey tables", criterion_survey}},
      {2, {"S_n transposition spectra", criterion_symmetric}},
      {3, {"Casimir examples", criterion_casimir}},
      {4, {"eigenspace decompositions", criterion_decompositions}},
      {5, {"property suites", criterion_properties}},
      {6, {"sign representation", criterion_sign}},
      {7, {"conjectures on fixtures", criterion_conjectures}},
  };
  bool all = true;
  auto report = [&](const std::string& name, const std::function<Outcome()>& run) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << name << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.summary << '\n';
    for (const std::string& d : o.details) std::cout << "    " << d << '\n';
    std::cout.flush();
    all = all && o.pass;
  };
  for (int c : selected) {
    const auto& [name, fn] = criteria.at(c);
    report("criterion " + std::to_string(c) + " (" + name + ")", fn);
  }
  if (extended) report("extended (PSL(3,4) 7A-B)", extended_psl34);
  return all ? 0 : 1;
}
