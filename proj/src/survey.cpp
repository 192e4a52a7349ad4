#include "killform/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <regex>
#include <sstream>
#include <thread>

#include "killform/errors.hpp"
#include "killform/specht.hpp"

namespace killform {

namespace {

std::string py_bool(bool b) { return b ? "True" : "False"; }

std::string sig_str(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," + std::to_string(s.zero) + ")";
}

bool same_fields(const SurveyRow& a, const SurveyRow& b) {
  return !a.error && !b.error && a.element_order == b.element_order && a.class_size == b.class_size &&
         a.chi == b.chi && a.is_real == b.is_real && a.irreducible == b.irreducible &&
         a.components == b.components && a.lambda_max == b.lambda_max && a.signature == b.signature;
}

// "7A" + "7C" -> "7A-C"
std::string range_label(const std::string& first, const std::string& last) {
  if (first == last) return first;
  std::size_t i = 0;
  while (i < first.size() && i < last.size() && first[i] == last[i] && std::isdigit(static_cast<unsigned char>(first[i])))
    ++i;
  return first + "-" + last.substr(i);
}

std::string format_double(double x) {
  if (x == 0) x = 0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

SurveyRow survey_class(const Group& G, const ConjClass& C, const SurveyOptions& opt) {
  SurveyRow row;
  row.class_label = C.label;
  row.element_order = C.element_order;
  row.class_size = C.size();
  row.is_real = C.is_real;
  try {
    KillingForm K = killing_matrix(G, C, opt.matrix_cap);
    SignatureOptions so;
    so.exact_cap = opt.exact_cap;
    so.seed = opt.seed;
    const KillingAnalysis& A = analyze(K, so);
    row.chi = A.chi_on_class.value_or(0);
    row.components = A.component_count;
    row.irreducible = A.component_count == 1;
    row.lambda_max = A.lambda_max.value_or(0);
    row.signature = A.signature;
    row.nondegenerate = A.nondegenerate;
    row.method = A.signature_method;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

SurveyReport survey(const Group& G, const SurveyOptions& opt) {
  SurveyReport r;
  r.group = G.name();
  r.order = G.order();
  r.seed = opt.seed;
  const std::size_t n = G.classes().size() > 0 ? G.classes().size() - 1 : 0;
  r.rows.resize(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) r.rows[i] = survey_class(G, G.class_at(i + 1), opt);
  };
  const std::size_t jobs = std::clamp<std::size_t>(opt.jobs, 1, std::max<std::size_t>(n, 1));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const SurveyRow& row : r.rows)
    for (std::string& w : conjecture_warnings(row)) r.warnings.push_back(std::move(w));
  return r;
}

std::vector<std::string> conjecture_warnings(const SurveyRow& row) {
  std::vector<std::string> out;
  if (row.error) return out;
  const std::string& c = row.class_label;
  if (row.is_real && !row.nondegenerate)
    out.push_back(c + ": real class with degenerate Killing form, z=" + std::to_string(row.signature.zero));
  if (row.is_real && row.element_order > 2 && row.signature.positive != row.signature.negative &&
      row.nondegenerate)
    out.push_back(c + ": real class of order " + std::to_string(row.element_order) +
                  " with p != n, signature " + sig_str(row.signature));
  if (row.element_order == 2 && (row.signature.negative != 0 || row.signature.zero != 0))
    out.push_back(c + ": involution class not positive definite, signature " + sig_str(row.signature));
  return out;
}

std::string to_csv(const SurveyReport& r) {
  std::ostringstream os;
  os << "class,size,chi,real,irreducible,components,lambda_max,sig_pos,sig_neg,sig_zero,nondegenerate\n";
  for (const SurveyRow& x : r.rows) {
    if (x.error) {
      os << x.class_label << ',' << x.class_size << ",,,,,,,,,\n";
      continue;
    }
    os << x.class_label << ',' << x.class_size << ',' << x.chi << ',' << py_bool(x.is_real) << ','
       << py_bool(x.irreducible) << ',' << x.components << ',' << x.lambda_max << ',' << x.signature.positive
       << ',' << x.signature.negative << ',' << x.signature.zero << ',' << py_bool(x.nondegenerate) << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const SurveyReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SurveyRow& x : r.rows) {
    nlohmann::json j;
    j["class"] = x.class_label;
    j["element_order"] = x.element_order;
    j["size"] = x.class_size;
    if (x.error) {
      j["error"] = *x.error;
    } else {
      j["chi"] = x.chi;
      j["real"] = x.is_real;
      j["irreducible"] = x.irreducible;
      j["components"] = x.components;
      j["lambda_max"] = x.lambda_max;
      j["signature"] = {x.signature.positive, x.signature.negative, x.signature.zero};
      j["nondegenerate"] = x.nondegenerate;
      j["method"] = x.method;
    }
    rows.push_back(std::move(j));
  }
  nlohmann::json out;
  out["group"] = r.group;
  out["order"] = r.order;
  out["seed"] = r.seed;
  out["rows"] = std::move(rows);
  out["warnings"] = r.warnings;
  return out;
}

std::vector<AmalgamatedRow> amalgamate(const std::vector<SurveyRow>& rows) {
  std::vector<AmalgamatedRow> out;
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i + 1;
    while (j < rows.size() && same_fields(rows[i], rows[j])) ++j;
    out.push_back({range_label(rows[i].class_label, rows[j - 1].class_label), j - i, rows[i]});
    i = j;
  }
  return out;
}

std::string to_markdown(const SurveyReport& r) {
  std::ostringstream os;
  os << "## " << r.group << " (order " << r.order << ", seed " << r.seed << ")\n\n";
  os << "| Class | Size | chi | Real | Irreducible | lambda_max | Signature |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const AmalgamatedRow& a : amalgamate(r.rows)) {
    const SurveyRow& x = a.row;
    if (x.error) {
      os << "| " << a.label << " | " << x.class_size << " | error: " << *x.error << " | | | | |\n";
      continue;
    }
    os << "| " << a.label << " | " << x.class_size << " | " << x.chi << " | " << py_bool(x.is_real) << " | "
       << py_bool(x.irreducible);
    if (!x.irreducible) os << " (" << x.components << ")";
    os << " | " << x.lambda_max << " | " << sig_str(x.signature) << " |\n";
  }
  if (!r.warnings.empty()) {
    os << "\nWarnings:\n";
    for (const std::string& w : r.warnings) os << "- " << w << '\n';
  }
  return os.str();
}

const ConjClass& resolve_class(const Group& G, const std::string& selector) {
  for (const ConjClass& C : G.classes())
    if (C.label == selector) return C;

  const auto by_type = [&](const Partition& mu) -> const ConjClass& {
    const ConjClass* hit = nullptr;
    for (const ConjClass& C : G.classes()) {
      if (Partition::of_perm(C.rep) != mu) continue;
      if (hit) throw UnknownSpec("cycle type " + mu.str() + " splits into several classes of " + G.name());
      hit = &C;
    }
    if (!hit) throw UnknownSpec("no class of cycle type " + mu.str() + " in " + G.name());
    return *hit;
  };
  const int n = static_cast<int>(G.degree());

  try {
    if (selector.find('(') != std::string::npos) {
      const Perm p = Perm::from_cycles(selector, G.degree());
      if (!G.index_of(p)) throw UnknownSpec(selector + " is not an element of " + G.name());
      return G.class_at(G.class_of(p));
    }
    static const std::regex cycles(R"((\d+(?:-\d+)*)-cycles?)");
    std::smatch m;
    if (std::regex_match(selector, m, cycles)) {
      std::string parts = m[1];
      std::replace(parts.begin(), parts.end(), '-', ',');
      return by_type(Partition::parse(parts, n));
    }
    static const std::regex partition(R"(\d+(?:,\d+)+)");
    if (std::regex_match(selector, partition)) return by_type(Partition::parse(selector, n));
    static const std::regex digits(R"(\d{2,})");
    if (std::regex_match(selector, digits)) {
      std::string cyc = "(";
      for (std::size_t i = 0; i < selector.size(); ++i) cyc += (i ? "," : "") + selector.substr(i, 1);
      return resolve_class(G, cyc + ")");
    }
  } catch (const ParseError& e) {
    throw UnknownSpec("bad class selector '" + selector + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UnknownSpec("bad class selector '" + selector + "': " + e.what());
  }
  throw UnknownSpec("no class '" + selector + "' in " + G.name());
}

std::vector<SpectrogramRow> spectrogram(const Group& G, const SurveyOptions& opt, std::vector<std::string>* errors) {
  std::vector<SpectrogramRow> out;
  for (std::size_t k = 1; k < G.classes().size(); ++k) {
    const ConjClass& C = G.class_at(k);
    try {
      KillingForm K = killing_matrix(G, C, opt.matrix_cap, opt.jobs);
      for (const SpectrumEntry& e : spectrum(K.matrix, kDefaultMergeTol, false))
        out.push_back({C.label, e.eigenvalue, e.integral, e.multiplicity});
    } catch (const Error& e) {
      if (errors) errors->push_back(C.label + ": " + e.what());
    }
  }
  return out;
}

std::string spectrogram_csv(const std::vector<SpectrogramRow>& rows, const std::vector<std::string>& errors) {
  if (rows.empty() && errors.empty()) return "";
  std::ostringstream os;
  os << "class,eigenvalue,multiplicity\n";
  for (const SpectrogramRow& r : rows) {
    os << r.class_label << ',';
    if (r.integral)
      os << static_cast<long long>(std::llround(r.eigenvalue));
    else
      os << format_double(r.eigenvalue);
    os << ',' << r.multiplicity << '\n';
  }
  // Classes beyond the caps keep a row with the error in place of data.
  for (const std::string& e : errors) os << "# error " << e << '\n';
  return os.str();
}

}  // namespace killform
