#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "killform/decomposition.hpp"
#include "killform/group.hpp"
#include "killform/killing.hpp"
#include "killform/linalg.hpp"

namespace killform {

struct SurveyOptions {
  std::size_t matrix_cap = kDefaultMatrixCap;
  std::size_t exact_cap = kDefaultExactCap;
  std::size_t jobs = 1;
  std::uint64_t seed = 1;
};

struct SurveyRow {
  std::string class_label;
  std::size_t element_order = 0;
  std::size_t class_size = 0;
  std::size_t chi = 0;
  bool is_real = true;
  bool irreducible = true;
  std::size_t components = 1;
  std::int64_t lambda_max = 0;
  Signature signature;
  bool nondegenerate = false;
  std::string method;                // how the signature was certified
  std::optional<std::string> error;  // per-class failure; other fields unset
};

struct SurveyReport {
  std::string group;
  std::size_t order = 0;
  std::uint64_t seed = 1;
  std::vector<SurveyRow> rows;        // one per nontrivial class, in class order
  std::vector<std::string> warnings;  // conjecture violations, never fatal
};

SurveyRow survey_class(const Group& G, const ConjClass& C, const SurveyOptions& opt = {});
// Classes are spread over opt.jobs workers; row order does not depend on
// completion order.
SurveyReport survey(const Group& G, const SurveyOptions& opt = {});

// Findings for one row: degenerate real class, real non-involution class
// with nonzero signature, involution class that is not positive definite.
std::vector<std::string> conjecture_warnings(const SurveyRow& row);

// CSV columns class,size,chi,real,irreducible,components,lambda_max,
// sig_pos,sig_neg,sig_zero,nondegenerate.
std::string to_csv(const SurveyReport& r);
nlohmann::json to_json(const SurveyReport& r);
// Markdown table; classes of one element order with identical rows are
// merged under a range label such as 5A-B.
std::string to_markdown(const SurveyReport& r);

struct AmalgamatedRow {
  std::string label;  // "7A-C"
  std::size_t count = 1;
  SurveyRow row;
};
std::vector<AmalgamatedRow> amalgamate(const std::vector<SurveyRow>& rows);

// Resolves a class selector: an ATLAS-style label ("2A"), a cycle type
// ("2,1,1", "2-cycles", "2-2-cycles"), or a representative in cycle
// notation ("(1,2)(3,4)" or the digits of a single cycle, "1234").
// Parenthesised text is always read as cycle notation. Throws
// UnknownSpec.
const ConjClass& resolve_class(const Group& G, const std::string& selector);

struct SpectrogramRow {
  std::string class_label;
  double eigenvalue = 0;
  bool integral = false;
  std::size_t multiplicity = 0;
};
// Distinct eigenvalues of every nontrivial class form, plus error markers
// for classes beyond the caps.
std::vector<SpectrogramRow> spectrogram(const Group& G, const SurveyOptions& opt,
                                        std::vector<std::string>* errors = nullptr);
std::string spectrogram_csv(const std::vector<SpectrogramRow>& rows, const std::vector<std::string>& errors);

}  // namespace killform
