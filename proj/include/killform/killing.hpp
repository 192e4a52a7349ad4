#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "killform/characters.hpp"
#include "killform/group.hpp"
#include "killform/linalg.hpp"

namespace killform {

// Sparse exact-rational combination of keys. Zero coefficients are never
// stored.
template <class Key>
class AlgebraVector {
 public:
  void add(const Key& k, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  mpq_class coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? mpq_class(0) : it->second;
  }
  const std::map<Key, mpq_class>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  bool operator==(const AlgebraVector&) const = default;

 private:
  std::map<Key, mpq_class> terms_;
};

// Element of the group algebra QG.
using GroupAlgebra = AlgebraVector<Perm>;
// Vector indexed by position: either a member of a class (vectors in the
// span of C) or a class index (combinations of class sums).
using IndexVector = AlgebraVector<std::size_t>;

GroupAlgebra operator*(const GroupAlgebra& x, const GroupAlgebra& y);

struct KillingAnalysis {
  bool is_real = true;
  std::optional<std::int64_t> lambda_max;  // common row sum; absent for universal forms
  std::size_t component_count = 0;
  Signature signature;
  std::string signature_method;
  bool nondegenerate = false;
  std::optional<std::size_t> chi_on_class;  // |Z(g) ∩ C| for g in C
};

struct KillingForm {
  const Group* group = nullptr;
  std::optional<std::size_t> class_index;  // empty for the universal calculus
  bool includes_identity = false;          // universal diagnostic mode
  IntSymMatrix matrix;
  std::vector<std::uint32_t> basis;  // element index of each row
  std::optional<KillingAnalysis> analysis;

  bool universal() const { return !class_index.has_value(); }
  std::size_t dim() const { return matrix.dim(); }
};

// K[a][b] = |Z(ab) ∩ C| over the members of C. Only the first row's worth
// of values f(h) = |Z(gh) ∩ C| is computed; row a is read off as
// f(s(a)^-1 b s(a)). Rows are split across `jobs` threads.
// Throws CapExceeded or std::invalid_argument for the identity class.
KillingForm killing_matrix(const Group& G, const ConjClass& C,
                           std::size_t cap = kDefaultMatrixCap, std::size_t jobs = 1);

// K[a][b] = |Z(ab)| - 1 over G \ {e}, or over all of G (identity first) when
// include_identity is set.
KillingForm universal_killing(const Group& G, bool include_identity = false,
                              std::size_t cap = kDefaultMatrixCap);

// Fills K.analysis. Throws RowSumMismatch when a class form has unequal row
// sums.
const KillingAnalysis& analyze(KillingForm& K, const SignatureOptions& opt = {});

// All-ones vector over the members of C.
IndexVector theta_vector(const KillingForm& K);

// Exact K v for a vector over the basis positions.
IndexVector apply(const KillingForm& K, const IndexVector& v);

// sum_{a,b} (K^-1)[a][b] ab in QG. Throws SingularMatrix or CapExceeded.
GroupAlgebra casimir_element(const KillingForm& K, std::size_t cap = kDefaultInverseCap);
// The Casimir as a combination of class sums, keyed by class index (class 0
// is {e}). Throws NotCentral if the element is not constant on classes.
IndexVector casimir(const KillingForm& K, std::size_t cap = kDefaultInverseCap);
// "15/14*e - 1/42*theta(2A)"
std::string format_class_combination(const IndexVector& v, const Group& G);

// m = sum_g (sum_i d_i^2 conj(chi_i(g)) / <chi_i, chi_W>) g, returned per
// class (the coefficient of every g in class k is the entry at k). Throws
// ZeroMultiplicity, or NotACharacter if a coefficient is not rational.
IndexVector m_vector(const Group& G, const std::vector<long>& w_multiplicities, const CharTable& T);

// K_W(m, x_a) = sum_g m(g) chi_W(ga) for a class representative a of every
// class, computed exactly. chi_W is given per class.
std::vector<mpq_class> m_pairing(const Group& G, const IndexVector& m,
                                 const std::vector<std::int64_t>& chi_w);

// g -> |Z(g)| - 1 per class, the character of the span of G \ {e}.
std::vector<std::int64_t> universal_character_values(const Group& G);

}  // namespace killform
