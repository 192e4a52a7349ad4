#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "killform/characters.hpp"
#include "killform/group.hpp"
#include "killform/killing.hpp"

namespace killform {

inline constexpr int kDefaultSpechtCap = 8;
inline constexpr std::size_t kSymmetrizerTermCap = 1000000;

struct Partition {
  std::vector<int> parts;  // weakly decreasing, all >= 1

  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and decreasing.
  explicit Partition(std::vector<int> p);
  // "2,1,1" or "(2,1,1)". With n > 0, missing 1s are appended up to n.
  static Partition parse(std::string_view text, int n = 0);
  static Partition of_perm(const Perm& p);

  int n() const;
  std::size_t length() const { return parts.size(); }
  Partition conjugate() const;
  std::string str() const;  // "(2,1,1)"
  auto operator<=>(const Partition&) const = default;
};

// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions(int n);

// Boxes filled by 1..n, row by row.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  // Throws std::invalid_argument unless rows fit a partition shape and hold
  // 1..n exactly once.
  explicit Tableau(std::vector<std::vector<int>> r);
  static Tableau row_reading(const Partition& shape);
  int n() const { return shape.n(); }
  bool is_standard() const;
};

std::vector<Tableau> standard_tableaux(const Partition& shape);

// Row group R(T) and column group C(T), as permutations of n points.
std::pair<std::vector<Perm>, std::vector<Perm>> row_and_column_groups(const Tableau& T);

// c_T = b_T a_T, where a_T sums R(T) and b_T is the signed sum over C(T).
// Throws CapExceeded if |R(T)| |C(T)| exceeds kSymmetrizerTermCap.
GroupAlgebra young_symmetrizer(const Tableau& T);

// pi(sum c_s s) = sum c_s s a s^-1, in the basis of positions in C; `a`
// defaults to C's representative.
IndexVector project_to_class(const GroupAlgebra& v, const ConjClass& C);
IndexVector project_to_class(const GroupAlgebra& v, const ConjClass& C, const Perm& a);
// pi(c_T) applied to a without expanding c_T: the row sum first, then the
// signed column sum.
IndexVector symmetrizer_on(const Tableau& T, const ConjClass& C, const Perm& a);

struct SpechtOccurrence {
  bool occurs = false;
  // "standard" when some standard tableau already gives a nonzero vector on
  // the class representative, "full" when every member had to be tried.
  std::string method;
};

// Whether S^lambda embeds in the conjugation representation on C_mu.
// Throws CapExceeded when n exceeds cap.
SpechtOccurrence specht_occurs_detail(const Partition& lambda, const Partition& mu,
                                      int cap = kDefaultSpechtCap);
bool specht_occurs(const Partition& lambda, const Partition& mu, int cap = kDefaultSpechtCap);

// The sign representation occurs in C_mu iff mu has distinct odd parts.
bool sign_rep_occurs(const Partition& mu);

// (number of partitions of n into distinct odd parts,
//  number of even classes minus number of odd classes of S_n)
std::pair<long long, long long> euler_count(int n);

struct TwoCycleEigenvalues {
  std::int64_t trivial, standard, two_row;  // S^(n), S^(n-1,1), S^(n-2,2)
};
TwoCycleEigenvalues two_cycles_eigenvalues(int n);

// (K v)[b] / v[b]. Throws NotAnEigenvector if K v is not a multiple of v,
// std::invalid_argument if v = 0.
mpq_class eigenvalue_from_vector(const KillingForm& K, const IndexVector& v);

// Eigenvectors on the transpositions of S_n, n >= 4:
// (12)+(13)+...+(1,n-1)-(2,n)-...-(n-1,n) and (12)-(2,n-1)-(1,n)+(n-1,n).
IndexVector standard_vector(const ConjClass& transpositions, int n);
IndexVector two_row_vector(const ConjClass& transpositions, int n);

// chi^lambda on cycle type mu, by Murnaghan-Nakayama.
long long symmetric_character(const Partition& lambda, const Partition& mu);
long long hook_dimension(const Partition& lambda);

// Partition of each irrep in a character table of S_n built from G, matched
// by character values. Throws OrthogonalityFailure if some row does not
// match.
std::vector<Partition> symmetric_irreps(const CharTable& T, const Group& G);
// Renames the irreps of an S_n table: degree, with a 'b' suffix on the
// smaller of a conjugate pair lambda, lambda', and '*'s separating distinct
// pairs of equal degree. S_4: (4)=1, (1^4)=1b, (2,2)=2, (3,1)=3, (2,1,1)=3b.
void label_symmetric_table(CharTable& T, const Group& G);

}  // namespace killform
