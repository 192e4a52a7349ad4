#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "killform/group.hpp"

namespace killform {

inline constexpr std::size_t kDefaultClassCap = 64;
inline constexpr double kOrthogonalityTol = 1e-8;
inline constexpr double kIntegralityTol = 1e-6;

using Complex = std::complex<double>;
// One value per conjugacy class, in the group's class order.
using ClassFunction = std::vector<Complex>;

struct CharTable {
  std::string name;
  std::string provenance;
  std::size_t group_order = 0;
  std::vector<std::string> class_labels;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> inverse_class;  // class of g^-1
  std::vector<std::size_t> class_orders;   // element orders; may be empty
  // power_maps[k][t] = class of g_k^t for 0 <= t < class_orders[k]. Used to
  // find Galois orbits when naming irreps; may be empty for imported tables.
  std::vector<std::vector<std::size_t>> power_maps;
  std::vector<std::size_t> degrees;
  std::vector<std::vector<Complex>> chars;  // chars[irrep][class]

  // Filled by finalize().
  std::vector<bool> rational;   // all values rational integers
  std::vector<bool> real;       // all values real
  std::vector<std::size_t> dual;  // irrep with the complex conjugate character
  std::vector<std::string> labels;

  std::size_t size() const { return chars.size(); }
  std::size_t class_count() const { return class_sizes.size(); }
  // Sorts irreps (trivial first, then by degree), sets the flags and names.
  // Names are the degree plus '*'s distinguishing Galois units of equal
  // degree; the second member of an irrational or complex pair gets a 'b'
  // suffix (for "bar"), e.g. 10, 10*, 10*b.
  void finalize();
  std::size_t index_of_label(const std::string& label) const;
};

// Burnside-Dixon-Schneider: simultaneous eigenvectors of the class
// multiplication matrices over GF(p), lifted to complex values. Throws
// CapExceeded, NoSuitablePrime or OrthogonalityFailure.
CharTable character_table(const Group& G, std::size_t class_cap = kDefaultClassCap);

// Throws OrthogonalityFailure if either orthogonality relation is off by
// more than tol.
void check_orthogonality(const CharTable& T, double tol = kOrthogonalityTol);

nlohmann::json to_json(const CharTable& T);
// Throws ParseError on malformed input or a missing provenance field.
CharTable char_table_from_json(const nlohmann::json& j);
// Checks that an imported table describes G's classes (same labels and sizes).
void check_table_matches(const CharTable& T, const Group& G);

// Character of the conjugation action on the span of C: |Z(g) ∩ C|.
ClassFunction conjugation_character(const Group& G, const ConjClass& C);
// Character of the conjugation action on CG: g -> |Z(g)|.
ClassFunction regular_conjugation_character(const Group& G);
// g -> |Z(g)| - 1, the conjugation action on the span of G \ {e}.
ClassFunction universal_character(const Group& G);

// <f, chi_i> for every irrep. Throws NotACharacter if a value is more than
// 1e-6 away from a non-negative integer.
std::vector<long> multiplicities(const ClassFunction& f, const CharTable& T);
// Raw inner products, without the integrality gate.
std::vector<Complex> inner_products(const ClassFunction& f, const CharTable& T);

struct RothResult {
  bool holds = false;
  std::vector<long> multiplicities;
};
// Throws NontrivialCentre.
RothResult roth_check(const Group& G, const CharTable& T);

// |C| chi_i(g) / chi_i(1), the scalar by which the class sum of C acts on V_i.
Complex central_character(const CharTable& T, std::size_t class_index, std::size_t irrep);

}  // namespace killform
