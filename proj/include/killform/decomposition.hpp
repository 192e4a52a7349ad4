#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "killform/characters.hpp"
#include "killform/killing.hpp"

namespace killform {

inline constexpr double kProjectorTol = 1e-4;

struct DecompositionEntry {
  double eigenvalue = 0;
  std::size_t dim = 0;
  bool integral = false;
  std::vector<long> multiplicities;  // copies of each irrep, in table order
};

struct Decomposition {
  std::vector<DecompositionEntry> entries;  // decreasing eigenvalue
  std::size_t total_dim() const;
};

// Splits the span of C into eigenspaces of K and each eigenspace into
// irreps. The character of the conjugation action restricted to an
// eigenspace with orthonormal basis U is g -> sum_b (U U^T)[b][g b g^-1];
// its inner products with the irreducible characters give the copy counts.
// Throws ProjectorMismatch when a count is not an integer within
// kProjectorTol, or when counts and dimensions disagree.
Decomposition eigenspace_decomposition(const KillingForm& K, const CharTable& T,
                                       double merge_tol = kDefaultMergeTol);

// Findings, empty when clean: an integral-eigenvalue check for rational
// irreps whose whole isotypic component lies in one eigenspace, and equal
// counts for dual irreps in every eigenspace.
std::vector<std::string> integrality_audit(const Decomposition& D, const CharTable& T);

// Eigenvalue printed as an integer when integral, else to 6 decimals.
std::string format_eigenvalue(const DecompositionEntry& e);
// "1(21)+4(21)+5(12)+5(12)": one term per copy, eigenvalues decreasing,
// irreps in table order within an eigenspace. `sep` joins the terms.
std::string format_decomposition(const Decomposition& D, const CharTable& T,
                                 const std::string& sep = "+");

}  // namespace killform
