#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

namespace killform {

inline constexpr std::size_t kDefaultMatrixCap = 4096;
inline constexpr std::size_t kDefaultExactCap = 4096;
inline constexpr std::size_t kDefaultInverseCap = 512;
inline constexpr double kDefaultMergeTol = 1e-8;
inline constexpr double kSeparationRatio = 1e3;

// Dense symmetric integer matrix. Entries are stored as int64; every
// derived computation is done mod p or in GMP integers/rationals, so no
// arithmetic on entries can overflow.
class IntSymMatrix {
 public:
  IntSymMatrix() = default;
  explicit IntSymMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0) {}
  // Throws std::invalid_argument unless rows form a symmetric square matrix.
  static IntSymMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t dim() const { return dim_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  const std::int64_t* row(std::size_t i) const { return a_.data() + i * dim_; }
  std::int64_t* mutable_row(std::size_t i) { return a_.data() + i * dim_; }
  // Sets (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, std::int64_t v) {
    a_[i * dim_ + j] = v;
    a_[j * dim_ + i] = v;
  }
  bool is_symmetric() const;
  std::int64_t trace() const;
  IntSymMatrix principal(const std::vector<std::size_t>& idx) const;
  IntSymMatrix shifted(std::int64_t k) const;  // M - k I
  Eigen::MatrixXd to_double() const;

  // "dim n" followed by n rows of space separated integers.
  std::string dump() const;
  static IntSymMatrix parse_dump(const std::string& text);

  bool operator==(const IntSymMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> a_;
};

struct Signature {
  std::size_t positive = 0, negative = 0, zero = 0;
  bool operator==(const Signature&) const = default;
};

struct SpectrumEntry {
  double eigenvalue = 0;
  std::size_t multiplicity = 0;
  Eigen::MatrixXd basis;           // dim x multiplicity, orthonormal columns
  bool integral = false;           // within 1e-6 of an integer
  std::optional<std::int64_t> exact;  // set when certified by exact rank
};

// Random primes in [2^30, 2^31) drawn from a seeded generator.
std::vector<std::uint32_t> random_primes(std::size_t count, std::uint64_t seed);

std::size_t rank_mod_p(const IntSymMatrix& M, std::uint32_t p);

// Certified rank over Q. A mod-p rank gives a lower bound; when it is short
// of full, integer kernel vectors reconstructed from several primes and
// checked exactly give the matching upper bound. Fraction-free elimination
// is the fallback when reconstruction does not close the gap.
std::size_t exact_rank(const IntSymMatrix& M, std::size_t cap = kDefaultExactCap,
                       std::uint64_t seed = 1);

// Rank by fraction-free (Bareiss) elimination over GMP integers.
std::size_t bareiss_rank(const IntSymMatrix& M);

// Integer vectors spanning the rational kernel, each verified M v = 0
// exactly. Empty optional if reconstruction failed.
std::optional<std::vector<std::vector<mpz_class>>> certified_kernel(const IntSymMatrix& M,
                                                                     std::uint64_t seed = 1);

struct SignatureOptions {
  std::size_t exact_cap = kDefaultExactCap;
  std::uint64_t seed = 1;
  double separation = kSeparationRatio;
};

struct SignatureResult {
  Signature sig;
  std::string method;  // "float" or "ldlt"
  bool rank_exact = true;
};

SignatureResult signature_detail(const IntSymMatrix& M, const SignatureOptions& opt = {});
Signature signature(const IntSymMatrix& M, const SignatureOptions& opt = {});
// Same, reusing a precomputed certified rank.
SignatureResult signature_with_rank(const IntSymMatrix& M, std::size_t rank,
                                    const SignatureOptions& opt = {});

// Exact inertia via LDL^T with symmetric pivoting over the rationals.
Signature exact_inertia_ldlt(const IntSymMatrix& M);

// Floating eigenvalues, ascending.
Eigen::VectorXd eigenvalues(const IntSymMatrix& M);

// Merged spectrum sorted by decreasing eigenvalue. Eigenvalues within
// tol * max|lambda| of their neighbour are merged.
std::vector<SpectrumEntry> spectrum(const IntSymMatrix& M, double tol = kDefaultMergeTol,
                                    bool with_vectors = true);

// Components of the graph with an edge i~j whenever M(i,j) != 0. Each
// component is sorted; components are ordered by their smallest index.
std::vector<std::vector<std::size_t>> connected_components(const IntSymMatrix& M);

using RationalMatrix = std::vector<std::vector<mpq_class>>;

// Throws SingularMatrix or CapExceeded.
RationalMatrix exact_inverse(const IntSymMatrix& M, std::size_t cap = kDefaultInverseCap);

}  // namespace killform
