#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace killform::modp {

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
}
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
inline std::uint32_t reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

// Dense row-major matrix over GF(p), p < 2^31.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint32_t> a;
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::uint32_t* row(std::size_t i) { return a.data() + i * cols; }
  const std::uint32_t* row(std::size_t i) const { return a.data() + i * cols; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// row[j] -= f * piv[j] for j in [from, n), all mod p.
void axpy(std::uint32_t* row, const std::uint32_t* piv, std::uint32_t f, std::size_t from,
          std::size_t n, std::uint32_t p);

// Rank by forward elimination (destroys m).
std::size_t rank_inplace(Matrix& m, std::uint32_t p);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_inplace(Matrix& m, std::uint32_t p);

// Basis of the right kernel {x : m x = 0}, one vector per free column,
// with a 1 in its own free column.
std::vector<std::vector<std::uint32_t>> kernel(Matrix m, std::uint32_t p);

}  // namespace killform::modp
