#include "killform/modp.hpp"

#include <stdexcept>

namespace killform::modp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  long long t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

void axpy(std::uint32_t* row, const std::uint32_t* piv, std::uint32_t f, std::size_t from,
          std::size_t n, std::uint32_t p) {
  if (f == 0) return;
  // Shoup's trick: with fs = floor(f 2^32 / p), the quotient of f*b by p is
  // (fs*b)>>32 or one less, so the remainder is found in 32-bit arithmetic.
  const std::uint64_t fs = (std::uint64_t(f) << 32) / p;
  for (std::size_t j = from; j < n; ++j) {
    std::uint32_t b = piv[j];
    std::uint32_t q = static_cast<std::uint32_t>((fs * b) >> 32);
    std::uint32_t t = f * b - q * p;
    t = t >= p ? t - p : t;
    std::uint32_t r = row[j];
    row[j] = r >= t ? r - t : r + p - t;
  }
}

std::size_t rank_inplace(Matrix& m, std::uint32_t p) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && m(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t j = col; j < m.cols; ++j) std::swap(m(piv, j), m(rank, j));
    std::uint32_t* prow = m.row(rank);
    const std::uint32_t s = inv(prow[col], p);
    for (std::size_t j = col; j < m.cols; ++j) prow[j] = mul(prow[j], s, p);
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      std::uint32_t* r = m.row(i);
      axpy(r, prow, r[col], col, m.cols, p);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> rref_inplace(Matrix& m, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && m(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rank, j));
    std::uint32_t* prow = m.row(rank);
    const std::uint32_t s = inv(prow[col], p);
    for (std::size_t j = col; j < m.cols; ++j) prow[j] = mul(prow[j], s, p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rank) continue;
      std::uint32_t* r = m.row(i);
      axpy(r, prow, r[col], col, m.cols, p);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

std::vector<std::vector<std::uint32_t>> kernel(Matrix m, std::uint32_t p) {
  std::vector<std::size_t> pivots = rref_inplace(m, p);
  std::vector<char> is_pivot(m.cols, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(m.cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - m(r, f)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace killform::modp
