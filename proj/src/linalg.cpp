#include "killform/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "killform/errors.hpp"
#include "killform/modp.hpp"

namespace killform {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d : {2u, 3u, 5u, 7u, 11u, 13u})
    if (n % d == 0) return n == d;
  // deterministic Miller-Rabin for 32-bit inputs
  std::uint32_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint32_t a : {2u, 7u, 61u}) {
    std::uint32_t x = modp::pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = modp::mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

modp::Matrix reduce_matrix(const IntSymMatrix& M, std::uint32_t p) {
  modp::Matrix m(M.dim(), M.dim());
  for (std::size_t i = 0; i < M.dim(); ++i)
    for (std::size_t j = 0; j < M.dim(); ++j) m(i, j) = modp::reduce(M(i, j), p);
  return m;
}

// Finds r/s with |r|, s <= sqrt(N/2) and r = a s mod N.
bool rational_reconstruct(const mpz_class& a, const mpz_class& N, mpq_class& out) {
  mpz_class bound;
  mpz_class half = N / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = N, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

struct KernelAttempt {
  std::size_t rank_lower = 0;
  std::optional<std::vector<std::vector<mpz_class>>> kernel;
};

KernelAttempt kernel_certificate(const IntSymMatrix& M, std::uint64_t seed, std::size_t max_primes = 48) {
  const std::size_t n = M.dim();
  KernelAttempt out;
  std::vector<std::uint32_t> primes = random_primes(max_primes, seed);
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free_cols;
  std::vector<std::vector<mpz_class>> residues;  // per kernel vector, per coordinate
  mpz_class modulus = 1;
  std::vector<std::vector<mpq_class>> last;
  bool started = false;

  for (std::uint32_t p : primes) {
    modp::Matrix m = reduce_matrix(M, p);
    std::vector<std::size_t> piv = modp::rref_inplace(m, p);
    // Over Q the pivot columns are the lexicographically first independent
    // set, and independence mod p implies independence over Q. So a larger
    // rank, or a lexicographically smaller pivot set at equal rank, means
    // the earlier primes were unlucky.
    if (started && (piv.size() < out.rank_lower || (piv.size() == out.rank_lower && piv > pivots))) continue;
    if (!started || piv.size() > out.rank_lower || piv != pivots) {
      started = true;
      out.rank_lower = piv.size();
      pivots = piv;
      free_cols.clear();
      std::vector<char> is_pivot(n, 0);
      for (std::size_t c : piv) is_pivot[c] = 1;
      for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
      residues.assign(free_cols.size(), std::vector<mpz_class>(pivots.size(), 0));
      modulus = 1;
      last.clear();
    }
    if (free_cols.empty()) {
      out.kernel = std::vector<std::vector<mpz_class>>{};
      return out;
    }
    // CRT: x = x + modulus * ((r - x) * modulus^-1 mod p)
    const std::uint32_t minv = modp::inv(static_cast<std::uint32_t>(mpz_class(modulus % p).get_ui()), p);
    for (std::size_t f = 0; f < free_cols.size(); ++f)
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        std::uint32_t val = (p - m(r, free_cols[f])) % p;
        mpz_class& x = residues[f][r];
        std::uint32_t xr = static_cast<std::uint32_t>(mpz_class(x % p).get_ui());
        std::uint32_t t = modp::mul(modp::sub(val, xr, p), minv, p);
        x += modulus * t;
      }
    modulus *= p;

    std::vector<std::vector<mpq_class>> cand(free_cols.size(), std::vector<mpq_class>(pivots.size()));
    bool ok = true;
    for (std::size_t f = 0; f < free_cols.size() && ok; ++f)
      for (std::size_t r = 0; r < pivots.size() && ok; ++r) ok = rational_reconstruct(residues[f][r], modulus, cand[f][r]);
    if (!ok) continue;
    bool stable = cand == last;
    last = cand;
    if (!stable) continue;

    std::vector<std::vector<mpz_class>> vecs;
    bool verified = true;
    for (std::size_t f = 0; f < free_cols.size() && verified; ++f) {
      mpz_class den = 1;
      for (const mpq_class& q : cand[f]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
      std::vector<mpz_class> v(n, 0);
      v[free_cols[f]] = den;
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        mpq_class s = cand[f][r] * den;
        v[pivots[r]] = s.get_num();
      }
      for (std::size_t i = 0; i < n && verified; ++i) {
        mpz_class acc = 0;
        const std::int64_t* row = M.row(i);
        for (std::size_t j = 0; j < n; ++j)
          if (row[j] && v[j] != 0) acc += v[j] * static_cast<long>(row[j]);
        verified = acc == 0;
      }
      vecs.push_back(std::move(v));
    }
    if (verified) {
      out.kernel = std::move(vecs);
      return out;
    }
  }
  return out;
}

}  // namespace

IntSymMatrix IntSymMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntSymMatrix M(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) M.a_[i * M.dim_ + j] = rows[i][j];
  }
  if (!M.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
  return M;
}

bool IntSymMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::int64_t IntSymMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

IntSymMatrix IntSymMatrix::principal(const std::vector<std::size_t>& idx) const {
  IntSymMatrix S(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) S.a_[i * S.dim_ + j] = (*this)(idx[i], idx[j]);
  return S;
}

IntSymMatrix IntSymMatrix::shifted(std::int64_t k) const {
  IntSymMatrix S = *this;
  for (std::size_t i = 0; i < dim_; ++i) S.a_[i * dim_ + i] -= k;
  return S;
}

Eigen::MatrixXd IntSymMatrix::to_double() const {
  Eigen::MatrixXd m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = static_cast<double>((*this)(i, j));
  return m;
}

std::string IntSymMatrix::dump() const {
  std::ostringstream out;
  out << "dim " << dim_ << '\n';
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j) out << ' ';
      out << (*this)(i, j);
    }
    out << '\n';
  }
  return out.str();
}

IntSymMatrix IntSymMatrix::parse_dump(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  std::size_t n = 0;
  if (!(in >> word >> n) || word != "dim") throw ParseError("matrix dump must start with 'dim n'");
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
  for (auto& r : rows)
    for (auto& v : r)
      if (!(in >> v)) throw ParseError("matrix dump truncated");
  if (in >> word) throw ParseError("trailing data after matrix dump");
  try {
    return from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::vector<std::uint32_t> random_primes(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(1u << 30, (1u << 31) - 1);
  std::vector<std::uint32_t> out;
  while (out.size() < count) {
    std::uint32_t c = dist(rng) | 1u;
    if (is_prime_u32(c) && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

std::size_t rank_mod_p(const IntSymMatrix& M, std::uint32_t p) {
  if (p <= 2) throw std::invalid_argument("rank_mod_p needs an odd prime");
  modp::Matrix m = reduce_matrix(M, p);
  return modp::rank_inplace(m, p);
}

std::size_t bareiss_rank(const IntSymMatrix& M) {
  const std::size_t n = M.dim();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(M(i, j));
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::optional<std::vector<std::vector<mpz_class>>> certified_kernel(const IntSymMatrix& M, std::uint64_t seed) {
  return kernel_certificate(M, seed).kernel;
}

std::size_t exact_rank(const IntSymMatrix& M, std::size_t cap, std::uint64_t seed) {
  const std::size_t n = M.dim();
  if (n > cap) throw CapExceeded("matrix dimension " + std::to_string(n) + " exceeds exact cap " + std::to_string(cap));
  if (n == 0) return 0;
  std::uint32_t p = random_primes(1, seed ^ 0x9e3779b97f4a7c15ULL).front();
  if (rank_mod_p(M, p) == n) return n;
  KernelAttempt k = kernel_certificate(M, seed);
  if (k.kernel && k.rank_lower + k.kernel->size() == n) return k.rank_lower;
  return bareiss_rank(M);
}

namespace {

// Eigen's implicit QR occasionally runs out of iterations on matrices with
// large, highly repeated eigenvalues (M11 11A). A permutation similarity
// leaves the spectrum alone but changes the tridiagonal form, so retry a
// few seeded reorderings before giving up.
struct SymmetricEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // empty unless requested
};

SymmetricEigen solve_symmetric(const IntSymMatrix& M, bool with_vectors) {
  const int opts = with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
  const Eigen::MatrixXd A = M.to_double();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, opts);
  if (es.info() == Eigen::Success)
    return {es.eigenvalues(), with_vectors ? es.eigenvectors() : Eigen::MatrixXd()};
  std::mt19937_64 rng(0x5eed);
  for (int attempt = 0; attempt < 4; ++attempt) {
    Eigen::PermutationMatrix<Eigen::Dynamic> P(static_cast<Eigen::Index>(M.dim()));
    P.setIdentity();
    std::shuffle(P.indices().data(), P.indices().data() + P.indices().size(), rng);
    es.compute(P.transpose() * A * P, opts);
    if (es.info() == Eigen::Success)
      return {es.eigenvalues(), with_vectors ? Eigen::MatrixXd(P * es.eigenvectors()) : Eigen::MatrixXd()};
  }
  throw SeparationFailure("symmetric eigensolver did not converge");
}

}  // namespace

Eigen::VectorXd eigenvalues(const IntSymMatrix& M) {
  if (M.dim() == 0) return {};
  return solve_symmetric(M, false).values;
}

Signature exact_inertia_ldlt(const IntSymMatrix& M) {
  const std::size_t n = M.dim();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(M(i, j));
  std::vector<std::size_t> live(n);
  std::iota(live.begin(), live.end(), 0);
  Signature s;
  auto drop = [&](std::size_t idx) { live.erase(std::find(live.begin(), live.end(), idx)); };

  while (!live.empty()) {
    // 1x1 pivot on the largest nonzero diagonal entry, else a 2x2 pivot on
    // the largest off-diagonal entry.
    std::optional<std::size_t> d;
    for (std::size_t i : live)
      if (a[i][i] != 0 && (!d || abs(a[i][i]) > abs(a[*d][*d]))) d = i;
    if (d) {
      const std::size_t k = *d;
      (a[k][k] > 0 ? s.positive : s.negative)++;
      drop(k);
      const mpq_class pinv = 1 / a[k][k];
      for (std::size_t i : live) {
        if (a[i][k] == 0) continue;
        mpq_class f = a[i][k] * pinv;
        for (std::size_t j : live)
          if (a[k][j] != 0) a[i][j] -= f * a[k][j];
      }
      continue;
    }
    std::optional<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i : live)
      for (std::size_t j : live)
        if (i < j && a[i][j] != 0 && (!off || abs(a[i][j]) > abs(a[off->first][off->second]))) off = {{i, j}};
    if (!off) {
      s.zero += live.size();
      break;
    }
    // Block [[0,b],[b,0]] has inertia (1,1); its inverse is [[0,1/b],[1/b,0]].
    auto [k, l] = *off;
    const mpq_class binv = 1 / a[k][l];
    s.positive++;
    s.negative++;
    drop(k);
    drop(l);
    for (std::size_t i : live) {
      if (a[i][k] == 0 && a[i][l] == 0) continue;
      mpq_class fk = a[i][l] * binv;  // coefficient of row k
      mpq_class fl = a[i][k] * binv;  // coefficient of row l
      for (std::size_t j : live) a[i][j] -= fk * a[k][j] + fl * a[l][j];
    }
  }
  return s;
}

SignatureResult signature_with_rank(const IntSymMatrix& M, std::size_t rank, const SignatureOptions& opt) {
  const std::size_t n = M.dim();
  SignatureResult out;
  out.method = "float";
  if (n == 0) return out;
  Eigen::VectorXd ev = eigenvalues(M);
  std::vector<double> v(ev.data(), ev.data() + ev.size());
  std::sort(v.begin(), v.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
  const std::size_t z = n - rank;
  const double top = std::abs(v.back());
  const double noise = top * static_cast<double>(n) * 1e-15 + 1e-300;
  double worst_dropped = noise;
  for (std::size_t i = 0; i < z; ++i) worst_dropped = std::max(worst_dropped, std::abs(v[i]));
  const bool separated = z == n || std::abs(v[z]) >= opt.separation * worst_dropped;
  if (separated) {
    out.sig.zero = z;
    for (std::size_t i = z; i < n; ++i) (v[i] > 0 ? out.sig.positive : out.sig.negative)++;
    return out;
  }
  if (n > opt.exact_cap) throw SeparationFailure("eigenvalues not separated and matrix exceeds exact cap");
  out.sig = exact_inertia_ldlt(M);
  out.method = "ldlt";
  return out;
}

SignatureResult signature_detail(const IntSymMatrix& M, const SignatureOptions& opt) {
  const std::size_t n = M.dim();
  if (n <= opt.exact_cap) {
    SignatureResult r = signature_with_rank(M, exact_rank(M, opt.exact_cap, opt.seed), opt);
    r.rank_exact = true;
    return r;
  }
  std::size_t best = 0;
  for (std::uint32_t p : random_primes(5, opt.seed)) {
    best = std::max(best, rank_mod_p(M, p));
    if (best == n) break;
  }
  SignatureResult r = signature_with_rank(M, best, opt);
  r.rank_exact = best == n;
  return r;
}

Signature signature(const IntSymMatrix& M, const SignatureOptions& opt) { return signature_detail(M, opt).sig; }

std::vector<SpectrumEntry> spectrum(const IntSymMatrix& M, double tol, bool with_vectors) {
  if (tol <= 0) throw std::invalid_argument("spectrum tolerance must be positive");
  const std::size_t n = M.dim();
  std::vector<SpectrumEntry> out;
  if (n == 0) return out;
  const SymmetricEigen es = solve_symmetric(M, with_vectors);
  const Eigen::VectorXd& ev = es.values;
  const double scale = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));
  const double gap = tol * std::max(scale, 1.0);
  std::size_t hi = n;
  while (hi > 0) {
    std::size_t lo = hi - 1;
    while (lo > 0 && ev(lo) - ev(lo - 1) <= gap) --lo;
    SpectrumEntry e;
    e.multiplicity = hi - lo;
    e.eigenvalue = ev.segment(lo, hi - lo).mean();
    e.integral = std::abs(e.eigenvalue - std::round(e.eigenvalue)) <= 1e-6;
    if (with_vectors) e.basis = es.vectors.middleCols(lo, hi - lo);
    out.push_back(std::move(e));
    hi = lo;
  }
  return out;
}

std::vector<std::vector<std::size_t>> connected_components(const IntSymMatrix& M) {
  const std::size_t n = M.dim();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      const std::int64_t* row = M.row(comp[head]);
      for (std::size_t j = 0; j < n; ++j)
        if (row[j] != 0 && !seen[j]) {
          seen[j] = 1;
          comp.push_back(j);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

RationalMatrix gauss_jordan_inverse(const IntSymMatrix& M) {
  const std::size_t n = M.dim();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(M(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw SingularMatrix("matrix is singular");
    std::swap(a[piv], a[c]);
    const mpq_class s = 1 / a[c][c];
    for (std::size_t j = c; j < 2 * n; ++j) a[c][j] *= s;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = c; j < 2 * n; ++j)
        if (a[c][j] != 0) a[i][j] -= f * a[c][j];
    }
  }
  RationalMatrix inv(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

RationalMatrix exact_inverse(const IntSymMatrix& M, std::size_t cap) {
  const std::size_t n = M.dim();
  if (n > cap) throw CapExceeded("matrix dimension " + std::to_string(n) + " exceeds inverse cap " + std::to_string(cap));
  // Block diagonal after grouping by component; invert block by block.
  RationalMatrix inv(n, std::vector<mpq_class>(n, 0));
  for (const auto& comp : connected_components(M)) {
    RationalMatrix b = gauss_jordan_inverse(M.principal(comp));
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) inv[comp[i]][comp[j]] = b[i][j];
  }
  return inv;
}

}  // namespace killform
