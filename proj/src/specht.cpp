#include "killform/specht.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "killform/errors.hpp"
#include "killform/named_groups.hpp"

namespace killform {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must decrease");
  }
}

Partition Partition::parse(std::string_view text, int n) {
  std::vector<int> p;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    p.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9')
      cur += c;
    else if (c == ',' || c == ' ')
      flush();
    else if (c != '(' && c != ')')
      throw ParseError("bad partition: " + std::string(text));
  }
  flush();
  if (p.empty()) throw ParseError("empty partition");
  std::sort(p.rbegin(), p.rend());
  int sum = std::accumulate(p.begin(), p.end(), 0);
  if (n > 0) {
    if (sum > n) throw ParseError("partition " + std::string(text) + " exceeds " + std::to_string(n));
    while (sum < n) p.push_back(1), ++sum;
  }
  try {
    return Partition(p);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Partition Partition::of_perm(const Perm& p) { return Partition(p.cycle_type()); }

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts.empty() ? 0 : parts.front(), 0);
  for (int r : parts)
    for (int j = 0; j < r; ++j) ++c[j];
  return Partition(c);
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(left, max); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Tableau::Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {
  std::vector<int> lengths;
  for (const auto& row : rows) lengths.push_back(static_cast<int>(row.size()));
  shape = Partition(lengths);
  const int n = shape.n();
  std::vector<bool> seen(n + 1, false);
  for (const auto& row : rows)
    for (int x : row) {
      if (x < 1 || x > n || seen[x]) throw std::invalid_argument("tableau entries must be 1..n once each");
      seen[x] = true;
    }
}

Tableau Tableau::row_reading(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int k = 1;
  for (int len : shape.parts) {
    rows.emplace_back();
    for (int j = 0; j < len; ++j) rows.back().push_back(k++);
  }
  return Tableau(rows);
}

bool Tableau::is_standard() const {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0 && rows[i][j] <= rows[i][j - 1]) return false;
      if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
    }
  return true;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  std::vector<Tableau> out;
  const int n = shape.n();
  std::vector<std::vector<int>> rows(shape.length());
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) >= shape.parts[i]) continue;
      if (i > 0 && rows[i - 1].size() <= rows[i].size()) continue;
      rows[i].push_back(k);
      self(self, k + 1);
      rows[i].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

// All permutations of n points preserving each of the given blocks.
std::vector<Perm> block_group(const std::vector<std::vector<int>>& blocks, int n) {
  std::vector<Perm> out{Perm(static_cast<std::size_t>(n))};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Perm> local;
    std::vector<int> img = sorted;
    do {
      std::vector<Perm::Point> images(n);
      std::iota(images.begin(), images.end(), 0);
      for (std::size_t i = 0; i < sorted.size(); ++i) images[sorted[i] - 1] = static_cast<Perm::Point>(img[i] - 1);
      local.emplace_back(images);
    } while (std::next_permutation(img.begin(), img.end()));
    std::vector<Perm> next;
    next.reserve(out.size() * local.size());
    for (const Perm& p : out)
      for (const Perm& q : local) next.push_back(p * q);
    out = std::move(next);
  }
  return out;
}

std::vector<std::vector<int>> columns(const Tableau& T) {
  std::vector<std::vector<int>> cols(T.rows.empty() ? 0 : T.rows.front().size());
  for (const auto& row : T.rows)
    for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
  return cols;
}

std::size_t position_or_throw(const ConjClass& C, const Perm& x) {
  auto p = C.position(x);
  if (!p) throw ElementNotInGroup("element " + x.to_cycles() + " is not in class " + C.label);
  return *p;
}

}  // namespace

std::pair<std::vector<Perm>, std::vector<Perm>> row_and_column_groups(const Tableau& T) {
  return {block_group(T.rows, T.n()), block_group(columns(T), T.n())};
}

GroupAlgebra young_symmetrizer(const Tableau& T) {
  auto [R, C] = row_and_column_groups(T);
  if (R.size() * C.size() > kSymmetrizerTermCap)
    throw CapExceeded("Young symmetrizer has " + std::to_string(R.size() * C.size()) + " terms");
  GroupAlgebra out;
  for (const Perm& s : C) {
    const int sign = s.sign();
    for (const Perm& t : R) out.add(s * t, sign);
  }
  return out;
}

IndexVector project_to_class(const GroupAlgebra& v, const ConjClass& C) { return project_to_class(v, C, C.rep); }

IndexVector project_to_class(const GroupAlgebra& v, const ConjClass& C, const Perm& a) {
  IndexVector out;
  for (const auto& [s, c] : v.terms()) out.add(position_or_throw(C, a.conjugate(s)), c);
  return out;
}

IndexVector symmetrizer_on(const Tableau& T, const ConjClass& C, const Perm& a) {
  auto [R, Cg] = row_and_column_groups(T);
  std::map<std::size_t, long long> row_sum;
  for (const Perm& t : R) ++row_sum[position_or_throw(C, a.conjugate(t))];
  std::vector<long long> acc(C.size(), 0);
  for (const Perm& s : Cg) {
    const int sign = s.sign();
    for (const auto& [pos, c] : row_sum) acc[position_or_throw(C, C.members[pos].conjugate(s))] += sign * c;
  }
  IndexVector out;
  for (std::size_t i = 0; i < acc.size(); ++i) out.add(i, mpq_class(static_cast<long>(acc[i])));
  return out;
}

SpechtOccurrence specht_occurs_detail(const Partition& lambda, const Partition& mu, int cap) {
  const int n = lambda.n();
  if (mu.n() != n) throw std::invalid_argument("partitions of different n");
  if (n > cap) throw CapExceeded("n = " + std::to_string(n) + " exceeds the Specht cap " + std::to_string(cap));
  Group G = symmetric_group(static_cast<std::size_t>(n));
  std::vector<Perm::Point> images(n);
  int start = 0;
  for (int len : mu.parts) {
    for (int j = 0; j < len; ++j) images[start + j] = static_cast<Perm::Point>(start + (j + 1) % len);
    start += len;
  }
  const ConjClass& C = G.class_at(G.class_of(Perm(images)));

  for (const Tableau& T : standard_tableaux(lambda))
    if (!symmetrizer_on(T, C, C.rep).empty()) return {true, "standard"};

  // No standard tableau gives a nonzero vector on the representative. Fall
  // back to the trace of c_T on the whole of CC: c_T / k is a primitive
  // idempotent, so the trace is k times the multiplicity of S^lambda.
  const Tableau T = Tableau::row_reading(lambda);
  auto [R, Cg] = row_and_column_groups(T);
  if (R.size() * Cg.size() > kSymmetrizerTermCap)
    throw CapExceeded("Young symmetrizer has " + std::to_string(R.size() * Cg.size()) + " terms");
  std::map<std::vector<int>, long long> fixed;  // by cycle type
  long long trace = 0;
  for (const Perm& s : Cg) {
    const int sign = s.sign();
    for (const Perm& t : R) {
      const Perm g = s * t;
      auto key = g.cycle_type();
      auto it = fixed.find(key);
      if (it == fixed.end()) {
        long long f = 0;
        for (const Perm& x : C.members) f += x.commutes_with(g);
        it = fixed.emplace(key, f).first;
      }
      trace += sign * it->second;
    }
  }
  return {trace != 0, "full"};
}

bool specht_occurs(const Partition& lambda, const Partition& mu, int cap) {
  return specht_occurs_detail(lambda, mu, cap).occurs;
}

bool sign_rep_occurs(const Partition& mu) {
  for (std::size_t i = 0; i < mu.parts.size(); ++i) {
    if (mu.parts[i] % 2 == 0) return false;
    if (i > 0 && mu.parts[i] == mu.parts[i - 1]) return false;
  }
  return true;
}

std::pair<long long, long long> euler_count(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  long long distinct_odd = 0, signed_count = 0;
  for (const Partition& p : partitions(n)) {
    distinct_odd += sign_rep_occurs(p);
    // a permutation with cycle type p is even iff n - #cycles is even
    signed_count += (n - static_cast<int>(p.length())) % 2 == 0 ? 1 : -1;
  }
  return {distinct_odd, signed_count};
}

TwoCycleEigenvalues two_cycles_eigenvalues(int n) {
  if (n < 4) throw std::invalid_argument("closed forms need n >= 4");
  const std::int64_t m = n;
  return {(m * m * m * m - 10 * m * m * m + 41 * m * m - 72 * m + 48) / 4, m * m - 6 * m + 12, 2 * m};
}

mpq_class eigenvalue_from_vector(const KillingForm& K, const IndexVector& v) {
  if (v.empty()) throw std::invalid_argument("zero vector");
  IndexVector kv = apply(K, v);
  const auto& [b, vb] = *v.terms().begin();
  const mpq_class lambda = kv.coeff(b) / vb;
  for (std::size_t i = 0; i < K.dim(); ++i)
    if (kv.coeff(i) != lambda * v.coeff(i))
      throw NotAnEigenvector("K v differs from " + lambda.get_str() + " v at position " + std::to_string(i));
  return lambda;
}

namespace {

std::size_t transposition(const ConjClass& C, int n, int i, int j) {
  std::vector<Perm::Point> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::swap(images[i - 1], images[j - 1]);
  return position_or_throw(C, Perm(images));
}

}  // namespace

IndexVector standard_vector(const ConjClass& C, int n) {
  IndexVector v;
  for (int k = 2; k <= n - 1; ++k) v.add(transposition(C, n, 1, k), 1);
  for (int k = 2; k <= n - 1; ++k) v.add(transposition(C, n, k, n), -1);
  return v;
}

IndexVector two_row_vector(const ConjClass& C, int n) {
  IndexVector v;
  v.add(transposition(C, n, 1, 2), 1);
  v.add(transposition(C, n, 2, n - 1), -1);
  v.add(transposition(C, n, 1, n), -1);
  v.add(transposition(C, n, n - 1, n), 1);
  return v;
}

namespace {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves a
// bead from b to b - r; the sign is the parity of beads jumped over.
long long mn(std::vector<int> beta, const std::vector<int>& mu, std::size_t k,
             std::map<std::pair<std::vector<int>, std::size_t>, long long>& memo) {
  if (k == mu.size()) return 1;
  auto key = std::make_pair(beta, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = mu[k];
  std::set<int> beads(beta.begin(), beta.end());
  long long total = 0;
  for (int b : beta) {
    if (b - r < 0 || beads.count(b - r)) continue;
    int jumped = 0;
    for (int x : beta) jumped += x > b - r && x < b;
    std::vector<int> next = beta;
    std::replace(next.begin(), next.end(), b, b - r);
    total += (jumped % 2 ? -1 : 1) * mn(next, mu, k + 1, memo);
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

long long symmetric_character(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) throw std::invalid_argument("partitions of different n");
  const int len = static_cast<int>(lambda.length());
  std::vector<int> beta;
  for (int i = 0; i < len; ++i) beta.push_back(lambda.parts[i] + len - 1 - i);
  std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
  return mn(beta, mu.parts, 0, memo);
}

long long hook_dimension(const Partition& lambda) {
  const Partition c = lambda.conjugate();
  long double num = 1;
  for (int k = 2; k <= lambda.n(); ++k) num *= k;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda.parts[i]; ++j) num /= (lambda.parts[i] - j - 1) + (c.parts[j] - static_cast<int>(i) - 1) + 1;
  return std::llround(num);
}

std::vector<Partition> symmetric_irreps(const CharTable& T, const Group& G) {
  const int n = static_cast<int>(G.degree());
  std::vector<Partition> mus;
  for (const ConjClass& C : G.classes()) mus.push_back(Partition::of_perm(C.rep));
  if (mus.size() != T.class_count()) throw OrthogonalityFailure("table does not match the group");
  std::vector<Partition> out(T.size());
  std::vector<bool> used(T.size(), false);
  for (const Partition& lambda : partitions(n)) {
    std::vector<long long> row;
    for (const Partition& mu : mus) row.push_back(symmetric_character(lambda, mu));
    bool found = false;
    for (std::size_t i = 0; i < T.size() && !found; ++i) {
      if (used[i]) continue;
      bool match = true;
      for (std::size_t k = 0; k < row.size() && match; ++k)
        match = std::abs(T.chars[i][k] - Complex(static_cast<double>(row[k]), 0)) < kIntegralityTol;
      if (match) {
        out[i] = lambda;
        used[i] = found = true;
      }
    }
    if (!found) throw OrthogonalityFailure("no irrep matches the character of " + lambda.str());
  }
  return out;
}

void label_symmetric_table(CharTable& T, const Group& G) {
  const std::vector<Partition> parts = symmetric_irreps(T, G);
  // pairs keyed by their larger member, grouped by degree
  std::map<std::size_t, std::set<Partition, std::greater<>>> pairs;
  for (std::size_t i = 0; i < T.size(); ++i) pairs[T.degrees[i]].insert(std::max(parts[i], parts[i].conjugate()));
  for (std::size_t i = 0; i < T.size(); ++i) {
    const Partition top = std::max(parts[i], parts[i].conjugate());
    const auto& same = pairs[T.degrees[i]];
    const auto stars = static_cast<std::size_t>(std::distance(same.begin(), same.find(top)));
    T.labels[i] = std::to_string(T.degrees[i]) + std::string(stars, '*') + (parts[i] < top ? "b" : "");
  }
}

}  // namespace killform
