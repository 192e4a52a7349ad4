#include "killform/killing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "killform/errors.hpp"

namespace killform {

GroupAlgebra operator*(const GroupAlgebra& x, const GroupAlgebra& y) {
  GroupAlgebra out;
  for (const auto& [g, a] : x.terms())
    for (const auto& [h, b] : y.terms()) out.add(g * h, a * b);
  return out;
}

KillingForm killing_matrix(const Group& G, const ConjClass& C, std::size_t cap, std::size_t jobs) {
  if (C.rep.is_identity()) throw std::invalid_argument("the identity class carries no calculus");
  const std::size_t n = C.size();
  if (n > cap)
    throw CapExceeded("class " + C.label + " has " + std::to_string(n) + " elements, matrix cap is " +
                      std::to_string(cap));

  // f(h) = |Z(gh) ∩ C|; the count only depends on the class of gh.
  std::vector<std::int64_t> f(n);
  std::unordered_map<std::size_t, std::int64_t> by_class;
  for (std::size_t i = 0; i < n; ++i) {
    const Perm gh = C.rep * C.members[i];
    const std::size_t k = G.class_of(gh);
    auto it = by_class.find(k);
    if (it == by_class.end()) {
      std::int64_t count = 0;
      for (const Perm& x : C.members) count += x.commutes_with(gh);
      it = by_class.emplace(k, count).first;
    }
    f[i] = it->second;
  }

  KillingForm K;
  K.group = &G;
  K.class_index = C.index;
  K.matrix = IntSymMatrix(n);
  K.basis = C.elems;

  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t a = begin; a < end; ++a) {
      const Perm& s = C.sections[a];
      const Perm sinv = s.inverse();
      std::int64_t* row = K.matrix.mutable_row(a);
      for (std::size_t b = 0; b < n; ++b) row[b] = f[*C.position(sinv * C.members[b] * s)];
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
  if (jobs == 1) {
    fill(0, n);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(fill, n * t / jobs, n * (t + 1) / jobs);
    for (auto& th : pool) th.join();
  }
  return K;
}

KillingForm universal_killing(const Group& G, bool include_identity, std::size_t cap) {
  if (G.order() < 2) throw std::invalid_argument("the trivial group has no universal calculus");
  const std::size_t first = include_identity ? 0 : 1;
  const std::size_t n = G.order() - first;
  if (n > cap)
    throw CapExceeded("universal form has dimension " + std::to_string(n) + ", matrix cap is " +
                      std::to_string(cap));
  KillingForm K;
  K.group = &G;
  K.includes_identity = include_identity;
  K.matrix = IntSymMatrix(n);
  for (std::size_t i = first; i < G.order(); ++i) K.basis.push_back(static_cast<std::uint32_t>(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t ab = G.require_index(G.element(K.basis[i]) * G.element(K.basis[j]));
      K.matrix.set(i, j, static_cast<std::int64_t>(G.centralizer_order(ab)) - 1);
    }
  return K;
}

const KillingAnalysis& analyze(KillingForm& K, const SignatureOptions& opt) {
  const Group& G = *K.group;
  KillingAnalysis A;
  const std::size_t n = K.dim();
  if (!K.universal()) {
    const ConjClass& C = G.class_at(*K.class_index);
    A.is_real = C.is_real;
    std::int64_t first = 0;
    for (std::size_t b = 0; b < n; ++b) first += K.matrix(0, b);
    for (std::size_t a = 1; a < n; ++a) {
      std::int64_t s = 0;
      for (std::size_t b = 0; b < n; ++b) s += K.matrix(a, b);
      if (s != first)
        throw RowSumMismatch("row " + std::to_string(a) + " of class " + C.label + " sums to " +
                             std::to_string(s) + ", row 0 to " + std::to_string(first));
    }
    A.lambda_max = first;
    std::size_t fixed = 0;
    for (const Perm& x : C.members) fixed += x.commutes_with(C.rep);
    A.chi_on_class = fixed;
  }
  A.component_count = connected_components(K.matrix).size();
  SignatureResult sr = signature_detail(K.matrix, opt);
  A.signature = sr.sig;
  A.signature_method = sr.method;
  A.nondegenerate = sr.sig.zero == 0;
  K.analysis = A;
  return *K.analysis;
}

IndexVector theta_vector(const KillingForm& K) {
  IndexVector v;
  for (std::size_t i = 0; i < K.dim(); ++i) v.add(i, 1);
  return v;
}

IndexVector apply(const KillingForm& K, const IndexVector& v) {
  IndexVector out;
  for (std::size_t a = 0; a < K.dim(); ++a) {
    mpq_class s = 0;
    for (const auto& [b, c] : v.terms()) s += c * K.matrix(a, b);
    out.add(a, s);
  }
  return out;
}

GroupAlgebra casimir_element(const KillingForm& K, std::size_t cap) {
  const Group& G = *K.group;
  RationalMatrix inv = exact_inverse(K.matrix, cap);
  std::vector<mpq_class> coeff(G.order());
  const std::size_t n = K.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (inv[a][b] == 0) continue;
      coeff[G.require_index(G.element(K.basis[a]) * G.element(K.basis[b]))] += inv[a][b];
    }
  GroupAlgebra out;
  for (std::size_t i = 0; i < G.order(); ++i) out.add(G.element(i), coeff[i]);
  return out;
}

IndexVector casimir(const KillingForm& K, std::size_t cap) {
  const Group& G = *K.group;
  GroupAlgebra c = casimir_element(K, cap);
  IndexVector out;
  for (const ConjClass& D : G.classes()) {
    const mpq_class v = c.coeff(D.rep);
    for (const Perm& x : D.members)
      if (c.coeff(x) != v)
        throw NotCentral("Casimir coefficients differ on class " + D.label + ": " + v.get_str() + " vs " +
                         c.coeff(x).get_str());
    out.add(D.index, v);
  }
  return out;
}

std::string format_class_combination(const IndexVector& v, const Group& G) {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : v.terms()) {
    mpq_class a = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    out += a.get_str() + "*";
    out += k == 0 ? std::string("e") : "theta(" + G.class_at(k).label + ")";
  }
  return out;
}

IndexVector m_vector(const Group& G, const std::vector<long>& w_multiplicities, const CharTable& T) {
  if (w_multiplicities.size() != T.size()) throw std::invalid_argument("one multiplicity per irrep expected");
  long L = 1;
  for (long m : w_multiplicities) {
    if (m <= 0) throw ZeroMultiplicity("every irrep must occur in W");
    L = std::lcm(L, m);
  }
  (void)G;
  IndexVector out;
  for (std::size_t k = 0; k < T.class_count(); ++k) {
    Complex s = 0;
    for (std::size_t i = 0; i < T.size(); ++i) {
      const double d = static_cast<double>(T.degrees[i]);
      s += d * d * static_cast<double>(L / w_multiplicities[i]) * std::conj(T.chars[i][k]);
    }
    const double r = std::round(s.real());
    if (std::abs(s.real() - r) > kIntegralityTol * std::max(1.0, std::abs(r)) ||
        std::abs(s.imag()) > kIntegralityTol * std::max(1.0, std::abs(r)))
      throw NotACharacter("m-vector coefficient on class " + T.class_labels[k] + " is not rational");
    mpq_class q(static_cast<long>(r), L);
    q.canonicalize();
    out.add(k, q);
  }
  return out;
}

std::vector<mpq_class> m_pairing(const Group& G, const IndexVector& m, const std::vector<std::int64_t>& chi_w) {
  std::vector<mpq_class> out;
  for (const ConjClass& A : G.classes()) {
    mpq_class s = 0;
    for (std::size_t g = 0; g < G.order(); ++g) {
      const mpq_class c = m.coeff(G.class_of(g));
      if (c == 0) continue;
      s += c * chi_w[G.class_of(G.element(g) * A.rep)];
    }
    out.push_back(s);
  }
  return out;
}

std::vector<std::int64_t> universal_character_values(const Group& G) {
  std::vector<std::int64_t> out;
  for (const ConjClass& C : G.classes()) out.push_back(static_cast<std::int64_t>(G.order() / C.size()) - 1);
  return out;
}

}  // namespace killform
