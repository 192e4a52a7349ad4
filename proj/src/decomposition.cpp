#include "killform/decomposition.hpp"

#include <cmath>
#include <cstdio>

#include "killform/errors.hpp"

namespace killform {

std::size_t Decomposition::total_dim() const {
  std::size_t s = 0;
  for (const auto& e : entries) s += e.dim;
  return s;
}

Decomposition eigenspace_decomposition(const KillingForm& K, const CharTable& T, double merge_tol) {
  if (K.universal()) throw std::invalid_argument("decomposition needs a class calculus");
  const Group& G = *K.group;
  const ConjClass& C = G.class_at(*K.class_index);
  const std::size_t n = C.size();
  if (T.class_count() != G.classes().size()) throw ProjectorMismatch("character table does not match the group");

  // conj[k][b] = position of g_k b g_k^-1 in C
  std::vector<std::vector<std::size_t>> conj(G.classes().size(), std::vector<std::size_t>(n));
  for (const ConjClass& D : G.classes()) {
    const Perm ginv = D.rep.inverse();
    for (std::size_t b = 0; b < n; ++b) conj[D.index][b] = *C.position(D.rep * C.members[b] * ginv);
  }

  Decomposition out;
  for (const SpectrumEntry& s : spectrum(K.matrix, merge_tol, true)) {
    DecompositionEntry e;
    e.eigenvalue = s.eigenvalue;
    e.dim = s.multiplicity;
    e.integral = s.integral;
    const Eigen::MatrixXd& U = s.basis;
    ClassFunction t(G.classes().size());
    for (std::size_t k = 0; k < t.size(); ++k) {
      double tr = 0;
      for (std::size_t b = 0; b < n; ++b) tr += U.row(b).dot(U.row(conj[k][b]));
      t[k] = tr;
    }
    std::size_t covered = 0;
    for (const Complex& ip : inner_products(t, T)) {
      const double r = std::round(ip.real());
      if (std::abs(ip - Complex(r, 0)) > kProjectorTol || r < 0)
        throw ProjectorMismatch("irrep count " + std::to_string(ip.real()) + " in eigenspace " +
                                std::to_string(s.eigenvalue) + " is not an integer");
      e.multiplicities.push_back(static_cast<long>(r));
    }
    for (std::size_t i = 0; i < T.size(); ++i) covered += e.multiplicities[i] * T.degrees[i];
    if (covered != e.dim)
      throw ProjectorMismatch("irreps cover " + std::to_string(covered) + " of eigenspace dimension " +
                              std::to_string(e.dim));
    out.entries.push_back(std::move(e));
  }
  return out;
}

std::vector<std::string> integrality_audit(const Decomposition& D, const CharTable& T) {
  std::vector<std::string> findings;
  std::vector<long> total(T.size(), 0);
  for (const auto& e : D.entries)
    for (std::size_t i = 0; i < T.size(); ++i) total[i] += e.multiplicities[i];
  for (const auto& e : D.entries) {
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (e.multiplicities[i] != e.multiplicities[T.dual[i]])
        findings.push_back("irreps " + T.labels[i] + " and " + T.labels[T.dual[i]] +
                           " occur unequally in eigenspace " + format_eigenvalue(e));
      if (T.rational[i] && e.multiplicities[i] > 0 && e.multiplicities[i] == total[i] &&
          std::abs(e.eigenvalue - std::round(e.eigenvalue)) > kIntegralityTol)
        findings.push_back("rational irrep " + T.labels[i] + " has non-integral eigenvalue " +
                           format_eigenvalue(e));
    }
  }
  return findings;
}

std::string format_eigenvalue(const DecompositionEntry& e) {
  char buf[64];
  if (e.integral)
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(e.eigenvalue)));
  else
    std::snprintf(buf, sizeof buf, "%.6f", e.eigenvalue);
  return buf;
}

std::string format_decomposition(const Decomposition& D, const CharTable& T, const std::string& sep) {
  std::string out;
  for (const auto& e : D.entries) {
    const std::string ev = "(" + format_eigenvalue(e) + ")";
    for (std::size_t i = 0; i < T.size(); ++i)
      for (long c = 0; c < e.multiplicities[i]; ++c) {
        if (!out.empty()) out += sep;
        out += T.labels[i] + ev;
      }
  }
  return out;
}

}  // namespace killform
