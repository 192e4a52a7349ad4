#include "killform/characters.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include "killform/errors.hpp"
#include "killform/modp.hpp"

namespace killform {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMatchTol = 1e-6;

bool close(Complex a, Complex b, double tol = kMatchTol) { return std::abs(a - b) <= tol; }

bool is_prime64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t primitive_root(std::uint32_t p) {
  std::vector<std::uint32_t> factors;
  std::uint32_t m = p - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint32_t f : factors)
      if (modp::pow(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;
}

// Characteristic polynomial det(xI - A), coefficients lowest degree first,
// via reduction to Hessenberg form.
std::vector<std::uint32_t> char_poly(modp::Matrix H, std::uint32_t p) {
  const std::size_t n = H.rows;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && H(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(H(piv, j), H(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(H(i, piv), H(i, m));
    }
    const std::uint32_t inv = modp::inv(H(m, m - 1), p);
    for (std::size_t i = m + 1; i < n; ++i) {
      std::uint32_t u = modp::mul(H(i, m - 1), inv, p);
      if (!u) continue;
      for (std::size_t j = 0; j < n; ++j) H(i, j) = modp::sub(H(i, j), modp::mul(u, H(m, j), p), p);
      for (std::size_t j = 0; j < n; ++j) H(j, m) = modp::add(H(j, m), modp::mul(u, H(j, i), p), p);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{l=i+1..k} h_{l,l-1}) p_{i-1}
  std::vector<std::vector<std::uint32_t>> P(n + 1);
  P[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::uint32_t> next(k + 1, 0);
    const auto& prev = P[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = modp::add(next[d + 1], prev[d], p);
      next[d] = modp::sub(next[d], modp::mul(H(k - 1, k - 1), prev[d], p), p);
    }
    std::uint32_t prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = modp::mul(prod, H(i + 1, i), p);
      if (!prod) break;
      std::uint32_t c = modp::mul(prod, H(i, k - 1), p);
      for (std::size_t d = 0; d < P[i].size(); ++d) next[d] = modp::sub(next[d], modp::mul(c, P[i][d], p), p);
    }
    P[k] = std::move(next);
  }
  return P[n];
}

std::vector<std::uint32_t> roots(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint32_t v = 0;
    for (std::size_t d = f.size(); d-- > 0;) v = modp::add(modp::mul(v, x, p), f[d], p);
    if (v == 0) out.push_back(x);
  }
  return out;
}

// Subspace of GF(p)^r held as a basis in reduced row echelon form.
struct Space {
  modp::Matrix basis;  // dim x r
  std::vector<std::size_t> pivots;
};

Space make_space(modp::Matrix rows, std::uint32_t p) {
  Space s;
  s.pivots = modp::rref_inplace(rows, p);
  s.basis = modp::Matrix(s.pivots.size(), rows.cols);
  for (std::size_t i = 0; i < s.pivots.size(); ++i)
    std::copy(rows.row(i), rows.row(i) + rows.cols, s.basis.row(i));
  return s;
}

}  // namespace

void CharTable::finalize() {
  const std::size_t n = chars.size();
  const std::size_t r = class_sizes.size();
  if (n != r || degrees.size() != n) throw OrthogonalityFailure("character table is not square");

  if (inverse_class.size() != r) {
    inverse_class.assign(r, 0);
    for (std::size_t k = 0; k < r; ++k) {
      std::optional<std::size_t> found;
      for (std::size_t l = 0; l < r && !found; ++l) {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i) match = close(chars[i][l], std::conj(chars[i][k]));
        if (match) found = l;
      }
      if (!found) throw OrthogonalityFailure("no inverse class for " + class_labels[k]);
      inverse_class[k] = *found;
    }
  }

  auto is_rational = [&](std::size_t i) {
    return std::all_of(chars[i].begin(), chars[i].end(), [](Complex c) {
      return std::abs(c.imag()) <= kMatchTol && std::abs(c.real() - std::round(c.real())) <= kMatchTol;
    });
  };
  auto is_real = [&](std::size_t i) {
    return std::all_of(chars[i].begin(), chars[i].end(), [](Complex c) { return std::abs(c.imag()) <= kMatchTol; });
  };
  auto is_trivial = [&](std::size_t i) {
    return std::all_of(chars[i].begin(), chars[i].end(), [](Complex c) { return close(c, 1.0); });
  };
  auto fingerprint = [&](std::size_t i) {
    std::vector<long long> f;
    for (Complex c : chars[i]) f.push_back(std::llround(c.real() * 1e6));
    for (Complex c : chars[i]) f.push_back(std::llround(c.imag() * 1e6));
    return f;
  };
  auto same_row = [&](std::size_t i, const std::vector<Complex>& row) {
    for (std::size_t k = 0; k < r; ++k)
      if (!close(chars[i][k], row[k])) return false;
    return true;
  };

  // Galois orbits, from power maps when available and from complex
  // conjugation otherwise.
  std::vector<std::size_t> orbit_of(n);
  std::iota(orbit_of.begin(), orbit_of.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return orbit_of[x] == x ? x : orbit_of[x] = root(orbit_of[x]);
  };
  auto unite = [&](std::size_t a, std::size_t b) { orbit_of[root(a)] = root(b); };
  const bool have_powers = power_maps.size() == r && class_orders.size() == r;
  std::size_t exponent = 1;
  if (have_powers)
    for (std::size_t o : class_orders) exponent = std::lcm(exponent, o);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Complex> row(r);
    for (std::size_t k = 0; k < r; ++k) row[k] = std::conj(chars[i][k]);
    for (std::size_t j = 0; j < n; ++j)
      if (same_row(j, row)) unite(i, j);
    if (!have_powers) continue;
    for (std::size_t t = 2; t < exponent; ++t) {
      if (std::gcd(t, exponent) != 1) continue;
      for (std::size_t k = 0; k < r; ++k) row[k] = chars[i][power_maps[k][t % class_orders[k]]];
      for (std::size_t j = 0; j < n; ++j)
        if (same_row(j, row)) unite(i, j);
    }
  }

  struct Unit {
    std::vector<std::size_t> members;  // primary first
    std::size_t degree;
    int category;  // 0 trivial, 1 rational, 2 real irrational, 3 complex
    std::vector<long long> key;
  };
  std::map<std::size_t, std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < n; ++i) orbits[root(i)].push_back(i);
  std::vector<Unit> units;
  for (auto& [_, members] : orbits) {
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) { return fingerprint(a) > fingerprint(b); });
    Unit u;
    u.members = members;
    const std::size_t lead = members.front();
    u.degree = static_cast<std::size_t>(std::llround(chars[lead][0].real()));
    if (is_trivial(lead))
      u.category = 0;
    else if (is_rational(lead))
      u.category = 1;
    else if (is_real(lead))
      u.category = 2;
    else
      u.category = 3;
    u.key = fingerprint(lead);
    units.push_back(std::move(u));
  }
  std::sort(units.begin(), units.end(), [](const Unit& a, const Unit& b) {
    if ((a.category == 0) != (b.category == 0)) return a.category == 0;
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.category != b.category) return a.category < b.category;
    return a.key > b.key;
  });

  std::vector<std::vector<Complex>> new_chars;
  std::vector<std::size_t> new_degrees;
  labels.clear();
  std::map<std::size_t, std::size_t> units_per_degree;
  for (const Unit& u : units) {
    std::size_t idx = units_per_degree[u.degree]++;
    std::string base = std::to_string(u.degree) + std::string(idx, '*');
    for (std::size_t m = 0; m < u.members.size(); ++m) {
      std::string suffix;
      if (m > 0) suffix = m == 1 ? "b" : "b" + std::to_string(m);
      labels.push_back(base + suffix);
      new_chars.push_back(chars[u.members[m]]);
      new_degrees.push_back(degrees[u.members[m]]);
    }
  }
  chars = std::move(new_chars);
  degrees = std::move(new_degrees);

  rational.assign(n, false);
  real.assign(n, false);
  dual.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    rational[i] = is_rational(i);
    real[i] = is_real(i);
    std::vector<Complex> row(r);
    for (std::size_t k = 0; k < r; ++k) row[k] = std::conj(chars[i][k]);
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j)
      if (same_row(j, row)) {
        dual[i] = j;
        found = true;
      }
    if (!found) throw OrthogonalityFailure("complex conjugate of an irreducible character is missing");
  }
}

std::size_t CharTable::index_of_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw UnknownSpec("no irrep labelled '" + label + "'");
}

void check_orthogonality(const CharTable& T, double tol) {
  const std::size_t n = T.size(), r = T.class_count();
  const double order = static_cast<double>(T.group_order);
  if (n != r) throw OrthogonalityFailure("table is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0;
      for (std::size_t k = 0; k < r; ++k)
        s += static_cast<double>(T.class_sizes[k]) * T.chars[i][k] * std::conj(T.chars[j][k]);
      s /= order;
      if (std::abs(s - Complex(i == j ? 1.0 : 0.0)) > tol)
        throw OrthogonalityFailure("row orthogonality fails for irreps " + std::to_string(i) + ", " + std::to_string(j));
    }
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l) {
      Complex s = 0;
      for (std::size_t i = 0; i < n; ++i) s += T.chars[i][k] * std::conj(T.chars[i][l]);
      const double c = order / static_cast<double>(T.class_sizes[k]);
      if (std::abs(s - Complex(k == l ? c : 0.0)) > tol * c)
        throw OrthogonalityFailure("column orthogonality fails for classes " + T.class_labels[k] + ", " +
                                   T.class_labels[l]);
    }
}

CharTable character_table(const Group& G, std::size_t class_cap) {
  const std::size_t r = G.classes().size();
  if (r > class_cap)
    throw CapExceeded(G.name() + " has " + std::to_string(r) + " classes, above the cap of " + std::to_string(class_cap));
  const std::size_t order = G.order();

  CharTable T;
  T.name = G.name();
  T.provenance = "computed (Dixon-Schneider)";
  T.group_order = order;
  for (const ConjClass& C : G.classes()) {
    T.class_labels.push_back(C.label);
    T.class_sizes.push_back(C.size());
    T.inverse_class.push_back(C.inverse_class);
    T.class_orders.push_back(C.element_order);
    std::vector<std::size_t> pm(C.element_order);
    for (std::size_t t = 0; t < C.element_order; ++t) pm[t] = G.power_class(C.index, static_cast<long long>(t));
    T.power_maps.push_back(std::move(pm));
  }

  // a[(i*r + j)*r + k] = #{x in C_i : x^-1 g_k in C_j}
  std::vector<std::uint32_t> a(r * r * r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    const Perm& gk = G.class_at(k).rep;
    for (std::size_t x = 0; x < order; ++x) {
      const std::size_t y = G.require_index(G.element(x).inverse() * gk);
      ++a[(G.class_of(x) * r + G.class_of(y)) * r + k];
    }
  }

  const std::size_t e = G.exponent();
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  std::uint64_t p = e + 1;
  while (p <= bound || !is_prime64(p)) {
    p += e;
    if (p >= (1ULL << 31)) throw NoSuitablePrime("no prime = 1 mod " + std::to_string(e) + " below 2^31");
  }
  const auto P = static_cast<std::uint32_t>(p);
  const std::uint32_t z = modp::pow(primitive_root(P), (P - 1) / e, P);

  auto class_matrix = [&](std::size_t j) {
    modp::Matrix M(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) M(i, k) = a[(i * r + j) * r + k] % P;
    return M;
  };

  // Split GF(p)^r into common eigenspaces of the class matrices.
  modp::Matrix identity(r, r);
  for (std::size_t i = 0; i < r; ++i) identity(i, i) = 1;
  std::vector<Space> spaces{make_space(identity, P)};
  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.rows == 1; })) break;
    const modp::Matrix M = class_matrix(j);
    std::vector<Space> next;
    for (Space& s : spaces) {
      const std::size_t d = s.basis.rows;
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // A[t'][t] = (M b_t)[pivot_t'], the action of M in the basis of s.
      modp::Matrix A(d, d);
      for (std::size_t t = 0; t < d; ++t) {
        for (std::size_t tp = 0; tp < d; ++tp) {
          const std::size_t row = s.pivots[tp];
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < r; ++k) acc = (acc + std::uint64_t(M(row, k)) * s.basis(t, k)) % P;
          A(tp, t) = static_cast<std::uint32_t>(acc);
        }
      }
      std::vector<std::uint32_t> lambdas = roots(char_poly(A, P), P);
      std::size_t covered = 0;
      std::vector<Space> parts;
      for (std::uint32_t lambda : lambdas) {
        modp::Matrix shifted = A;
        for (std::size_t t = 0; t < d; ++t) shifted(t, t) = modp::sub(shifted(t, t), lambda, P);
        auto ker = modp::kernel(shifted, P);
        modp::Matrix rows(ker.size(), r);
        for (std::size_t v = 0; v < ker.size(); ++v)
          for (std::size_t t = 0; t < d; ++t)
            if (ker[v][t])
              for (std::size_t k = 0; k < r; ++k)
                rows(v, k) = modp::add(rows(v, k), modp::mul(ker[v][t], s.basis(t, k), P), P);
        covered += ker.size();
        parts.push_back(make_space(std::move(rows), P));
      }
      if (covered != d) throw OrthogonalityFailure("class matrices are not simultaneously diagonalisable mod p");
      for (Space& part : parts) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw OrthogonalityFailure("could not separate all central characters");

  const std::uint32_t order_p = static_cast<std::uint32_t>(order % P);
  for (const Space& s : spaces) {
    std::vector<std::uint32_t> omega(s.basis.row(0), s.basis.row(0) + r);
    if (omega[0] == 0) throw OrthogonalityFailure("central character vanishes at the identity");
    const std::uint32_t n0 = modp::inv(omega[0], P);
    for (auto& w : omega) w = modp::mul(w, n0, P);

    std::uint32_t sum = 0;
    for (std::size_t k = 0; k < r; ++k) {
      std::uint32_t term = modp::mul(omega[k], omega[T.inverse_class[k]], P);
      sum = modp::add(sum, modp::mul(term, modp::inv(static_cast<std::uint32_t>(T.class_sizes[k] % P), P), P), P);
    }
    const std::uint32_t d2 = modp::mul(order_p, modp::inv(sum, P), P);
    std::size_t degree = 0;
    for (std::size_t d = 1; d * d <= order; ++d)
      if (std::uint64_t(d) * d % P == d2) {
        degree = d;
        break;
      }
    if (degree == 0) throw OrthogonalityFailure("no integer degree matches the central character");

    std::vector<std::uint32_t> chi_p(r);
    for (std::size_t k = 0; k < r; ++k)
      chi_p[k] = modp::mul(modp::mul(omega[k], static_cast<std::uint32_t>(degree), P),
                           modp::inv(static_cast<std::uint32_t>(T.class_sizes[k] % P), P), P);

    // Eigenvalue multiplicities of g_k on the representation, then the
    // complex value as a sum of roots of unity.
    std::vector<Complex> row(r);
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t o = T.class_orders[k];
      const std::uint32_t zeta = modp::pow(z, e / o, P);
      const std::uint32_t inv_o = modp::inv(static_cast<std::uint32_t>(o % P), P);
      Complex value = 0;
      std::size_t total = 0;
      for (std::size_t l = 0; l < o; ++l) {
        std::uint32_t m = 0;
        for (std::size_t t = 0; t < o; ++t) {
          const std::uint32_t w = modp::pow(zeta, (o - (l * t) % o) % o, P);
          m = modp::add(m, modp::mul(chi_p[T.power_maps[k][t]], w, P), P);
        }
        m = modp::mul(m, inv_o, P);
        if (m > degree) throw OrthogonalityFailure("eigenvalue multiplicity exceeds degree");
        total += m;
        value += static_cast<double>(m) * std::polar(1.0, 2.0 * kPi * static_cast<double>(l) / static_cast<double>(o));
      }
      if (total != degree) throw OrthogonalityFailure("eigenvalue multiplicities do not sum to the degree");
      row[k] = value;
    }
    T.chars.push_back(std::move(row));
    T.degrees.push_back(degree);
  }

  T.finalize();
  check_orthogonality(T);
  return T;
}

nlohmann::json to_json(const CharTable& T) {
  nlohmann::json j;
  j["name"] = T.name;
  j["provenance"] = T.provenance;
  j["order"] = T.group_order;
  j["class_labels"] = T.class_labels;
  j["class_sizes"] = T.class_sizes;
  if (!T.class_orders.empty()) j["class_orders"] = T.class_orders;
  if (!T.power_maps.empty()) j["power_maps"] = T.power_maps;
  j["degrees"] = T.degrees;
  j["irrep_labels"] = T.labels;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : T.chars) {
    nlohmann::json vals = nlohmann::json::array();
    for (Complex c : row) vals.push_back({c.real(), c.imag()});
    rows.push_back(vals);
  }
  j["chars"] = rows;
  return j;
}

CharTable char_table_from_json(const nlohmann::json& j) {
  CharTable T;
  try {
    if (!j.contains("provenance") || !j["provenance"].is_string() || j["provenance"].get<std::string>().empty())
      throw ParseError("character table JSON needs a non-empty provenance field");
    T.name = j.at("name").get<std::string>();
    T.provenance = j.at("provenance").get<std::string>();
    T.class_labels = j.at("class_labels").get<std::vector<std::string>>();
    T.class_sizes = j.at("class_sizes").get<std::vector<std::size_t>>();
    T.degrees = j.at("degrees").get<std::vector<std::size_t>>();
    if (j.contains("class_orders")) T.class_orders = j["class_orders"].get<std::vector<std::size_t>>();
    if (j.contains("power_maps")) T.power_maps = j["power_maps"].get<std::vector<std::vector<std::size_t>>>();
    for (const auto& row : j.at("chars")) {
      std::vector<Complex> vals;
      for (const auto& c : row) {
        if (!c.is_array() || c.size() != 2) throw ParseError("character values must be [re, im] pairs");
        vals.emplace_back(c[0].get<double>(), c[1].get<double>());
      }
      T.chars.push_back(std::move(vals));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad character table JSON: ") + e.what());
  }
  T.group_order = std::accumulate(T.class_sizes.begin(), T.class_sizes.end(), std::size_t{0});
  if (j.contains("order") && j["order"].get<std::size_t>() != T.group_order)
    throw ParseError("class sizes do not add up to the stated order");
  const std::size_t r = T.class_sizes.size();
  if (T.class_labels.size() != r || T.chars.size() != r || T.degrees.size() != r)
    throw ParseError("character table JSON is not square");
  for (const auto& row : T.chars)
    if (row.size() != r) throw ParseError("character row has the wrong length");
  for (const auto& pm : T.power_maps)
    for (std::size_t c : pm)
      if (c >= r) throw ParseError("power map refers to a missing class");
  if (!T.power_maps.empty() && (T.power_maps.size() != r || T.class_orders.size() != r))
    throw ParseError("power maps need one entry per class");
  for (std::size_t k = 0; k < T.power_maps.size(); ++k)
    if (T.power_maps[k].size() != T.class_orders[k]) throw ParseError("power map length must equal element order");
  T.finalize();
  check_orthogonality(T);
  return T;
}

void check_table_matches(const CharTable& T, const Group& G) {
  if (T.group_order != G.order() || T.class_count() != G.classes().size())
    throw ParseError("character table does not fit " + G.name());
  for (std::size_t k = 0; k < T.class_count(); ++k)
    if (T.class_labels[k] != G.class_at(k).label || T.class_sizes[k] != G.class_at(k).size())
      throw ParseError("character table class " + T.class_labels[k] + " does not match " + G.class_at(k).label);
}

ClassFunction conjugation_character(const Group& G, const ConjClass& C) {
  ClassFunction f;
  for (const ConjClass& D : G.classes()) {
    std::size_t count = 0;
    for (const Perm& h : C.members)
      if (D.rep.commutes_with(h)) ++count;
    f.emplace_back(static_cast<double>(count), 0.0);
  }
  return f;
}

ClassFunction regular_conjugation_character(const Group& G) {
  ClassFunction f;
  for (const ConjClass& D : G.classes()) f.emplace_back(static_cast<double>(G.order() / D.size()), 0.0);
  return f;
}

ClassFunction universal_character(const Group& G) {
  ClassFunction f = regular_conjugation_character(G);
  for (Complex& c : f) c -= 1.0;
  return f;
}

std::vector<Complex> inner_products(const ClassFunction& f, const CharTable& T) {
  if (f.size() != T.class_count()) throw NotACharacter("class function has the wrong length");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < T.size(); ++i) {
    Complex s = 0;
    for (std::size_t k = 0; k < T.class_count(); ++k)
      s += static_cast<double>(T.class_sizes[k]) * f[k] * std::conj(T.chars[i][k]);
    out.push_back(s / static_cast<double>(T.group_order));
  }
  return out;
}

std::vector<long> multiplicities(const ClassFunction& f, const CharTable& T) {
  std::vector<long> out;
  for (Complex c : inner_products(f, T)) {
    const double rounded = std::round(c.real());
    if (std::abs(c - Complex(rounded, 0)) > kIntegralityTol || rounded < 0)
      throw NotACharacter("inner product " + std::to_string(c.real()) + "+" + std::to_string(c.imag()) +
                          "i is not a non-negative integer");
    out.push_back(static_cast<long>(rounded));
  }
  return out;
}

RothResult roth_check(const Group& G, const CharTable& T) {
  if (centre(G).size() != 1) throw NontrivialCentre(G.name() + " has nontrivial centre");
  RothResult r;
  r.multiplicities = multiplicities(regular_conjugation_character(G), T);
  r.holds = std::all_of(r.multiplicities.begin(), r.multiplicities.end(), [](long m) { return m > 0; });
  return r;
}

Complex central_character(const CharTable& T, std::size_t class_index, std::size_t irrep) {
  return static_cast<double>(T.class_sizes[class_index]) * T.chars[irrep][class_index] /
         static_cast<double>(T.degrees[irrep]);
}

}  // namespace killform
