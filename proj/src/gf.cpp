#include "killform/gf.hpp"

#include <map>

#include "killform/errors.hpp"

namespace killform {

namespace {

// Conway polynomials, coefficients lowest degree first, monic.
const std::map<std::uint32_t, std::vector<std::uint32_t>>& conway_table() {
  static const std::map<std::uint32_t, std::vector<std::uint32_t>> table = {
      {4, {1, 1, 1}},
      {8, {1, 1, 0, 1}},
      {16, {1, 1, 0, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}},
      {64, {1, 1, 0, 1, 1, 0, 1}},
      {128, {1, 1, 0, 0, 0, 0, 0, 1}},
      {9, {2, 2, 1}},
      {27, {1, 2, 0, 1}},
      {81, {2, 0, 0, 2, 1}},
      {25, {2, 4, 1}},
      {49, {3, 6, 1}},
      {121, {2, 7, 1}},
      {169, {2, 12, 1}},
  };
  return table;
}

constexpr std::uint32_t kMaxPrimeField = 1u << 12;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  if (q < 2) return {0, 0};
  std::uint32_t p = 2;
  while (q % p) ++p;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {p, k};
}

GField::GField(std::uint32_t q) : q_(q) {
  auto [p, k] = prime_power(q);
  if (p == 0) throw BadField(std::to_string(q) + " is not a prime power");
  p_ = p;
  k_ = k;
  if (k == 1) {
    if (q > kMaxPrimeField) throw BadField("prime field too large for table arithmetic");
  } else {
    auto it = conway_table().find(q);
    if (it == conway_table().end())
      throw BadField("no built-in defining polynomial for GF(" + std::to_string(q) + ")");
    modulus_ = it->second;
  }

  add_.resize(std::size_t(q) * q);
  mul_.resize(std::size_t(q) * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  auto digits = [&](Elem a) {
    std::vector<std::uint32_t> d(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  };
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    Elem a = 0;
    for (std::uint32_t i = k; i-- > 0;) a = a * p + d[i];
    return a;
  };

  for (Elem a = 0; a < q; ++a) {
    auto da = digits(a);
    std::vector<std::uint32_t> dn(k);
    for (std::uint32_t i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = encode(dn);
    for (Elem b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<std::uint32_t> ds(k);
      for (std::uint32_t i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = encode(ds);
      if (k == 1) {
        mul_[a * q + b] = static_cast<Elem>((std::uint64_t(a) * b) % p);
        continue;
      }
      std::vector<std::uint32_t> prod(2 * k - 1, 0);
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (std::uint32_t d = 2 * k - 1; d-- > k;) {
        std::uint32_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < k; ++i)
          prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus_[i]) % p;
      }
      prod.resize(k);
      mul_[a * q + b] = encode(prod);
    }
  }
  for (Elem a = 1; a < q; ++a)
    for (Elem b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = b;
        break;
      }

  if (k == 1) {
    for (Elem g = 1; g < q; ++g)
      if (mult_order(g) == q - 1) {
        primitive_ = g;
        break;
      }
    modulus_ = {(p - primitive_) % p, 1};
  } else {
    primitive_ = p;  // the class of x
    if (mult_order(primitive_) != q - 1)
      throw BadField("defining polynomial of GF(" + std::to_string(q) + ") is not primitive");
  }
}

GField::Elem GField::inv(Elem a) const {
  if (a == 0) throw BadField("inverse of zero");
  return inv_[a];
}

GField::Elem GField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t GField::mult_order(Elem a) const {
  if (a == 0) return 0;
  std::uint32_t ord = 1;
  for (Elem x = a; x != 1; x = mul(x, a)) {
    if (++ord > q_) return 0;  // not a unit: the modulus is reducible
  }
  return ord;
}

}  // namespace killform
