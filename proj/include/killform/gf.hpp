#pragma once

#include <cstdint>
#include <vector>

namespace killform {

// GF(q) with q = p^k, elements encoded as integers 0..q-1 whose base-p digits
// are polynomial coefficients (lowest degree first). Arithmetic is by full
// lookup tables, which is fine for the field sizes used here.
class GField {
 public:
  using Elem = std::uint32_t;

  // Throws BadField unless q is a prime or one of the tabulated prime powers.
  explicit GField(std::uint32_t q);

  std::uint32_t q() const { return q_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  // Coefficients of the monic defining polynomial, lowest degree first (size k+1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  // A generator of the multiplicative group.
  Elem primitive() const { return primitive_; }
  std::uint32_t mult_order(Elem a) const;

 private:
  std::uint32_t q_, p_, k_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
  Elem primitive_ = 0;
};

bool is_prime(std::uint64_t n);
// If q = p^k with p prime returns {p, k}; otherwise {0, 0}.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q);

}  // namespace killform
