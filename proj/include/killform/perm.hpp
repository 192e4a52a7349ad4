#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace killform {

// Permutation of {0..degree-1}. Products compose right to left:
// (p * q)(x) = p(q(x)).
class Perm {
 public:
  using Point = std::uint16_t;

  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<Point> images);

  // Parses disjoint-cycle notation such as "(1,2,3)(4,5)" or "(1 2 3)".
  // "()" and "e" give the identity.
  static Perm from_cycles(std::string_view text, std::size_t degree,
                          bool one_based = true);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& q) const;
  Perm inverse() const;
  // by * this * by^-1
  Perm conjugate(const Perm& by) const;
  Perm pow(long long k) const;

  bool is_identity() const;
  bool commutes_with(const Perm& q) const;
  std::size_t order() const;
  int sign() const;
  std::size_t inversions() const;
  // Cycle lengths in decreasing order, fixed points included.
  std::vector<int> cycle_type() const;
  std::string to_cycles(bool one_based = true) const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace killform
