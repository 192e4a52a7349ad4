#include "killform/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "killform/errors.hpp"

namespace killform {

Perm::Perm(std::size_t degree) : images_(degree) {
  if (degree > 0xFFFF) throw DegreeMismatch("degree too large");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw ParseError("images do not form a bijection");
    seen[x] = 1;
  }
}

Perm Perm::from_cycles(std::string_view text, std::size_t degree, bool one_based) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.substr(i) == "e") return Perm(std::move(img));
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("bad character in cycle notation: " + std::string(text));
      long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000) throw ParseError("point out of range");
        ++i;
      }
      if (one_based) --v;
      if (v < 0 || static_cast<std::size_t>(v) >= degree)
        throw ParseError("point out of range in " + std::string(text));
      if (used[v]) throw ParseError("point repeated in " + std::string(text));
      used[v] = 1;
      cycle.push_back(static_cast<Point>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) img[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& q) const {
  if (q.degree() != degree()) throw DegreeMismatch("composing permutations of different degree");
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[x] = images_[q.images_[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[images_[x]] = static_cast<Point>(x);
  return r;
}

Perm Perm::conjugate(const Perm& by) const {
  if (by.degree() != degree()) throw DegreeMismatch("conjugating by a permutation of different degree");
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[by.images_[x]] = by.images_[images_[x]];
  return r;
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Perm acc(degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

bool Perm::commutes_with(const Perm& q) const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[q.images_[x]] != q.images_[images_[x]]) return false;
  return true;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::size_t Perm::order() const {
  std::size_t r = 1;
  for (int len : cycle_type()) r = std::lcm(r, static_cast<std::size_t>(len));
  return r;
}

int Perm::sign() const {
  std::size_t even_cycles = 0;
  for (int len : cycle_type())
    if (len % 2 == 0) ++even_cycles;
  return even_cycles % 2 ? -1 : 1;
}

std::size_t Perm::inversions() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++count;
  return count;
}

std::string Perm::to_cycles(bool one_based) const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = 1;
      if (!first) out += ',';
      out += std::to_string(y + (one_based ? 1 : 0));
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Perm::Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace killform
