#include "killform/group.hpp"

#include <algorithm>
#include <numeric>

#include "killform/errors.hpp"

namespace killform {

std::optional<std::size_t> ConjClass::position(const Perm& h) const {
  auto it = std::lower_bound(members.begin(), members.end(), h);
  if (it == members.end() || *it != h) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

Group Group::generate(std::vector<Perm> generators, std::string name, std::size_t cap,
                      std::size_t degree) {
  Group G;
  G.name_ = std::move(name);
  if (!generators.empty()) degree = generators.front().degree();
  for (const Perm& g : generators)
    if (g.degree() != degree) throw DegreeMismatch("generators of different degree");
  G.degree_ = degree;
  G.generators_ = std::move(generators);

  std::vector<Perm> elems{Perm(degree)};
  std::unordered_map<Perm, std::uint32_t, PermHash> seen{{elems[0], 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Perm& s : G.generators_) {
      Perm next = s * elems[head];
      if (seen.count(next)) continue;
      if (elems.size() >= cap)
        throw CapExceeded("group '" + G.name_ + "' exceeds element cap " + std::to_string(cap));
      seen.emplace(next, static_cast<std::uint32_t>(elems.size()));
      elems.push_back(std::move(next));
    }
  }
  std::sort(elems.begin(), elems.end());
  G.index_.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) G.index_.emplace(elems[i], static_cast<std::uint32_t>(i));
  G.elements_ = std::move(elems);
  G.compute_classes();
  return G;
}

std::optional<std::size_t> Group::index_of(const Perm& g) const {
  if (g.degree() != degree_) return std::nullopt;
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Group::require_index(const Perm& g) const {
  auto i = index_of(g);
  if (!i) throw ElementNotInGroup(g.to_cycles() + " is not an element of " + name_);
  return *i;
}

void Group::compute_classes() {
  const std::size_t n = elements_.size();
  constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
  std::vector<std::uint32_t> owner(n, kUnset);
  std::vector<ConjClass> found;

  // Elements are sorted, so the first unassigned element is the smallest
  // member of its class.
  for (std::size_t start = 0; start < n; ++start) {
    if (owner[start] != kUnset) continue;
    ConjClass C;
    C.rep = elements_[start];
    std::vector<std::pair<std::uint32_t, Perm>> orbit{{static_cast<std::uint32_t>(start), Perm(degree_)}};
    owner[start] = static_cast<std::uint32_t>(found.size());
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const Perm& h = elements_[orbit[head].first];
      for (const Perm& x : generators_) {
        std::uint32_t j = index_.at(h.conjugate(x));
        if (owner[j] != kUnset) continue;
        owner[j] = static_cast<std::uint32_t>(found.size());
        orbit.emplace_back(j, x * orbit[head].second);
      }
    }
    std::sort(orbit.begin(), orbit.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [j, s] : orbit) {
      C.members.push_back(elements_[j]);
      C.elems.push_back(j);
      C.sections.push_back(std::move(s));
    }
    C.element_order = C.rep.order();
    found.push_back(std::move(C));
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const ConjClass& x = found[a];
    const ConjClass& y = found[b];
    if (x.element_order != y.element_order) return x.element_order < y.element_order;
    if (x.size() != y.size()) return x.size() < y.size();
    return x.members < y.members;
  });

  classes_.clear();
  classes_.reserve(found.size());
  std::vector<std::size_t> new_index(found.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    new_index[perm[k]] = k;
    classes_.push_back(std::move(found[perm[k]]));
  }
  class_of_.assign(n, 0);
  pos_in_class_.assign(n, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    ConjClass& C = classes_[c];
    C.index = c;
    for (std::size_t i = 0; i < C.elems.size(); ++i) {
      class_of_[C.elems[i]] = static_cast<std::uint32_t>(c);
      pos_in_class_[C.elems[i]] = static_cast<std::uint32_t>(i);
    }
  }

  std::size_t letter = 0;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (c > 0 && classes_[c].element_order == classes_[c - 1].element_order)
      ++letter;
    else
      letter = 0;
    std::string suffix;
    for (std::size_t v = letter + 1; v > 0; v = (v - 1) / 26) suffix.insert(suffix.begin(), char('A' + (v - 1) % 26));
    classes_[c].label = std::to_string(classes_[c].element_order) + suffix;
  }
  for (ConjClass& C : classes_) {
    C.inverse_class = class_of_[index_.at(C.rep.inverse())];
    C.is_real = C.inverse_class == C.index;
  }
}

std::size_t Group::power_class(std::size_t c, long long k) const {
  return class_of_[index_.at(classes_[c].rep.pow(k))];
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (const ConjClass& C : classes_) e = std::lcm(e, C.element_order);
  return e;
}

std::size_t Group::class_by_label(const std::string& label) const {
  for (const ConjClass& C : classes_)
    if (C.label == label) return C.index;
  throw UnknownSpec("no class labelled '" + label + "' in " + name_);
}

std::size_t centralizer_count(const Group& G, const Perm& g, const ConjClass* within) {
  G.require_index(g);
  std::size_t count = 0;
  if (within) {
    for (const Perm& h : within->members)
      if (g.commutes_with(h)) ++count;
  } else {
    for (const Perm& h : G.elements())
      if (g.commutes_with(h)) ++count;
  }
  return count;
}

bool class_generates(const Group& G, const ConjClass& C) {
  std::vector<char> in(G.order(), 0);
  std::vector<std::size_t> reached{0};
  in[0] = 1;
  for (std::size_t head = 0; head < reached.size(); ++head) {
    const Perm& h = G.element(reached[head]);
    for (const Perm& x : C.members) {
      std::size_t j = G.require_index(x * h);
      if (in[j]) continue;
      in[j] = 1;
      reached.push_back(j);
      if (reached.size() == G.order()) return true;
    }
  }
  return reached.size() == G.order();
}

bool is_simple_via_classes(const Group& G) {
  if (G.order() <= 1) return false;
  for (const ConjClass& C : G.classes())
    if (C.index != 0 && !class_generates(G, C)) return false;
  return true;
}

std::vector<std::size_t> centre(const Group& G) {
  std::vector<std::size_t> z;
  for (const ConjClass& C : G.classes())
    if (C.size() == 1) z.push_back(C.elems[0]);
  return z;
}

}  // namespace killform
