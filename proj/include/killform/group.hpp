#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "killform/perm.hpp"

namespace killform {

inline constexpr std::size_t kDefaultElementCap = 100000;

struct ConjClass {
  std::size_t index = 0;  // position in Group::classes()
  std::string label;      // "1A", "2A", "5B", ...
  Perm rep;               // smallest member
  std::vector<Perm> members;           // sorted
  std::vector<std::uint32_t> elems;    // element index of each member
  std::vector<Perm> sections;          // sections[i] * rep * sections[i]^-1 == members[i]
  std::size_t element_order = 1;
  bool is_real = true;
  std::size_t inverse_class = 0;

  std::size_t size() const { return members.size(); }
  std::optional<std::size_t> position(const Perm& h) const;
};

class Group {
 public:
  // Closes `generators` under composition. `degree` is only consulted when
  // the generator list is empty.
  static Group generate(std::vector<Perm> generators, std::string name,
                        std::size_t cap = kDefaultElementCap, std::size_t degree = 0);

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  // Sorted lexicographically; index 0 is the identity.
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Perm& g) const;
  std::size_t require_index(const Perm& g) const;

  const std::vector<ConjClass>& classes() const { return classes_; }
  const ConjClass& class_at(std::size_t c) const { return classes_[c]; }
  std::size_t class_of(std::size_t elem) const { return class_of_[elem]; }
  std::size_t pos_in_class(std::size_t elem) const { return pos_in_class_[elem]; }
  std::size_t class_of(const Perm& g) const { return class_of_[require_index(g)]; }
  std::size_t centralizer_order(std::size_t elem) const {
    return order() / classes_[class_of_[elem]].size();
  }
  // Class index of g^k for the representative of class c.
  std::size_t power_class(std::size_t c, long long k) const;
  std::size_t exponent() const;

  // Looks up a class by label; throws UnknownSpec.
  std::size_t class_by_label(const std::string& label) const;

 private:
  void compute_classes();

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::uint32_t, PermHash> index_;
  std::vector<ConjClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> pos_in_class_;
};

// |Z(g)| when `within` is empty, else |Z(g) ∩ within|.
std::size_t centralizer_count(const Group& G, const Perm& g, const ConjClass* within = nullptr);

// Whether the subgroup generated by the members of C is all of G.
bool class_generates(const Group& G, const ConjClass& C);

// True iff every nontrivial class generates G.
bool is_simple_via_classes(const Group& G);

// Elements of the centre, as element indices.
std::vector<std::size_t> centre(const Group& G);

}  // namespace killform
