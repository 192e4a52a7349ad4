#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "killform/errors.hpp"
#include "killform/gf.hpp"
#include "killform/group.hpp"
#include "killform/named_groups.hpp"

using namespace killform;

namespace {

std::multiset<std::size_t> nontrivial_sizes(const Group& G) {
  std::multiset<std::size_t> s;
  for (const ConjClass& C : G.classes())
    if (C.index != 0) s.insert(C.size());
  return s;
}

std::string data(const std::string& file) { return std::string(KILLFORM_DATA_DIR) + "/" + file; }

}  // namespace

TEST_CASE("perm arithmetic") {
  Perm a = Perm::from_cycles("(1,2,3)", 4);
  Perm b = Perm::from_cycles("(1 2)", 4);
  CHECK((a * a.inverse()).is_identity());
  CHECK((a * b)[1] == a[b[1]]);
  CHECK(a.order() == 3);
  CHECK(b.sign() == -1);
  CHECK(a.sign() == 1);
  CHECK(b.inversions() == 1);
  CHECK(a.to_cycles() == "(1,2,3)");
  CHECK(Perm::from_cycles("()", 3).is_identity());
  CHECK(a.cycle_type() == std::vector<int>{3, 1});
  Perm c = a.conjugate(b);
  CHECK(c == b * a * b.inverse());
  CHECK(a.pow(-1) == a.inverse());
  CHECK(a.pow(3).is_identity());
  CHECK_THROWS_AS(Perm::from_cycles("(1,2", 3), ParseError);
  CHECK_THROWS_AS(Perm::from_cycles("(1,5)", 3), ParseError);
  CHECK_THROWS_AS(Perm::from_cycles("(1,2,1)", 3), ParseError);
  CHECK_THROWS_AS(Perm(std::vector<Perm::Point>{0, 0}), ParseError);
}

TEST_CASE("generate_group examples") {
  Group s3 = Group::generate({Perm::from_cycles("(1,2)", 3), Perm::from_cycles("(1,2,3)", 3)}, "S3");
  CHECK(s3.order() == 6);
  Group triv = Group::generate({}, "1", kDefaultElementCap, 4);
  CHECK(triv.order() == 1);
  CHECK(triv.classes().size() == 1);
  CHECK(psl2(7).order() == 168);
  CHECK(psl2(7).degree() == 8);
  CHECK_THROWS_AS(Group::generate({Perm(3), Perm(4)}, "bad"), DegreeMismatch);
  CHECK_THROWS_AS(symmetric_group(6, 100), CapExceeded);
}

TEST_CASE("named groups have the expected orders") {
  const std::map<std::string, std::size_t> expected = {
      {"S3", 6},          {"S4", 24},          {"A4", 12},          {"A5", 60},
      {"A6", 360},        {"A7", 2520},        {"PSL(2,7)", 168},   {"PSL(2,8)", 504},
      {"PSL(2,11)", 660}, {"PSL(2,13)", 1092}, {"PSL(2,16)", 4080}, {"PSL(2,17)", 2448},
      {"PSL(2,19)", 3420}, {"PSL(2,23)", 6072}, {"PSL(2,25)", 7800}, {"PSL(2,27)", 9828},
      {"PSL(2,9)", 360},  {"PSL(2,4)", 60},    {"PSL(2,5)", 60},    {"PSL(3,2)", 168},
      {"PSL(3,3)", 5616},
  };
  for (const auto& [spec, order] : expected) {
    CAPTURE(spec);
    CHECK(build_named_group(spec).order() == order);
  }
  CHECK(build_named_group("file:" + data("m11.grp")).order() == 7920);
  CHECK(build_named_group("file:" + data("psu33.grp")).order() == 6048);
  CHECK_THROWS_AS(build_named_group("Q8"), UnknownSpec);
  CHECK_THROWS_AS(build_named_group("PSL(2,6)"), BadField);
  CHECK_THROWS_AS(build_named_group("PSL(2,243)"), BadField);
}

TEST_CASE("PSL(3,4) is reachable within the default cap") {
  CHECK(build_named_group("PSL(3,4)").order() == 20160);
}

TEST_CASE("group file parsing") {
  Group G = parse_group_text("# comment\nname C5\n\ndegree 5\n(1,2,3,4,5)  # gen\n", "inline");
  CHECK(G.name() == "C5");
  CHECK(G.order() == 5);
  CHECK_THROWS_AS(parse_group_text("degree 3\n", "x"), ParseError);
  CHECK_THROWS_AS(parse_group_text("name X\ndegree 3\n(1,4)\n", "x"), ParseError);
}

TEST_CASE("class size examples") {
  CHECK(nontrivial_sizes(symmetric_group(4)) == std::multiset<std::size_t>{6, 3, 8, 6});
  CHECK(nontrivial_sizes(alternating_group(5)) == std::multiset<std::size_t>{15, 20, 12, 12});
  Group s4 = symmetric_group(4);
  std::vector<std::string> labels;
  for (const auto& C : s4.classes()) labels.push_back(C.label);
  CHECK(labels == std::vector<std::string>{"1A", "2A", "2B", "3A", "4A"});
  CHECK(s4.class_at(1).size() == 3);
  CHECK(s4.class_at(2).size() == 6);
}

TEST_CASE("centralizer_count examples") {
  Group s3 = symmetric_group(3);
  const ConjClass& transpositions = s3.class_at(1);
  CHECK(transpositions.size() == 3);
  CHECK(centralizer_count(s3, Perm(3), &transpositions) == 3);
  CHECK(centralizer_count(s3, Perm::from_cycles("(1,2,3)", 3)) == 3);
  CHECK(centralizer_count(s3, Perm(3)) == 6);
  CHECK_THROWS_AS(centralizer_count(alternating_group(3), Perm::from_cycles("(1,2)", 3)),
                  ElementNotInGroup);
}

TEST_CASE("class generation and simplicity") {
  Group s3 = symmetric_group(3);
  CHECK(class_generates(s3, s3.class_at(1)));
  CHECK_FALSE(class_generates(s3, s3.class_at(2)));
  Group a5 = alternating_group(5);
  for (const auto& C : a5.classes())
    if (C.index) CHECK(class_generates(a5, C));
  CHECK(is_simple_via_classes(a5));
  CHECK_FALSE(is_simple_via_classes(symmetric_group(4)));
  CHECK_FALSE(is_simple_via_classes(alternating_group(4)));
}

TEST_CASE("class invariants hold exhaustively on small groups") {
  for (std::string spec : {"S3", "S4", "S5", "A4", "A5", "A6", "PSL(2,7)", "PSL(2,8)", "PSL(2,11)",
                           "PSL(2,13)"}) {
    CAPTURE(spec);
    Group G = build_named_group(spec);
    std::size_t total = 0;
    for (const ConjClass& C : G.classes()) {
      total += C.size();
      CHECK(std::is_sorted(C.members.begin(), C.members.end()));
      CHECK(std::adjacent_find(C.members.begin(), C.members.end()) == C.members.end());
      CHECK(C.rep == C.members.front());
      for (std::size_t i = 0; i < C.size(); ++i) {
        CHECK(C.sections[i] * C.rep * C.sections[i].inverse() == C.members[i]);
        CHECK(G.index_of(C.sections[i]).has_value());
        CHECK(G.element(C.elems[i]) == C.members[i]);
        for (const Perm& x : G.generators()) CHECK(C.position(C.members[i].conjugate(x)).has_value());
      }
      bool all_inverses = std::all_of(C.members.begin(), C.members.end(),
                                      [&](const Perm& h) { return C.position(h.inverse()).has_value(); });
      CHECK(C.is_real == all_inverses);
      CHECK(C.is_real == C.position(C.rep.inverse()).has_value());
      // orbit-stabilizer against a brute-force centralizer
      CHECK(centralizer_count(G, C.rep) * C.size() == G.order());
    }
    CHECK(total == G.order());
    CHECK(G.element(0).is_identity());
    for (const Perm& x : G.generators()) CHECK(G.index_of(x).has_value());
    if (spec != "S3" && spec != "S4" && spec != "S5" && spec != "A4") CHECK(is_simple_via_classes(G));
  }
}

TEST_CASE("shipped simple groups are simple") {
  CHECK(is_simple_via_classes(build_named_group("M11")));
  CHECK(is_simple_via_classes(build_named_group("PSU(3,3)")));
  CHECK(is_simple_via_classes(build_named_group("PSL(3,3)")));
}

TEST_CASE("finite fields") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 121u, 128u, 169u}) {
    CAPTURE(q);
    GField F(q);
    CHECK(F.mult_order(F.primitive()) == q - 1);
    // The modulus has no roots, and x generates, so the quotient is a field:
    // check the axioms directly on all elements.
    for (GField::Elem a = 0; a < q; ++a) {
      CHECK(F.add(a, F.neg(a)) == 0);
      CHECK(F.mul(a, 1) == a);
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
      for (GField::Elem b = 0; b < q; b += 1 + q / 16) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        if (a && b) CHECK(F.mul(a, b) != 0);
        for (GField::Elem c = 0; c < q; c += 1 + q / 8)
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
  CHECK_THROWS_AS(GField(6), BadField);
  CHECK_THROWS_AS(GField(243), BadField);
}

TEST_CASE("tabulated moduli are irreducible") {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 121u, 128u, 169u}) {
    CAPTURE(q);
    GField F(q);
    const auto& f = F.modulus();
    std::uint32_t p = F.p(), k = F.k();
    // brute force: no monic factor of degree d <= k/2 divides f
    for (std::uint32_t d = 1; 2 * d <= k; ++d) {
      std::uint32_t count = 1;
      for (std::uint32_t i = 0; i < d; ++i) count *= p;
      for (std::uint32_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> g(d + 1);
        std::uint32_t c = code;
        for (std::uint32_t i = 0; i < d; ++i) {
          g[i] = c % p;
          c /= p;
        }
        g[d] = 1;
        std::vector<std::uint32_t> r = f;
        for (std::uint32_t top = k; top >= d && top <= k; --top) {
          std::uint32_t lead = r[top];
          if (lead)
            for (std::uint32_t i = 0; i <= d; ++i) r[top - d + i] = (r[top - d + i] + (p - lead) * g[i]) % p;
          if (top == d) break;
        }
        bool zero = std::all_of(r.begin(), r.end(), [](std::uint32_t v) { return v == 0; });
        CHECK_FALSE(zero);
      }
    }
  }
}
