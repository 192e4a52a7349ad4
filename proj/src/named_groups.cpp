#include "killform/named_groups.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "killform/errors.hpp"
#include "killform/gf.hpp"

#ifndef KILLFORM_DATA_DIR
#define KILLFORM_DATA_DIR "data"
#endif

namespace killform {

namespace {

Perm cycle_on(std::size_t degree, std::vector<int> points) {
  std::vector<Perm::Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Perm::Point>(i);
  for (std::size_t k = 0; k < points.size(); ++k)
    img[points[k]] = static_cast<Perm::Point>(points[(k + 1) % points.size()]);
  return Perm(std::move(img));
}

std::vector<int> range(int from, int to) {
  std::vector<int> r;
  for (int i = from; i < to; ++i) r.push_back(i);
  return r;
}

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c); };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

}  // namespace

Group symmetric_group(int n, std::size_t cap) {
  if (n < 1) throw UnknownSpec("S<n> needs n >= 1");
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(cycle_on(n, {0, 1}));
    if (n >= 3) gens.push_back(cycle_on(n, range(0, n)));
  }
  return Group::generate(std::move(gens), "S" + std::to_string(n), cap, n);
}

Group alternating_group(int n, std::size_t cap) {
  if (n < 1) throw UnknownSpec("A<n> needs n >= 1");
  std::vector<Perm> gens;
  if (n >= 3) {
    gens.push_back(cycle_on(n, {0, 1, 2}));
    if (n >= 4) gens.push_back(n % 2 ? cycle_on(n, range(0, n)) : cycle_on(n, range(1, n)));
  }
  return Group::generate(std::move(gens), "A" + std::to_string(n), cap, n);
}

Group psl2(std::uint32_t q, std::size_t cap) {
  GField F(q);
  const std::size_t inf = q;
  auto make = [&](auto f) {
    std::vector<Perm::Point> img(q + 1);
    for (std::size_t x = 0; x <= q; ++x) img[x] = static_cast<Perm::Point>(f(x));
    return Perm(std::move(img));
  };
  // Scaling by a non-square would give PGL(2,q) for odd q, so scale by a
  // generator of the squares instead.
  const GField::Elem scale = F.p() == 2 ? F.primitive() : F.mul(F.primitive(), F.primitive());
  std::vector<Perm> gens;
  gens.push_back(make([&](std::size_t x) { return x == inf ? inf : F.add(x, F.one()); }));
  if (q > 3) gens.push_back(make([&](std::size_t x) { return x == inf ? inf : F.mul(scale, x); }));
  gens.push_back(make([&](std::size_t x) -> std::size_t {
    if (x == inf) return 0;
    if (x == 0) return inf;
    return F.neg(F.inv(static_cast<GField::Elem>(x)));
  }));
  return Group::generate(std::move(gens), "PSL(2," + std::to_string(q) + ")", cap);
}

Group psl3(std::uint32_t q, std::size_t cap) {
  GField F(q);
  using V = std::array<GField::Elem, 3>;
  std::vector<V> points;
  for (GField::Elem a = 0; a < q; ++a)
    for (GField::Elem b = 0; b < q; ++b) points.push_back({1, a, b});
  for (GField::Elem a = 0; a < q; ++a) points.push_back({0, 1, a});
  points.push_back({0, 0, 1});
  auto normalize = [&](V v) {
    for (int i = 0; i < 3; ++i)
      if (v[i] != 0) {
        GField::Elem s = F.inv(v[i]);
        for (auto& c : v) c = F.mul(c, s);
        break;
      }
    return v;
  };
  auto locate = [&](const V& v) {
    auto it = std::find(points.begin(), points.end(), normalize(v));
    return static_cast<Perm::Point>(it - points.begin());
  };
  std::vector<GField::Elem> basis;
  for (std::uint32_t m = 0; m < F.k(); ++m) basis.push_back(F.pow(F.primitive(), m));
  std::vector<Perm> gens;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (GField::Elem t : basis) {
        std::vector<Perm::Point> img(points.size());
        for (std::size_t x = 0; x < points.size(); ++x) {
          V v = points[x];
          v[i] = F.add(v[i], F.mul(t, v[j]));
          img[x] = locate(v);
        }
        gens.emplace_back(std::move(img));
      }
    }
  return Group::generate(std::move(gens), "PSL(3," + std::to_string(q) + ")", cap);
}

Group parse_group_text(std::string_view text, const std::string& origin, std::size_t cap) {
  std::istringstream in{std::string(text)};
  std::string line, name;
  long degree = -1;
  std::vector<Perm> gens;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto where = [&] { return origin + ":" + std::to_string(lineno) + ": "; };
    if (name.empty()) {
      if (line.rfind("name", 0) != 0) throw ParseError(where() + "expected 'name <label>'");
      name = trim(line.substr(4));
      if (name.empty()) throw ParseError(where() + "empty group name");
      continue;
    }
    if (degree < 0) {
      if (line.rfind("degree", 0) != 0) throw ParseError(where() + "expected 'degree <n>'");
      try {
        degree = std::stol(line.substr(6));
      } catch (const std::exception&) {
        throw ParseError(where() + "bad degree");
      }
      if (degree < 1 || degree > 0xFFFF) throw ParseError(where() + "degree out of range");
      continue;
    }
    try {
      gens.push_back(Perm::from_cycles(line, static_cast<std::size_t>(degree)));
    } catch (const ParseError& e) {
      throw ParseError(where() + e.what());
    }
  }
  if (name.empty() || degree < 0) throw ParseError(origin + ": missing name or degree header");
  return Group::generate(std::move(gens), name, cap, static_cast<std::size_t>(degree));
}

Group load_group_file(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw UnknownSpec("cannot open group file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str(), path, cap);
}

std::string data_dir() {
  if (const char* env = std::getenv("KILLFORM_DATA_DIR"); env && *env) return env;
  return KILLFORM_DATA_DIR;
}

Group build_named_group(const std::string& raw, std::size_t cap) {
  std::string spec = trim(raw);
  std::smatch m;
  if (spec.rfind("file:", 0) == 0) {
    std::string path = spec.substr(5);
    if (!std::filesystem::exists(path)) {
      std::filesystem::path alt = std::filesystem::path(data_dir()) / std::filesystem::path(path).filename();
      if (std::filesystem::exists(alt)) path = alt.string();
    }
    return load_group_file(path, cap);
  }
  static const std::regex sym(R"(S(\d+))"), alt(R"(A(\d+))"),
      psl(R"(PSL\(\s*([23])\s*,\s*(\d+)\s*\)|L([23])\((\d+)\))");
  auto small_int = [&](const std::string& s) {
    if (s.size() > 6) throw UnknownSpec("number too large in '" + spec + "'");
    return std::stoi(s);
  };
  if (std::regex_match(spec, m, sym)) return symmetric_group(small_int(m[1]), cap);
  if (std::regex_match(spec, m, alt)) return alternating_group(small_int(m[1]), cap);
  if (std::regex_match(spec, m, psl)) {
    int n = small_int(m[1].matched ? m[1].str() : m[3].str());
    auto q = static_cast<std::uint32_t>(small_int(m[2].matched ? m[2].str() : m[4].str()));
    return n == 2 ? psl2(q, cap) : psl3(q, cap);
  }
  if (spec == "M11") return load_group_file((std::filesystem::path(data_dir()) / "m11.grp").string(), cap);
  if (spec == "PSU(3,3)" || spec == "U3(3)")
    return load_group_file((std::filesystem::path(data_dir()) / "psu33.grp").string(), cap);
  throw UnknownSpec("unrecognised group spec '" + spec + "'");
}

}  // namespace killform
