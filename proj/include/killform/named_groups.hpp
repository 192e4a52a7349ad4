#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "killform/group.hpp"

namespace killform {

Group symmetric_group(int n, std::size_t cap = kDefaultElementCap);
Group alternating_group(int n, std::size_t cap = kDefaultElementCap);
// Acting on the q+1 points of the projective line; point q is infinity.
Group psl2(std::uint32_t q, std::size_t cap = kDefaultElementCap);
// Acting on the q^2+q+1 points of the projective plane.
Group psl3(std::uint32_t q, std::size_t cap = kDefaultElementCap);

// Text format: "name <label>", "degree <n>", then one generator per line in
// 1-based cycle notation. Blank lines and '#' comments are skipped.
Group load_group_file(const std::string& path, std::size_t cap = kDefaultElementCap);
Group parse_group_text(std::string_view text, const std::string& origin,
                       std::size_t cap = kDefaultElementCap);

// Directory holding the shipped generator files. Honours $KILLFORM_DATA_DIR.
std::string data_dir();

// Grammar: S<n> | A<n> | PSL(2,<q>) | PSL(3,<q>) | file:<path>. The shipped
// data files are also reachable by name ("M11", "PSU(3,3)").
Group build_named_group(const std::string& spec, std::size_t cap = kDefaultElementCap);

}  // namespace killform
