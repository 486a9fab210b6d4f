#pragma once

#include <iosfwd>
#include <string>

#include "sphm/types.hpp"

// Plain-text instance documents. Line-oriented ASCII; lines whose first
// non-blank character is `#` and blank lines are ignored. Directives:
//
//   n 5
//   axis 1 2 3 4 5
//   pref 1: 1 2 3 4 5
//   pref 5: 4 5 3 2 1
//   endow 5 1 3 4 2
//
// `n` must come first; `axis`, one `pref i:` per agent and `endow` follow in
// any order, each exactly once. `axis` lists resources left to right,
// `pref i:` agent i's resources best to worst, `endow` the resource held by
// agents 1..n. All labels are 1-based.

namespace sphm {

RawInstance parse_raw(std::istream& in);  // throws ParseError

// parse_raw plus validation; single-peakedness is required by default.
Instance parse_instance(std::istream& in, ValidateOptions options = {});
Instance parse_instance(const std::string& text, ValidateOptions options = {});

// Canonical form: n, axis, pref 1..n, endow; single spaces, newline after
// every line. parse(serialize(i)) reproduces i exactly.
std::string serialize(const Instance& instance);
void write_instance(std::ostream& out, const Instance& instance);

}  // namespace sphm
