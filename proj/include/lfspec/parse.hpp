#pragma once

#include <string>
#include <vector>

#include "lfspec/geometry.hpp"

namespace lfspec {

// Textual input grammar (shared by the CLI and the bindings):
//   rational   := term (('*' | '/') term)*            e.g.  3/4,  2^-3 * 5
//   term       := ['-'] digits ['^' ['-'] digits]
//   padic lit  := padic(p=2, "101", v=-1)              digits from index v up
//   laurent    := sum of [coef '*'] T ['^' exp] terms  e.g.  T^-1 + 1 + 2*T^2
//   element    := padic lit | laurent poly | rational (model decides)
//   ball       := ball(center, radius)                 radius a power of p
//   set        := ball ('+' | 'u' | 'U' | '∪') ball ...
//   residues   := comma-separated integers             e.g.  0,3,4,7
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

Rational parse_rational(const std::string& text);

Element parse_element(const FieldModel& model, const std::string& text,
                      long long prec = Element::kDefaultPrec);

// Split on top-level separators (',' or ';'), respecting parentheses.
std::vector<std::string> split_top_level(const std::string& text, const std::string& seps);

std::vector<Vec> parse_point_list(const FieldModel& model, const std::string& text);

Ball parse_ball(const FieldModel& model, const std::string& text);

CompactOpenSet parse_compact_open(const FieldModel& model, const std::string& text);

std::vector<long long> parse_residue_list(const std::string& text);

} // namespace lfspec
