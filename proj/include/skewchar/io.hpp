#pragma once

#include <string>
#include <utility>

#include "skewchar/formulas.hpp"
#include "skewchar/laurent.hpp"
#include "skewchar/partition.hpp"
#include "skewchar/symfunc.hpp"

namespace skewchar {

// "4,4,2"; the empty partition is "" or "0". ParseError positions are offset
// by `origin` so they point into the enclosing string.
Partition parse_partition(const std::string& s, std::size_t origin = 0);

// OUTER[/INNER]. ParseError with position, ContainmentError if INNER is not inside OUTER.
SkewShape parse_shape(const std::string& s);

// "3" or "1..3" as an inclusive range.
std::pair<int, int> parse_range(const std::string& s);

// One computed character with the inputs that produced it.
struct CharacterRecord {
    Family family = Family::SP;
    Partition lambda;
    Partition mu;
    int n = 0;
    int m = 0;
    Method method = Method::TABLEAUX;
    LaurentPoly value;
};

// {"family":..,"lambda":[..],"mu":[..],"n":..,"m":..,"method":..,"terms":[{"exp":[..],"coeff":".."}]}
// with terms in lexicographic exponent order and decimal coefficient strings.
std::string record_to_json(const CharacterRecord& r);
CharacterRecord record_from_json(const std::string& text);

}  // namespace skewchar
