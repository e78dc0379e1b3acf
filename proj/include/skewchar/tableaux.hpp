#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "skewchar/laurent.hpp"
#include "skewchar/partition.hpp"
#include "skewchar/symfunc.hpp"

namespace skewchar {

enum class Decoration { CIRC = 0, HAT = 1, BAR = 2, PLAIN = 3 };

struct Entry {
    int value = 0;
    Decoration deco = Decoration::PLAIN;

    // Position in the total order i° < î < ī < i < (i+1)° < ...
    int key() const { return 4 * (value - 1) + static_cast<int>(deco); }
    std::string to_string() const;  // "3", "3b", "3h", "3c"

    friend bool operator==(const Entry&, const Entry&) = default;
    friend bool operator<(const Entry& a, const Entry& b) { return a.key() < b.key(); }
    friend bool operator<=(const Entry& a, const Entry& b) { return a.key() <= b.key(); }
};

class Tableau {
public:
    Tableau() = default;
    explicit Tableau(SkewShape shape);

    const SkewShape& shape() const { return shape_; }
    // 1-based cell access; the cell must belong to the skew shape.
    Entry& at(int row, int col) { return rows_[row - 1][col - 1]; }
    const Entry& at(int row, int col) const { return rows_[row - 1][col - 1]; }

    // ". 1b 2 / 1b 2b / 1 2 / 2b / 3"
    std::string to_string() const;
    // Inverse of to_string; throws ParseError.
    static Tableau parse(const std::string& text);

    friend bool operator==(const Tableau& a, const Tableau& b);

private:
    SkewShape shape_;
    std::vector<std::vector<Entry>> rows_;
};

bool is_valid_tableau(Family family, const Tableau& t, int n, int m);

// Throws PreconditionError unless l(inner) <= m and l(outer) <= n + m
// (for GL, m is ignored and l(outer) <= n is required).
void check_tableau_preconditions(Family family, const SkewShape& shape, int n, int m);

// Streams every valid tableau to visit; enumeration stops early if visit returns false.
void enumerate_tableaux(Family family, const SkewShape& shape, int n, int m,
                        const std::function<bool(const Tableau&)>& visit);

std::uint64_t count_tableaux(Family family, const SkewShape& shape, int n, int m);

// Single monomial; plain entries count +1, barred -1, hat and circ 0.
LaurentPoly tableau_weight(Family family, const Tableau& t, int n);

LaurentPoly character_by_tableaux(Family family, const SkewShape& shape, int n, int m);

}  // namespace skewchar
