#pragma once

#include <vector>

#include "skewchar/laurent.hpp"

namespace skewchar {

class PolyMatrix {
public:
    PolyMatrix(int dim, int n_vars);

    int dim() const { return dim_; }
    int n_vars() const { return n_; }
    // 0-based access.
    LaurentPoly& at(int i, int j) { return entries_[i * dim_ + j]; }
    const LaurentPoly& at(int i, int j) const { return entries_[i * dim_ + j]; }

    static PolyMatrix identity(int dim, int n_vars);
    void swap_rows(int a, int b);

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    int dim_;
    int n_;
    std::vector<LaurentPoly> entries_;
};

// Laplace expansion along rows with memoisation over column subsets.
// The 0x0 determinant is 1.
LaurentPoly determinant(const PolyMatrix& m);

// Signed sum over all permutations; reference implementation for small dim.
LaurentPoly determinant_leibniz(const PolyMatrix& m);

}  // namespace skewchar
