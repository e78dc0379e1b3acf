#include "skewchar/polymatrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

#include "skewchar/errors.hpp"

namespace skewchar {

PolyMatrix::PolyMatrix(int dim, int n_vars)
    : dim_(dim), n_(n_vars), entries_(static_cast<std::size_t>(dim) * dim, LaurentPoly(n_vars)) {
    if (dim < 0) throw PreconditionError("negative matrix dimension");
}

PolyMatrix PolyMatrix::identity(int dim, int n_vars) {
    PolyMatrix m(dim, n_vars);
    for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly::constant(n_vars, 1);
    return m;
}

void PolyMatrix::swap_rows(int a, int b) {
    for (int j = 0; j < dim_; ++j) std::swap(at(a, j), at(b, j));
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.dim_ != b.dim_ || a.n_ != b.n_) throw PreconditionError("matrix shape mismatch");
    PolyMatrix r(a.dim_, a.n_);
    for (int i = 0; i < a.dim_; ++i)
        for (int j = 0; j < a.dim_; ++j)
            for (int k = 0; k < a.dim_; ++k)
                if (!a.at(i, k).is_zero() && !b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
    return r;
}

LaurentPoly determinant(const PolyMatrix& m) {
    const int d = m.dim();
    if (d == 0) return LaurentPoly::constant(m.n_vars(), 1);
    if (d > 24) throw PreconditionError("matrix too large for subset expansion");
    // minor[S] = det of rows 0..|S|-1 restricted to the columns in S.
    std::vector<std::optional<LaurentPoly>> minor(std::size_t{1} << d);
    minor[0] = LaurentPoly::constant(m.n_vars(), 1);
    std::vector<unsigned> masks(std::size_t{1} << d);
    std::iota(masks.begin(), masks.end(), 0u);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
    for (unsigned s : masks) {
        if (s == 0) continue;
        const int row = std::popcount(s) - 1;
        LaurentPoly acc(m.n_vars());
        // Expand along the last row; sign from the column's position within S.
        int pos = 0;
        for (int c = 0; c < d; ++c) {
            if (!(s >> c & 1u)) continue;
            const int higher = std::popcount(s) - 1 - pos;
            const LaurentPoly& e = m.at(row, c);
            const auto& sub = minor[s & ~(1u << c)];
            if (!e.is_zero() && sub && !sub->is_zero()) {
                LaurentPoly t = e * *sub;
                if (higher % 2) acc -= t;
                else acc += t;
            }
            ++pos;
        }
        minor[s] = std::move(acc);
    }
    return *minor[(std::size_t{1} << d) - 1];
}

LaurentPoly determinant_leibniz(const PolyMatrix& m) {
    const int d = m.dim();
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    LaurentPoly total(m.n_vars());
    do {
        int inversions = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (perm[i] > perm[j]) ++inversions;
        LaurentPoly t = LaurentPoly::constant(m.n_vars(), inversions % 2 ? -1 : 1);
        for (int i = 0; i < d && !t.is_zero(); ++i) t = t * m.at(i, perm[i]);
        total += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace skewchar
