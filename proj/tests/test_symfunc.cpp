#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skewchar/errors.hpp"
#include "skewchar/symfunc.hpp"

using namespace skewchar;

namespace {

// Letters of the doubled alphabet as exponent vectors.
std::vector<Monomial> letters(int n) {
    std::vector<Monomial> out;
    for (int i = 0; i < n; ++i)
        for (int s : {1, -1}) {
            Monomial m(n, 0);
            m[i] = s;
            out.push_back(m);
        }
    return out;
}

// e_r by summing over r-subsets, h_r over r-multisets (nondecreasing index lists).
LaurentPoly brute_symmetric(int r, int n, bool complete) {
    LaurentPoly out(n);
    if (r < 0) return out;
    const auto L = letters(n);
    const int k = static_cast<int>(L.size());
    std::vector<int> idx;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(idx.size()) == r) {
            Monomial m(n, 0);
            for (int i : idx)
                for (int v = 0; v < n; ++v) m[v] += L[i][v];
            out.add_term(m, 1);
            return;
        }
        for (int i = from; i < k; ++i) {
            idx.push_back(i);
            self(self, complete ? i : i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

LaurentPoly one(int n) { return LaurentPoly::constant(n, 1); }

}  // namespace

TEST_CASE("elementary examples") {
    CHECK(elementary_pm(1, 1).to_string() == "x1 + x1^-1");
    CHECK(elementary_pm(2, 1) == one(1));
    CHECK(elementary_pm(2, 2).to_string() == "x1*x2 + x1^-1*x2 + 2 + x1*x2^-1 + x1^-1*x2^-1");
    CHECK(elementary_pm(-1, 2).is_zero());
    CHECK(elementary_pm(5, 2).is_zero());
    CHECK(elementary_pm(0, 0) == one(0));
}

TEST_CASE("complete examples") {
    CHECK(complete_pm(1, 1).to_string() == "x1 + x1^-1");
    CHECK(complete_pm(2, 1).to_string() == "x1^2 + 1 + x1^-2");
    CHECK(complete_pm(0, 3) == one(3));
    CHECK(complete_pm(-2, 3).is_zero());
}

TEST_CASE("e and h agree with subset and multiset sums") {
    for (int n = 0; n <= 3; ++n)
        for (int r = -1; r <= 2 * n + 2; ++r) {
            CHECK(elementary_pm(r, n) == brute_symmetric(r, n, false));
            if (r <= 5) CHECK(complete_pm(r, n) == brute_symmetric(r, n, true));
        }
}

TEST_CASE("plain alphabet") {
    CHECK(elementary_plain(2, 3).to_string() == "x2*x3 + x1*x3 + x1*x2");
    CHECK(complete_plain(2, 1).to_string() == "x1^2");
    CHECK(elementary_plain(4, 3).is_zero());
}

TEST_CASE("doubled alphabet duality and bar invariance") {
    for (int n = 0; n <= 4; ++n)
        for (int r = 0; r <= 2 * n; ++r) {
            CHECK(elementary_pm(r, n) == elementary_pm(2 * n - r, n));
            CHECK(bar_involution(elementary_pm(r, n)) == elementary_pm(r, n));
            CHECK(bar_involution(complete_pm(r, n)) == complete_pm(r, n));
        }
}

TEST_CASE("convolution of e and h") {
    for (int n = 0; n <= 3; ++n)
        for (int r = 0; r <= 2 * n + 2; ++r) {
            LaurentPoly s(n);
            for (int k = 0; k <= r; ++k) {
                LaurentPoly t = elementary_pm(r - k, n) * complete_pm(k, n);
                if (k % 2) s -= t;
                else s += t;
            }
            CHECK(s == (r == 0 ? one(n) : LaurentPoly(n)));
        }
}

TEST_CASE("E matrix entries") {
    PolyMatrix e1 = build_E_matrix(1, 2, 1, 2, 2);
    CHECK(e1.at(0, 0) == one(2));
    // Bracket j < m + ceil(k/2) is 1 < 1, false: only e_1 survives.
    PolyMatrix e2 = build_E_matrix(2, 0, 2, -1, 1);
    CHECK(e2.at(1, 0) == elementary_pm(1, 1));
    CHECK(e2.at(0, 1).is_zero());
    PolyMatrix e0 = build_E_matrix(3, 1, 1, 0, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(e0.at(i, j) == elementary_pm(i - j, 2));
}

TEST_CASE("H matrix at t = 0 is the signed h Toeplitz matrix") {
    PolyMatrix h = build_H_matrix(4, 1, 2, 0, 2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            LaurentPoly v = complete_pm(i - j, 2);
            CHECK(h.at(i, j) == ((i - j) % 2 ? -v : v));
        }
    CHECK(build_H_matrix(1, 3, 0, 2, 1).at(0, 0) == one(1));
}

TEST_CASE("E and H are mutually inverse") {
    for (int k : {0, 1, 2})
        for (int t : {-1, 1}) {
            auto prod = build_E_matrix(4, 1, k, t, 2) * build_H_matrix(4, 1, k, t, 2);
            CHECK(prod == PolyMatrix::identity(4, 2));
        }
}

TEST_CASE("weyl ratios") {
    CHECK(weyl_eval(Family::GL, Partition({1}), {3}) == 3);
    CHECK(weyl_eval(Family::SP, Partition({1}), {2}) == mpq_class(5, 2));
    CHECK(weyl_eval(Family::O_EVEN, Partition({1}), {2}) == mpq_class(5, 2));
    // so_(1) in one variable is x + 1 + 1/x; at x = y^2 with y = 2 that is 4 + 1 + 1/4.
    CHECK(weyl_eval(Family::SO_ODD, Partition({1}), {2}) == mpq_class(21, 4));
    CHECK(weyl_eval(Family::GL, Partition(), {2, 5}) == 1);
    CHECK_THROWS_AS(weyl_eval(Family::SP, Partition({1}), {1}), DegeneratePoint);
    CHECK_THROWS_AS(weyl_eval(Family::GL, Partition({1, 1}), {2}), PreconditionError);
}

TEST_CASE("family names") {
    for (auto f : {Family::GL, Family::SP, Family::SO_ODD, Family::O_EVEN})
        CHECK(parse_family(family_name(f)) == f);
    CHECK_THROWS_AS(parse_family("spin"), PreconditionError);
}
