#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "skewchar/errors.hpp"
#include "skewchar/laurent.hpp"
#include "skewchar/partition.hpp"
#include "skewchar/polymatrix.hpp"

using namespace skewchar;

namespace {

// Column counts read straight off the cell set.
Partition conjugate_by_cells(const Partition& p) {
    std::vector<int> cols;
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p[i]; ++j) {
            if (static_cast<int>(cols.size()) < j) cols.push_back(0);
            ++cols[j - 1];
        }
    return Partition(cols);
}

LaurentPoly random_poly(std::mt19937& rng, int n, int terms, int span) {
    std::uniform_int_distribution<int> e(-span, span), c(-4, 4);
    LaurentPoly p(n);
    for (int t = 0; t < terms; ++t) {
        Monomial m(n);
        for (auto& x : m) x = e(rng);
        p.add_term(m, c(rng));
    }
    return p;
}

LaurentPoly x(int n, int i, int k = 1) { return LaurentPoly::variable(n, i, k); }

}  // namespace

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({4, 4, 4, 2, 1})) == Partition({5, 4, 3, 3}));
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition({3})) == Partition({1, 1, 1}));
}

TEST_CASE("partition rejects bad input") {
    CHECK_THROWS_AS(Partition({2, 3}), PreconditionError);
    CHECK_THROWS_AS(Partition({1, -1}), PreconditionError);
    CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
}

TEST_CASE("frobenius coordinates") {
    auto f = to_frobenius(Partition({6, 5, 4, 4, 1}));
    CHECK(f.arms == std::vector<int>{5, 3, 1, 0});
    CHECK(f.legs == std::vector<int>{4, 2, 1, 0});
    auto g = to_frobenius(Partition({3, 2}));
    CHECK(g.arms == std::vector<int>{2, 0});
    CHECK(g.legs == std::vector<int>{1, 0});
    CHECK(to_frobenius(Partition()).rank() == 0);

    CHECK(from_frobenius({{5, 3, 1, 0}, {4, 2, 1, 0}}) == Partition({6, 5, 4, 4, 1}));
    CHECK(from_frobenius({{0}, {0}}) == Partition({1}));
    CHECK(from_frobenius({{2, 0}, {1, 0}}) == Partition({3, 2}));
    CHECK_THROWS_AS(from_frobenius({{1, 1}, {1, 0}}), PreconditionError);
    CHECK_THROWS_AS(from_frobenius({{1}, {1, 0}}), PreconditionError);
}

TEST_CASE("conjugate and frobenius roundtrips up to size 12") {
    int seen = 0;
    for (int k = 0; k <= 12; ++k)
        for (const auto& p : partitions_of(k)) {
            CHECK(p.size() == k);
            CHECK(conjugate(p) == conjugate_by_cells(p));
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(from_frobenius(to_frobenius(p)) == p);
            ++seen;
        }
    CHECK(seen == 1 + 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22 + 30 + 42 + 56 + 77);
}

TEST_CASE("skew shapes") {
    SkewShape s(Partition({4, 4, 4, 2, 1}), Partition({3, 1}));
    CHECK(s.size() == 11);
    CHECK(s.contains_cell(1, 4));
    CHECK_FALSE(s.contains_cell(1, 3));
    CHECK(s.cells().front() == std::pair{1, 4});
    CHECK_THROWS_AS(SkewShape(Partition({2}), Partition({1, 1})), ContainmentError);
}

TEST_CASE("laurent arithmetic") {
    const int n = 1;
    LaurentPoly a = x(n, 1) + x(n, 1, -1);
    LaurentPoly b = x(n, 1) - x(n, 1, -1);
    CHECK(a * b == x(n, 1, 2) - x(n, 1, -2));
    CHECK(a * LaurentPoly::constant(n, 1) == a);
    CHECK((a * a).to_string() == "x1^2 + 2 + x1^-2");
    CHECK((a - a).is_zero());
    CHECK_THROWS(a + LaurentPoly(2));
}

TEST_CASE("text form lists later variables first") {
    LaurentPoly p(2);
    p.add_term({-1, 1}, -2);
    p.add_term({0, 0}, 3);
    CHECK(p.to_string() == "-2*x1^-1*x2 + 3");
    CHECK(LaurentPoly(2).to_string() == "0");
}

TEST_CASE("exact division") {
    LaurentPoly p = (x(1, 1) + x(1, 1, -1)) * mpz_class(2);
    CHECK(poly_div_exact_int(p, 2) == x(1, 1) + x(1, 1, -1));
    CHECK(poly_div_exact_int(p, 1) == p);
    CHECK_THROWS_AS(poly_div_exact_int(x(1, 1) + LaurentPoly::constant(1, 1), 2), NonExactDivision);
}

TEST_CASE("evaluation") {
    CHECK(poly_eval(x(1, 1) + x(1, 1, -1), {2}) == mpq_class(5, 2));
    CHECK(poly_eval(LaurentPoly::constant(3, 1), {2, 7, mpq_class(1, 3)}) == 1);
    LaurentPoly q = x(2, 1) * x(2, 2) - x(2, 2) * x(2, 1, -1);
    CHECK(poly_eval(q, {2, 3}) == mpq_class(9, 2));
    CHECK_THROWS_AS(poly_eval(q, {0, 3}), PreconditionError);
    CHECK_THROWS_AS(poly_eval(q, {1}), PreconditionError);
}

TEST_CASE("bar involution") {
    LaurentPoly p = x(2, 1, 2) * x(2, 2, -1);
    CHECK(bar_involution(p) == x(2, 1, -2) * x(2, 2));
    CHECK(bar_involution(LaurentPoly::constant(2, 5)) == LaurentPoly::constant(2, 5));
}

TEST_CASE("ring laws and evaluation homomorphism on random triples") {
    std::mt19937 rng(7);
    for (int round = 0; round < 40; ++round) {
        const int n = 1 + round % 3;
        auto a = random_poly(rng, n, 4, 2), b = random_poly(rng, n, 4, 2), c = random_poly(rng, n, 3, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(bar_involution(bar_involution(a)) == a);
        std::vector<mpq_class> pt;
        for (int i = 0; i < n; ++i) pt.emplace_back(i + 2, 3);
        CHECK(poly_eval(a * b, pt) == poly_eval(a, pt) * poly_eval(b, pt));
    }
}

TEST_CASE("determinant") {
    CHECK(determinant(PolyMatrix(0, 1)) == LaurentPoly::constant(1, 1));
    PolyMatrix m(2, 1);
    m.at(0, 0) = x(1, 1);
    m.at(0, 1) = LaurentPoly::constant(1, 1);
    m.at(1, 0) = LaurentPoly::constant(1, 1);
    m.at(1, 1) = x(1, 1, -1);
    CHECK(determinant(m).is_zero());
    for (int d = 1; d <= 5; ++d) CHECK(determinant(PolyMatrix::identity(d, 2)) == LaurentPoly::constant(2, 1));
}

TEST_CASE("determinant agrees with leibniz and is alternating") {
    std::mt19937 rng(11);
    for (int dim = 1; dim <= 4; ++dim)
        for (int round = 0; round < 6; ++round) {
            PolyMatrix m(dim, 2);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) m.at(i, j) = random_poly(rng, 2, 3, 1);
            const LaurentPoly d = determinant(m);
            CHECK(d == determinant_leibniz(m));
            if (dim >= 2) {
                m.swap_rows(0, dim - 1);
                CHECK(determinant(m) == -d);
            }
        }
}
