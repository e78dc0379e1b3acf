#include "skewchar/formulas.hpp"

#include <algorithm>

#include "skewchar/errors.hpp"
#include "skewchar/paths.hpp"
#include "skewchar/polymatrix.hpp"
#include "skewchar/tableaux.hpp"

namespace skewchar {

std::string method_name(Method m) {
    switch (m) {
        case Method::TABLEAUX: return "tableaux";
        case Method::DUAL_JT: return "dual-jt";
        case Method::JT: return "jt";
        case Method::GIAMBELLI: return "giambelli";
        case Method::LGV_PATHS: return "lgv";
    }
    return "?";
}

Method parse_method(const std::string& s) {
    if (s == "tableaux") return Method::TABLEAUX;
    if (s == "dual-jt") return Method::DUAL_JT;
    if (s == "jt") return Method::JT;
    if (s == "giambelli") return Method::GIAMBELLI;
    if (s == "lgv") return Method::LGV_PATHS;
    throw PreconditionError("unknown method '" + s + "'");
}

namespace {

std::string fails(const std::string& what, int lhs, int rhs) {
    return what + " fails: " + std::to_string(lhs) + " > " + std::to_string(rhs);
}

void check_N(int N, int bound, const char* what) {
    if (N < bound) throw PreconditionError(std::string(what) + " <= N fails: " + std::to_string(bound) +
                                           " > " + std::to_string(N));
}

int offset(Family f) {
    switch (f) {
        case Family::SP: return 0;
        case Family::SO_ODD: return 1;
        case Family::O_EVEN: return 2;
        case Family::GL: break;
    }
    return 0;
}

}  // namespace

void check_character_preconditions(Family family, const Partition& lam, const Partition& mu, int n,
                                   int m) {
    if (!lam.contains(mu))
        throw ContainmentError(mu.to_string() + " is not contained in " + lam.to_string());
    if (n < 0) throw PreconditionError("n must be nonnegative");
    if (family == Family::GL) {
        if (lam.length() > n) throw PreconditionError(fails("l(λ) <= n", lam.length(), n));
        return;
    }
    if (m < 0) throw PreconditionError("m must be nonnegative");
    if (mu.length() > m) throw PreconditionError(fails("l(μ) <= m", mu.length(), m));
    if (lam.length() > n + m) throw PreconditionError(fails("l(λ) <= n+m", lam.length(), n + m));
}

LaurentPoly dual_jacobi_trudi(Family family, const Partition& lam, const Partition& mu, int n, int m,
                              int N) {
    check_character_preconditions(family, lam, mu, n, m);
    check_N(N, lam[1], "λ1");
    const Partition lc = conjugate(lam), mc = conjugate(mu);
    PolyMatrix mat(N, n);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            const int r = lc[i] - mc[j] - i + j;
            if (family == Family::GL) {
                mat.at(i - 1, j - 1) = elementary_plain(r, n);
                continue;
            }
            const int r2 = lc[i] + mc[j] - i - j - 2 * m + offset(family);
            LaurentPoly v = elementary_pm(r, n);
            if (family == Family::SP) v -= elementary_pm(r2, n);
            else v += elementary_pm(r2, n);
            mat.at(i - 1, j - 1) = std::move(v);
        }
    }
    LaurentPoly det = determinant(mat);
    if (family == Family::O_EVEN && m == mu.length()) det = poly_div_exact_int(det, 2);
    return det;
}

LaurentPoly jacobi_trudi(Family family, const Partition& lam, const Partition& mu, int n, int m,
                         int N) {
    check_character_preconditions(family, lam, mu, n, m);
    check_N(N, lam.length(), "l(λ)");
    PolyMatrix mat(N, n);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            const int r = lam[i] - mu[j] - i + j;
            if (family == Family::GL) {
                mat.at(i - 1, j - 1) = complete_plain(r, n);
                continue;
            }
            LaurentPoly v = complete_pm(r, n);
            switch (family) {
                case Family::SP:
                    if (j > m + 1) v += complete_pm(lam[i] - i - j + 2 * m + 2, n);
                    break;
                case Family::SO_ODD:
                    if (j > m) v += complete_pm(lam[i] - i - j + 2 * m + 1, n);
                    break;
                case Family::O_EVEN:
                    if (j > m) v -= complete_pm(lam[i] - i - j + 2 * m, n);
                    break;
                case Family::GL: break;
            }
            mat.at(i - 1, j - 1) = std::move(v);
        }
    }
    return determinant(mat);
}

namespace {

Partition hook(int arm, int leg) {
    std::vector<int> parts{arm + 1};
    parts.insert(parts.end(), static_cast<std::size_t>(leg), 1);
    return Partition(parts);
}

Partition column(int len) { return Partition(std::vector<int>(static_cast<std::size_t>(len), 1)); }

Partition row(int len) { return len > 0 ? Partition({len}) : Partition(); }

// Character of outer/inner as used inside the Giambelli determinant: zero if
// the shape is not a skew shape.
LaurentPoly block(Family family, const Partition& outer, const Partition& inner, int n, int m,
                  BlockSource source) {
    if (!outer.contains(inner)) return LaurentPoly(n);
    if (source == BlockSource::TABLEAUX && !(family == Family::GL && outer.length() > n))
        return character_by_tableaux(family, SkewShape(outer, inner), n, m);
    const int N = family == Family::O_EVEN ? std::max(outer[1], 1) : outer[1];
    return dual_jacobi_trudi(family, outer, inner, n, m, N);
}

}  // namespace

LaurentPoly giambelli(Family family, const Partition& lam, const Partition& mu, int n, int m,
                      BlockSource source) {
    check_character_preconditions(family, lam, mu, n, m);
    const auto fl = to_frobenius(lam);
    const auto fm = to_frobenius(mu);
    const int p = fl.rank(), q = fm.rank();
    PolyMatrix mat(p + q, n);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j)
            mat.at(i, j) = block(family, hook(fl.arms[i], fl.legs[j]), Partition(), n, m, source);
        for (int j = 0; j < q; ++j) {
            mat.at(i, p + j) = family == Family::GL
                                   ? complete_plain(fl.arms[i] - fm.arms[j], n)
                                   : block(family, row(fl.arms[i]), row(fm.arms[j]), n, m, source);
        }
    }
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < p; ++j) {
            mat.at(p + i, j) = family == Family::GL
                                   ? elementary_plain(fl.legs[j] - fm.legs[i], n)
                                   : block(family, column(fl.legs[j] + 1), column(fm.legs[i] + 1), n,
                                           m, source);
        }
    LaurentPoly det = determinant(mat);
    return q % 2 == 0 ? det : -det;
}

LaurentPoly giambelli_path_form(Family family, const Partition& lam, const Partition& mu, int n,
                                int m, OPrefactor convention) {
    if (family == Family::GL) return giambelli(family, lam, mu, n, m);
    check_character_preconditions(family, lam, mu, n, m);
    const auto fl = to_frobenius(lam);
    const auto fm = to_frobenius(mu);
    const int p = fl.rank(), q = fm.rank();
    PolyMatrix mat(p + q, n);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j)
            mat.at(i, j) = block(family, hook(fl.arms[i], fl.legs[j]), Partition(), n, m,
                                 BlockSource::DUAL_JT);
        for (int j = 0; j < q; ++j) mat.at(i, p + j) = complete_pm(fl.arms[i] - fm.arms[j], n);
    }
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < p; ++j) {
            const int b = fl.legs[j], d = fm.legs[i];
            LaurentPoly v = elementary_pm(b - d, n);
            const LaurentPoly w = elementary_pm(b + d - 2 * m + offset(family), n);
            if (family == Family::SP) v -= w;
            else v += w;
            mat.at(p + i, j) = std::move(v);
        }
    LaurentPoly det = determinant(mat);
    if (q % 2 != 0) det = -det;
    if (family == Family::O_EVEN && m == mu.length()) {
        const bool halve = convention == OPrefactor::M_EQUALS_LMU || m != 0;
        if (halve) det = poly_div_exact_int(det, 2);
    }
    return det;
}

LaurentPoly character_by_lgv(Family family, const Partition& lam, const Partition& mu, int n, int m,
                             int N) {
    check_character_preconditions(family, lam, mu, n, m);
    check_N(N, lam[1], "λ1");
    const int mm = family == Family::GL ? mu.length() : m;
    const auto ep = columnwise_endpoints(family, lam, mu, n, mm, N);
    return lgv_signed_sum(PathModel::columnwise(family, n, mm), ep.starts, ep.ends);
}

LaurentPoly character(Family family, const Partition& lam, const Partition& mu, int n, int m,
                      Method method, std::optional<int> N) {
    switch (method) {
        case Method::TABLEAUX:
            if (!lam.contains(mu))
                throw ContainmentError(mu.to_string() + " is not contained in " + lam.to_string());
            return character_by_tableaux(family, SkewShape(lam, mu), n, m);
        case Method::DUAL_JT: {
            // An empty o-determinant would be halved to 1/2, so o uses N >= 1.
            const int lo = family == Family::O_EVEN ? std::max(lam[1], 1) : lam[1];
            return dual_jacobi_trudi(family, lam, mu, n, m, N.value_or(lo));
        }
        case Method::JT: return jacobi_trudi(family, lam, mu, n, m, N.value_or(lam.length()));
        case Method::GIAMBELLI: return giambelli(family, lam, mu, n, m);
        case Method::LGV_PATHS: return character_by_lgv(family, lam, mu, n, m, N.value_or(lam[1]));
    }
    throw PreconditionError("unknown method");
}

}  // namespace skewchar
