#include "skewchar/symfunc.hpp"

#include <map>
#include <tuple>

#include "skewchar/errors.hpp"

namespace skewchar {

std::string family_name(Family f) {
    switch (f) {
        case Family::GL: return "schur";
        case Family::SP: return "sp";
        case Family::SO_ODD: return "so";
        case Family::O_EVEN: return "o";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "schur" || s == "gl") return Family::GL;
    if (s == "sp") return Family::SP;
    if (s == "so") return Family::SO_ODD;
    if (s == "o") return Family::O_EVEN;
    throw PreconditionError("unknown family '" + s + "'");
}

namespace {

enum class Kind { E, H };

// Multiplies p by x_var^power.
LaurentPoly shifted(const LaurentPoly& p, int var, int power) {
    LaurentPoly r(p.n_vars());
    for (const auto& [m, c] : p.terms()) {
        Monomial s(m);
        s[var] += power;
        r.add_term(s, c);
    }
    return r;
}

std::vector<LaurentPoly> sym_table(Kind kind, int r, int n, bool doubled) {
    std::vector<LaurentPoly> t(r + 1, LaurentPoly(n));
    t[0] = LaurentPoly::constant(n, 1);
    std::vector<std::pair<int, int>> letters;
    for (int i = 0; i < n; ++i) {
        letters.emplace_back(i, 1);
        if (doubled) letters.emplace_back(i, -1);
    }
    for (auto [var, pw] : letters) {
        if (kind == Kind::E) {
            for (int k = r; k >= 1; --k) t[k] += shifted(t[k - 1], var, pw);
        } else {
            for (int k = 1; k <= r; ++k) t[k] += shifted(t[k - 1], var, pw);
        }
    }
    return t;
}

LaurentPoly cached(Kind kind, int r, int n, bool doubled) {
    if (n < 0) throw PreconditionError("negative variable count");
    if (r < 0) return LaurentPoly(n);
    const int letters = doubled ? 2 * n : n;
    if (kind == Kind::E && r > letters) return LaurentPoly(n);
    if (r == 0) return LaurentPoly::constant(n, 1);
    thread_local std::map<std::tuple<int, int, int, bool>, LaurentPoly> memo;
    auto key = std::make_tuple(static_cast<int>(kind), r, n, doubled);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto table = sym_table(kind, r, n, doubled);
    for (int k = 0; k <= r; ++k)
        memo.emplace(std::make_tuple(static_cast<int>(kind), k, n, doubled), table[k]);
    return table[r];
}

mpq_class qpow(const mpq_class& x, int e) {
    mpz_class num, den;
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), a);
    mpq_class r = e >= 0 ? mpq_class(num, den) : mpq_class(den, num);
    r.canonicalize();
    return r;
}

mpq_class rational_det(std::vector<std::vector<mpq_class>> a) {
    const int n = static_cast<int>(a.size());
    mpq_class det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            mpq_class f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

}  // namespace

LaurentPoly elementary_pm(int r, int n) { return cached(Kind::E, r, n, true); }
LaurentPoly complete_pm(int r, int n) { return cached(Kind::H, r, n, true); }
LaurentPoly elementary_plain(int r, int n) { return cached(Kind::E, r, n, false); }
LaurentPoly complete_plain(int r, int n) { return cached(Kind::H, r, n, false); }

mpq_class weyl_eval(Family family, const Partition& lam, const std::vector<mpq_class>& point) {
    const int n = static_cast<int>(point.size());
    if (lam.length() > n) throw PreconditionError("l(lambda) exceeds the number of variables");
    for (const auto& v : point)
        if (v == 0) throw PreconditionError("zero coordinate in evaluation point");

    // Bialternant matrix; the denominator uses the empty partition.
    auto build = [&](bool with_lambda) {
        std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 1; j <= n; ++j) {
                const int base = (with_lambda ? lam[j] : 0) + n - j;
                const mpq_class& x = point[i];
                switch (family) {
                    case Family::GL: a[i][j - 1] = qpow(x, base); break;
                    case Family::SP: a[i][j - 1] = qpow(x, base + 1) - qpow(x, -(base + 1)); break;
                    case Family::O_EVEN: a[i][j - 1] = qpow(x, base) + qpow(x, -base); break;
                    case Family::SO_ODD:
                        a[i][j - 1] = qpow(x, 2 * base + 1) - qpow(x, -(2 * base + 1));
                        break;
                }
            }
        }
        return a;
    };
    mpq_class den = rational_det(build(false));
    if (den == 0) throw DegeneratePoint("Weyl denominator vanishes at the given point");
    mpq_class val = rational_det(build(true)) / den;
    if (family == Family::O_EVEN && n > 0 && lam[n] != 0) val *= 2;
    return val;
}

PolyMatrix build_E_matrix(int N, int m, int k, int t, int n) {
    PolyMatrix E(N, n);
    const int ceil_half = k >= 0 ? (k + 1) / 2 : -(-k / 2);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            LaurentPoly v = elementary_pm(i - j, n);
            if (j < m + ceil_half && t != 0) v += elementary_pm(i + j - 2 * m - k, n) * mpz_class(t);
            E.at(i - 1, j - 1) = std::move(v);
        }
    }
    return E;
}

PolyMatrix build_H_matrix(int N, int m, int k, int t, int n) {
    PolyMatrix H(N, n);
    const int floor_half = k >= 0 ? k / 2 : -((-k + 1) / 2);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            LaurentPoly v = complete_pm(i - j, n);
            if (i > m + floor_half && t != 0) {
                const int sign_k = (k % 2 == 0) ? 1 : -1;
                v -= complete_pm(2 * m - i - j + k, n) * mpz_class(sign_k * t);
            }
            if ((i - j) % 2 != 0) v = -v;
            H.at(i - 1, j - 1) = std::move(v);
        }
    }
    return H;
}

}  // namespace skewchar
