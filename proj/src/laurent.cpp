#include "skewchar/laurent.hpp"

#include <algorithm>

#include "skewchar/errors.hpp"

namespace skewchar {

LaurentPoly LaurentPoly::constant(int n_vars, const mpz_class& c) {
    LaurentPoly p(n_vars);
    p.add_term(Monomial(n_vars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(Monomial exps, const mpz_class& c) {
    LaurentPoly p(static_cast<int>(exps.size()));
    p.add_term(exps, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int n_vars, int i, int power) {
    if (i < 1 || i > n_vars) throw PreconditionError("variable index out of range");
    Monomial m(n_vars, 0);
    m[i - 1] = power;
    return monomial(std::move(m));
}

mpz_class LaurentPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const mpz_class& c) {
    if (static_cast<int>(m.size()) != n_) throw PreconditionError("monomial length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
    if (n_ != o.n_)
        throw PreconditionError("variable count mismatch: " + std::to_string(n_) + " vs " +
                                std::to_string(o.n_));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    LaurentPoly r(a.n_);
    if (a.is_zero() || b.is_zero()) return r;
    Monomial m(a.n_);
    mpz_class prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
            prod = ca * cb;
            r.add_term(m, prod);
        }
    }
    return r;
}

mpz_class LaurentPoly::coefficient_sum() const {
    mpz_class s = 0;
    for (const auto& kv : terms_) s += kv.second;
    return s;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& kv : terms_) order.push_back(&kv);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        return std::lexicographical_compare(b->first.rbegin(), b->first.rend(),
                                            a->first.rbegin(), a->first.rend());
    });
    std::string out;
    bool first = true;
    for (const auto* kv : order) {
        const Monomial& m = kv->first;
        mpz_class c = kv->second;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (m[i] != 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            out += c.get_str();
        else if (c == 1)
            out += mono;
        else
            out += c.get_str() + "*" + mono;
    }
    return out;
}

LaurentPoly poly_div_exact_int(const LaurentPoly& a, const mpz_class& d) {
    if (d == 0) throw PreconditionError("division by zero");
    LaurentPoly r(a.n_vars());
    for (const auto& [m, c] : a.terms()) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw NonExactDivision("coefficient " + c.get_str() + " not divisible by " +
                                   d.get_str());
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        r.add_term(m, q);
    }
    return r;
}

mpq_class poly_eval(const LaurentPoly& p, const std::vector<mpq_class>& point) {
    if (static_cast<int>(point.size()) != p.n_vars())
        throw PreconditionError("point length does not match variable count");
    for (const auto& v : point)
        if (v == 0) throw PreconditionError("zero coordinate in evaluation point");
    mpq_class total = 0;
    for (const auto& [m, c] : p.terms()) {
        mpq_class term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            mpz_class num, den;
            const unsigned long e = static_cast<unsigned long>(m[i] < 0 ? -m[i] : m[i]);
            mpz_pow_ui(num.get_mpz_t(), point[i].get_num_mpz_t(), e);
            mpz_pow_ui(den.get_mpz_t(), point[i].get_den_mpz_t(), e);
            mpq_class f = m[i] > 0 ? mpq_class(num, den) : mpq_class(den, num);
            f.canonicalize();
            term *= f;
        }
        total += term;
    }
    return total;
}

LaurentPoly bar_involution(const LaurentPoly& p) {
    LaurentPoly r(p.n_vars());
    for (const auto& [m, c] : p.terms()) {
        Monomial neg(m);
        for (int& e : neg) e = -e;
        r.add_term(neg, c);
    }
    return r;
}

LaurentPoly scale_exponents(const LaurentPoly& p, int k) {
    LaurentPoly r(p.n_vars());
    for (const auto& [m, c] : p.terms()) {
        Monomial s(m);
        for (int& e : s) e *= k;
        r.add_term(s, c);
    }
    return r;
}

}  // namespace skewchar
