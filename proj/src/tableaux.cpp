#include "skewchar/tableaux.hpp"

#include <cctype>
#include <unordered_map>

#include "skewchar/errors.hpp"

namespace skewchar {

std::string Entry::to_string() const {
    std::string s = std::to_string(value);
    switch (deco) {
        case Decoration::CIRC: return s + "c";
        case Decoration::HAT: return s + "h";
        case Decoration::BAR: return s + "b";
        case Decoration::PLAIN: return s;
    }
    return s;
}

Tableau::Tableau(SkewShape shape) : shape_(std::move(shape)) {
    for (int r = 1; r <= shape_.outer().length(); ++r)
        rows_.emplace_back(static_cast<std::size_t>(shape_.outer()[r]));
}

std::string Tableau::to_string() const {
    std::string out;
    for (int r = 1; r <= shape_.outer().length(); ++r) {
        if (r > 1) out += " / ";
        for (int c = 1; c <= shape_.outer()[r]; ++c) {
            if (c > 1) out += " ";
            out += shape_.contains_cell(r, c) ? at(r, c).to_string() : ".";
        }
    }
    return out;
}

Tableau Tableau::parse(const std::string& text) {
    std::vector<std::vector<std::string>> rows(1);
    std::vector<std::vector<std::size_t>> positions(1);
    std::vector<std::size_t> row_start{0};
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ') ++end;
        std::string tok = text.substr(pos, end - pos);
        if (tok == "/") {
            rows.emplace_back();
            positions.emplace_back();
            row_start.push_back(end);
        } else {
            rows.back().push_back(std::move(tok));
            positions.back().push_back(pos);
        }
        pos = end;
    }
    if (rows.size() == 1 && rows[0].empty()) return Tableau(SkewShape());
    std::vector<int> outer, inner;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) throw ParseError("empty tableau row", row_start[r]);
        int skip = 0;
        while (skip < static_cast<int>(rows[r].size()) && rows[r][skip] == ".") ++skip;
        outer.push_back(static_cast<int>(rows[r].size()));
        inner.push_back(skip);
    }
    SkewShape shape;
    try {
        shape = SkewShape(Partition(outer), Partition(inner));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("rows do not form a skew shape: ") + e.what(), 0);
    }
    Tableau t(shape);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = inner[r]; c < rows[r].size(); ++c) {
            const std::string& s = rows[r][c];
            std::size_t i = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == 0) throw ParseError("expected entry value", positions[r][c]);
            Entry e;
            e.value = std::stoi(s.substr(0, i));
            const std::string suffix = s.substr(i);
            if (suffix.empty()) e.deco = Decoration::PLAIN;
            else if (suffix == "b") e.deco = Decoration::BAR;
            else if (suffix == "h") e.deco = Decoration::HAT;
            else if (suffix == "c") e.deco = Decoration::CIRC;
            else throw ParseError("unknown decoration '" + suffix + "'", positions[r][c] + i);
            t.at(static_cast<int>(r) + 1, static_cast<int>(c) + 1) = e;
        }
    }
    return t;
}

bool operator==(const Tableau& a, const Tableau& b) {
    if (!(a.shape_ == b.shape_)) return false;
    for (auto [r, c] : a.shape_.cells())
        if (!(a.at(r, c) == b.at(r, c))) return false;
    return true;
}

namespace {

bool decoration_allowed(Family f, Decoration d) {
    switch (f) {
        case Family::GL: return d == Decoration::PLAIN;
        case Family::SP: return d == Decoration::PLAIN || d == Decoration::BAR;
        case Family::SO_ODD: return d != Decoration::CIRC;
        case Family::O_EVEN: return true;
    }
    return false;
}

// Smallest admissible key in row r (1-based), or -1 if unrestricted.
int row_lower_key(Family f, int r, int m) {
    if (f == Family::GL || r <= m) return -1;
    const int i = r - m;
    return f == Family::SP ? Entry{i, Decoration::BAR}.key() : Entry{i, Decoration::HAT}.key();
}

}  // namespace

void check_tableau_preconditions(Family family, const SkewShape& shape, int n, int m) {
    const int lo = shape.outer().length();
    if (n < 0) throw PreconditionError("n must be nonnegative");
    if (family == Family::GL) {
        if (lo > n)
            throw PreconditionError("l(λ) <= n fails: " + std::to_string(lo) + " > " +
                                    std::to_string(n));
        return;
    }
    if (m < 0) throw PreconditionError("m must be nonnegative");
    if (shape.inner().length() > m)
        throw PreconditionError("l(μ) <= m fails: " + std::to_string(shape.inner().length()) +
                                " > " + std::to_string(m));
    if (lo > n + m)
        throw PreconditionError("l(λ) <= n+m fails: " + std::to_string(lo) + " > " +
                                std::to_string(n + m));
}

bool is_valid_tableau(Family family, const Tableau& t, int n, int m) {
    const SkewShape& sh = t.shape();
    auto in = [&](int r, int c) { return r >= 1 && sh.contains_cell(r, c); };
    for (auto [r, c] : sh.cells()) {
        const Entry& e = t.at(r, c);
        if (e.value < 1 || e.value > n || !decoration_allowed(family, e.deco)) return false;
        if (in(r, c - 1) && !(t.at(r, c - 1) <= e)) return false;
        if (in(r - 1, c) && !(t.at(r - 1, c) < e)) return false;
        const int lo = row_lower_key(family, r, m);
        if (lo >= 0 && e.key() < lo) return false;
        if (e.deco == Decoration::HAT) {
            if (c != 1 || r != m + e.value) return false;
            if (family == Family::O_EVEN &&
                !(in(r - 1, 1) && t.at(r - 1, 1) == Entry{e.value, Decoration::CIRC}))
                return false;
        }
        if (e.deco == Decoration::CIRC) {
            if (c != 1 || r != m + e.value - 1) return false;
            if (!(in(r + 1, 1) && t.at(r + 1, 1) == Entry{e.value, Decoration::HAT})) return false;
        }
    }
    if (family == Family::O_EVEN) {
        for (int i = 1; i <= n; ++i) {
            const int r = m + i;
            if (!in(r, 1) || !(t.at(r, 1) == Entry{i, Decoration::BAR})) continue;
            for (int c = 2; c <= sh.outer()[r]; ++c) {
                if (!(t.at(r, c) == Entry{i, Decoration::PLAIN})) continue;
                if (!(in(r - 1, c) && t.at(r - 1, c) == Entry{i, Decoration::BAR})) return false;
            }
        }
    }
    return true;
}

namespace {

// Row-major backtracking over cells with incremental weight tracking.
class Backtracker {
public:
    Backtracker(Family f, const SkewShape& shape, int n, int m)
        : f_(f), n_(n), m_(m), t_(shape), cells_(shape.cells()), expo_(n, 0) {}

    template <class Leaf>
    void run(Leaf&& leaf) {
        stop_ = false;
        rec(0, leaf);
    }

    const Tableau& tableau() const { return t_; }
    const std::vector<int>& exponents() const { return expo_; }

private:
    bool in(int r, int c) const { return r >= 1 && t_.shape().contains_cell(r, c); }

    template <class Leaf>
    void rec(std::size_t idx, Leaf& leaf) {
        if (stop_) return;
        if (idx == cells_.size()) {
            if (!leaf(*this)) stop_ = true;
            return;
        }
        const auto [r, c] = cells_[idx];
        int lo = 0;
        if (in(r, c - 1)) lo = std::max(lo, t_.at(r, c - 1).key());
        if (in(r - 1, c)) lo = std::max(lo, t_.at(r - 1, c).key() + 1);
        lo = std::max(lo, row_lower_key(f_, r, m_));

        // A circled entry directly above forces the matching hat.
        if (f_ == Family::O_EVEN && c == 1 && in(r - 1, 1) &&
            t_.at(r - 1, 1).deco == Decoration::CIRC) {
            try_entry(idx, Entry{t_.at(r - 1, 1).value, Decoration::HAT}, leaf);
            return;
        }
        for (int key = lo; key < 4 * n_; ++key) {
            Entry e{key / 4 + 1, static_cast<Decoration>(key % 4)};
            if (!decoration_allowed(f_, e.deco)) continue;
            if (e.deco == Decoration::HAT) {
                if (c != 1 || r != m_ + e.value) continue;
                if (f_ == Family::O_EVEN) continue;  // only reachable through the forced branch
            }
            if (e.deco == Decoration::CIRC) {
                if (c != 1 || r != m_ + e.value - 1 || !in(r + 1, 1)) continue;
            }
            if (f_ == Family::O_EVEN && e.deco == Decoration::PLAIN && c >= 2 &&
                r == m_ + e.value && t_.at(r, 1) == Entry{e.value, Decoration::BAR} &&
                !(in(r - 1, c) && t_.at(r - 1, c) == Entry{e.value, Decoration::BAR}))
                continue;
            try_entry(idx, e, leaf);
            if (stop_) return;
        }
    }

    template <class Leaf>
    void try_entry(std::size_t idx, const Entry& e, Leaf& leaf) {
        const auto [r, c] = cells_[idx];
        t_.at(r, c) = e;
        const int d = e.deco == Decoration::PLAIN ? 1 : e.deco == Decoration::BAR ? -1 : 0;
        expo_[e.value - 1] += d;
        rec(idx + 1, leaf);
        expo_[e.value - 1] -= d;
    }

    Family f_;
    int n_, m_;
    Tableau t_;
    std::vector<std::pair<int, int>> cells_;
    std::vector<int> expo_;
    bool stop_ = false;
};

}  // namespace

void enumerate_tableaux(Family family, const SkewShape& shape, int n, int m,
                        const std::function<bool(const Tableau&)>& visit) {
    check_tableau_preconditions(family, shape, n, m);
    Backtracker bt(family, shape, n, m);
    bt.run([&](const Backtracker& b) { return visit(b.tableau()); });
}

std::uint64_t count_tableaux(Family family, const SkewShape& shape, int n, int m) {
    check_tableau_preconditions(family, shape, n, m);
    std::uint64_t count = 0;
    Backtracker bt(family, shape, n, m);
    bt.run([&](const Backtracker&) {
        ++count;
        return true;
    });
    return count;
}

LaurentPoly tableau_weight(Family family, const Tableau& t, int n) {
    Monomial m(n, 0);
    for (auto [r, c] : t.shape().cells()) {
        const Entry& e = t.at(r, c);
        if (e.value < 1 || e.value > n) throw PreconditionError("entry value out of range");
        if (e.deco == Decoration::PLAIN) ++m[e.value - 1];
        else if (e.deco == Decoration::BAR && family != Family::GL) --m[e.value - 1];
    }
    return LaurentPoly::monomial(std::move(m));
}

LaurentPoly character_by_tableaux(Family family, const SkewShape& shape, int n, int m) {
    check_tableau_preconditions(family, shape, n, m);
    Backtracker bt(family, shape, n, m);
    LaurentPoly result(n);
    const int cells = shape.size();
    if (n <= 6 && cells < 500) {
        // Pack the exponent vector into 10-bit fields.
        std::unordered_map<std::uint64_t, std::uint64_t> acc;
        bt.run([&](const Backtracker& b) {
            std::uint64_t key = 0;
            for (int i = 0; i < n; ++i)
                key |= static_cast<std::uint64_t>(b.exponents()[i] + 512) << (10 * i);
            ++acc[key];
            return true;
        });
        for (const auto& [key, cnt] : acc) {
            Monomial mono(n);
            for (int i = 0; i < n; ++i) mono[i] = static_cast<int>((key >> (10 * i)) & 1023u) - 512;
            result.add_term(mono, mpz_class(static_cast<unsigned long>(cnt)));
        }
    } else {
        std::map<Monomial, mpz_class> acc;
        bt.run([&](const Backtracker& b) {
            acc[b.exponents()] += 1;
            return true;
        });
        for (const auto& [mono, c] : acc) result.add_term(mono, c);
    }
    return result;
}

}  // namespace skewchar
