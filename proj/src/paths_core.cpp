#include <algorithm>
#include <map>
#include <sstream>

#include "skewchar/errors.hpp"
#include "skewchar/paths.hpp"
#include "skewchar/polymatrix.hpp"

namespace skewchar {

std::string LatticePoint::to_string() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

LatticePoint step_delta(StepKind k) {
    switch (k) {
        case StepKind::RIGHT: return {1, 0};
        case StepKind::UP: return {0, 1};
        case StepKind::DOWN: return {0, -1};
        case StepKind::DIAG: return {1, 1};
        case StepKind::OHORIZ: return {2, 0};
    }
    return {0, 0};
}

char step_char(StepKind k) {
    switch (k) {
        case StepKind::RIGHT: return 'R';
        case StepKind::UP: return 'U';
        case StepKind::DOWN: return 'D';
        case StepKind::DIAG: return 'G';
        case StepKind::OHORIZ: return 'O';
    }
    return '?';
}

// ---- model ----

PathModel PathModel::columnwise(Family f, int n, int m) {
    return PathModel{f, Layout::COLUMNWISE, n, m, 2 * m};
}

PathModel PathModel::hookwise(Family f, int n, int m) {
    if (f == Family::GL) throw PreconditionError("hookwise paths are defined for sp, so and o only");
    return PathModel{f, Layout::HOOKWISE, n, m, 2 * m};
}

PathModel PathModel::relative(Family f, int n, LatticePoint start) {
    if ((start.x + start.y) % 2 != 0) throw PreconditionError("start point must be even");
    return PathModel{f, Layout::COLUMNWISE, n, 0, start.x + start.y};
}

namespace {

// x_{s/2+1}^{-1} for even s, x_{(s+1)/2} for odd s.
int sym_index(int s) { return s % 2 == 0 ? -(s / 2 + 1) : (s + 1) / 2; }

}  // namespace

bool PathModel::vertex_ok(LatticePoint p) const {
    if (family == Family::GL) return true;
    if (layout == Layout::HOOKWISE) {
        if (p.x <= 0 && p.y < 2 * m) return false;
        if (p.x >= 0 && (p.y < -p.x + 2 * m || p.y < p.x - 1)) return false;
        return true;
    }
    return p.y >= p.x - 1;
}

std::optional<int> PathModel::right_label(LatticePoint p) const {
    int idx = 0;
    if (layout == Layout::HOOKWISE && p.x < 0) {
        const int j = p.y - 2 * m;
        if (j < 0) return std::nullopt;
        idx = sym_index(j);
    } else {
        const int s = p.x + p.y - base;
        if (s < 0) return std::nullopt;
        idx = family == Family::GL ? s + 1 : sym_index(s);
    }
    if (std::abs(idx) > n) return std::nullopt;
    return idx;
}

bool PathModel::step_ok(LatticePoint p, StepKind k, bool /*prev_down*/) const {
    if (!vertex_ok(p + step_delta(k))) return false;
    const bool hook = layout == Layout::HOOKWISE;
    switch (k) {
        case StepKind::RIGHT: return right_label(p).has_value();
        case StepKind::UP: return !hook || p.x >= 1;
        case StepKind::DOWN: return hook && p.x <= 0;
        case StepKind::DIAG: {
            if (family != Family::SO_ODD || p.y != p.x || (hook && p.x < 0)) return false;
            const int s = p.x + p.y - base;
            return s >= 0 && s / 2 + 1 <= n;
        }
        case StepKind::OHORIZ: {
            if (family != Family::O_EVEN || p.y != p.x + 2 || (hook && p.x < 0)) return false;
            const int s = p.x + p.y - base;
            return s >= 0 && s / 2 + 1 <= n;
        }
    }
    return false;
}

// ---- paths ----

std::vector<LatticePoint> Path::vertices() const {
    std::vector<LatticePoint> v{start};
    v.reserve(steps.size() + 1);
    for (auto k : steps) v.push_back(v.back() + step_delta(k));
    return v;
}

LatticePoint Path::end() const {
    LatticePoint p = start;
    for (auto k : steps) p = p + step_delta(k);
    return p;
}

std::vector<LatticePoint> Path::midpoints() const {
    std::vector<LatticePoint> out;
    LatticePoint p = start;
    for (auto k : steps) {
        if (k == StepKind::OHORIZ) out.push_back({p.x + 1, p.y});
        p = p + step_delta(k);
    }
    return out;
}

Monomial Path::weight_exponents(const PathModel& model) const {
    Monomial e(model.n, 0);
    LatticePoint p = start;
    for (auto k : steps) {
        if (k == StepKind::RIGHT) {
            auto lbl = model.right_label(p);
            if (!lbl) throw InvalidFamily("horizontal step from " + p.to_string() + " has no label");
            e[std::abs(*lbl) - 1] += *lbl > 0 ? 1 : -1;
        }
        p = p + step_delta(k);
    }
    return e;
}

bool Path::is_legal(const PathModel& model) const {
    if (!model.vertex_ok(start)) return false;
    LatticePoint p = start;
    bool prev_down = false;
    for (auto k : steps) {
        if (!model.step_ok(p, k, prev_down)) return false;
        prev_down = k == StepKind::DOWN;
        p = p + step_delta(k);
    }
    return true;
}

std::string Path::to_string() const {
    std::string s = start.to_string() + " ";
    for (auto k : steps) s += step_char(k);
    return s;
}

// ---- families ----

namespace {

int permutation_sign(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace

int PathFamily::sign() const { return permutation_sign(connection); }

Monomial PathFamily::weight_exponents() const {
    Monomial e(model.n, 0);
    for (const auto& p : paths) {
        auto w = p.weight_exponents(model);
        for (int i = 0; i < model.n; ++i) e[i] += w[i];
    }
    return e;
}

LaurentPoly PathFamily::weight() const {
    return LaurentPoly::monomial(weight_exponents(), sign());
}

bool PathFamily::weakly_non_intersecting() const {
    std::vector<LatticePoint> all;
    for (const auto& p : paths) {
        auto v = p.vertices();
        all.insert(all.end(), v.begin(), v.end());
    }
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

bool PathFamily::strongly_non_intersecting() const {
    if (!weakly_non_intersecting()) return false;
    std::vector<LatticePoint> all;
    for (const auto& p : paths) {
        auto v = p.vertices();
        auto mid = p.midpoints();
        all.insert(all.end(), v.begin(), v.end());
        all.insert(all.end(), mid.begin(), mid.end());
    }
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

Endpoints columnwise_endpoints(Family f, const Partition& lam, const Partition& mu, int n, int m,
                               int N) {
    const Partition lc = conjugate(lam), mc = conjugate(mu);
    Endpoints ep;
    if (f == Family::GL) {
        const int l = mu.length();
        for (int i = 1; i <= N; ++i) {
            ep.starts.push_back({mc[i] - i + 1, 2 * l - mc[i] + i - 1});
            ep.ends.push_back({lc[i] - i + 1, n + 2 * l - lc[i] + i - 1});
        }
        return ep;
    }
    for (int i = 1; i <= N; ++i) {
        ep.starts.push_back({mc[i] - i + 1, 2 * m - mc[i] + i - 1});
        ep.ends.push_back({lc[i] - i + 1, 2 * n + 2 * m - lc[i] + i - 1});
    }
    return ep;
}

Endpoints hookwise_endpoints(const Partition& lam, const Partition& mu, int n, int m) {
    const auto fl = to_frobenius(lam);
    const auto fm = to_frobenius(mu);
    Endpoints ep;
    for (int i = 0; i < fl.rank(); ++i) {
        ep.starts.push_back({-fl.arms[i], 2 * n + 2 * m - 1});
        ep.ends.push_back({fl.legs[i] + 1, 2 * n + 2 * m - fl.legs[i] - 1});
    }
    for (int i = 0; i < fm.rank(); ++i) {
        ep.starts.push_back({fm.legs[i] + 1, 2 * m - fm.legs[i] - 1});
        ep.ends.push_back({-fm.arms[i], 2 * m});
    }
    return ep;
}

// ---- single-path generating functions ----

namespace {

constexpr StepKind kAllSteps[] = {StepKind::RIGHT, StepKind::UP, StepKind::DOWN, StepKind::DIAG,
                                  StepKind::OHORIZ};

// A point past which the target can no longer be reached: x never decreases,
// and y never decreases once the path is in the region where UP is legal.
bool hopeless(const PathModel& model, LatticePoint p, LatticePoint to) {
    if (p.x > to.x) return true;
    const bool can_descend = model.layout == Layout::HOOKWISE && p.x <= 0;
    return !can_descend && p.y > to.y;
}

LaurentPoly times_label(const LaurentPoly& p, int label) {
    LaurentPoly r(p.n_vars());
    for (const auto& [mono, c] : p.terms()) {
        Monomial s(mono);
        s[std::abs(label) - 1] += label > 0 ? 1 : -1;
        r.add_term(s, c);
    }
    return r;
}

// Generating functions from p to the target, split by the number of special steps.
class PathCounter {
public:
    PathCounter(const PathModel& model, LatticePoint to) : model_(model), to_(to) {}

    const std::vector<LaurentPoly>& from(LatticePoint p) {
        auto it = memo_.find(p);
        if (it != memo_.end()) return it->second;
        std::vector<LaurentPoly> acc;
        if (p == to_) {
            acc.push_back(LaurentPoly::constant(model_.n, 1));
        } else if (!hopeless(model_, p, to_)) {
            for (auto k : kAllSteps) {
                if (!model_.step_ok(p, k, false)) continue;
                const auto& sub = from(p + step_delta(k));
                const std::size_t shift = model_.is_special(k) ? 1 : 0;
                if (acc.size() < sub.size() + shift) acc.resize(sub.size() + shift, LaurentPoly(model_.n));
                for (std::size_t j = 0; j < sub.size(); ++j) {
                    if (sub[j].is_zero()) continue;
                    if (k == StepKind::RIGHT)
                        acc[j + shift] += times_label(sub[j], *model_.right_label(p));
                    else
                        acc[j + shift] += sub[j];
                }
            }
        }
        return memo_.emplace(p, std::move(acc)).first->second;
    }

private:
    const PathModel& model_;
    LatticePoint to_;
    std::map<LatticePoint, std::vector<LaurentPoly>> memo_;
};

}  // namespace

LaurentPoly path_gf(const PathModel& model, LatticePoint from, LatticePoint to) {
    LaurentPoly total(model.n);
    if (!model.vertex_ok(from) || !model.vertex_ok(to)) return total;
    PathCounter counter(model, to);
    for (const auto& part : counter.from(from)) total += part;
    return total;
}

LaurentPoly path_gf_by_diag_count(const PathModel& model, LatticePoint from, LatticePoint to,
                                  int k) {
    if (k < 0) throw PreconditionError("negative special-step count");
    if (!model.vertex_ok(from) || !model.vertex_ok(to)) return LaurentPoly(model.n);
    PathCounter counter(model, to);
    const auto& parts = counter.from(from);
    return static_cast<std::size_t>(k) < parts.size() ? parts[k] : LaurentPoly(model.n);
}

namespace {

class Reach {
public:
    Reach(const PathModel& model, LatticePoint to) : model_(model), to_(to) {}
    bool operator()(LatticePoint p) {
        auto it = memo_.find(p);
        if (it != memo_.end()) return it->second;
        bool ok = p == to_;
        if (!ok && !hopeless(model_, p, to_)) {
            for (auto k : kAllSteps)
                if (model_.step_ok(p, k, false) && (*this)(p + step_delta(k))) {
                    ok = true;
                    break;
                }
        }
        memo_[p] = ok;
        return ok;
    }

private:
    const PathModel& model_;
    LatticePoint to_;
    std::map<LatticePoint, bool> memo_;
};

bool walk(const PathModel& model, Reach& reach, Path& cur, LatticePoint p, LatticePoint to,
          const std::function<bool(const Path&)>& visit) {
    if (p == to) return visit(cur);
    for (auto k : kAllSteps) {
        if (!model.step_ok(p, k, false)) continue;
        const LatticePoint q = p + step_delta(k);
        if (!reach(q)) continue;
        cur.steps.push_back(k);
        const bool go_on = walk(model, reach, cur, q, to, visit);
        cur.steps.pop_back();
        if (!go_on) return false;
    }
    return true;
}

}  // namespace

void enumerate_paths(const PathModel& model, LatticePoint from, LatticePoint to,
                     const std::function<bool(const Path&)>& visit) {
    if (!model.vertex_ok(from) || !model.vertex_ok(to)) return;
    Reach reach(model, to);
    if (!reach(from)) return;
    Path cur{from, {}};
    walk(model, reach, cur, from, to, visit);
}

// ---- modified reflection ----

namespace {

Path reflect_segment(const Path& p, int d) {
    for (auto k : p.steps)
        if (k != StepKind::RIGHT && k != StepKind::UP)
            throw PreconditionError("reflection needs unit right/up steps");
    const auto v = p.vertices();
    std::size_t touch = 0;
    while (touch < v.size() && v[touch].y != v[touch].x + d) ++touch;
    if (touch == v.size()) throw PreconditionError("path never meets y = x + " + std::to_string(d));

    std::vector<LatticePoint> w(touch + 1);
    for (std::size_t i = 0; i <= touch; ++i) {
        const LatticePoint q = v[i];
        const bool odd = ((q.x + q.y) % 2 + 2) % 2 == 1;
        LatticePoint r{q.y - d, q.x + d};
        if (odd && i > 0 && i < touch) {
            const StepKind in = p.steps[i - 1], out = p.steps[i];
            if (in == StepKind::RIGHT && out == StepKind::UP) r = {q.y - d + 1, q.x + d - 1};
            if (in == StepKind::UP && out == StepKind::RIGHT) r = {q.y - d - 1, q.x + d + 1};
        }
        w[i] = r;
    }
    Path out{w[0], {}};
    for (std::size_t i = 0; i < touch; ++i) {
        const int dx = w[i + 1].x - w[i].x, dy = w[i + 1].y - w[i].y;
        if (dx == 1 && dy == 0) out.steps.push_back(StepKind::RIGHT);
        else if (dx == 0 && dy == 1) out.steps.push_back(StepKind::UP);
        else throw InvalidFamily("reflection produced a non-unit step");
    }
    out.steps.insert(out.steps.end(), p.steps.begin() + static_cast<std::ptrdiff_t>(touch),
                     p.steps.end());
    return out;
}

}  // namespace

Path reflect_initial_segment(const Path& p, int d) {
    if (d % 2 != 0) throw PreconditionError("reflection line offset must be even");
    if ((p.start.x + p.start.y) % 2 != 0) throw PreconditionError("start point must be even");
    if (p.start.y <= p.start.x + d) throw PreconditionError("start must lie above the line");
    return reflect_segment(p, d);
}

Path unreflect_initial_segment(const Path& p, int d) {
    if (d % 2 != 0) throw PreconditionError("reflection line offset must be even");
    if ((p.start.x + p.start.y) % 2 != 0) throw PreconditionError("start point must be even");
    if (p.start.y >= p.start.x + d) throw PreconditionError("start must lie below the line");
    return reflect_segment(p, d);
}

// ---- brute-force LGV ----

namespace {

struct Candidate {
    Path path;
    std::vector<LatticePoint> verts;
    Monomial weight;
};

// Depth-first search over vertex-disjoint choices, one path per start.
class FamilySearch {
public:
    FamilySearch(const PathModel& model, const std::vector<LatticePoint>& starts,
                 const std::vector<LatticePoint>& ends)
        : model_(model), k_(starts.size()), cand_(k_, std::vector<std::vector<Candidate>>(k_)) {
        if (starts.size() != ends.size()) throw PreconditionError("start/end counts differ");
        int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
        bool first = true;
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = 0; j < k_; ++j)
                enumerate_paths(model, starts[i], ends[j], [&](const Path& p) {
                    Candidate c{p, p.vertices(), p.weight_exponents(model)};
                    for (auto q : c.verts) {
                        if (first) x0 = x1 = q.x, y0 = y1 = q.y, first = false;
                        x0 = std::min(x0, q.x), x1 = std::max(x1, q.x);
                        y0 = std::min(y0, q.y), y1 = std::max(y1, q.y);
                    }
                    cand_[i][j].push_back(std::move(c));
                    return true;
                });
        ox_ = x0, oy_ = y0, w_ = x1 - x0 + 1;
        occ_.assign(static_cast<std::size_t>(w_) * static_cast<std::size_t>(y1 - y0 + 1), 0);
        used_.assign(k_, false);
        conn_.assign(k_, -1);
        choice_.assign(k_, nullptr);
    }

    template <class F>
    void run(F&& leaf) { dfs(0, leaf); }

    std::size_t size() const { return k_; }
    const std::vector<int>& connection() const { return conn_; }
    const Candidate& chosen(std::size_t i) const { return *choice_[i]; }

private:
    std::size_t cell(LatticePoint q) const {
        return static_cast<std::size_t>(q.y - oy_) * static_cast<std::size_t>(w_) +
               static_cast<std::size_t>(q.x - ox_);
    }

    template <class F>
    void dfs(std::size_t i, F& leaf) {
        if (i == k_) {
            leaf();
            return;
        }
        for (std::size_t j = 0; j < k_; ++j) {
            if (used_[j]) continue;
            for (const auto& c : cand_[i][j]) {
                bool clash = false;
                for (auto q : c.verts)
                    if (occ_[cell(q)]) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                for (auto q : c.verts) occ_[cell(q)] = 1;
                used_[j] = true;
                conn_[i] = static_cast<int>(j);
                choice_[i] = &c;
                dfs(i + 1, leaf);
                used_[j] = false;
                for (auto q : c.verts) occ_[cell(q)] = 0;
            }
        }
    }

    const PathModel& model_;
    std::size_t k_;
    std::vector<std::vector<std::vector<Candidate>>> cand_;
    int ox_ = 0, oy_ = 0, w_ = 1;
    std::vector<char> occ_;
    std::vector<bool> used_;
    std::vector<int> conn_;
    std::vector<const Candidate*> choice_;
};

}  // namespace

void enumerate_lgv_families(const PathModel& model, const std::vector<LatticePoint>& starts,
                            const std::vector<LatticePoint>& ends,
                            const std::function<void(const PathFamily&)>& visit) {
    FamilySearch search(model, starts, ends);
    search.run([&] {
        PathFamily pf{model, starts, ends, {}, search.connection()};
        for (std::size_t i = 0; i < search.size(); ++i) pf.paths.push_back(search.chosen(i).path);
        visit(pf);
    });
}

LaurentPoly lgv_signed_sum(const PathModel& model, const std::vector<LatticePoint>& starts,
                           const std::vector<LatticePoint>& ends) {
    FamilySearch search(model, starts, ends);
    std::map<Monomial, long long> acc;
    search.run([&] {
        Monomial e(model.n, 0);
        for (std::size_t i = 0; i < search.size(); ++i) {
            const auto& w = search.chosen(i).weight;
            for (int v = 0; v < model.n; ++v) e[v] += w[v];
        }
        std::vector<int> conn = search.connection();
        acc[e] += permutation_sign(conn);
    });
    LaurentPoly out(model.n);
    for (const auto& [e, c] : acc)
        if (c != 0) out.add_term(e, mpz_class(static_cast<long>(c)));
    return out;
}

LaurentPoly lgv_determinant(const PathModel& model, const std::vector<LatticePoint>& starts,
                            const std::vector<LatticePoint>& ends) {
    if (starts.size() != ends.size()) throw PreconditionError("start/end counts differ");
    const int k = static_cast<int>(starts.size());
    PolyMatrix mat(k, model.n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) mat.at(i, j) = path_gf(model, starts[i], ends[j]);
    return determinant(mat);
}

}  // namespace skewchar
