#include <map>

#include "skewchar/errors.hpp"
#include "skewchar/paths.hpp"

namespace skewchar {

namespace {

// 1-based slot of an entry in the letter sequence 1b, 1, 2b, 2, ... (GL: 1, 2, ...).
// In even orthogonal fillings a circled entry takes the barred slot and the
// hatted entry below it takes the plain slot, so the pair becomes one
// o-horizontal step; in odd orthogonal fillings a hat takes the barred slot.
int slot(Family f, const Entry& e) {
    if (f == Family::GL) return e.value;
    switch (e.deco) {
        case Decoration::PLAIN: return 2 * e.value;
        case Decoration::BAR: return 2 * e.value - 1;
        case Decoration::CIRC: return 2 * e.value - 1;
        case Decoration::HAT: return f == Family::O_EVEN ? 2 * e.value : 2 * e.value - 1;
    }
    return 0;
}

// Inverse of slot for a unit horizontal step.
Entry entry_for_slot(Family f, int k) {
    if (f == Family::GL) return {k, Decoration::PLAIN};
    if (k % 2 == 1) return {(k + 1) / 2, Decoration::BAR};
    return {k / 2, Decoration::PLAIN};
}

// Emits the steps for the given letter slots (sorted, within first..last):
// H for an occupied slot, V otherwise. Special entries are merged afterwards.
void emit_slots(Family f, const std::vector<Entry>& entries, int first, int last,
                std::vector<StepKind>& steps) {
    std::vector<bool> occupied(static_cast<std::size_t>(last + 2), false);
    std::map<int, Decoration> deco;
    for (const auto& e : entries) {
        const int k = slot(f, e);
        if (k < first || k > last) throw PreconditionError("entry outside the path range");
        occupied[k] = true;
        deco[k] = e.deco;
    }
    for (int k = first; k <= last; ++k) {
        if (!occupied[k]) {
            steps.push_back(StepKind::UP);
            continue;
        }
        const Decoration d = deco[k];
        if (f == Family::SO_ODD && d == Decoration::HAT && k + 1 <= last && !occupied[k + 1]) {
            steps.push_back(StepKind::DIAG);
            ++k;
        } else if (f == Family::O_EVEN && d == Decoration::CIRC && k + 1 <= last && occupied[k + 1] &&
                   deco[k + 1] == Decoration::HAT) {
            steps.push_back(StepKind::OHORIZ);
            ++k;
        } else {
            steps.push_back(StepKind::RIGHT);
        }
    }
}

void require_valid(Family family, const Tableau& t, int n, int m) {
    if (family != Family::GL) check_tableau_preconditions(family, t.shape(), n, m);
    if (!is_valid_tableau(family, t, n, m))
        throw PreconditionError("tableau is not a valid " + family_name(family) + " tableau");
}

}  // namespace

PathFamily tableau_to_paths(Family family, const Tableau& t, int n, int m, int N, bool check) {
    const Partition& lam = t.shape().outer();
    const Partition& mu = t.shape().inner();
    if (N < lam[1]) throw PreconditionError("N >= lambda_1 fails: " + std::to_string(N) + " < " +
                                            std::to_string(lam[1]));
    if (check) require_valid(family, t, n, m);
    const int mm = family == Family::GL ? mu.length() : m;
    const Partition lc = conjugate(lam), mc = conjugate(mu);
    const auto ep = columnwise_endpoints(family, lam, mu, n, mm, N);
    PathFamily pf{PathModel::columnwise(family, n, mm), ep.starts, ep.ends, {}, {}};
    const int letters = family == Family::GL ? n : 2 * n;
    for (int i = 1; i <= N; ++i) {
        std::vector<Entry> col;
        for (int r = mc[i] + 1; r <= lc[i]; ++r) col.push_back(t.at(r, i));
        Path p{ep.starts[i - 1], {}};
        emit_slots(family, col, 1, letters, p.steps);
        pf.paths.push_back(std::move(p));
        pf.connection.push_back(i - 1);
    }
    return pf;
}

PathFamily tableau_to_hook_paths(Family family, const Tableau& t, int n, int m, bool check) {
    if (family == Family::GL) throw PreconditionError("hookwise paths are defined for sp, so and o only");
    if (check) require_valid(family, t, n, m);
    const Partition& lam = t.shape().outer();
    const Partition& mu = t.shape().inner();
    const Partition lc = conjugate(lam), mc = conjugate(mu);
    const int p = to_frobenius(lam).rank();
    const int q = to_frobenius(mu).rank();
    const auto ep = hookwise_endpoints(lam, mu, n, m);
    PathFamily pf{PathModel::hookwise(family, n, m), ep.starts, ep.ends, {}, {}};
    const int top = 2 * n + 2 * m - 1;

    // Arm cells (i, lam_i) .. (i, first), read right to left, in the h-region.
    auto arm = [&](int i, int first, Path& path) {
        int y = top;
        for (int j = lam[i]; j >= first; --j) {
            const int h = 2 * m + slot(family, t.at(i, j)) - 1;
            for (; y > h; --y) path.steps.push_back(StepKind::DOWN);
            path.steps.push_back(StepKind::RIGHT);
        }
        return y;
    };

    for (int i = 1; i <= p; ++i) {
        Path path{ep.starts[i - 1], {}};
        if (i <= q) {
            int y = arm(i, mu[i] + 1, path);
            for (; y > 2 * m; --y) path.steps.push_back(StepKind::DOWN);
            pf.paths.push_back(std::move(path));
            pf.connection.push_back(p + i - 1);
            continue;
        }
        int y = arm(i, i + 1, path);
        // Corner and leg share the e-labelling from x = 0 on.
        std::vector<Entry> leg{t.at(i, i)};
        for (int r = i + 1; r <= lc[i]; ++r) leg.push_back(t.at(r, i));
        const int first = slot(family, leg.front());
        for (; y > 2 * m + first - 1; --y) path.steps.push_back(StepKind::DOWN);
        emit_slots(family, leg, first, 2 * n, path.steps);
        pf.paths.push_back(std::move(path));
        pf.connection.push_back(i - 1);
    }
    for (int i = 1; i <= q; ++i) {
        std::vector<Entry> col;
        for (int r = mc[i] + 1; r <= lc[i]; ++r) col.push_back(t.at(r, i));
        Path path{ep.starts[p + i - 1], {}};
        emit_slots(family, col, 1, 2 * n, path.steps);
        pf.paths.push_back(std::move(path));
        pf.connection.push_back(i - 1);
    }
    return pf;
}

namespace {

struct Placement {
    int row, col;
    Entry entry;
};

// Cells written by one path: e-region steps from x fill (k + x, k); h-region
// steps (hookwise, x < 0) fill (k, k - x), where k is the hook or column index.
void read_path(const PathFamily& pf, const Path& path, int k, std::vector<Placement>& out) {
    const Family f = pf.model.family;
    const bool hook = pf.model.layout == Layout::HOOKWISE;
    LatticePoint p = path.start;
    for (auto s : path.steps) {
        const int pos = (hook && p.x < 0 ? p.y - 2 * pf.model.m : p.x + p.y - pf.model.base) + 1;
        auto cell = [&](int x) -> std::pair<int, int> {
            if (hook && x < 0) return {k, k - x};
            return {k + x, k};
        };
        switch (s) {
            case StepKind::RIGHT: {
                auto [r, c] = cell(p.x);
                out.push_back({r, c, entry_for_slot(f, pos)});
                break;
            }
            case StepKind::DIAG: {
                auto [r, c] = cell(p.x);
                out.push_back({r, c, {(pos + 1) / 2, Decoration::HAT}});
                break;
            }
            case StepKind::OHORIZ: {
                auto [r1, c1] = cell(p.x);
                auto [r2, c2] = cell(p.x + 1);
                out.push_back({r1, c1, {(pos + 1) / 2, Decoration::CIRC}});
                out.push_back({r2, c2, {(pos + 1) / 2, Decoration::HAT}});
                break;
            }
            default: break;
        }
        p = p + step_delta(s);
    }
}

}  // namespace

Tableau paths_to_tableau(Family family, const PathFamily& pf) {
    const PathModel& model = pf.model;
    if (model.family != family) throw InvalidFamily("family does not match the path model");
    if (pf.paths.size() != pf.starts.size() || pf.ends.size() != pf.starts.size() ||
        pf.connection.size() != pf.starts.size())
        throw InvalidFamily("inconsistent family sizes");
    for (std::size_t i = 0; i < pf.paths.size(); ++i) {
        const auto& path = pf.paths[i];
        const int c = pf.connection[i];
        if (c < 0 || static_cast<std::size_t>(c) >= pf.ends.size()) throw InvalidFamily("bad connection");
        if (path.start != pf.starts[i] || path.end() != pf.ends[c])
            throw InvalidFamily("path " + std::to_string(i + 1) + " does not join its endpoints");
        if (!path.is_legal(model)) throw InvalidFamily("path " + std::to_string(i + 1) + " leaves the model");
    }
    if (!pf.strongly_non_intersecting()) throw InvalidFamily("paths intersect");

    Partition lam, mu;
    std::vector<Placement> cells;
    try {
        if (model.layout == Layout::COLUMNWISE) {
            std::vector<int> lc, mc;
            for (std::size_t i = 0; i < pf.paths.size(); ++i) {
                const int k = static_cast<int>(i) + 1;
                lc.push_back(pf.ends[i].x + k - 1);
                mc.push_back(pf.starts[i].x + k - 1);
                read_path(pf, pf.paths[i], k, cells);
            }
            lam = conjugate(Partition(lc));
            mu = conjugate(Partition(mc));
        } else {
            const int total = static_cast<int>(pf.paths.size());
            int p = 0;
            while (p < total && pf.starts[p].x <= 0) ++p;
            const int q = total - p;
            FrobeniusCoordinates fl, fm;
            for (int i = 0; i < p; ++i) {
                fl.arms.push_back(-pf.starts[i].x);
                fl.legs.push_back(pf.ends[i].x - 1);
                read_path(pf, pf.paths[i], i + 1, cells);
            }
            for (int i = 0; i < q; ++i) {
                fm.legs.push_back(pf.starts[p + i].x - 1);
                fm.arms.push_back(-pf.ends[p + i].x);
                read_path(pf, pf.paths[p + i], i + 1, cells);
            }
            lam = from_frobenius(fl);
            mu = from_frobenius(fm);
        }
    } catch (const PreconditionError& e) {
        throw InvalidFamily(std::string("endpoints do not describe a shape: ") + e.what());
    }

    SkewShape shape;
    try {
        shape = SkewShape(lam, mu);
    } catch (const ContainmentError&) {
        throw InvalidFamily("endpoints do not describe a skew shape");
    }
    Tableau t(shape);
    std::map<std::pair<int, int>, int> filled;
    for (const auto& c : cells) {
        if (!shape.contains_cell(c.row, c.col)) throw InvalidFamily("step outside the shape");
        if (++filled[{c.row, c.col}] > 1) throw InvalidFamily("cell filled twice");
        t.at(c.row, c.col) = c.entry;
    }
    if (static_cast<int>(filled.size()) != shape.size()) throw InvalidFamily("cells left empty");

    const int n = model.n;
    const int m = family == Family::GL ? 0 : model.m;
    if (!is_valid_tableau(family, t, n, m)) throw InvalidFamily("filling violates the tableau rules");
    // The maps are injective, so matching the forward image proves the family
    // is the image of this tableau (this also rules out trapped positions).
    const PathFamily back = model.layout == Layout::COLUMNWISE
                                ? tableau_to_paths(family, t, n, m, static_cast<int>(pf.paths.size()))
                                : tableau_to_hook_paths(family, t, n, m);
    if (!(back == pf)) throw InvalidFamily("family is not the image of a tableau");
    return t;
}

}  // namespace skewchar
