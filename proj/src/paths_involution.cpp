#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "skewchar/errors.hpp"
#include "skewchar/paths.hpp"

namespace skewchar {

namespace {

// Where each vertex sits: path index and position in that path's vertex list.
class Occupancy {
public:
    explicit Occupancy(const PathFamily& pf) : pf_(pf) {
        for (std::size_t i = 0; i < pf.paths.size(); ++i) {
            verts_.push_back(pf.paths[i].vertices());
            for (std::size_t j = 0; j < verts_[i].size(); ++j) where_[verts_[i][j]] = {i, j};
            for (auto mpt : pf.paths[i].midpoints()) mids_.insert(mpt);
        }
    }

    bool occupied(LatticePoint p) const { return where_.count(p) || mids_.count(p); }

    // Step entering p and step leaving p; nullopt at path ends or if p is not a vertex.
    std::optional<StepKind> step_in(LatticePoint p) const {
        auto it = where_.find(p);
        if (it == where_.end() || it->second.second == 0) return std::nullopt;
        return pf_.paths[it->second.first].steps[it->second.second - 1];
    }
    std::optional<StepKind> step_out(LatticePoint p) const {
        auto it = where_.find(p);
        if (it == where_.end()) return std::nullopt;
        const auto& steps = pf_.paths[it->second.first].steps;
        if (it->second.second >= steps.size()) return std::nullopt;
        return steps[it->second.second];
    }
    bool turn(LatticePoint p, StepKind in, StepKind out) const {
        return step_in(p) == in && step_out(p) == out;
    }
    std::optional<std::pair<std::size_t, std::size_t>> locate(LatticePoint p) const {
        auto it = where_.find(p);
        if (it == where_.end()) return std::nullopt;
        return it->second;
    }

private:
    const PathFamily& pf_;
    std::vector<std::vector<LatticePoint>> verts_;
    std::map<LatticePoint, std::pair<std::size_t, std::size_t>> where_;
    std::set<LatticePoint> mids_;
};

// Element j >= 1 of the chain at line L: a left turn at (L-j+1, L+j-2), or in
// the hookwise h-region (j > L) a horizontal step leaving (L-j, 2L-2).
bool chain_element(const PathFamily& pf, const Occupancy& occ, int L, int j) {
    if (pf.model.layout == Layout::HOOKWISE && j > L)
        return occ.step_out({L - j, 2 * L - 2}) == StepKind::RIGHT;
    return occ.turn({L - j + 1, L + j - 2}, StepKind::RIGHT, StepKind::UP);
}

int chain_length(const PathFamily& pf, const Occupancy& occ, int L) {
    int d = 0;
    while (d < 4 * (pf.model.n + pf.model.m) + 8 && chain_element(pf, occ, L, d + 1)) ++d;
    return d;
}

// The vacancy of a trapped configuration at line L with chain length d >= 1,
// or nullopt if the configuration is absent.
std::optional<LatticePoint> trapped_at(const PathFamily& pf, const Occupancy& occ, int L, int d) {
    if (d < 1) return std::nullopt;
    const int j = d + 1;
    const bool hook = pf.model.layout == Layout::HOOKWISE;
    if (!hook || j < L) {
        const LatticePoint t{L - d, L + d - 1};
        if (occ.occupied(t)) return std::nullopt;
        if (!occ.turn({L - d - 1, L + d}, StepKind::UP, StepKind::RIGHT)) return std::nullopt;
        return t;
    }
    if (j == L) {
        const LatticePoint t{1, 2 * L - 2};
        if (occ.occupied(t) || occ.occupied({0, 2 * L - 2})) return std::nullopt;
        if (occ.step_out({0, 2 * L - 1}) != StepKind::RIGHT) return std::nullopt;
        return t;
    }
    const LatticePoint t{L - j, 2 * L - 2};
    if (occ.occupied(t)) return std::nullopt;
    const LatticePoint top{L - j, 2 * L - 1};
    if (occ.step_out(top) != StepKind::RIGHT) return std::nullopt;
    if (occ.step_out(top + LatticePoint{1, 0}) != StepKind::DOWN) return std::nullopt;
    return t;
}

void require_even_orthogonal(const PathFamily& pf) {
    if (pf.model.family != Family::O_EVEN)
        throw PreconditionError("trapped positions are defined for the even orthogonal model");
}

struct Site {
    int line;
    bool crossing;
    LatticePoint point;
};

std::vector<Site> sites(const PathFamily& pf, const Occupancy& occ) {
    std::vector<Site> out;
    for (int i = 1; i <= pf.model.n; ++i) {
        const int L = pf.model.m + i;
        if (auto t = trapped_at(pf, occ, L, chain_length(pf, occ, L))) out.push_back({L, false, *t});
    }
    for (const auto& path : pf.paths)
        for (auto mid : path.midpoints())
            if (occ.locate(mid)) out.push_back({mid.y, true, mid});
    std::sort(out.begin(), out.end(), [](const Site& a, const Site& b) { return a.line < b.line; });
    return out;
}

// Replaces the steps of path pi between vertex indices [a, b) with repl.
void splice(PathFamily& pf, std::size_t pi, std::size_t a, std::size_t b, std::vector<StepKind> repl) {
    auto& steps = pf.paths[pi].steps;
    steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(a), steps.begin() + static_cast<std::ptrdiff_t>(b));
    steps.insert(steps.begin() + static_cast<std::ptrdiff_t>(a), repl.begin(), repl.end());
}

[[noreturn]] void malformed(const std::string& why) { throw InvalidFamily("malformed family: " + why); }

// Exchanges the tails of two paths at the given vertex indices; both tails
// are joined by the given step lists.
void swap_tails(PathFamily& pf, std::size_t a, std::size_t ia, std::vector<StepKind> join_a,
                std::size_t b, std::size_t ib, std::vector<StepKind> join_b, std::size_t skip_a,
                std::size_t skip_b) {
    auto& sa = pf.paths[a].steps;
    auto& sb = pf.paths[b].steps;
    std::vector<StepKind> tail_a(sa.begin() + static_cast<std::ptrdiff_t>(ia + skip_a), sa.end());
    std::vector<StepKind> tail_b(sb.begin() + static_cast<std::ptrdiff_t>(ib + skip_b), sb.end());
    sa.resize(ia);
    sb.resize(ib);
    sa.insert(sa.end(), join_a.begin(), join_a.end());
    sa.insert(sa.end(), tail_b.begin(), tail_b.end());
    sb.insert(sb.end(), join_b.begin(), join_b.end());
    sb.insert(sb.end(), tail_a.begin(), tail_a.end());
    std::swap(pf.connection[a], pf.connection[b]);
}

// Chain element j at line L turns from "barred" to "plain": the left turn
// becomes a right turn through the next anti-diagonal point (and the hookwise
// analogues at x = 0 and in the h-region).
void advance_chain(PathFamily& pf, const Occupancy& occ, int L, int e) {
    const bool hook = pf.model.layout == Layout::HOOKWISE;
    if (!hook || e < L) {
        const LatticePoint pe{L - e + 1, L + e - 2};
        const LatticePoint next{L - e, L + e - 1};
        if (occ.occupied(next)) malformed("vacancy expected at " + next.to_string());
        auto loc = occ.locate(pe);
        splice(pf, loc->first, loc->second - 1, loc->second + 1, {StepKind::UP, StepKind::RIGHT});
        return;
    }
    if (e == L) {
        const LatticePoint top{0, 2 * L - 1};
        auto loc = occ.locate(top);
        if (!loc || occ.step_out(top) != StepKind::DOWN) malformed("corner not entered from above");
        splice(pf, loc->first, loc->second, loc->second + 3, {StepKind::RIGHT});
        return;
    }
    const LatticePoint top{L - e, 2 * L - 1};
    auto loc = occ.locate(top);
    if (!loc || occ.step_out(top) != StepKind::DOWN) malformed("h-step not entered from above");
    splice(pf, loc->first, loc->second, loc->second + 2, {StepKind::RIGHT, StepKind::DOWN});
}

// Inverse of advance_chain for the trapped configuration with chain length d.
void retreat_chain(PathFamily& pf, const Occupancy& occ, int L, int d) {
    const int j = d + 1;
    const bool hook = pf.model.layout == Layout::HOOKWISE;
    if (!hook || j < L) {
        const LatticePoint q{L - d - 1, L + d};
        auto loc = occ.locate(q);
        splice(pf, loc->first, loc->second - 1, loc->second + 1, {StepKind::RIGHT, StepKind::UP});
        return;
    }
    if (j == L) {
        const LatticePoint top{0, 2 * L - 1};
        auto loc = occ.locate(top);
        splice(pf, loc->first, loc->second, loc->second + 1,
               {StepKind::DOWN, StepKind::RIGHT, StepKind::UP});
        return;
    }
    const LatticePoint top{L - j, 2 * L - 1};
    auto loc = occ.locate(top);
    splice(pf, loc->first, loc->second, loc->second + 2, {StepKind::DOWN, StepKind::RIGHT});
}

}  // namespace

std::vector<LatticePoint> find_trapped_positions(const PathFamily& pf) {
    require_even_orthogonal(pf);
    Occupancy occ(pf);
    std::vector<LatticePoint> out;
    for (int i = 1; i <= pf.model.n; ++i) {
        const int L = pf.model.m + i;
        if (auto t = trapped_at(pf, occ, L, chain_length(pf, occ, L))) out.push_back(*t);
    }
    return out;
}

std::vector<LatticePoint> find_crossings(const PathFamily& pf) {
    Occupancy occ(pf);
    std::vector<LatticePoint> out;
    for (const auto& path : pf.paths)
        for (auto mid : path.midpoints())
            if (occ.locate(mid)) out.push_back(mid);
    std::sort(out.begin(), out.end(),
              [](LatticePoint a, LatticePoint b) { return a.x + a.y < b.x + b.y; });
    return out;
}

PathFamily involution_step(const PathFamily& pf) {
    require_even_orthogonal(pf);
    Occupancy occ(pf);
    const auto all = sites(pf, occ);
    if (all.empty()) throw NoSite("family has no crossing and no trapped position");
    if (all.size() > 1 && all[0].line == all[1].line) malformed("two sites on one line");
    const Site site = all.front();
    const int L = site.line;
    PathFamily out = pf;

    if (site.crossing) {
        // o-horizontal step (L-2, L) -> (L, L) over the vertical pair through (L-1, L).
        const LatticePoint mid = site.point;
        auto over = occ.locate({mid.x - 1, mid.y});
        auto under = occ.locate(mid);
        if (!over || occ.step_out({mid.x - 1, mid.y}) != StepKind::OHORIZ) malformed("o-step not found");
        if (occ.step_in(mid) != StepKind::UP || occ.step_out(mid) != StepKind::UP)
            malformed("crossed path is not vertical at " + mid.to_string());
        // over: ... (L-2,L) R (L-1,L) U (L-1,L+1) [tail of under]
        // under: ... (L-1,L-1) R (L,L-1) U (L,L) [tail of over]
        swap_tails(out, over->first, over->second, {StepKind::RIGHT, StepKind::UP}, under->first,
                   under->second - 1, {StepKind::RIGHT, StepKind::UP}, 1, 2);
        Occupancy mid_occ(out);
        const int e = chain_length(out, mid_occ, L);
        if (e < 2) malformed("resolved crossing does not start a chain");
        advance_chain(out, mid_occ, L, e);
    } else {
        if (pf.model.layout == Layout::HOOKWISE && L < 2)
            throw InvalidFamily("trapped position at the first line cannot be paired");
        const int d = chain_length(pf, occ, L);
        retreat_chain(out, occ, L, d);
        Occupancy mid_occ(out);
        if (chain_length(out, mid_occ, L) < 2) malformed("trapped position without a mergeable pair");
        // Left turns at (L, L-1) and (L-1, L) merge into an o-step crossing the second path.
        const LatticePoint p1{L, L - 1}, p2{L - 1, L};
        auto a = mid_occ.locate(p1);
        auto b = mid_occ.locate(p2);
        // b: ... (L-2,L) O (L,L) [tail of a after (L,L)]
        // a: ... (L-1,L-1) U (L-1,L) U (L-1,L+1) [tail of b after (L-1,L+1)]
        swap_tails(out, b->first, b->second - 1, {StepKind::OHORIZ}, a->first, a->second - 1,
                   {StepKind::UP, StepKind::UP}, 2, 2);
    }
    for (const auto& path : out.paths)
        if (!path.is_legal(out.model)) malformed("local change leaves the model");
    if (!out.weakly_non_intersecting()) malformed("local change creates an intersection");
    return out;
}

// ---- rendering ----

std::string render_ascii(const PathFamily& pf) {
    if (pf.paths.empty()) return "(empty family)\n";
    int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    bool first = true;
    for (const auto& p : pf.paths)
        for (auto v : p.vertices()) {
            if (first) x0 = x1 = v.x, y0 = y1 = v.y, first = false;
            x0 = std::min(x0, v.x), x1 = std::max(x1, v.x);
            y0 = std::min(y0, v.y), y1 = std::max(y1, v.y);
        }
    const int w = 2 * (x1 - x0) + 1, h = 2 * (y1 - y0) + 1;
    std::vector<std::string> grid(static_cast<std::size_t>(h), std::string(static_cast<std::size_t>(w), ' '));
    auto put = [&](int gx, int gy, char c) { grid[static_cast<std::size_t>(h - 1 - gy)][static_cast<std::size_t>(gx)] = c; };
    for (int x = x0; x <= x1; ++x)
        for (int y = y0; y <= y1; ++y) put(2 * (x - x0), 2 * (y - y0), pf.model.vertex_ok({x, y}) ? '.' : ' ');
    if (pf.model.family != Family::GL)
        for (int x = x0; x <= x1; ++x)
            if (x - 1 >= y0 && x - 1 <= y1 && pf.model.layout == Layout::COLUMNWISE) put(2 * (x - x0), 2 * (x - 1 - y0), '\\');
    for (std::size_t i = 0; i < pf.paths.size(); ++i) {
        const char mark = static_cast<char>('1' + static_cast<int>(i % 9));
        LatticePoint p = pf.paths[i].start;
        for (auto s : pf.paths[i].steps) {
            const int gx = 2 * (p.x - x0), gy = 2 * (p.y - y0);
            switch (s) {
                case StepKind::RIGHT: put(gx + 1, gy, '-'); break;
                case StepKind::UP: put(gx, gy + 1, '|'); break;
                case StepKind::DOWN: put(gx, gy - 1, '|'); break;
                case StepKind::DIAG: put(gx + 1, gy + 1, '/'); break;
                case StepKind::OHORIZ: put(gx + 1, gy, '~'); put(gx + 2, gy, '~'); put(gx + 3, gy, '~'); break;
            }
            put(gx, gy, mark);
            p = p + step_delta(s);
        }
        put(2 * (p.x - x0), 2 * (p.y - y0), mark);
    }
    std::string out;
    for (const auto& row : grid) {
        auto end = row.find_last_not_of(' ');
        out += (end == std::string::npos ? std::string() : row.substr(0, end + 1)) + "\n";
    }
    return out;
}

std::string render_svg(const PathFamily& pf) {
    constexpr int kScale = 30;
    int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    bool first = true;
    for (const auto& p : pf.paths)
        for (auto v : p.vertices()) {
            if (first) x0 = x1 = v.x, y0 = y1 = v.y, first = false;
            x0 = std::min(x0, v.x), x1 = std::max(x1, v.x);
            y0 = std::min(y0, v.y), y1 = std::max(y1, v.y);
        }
    --x0, --y0, ++x1, ++y1;
    auto X = [&](int x) { return (x - x0) * kScale; };
    auto Y = [&](int y) { return (y1 - y) * kScale; };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << X(x1) << "\" height=\"" << Y(y0)
      << "\">\n";
    for (int x = x0; x <= x1; ++x)
        s << "<line x1=\"" << X(x) << "\" y1=\"0\" x2=\"" << X(x) << "\" y2=\"" << Y(y0)
          << "\" stroke=\"#ddd\"/>\n";
    for (int y = y0; y <= y1; ++y)
        s << "<line x1=\"0\" y1=\"" << Y(y) << "\" x2=\"" << X(x1) << "\" y2=\"" << Y(y)
          << "\" stroke=\"#ddd\"/>\n";
    if (pf.model.family != Family::GL && pf.model.layout == Layout::COLUMNWISE)
        s << "<line x1=\"" << X(x0) << "\" y1=\"" << Y(x0 - 1) << "\" x2=\"" << X(x1) << "\" y2=\""
          << Y(x1 - 1) << "\" stroke=\"red\" stroke-width=\"2\"/>\n";
    for (const auto& path : pf.paths) {
        LatticePoint p = path.start;
        for (auto k : path.steps) {
            const LatticePoint q = p + step_delta(k);
            if (k == StepKind::OHORIZ) {
                s << "<path d=\"M " << X(p.x) << " " << Y(p.y) << " Q " << X(p.x + 1) << " "
                  << Y(p.y) - kScale << " " << X(q.x) << " " << Y(q.y)
                  << "\" fill=\"none\" stroke=\"black\" stroke-width=\"3\"/>\n";
            } else {
                s << "<line x1=\"" << X(p.x) << "\" y1=\"" << Y(p.y) << "\" x2=\"" << X(q.x)
                  << "\" y2=\"" << Y(q.y) << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
            }
            p = q;
        }
        s << "<circle cx=\"" << X(path.start.x) << "\" cy=\"" << Y(path.start.y)
          << "\" r=\"4\" fill=\"blue\"/>\n";
        s << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"4\" fill=\"blue\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace skewchar
