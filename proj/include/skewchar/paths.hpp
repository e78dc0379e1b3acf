#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewchar/laurent.hpp"
#include "skewchar/partition.hpp"
#include "skewchar/symfunc.hpp"
#include "skewchar/tableaux.hpp"

namespace skewchar {

struct LatticePoint {
    int x = 0;
    int y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
    LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
    std::string to_string() const;
};

enum class StepKind { RIGHT, UP, DOWN, DIAG, OHORIZ };

LatticePoint step_delta(StepKind k);
char step_char(StepKind k);  // R U D G O

enum class Layout { COLUMNWISE, HOOKWISE };

// Step set, boundary and labelling of one lattice-path model.
//
// Columnwise models label a horizontal step from (a,b) by s = a+b-base:
// Schur paths use x_{s+1}; the other families use x_{s/2+1}^{-1} for even s
// and x_{(s+1)/2} for odd s, and stay weakly above y = x-1.
// Hookwise models use the same labels for x >= 0 with base = 2m, and label a
// step from (a, 2m+j) with a < 0 by x_{j/2+1}^{-1} (j even) or x_{(j+1)/2} (j odd).
struct PathModel {
    Family family = Family::SP;
    Layout layout = Layout::COLUMNWISE;
    int n = 0;
    int m = 0;
    int base = 0;

    // Schur paths take m = l(mu); base = 2m.
    static PathModel columnwise(Family f, int n, int m);
    static PathModel hookwise(Family f, int n, int m);
    // Labels measured from an arbitrary even start point (single-path closed forms).
    static PathModel relative(Family f, int n, LatticePoint start);

    bool vertex_ok(LatticePoint p) const;
    // Signed variable index of a horizontal unit step from p (negative means
    // inverse), or nullopt if the label is outside 1..n.
    std::optional<int> right_label(LatticePoint p) const;
    // Whether a step of kind k may start at p; prev_down tells whether the
    // previous step of the path was DOWN (hookwise paths never turn from
    // DOWN to UP).
    bool step_ok(LatticePoint p, StepKind k, bool prev_down) const;
    bool is_special(StepKind k) const { return k == StepKind::DIAG || k == StepKind::OHORIZ; }
};

struct Path {
    LatticePoint start;
    std::vector<StepKind> steps;

    std::vector<LatticePoint> vertices() const;
    LatticePoint end() const;
    // Midpoints of o-horizontal steps.
    std::vector<LatticePoint> midpoints() const;
    // Exponent vector of the product of step weights.
    Monomial weight_exponents(const PathModel& model) const;
    bool is_legal(const PathModel& model) const;
    std::string to_string() const;

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

struct PathFamily {
    PathModel model;
    std::vector<LatticePoint> starts;
    std::vector<LatticePoint> ends;
    std::vector<Path> paths;        // paths[i] starts at starts[i]
    std::vector<int> connection;    // paths[i] ends at ends[connection[i]]

    int sign() const;
    Monomial weight_exponents() const;
    LaurentPoly weight() const;
    // No shared vertex between two paths.
    bool weakly_non_intersecting() const;
    // Additionally no path visits the midpoint of another path's o-horizontal step.
    bool strongly_non_intersecting() const;

    friend bool operator==(const PathFamily& a, const PathFamily& b) {
        return a.paths == b.paths && a.connection == b.connection && a.starts == b.starts &&
               a.ends == b.ends;
    }
};

struct Endpoints {
    std::vector<LatticePoint> starts;
    std::vector<LatticePoint> ends;
};

// S_i and E_j for 1 <= i,j <= N. For GL the Schur-path points with l(mu) are used.
Endpoints columnwise_endpoints(Family f, const Partition& lam, const Partition& mu, int n, int m,
                               int N);
// starts = A_1..A_p, D_1..D_q; ends = B_1..B_p, C_1..C_q.
Endpoints hookwise_endpoints(const Partition& lam, const Partition& mu, int n, int m);

// Weighted count of all legal paths, by memoised recursion.
LaurentPoly path_gf(const PathModel& model, LatticePoint from, LatticePoint to);
// Restricted to paths with exactly k diagonal or o-horizontal steps.
LaurentPoly path_gf_by_diag_count(const PathModel& model, LatticePoint from, LatticePoint to,
                                  int k);
// Streams every legal path; stops when visit returns false.
void enumerate_paths(const PathModel& model, LatticePoint from, LatticePoint to,
                     const std::function<bool(const Path&)>& visit);

// Modified reflection of the initial segment up to the first touch of y = x + d.
// The path must use unit RIGHT/UP steps, start at an even point strictly above
// the line and touch it; otherwise PreconditionError.
Path reflect_initial_segment(const Path& p, int d);
// Inverse map: the path starts at the reflected point P' and is reflected back.
Path unreflect_initial_segment(const Path& p, int d);

// Every weakly non-intersecting family with any connection, with its sign.
void enumerate_lgv_families(const PathModel& model, const std::vector<LatticePoint>& starts,
                            const std::vector<LatticePoint>& ends,
                            const std::function<void(const PathFamily&)>& visit);
LaurentPoly lgv_signed_sum(const PathModel& model, const std::vector<LatticePoint>& starts,
                           const std::vector<LatticePoint>& ends);
// det(path_gf(starts[i] -> ends[j])).
LaurentPoly lgv_determinant(const PathModel& model, const std::vector<LatticePoint>& starts,
                            const std::vector<LatticePoint>& ends);

// Column i of the tableau becomes the path from S_i (N >= lambda_1 columns).
// With check = false, the semistandard but not necessarily family-valid
// filling is mapped anyway (used to build forbidden configurations).
PathFamily tableau_to_paths(Family family, const Tableau& t, int n, int m, int N,
                            bool check = true);
// Principal hooks become paths from A_i / D_i.
PathFamily tableau_to_hook_paths(Family family, const Tableau& t, int n, int m,
                                 bool check = true);
// Inverse of both maps; throws InvalidFamily on any violated rule.
Tableau paths_to_tableau(Family family, const PathFamily& pf);

// Trapped positions of an even orthogonal family, ordered by x+y.
std::vector<LatticePoint> find_trapped_positions(const PathFamily& pf);
// Crossings of an o-horizontal step with a vertical pair: the crossed midpoints.
std::vector<LatticePoint> find_crossings(const PathFamily& pf);
// The sign-reversing local change at the site closest to the origin.
// Throws NoSite for a clean family.
PathFamily involution_step(const PathFamily& pf);

std::string render_ascii(const PathFamily& pf);
std::string render_svg(const PathFamily& pf);

}  // namespace skewchar
