#include "skewchar/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "skewchar/errors.hpp"
#include "skewchar/formulas.hpp"
#include "skewchar/paths.hpp"
#include "skewchar/polymatrix.hpp"
#include "skewchar/tableaux.hpp"

namespace skewchar {

namespace {

struct CaseResult {
    long checks = 0;
    std::vector<std::string> mismatches;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) mismatches.push_back(what);
    }
};

// Runs fn(0..count-1) on a pool of `jobs` threads. Results land in case order,
// so the report does not depend on scheduling.
SuiteReport run_cases(const std::string& name, std::size_t count, int jobs,
                      const std::function<CaseResult(std::size_t)>& fn) {
    std::vector<CaseResult> results(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                results[i] = fn(i);
            } catch (const std::exception& e) {
                results[i].checks += 1;
                results[i].mismatches.push_back("case " + std::to_string(i) + " threw: " + e.what());
            }
        }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SuiteReport report{name, 0, {}};
    for (auto& r : results) {
        report.checks += r.checks;
        for (auto& m : r.mismatches) report.mismatches.push_back(std::move(m));
    }
    return report;
}

struct ShapeCase {
    Family family;
    Partition lam;
    Partition mu;
    int n;
    int m;

    std::string describe() const {
        std::string s = family_name(family) + " " + lam.to_string();
        if (!mu.empty()) s += "/" + mu.to_string();
        return s + " n=" + std::to_string(n) + " m=" + std::to_string(m);
    }
};

// Every admissible (lam, mu, n, m) of the option ranges. Schur cases take
// m = l(mu) and need l(lam) <= n; the others need l(mu) <= m, l(lam) <= n+m.
std::vector<ShapeCase> shape_cases(const std::vector<Family>& families, const SuiteOptions& opt) {
    std::vector<ShapeCase> out;
    const auto box = partitions_in_box(opt.box, opt.box);
    for (Family f : families)
        for (int n = opt.n_lo; n <= opt.n_hi; ++n) {
            if (f == Family::GL) {
                for (const auto& lam : box) {
                    if (lam.size() > opt.max_cells || lam.length() > n) continue;
                    for (const auto& mu : box)
                        if (lam.contains(mu)) out.push_back({f, lam, mu, n, mu.length()});
                }
                continue;
            }
            for (int m = opt.m_lo; m <= opt.m_hi; ++m)
                for (const auto& lam : box) {
                    if (lam.size() > opt.max_cells || lam.length() > n + m) continue;
                    for (const auto& mu : partitions_in_box(m, opt.box))
                        if (lam.contains(mu)) out.push_back({f, lam, mu, n, m});
                }
        }
    return out;
}

const std::vector<Family> kClassical = {Family::SP, Family::SO_ODD, Family::O_EVEN};

std::string mismatch(const std::string& where, const std::string& a_name, const LaurentPoly& a,
                     const std::string& b_name, const LaurentPoly& b) {
    return where + ": " + a_name + " = " + a.to_string() + " but " + b_name + " = " + b.to_string();
}

SuiteReport four_way(const SuiteOptions& opt) {
    const auto cases = shape_cases(kClassical, opt);
    return run_cases("four-way", cases.size(), opt.jobs, [&](std::size_t i) {
        const ShapeCase& c = cases[i];
        CaseResult r;
        const LaurentPoly want = character(c.family, c.lam, c.mu, c.n, c.m, Method::TABLEAUX);
        for (Method method : {Method::DUAL_JT, Method::JT, Method::GIAMBELLI}) {
            const LaurentPoly got = character(c.family, c.lam, c.mu, c.n, c.m, method);
            r.expect(got == want, mismatch(c.describe(), "tableaux", want, method_name(method), got));
        }
        return r;
    });
}

SuiteReport lgv(const SuiteOptions& opt) {
    const auto cases =
        shape_cases({Family::GL, Family::SP, Family::SO_ODD, Family::O_EVEN}, opt);
    return run_cases("lgv", cases.size(), opt.jobs, [&](std::size_t i) {
        const ShapeCase& c = cases[i];
        CaseResult r;
        const LaurentPoly want = character(c.family, c.lam, c.mu, c.n, c.m, Method::TABLEAUX);
        const LaurentPoly got = character(c.family, c.lam, c.mu, c.n, c.m, Method::LGV_PATHS);
        r.expect(got == want, mismatch(c.describe(), "tableaux", want, "lgv", got));
        return r;
    });
}

// Closed forms for single paths from (a,b) to (c, 2n+a+b-c), a+b even, both
// points strictly above y = x-1.
SuiteReport lemmas(const SuiteOptions& opt) {
    struct Start {
        int n, a, b;
    };
    std::vector<Start> starts;
    const int B = opt.bound;
    for (int n = opt.n_lo; n <= opt.n_hi; ++n)
        for (int a = -B; a <= B; ++a)
            for (int b = a; b <= B; b += 2) starts.push_back({n, a, b});

    return run_cases("lemmas", starts.size(), opt.jobs, [&](std::size_t i) {
        const auto [n, a, b] = starts[i];
        CaseResult r;
        const LatticePoint P{a, b};
        const auto sp = PathModel::relative(Family::SP, n, P);
        const auto so = PathModel::relative(Family::SO_ODD, n, P);
        const auto o = PathModel::relative(Family::O_EVEN, n, P);
        auto e = [n](int k) { return elementary_pm(k, n); };
        for (int c = -B; c <= B; ++c) {
            const int f = 2 * n + a + b - c;
            if (f < c) continue;
            const LatticePoint Q{c, f};
            const std::string at = "n=" + std::to_string(n) + " " + P.to_string() + "->" + Q.to_string();

            const LaurentPoly plain = e(c - a) - e(c - b - 2);
            r.expect(path_gf(sp, P, Q) == plain, "sp paths " + at);

            r.expect(path_gf_by_diag_count(so, P, Q, 0) == plain, "so paths, no diagonal, " + at);
            for (int k = 1; k <= 3; ++k)
                r.expect(path_gf_by_diag_count(so, P, Q, k) == e(c - b - k) - e(c - b - k - 2),
                         "so paths, " + std::to_string(k) + " diagonal, " + at);
            r.expect(path_gf(so, P, Q) == e(c - a) + e(c - b - 1), "so paths, all, " + at);

            r.expect(path_gf_by_diag_count(o, P, Q, 0) == plain, "o paths, no o-step, " + at);
            for (int k = 1; k <= 2; ++k) {
                const LaurentPoly want = b - a >= 2 ? e(c - b - 2 * k + 2) - e(c - b - 2 * k - 2)
                                                    : e(c - a - 2 * k) - e(c - b - 2 * k - 2);
                r.expect(path_gf_by_diag_count(o, P, Q, k) == want,
                         "o paths, " + std::to_string(k) + " o-steps, " + at);
            }
            const LaurentPoly all = b == a ? e(c - a) : e(c - a) + e(c - b);
            r.expect(path_gf(o, P, Q) == all, "o paths, all, " + at);
        }
        return r;
    });
}

// Paths from (0,2) touching y = x-2 against all paths from the reflected point (4,-2).
SuiteReport reflection(const SuiteOptions& opt) {
    const LatticePoint P{0, 2}, Pr{4, -2};
    const int d = -2;
    const int n_labels = opt.bound / 2 + 1;
    const auto labels = PathModel::relative(Family::SP, n_labels, P);
    // Schur relative model: no boundary, so it enumerates every up-right path.
    const auto free_model = PathModel::relative(Family::GL, 2 * opt.bound + 4, P);
    std::vector<LatticePoint> ends;
    for (int c = 0; c <= opt.bound; ++c)
        for (int f = 2; c + f <= opt.bound; ++f)
            if (f > c + d) ends.push_back({c, f});

    return run_cases("reflection", ends.size(), opt.jobs, [&](std::size_t i) {
        const LatticePoint Q = ends[i];
        CaseResult r;
        std::vector<Path> images, direct;
        std::vector<Monomial> w_images, w_direct;
        enumerate_paths(free_model, P, Q, [&](const Path& p) {
            const auto v = p.vertices();
            if (std::none_of(v.begin(), v.end(), [&](LatticePoint q) { return q.y == q.x + d; }))
                return true;
            const Path img = reflect_initial_segment(p, d);
            r.expect(img.start == Pr, "image of " + p.to_string() + " starts at " + img.start.to_string());
            r.expect(img.weight_exponents(labels) == p.weight_exponents(labels),
                     "weight changed for " + p.to_string());
            r.expect(unreflect_initial_segment(img, d) == p, "inverse fails on " + p.to_string());
            images.push_back(img);
            w_images.push_back(p.weight_exponents(labels));
            return true;
        });
        enumerate_paths(free_model, Pr, Q, [&](const Path& p) {
            direct.push_back(p);
            w_direct.push_back(p.weight_exponents(labels));
            return true;
        });
        std::sort(images.begin(), images.end());
        std::sort(direct.begin(), direct.end());
        std::sort(w_images.begin(), w_images.end());
        std::sort(w_direct.begin(), w_direct.end());
        r.expect(images == direct, "image set differs at end " + Q.to_string());
        r.expect(w_images == w_direct, "weight multiset differs at end " + Q.to_string());
        return r;
    });
}

SuiteReport algebra(const SuiteOptions& opt) {
    CaseResult r;
    for (int n = opt.n_lo; n <= opt.n_hi; ++n) {
        for (int N = 1; N <= 6; ++N)
            for (int m = 0; m <= 3; ++m)
                for (int k = 0; k <= 2; ++k)
                    for (int t = -1; t <= 2; ++t) {
                        const auto prod = build_E_matrix(N, m, k, t, n) * build_H_matrix(N, m, k, t, n);
                        r.expect(prod == PolyMatrix::identity(N, n),
                                 "E*H != I for N=" + std::to_string(N) + " m=" + std::to_string(m) +
                                     " k=" + std::to_string(k) + " t=" + std::to_string(t) +
                                     " n=" + std::to_string(n));
                    }
        for (int r_ = 0; r_ <= 2 * n + 2; ++r_) {
            LaurentPoly s(n);
            for (int k = 0; k <= r_; ++k) {
                const LaurentPoly term = elementary_pm(r_ - k, n) * complete_pm(k, n);
                if (k % 2) s -= term;
                else s += term;
            }
            r.expect(s == (r_ == 0 ? LaurentPoly::constant(n, 1) : LaurentPoly(n)),
                     "convolution fails for r=" + std::to_string(r_) + " n=" + std::to_string(n));
        }
    }
    SuiteReport out{"algebra", r.checks, std::move(r.mismatches)};
    return out;
}

// mu empty, m = 0: every method against the Weyl ratio at seeded random points.
SuiteReport weyl(const SuiteOptions& opt) {
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<int> num(1, 12), den(1, 7), sgn(0, 1);
    CaseResult r;
    for (int n = opt.n_lo; n <= opt.n_hi; ++n)
        for (const auto& lam : partitions_in_box(n, opt.max_cells)) {
            if (lam.size() > opt.max_cells) continue;
            for (Family f : {Family::GL, Family::SP, Family::SO_ODD, Family::O_EVEN}) {
                const std::string where = family_name(f) + " " + lam.to_string() + " n=" + std::to_string(n);
                std::vector<std::pair<Method, LaurentPoly>> values;
                for (Method method : {Method::TABLEAUX, Method::DUAL_JT, Method::JT, Method::GIAMBELLI}) {
                    LaurentPoly v = character(f, lam, Partition(), n, 0, method);
                    // so is compared in y with x = y^2.
                    if (f == Family::SO_ODD) v = scale_exponents(v, 2);
                    values.emplace_back(method, std::move(v));
                }
                for (int p = 0; p < opt.points; ++p) {
                    std::vector<mpq_class> y;
                    mpq_class want;
                    for (int attempt = 0;; ++attempt) {
                        y.clear();
                        for (int i = 0; i < n; ++i) {
                            mpq_class v(num(rng) * (sgn(rng) ? 1 : -1), den(rng));
                            v.canonicalize();
                            y.push_back(v);
                        }
                        try {
                            want = weyl_eval(f, lam, y);
                            break;
                        } catch (const DegeneratePoint&) {
                            if (attempt > 100) throw;
                        }
                    }
                    for (const auto& [method, v] : values) {
                        const mpq_class got = poly_eval(v, y);
                        r.expect(got == want, where + " " + method_name(method) + ": " + got.get_str() +
                                                  " vs weyl " + want.get_str());
                    }
                }
            }
        }
    return SuiteReport{"weyl", r.checks, std::move(r.mismatches)};
}

SuiteReport sanity(const SuiteOptions& opt) {
    const auto cases = shape_cases(kClassical, opt);
    return run_cases("sanity", cases.size(), opt.jobs, [&](std::size_t i) {
        const ShapeCase& c = cases[i];
        CaseResult r;
        const int lo = c.family == Family::O_EVEN ? std::max(c.lam[1], 1) : c.lam[1];
        const LaurentPoly v = dual_jacobi_trudi(c.family, c.lam, c.mu, c.n, c.m, lo);
        const std::vector<mpq_class> ones(static_cast<std::size_t>(c.n), 1);
        const mpz_class count = count_tableaux(c.family, SkewShape(c.lam, c.mu), c.n, c.m);
        r.expect(poly_eval(v, ones) == count, c.describe() + ": value at ones differs from tableau count " +
                                                  count.get_str());
        r.expect(bar_involution(v) == v, c.describe() + ": not fixed by x -> 1/x");
        for (int extra = 1; extra <= 2; ++extra) {
            const LaurentPoly w = dual_jacobi_trudi(c.family, c.lam, c.mu, c.n, c.m, lo + extra);
            r.expect(w == v, mismatch(c.describe(), "N=" + std::to_string(lo), v,
                                      "N=" + std::to_string(lo + extra), w));
        }
        return r;
    });
}

// Signed columnwise families for o: dirty ones cancel in pairs, clean ones are the tableaux.
SuiteReport involution(const SuiteOptions& opt) {
    const auto cases = shape_cases({Family::O_EVEN}, opt);
    return run_cases("involution", cases.size(), opt.jobs, [&](std::size_t i) {
        const ShapeCase& c = cases[i];
        CaseResult r;
        const std::string where = c.describe();
        const auto model = PathModel::columnwise(Family::O_EVEN, c.n, c.m);
        const auto ep = columnwise_endpoints(Family::O_EVEN, c.lam, c.mu, c.n, c.m, c.lam[1]);
        std::vector<std::string> clean;
        std::vector<Monomial> clean_weights;
        LaurentPoly dirty(c.n);
        enumerate_lgv_families(model, ep.starts, ep.ends, [&](const PathFamily& pf) {
            if (pf.strongly_non_intersecting() && find_trapped_positions(pf).empty()) {
                r.expect(pf.sign() == 1, where + ": clean family with odd connection");
                clean.push_back(paths_to_tableau(Family::O_EVEN, pf).to_string());
                clean_weights.push_back(pf.weight_exponents());
                return;
            }
            const PathFamily g = involution_step(pf);
            r.expect(g.sign() == -pf.sign(), where + ": involution kept the sign");
            r.expect(g.weight_exponents() == pf.weight_exponents(), where + ": involution changed the weight");
            r.expect(g.weakly_non_intersecting(), where + ": image shares a vertex");
            r.expect(!(g.strongly_non_intersecting() && find_trapped_positions(g).empty()),
                     where + ": image is clean");
            r.expect(involution_step(g) == pf, where + ": involution is not an involution");
            dirty += pf.weight();
        });
        r.expect(dirty.is_zero(), where + ": dirty families leave " + dirty.to_string());

        std::vector<std::string> tabs;
        std::vector<Monomial> tab_weights;
        enumerate_tableaux(Family::O_EVEN, SkewShape(c.lam, c.mu), c.n, c.m, [&](const Tableau& t) {
            tabs.push_back(t.to_string());
            const LaurentPoly w = tableau_weight(Family::O_EVEN, t, c.n);
            tab_weights.push_back(w.terms().begin()->first);
            return true;
        });
        std::sort(clean.begin(), clean.end());
        std::sort(tabs.begin(), tabs.end());
        std::sort(clean_weights.begin(), clean_weights.end());
        std::sort(tab_weights.begin(), tab_weights.end());
        r.expect(clean.size() == tabs.size(), where + ": " + std::to_string(clean.size()) +
                                                  " clean families vs " + std::to_string(tabs.size()) +
                                                  " tableaux");
        r.expect(clean == tabs, where + ": clean families are not the tableaux");
        r.expect(clean_weights == tab_weights, where + ": weight multisets differ");
        return r;
    });
}

const std::map<std::string, SuiteReport (*)(const SuiteOptions&)>& registry() {
    static const std::map<std::string, SuiteReport (*)(const SuiteOptions&)> r = {
        {"four-way", four_way}, {"lgv", lgv},     {"lemmas", lemmas}, {"reflection", reflection},
        {"algebra", algebra},   {"weyl", weyl},   {"sanity", sanity}, {"involution", involution},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"four-way", "lgv",  "lemmas", "reflection",
                                                   "algebra",  "weyl", "sanity", "involution"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    auto it = registry().find(name);
    if (it == registry().end()) throw PreconditionError("unknown suite '" + name + "'");
    return it->second(opt);
}

std::string SuiteReport::to_text() const {
    std::ostringstream out;
    out << "suite " << suite << ": " << checks << " checks, " << mismatches.size() << " mismatches\n";
    for (const auto& m : mismatches) out << "  mismatch: " << m << "\n";
    return out.str();
}

std::string SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["checks"] = checks;
    j["mismatches"] = mismatches;
    return j.dump();
}

}  // namespace skewchar
