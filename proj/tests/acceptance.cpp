// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <thread>

#include "skewchar/verify.hpp"

using namespace skewchar;

namespace {

struct Criterion {
    int id;
    const char* title;
    const char* suite;
    SuiteOptions opt;
};

SuiteOptions with(int n_lo, int n_hi, int m_lo, int m_hi, int box, int max_cells) {
    SuiteOptions o;
    o.n_lo = n_lo;
    o.n_hi = n_hi;
    o.m_lo = m_lo;
    o.m_hi = m_hi;
    o.box = box;
    o.max_cells = max_cells;
    return o;
}

}  // namespace

int main() {
    const int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    SuiteOptions lemmas = with(1, 3, 0, 0, 0, 0);
    lemmas.bound = 8;
    SuiteOptions reflection = with(1, 1, 0, 0, 0, 0);
    reflection.bound = 10;
    SuiteOptions weyl = with(1, 3, 0, 0, 0, 6);
    weyl.points = 20;
    weyl.seed = 20240601;

    std::vector<Criterion> criteria = {
        {1, "four-way agreement, lambda in 4^4, n<=3, m<=2", "four-way", with(1, 3, 0, 2, 4, 16)},
        {2, "lgv signed sum equals the oracle, |lambda|<=6, n<=2, m<=2", "lgv", with(1, 2, 0, 2, 6, 6)},
        {3, "single-path closed forms, |a|,|b|,|c|<=8, n<=3", "lemmas", lemmas},
        {4, "modified reflection bijection, c+f<=10", "reflection", reflection},
        {5, "E*H = I and the e/h convolution, n<=2", "algebra", with(0, 2, 0, 0, 0, 0)},
        {6, "non-skew characters equal weyl ratios, |lambda|<=6, n<=3", "weyl", weyl},
        {7, "value at ones, bar symmetry, N-independence", "sanity", with(1, 3, 0, 2, 4, 10)},
        {8, "o involution pairing, |lambda|<=5", "involution", with(1, 2, 0, 2, 5, 5)},
    };

    bool all = true;
    for (auto& c : criteria) {
        c.opt.jobs = jobs;
        const auto t0 = std::chrono::steady_clock::now();
        const SuiteReport r = run_suite(c.suite, c.opt);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && r.ok();
        std::printf("criterion %d %s: %s (%ld checks, %zu mismatches, %.1fs)\n", c.id, r.ok() ? "PASS" : "FAIL",
                    c.title, r.checks, r.mismatches.size(), secs);
        for (std::size_t i = 0; i < r.mismatches.size() && i < 5; ++i)
            std::fprintf(stderr, "  %s\n", r.mismatches[i].c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
