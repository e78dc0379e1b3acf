// Command-line front end: compute, count, paths, verify.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "skewchar/errors.hpp"
#include "skewchar/formulas.hpp"
#include "skewchar/io.hpp"
#include "skewchar/paths.hpp"
#include "skewchar/tableaux.hpp"
#include "skewchar/verify.hpp"

using namespace skewchar;

namespace {

enum Exit { OK = 0, MISMATCH = 1, USAGE = 2, INTERNAL = 3 };

struct Args {
    std::string family = "sp";
    std::string shape;
    int n = 1;
    int m = 0;
    std::string n_range = "1..3";
    std::string m_range = "0..2";
    std::string method = "dual-jt";
    std::optional<int> N;
    std::string format = "text";
    std::string out;
    int jobs = 1;
    unsigned seed = 1;
    std::string suite = "four-way";
    std::optional<int> max_cells;
    std::string layout = "columnwise";
    int limit = 20;
};

// Safety cap on tableau enumeration; the environment can lower it further.
int max_cells_cap() {
    if (const char* env = std::getenv("SKEWCHAR_MAX_CELLS")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw PreconditionError(std::string("SKEWCHAR_MAX_CELLS is not an integer: ") + env);
        }
    }
    return 24;
}

void check_oracle_size(const SkewShape& s) {
    const int cap = max_cells_cap();
    if (s.size() > cap)
        throw PreconditionError("shape has " + std::to_string(s.size()) + " cells, above the cap of " +
                                std::to_string(cap) + " (SKEWCHAR_MAX_CELLS)");
}

void emit(const Args& a, const std::string& text) {
    if (a.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(a.out);
    if (!f) throw std::runtime_error("cannot write " + a.out);
    f << text;
}

int run_compute(const Args& a) {
    const Family f = parse_family(a.family);
    const SkewShape s = parse_shape(a.shape);
    const Method method = parse_method(a.method);
    if (method == Method::TABLEAUX || method == Method::LGV_PATHS) check_oracle_size(s);
    CharacterRecord r{f, s.outer(), s.inner(), a.n, a.m, method, character(f, s.outer(), s.inner(), a.n, a.m, method, a.N)};
    emit(a, a.format == "json" ? record_to_json(r) + "\n" : r.value.to_string() + "\n");
    return OK;
}

int run_count(const Args& a) {
    const Family f = parse_family(a.family);
    const SkewShape s = parse_shape(a.shape);
    check_oracle_size(s);
    const auto c = count_tableaux(f, s, a.n, a.m);
    emit(a, a.format == "json" ? "{\"count\":" + std::to_string(c) + "}\n" : std::to_string(c) + "\n");
    return OK;
}

// One ASCII and one SVG file per tableau, up to --limit of them.
int run_paths(const Args& a) {
    const Family f = parse_family(a.family);
    const SkewShape s = parse_shape(a.shape);
    check_oracle_size(s);
    const bool hook = a.layout == "hookwise";
    if (!hook && a.layout != "columnwise") throw PreconditionError("unknown layout '" + a.layout + "'");
    if (hook && f == Family::GL) throw PreconditionError("the hookwise layout needs sp, so or o");
    const std::filesystem::path dir = a.out.empty() ? "paths_out" : a.out;
    std::filesystem::create_directories(dir);
    const int N = a.N.value_or(s.outer()[1]);
    int written = 0;
    enumerate_tableaux(f, s, a.n, a.m, [&](const Tableau& t) {
        const PathFamily pf = hook ? tableau_to_hook_paths(f, t, a.n, a.m) : tableau_to_paths(f, t, a.n, a.m, N);
        char stem[32];
        std::snprintf(stem, sizeof stem, "family_%04d", written + 1);
        std::ofstream(dir / (std::string(stem) + ".txt")) << t.to_string() << "\n\n" << render_ascii(pf);
        std::ofstream(dir / (std::string(stem) + ".svg")) << render_svg(pf);
        return ++written < a.limit;
    });
    std::cout << written << " path families written to " << dir.string() << "\n";
    return OK;
}

int run_verify(const Args& a) {
    SuiteOptions opt;
    std::tie(opt.n_lo, opt.n_hi) = parse_range(a.n_range);
    std::tie(opt.m_lo, opt.m_hi) = parse_range(a.m_range);
    opt.jobs = std::max(1, a.jobs);
    opt.seed = a.seed;
    const int cap = max_cells_cap();
    opt.max_cells = std::min(a.max_cells.value_or(cap), cap);
    std::vector<std::string> suites;
    if (a.suite == "all") suites = suite_names();
    else suites.push_back(a.suite);

    std::string text;
    bool ok = true;
    for (const auto& name : suites) {
        const SuiteReport r = run_suite(name, opt);
        ok = ok && r.ok();
        text += a.format == "json" ? r.to_json() + "\n" : r.to_text();
    }
    emit(a, text);
    return ok ? OK : MISMATCH;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact skew symplectic and orthogonal characters"};
    app.require_subcommand(1);
    Args a;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--family", a.family, "schur, sp, so or o")->check(CLI::IsMember({"schur", "gl", "sp", "so", "o"}));
        sub->add_option("--shape", a.shape, "OUTER[/INNER], e.g. 4,4,2/1")->required();
        sub->add_option("--n", a.n, "number of variables")->check(CLI::NonNegativeNumber);
        sub->add_option("--m", a.m, "the m of the (n,m) tableaux")->check(CLI::NonNegativeNumber);
        sub->add_option("--N", a.N, "matrix size / number of columns override");
        sub->add_option("--format", a.format)->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", a.out, "output file (directory for paths)");
    };

    auto* compute = app.add_subcommand("compute", "compute one character");
    common(compute);
    compute->add_option("--method", a.method)->check(CLI::IsMember({"tableaux", "dual-jt", "jt", "giambelli", "lgv"}));

    auto* count = app.add_subcommand("count", "count tableaux");
    common(count);

    auto* paths = app.add_subcommand("paths", "draw the path family of each tableau");
    common(paths);
    paths->add_option("--layout", a.layout, "columnwise or hookwise");
    paths->add_option("--limit", a.limit, "at most this many families")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    verify->add_option("--suite", a.suite)->check(CLI::IsMember(suite_choices));
    verify->add_option("--n", a.n_range, "range such as 1..3");
    verify->add_option("--m", a.m_range, "range such as 0..2");
    verify->add_option("--max-cells", a.max_cells, "largest |lambda| swept");
    verify->add_option("--jobs", a.jobs)->check(CLI::PositiveNumber);
    verify->add_option("--seed", a.seed, "seed for the random evaluation points");
    verify->add_option("--format", a.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", a.out, "report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? OK : USAGE;
    }

    try {
        if (*compute) return run_compute(a);
        if (*count) return run_count(a);
        if (*paths) return run_paths(a);
        return run_verify(a);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return USAGE;
    } catch (const ContainmentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return USAGE;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return USAGE;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return INTERNAL;
    }
}
