// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "schurpos/json_io.hpp"
#include "schurpos/littlewood_richardson.hpp"
#include "schurpos/plethysm.hpp"
#include "schurpos/positivity.hpp"
#include "schurpos/verify.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace schurpos;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        ok = false;
        detail << " [" << why << "]";
    }
    void sweeps(std::initializer_list<verify::SweepReport> reports) {
        for (const auto& r : reports) {
            detail << ' ' << r.name << '=' << r.checked;
            if (!r.passed()) fail(r.name + ": " + *r.counterexample);
        }
    }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << title << " --" << o.detail.str() << std::endl;
}

SchurExpansion paper_sxp_example() {
    SchurExpansion f(10);
    for (const auto& [p, c] : std::initializer_list<std::pair<Partition, int>>{
             {Partition{6, 4}, 1},     {Partition{6, 3, 1}, -1},    {Partition{6, 2, 2}, 1},    {Partition{5, 5}, -1},
             {Partition{5, 3, 1, 1}, 1}, {Partition{5, 2, 2, 1}, -1}, {Partition{4, 4, 2}, 1},    {Partition{4, 4, 1, 1}, -1},
             {Partition{4, 3, 3}, -1},  {Partition{4, 2, 2, 2}, 1},  {Partition{3, 3, 3, 1}, 1}, {Partition{3, 3, 2, 2}, -1}}) {
        f.add(p, c);
    }
    return f;
}

void criterion1() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto f = sxp_plethysm(2, Partition{3, 2});
    const auto ms = ms_since(t0);
    if (!(f == paper_sxp_example())) o.fail("expansion differs from the 12 listed terms");
    if (ms >= 1000) o.fail("too slow");
    o.detail << " terms=" << f.size() << " time=" << ms << "ms";
    report(1, "p_2 o s_(3,2) equals the 12 signed terms", o);
}

void criterion2() {
    Outcome o;
    const std::vector<Partition> factors{Partition{3, 2}, Partition{1, 1}, Partition{1, 1}};
    lr_bound(factors);  // warm-up
    const auto t0 = Clock::now();
    const auto theta = lr_bound(factors);
    const auto ms = ms_since(t0);

    CornerSet corners{Point{0, 0}};
    for (const auto& mu : factors) corners = minkowski_sum(corners, outer_corners(mu));
    const CornerSet listed{{0, 6}, {1, 4}, {2, 2}, {2, 5}, {3, 3}, {4, 1}, {3, 4}, {4, 2}, {5, 0}};

    if (theta != Partition{5, 4, 2, 2, 1, 1}) o.fail("theta = " + theta.to_string());
    if (corners != listed) o.fail("Minkowski sum = " + json_io::encode(corners).dump());
    if (ms >= 1) o.fail("too slow");
    o.detail << " theta=" << theta.to_string() << " points=" << corners.size() << " time=" << ms << "ms";
    report(2, "lr_bound([(3,2),(1,1),(1,1)]) and its 9-point corner sum", o);
}

void criterion3() {
    Outcome o;
    const auto got = ideal_complement(CornerSet{{1, 3}, {0, 4}, {2, 0}});
    if (got != Partition{2, 2, 2, 1}) o.fail("got " + got.to_string());
    o.detail << " result=" << got.to_string();
    report(3, "ideal_complement({(1,3),(0,4),(2,0)}) = (2,2,2,1)", o);
}

void criterion4() {
    Outcome o;
    const auto naive = sxp_upper_bound(2, Partition{3, 2}, false).xi1;
    const auto refined = sxp_upper_bound(2, Partition{3, 2}).intersection;
    if (naive != Partition{10, 5, 3, 2, 2, 1, 1, 1, 1, 1}) o.fail("naive = " + naive.to_string());
    if (refined != Partition{8, 5, 3, 2, 1, 1, 1}) o.fail("refined = " + refined.to_string());
    o.detail << " naive=" << naive.to_string() << " refined=" << refined.to_string();
    report(4, "upper bound pipeline for n=2, lambda=(3,2)", o);
}

void criterion5() {
    Outcome o;
    const auto t0 = Clock::now();
    PlethysmOptions options;
    options.cache = &CharacterCache::shared();
    const auto s = verify::pruning_stats(Partition{1, 1}, Partition{4, 2, 2}, options);
    const auto ms = ms_since(t0);
    if (s.total != 231 || s.after_filter != 142 || s.actual_support != 40) o.fail("library stats differ");

    // Same numbers through the command line front end.
    const std::string command = std::string(SCHURPOS_CLI_PATH) + " --no-timing stats '(1,1)' '(4,2,2)'";
    std::string out;
    if (FILE* pipe = ::popen(command.c_str(), "r")) {
        char buf[1024];
        while (auto n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
        if (::pclose(pipe) != 0) o.fail("cli exit status");
    } else {
        o.fail("cannot run cli");
    }
    try {
        const auto cli = json_io::Json::parse(out).at("output");
        if (cli.at("total") != "231" || cli.at("after_filter") != "142" || cli.at("actual_support") != "40") {
            o.fail("cli output " + cli.dump());
        }
    } catch (const std::exception& e) {
        o.fail(std::string("cli output unreadable: ") + e.what());
    }
    if (ms >= 60000) o.fail("too slow");
    o.detail << " total=" << s.total << " after_filter=" << s.after_filter << " actual_support=" << s.actual_support
             << " time=" << ms << "ms";
    report(5, "stats (1,1) (4,2,2) = 231/142/40", o);
}

void criterion6() {
    Outcome o;
    int checked = 0;
    for (std::int64_t n = 2; n <= 3; ++n) {
        for (std::int64_t size = 0; size <= 4; ++size) {
            for (const auto& lambda : partitions_of(size)) {
                const auto f = sxp_plethysm(n, lambda);
                const int sign = (lambda.size() * (n - 1)) % 2 == 0 ? 1 : -1;
                ++checked;
                if (f.coeff(scale(lambda, n)) != 1) o.fail("<s_{n lambda}> for " + lambda.to_string());
                if (f.coeff(repeat_union(lambda, n)) != sign) o.fail("<s_{u^n lambda}> for " + lambda.to_string());
            }
        }
    }
    o.detail << " cases=" << checked;
    report(6, "closed forms for n lambda and the n-fold union, |lambda|<=4, n in {2,3}", o);
}

void criterion7(CharacterCache& cache) {
    Outcome o;
    const auto t0 = Clock::now();
    o.sweeps({verify::product_vs_oracle(10, cache), verify::sxp_vs_oracle(3, 5, 15, cache),
              verify::plethysm_vs_oracle(12, cache)});
    const auto ms = ms_since(t0);
    if (ms >= 600000) o.fail("too slow");
    o.detail << " time=" << ms << "ms";
    report(7, "engine agrees with the power-sum oracle", o);
}

void criterion8(CharacterCache& cache) {
    Outcome o;
    o.sweeps({verify::lr_bound_soundness(10), verify::sxp_bounds_soundness(3, 5, 15),
              verify::plethysm_filter_soundness(12, cache)});
    report(8, "filter soundness sweeps and trivial/sign multiplicities", o);
}

void criterion9(CharacterCache& cache) {
    Outcome o;
    o.sweeps({verify::quotient_bijection(14, 4), verify::quotient_size_formula(16, 5), verify::corner_round_trip(12),
              verify::character_orthogonality(9, cache)});
    report(9, "structural round trips", o);
}

template <typename F>
void guarded(int id, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        Outcome o;
        o.fail(std::string("exception: ") + e.what());
        report(id, "aborted", o);
    }
}

}  // namespace

int main() {
    CharacterCache cache;
    guarded(1, criterion1);
    guarded(2, criterion2);
    guarded(3, criterion3);
    guarded(4, criterion4);
    guarded(5, criterion5);
    guarded(6, criterion6);
    guarded(7, [&] { criterion7(cache); });
    guarded(8, [&] { criterion8(cache); });
    guarded(9, [&] { criterion9(cache); });
    std::cout << (failures == 0 ? "all 9 criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
