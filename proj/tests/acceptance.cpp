// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "fox_oracle.hpp"
#include "oracles.hpp"
#include "veer/bounds.hpp"
#include "veer/cli.hpp"
#include "veer/corpus.hpp"

using namespace veer;

namespace {

// Pinned tolerances.
constexpr double kTableTol = 1e-6;
constexpr double kBoundTol = 0.01;
constexpr double kFaceFloor = 17.944 - 1e-3;
constexpr double kOracleTol = 1e-3;
constexpr double kBelowMu4Seconds = 10;
constexpr double kFaceSeconds = 600;
constexpr double kPropertySeconds = 60;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Largest real root in (lo, hi) of a polynomial given low to high, by bisection in long double.
long double bisect_root(const std::vector<long double>& c, long double lo, long double hi) {
    auto f = [&](long double x) {
        long double s = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
        return s;
    };
    const bool neg_lo = f(lo) < 0;
    for (int i = 0; i < 200; ++i) {
        long double m = (lo + hi) / 2;
        ((f(m) < 0) == neg_lo ? lo : hi) = m;
    }
    return (lo + hi) / 2;
}

struct Targets {
    long double mu2 = (3 + std::sqrt(5.0L)) / 2;
    long double two_sqrt3 = (4 + std::sqrt(12.0L)) / 2;
    long double lehmer9 = std::pow(bisect_root({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}, 1.1L, 1.3L), 9.0L);
    long double five = (5 + std::sqrt(21.0L)) / 2;
    long double lt3 = std::pow(bisect_root({1, -1, -1, -1, 1}, 1.5L, 2.0L), 3.0L);
    long double six = (6 + std::sqrt(32.0L)) / 2;
    long double mu4 = (7 + std::sqrt(45.0L)) / 2;
};

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << name;
    if (!o.detail.empty()) std::cout << " : " << o.detail;
    std::cout << std::endl;
    failures += !o.pass;
}

long double normalized_value(const DilatationReport& r) {
    if (!r.normalized) return std::nanl("");
    return mpq_class(r.normalized->midpoint()).get_d();
}

Outcome below_mu4() {
    const Targets T;
    const std::vector<std::pair<std::string, long double>> rows = {
        {"cPcbbbiht_12", T.mu2},          {"cPcbbbdxm_10", T.mu2},
        {"dLQbccchhfo_122", T.two_sqrt3}, {"dLQbccchhsj_122", T.two_sqrt3},
        {"dLQacccjsnk_200", T.lehmer9},   {"eLMkbcdddhhhml_1221", T.five},
        {"eLMkbcdddhhhdu_1221", T.five},  {"eLPkaccddjnkaj_2002", T.lt3},
        {"eLPkbcdddhrrcv_1200", T.lt3},   {"eLMkbcdddhhqqa_1220", T.six},
        {"eLMkbcdddhhqxh_1220", T.six},   {"fLMPcbcdeeehhhhkn_12211", T.six},
        {"fLMPcbcdeeehhhhvc_12211", T.six}};
    Outcome o;
    const auto t0 = Clock::now();
    long double worst = 0;
    for (const auto& [sig, target] : rows) {
        auto r = dilatation_b1(build_veering(sig));
        const long double err = std::fabs(normalized_value(r) - target);
        worst = std::max(worst, err);
        if (!(err <= kTableTol)) {
            o.pass = false;
            o.detail += fmt::format("{} off by {:.3g}; ", sig, static_cast<double>(err));
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= kBelowMu4Seconds) o.pass = false;
    o.detail += fmt::format("13 sigs, max error {:.2e}, {:.2f} s", static_cast<double>(worst), dt);
    return o;
}

Outcome mu4_group() {
    const Targets T;
    Outcome o;
    long double worst = 0;
    for (const auto& e : kCorpus) {
        if (e.group != CorpusGroup::Mu4) continue;
        auto r = dilatation_b1(build_veering(e.sig));
        const long double err = std::fabs(normalized_value(r) - T.mu4);
        worst = std::max(worst, err);
        if (!(err <= kTableTol)) {
            o.pass = false;
            o.detail += fmt::format("{} off by {:.3g}; ", e.sig, static_cast<double>(err));
        }
    }
    const int b1 = homology(build_veering("fLLQcbeddeehhbghh_01110")).b1;
    if (b1 != 2) o.pass = false;
    o.detail += fmt::format("5 sigs, max error {:.2e}; fLLQcbeddeehhbghh_01110 b1 = {}", static_cast<double>(worst), b1);
    return o;
}

Outcome filter() {
    const Targets T;
    std::ifstream in(std::string(VEER_DATA_DIR) + "/betti_one.txt");
    auto items = read_sig_list(in);
    auto results = run_batch(items, 4, {});
    int below = 0, at = 0, kept = 0;
    Outcome o;
    for (const auto& r : results) {
        if (!r.ok) {
            o.pass = false;
            o.detail += fmt::format("{} failed: {}; ", r.item.sig, r.error);
            continue;
        }
        const long double v = normalized_value(r.report);
        if (!(v < 6.86L)) continue;
        ++kept;
        below += v < T.mu4 - 1e-6L;
        at += std::fabs(v - T.mu4) <= 1e-6L;
    }
    // same rows through the command line front end
    std::ostringstream out, err;
    run_command({"filter", std::string(VEER_DATA_DIR) + "/betti_one.txt", "--below", "6.86", "--jobs", "4"}, out, err);
    int cli_rows = 0;
    for (char c : out.str()) cli_rows += c == '\n';
    if (items.size() != 18 || below != 13 || at != 5 || cli_rows != kept) o.pass = false;
    o.detail += fmt::format("{} inputs, {} kept, {} below mu^4, {} at mu^4, cli rows {}", items.size(), kept, below, at,
                            cli_rows);
    return o;
}

Outcome face_bound() {
    Outcome o;
    for (const auto& e : kCorpus) {
        if (e.group != CorpusGroup::Betti2Fallback) continue;
        const auto t0 = Clock::now();
        auto r = min_dilatation_b2(build_veering(e.sig));
        const double dt = seconds_since(t0);
        const double gap = std::fabs(r.value - r.oracle);
        const bool ok = r.value >= kFaceFloor && dt < kFaceSeconds && gap <= kOracleTol;
        o.pass = o.pass && ok;
        std::cout << fmt::format("  {} {} value {:.4f} oracle {:.4f} gap {:.1e} gcd {} {:.1f} s\n", ok ? "ok" : "BAD",
                                 e.sig.substr(0, 12), r.value, r.oracle, gap, r.gcd_norms, dt);
    }
    o.detail = "8 sigs";
    return o;
}

Outcome bound_numerics() {
    Outcome o;
    const double mu2 = (3 + std::sqrt(5.0)) / 2;
    auto b = bound_eiirp(6.86);
    const std::vector<std::pair<double, double>> pairs = {
        {b.components[4], 16.966}, {b.components[5], 16.975}, {b.components[6], 14.023}, {b.components[0], 16.187},
        {b.components[1], 16.670}, {b.components[2], 16.707}, {b.components[3], 16.898}};
    for (const auto& [got, want] : pairs)
        if (!(std::fabs(got - want) <= kBoundTol)) {
            o.pass = false;
            o.detail += fmt::format("{:.4f} vs {}; ", got, want);
        }
    const double at = bound_at(mu2), single = bound_single_hook(mu2), eight = bound_single_hook(mu2 * mu2);
    if (std::floor(at) != 454 || std::fabs(single - 3.43) > 0.005 || std::floor(eight) != 23) o.pass = false;
    o.detail += fmt::format("F1 {:.4f} F2 {:.4f} log3 {:.4f} AT(mu^2) {:.4f} half mu^4 {:.4f} half mu^8 {:.4f}",
                            b.components[4], b.components[5], b.components[6], at, single, eight);
    return o;
}

Outcome properties() {
    Outcome o;
    const auto t0 = Clock::now();
    int a = 0, bb = 0, c = 0, d = 0, e_fail = 0, deep_count = 0, f = 0, sigs = 0;
    for (const auto& e : kCorpus) {
        ++sigs;
        auto v = build_veering(e.sig);
        auto g = build_dual_graph(v);
        auto sectors = build_sectors(v, g);
        // (a) branch cycles meet both colours
        for (const auto& cyc : branch_cycles(g)) {
            bool red = false, blue = false;
            for (int edge : cyc) (g.vertex_color[g.head[edge]] == Color::Red ? red : blue) = true;
            a += !(red && blue);
        }
        for (const auto& s : sectors)
            for (int side = 0; side < 2; ++side) {
                // (b) prefix resolution connected
                bb += components(resolve(g, prefix_path(s, side))).count != 1;
                // (c) every non-deep hook resolution connected
                for (int k = 2; k <= s.side[side].delta(); ++k)
                    c += components(resolve(g, hook_path(s, side, k))).count != 1;
                // (e) deep hooks of m003 disconnect
                if (e.sig == "cPcbbbdxm_10") {
                    auto h = hook_path(s, side, 1);
                    if (!h.deep) continue;
                    ++deep_count;
                    e_fail += components(resolve(g, h)).count == 1;
                }
            }
        // (d) m003 predicate
        d += m003_predicate(g, sectors) != (e.sig == "cPcbbbdxm_10");
        // (f) tetrahedron count against half the squared normalized dilatation
        if (homology(v).b1 == 1) f += !(v.n <= bound_single_hook(dilatation_b1(v).value));
    }
    const double dt = seconds_since(t0);
    o.pass = a == 0 && bb == 0 && c == 0 && d == 0 && e_fail == 0 && deep_count > 0 && f == 0 && dt < kPropertySeconds;
    o.detail = fmt::format("{} sigs; violations a={} b={} c={} d={} e={} (of {} deep hooks) f={}; {:.2f} s", sigs, a, bb,
                           c, d, e_fail, deep_count, f, dt);
    return o;
}

Outcome alexander_m003() {
    auto p = alexander_polynomial(build_veering("cPcbbbdxm_10"));
    const bool ok = p.equal_up_to_unit(parse_laurent("t^2 - 3*t + 1", {"t"}));
    return {ok, "computed " + p.normalized().to_string({"t"})};
}

Outcome tree_independence() {
    Outcome o;
    int checked = 0;
    for (const auto& e : kCorpus) {
        auto v = build_veering(e.sig);
        ++checked;
        const bool same = alexander_polynomial(v, TreeChoice::Bfs) == alexander_polynomial(v, TreeChoice::Dfs) &&
                          taut_polynomial(v, TreeChoice::Bfs) == taut_polynomial(v, TreeChoice::Dfs);
        if (!same) {
            o.pass = false;
            o.detail += std::string(e.sig) + " differs; ";
        }
    }
    o.detail += fmt::format("{} sigs, Alexander and taut polynomials", checked);
    return o;
}

Outcome fox() {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> len(0, 12), gen(0, 2), sgn(0, 1);
    const std::vector<Exponent> cls = {{1, 0}, {0, 1}, {2, -1}};
    int bad = 0;
    for (int it = 0; it < 200; ++it) {
        Word w;
        for (int i = len(rng); i > 0; --i) w.push_back({gen(rng), sgn(rng) ? 1 : -1});
        Exponent total(2, 0);
        for (const auto& l : w)
            for (int i = 0; i < 2; ++i) total[i] += l.exp * cls[l.gen][i];
        LaurentPoly lhs(2);
        for (int g = 0; g < 3; ++g) {
            auto d = fox_derivative(w, g, cls);
            bad += !(d == oracle::fox_oracle(w, g, cls, 2));
            lhs += d * (LaurentPoly::monomial(cls[g], 1) - LaurentPoly::constant(2, 1));
        }
        bad += !(lhs == LaurentPoly::monomial(total, 1) - LaurentPoly::constant(2, 1));
    }
    return {bad == 0, fmt::format("200 words, {} mismatches", bad)};
}

Outcome sysolve_oracle() {
    std::mt19937 rng(4242);
    int tested = 0;
    const int agree = oracle::sysolve_trials(rng, 100, &tested);
    return {agree == tested && tested == 100, fmt::format("{}/{} systems agree within 1e-8", agree, tested)};
}

Outcome sturm() {
    std::mt19937 rng(2024);
    int agree = 0;
    for (int i = 0; i < 500; ++i) agree += oracle::sturm_trial(rng);
    return {agree == 500, fmt::format("{}/500 polynomials agree", agree)};
}

void run(int id, const std::string& name, const std::function<Outcome()>& f) {
    try {
        report(id, name, f());
    } catch (const std::exception& e) {
        report(id, name, {false, std::string("exception: ") + e.what()});
    }
}

}  // namespace

int main() {
    run(1, "normalized dilatations below mu^4", below_mu4);
    run(2, "mu^4 dilatations and b1 = 2", mu4_group);
    run(3, "filter below 6.86", filter);
    run(4, "b1 = 2 face minima above 17.944", face_bound);
    run(5, "bound numerics", bound_numerics);
    run(6, "combinatorial property suite", properties);
    run(7, "algebra: Alexander polynomial of cPcbbbdxm_10 is t^2-3t+1", alexander_m003);
    run(7, "algebra: spanning-tree independence", tree_independence);
    run(7, "algebra: Fox calculus identities", fox);
    run(7, "algebra: sysolve against resultant oracle", sysolve_oracle);
    run(7, "algebra: Sturm counts against sampling", sturm);
    std::cout << fmt::format("acceptance: {} failed\n", failures);
    return 0;
}
