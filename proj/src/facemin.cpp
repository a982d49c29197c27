#include "veer/facemin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "veer/sysolve.hpp"

namespace veer {

namespace {

long dot(const std::vector<long>& a, const Exponent& c) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * c[i];
    return s;
}

long cross(const Exponent& a, const Exponent& b) {
    return static_cast<long>(a[0]) * b[1] - static_cast<long>(a[1]) * b[0];
}

std::vector<long> primitive(std::vector<long> a) {
    long g = 0;
    for (long x : a) g = std::gcd(g, x);
    if (g > 1)
        for (long& x : a) x /= g;
    return a;
}

std::vector<long> scaled_sum(long s, const std::vector<long>& a, long t, const std::vector<long>& b) {
    std::vector<long> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i] + t * b[i];
    return r;
}

}  // namespace

std::vector<double> FiberedFace::param(double t) const {
    if (b1 == 1) return {static_cast<double>(rays[0][0])};
    std::vector<double> a(2);
    for (int i = 0; i < 2; ++i)
        a[i] = (1 - t) * static_cast<double>(rays[0][i]) / static_cast<double>(norms[0]) +
               t * static_cast<double>(rays[1][i]) / static_cast<double>(norms[1]);
    return a;
}

std::vector<Exponent> gamma_cycle_classes(const VeeringTriangulation& v, const DualGraph& g, const HomologyData& h,
                                          std::size_t limit) {
    (void)v;
    std::vector<Exponent> out;
    const int n = g.num_vertices;
    std::vector<char> on_path(n, 0);
    std::size_t steps = 0;
    Exponent cur(h.b1, 0);
    auto add = [&](int e, int s) {
        for (int i = 0; i < h.b1; ++i) cur[i] += s * h.reference_face_class[e][i];
    };
    for (int s = 0; s < n; ++s) {
        // iterative DFS over vertices >= s
        std::vector<std::pair<int, int>> stack;  // vertex, next out-edge slot
        stack.push_back({s, 0});
        on_path[s] = 1;
        std::vector<int> path_edges;
        while (!stack.empty()) {
            if (++steps > limit) throw PipelineError("cycle enumeration limit exceeded");
            auto& [u, slot] = stack.back();
            if (slot == 2) {
                on_path[u] = 0;
                stack.pop_back();
                if (!path_edges.empty()) {
                    add(path_edges.back(), -1);
                    path_edges.pop_back();
                }
                continue;
            }
            int e = g.out_edges[u][slot++];
            int w = g.head[e];
            if (w == s) {
                add(e, 1);
                out.push_back(cur);
                add(e, -1);
            } else if (w > s && !on_path[w]) {
                add(e, 1);
                path_edges.push_back(e);
                on_path[w] = 1;
                stack.push_back({w, 0});
            }
        }
    }
    return out;
}

FiberedFace fibered_cone(const VeeringTriangulation& v, const HomologyData& h) {
    FiberedFace face;
    face.b1 = h.b1;
    auto g = build_dual_graph(v);
    auto cycles = gamma_cycle_classes(v, g, h);
    if (h.b1 == 1) {
        bool pos = false, neg = false;
        for (const auto& c : cycles) {
            if (c[0] > 0) pos = true;
            if (c[0] <= 0) neg = true;
        }
        if (pos == neg) throw PipelineError("cycle classes do not lie in an open half-line");
        face.rays = {{pos ? 1L : -1L}};
        return face;
    }
    if (h.b1 != 2) throw PipelineError(fmt::format("fibered face requested for b1 = {}", h.b1));
    std::vector<Exponent> dirs;
    for (auto c : cycles) {
        if (c[0] == 0 && c[1] == 0) throw PipelineError("null-homologous dual cycle");
        int gg = std::gcd(c[0], c[1]);
        c[0] /= gg;
        c[1] /= gg;
        if (std::find(dirs.begin(), dirs.end(), c) == dirs.end()) dirs.push_back(c);
    }
    const Exponent* left = nullptr;
    const Exponent* right = nullptr;
    for (const auto& c : dirs) {
        bool is_right = true, is_left = true;
        for (const auto& d : dirs) {
            long x = cross(c, d);
            if (x < 0) is_right = false;
            if (x > 0) is_left = false;
            if (x == 0 && static_cast<long>(c[0]) * d[0] + static_cast<long>(c[1]) * d[1] < 0)
                throw PipelineError("opposite cycle classes");
        }
        if (is_right) right = &c;
        if (is_left) left = &c;
    }
    if (!left || !right || *left == *right) throw PipelineError("cycle cone is not a proper two-dimensional cone");
    // every cycle lies counterclockwise of right and clockwise of left
    std::vector<long> r1 = {static_cast<long>(-(*right)[1]), static_cast<long>((*right)[0])};
    std::vector<long> r2 = {static_cast<long>((*left)[1]), static_cast<long>(-(*left)[0])};
    for (const auto& c : cycles)
        if (dot(r1, c) < 0 || dot(r2, c) < 0) throw PipelineError("dual cone computation failed");
    face.rays = {primitive(r1), primitive(r2)};
    auto alex = alexander_polynomial(v);
    for (const auto& r : face.rays) face.norms.push_back(newton_norm(alex, r).get_si());
    if (face.norms[0] <= 0 || face.norms[1] <= 0) throw PipelineError("degenerate norm on a cone ray");
    return face;
}

double largest_root_real_exponents(const LaurentPoly& p, const std::vector<double>& a) {
    std::vector<std::pair<long double, long double>> terms;
    for (const auto& [e, c] : p.terms()) {
        long double x = 0;
        for (std::size_t i = 0; i < a.size(); ++i) x += static_cast<long double>(a[i]) * e[i];
        terms.push_back({x, static_cast<long double>(c.get_d())});
    }
    std::sort(terms.begin(), terms.end(), [](auto& l, auto& r) { return l.first > r.first; });
    std::vector<std::pair<long double, long double>> merged;
    for (auto& t : terms) {
        if (!merged.empty() && std::fabs(merged.back().first - t.first) < 1e-12L)
            merged.back().second += t.second;
        else
            merged.push_back(t);
    }
    std::erase_if(merged, [](auto& t) { return t.second == 0; });
    if (merged.size() < 2) return NAN;
    long double rest = 0;
    for (std::size_t i = 1; i < merged.size(); ++i) rest += std::fabs(merged[i].second);
    long double gap = merged[0].first - merged[1].first;
    long double smax = std::log(std::max<long double>(rest / std::fabs(merged[0].second), 1.0L)) / gap;
    smax = smax * 1.01L + 1e-9L;
    long double top = merged[0].first;
    auto f = [&](long double s) {
        long double acc = 0;
        for (auto& [x, c] : merged) acc += c * std::exp(s * (x - top));
        return acc;
    };
    const int steps = 20000;
    long double hi = smax;
    long double fhi = f(hi);
    for (int i = steps - 1; i >= 0; --i) {
        long double lo = smax * i / steps;
        long double flo = f(lo);
        if ((flo <= 0) != (fhi <= 0) || flo == 0) {
            if (flo == 0) return static_cast<double>(std::exp(lo));
            for (int it = 0; it < 200; ++it) {
                long double mid = (lo + hi) / 2;
                long double fm = f(mid);
                if ((fm <= 0) == (fhi <= 0))
                    hi = mid, fhi = fm;
                else
                    lo = mid;
            }
            return static_cast<double>(std::exp((lo + hi) / 2));
        }
        hi = lo;
        fhi = flo;
    }
    return NAN;
}

double normalized_at_class(const LaurentPoly& taut, const LaurentPoly& alexander, const std::vector<long>& a) {
    double norm = newton_norm(alexander, a).get_d();
    std::vector<double> x(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) x[i] = static_cast<double>(a[i]) / norm;
    return largest_root_real_exponents(taut, x);
}

FaceSampleResult face_sample_min(const LaurentPoly& taut, const LaurentPoly& alexander, const FiberedFace& face,
                                 int grid) {
    FaceSampleResult res;
    const long n1 = face.norms[0], n2 = face.norms[1];
    auto at = [&](long num, long den) {
        auto a = primitive(scaled_sum((den - num) * n2, face.rays[0], num * n1, face.rays[1]));
        return normalized_at_class(taut, alexander, a);
    };
    for (int i = 1; i < grid; ++i) res.grid.push_back({static_cast<double>(i) / grid, at(i, grid)});
    std::size_t k = 0;
    for (std::size_t i = 1; i < res.grid.size(); ++i)
        if (res.grid[i].value < res.grid[k].value) k = i;
    res.grid_min = res.grid[k].value;
    res.grid_argmin = res.grid[k].t;
    res.convex = true;
    for (std::size_t i = 1; i + 1 < res.grid.size(); ++i) {
        double d2 = res.grid[i - 1].value - 2 * res.grid[i].value + res.grid[i + 1].value;
        if (d2 < -1e-9 * res.grid[i].value) res.convex = false;
    }
    res.boundary_blowup = res.grid.front().value > res.grid_min && res.grid.back().value > res.grid_min;
    // golden section on a dyadic grid
    const long den = 1L << 26;
    double lo = k == 0 ? 0.0 : res.grid[k - 1].t;
    double hi = k + 1 == res.grid.size() ? 1.0 : res.grid[k + 1].t;
    auto eval = [&](double t) {
        long num = std::clamp(std::lround(t * den), 1L, den - 1);
        return at(num, den);
    };
    const double phi = (std::sqrt(5.0) - 1) / 2;
    double c = hi - phi * (hi - lo), d = lo + phi * (hi - lo);
    double fc = eval(c), fd = eval(d);
    for (int it = 0; it < 60 && hi - lo > 1e-7; ++it) {
        if (fc < fd) {
            hi = d, d = c, fd = fc;
            c = hi - phi * (hi - lo);
            fc = eval(c);
        } else {
            lo = c, c = d, fc = fd;
            d = lo + phi * (hi - lo);
            fd = eval(d);
        }
    }
    res.t_min = (lo + hi) / 2;
    res.p_min = std::min({eval(res.t_min), fc, fd, res.grid_min});
    return res;
}

FaceSampleResult face_sample_min(const VeeringTriangulation& v, int grid) {
    auto h = homology(v);
    auto face = fibered_cone(v, h);
    return face_sample_min(taut_polynomial(v), alexander_polynomial(v), face, grid);
}

DilatationReport dilatation_b1(const VeeringTriangulation& v, const DilatationOptions& opt) {
    DilatationReport rep;
    auto h = homology(v);
    rep.b1 = h.b1;
    if (h.b1 != 1) throw PipelineError(fmt::format("first Betti number is {}, expected 1", h.b1));
    auto face = fibered_cone(v, h);
    auto taut = taut_polynomial(v);
    auto spec = specialize(taut, face.rays[0]);
    auto stripped = remove_cyclotomic_factors(spec, opt.cyclotomic_order);
    UPoly up = to_upoly(stripped);
    if (degree(up) < 1) throw PipelineError("specialized taut polynomial is constant after removing cyclotomic factors");
    if (up.back() < 0)
        for (auto& c : up) c = -c;
    const mpq_class eps(opt.eps);
    auto lam = largest_real_root(up, eps);
    if (lam.lo < 1) throw PipelineError("no real root above 1");
    auto alex = alexander_polynomial(v);
    int span = alex.max_exponents()[0] - alex.min_exponents()[0];
    rep.chi = -(span - 1);
    if (rep.chi >= 0) throw PipelineError("nonnegative Euler characteristic from the Alexander polynomial");
    const int k = -rep.chi;
    rep.lambda = lam;
    if (up.back() != 1) throw PipelineError("specialized taut polynomial is not monic");
    rep.normalized = k == 1 ? lam : power_enclosure(lam, k, eps);
    rep.value = rep.normalized->approx();
    rep.method = "exact";
    return rep;
}

LaurentPoly critical_polynomial(const LaurentPoly& taut, const FiberedFace& face) {
    if (face.b1 != 2 || taut.nvars() != 2) throw PipelineError("critical polynomial needs two variables");
    auto c = scaled_sum(face.norms[0], face.rays[1], -face.norms[1], face.rays[0]);
    LaurentPoly k(2);
    for (const auto& [e, v] : taut.terms()) k.add_term(e, v * (c[0] * e[0] + c[1] * e[1]));
    return k;
}

std::vector<long> face_midpoint(const FiberedFace& face) {
    return primitive(scaled_sum(face.norms[1], face.rays[0], face.norms[0], face.rays[1]));
}

namespace {

// Largest root of the specialization at m, isolated and above 1.
RootEnclosure mid_root(const LaurentPoly& taut, const std::vector<long>& m) {
    UPoly p = to_upoly(specialize(taut, m));
    auto roots = isolate_real_roots(p, 1, mpq_class(cauchy_bound(p)));
    if (roots.empty()) throw PipelineError("no root above 1 on the mid-ray");
    return roots.back();
}

}  // namespace

bool midpoint_is_critical(const LaurentPoly& taut, const FiberedFace& face) {
    auto m = face_midpoint(face);
    UPoly q = to_upoly(specialize(critical_polynomial(taut, face), m));
    if (q.empty()) return true;
    UPoly p = to_upoly(specialize(taut, m));
    UPoly g = upoly_gcd(p, q);
    if (degree(g) < 1) return false;
    auto r = mid_root(taut, m);
    if (r.lo == r.hi) return sign_at(g, r.hi) == 0;
    return sturm_count(sturm_sequence(square_free_part(g)), r.lo, r.hi) > 0;
}

DilatationReport min_dilatation_face(const LaurentPoly& taut, const LaurentPoly& alexander, const FiberedFace& face,
                                     const DilatationOptions& opt) {
    if (face.b1 != 2) throw PipelineError(fmt::format("first Betti number is {}, expected 2", face.b1));
    DilatationReport rep;
    rep.b1 = 2;
    rep.gcd_norms = std::gcd(face.norms[0], face.norms[1]);
    auto sample = face_sample_min(taut, alexander, face, opt.oracle_grid);
    rep.oracle = sample.p_min;
    if (midpoint_is_critical(taut, face)) {
        auto m = face_midpoint(face);
        auto r = mid_root(taut, m);
        mpq_class eps(1);
        eps /= mpz_class(1) << 200;
        r.refine(eps);
        const unsigned long k = newton_norm(alexander, m).get_ui();
        mpq_class lo, hi;
        mpz_pow_ui(lo.get_num_mpz_t(), r.lo.get_num_mpz_t(), k);
        mpz_pow_ui(lo.get_den_mpz_t(), r.lo.get_den_mpz_t(), k);
        mpz_pow_ui(hi.get_num_mpz_t(), r.hi.get_num_mpz_t(), k);
        mpz_pow_ui(hi.get_den_mpz_t(), r.hi.get_den_mpz_t(), k);
        rep.value = mpq_class((lo + hi) / 2).get_d();
        rep.t = 0.5;
        rep.method = "midpoint";
    } else {
        auto shift = taut.min_exponents();
        for (auto& x : shift) x = -x;
        LaurentPoly T = taut.shifted(shift);
        LaurentPoly K = critical_polynomial(T, face);
        auto sol = solve_bivariate({BPoly::from_laurent(T), BPoly::from_laurent(K)}, Domain::Positive);
        for (const auto& n : sol.notes) rep.notes.push_back(n);
        if (!sol.common_factors.empty()) rep.notes.push_back("critical system has a common factor");
        // norm functional N with N.r_i = |r_i|
        const double det = static_cast<double>(face.rays[0][0] * face.rays[1][1] - face.rays[0][1] * face.rays[1][0]);
        const double nx = (face.norms[0] * face.rays[1][1] - face.norms[1] * face.rays[0][1]) / det;
        const double ny = (face.rays[0][0] * face.norms[1] - face.rays[1][0] * face.norms[0]) / det;
        auto a0 = face.param(0), a1 = face.param(1);
        const double dx = a1[0] - a0[0], dy = a1[1] - a0[1];
        bool found = false;
        for (const auto& s : sol.solutions) {
            const double lx = std::log(s.x), ly = std::log(s.y);
            const double ls = nx * lx + ny * ly;
            if (!(ls > 1e-12)) continue;
            std::vector<double> a = {lx / ls, ly / ls};
            const double t = ((a[0] - a0[0]) * dx + (a[1] - a0[1]) * dy) / (dx * dx + dy * dy);
            if (!(t > 1e-12 && t < 1 - 1e-12)) continue;
            const double lambda = std::exp(ls);
            const double pf = largest_root_real_exponents(taut, a);
            if (!(std::fabs(pf - lambda) <= 1e-6 * lambda)) continue;
            if (!found || lambda < rep.value) {
                rep.value = lambda;
                rep.t = t;
            }
            found = true;
        }
        if (found) {
            rep.method = "solver";
        } else {
            rep.method = "sampling";
            rep.value = sample.p_min;
            rep.t = sample.t_min;
            rep.notes.push_back("warning: no admissible critical point, using the sampling estimate");
        }
    }
    if (std::fabs(rep.value - rep.oracle) > opt.oracle_tolerance * rep.value)
        rep.notes.push_back(fmt::format("warning: sampling estimate {:.6f} disagrees", rep.oracle));
    if (!(rep.value > 1)) throw PipelineError("normalized dilatation not above 1");
    return rep;
}

DilatationReport min_dilatation_b2(const VeeringTriangulation& v, const DilatationOptions& opt) {
    auto h = homology(v);
    if (h.b1 != 2) throw PipelineError(fmt::format("first Betti number is {}, expected 2", h.b1));
    auto face = fibered_cone(v, h);
    return min_dilatation_face(taut_polynomial(v), alexander_polynomial(v), face, opt);
}

}  // namespace veer
