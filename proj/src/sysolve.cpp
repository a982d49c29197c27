#include "veer/sysolve.hpp"

#include <mpfr.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "veer/rpoly.hpp"

namespace veer {

namespace {

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(BPoly& p) {
    for (auto& c : p.c) trim(c);
    while (!p.c.empty() && p.c.back().empty()) p.c.pop_back();
}

void sub_into(UPoly& a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
}

mpz_class int_content(const BPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p.c)
        for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

UPoly x_content(const BPoly& p) {
    UPoly g;
    for (const auto& c : p.c) {
        if (c.empty()) continue;
        g = g.empty() ? c : upoly_gcd(g, c);
        if (degree(g) == 0) break;
    }
    if (!g.empty() && g.back() < 0)
        for (auto& x : g) x = -x;
    return g;
}

BPoly div_x(const BPoly& p, const UPoly& d) {
    BPoly out;
    for (const auto& c : p.c) {
        if (c.empty()) {
            out.c.push_back({});
            continue;
        }
        auto q = laurent_exact_div(LaurentPoly::univariate(c), LaurentPoly::univariate(d));
        UPoly u(c.size() - d.size() + 1, 0);
        for (const auto& [e, v] : q.terms()) u.at(e[0]) = v;
        trim(u);
        out.c.push_back(u);
    }
    trim(out);
    return out;
}

// Value at a rational point x = n / d, scaled by d^deg_x so the result has integer coefficients in y.
UPoly substitute_x(const BPoly& p, const mpq_class& x) {
    const int dx = p.deg_x();
    mpz_class n = x.get_num(), d = x.get_den();
    std::vector<mpz_class> npow(dx + 1, 1), dpow(dx + 1, 1);
    for (int i = 1; i <= dx; ++i) {
        npow[i] = npow[i - 1] * n;
        dpow[i] = dpow[i - 1] * d;
    }
    UPoly out;
    for (const auto& c : p.c) {
        mpz_class s = 0;
        for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * npow[i] * dpow[dx - i];
        out.push_back(s);
    }
    trim(out);
    mpz_class g = 0;
    for (const auto& v : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return out;
}

using Interval = std::pair<mpq_class, mpq_class>;

Interval imul(const Interval& a, const Interval& b) {
    mpq_class p[4] = {a.first * b.first, a.first * b.second, a.second * b.first, a.second * b.second};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval horner(const UPoly& c, const Interval& x) {
    Interval acc{0, 0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = imul(acc, x);
        acc.first += *it;
        acc.second += *it;
    }
    return acc;
}

BPoly gcd_bpoly(const BPoly& a, const BPoly& b) { return BPoly::from_laurent(laurent_gcd(a.to_laurent(), b.to_laurent())); }

BPoly div_bpoly(const BPoly& a, const BPoly& g) {
    return BPoly::from_laurent(laurent_exact_div(a.to_laurent(), g.to_laurent()));
}

bool divides(const BPoly& h, const BPoly& a) {
    RPoly q;
    return exact_div(RPoly::from_laurent(a.to_laurent()), RPoly::from_laurent(h.to_laurent()), q);
}

bool is_constant(const BPoly& p) { return p.deg_y() == 0 && p.c[0].size() == 1; }

int gcd_exponent(const BPoly& a, const BPoly& b, bool in_x) {
    int g = 0;
    for (const BPoly* p : {&a, &b})
        for (std::size_t j = 0; j < p->c.size(); ++j)
            for (std::size_t i = 0; i < p->c[j].size(); ++i)
                if (p->c[j][i] != 0) g = std::gcd(g, static_cast<int>(in_x ? i : j));
    return g;
}

BPoly compress(const BPoly& p, int gx, int gy) {
    BPoly out;
    out.c.resize(p.c.size() / gy + 1);
    for (std::size_t j = 0; j < p.c.size(); ++j)
        for (std::size_t i = 0; i < p.c[j].size(); ++i) {
            if (p.c[j][i] == 0) continue;
            auto& row = out.c[j / gy];
            if (row.size() <= i / gx) row.resize(i / gx + 1, 0);
            row[i / gx] = p.c[j][i];
        }
    trim(out);
    return out;
}

BPoly drop_monomial(const BPoly& p) {
    std::size_t jmin = 0;
    while (jmin < p.c.size() && p.c[jmin].empty()) ++jmin;
    std::size_t imin = SIZE_MAX;
    for (const auto& c : p.c)
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) {
                imin = std::min(imin, i);
                break;
            }
    BPoly out;
    for (std::size_t j = jmin; j < p.c.size(); ++j) {
        const auto& c = p.c[j];
        out.c.push_back(c.empty() ? UPoly{} : UPoly(c.begin() + static_cast<long>(imin), c.end()));
    }
    trim(out);
    return out;
}

struct Box {
    mpq_class xl, xh, yl, yh;
};

// x^(1/g) for a positive rational, rounded outward.
mpq_class rational_root(const mpq_class& v, int g, bool up) {
    if (g == 1) return v;
    if (v <= 0) return 0;
    mpfr_t a;
    mpfr_init2(a, 256);
    mpfr_set_q(a, v.get_mpq_t(), up ? MPFR_RNDU : MPFR_RNDD);
    mpfr_rootn_ui(a, a, static_cast<unsigned long>(g), up ? MPFR_RNDU : MPFR_RNDD);
    mpq_class out;
    mpfr_get_q(out.get_mpq_t(), a);
    mpfr_clear(a);
    return out;
}

struct Solver {
    Domain domain;
    const SolveOptions& opt;
    SolveResult& result;
    std::vector<Box> boxes;
    std::vector<BPoly> factors;

    bool accepts_x(RootEnclosure& r) const {
        if (domain == Domain::All) return true;
        while (r.lo < 0 && r.hi > 0) r.halve();
        return r.lo >= 0 && r.hi > 0;
    }

    bool verify(const BPoly& a, const BPoly& b, const Box& bx) const {
        mpq_class tol(opt.verify_width);
        for (const BPoly* p : {&a, &b}) {
            auto [lo, hi] = eval_box(*p, bx.xl, bx.xh, bx.yl, bx.yh);
            if (lo > 0 || hi < 0 || hi - lo > tol) return false;
        }
        return true;
    }

    void add_box(const Box& bx) {
        for (const auto& o : boxes)
            if (!(bx.xh < o.xl || o.xh < bx.xl || bx.yh < o.yl || o.yh < bx.yl)) return;
        boxes.push_back(bx);
    }

    std::vector<Box> y_candidates(const std::vector<BPoly>& chain, const RootEnclosure& xr) const {
        std::vector<const BPoly*> order;
        for (const auto& p : chain)
            if (p.deg_y() >= 1) order.push_back(&p);
        std::stable_sort(order.begin(), order.end(), [](auto* l, auto* r) { return l->deg_y() < r->deg_y(); });
        mpq_class xm = xr.midpoint();
        mpq_class yw(opt.y_width);
        for (const BPoly* q : order) {
            UPoly u = substitute_x(*q, xm);
            if (degree(u) < 1) {
                if (u.empty()) continue;
                return {};
            }
            std::vector<RootEnclosure> ys;
            if (domain == Domain::Positive) {
                ys = isolate_real_roots(u, 0, mpq_class(cauchy_bound(u)));
                std::erase_if(ys, [](const RootEnclosure& r) { return r.hi <= 0; });
            } else {
                ys = isolate_real_roots(u);
            }
            std::vector<Box> out;
            for (auto& yr : ys) {
                yr.refine(yw);
                if (domain == Domain::Positive && yr.lo == 0 && yr.hi == 0) continue;
                mpq_class pad = yw;
                out.push_back({xr.lo, xr.hi, yr.lo - pad, yr.hi + pad});
            }
            return out;
        }
        return {};
    }

    void run(const BPoly& a0, const BPoly& b0, const BPoly& va, const BPoly& vb, int depth) {
        if (depth > opt.max_depth) throw std::runtime_error("degenerate elimination recursion too deep");
        if (a0.is_zero() || b0.is_zero()) {
            factors.push_back(a0.is_zero() ? b0 : a0);
            return;
        }
        BPoly a = a0, b = b0;
        BPoly g = gcd_bpoly(a, b);
        if (!is_constant(g)) {
            factors.push_back(g);
            a = div_bpoly(a, g);
            b = div_bpoly(b, g);
        }
        std::vector<BPoly> chain{a, b};
        std::vector<UPoly> x_factors;
        BPoly P = a, Q = b;
        while (P.deg_y() > 0 && Q.deg_y() > 0) {
            if (P.deg_y() < Q.deg_y()) std::swap(P, Q);
            BPoly C = lead_eliminate(P, Q);
            if (C.is_zero()) {
                BPoly h = gcd_bpoly(P, Q);
                run(div_bpoly(P, h), div_bpoly(Q, h), va, vb, depth + 1);
                run(h, divides(h, a) ? b : a, va, vb, depth + 1);
                return;
            }
            UPoly cx = x_content(C);
            if (degree(cx) > 0) {
                x_factors.push_back(cx);
                C = div_x(C, cx);
            }
            P = std::move(C);
            chain.push_back(P);
        }
        UPoly f;
        if (P.deg_y() == 0 && Q.deg_y() == 0)
            f = upoly_gcd(P.c[0], Q.c[0]);
        else
            f = P.deg_y() == 0 ? P.c[0] : Q.c[0];
        for (const auto& cx : x_factors) f = upoly_mul(f, cx);
        if (degree(f) < 1) return;
        std::vector<RootEnclosure> xs;
        if (domain == Domain::Positive)
            xs = isolate_real_roots(f, 0, mpq_class(cauchy_bound(f)));
        else
            xs = isolate_real_roots(f);
        mpq_class xw(opt.x_width);
        for (auto& xr : xs) {
            if (!accepts_x(xr)) continue;
            if (domain == Domain::Positive && xr.lo == 0 && xr.hi == 0) continue;
            xr.refine(xw);
            for (int attempt = 0; attempt < 2; ++attempt) {
                bool any = false;
                auto cands = y_candidates(chain, xr);
                for (const auto& bx : cands)
                    if (verify(va, vb, bx)) {
                        add_box(bx);
                        any = true;
                    }
                if (any || cands.empty()) break;
                xr.refine(xw * xw);
            }
        }
    }
};

}  // namespace

int BPoly::deg_x() const {
    int d = -1;
    for (const auto& x : c) d = std::max(d, degree(x));
    return d;
}

BPoly BPoly::from_laurent(const LaurentPoly& p) {
    if (p.nvars() != 2) throw std::invalid_argument("bivariate polynomial expected");
    BPoly out;
    for (const auto& [e, v] : p.terms()) {
        if (e[0] < 0 || e[1] < 0) throw std::invalid_argument("negative exponent in bivariate polynomial");
        if (out.c.size() <= static_cast<std::size_t>(e[1])) out.c.resize(e[1] + 1);
        auto& row = out.c[e[1]];
        if (row.size() <= static_cast<std::size_t>(e[0])) row.resize(e[0] + 1, 0);
        row[e[0]] = v;
    }
    trim(out);
    return out;
}

LaurentPoly BPoly::to_laurent() const {
    LaurentPoly out(2);
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < c[j].size(); ++i)
            if (c[j][i] != 0) out.add_term({static_cast<int>(i), static_cast<int>(j)}, c[j][i]);
    return out;
}

BPoly BPoly::swapped() const {
    BPoly out;
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < c[j].size(); ++i) {
            if (c[j][i] == 0) continue;
            if (out.c.size() <= i) out.c.resize(i + 1);
            auto& row = out.c[i];
            if (row.size() <= j) row.resize(j + 1, 0);
            row[j] = c[j][i];
        }
    trim(out);
    return out;
}

BPoly lead_eliminate(const BPoly& a, const BPoly& b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("zero polynomial");
    const int da = a.deg_y(), db = b.deg_y();
    if (da < db) throw std::invalid_argument("first polynomial must have the larger y-degree");
    if (da == 0) throw std::invalid_argument("both polynomials are free of y");
    const UPoly& p = b.c.back();
    const UPoly& q = a.c.back();
    BPoly out;
    out.c.resize(da + 1);
    for (int j = 0; j <= da; ++j) out.c[j] = upoly_mul(p, a.c[j]);
    for (int j = 0; j <= db; ++j) sub_into(out.c[j + da - db], upoly_mul(q, b.c[j]));
    trim(out);
    mpz_class g = int_content(out);
    if (g > 1)
        for (auto& c : out.c)
            for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

std::pair<mpq_class, mpq_class> eval_box(const BPoly& p, const mpq_class& xl, const mpq_class& xh, const mpq_class& yl,
                                         const mpq_class& yh) {
    Interval X{xl, xh}, Y{yl, yh};
    Interval acc{0, 0};
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        acc = imul(acc, Y);
        Interval cj = horner(*it, X);
        acc.first += cj.first;
        acc.second += cj.second;
    }
    return acc;
}

SolveResult solve_bivariate(const BivariatePair& pair, Domain domain, const SolveOptions& opt) {
    SolveResult result;
    BPoly a = pair.a, b = pair.b;
    trim(a);
    trim(b);
    int gx = 1, gy = 1;
    bool swap = false;
    if (domain == Domain::Positive) {
        a = drop_monomial(a);
        b = drop_monomial(b);
        if (opt.reduce_exponents && !a.is_zero() && !b.is_zero()) {
            gx = std::max(1, gcd_exponent(a, b, true));
            gy = std::max(1, gcd_exponent(a, b, false));
            if (gx > 1 || gy > 1) {
                a = compress(a, gx, gy);
                b = compress(b, gx, gy);
                result.notes.push_back("exponent lattice reduced by (" + std::to_string(gx) + ", " +
                                       std::to_string(gy) + ")");
            }
        }
    }
    if (opt.choose_variable && !a.is_zero() && !b.is_zero() &&
        std::max(a.deg_y(), b.deg_y()) > std::max(a.deg_x(), b.deg_x())) {
        swap = true;
        a = a.swapped();
        b = b.swapped();
        std::swap(gx, gy);
    }
    Solver s{domain, opt, result, {}, {}};
    s.run(a, b, a, b, 0);
    for (auto bx : s.boxes) {
        if (swap) bx = {bx.yl, bx.yh, bx.xl, bx.xh};
        int ex = swap ? gy : gx, ey = swap ? gx : gy;
        BivariateSolution sol;
        sol.x_lo = rational_root(bx.xl, ex, false);
        sol.x_hi = rational_root(bx.xh, ex, true);
        sol.y_lo = rational_root(bx.yl, ey, false);
        sol.y_hi = rational_root(bx.yh, ey, true);
        sol.x = mpq_class((sol.x_lo + sol.x_hi) / 2).get_d();
        sol.y = mpq_class((sol.y_lo + sol.y_hi) / 2).get_d();
        result.solutions.push_back(sol);
    }
    std::sort(result.solutions.begin(), result.solutions.end(),
              [](const auto& l, const auto& r) { return l.x != r.x ? l.x < r.x : l.y < r.y; });
    for (auto f : s.factors) {
        if (swap) f = f.swapped();
        LaurentPoly l(2);
        int ex = swap ? gy : gx, ey = swap ? gx : gy;
        const LaurentPoly fl = f.to_laurent();
        for (const auto& [e, v] : fl.terms()) l.add_term({e[0] * ex, e[1] * ey}, v);
        result.common_factors.push_back(l.normalized_primitive());
    }
    return result;
}

}  // namespace veer
