#include "veer/rootiso.hpp"

#include <algorithm>

#include "veer/rpoly.hpp"

namespace veer {

namespace {

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Pseudo-remainder with the sign of an honest remainder: |lc(b)|^s * a mod b.
UPoly signed_prem(UPoly a, const UPoly& b) {
    const int db = degree(b);
    const mpz_class L = b.back();
    const mpz_class aL = abs(L);
    while (degree(a) >= db) {
        int d = degree(a) - db;
        mpz_class la = a.back();
        for (auto& x : a) x *= aL;
        mpz_class f = la * aL / L;  // exact: sign(L) * la
        for (int i = 0; i <= db; ++i) a[i + d] -= f * b[i];
        trim(a);
    }
    return a;
}

void make_primitive(UPoly& p, bool keep_sign) {
    mpz_class g = 0;
    for (const auto& x : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return;
    if (!keep_sign && p.back() < 0) g = -g;
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

int sgn(const mpz_class& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

UPoly make_upoly(std::vector<mpz_class> c) {
    trim(c);
    return c;
}

UPoly to_upoly(const LaurentPoly& p) {
    if (p.nvars() != 1) throw std::invalid_argument("univariate polynomial expected");
    UPoly out;
    if (p.is_zero()) return out;
    int lo = p.min_exponents()[0], hi = p.max_exponents()[0];
    out.assign(hi - lo + 1, 0);
    for (const auto& [e, c] : p.terms()) out[e[0] - lo] = c;
    return out;
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly derivative(const UPoly& p) {
    UPoly d;
    for (int i = 1; i <= degree(p); ++i) d.push_back(p[i] * i);
    trim(d);
    return d;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    if (x.empty()) std::swap(x, y);
    if (x.empty()) return {};
    make_primitive(x, false);
    if (y.empty()) return x;
    make_primitive(y, false);
    if (degree(x) < degree(y)) std::swap(x, y);
    while (!y.empty()) {
        UPoly r = signed_prem(x, y);
        x = std::move(y);
        y = std::move(r);
        if (!y.empty()) make_primitive(y, false);
    }
    make_primitive(x, false);
    return x;
}

UPoly square_free_part(const UPoly& p) {
    if (p.empty()) throw std::invalid_argument("zero polynomial");
    UPoly g = upoly_gcd(p, derivative(p));
    if (degree(g) <= 0) {
        UPoly q = p;
        make_primitive(q, false);
        return q;
    }
    LaurentPoly lp(1), lg(1);
    for (int i = 0; i <= degree(p); ++i) lp.add_term({i}, p[i]);
    for (int i = 0; i <= degree(g); ++i) lg.add_term({i}, g[i]);
    LaurentPoly q = laurent_exact_div(lp, lg);
    UPoly out(q.max_exponents()[0] + 1, 0);
    for (const auto& [e, c] : q.terms()) out[e[0]] = c;
    make_primitive(out, false);
    return out;
}

int sign_at(const UPoly& p, const mpq_class& x) {
    if (p.empty()) return 0;
    mpz_class u = x.get_num(), v = x.get_den();
    mpz_class acc = 0;
    const int d = degree(p);
    std::vector<mpz_class> vpow(d + 1);
    vpow[0] = 1;
    for (int i = 1; i <= d; ++i) vpow[i] = vpow[i - 1] * v;
    for (int i = d; i >= 0; --i) acc = acc * u + p[i] * vpow[d - i];
    return sgn(acc);
}

mpq_class eval_at(const UPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (int i = degree(p); i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
    if (p.empty()) throw std::invalid_argument("zero polynomial");
    std::vector<UPoly> s{p};
    UPoly d = derivative(p);
    if (d.empty()) return s;
    s.push_back(d);
    while (true) {
        UPoly r = signed_prem(s[s.size() - 2], s.back());
        if (r.empty()) break;
        for (auto& x : r) x = -x;
        make_primitive(r, true);
        s.push_back(std::move(r));
    }
    return s;
}

namespace {

int variations(const std::vector<UPoly>& seq, const mpq_class& x) {
    int v = 0, last = 0;
    for (const auto& q : seq) {
        int s = sign_at(q, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int sturm_count(const std::vector<UPoly>& seq, const mpq_class& a, const mpq_class& b) {
    return variations(seq, a) - variations(seq, b);
}

mpz_class cauchy_bound(const UPoly& p) {
    if (p.empty()) throw std::invalid_argument("zero polynomial");
    mpz_class m = 0, lc = abs(p.back());
    for (int i = 0; i < degree(p); ++i) m = std::max(m, mpz_class(abs(p[i])));
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lc.get_mpz_t());
    return q + 1;
}

void RootEnclosure::halve() {
    if (lo == hi) return;
    mpq_class mid = midpoint();
    int sh = sign_at(poly, hi);
    if (sh == 0) {
        lo = hi;
        return;
    }
    int sm = sign_at(poly, mid);
    if (sm == 0) {
        lo = hi = mid;
        return;
    }
    int sl = sign_at(poly, lo);
    if (sl != 0 && sl != sh) {
        (sm == sh ? hi : lo) = mid;
        return;
    }
    // lo is a root of a neighbouring enclosure: decide by counting
    auto seq = sturm_sequence(poly);
    if (sturm_count(seq, mid, hi) == 1) lo = mid;
    else hi = mid;
}

void RootEnclosure::refine(const mpq_class& eps) {
    while (width() > eps) halve();
}

std::vector<RootEnclosure> isolate_real_roots(const UPoly& p_in) {
    mpq_class B(cauchy_bound(p_in));
    return isolate_real_roots(p_in, -B, B);
}

std::vector<RootEnclosure> isolate_real_roots(const UPoly& p_in, const mpq_class& lo, const mpq_class& hi) {
    UPoly p = square_free_part(p_in);
    std::vector<RootEnclosure> out;
    if (degree(p) <= 0 || lo >= hi) return out;
    auto seq = sturm_sequence(p);
    std::vector<std::pair<mpq_class, mpq_class>> work{{lo, hi}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int c = sturm_count(seq, a, b);
        if (c == 0) continue;
        if (c == 1) {
            out.push_back({p, a, b});
            continue;
        }
        mpq_class m = (a + b) / 2;
        work.push_back({a, m});
        work.push_back({m, b});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.hi < y.hi; });
    return out;
}

RootEnclosure largest_real_root(const UPoly& p, const mpq_class& eps) {
    auto roots = isolate_real_roots(p);
    if (roots.empty()) throw std::domain_error("polynomial has no real roots");
    RootEnclosure r = roots.back();
    r.refine(eps);
    return r;
}

UPoly power_roots_poly(const UPoly& p, int k) {
    const int d = degree(p);
    if (d < 1) throw std::invalid_argument("degree must be positive");
    if (abs(p.back()) != 1) throw std::invalid_argument("monic polynomial expected");
    // companion matrix of the monic normalisation
    std::vector<std::vector<mpz_class>> C(d, std::vector<mpz_class>(d, 0));
    for (int i = 1; i < d; ++i) C[i][i - 1] = 1;
    for (int i = 0; i < d; ++i) C[i][d - 1] = -p[i] * p.back();
    auto mul = [&](const auto& A, const auto& B) {
        std::vector<std::vector<mpz_class>> R(d, std::vector<mpz_class>(d, 0));
        for (int i = 0; i < d; ++i)
            for (int l = 0; l < d; ++l) {
                if (A[i][l] == 0) continue;
                for (int j = 0; j < d; ++j) R[i][j] += A[i][l] * B[l][j];
            }
        return R;
    };
    auto P = C;
    for (int i = 1; i < k; ++i) P = mul(P, C);
    std::vector<std::vector<RPoly>> M(d, std::vector<RPoly>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<RPoly> co{RPoly::constant(0, -P[i][j])};
            if (i == j) co.push_back(RPoly::constant(0, 1));
            M[i][j] = RPoly::from_coeffs(1, co);
        }
    RPoly det = determinant(M);
    UPoly out;
    for (const auto& c : det.coeffs()) out.push_back(c.value());
    trim(out);
    return out;
}

RootEnclosure power_enclosure(const RootEnclosure& r, int k, const mpq_class& eps) {
    if (r.lo < 0) throw std::domain_error("positive root expected");
    UPoly q = square_free_part(power_roots_poly(r.poly, k));
    auto seq = sturm_sequence(q);
    RootEnclosure base = r;
    while (true) {
        mpq_class lo = 1, hi = 1;
        for (int i = 0; i < k; ++i) {
            lo *= base.lo;
            hi *= base.hi;
        }
        if (base.lo == base.hi) return {q, lo, hi};
        if (sturm_count(seq, lo, hi) == 1) {
            RootEnclosure e{q, lo, hi};
            e.refine(eps);
            return e;
        }
        base.halve();
    }
}

}  // namespace veer
