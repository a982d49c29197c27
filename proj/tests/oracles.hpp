#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <set>

#include "veer/rootiso.hpp"
#include "veer/sysolve.hpp"

namespace veer::oracle {

inline BPoly random_bpoly(std::mt19937& rng, int total_degree) {
    std::uniform_int_distribution<int> co(-5, 5);
    LaurentPoly p(2);
    for (int i = 0; i <= total_degree; ++i)
        for (int j = 0; i + j <= total_degree; ++j) p.add_term({i, j}, co(rng));
    return BPoly::from_laurent(p);
}

inline long double eval(const BPoly& p, long double x, long double y) {
    long double acc = 0;
    for (int j = p.deg_y(); j >= 0; --j) {
        long double cj = 0;
        const auto& c = p.c[j];
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) cj = cj * x + c[i].get_d();
        acc = acc * y + cj;
    }
    return acc;
}

inline long double eval_dx(const BPoly& p, long double x, long double y) {
    long double acc = 0, yp = 1;
    for (int j = 0; j <= p.deg_y(); ++j, yp *= y) {
        const auto& c = p.c[j];
        long double d = 0, xp = 1;
        for (std::size_t i = 1; i < c.size(); ++i, xp *= x) d += static_cast<long double>(i) * c[i].get_d() * xp;
        acc += d * yp;
    }
    return acc;
}

inline long double eval_dy(const BPoly& p, long double x, long double y) {
    long double acc = 0, yp = 1;
    for (int j = 1; j <= p.deg_y(); ++j, yp *= y) {
        long double cj = 0;
        const auto& c = p.c[j];
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) cj = cj * x + c[i].get_d();
        acc += static_cast<long double>(j) * cj * yp;
    }
    return acc;
}

// Exact integer determinant by fraction-free elimination.
inline mpz_class bareiss(std::vector<std::vector<mpz_class>> m) {
    const int n = static_cast<int>(m.size());
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline std::vector<mpz_class> y_coeffs_at(const BPoly& p, long x) {
    std::vector<mpz_class> out;
    for (const auto& c : p.c) {
        mpz_class s = 0, xp = 1;
        for (const auto& v : c) {
            s += v * xp;
            xp *= x;
        }
        out.push_back(s);
    }
    return out;
}

// Sylvester resultant in y, evaluated at an integer x.
inline mpz_class resultant_at(const BPoly& a, const BPoly& b, long x) {
    auto pa = y_coeffs_at(a, x), pb = y_coeffs_at(b, x);
    const int m = a.deg_y(), n = b.deg_y();
    std::vector<std::vector<mpz_class>> s(m + n, std::vector<mpz_class>(m + n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s[i][i + k] = pa[m - k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s[n + i][i + k] = pb[n - k];
    return bareiss(s);
}

inline std::vector<double> real_roots_eigen(std::vector<double> c) {
    while (!c.empty() && std::fabs(c.back()) < 1e-300) c.pop_back();
    const int d = static_cast<int>(c.size()) - 1;
    std::vector<double> out;
    if (d < 1) return out;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[i] / c[d];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    for (int i = 0; i < d; ++i) {
        auto z = es.eigenvalues()[i];
        if (std::fabs(z.imag()) < 1e-5 * std::max(1.0, std::abs(z))) out.push_back(z.real());
    }
    return out;
}

struct Pt {
    long double x, y;
};

// Resultant by evaluation and exact interpolation, real x from companion eigenvalues, y likewise, Newton polish.
inline std::vector<Pt> resultant_solutions(const BPoly& a, const BPoly& b, bool& degenerate) {
    const int D = a.deg_y() * b.deg_x() + b.deg_y() * a.deg_x() + 1;
    std::vector<mpq_class> xs, vals;
    for (int k = 0; k <= D; ++k) {
        xs.emplace_back(k - D / 2);
        vals.emplace_back(resultant_at(a, b, k - D / 2));
    }
    // Newton divided differences, then expand to monomial form
    std::vector<mpq_class> dd = vals;
    for (int j = 1; j <= D; ++j)
        for (int i = D; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    std::vector<mpq_class> poly(1, dd[D]);
    for (int i = D - 1; i >= 0; --i) {
        std::vector<mpq_class> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * xs[i];
        }
        next[0] += dd[i];
        poly = next;
    }
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    degenerate = poly.empty();
    std::vector<Pt> out;
    if (degenerate) return out;
    std::vector<double> c;
    for (const auto& q : poly) c.push_back(q.get_d());
    for (double x : real_roots_eigen(c)) {
        std::vector<double> cy;
        for (const auto& row : a.c) {
            long double s = 0, xp = 1;
            for (const auto& v : row) s += v.get_d() * xp, xp *= x;
            cy.push_back(static_cast<double>(s));
        }
        for (double y : real_roots_eigen(cy)) {
            long double X = x, Y = y;
            for (int it = 0; it < 60; ++it) {
                long double f = eval(a, X, Y), g = eval(b, X, Y);
                long double ax = eval_dx(a, X, Y), ay = eval_dy(a, X, Y), bx = eval_dx(b, X, Y), by = eval_dy(b, X, Y);
                long double det = ax * by - ay * bx;
                if (det == 0) break;
                X -= (f * by - g * ay) / det;
                Y -= (ax * g - bx * f) / det;
            }
            if (std::fabs(eval(a, X, Y)) > 1e-9L || std::fabs(eval(b, X, Y)) > 1e-9L) continue;
            bool dup = false;
            for (const auto& p : out) dup |= std::fabs(p.x - X) < 1e-7L && std::fabs(p.y - Y) < 1e-7L;
            if (!dup) out.push_back({X, Y});
        }
    }
    return out;
}


// Sturm count against sign changes on a grid fine enough to separate the rational roots.
inline bool sturm_trial(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(1, 8), den(1, 4), num(-20, 20), lead(1, 3);
    std::set<mpq_class> roots;
    const int d = deg(rng);
    while (static_cast<int>(roots.size()) < d) {
        mpq_class r(num(rng), den(rng));
        r.canonicalize();
        roots.insert(r);
    }
    UPoly p = make_upoly({mpz_class(lead(rng))});
    for (const auto& r : roots) p = upoly_mul(p, make_upoly({-r.get_num(), r.get_den()}));
    auto seq = sturm_sequence(p);
    // grid points (2k + 1) / 200 never hit a root and separate all of them
    const int ka = std::uniform_int_distribution<int>(-1200, 1200)(rng);
    const int kb = ka + std::uniform_int_distribution<int>(1, 1500)(rng);
    mpq_class a(2 * ka + 1, 200), b(2 * kb + 1, 200);
    int changes = 0;
    int prev = sign_at(p, a);
    for (int k = ka + 1; k <= kb; ++k) {
        int s = sign_at(p, mpq_class(2 * k + 1, 200));
        if (s != prev) ++changes;
        prev = s;
    }
    int exact = 0;
    for (const auto& r : roots) exact += (r > a && r <= b);
    return sturm_count(seq, a, b) == changes && changes == exact && isolate_real_roots(p).size() == roots.size();
}

// Number of agreeing systems out of the first `count` nondegenerate random systems.
inline int sysolve_trials(std::mt19937& rng, int count, int* tested_out = nullptr) {
    std::uniform_int_distribution<int> deg(1, 4);
    int tested = 0, agree = 0;
    while (tested < count) {
        auto a = random_bpoly(rng, deg(rng)), b = random_bpoly(rng, deg(rng));
        if (a.deg_y() < 1 || b.deg_y() < 1) continue;
        bool degenerate = false;
        auto expect = resultant_solutions(a, b, degenerate);
        if (degenerate) continue;
        ++tested;
        auto got = solve_bivariate({a, b}, Domain::All);
        bool ok = got.common_factors.empty() && got.solutions.size() == expect.size();
        for (const auto& s : got.solutions) {
            for (const BPoly* p : {&a, &b}) {
                auto [lo, hi] = eval_box(*p, s.x_lo, s.x_hi, s.y_lo, s.y_hi);
                ok = ok && lo <= 0 && hi >= 0 && hi - lo <= mpq_class(1, 100000000);
            }
            bool matched = false;
            for (const auto& e : expect) matched |= std::fabs(e.x - s.x) < 1e-8L && std::fabs(e.y - s.y) < 1e-8L;
            ok = ok && matched;
        }
        agree += ok;
    }
    if (tested_out) *tested_out = tested;
    return agree;
}

}  // namespace veer::oracle
