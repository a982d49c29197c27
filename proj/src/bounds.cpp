#include "veer/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace veer {

namespace {

void require_above_one(double P) {
    if (!(P > 1) || !std::isfinite(P)) throw std::domain_error("normalized dilatation must exceed 1");
}

template <class F>
Maximum golden_max(F f, double lo, double hi, double tol) {
    const double r = (std::sqrt(5.0) - 1) / 2;
    double c = hi - r * (hi - lo), d = lo + r * (hi - lo);
    double fc = f(c), fd = f(d);
    while (hi - lo > tol) {
        if (fc > fd) {
            hi = d, d = c, fd = fc;
            c = hi - r * (hi - lo);
            fc = f(c);
        } else {
            lo = c, c = d, fc = fd;
            d = lo + r * (hi - lo);
            fd = f(d);
        }
    }
    double m = (lo + hi) / 2;
    return {f(m), m};
}

// Coarse scan over [lo, hi] followed by golden section on the bracket of the best sample.
template <class F>
Maximum bracket_max(F f, double lo, double hi, int samples) {
    int best = 0;
    double fb = f(lo);
    for (int i = 1; i <= samples; ++i) {
        double v = f(lo + (hi - lo) * i / samples);
        if (v > fb) fb = v, best = i;
    }
    double a = lo + (hi - lo) * std::max(best - 1, 0) / samples;
    double b = lo + (hi - lo) * std::min(best + 1, samples) / samples;
    Maximum m = golden_max(f, a, b, 1e-9);
    if (best == samples && f(hi) >= m.value) return {f(hi), hi};
    return m;
}

}  // namespace

double bound_single_hook(double P) {
    require_above_one(P);
    return 0.5 * P * P;
}

double bound_double_hook(double P) {
    require_above_one(P);
    return 0.25 * P * P + 1;
}

double bound_at(double P) {
    require_above_one(P);
    const double p3 = P * P * P;
    return (p3 - 1) / 2 * (2 * std::log(p3) / std::log(2 / p3 + 1) - 1);
}

double f1(double x, double u) {
    return 0.5 * x * x - 0.5 * x * (u + 1 / u) - std::pow(1.5, 4.0 / 3.0) * std::cbrt(u * u) + 2 - 1 / (2 * x);
}

double f2(double x, double a) {
    return 0.5 * x * x - 0.5 * x * (std::sqrt(a / (a + 1)) + std::sqrt((a + 1) / a)) - 0.5 * a - 1 / a + 2 -
           1 / (2 * x);
}

Maximum f1_max(double x) {
    require_above_one(x);
    // f1 tends to -infinity as u -> 0
    return bracket_max([x](double u) { return f1(x, u); }, 1e-6, 1.0, 2000);
}

Maximum f2_max(double x) {
    require_above_one(x);
    // f2 decreases once a exceeds 2 + x
    const double hi = 4 + 2 * x;
    return bracket_max([x](double a) { return f2(x, a); }, 1.0, hi, 4000);
}

double bound_f1(double P) { return f1_max(P).value; }
double bound_f2(double P) { return f2_max(P).value; }

EiirpBound bound_eiirp(double P) {
    if (!(P >= 4 * std::sqrt(2.0) && P < 8)) throw std::domain_error("bound requires 4 sqrt(2) <= P < 8");
    const double p2 = P * P;
    EiirpBound b;
    b.components = {p2 / 3 + 0.5,
                    0.5 * p2 - P,
                    0.5 * (p2 - std::pow(P, 4.0 / 3.0) - std::pow(P, 2.0 / 3.0) + 3),
                    0.5 * p2 - std::sqrt(p2 + 4 * P) + 2,
                    bound_f1(P),
                    bound_f2(P),
                    8 * std::log(P) / std::log(3.0)};
    b.max = *std::max_element(b.components.begin(), b.components.end());
    return b;
}

}  // namespace veer
