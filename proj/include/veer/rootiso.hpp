#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "veer/laurent.hpp"

namespace veer {

/// Dense univariate integer polynomial, lowest coefficient first, no trailing zeros.
using UPoly = std::vector<mpz_class>;

UPoly make_upoly(std::vector<mpz_class> c);
/// Laurent polynomial in one variable with its lowest power divided out.
UPoly to_upoly(const LaurentPoly& p);
int degree(const UPoly& p);
UPoly derivative(const UPoly& p);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
UPoly upoly_gcd(const UPoly& a, const UPoly& b);
UPoly square_free_part(const UPoly& p);
int sign_at(const UPoly& p, const mpq_class& x);
mpq_class eval_at(const UPoly& p, const mpq_class& x);

std::vector<UPoly> sturm_sequence(const UPoly& p);
/// Number of distinct roots in (a, b].
int sturm_count(const std::vector<UPoly>& seq, const mpq_class& a, const mpq_class& b);
mpz_class cauchy_bound(const UPoly& p);

/// Rational interval (lo, hi] holding exactly one root of a square-free poly; lo == hi marks an exact root.
struct RootEnclosure {
    UPoly poly;
    mpq_class lo, hi;

    mpq_class width() const { return hi - lo; }
    mpq_class midpoint() const { return (lo + hi) / 2; }
    double approx() const { return midpoint().get_d(); }
    /// One bisection step.
    void halve();
    void refine(const mpq_class& eps);
};

std::vector<RootEnclosure> isolate_real_roots(const UPoly& p);
/// Roots in (lo, hi] only.
std::vector<RootEnclosure> isolate_real_roots(const UPoly& p, const mpq_class& lo, const mpq_class& hi);
RootEnclosure largest_real_root(const UPoly& p, const mpq_class& eps);

/// Characteristic polynomial of C^k for the companion matrix C of a monic p: roots are the k-th powers.
UPoly power_roots_poly(const UPoly& p, int k);
/// Enclosure of r^k for a positive root r, certified against power_roots_poly.
RootEnclosure power_enclosure(const RootEnclosure& r, int k, const mpq_class& eps);

}  // namespace veer
