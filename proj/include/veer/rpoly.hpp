#pragma once

#include <gmpxx.h>

#include <vector>

#include "veer/laurent.hpp"

namespace veer {

/// Dense recursive polynomial in nv variables with nonnegative exponents; the last variable is the main one.
class RPoly {
public:
    RPoly() = default;
    static RPoly zero(int nv);
    static RPoly constant(int nv, const mpz_class& c);
    /// Coefficients (each in nv-1 variables) of the main variable, lowest first.
    static RPoly from_coeffs(int nv, std::vector<RPoly> co);
    /// Requires nonnegative exponents.
    static RPoly from_laurent(const LaurentPoly& p);
    LaurentPoly to_laurent() const;

    int nv() const { return nv_; }
    bool is_zero() const { return nv_ == 0 ? c_ == 0 : co_.empty(); }
    /// Degree in the main variable, -1 for zero.
    int deg() const;
    const mpz_class& value() const { return c_; }
    const std::vector<RPoly>& coeffs() const { return co_; }
    const RPoly& lc() const { return co_.back(); }
    /// Leading integer coefficient through every level.
    const mpz_class& base_lc() const;
    std::size_t num_terms() const;

    friend RPoly operator+(const RPoly& a, const RPoly& b);
    friend RPoly operator-(const RPoly& a, const RPoly& b);
    friend RPoly operator*(const RPoly& a, const RPoly& b);
    RPoly operator-() const;
    bool operator==(const RPoly& o) const;

    /// Multiply by a polynomial in the lower variables, placed at main degree `shift`.
    RPoly mul_coeff(const RPoly& c, int shift = 0) const;

    friend bool exact_div(const RPoly& a, const RPoly& b, RPoly& q);
    friend RPoly content(const RPoly& a);
    friend mpz_class icontent(const RPoly& a);

private:
    void trim();
    void collect(LaurentPoly& out, Exponent& e) const;
    int nv_ = 0;
    mpz_class c_ = 0;
    std::vector<RPoly> co_;
};

bool exact_div(const RPoly& a, const RPoly& b, RPoly& q);
RPoly exact_div(const RPoly& a, const RPoly& b);
RPoly content(const RPoly& a);
mpz_class icontent(const RPoly& a);
RPoly primitive_part(const RPoly& a);
RPoly pseudo_rem(const RPoly& a, const RPoly& b);
/// Greatest common divisor with positive leading coefficient.
RPoly gcd(const RPoly& a, const RPoly& b);
/// Fraction-free (Bareiss) determinant.
RPoly determinant(std::vector<std::vector<RPoly>> m);

/// gcd of Laurent polynomials, as a normalized Laurent polynomial.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);
/// Exact quotient a/b of Laurent polynomials; throws if b does not divide a.
LaurentPoly laurent_exact_div(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace veer
