#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace veer {

using Exponent = std::vector<int>;

/// Multivariate Laurent polynomial with integer coefficients.
class LaurentPoly {
public:
    using TermMap = std::map<Exponent, mpz_class>;

    explicit LaurentPoly(int nvars = 1) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, const mpz_class& c);
    static LaurentPoly monomial(const Exponent& e, const mpz_class& c = 1);
    /// coeffs[i] is the coefficient of t^(i + shift).
    static LaurentPoly univariate(const std::vector<mpz_class>& coeffs, int shift = 0);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    mpz_class coeff(const Exponent& e) const;

    void add_term(const Exponent& e, const mpz_class& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const mpz_class& c);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const mpz_class& c) { return a *= c; }
    bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly shifted(const Exponent& by) const;
    Exponent min_exponents() const;
    Exponent max_exponents() const;
    mpz_class content() const;
    LaurentPoly primitive_part() const;
    /// Single term with coefficient +-1.
    bool is_unit() const;
    /// Minimum exponent of every variable shifted to 0, lexicographically first term positive.
    LaurentPoly normalized() const;
    /// Same as normalized but also divides out the integer content.
    LaurentPoly normalized_primitive() const { return primitive_part().normalized(); }
    bool equal_up_to_unit(const LaurentPoly& o) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    int nvars_;
    TermMap terms_;
};

std::vector<std::string> default_var_names(int nvars);

/// Accepts the printed form as well as the usual shorthand, e.g. "t^2 - 3*t + 1" or "x*y^(-1) - 2".
LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& names);

}  // namespace veer
