#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "veer/laurent.hpp"
#include "veer/rootiso.hpp"

namespace veer {

/// Bivariate integer polynomial as a polynomial in y whose coefficients are polynomials in x.
struct BPoly {
    std::vector<UPoly> c;  // c[j] multiplies y^j

    static BPoly from_laurent(const LaurentPoly& p);  // requires two variables, nonnegative exponents
    LaurentPoly to_laurent() const;
    int deg_y() const { return static_cast<int>(c.size()) - 1; }
    int deg_x() const;
    bool is_zero() const { return c.empty(); }
    BPoly swapped() const;
    bool operator==(const BPoly& o) const { return c == o.c; }
};

struct BivariatePair {
    BPoly a, b;
};

/// p(x) a - q(x) y^(da-db) b with p, q the leading y-coefficients of b and a; integer content removed.
BPoly lead_eliminate(const BPoly& a, const BPoly& b);

enum class Domain { All, Positive };

struct SolveOptions {
    double x_width = 1e-40;
    double y_width = 1e-30;
    double verify_width = 1e-8;
    /// Eliminate whichever variable has the smaller degree.
    bool choose_variable = true;
    bool reduce_exponents = true;
    int max_depth = 6;
};

struct BivariateSolution {
    mpq_class x_lo, x_hi, y_lo, y_hi;  // certified box in the original variables
    double x = 0, y = 0;
};

struct SolveResult {
    std::vector<BivariateSolution> solutions;
    std::vector<LaurentPoly> common_factors;  // curves of solutions reported, not enumerated
    std::vector<std::string> notes;
};

SolveResult solve_bivariate(const BivariatePair& pair, Domain domain, const SolveOptions& opt = {});

/// Interval image of p over the box, as [lo, hi].
std::pair<mpq_class, mpq_class> eval_box(const BPoly& p, const mpq_class& xl, const mpq_class& xh, const mpq_class& yl,
                                         const mpq_class& yh);

}  // namespace veer
