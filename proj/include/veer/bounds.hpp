#pragma once

#include <array>

namespace veer {

/// Tetrahedron-count bounds as functions of the normalized dilatation P.
double bound_single_hook(double P);
double bound_double_hook(double P);
double bound_at(double P);

struct Maximum {
    double value = 0;
    double argmax = 0;
};

double f1(double x, double u);
double f2(double x, double a);
/// Maximum of f1 over 0 < u <= 1.
Maximum f1_max(double x);
/// Maximum of f2 over a >= 1.
Maximum f2_max(double x);
double bound_f1(double P);
double bound_f2(double P);

struct EiirpBound {
    std::array<double, 7> components{};
    double max = 0;
};

/// Requires 4 sqrt(2) <= P < 8.
EiirpBound bound_eiirp(double P);

}  // namespace veer
