#pragma once

#include <gmpxx.h>

#include <vector>

namespace veer {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix identity_matrix(int n);

struct SmithForm {
    std::vector<mpz_class> diag;  // nonzero invariant factors, each dividing the next
    IntMatrix V;                  // unimodular column transform: U * A * V = D
    int rank = 0;
};

SmithForm smith_normal_form(IntMatrix a, int cols);

struct HermiteForm {
    IntMatrix H;  // row echelon, positive pivots, entries above each pivot reduced into [0, pivot)
    IntMatrix U;  // unimodular with U * A = H
};

HermiteForm row_hermite(const IntMatrix& a, int cols);

}  // namespace veer
