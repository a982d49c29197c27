#include "veer/intmat.hpp"

#include <stdexcept>
#include <utility>

namespace veer {

namespace {

mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void row_axpy(std::vector<mpz_class>& dst, const std::vector<mpz_class>& src, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

}  // namespace

IntMatrix identity_matrix(int n) {
    IntMatrix m(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

SmithForm smith_normal_form(IntMatrix a, int cols) {
    const int rows = static_cast<int>(a.size());
    for (const auto& r : a)
        if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("ragged matrix");
    SmithForm s;
    s.V = identity_matrix(cols);
    auto col_op = [&](int dst, int src, const mpz_class& q) {  // col_dst -= q col_src
        if (q == 0) return;
        for (int i = 0; i < rows; ++i) a[i][dst] -= q * a[i][src];
        for (int i = 0; i < cols; ++i) s.V[i][dst] -= q * s.V[i][src];
    };
    auto col_swap = [&](int x, int y) {
        if (x == y) return;
        for (int i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
        for (int i = 0; i < cols; ++i) std::swap(s.V[i][x], s.V[i][y]);
    };
    int t = 0;
    for (; t < rows && t < cols; ++t) {
        int bi = -1, bj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0 && (bi < 0 || abs(a[i][j]) < abs(a[bi][bj]))) {
                    bi = i;
                    bj = j;
                }
        if (bi < 0) break;
        std::swap(a[t], a[bi]);
        col_swap(t, bj);
        while (true) {
            bool dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                row_axpy(a[i], a[t], fdiv(a[i][t], a[t][t]));
                if (a[i][t] != 0) dirty = true;
            }
            if (dirty) {
                int b = t;
                for (int i = t + 1; i < rows; ++i)
                    if (a[i][t] != 0 && abs(a[i][t]) < abs(a[b][t])) b = i;
                std::swap(a[t], a[b]);
                continue;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                col_op(j, t, fdiv(a[t][j], a[t][t]));
                if (a[t][j] != 0) dirty = true;
            }
            if (dirty) {
                int b = t;
                for (int j = t + 1; j < cols; ++j)
                    if (a[t][j] != 0 && abs(a[t][j]) < abs(a[t][b])) b = j;
                col_swap(t, b);
                continue;
            }
            int bad = -1;
            for (int i = t + 1; i < rows && bad < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            for (int j = 0; j < cols; ++j) a[t][j] += a[bad][j];
        }
        if (a[t][t] < 0)
            for (auto& x : a[t]) x = -x;
        s.diag.push_back(a[t][t]);
    }
    s.rank = t;
    return s;
}

HermiteForm row_hermite(const IntMatrix& a, int cols) {
    const int rows = static_cast<int>(a.size());
    HermiteForm h{a, identity_matrix(rows)};
    auto& H = h.H;
    auto& U = h.U;
    int row = 0;
    for (int c = 0; c < cols && row < rows; ++c) {
        while (true) {
            int b = -1;
            for (int i = row; i < rows; ++i)
                if (H[i][c] != 0 && (b < 0 || abs(H[i][c]) < abs(H[b][c]))) b = i;
            if (b < 0) break;
            std::swap(H[row], H[b]);
            std::swap(U[row], U[b]);
            bool clean = true;
            for (int i = row + 1; i < rows; ++i) {
                if (H[i][c] == 0) continue;
                mpz_class q = fdiv(H[i][c], H[row][c]);
                row_axpy(H[i], H[row], q);
                row_axpy(U[i], U[row], q);
                if (H[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (H[row][c] == 0) continue;
        if (H[row][c] < 0) {
            for (auto& x : H[row]) x = -x;
            for (auto& x : U[row]) x = -x;
        }
        for (int i = 0; i < row; ++i) {
            mpz_class q = fdiv(H[i][c], H[row][c]);
            row_axpy(H[i], H[row], q);
            row_axpy(U[i], U[row], q);
        }
        ++row;
    }
    return h;
}

}  // namespace veer
