#include "veer/polyalg.hpp"

#include <algorithm>
#include <deque>
#include <fmt/format.h>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

namespace veer {

namespace {

// Exponents of the edge module are read with deck translates acting inversely.
constexpr bool kTautInvert = true;

std::vector<char> spanning_tree(const VeeringTriangulation& v, TreeChoice choice) {
    std::vector<char> in_tree(v.num_faces(), 0);
    std::vector<char> seen(v.n, 0);
    std::deque<int> work;
    int root = choice == TreeChoice::Bfs ? 0 : v.n - 1;
    seen[root] = 1;
    work.push_back(root);
    while (!work.empty()) {
        int t;
        if (choice == TreeChoice::Bfs) {
            t = work.front();
            work.pop_front();
        } else {
            t = work.back();
            work.pop_back();
        }
        for (int k = 0; k < 4; ++k) {
            int f = choice == TreeChoice::Bfs ? k : 3 - k;
            int u = v.raw.glue[t][f].tet;
            if (seen[u]) continue;
            seen[u] = 1;
            in_tree[v.face_id[t][f]] = 1;
            work.push_back(u);
        }
    }
    return in_tree;
}

int to_int(const mpz_class& x) {
    if (!x.fits_sint_p()) throw std::overflow_error("homology class coordinate too large");
    return static_cast<int>(x.get_si());
}

Exponent mat_vec(const IntMatrix& U, const Exponent& x) {
    Exponent y(U.size(), 0);
    for (std::size_t i = 0; i < U.size(); ++i) {
        mpz_class s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += U[i][j] * x[j];
        y[i] = to_int(s);
    }
    return y;
}

void axpy(Exponent& y, const Exponent& x, int s) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

double binom(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

LaurentPoly monomial_inverse(const LaurentPoly& u) {
    const auto& [e, c] = *u.terms().begin();
    Exponent ne = e;
    for (auto& x : ne) x = -x;
    return LaurentPoly::monomial(ne, c);
}

bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i)
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    return false;
}

bool is_one(const RPoly& g) { return g == RPoly::constant(g.nv(), 1); }

}  // namespace

Presentation pi1_presentation(const VeeringTriangulation& v, TreeChoice tree) {
    auto in_tree = spanning_tree(v, tree);
    Presentation p;
    p.generator_of_face.assign(v.num_faces(), -1);
    for (int f = 0; f < v.num_faces(); ++f)
        if (!in_tree[f]) {
            p.generator_of_face[f] = p.num_generators();
            p.generators.push_back(f);
        }
    for (int e = 0; e < v.edges.count; ++e) {
        Word w;
        for (const auto& c : v.walk[e]) {
            int g = p.generator_of_face[v.face_id[c.tet][c.exit]];
            if (g >= 0) w.push_back({g, v.is_top_face(c.tet, c.exit) ? 1 : -1});
        }
        p.relators.push_back(std::move(w));
    }
    return p;
}

Exponent HomologyData::class_of_word(const Word& w) const {
    Exponent c(b1, 0);
    for (const auto& l : w) axpy(c, generator_class[l.gen], l.exp);
    return c;
}

Exponent HomologyData::class_of_cycle(const std::vector<Letter>& faces) const {
    Exponent c(b1, 0);
    for (const auto& l : faces) axpy(c, face_class[l.gen], l.exp);
    return c;
}

HomologyData homology(const VeeringTriangulation& v, TreeChoice tree) {
    return homology(v, pi1_presentation(v, tree));
}

HomologyData homology(const VeeringTriangulation& v, const Presentation& p) {
    const int g = p.num_generators();
    IntMatrix R(p.relators.size(), std::vector<mpz_class>(g, 0));
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (const auto& l : p.relators[i]) R[i][l.gen] += l.exp;
    auto snf = smith_normal_form(R, g);
    HomologyData h;
    h.b1 = g - snf.rank;
    for (const auto& d : snf.diag)
        if (d > 1) h.torsion.push_back(d);

    std::vector<Exponent> raw(v.num_faces(), Exponent(h.b1, 0));
    for (int j = 0; j < g; ++j)
        for (int c = 0; c < h.b1; ++c) raw[p.generators[j]][c] = to_int(snf.V[j][snf.rank + c]);

    // Potential along the reference tree; the adjusted classes vanish on that tree.
    auto ref_tree = spanning_tree(v, TreeChoice::Bfs);
    std::vector<Exponent> phi(v.n);
    phi[0] = Exponent(h.b1, 0);
    std::deque<int> work{0};
    while (!work.empty()) {
        int t = work.front();
        work.pop_front();
        for (int f = 0; f < 4; ++f) {
            int id = v.face_id[t][f];
            int u = v.raw.glue[t][f].tet;
            if (!ref_tree[id] || !phi[u].empty()) continue;
            phi[u] = phi[t];
            axpy(phi[u], raw[id], v.face_below[id].tet == t ? 1 : -1);
            work.push_back(u);
        }
    }
    std::vector<Exponent> ref(v.num_faces());
    for (int f = 0; f < v.num_faces(); ++f) {
        ref[f] = raw[f];
        axpy(ref[f], phi[v.face_below[f].tet], 1);
        axpy(ref[f], phi[v.face_above[f].tet], -1);
    }
    // Canonical basis: Hermite form of the reference cycle classes.
    IntMatrix ct(h.b1);
    for (int f = 0; f < v.num_faces(); ++f)
        if (!ref_tree[f])
            for (int c = 0; c < h.b1; ++c) ct[c].push_back(ref[f][c]);
    IntMatrix U = identity_matrix(h.b1);
    if (h.b1 > 0) U = row_hermite(ct, static_cast<int>(ct[0].size())).U;
    h.face_class.resize(v.num_faces());
    h.reference_face_class.resize(v.num_faces());
    for (int f = 0; f < v.num_faces(); ++f) {
        h.face_class[f] = mat_vec(U, raw[f]);
        h.reference_face_class[f] = mat_vec(U, ref[f]);
    }
    for (int j = 0; j < g; ++j) h.generator_class.push_back(h.face_class[p.generators[j]]);
    return h;
}

LaurentPoly fox_derivative(const Word& w, int gen, const std::vector<Exponent>& gen_class) {
    if (gen < 0 || gen >= static_cast<int>(gen_class.size()))
        throw std::out_of_range(fmt::format("unknown generator {}", gen));
    const int nv = static_cast<int>(gen_class[gen].size());
    LaurentPoly d(nv);
    Exponent prefix(nv, 0);
    for (const auto& l : w) {
        if (l.gen < 0 || l.gen >= static_cast<int>(gen_class.size()))
            throw std::out_of_range(fmt::format("unknown generator {}", l.gen));
        if (l.gen == gen) {
            if (l.exp > 0) {
                d.add_term(prefix, 1);
            } else {
                Exponent e = prefix;
                axpy(e, gen_class[gen], -1);
                d.add_term(e, -1);
            }
        }
        axpy(prefix, gen_class[l.gen], l.exp);
    }
    return d;
}

LaurentMatrix fox_matrix(const Presentation& p, const HomologyData& h) {
    LaurentMatrix m;
    for (const auto& r : p.relators) {
        std::vector<LaurentPoly> row;
        for (int j = 0; j < p.num_generators(); ++j) row.push_back(fox_derivative(r, j, h.generator_class));
        m.push_back(std::move(row));
    }
    return m;
}

LaurentPoly fitting_gcd(LaurentMatrix m, int r, const FittingOptions& opt) {
    const int nv = m.empty() || m[0].empty() ? 0 : m[0][0].nvars();
    auto one = LaurentPoly::constant(nv, 1);
    if (r <= 0) return one;
    // Unit pivots leave the Fitting ideals unchanged while shrinking the matrix.
    while (r > 0 && !m.empty()) {
        const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
        std::vector<int> rnz(rows, 0), cnz(cols, 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!m[i][j].is_zero()) {
                    ++rnz[i];
                    ++cnz[j];
                }
        int bi = -1, bj = -1;
        long best = 0;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (m[i][j].is_unit()) {
                    long cost = static_cast<long>(rnz[i] - 1) * (cnz[j] - 1);
                    if (bi < 0 || cost < best) {
                        bi = i;
                        bj = j;
                        best = cost;
                    }
                }
        if (bi < 0) break;
        LaurentPoly inv = monomial_inverse(m[bi][bj]);
        for (int i = 0; i < rows; ++i) {
            if (i == bi || m[i][bj].is_zero()) continue;
            LaurentPoly f = m[i][bj] * inv;
            for (int j = 0; j < cols; ++j)
                if (!m[bi][j].is_zero()) m[i][j] -= f * m[bi][j];
        }
        m.erase(m.begin() + bi);
        for (auto& row : m) row.erase(row.begin() + bj);
        --r;
    }
    if (r == 0) return one;
    std::erase_if(m, [](const auto& row) { return std::all_of(row.begin(), row.end(), [](const auto& x) { return x.is_zero(); }); });
    if (m.empty()) return LaurentPoly(nv);
    for (int j = static_cast<int>(m[0].size()) - 1; j >= 0; --j) {
        bool zero = std::all_of(m.begin(), m.end(), [&](const auto& row) { return row[j].is_zero(); });
        if (zero)
            for (auto& row : m) row.erase(row.begin() + j);
    }
    const int rows = static_cast<int>(m.size()), cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    if (r > std::min(rows, cols)) return LaurentPoly(nv);

    // Shift rows then columns into nonnegative exponents (multiplication by units).
    auto shift_to_zero = [&](auto get) {
        Exponent lo;
        bool any = false;
        get([&](LaurentPoly& x) {
            if (x.is_zero()) return;
            Exponent e = x.min_exponents();
            if (!any) lo = e;
            else
                for (int q = 0; q < nv; ++q) lo[q] = std::min(lo[q], e[q]);
            any = true;
        });
        if (!any) return;
        for (auto& q : lo) q = -q;
        get([&](LaurentPoly& x) { x = x.shifted(lo); });
    };
    for (int i = 0; i < rows; ++i)
        shift_to_zero([&](auto fn) {
            for (int j = 0; j < cols; ++j) fn(m[i][j]);
        });
    for (int j = 0; j < cols; ++j)
        shift_to_zero([&](auto fn) {
            for (int i = 0; i < rows; ++i) fn(m[i][j]);
        });
    std::vector<std::vector<RPoly>> a(rows, std::vector<RPoly>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = RPoly::from_laurent(m[i][j]);

    RPoly g = RPoly::zero(nv);
    bool exact = binom(rows, r) * binom(cols, r) <= static_cast<double>(opt.max_enumerated_minors);
    if (exact) {
        std::vector<int> rs(r), cs(r);
        for (int i = 0; i < r; ++i) rs[i] = i;
        do {
            for (int i = 0; i < r; ++i) cs[i] = i;
            do {
                std::vector<std::vector<RPoly>> sub(r, std::vector<RPoly>(r));
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j) sub[i][j] = a[rs[i]][cs[j]];
                RPoly d = determinant(sub), q;
                if (!g.is_zero() && exact_div(d, g, q)) continue;
                g = gcd(g, d);
                if (is_one(g)) return one;
            } while (next_combination(cs, cols));
        } while (next_combination(rs, rows));
        return g.to_laurent().normalized();
    }
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int trial = 0; trial < opt.random_trials; ++trial) {
        // Cauchy-Binet: det(P A Q) is a combination of r x r minors.
        std::vector<std::vector<RPoly>> pa(r, std::vector<RPoly>(cols, RPoly::zero(nv)));
        for (int i = 0; i < r; ++i) {
            for (int k = 0; k < rows; ++k) {
                int c = rows == r ? (i == k) : dist(rng);
                if (c == 0) continue;
                auto cc = RPoly::constant(nv, c);
                for (int j = 0; j < cols; ++j)
                    if (!a[k][j].is_zero()) pa[i][j] = pa[i][j] + a[k][j] * cc;
            }
        }
        std::vector<std::vector<RPoly>> paq(r, std::vector<RPoly>(r, RPoly::zero(nv)));
        for (int j2 = 0; j2 < r; ++j2)
            for (int j = 0; j < cols; ++j) {
                int c = cols == r ? (j == j2) : dist(rng);
                if (c == 0) continue;
                auto cc = RPoly::constant(nv, c);
                for (int i = 0; i < r; ++i)
                    if (!pa[i][j].is_zero()) paq[i][j2] = paq[i][j2] + pa[i][j] * cc;
            }
        RPoly d = determinant(paq), q;
        if (!g.is_zero() && exact_div(d, g, q)) continue;
        g = gcd(g, d);
    }
    return g.to_laurent().normalized_primitive();
}

LaurentPoly alexander_polynomial(const VeeringTriangulation& v, TreeChoice tree) {
    auto p = pi1_presentation(v, tree);
    auto h = homology(v, p);
    return fitting_gcd(fox_matrix(p, h), p.num_generators() - 1);
}

LaurentMatrix taut_relation_matrix(const VeeringTriangulation& v, const HomologyData& h) {
    const int b1 = h.b1;
    std::vector<std::array<Exponent, 6>> off(v.n);
    for (int e = 0; e < v.edges.count; ++e) {
        Exponent cur(b1, 0);
        for (const auto& c : v.walk[e]) {
            off[c.tet][local_edge(c.a, c.b)] = cur;
            int f = v.face_id[c.tet][c.exit];
            axpy(cur, h.face_class[f], v.is_top_face(c.tet, c.exit) ? -1 : 1);
        }
        if (std::any_of(cur.begin(), cur.end(), [](int x) { return x != 0; }))
            throw std::logic_error("edge holonomy is nontrivial");
    }
    LaurentMatrix m(v.num_faces(), std::vector<LaurentPoly>(v.edges.count, LaurentPoly(b1)));
    for (int f = 0; f < v.num_faces(); ++f) {
        int t = v.face_above[f].tet, fc = v.face_above[f].face;
        for (int le = 0; le < 6; ++le) {
            auto [a, b] = kEdgeVerts[le];
            if (a == fc || b == fc) continue;
            Exponent e = off[t][le];
            if (kTautInvert)
                for (auto& x : e) x = -x;
            m[f][v.edges.of[t][le]].add_term(e, le == v.bottom_local[t] ? 1 : -1);
        }
    }
    return m;
}

LaurentPoly taut_polynomial(const VeeringTriangulation& v, TreeChoice tree) {
    auto h = homology(v, tree);
    return fitting_gcd(taut_relation_matrix(v, h), v.edges.count);
}

LaurentPoly cyclotomic(int k) {
    if (k < 1) throw std::invalid_argument("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<int, LaurentPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    std::vector<mpz_class> c(k + 1, 0);
    c[0] = -1;
    c[k] = 1;
    LaurentPoly p = LaurentPoly::univariate(c);
    for (int d = 1; d < k; ++d)
        if (k % d == 0) p = laurent_exact_div(p, cyclotomic(d));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(k, p);
    return p;
}

LaurentPoly remove_cyclotomic_factors(const LaurentPoly& p_in, int max_order) {
    if (p_in.is_zero()) throw std::invalid_argument("zero polynomial");
    if (p_in.nvars() != 1) throw std::invalid_argument("univariate polynomial expected");
    LaurentPoly p = p_in.normalized();
    for (int k = 1; k <= max_order; ++k) {
        LaurentPoly c = cyclotomic(k);
        int dc = c.max_exponents()[0];
        while (p.max_exponents()[0] >= dc) {
            RPoly q;
            if (!exact_div(RPoly::from_laurent(p), RPoly::from_laurent(c), q)) break;
            p = q.to_laurent().normalized();
        }
    }
    return p;
}

LaurentPoly specialize(const LaurentPoly& p, const std::vector<long>& a) {
    if (static_cast<int>(a.size()) != p.nvars()) throw std::invalid_argument("class length differs from variable count");
    LaurentPoly out(1);
    for (const auto& [e, c] : p.terms()) {
        long s = 0;
        for (int i = 0; i < p.nvars(); ++i) s += a[i] * e[i];
        out.add_term({static_cast<int>(s)}, c);
    }
    return out;
}

mpz_class newton_norm(const LaurentPoly& p, const std::vector<long>& a) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (static_cast<int>(a.size()) != p.nvars()) throw std::invalid_argument("class length differs from variable count");
    long lo = 0, hi = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        long s = 0;
        for (int i = 0; i < p.nvars(); ++i) s += a[i] * e[i];
        if (first || s < lo) lo = s;
        if (first || s > hi) hi = s;
        first = false;
    }
    return mpz_class(hi - lo);
}

}  // namespace veer
