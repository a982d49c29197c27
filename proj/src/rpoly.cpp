#include "veer/rpoly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace veer {

RPoly RPoly::zero(int nv) {
    RPoly r;
    r.nv_ = nv;
    return r;
}

RPoly RPoly::constant(int nv, const mpz_class& c) {
    RPoly r;
    r.nv_ = nv;
    if (nv == 0) {
        r.c_ = c;
    } else if (c != 0) {
        r.co_.push_back(constant(nv - 1, c));
    }
    return r;
}

RPoly RPoly::from_coeffs(int nv, std::vector<RPoly> co) {
    RPoly r = zero(nv);
    r.co_ = std::move(co);
    r.trim();
    return r;
}

void RPoly::trim() {
    while (!co_.empty() && co_.back().is_zero()) co_.pop_back();
}

int RPoly::deg() const {
    if (nv_ == 0) return c_ == 0 ? -1 : 0;
    return static_cast<int>(co_.size()) - 1;
}

const mpz_class& RPoly::base_lc() const { return nv_ == 0 ? c_ : co_.back().base_lc(); }

std::size_t RPoly::num_terms() const {
    if (nv_ == 0) return c_ == 0 ? 0 : 1;
    std::size_t n = 0;
    for (const auto& c : co_) n += c.num_terms();
    return n;
}

RPoly RPoly::from_laurent(const LaurentPoly& p) {
    const int nv = p.nvars();
    RPoly r = zero(nv);
    for (const auto& [e, c] : p.terms()) {
        RPoly* cur = &r;
        for (int v = nv - 1; v >= 0; --v) {
            if (e[v] < 0) throw std::invalid_argument("negative exponent");
            if (static_cast<int>(cur->co_.size()) <= e[v]) cur->co_.resize(e[v] + 1, zero(v));
            cur = &cur->co_[e[v]];
        }
        cur->c_ += c;
    }
    // coefficients may have been created empty; trim bottom-up
    auto fix = [](auto&& self, RPoly& x) -> void {
        if (x.nv_ == 0) return;
        for (auto& c : x.co_) self(self, c);
        x.trim();
    };
    fix(fix, r);
    return r;
}

void RPoly::collect(LaurentPoly& out, Exponent& e) const {
    if (nv_ == 0) {
        if (c_ != 0) out.add_term(e, c_);
        return;
    }
    for (std::size_t i = 0; i < co_.size(); ++i) {
        e[nv_ - 1] = static_cast<int>(i);
        co_[i].collect(out, e);
    }
    e[nv_ - 1] = 0;
}

LaurentPoly RPoly::to_laurent() const {
    LaurentPoly out(nv_);
    Exponent e(nv_, 0);
    collect(out, e);
    return out;
}

RPoly operator+(const RPoly& a, const RPoly& b) {
    if (a.nv_ == 0) return RPoly::constant(0, a.c_ + b.c_);
    RPoly r = RPoly::zero(a.nv_);
    std::size_t n = std::max(a.co_.size(), b.co_.size());
    r.co_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= a.co_.size()) r.co_.push_back(b.co_[i]);
        else if (i >= b.co_.size()) r.co_.push_back(a.co_[i]);
        else r.co_.push_back(a.co_[i] + b.co_[i]);
    }
    r.trim();
    return r;
}

RPoly RPoly::operator-() const {
    RPoly r = *this;
    if (nv_ == 0) r.c_ = -c_;
    else
        for (auto& c : r.co_) c = -c;
    return r;
}

RPoly operator-(const RPoly& a, const RPoly& b) { return a + (-b); }

RPoly operator*(const RPoly& a, const RPoly& b) {
    if (a.nv_ == 0) return RPoly::constant(0, a.c_ * b.c_);
    if (a.is_zero() || b.is_zero()) return RPoly::zero(a.nv_);
    RPoly r = RPoly::zero(a.nv_);
    r.co_.assign(a.co_.size() + b.co_.size() - 1, RPoly::zero(a.nv_ - 1));
    for (std::size_t i = 0; i < a.co_.size(); ++i) {
        if (a.co_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.co_.size(); ++j) {
            if (b.co_[j].is_zero()) continue;
            r.co_[i + j] = r.co_[i + j] + a.co_[i] * b.co_[j];
        }
    }
    r.trim();
    return r;
}

bool RPoly::operator==(const RPoly& o) const {
    if (nv_ != o.nv_) return false;
    if (nv_ == 0) return c_ == o.c_;
    return co_ == o.co_;
}

RPoly RPoly::mul_coeff(const RPoly& c, int shift) const {
    if (is_zero() || c.is_zero()) return zero(nv_);
    RPoly r = zero(nv_);
    r.co_.assign(static_cast<std::size_t>(shift), zero(nv_ - 1));
    for (const auto& x : co_) r.co_.push_back(x * c);
    r.trim();
    return r;
}

bool exact_div(const RPoly& a, const RPoly& b, RPoly& q) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.nv_ == 0) {
        if (!mpz_divisible_p(a.c_.get_mpz_t(), b.c_.get_mpz_t())) return false;
        q = RPoly::constant(0, 0);
        mpz_divexact(q.c_.get_mpz_t(), a.c_.get_mpz_t(), b.c_.get_mpz_t());
        return true;
    }
    q = RPoly::zero(a.nv_);
    if (a.is_zero()) return true;
    const int da = a.deg(), db = b.deg();
    if (da < db) return false;
    RPoly r = a;
    q.co_.assign(da - db + 1, RPoly::zero(a.nv_ - 1));
    for (int i = da - db; i >= 0; --i) {
        if (r.deg() < i + db) continue;
        RPoly t;
        if (!exact_div(r.co_[i + db], b.lc(), t)) return false;
        r = r - b.mul_coeff(t, i);
        q.co_[i] = std::move(t);
    }
    q.trim();
    return r.is_zero();
}

RPoly exact_div(const RPoly& a, const RPoly& b) {
    RPoly q;
    if (!exact_div(a, b, q)) throw std::domain_error("inexact polynomial division");
    return q;
}

mpz_class icontent(const RPoly& a) {
    if (a.nv_ == 0) return abs(a.c_);
    mpz_class g = 0;
    for (const auto& c : a.co_) {
        mpz_class h = icontent(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

RPoly content(const RPoly& a) {
    if (a.nv_ == 0) throw std::invalid_argument("content of a constant");
    RPoly g = RPoly::zero(a.nv_ - 1);
    for (const auto& c : a.co_) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.num_terms() == 1 && g.deg() == 0 && g.base_lc() == 1 && g == RPoly::constant(g.nv_, 1)) break;
    }
    return g;
}

namespace {

RPoly div_coeffwise(const RPoly& a, const RPoly& c) {
    std::vector<RPoly> out;
    out.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) out.push_back(x.is_zero() ? x : exact_div(x, c));
    return RPoly::from_coeffs(a.nv(), std::move(out));
}

RPoly normalize_sign(const RPoly& a) { return a.is_zero() || a.base_lc() > 0 ? a : -a; }

template <class F>
RPoly map_ints(const RPoly& p, const F& f) {
    if (p.nv() == 0) return RPoly::constant(0, f(p.value()));
    std::vector<RPoly> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(map_ints(c, f));
    return RPoly::from_coeffs(p.nv(), std::move(out));
}

mpz_class max_norm(const RPoly& p) {
    if (p.nv() == 0) return abs(p.value());
    mpz_class m = 0;
    for (const auto& c : p.coeffs()) m = std::max(m, max_norm(c));
    return m;
}

std::size_t max_degree(const RPoly& p) {
    if (p.nv() == 0) return 0;
    std::size_t d = p.coeffs().size();
    for (const auto& c : p.coeffs()) d = std::max(d, max_degree(c));
    return d;
}

RPoly eval_main(const RPoly& p, const mpz_class& x) {
    RPoly acc = RPoly::zero(p.nv() - 1);
    const RPoly xc = RPoly::constant(p.nv() - 1, x);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * xc + *it;
    return acc;
}

// Heuristic gcd: evaluate the main variable at a large integer, recurse, rebuild by xi-adic expansion.
std::optional<RPoly> heuristic_gcd(const RPoly& a0, const RPoly& b0) {
    if (a0.nv() == 0) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a0.value().get_mpz_t(), b0.value().get_mpz_t());
        return RPoly::constant(0, g);
    }
    const mpz_class ca = icontent(a0), cb = icontent(b0);
    mpz_class g0;
    mpz_gcd(g0.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    const RPoly a = map_ints(a0, [&](const mpz_class& v) { return mpz_class(v / ca); });
    const RPoly b = map_ints(b0, [&](const mpz_class& v) { return mpz_class(v / cb); });
    mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    const std::size_t deg = std::max(max_degree(a), max_degree(b));
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * deg * a.nv() > 200000) break;
        RPoly A = eval_main(a, xi), B = eval_main(b, xi);
        std::optional<RPoly> gamma;
        if (!A.is_zero() && !B.is_zero()) gamma = heuristic_gcd(A, B);
        if (gamma) {
            std::vector<RPoly> digits;
            RPoly rest = *gamma;
            while (!rest.is_zero()) {
                RPoly d = map_ints(rest, [&](const mpz_class& v) {
                    mpz_class r;
                    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
                    if (2 * r > xi) r -= xi;
                    return r;
                });
                rest = map_ints(rest - d, [&](const mpz_class& v) { return mpz_class(v / xi); });
                digits.push_back(std::move(d));
            }
            RPoly G = RPoly::from_coeffs(a.nv(), std::move(digits));
            if (!G.is_zero()) {
                const mpz_class cg = icontent(G);
                G = map_ints(G, [&](const mpz_class& v) { return mpz_class(v / cg); });
                RPoly q;
                if (exact_div(a, G, q) && exact_div(b, G, q))
                    return map_ints(normalize_sign(G), [&](const mpz_class& v) { return mpz_class(v * g0); });
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

}  // namespace

RPoly primitive_part(const RPoly& a) {
    if (a.is_zero()) return a;
    if (a.nv() == 0) return RPoly::constant(0, a.value() > 0 ? 1 : -1);
    return div_coeffwise(a, content(a));
}

RPoly pseudo_rem(const RPoly& a, const RPoly& b) {
    RPoly r = a;
    const int db = b.deg();
    const RPoly& L = b.lc();
    while (!r.is_zero() && r.deg() >= db) {
        int d = r.deg() - db;
        RPoly lr = r.lc();
        r = r.mul_coeff(L) - b.mul_coeff(lr, d);
    }
    return r;
}

RPoly gcd(const RPoly& a, const RPoly& b) {
    if (a.nv() == 0) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.value().get_mpz_t(), b.value().get_mpz_t());
        return RPoly::constant(0, g);
    }
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    if (auto h = heuristic_gcd(a, b)) return *h;
    RPoly ca = content(a), cb = content(b);
    RPoly gc = gcd(ca, cb);
    RPoly pa = div_coeffwise(a, ca), pb = div_coeffwise(b, cb);
    if (pa.deg() < pb.deg()) std::swap(pa, pb);
    while (!pb.is_zero()) {
        if (pb.deg() == 0) {
            pa = RPoly::constant(a.nv(), 1);
            break;
        }
        RPoly r = pseudo_rem(pa, pb);
        pa = std::move(pb);
        pb = r.is_zero() ? r : primitive_part(r);
    }
    pa = normalize_sign(primitive_part(pa));
    return normalize_sign(pa.mul_coeff(gc));
}

RPoly determinant(std::vector<std::vector<RPoly>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw std::invalid_argument("empty matrix");
    const int nv = m[0][0].nv();
    int sign = 1;
    RPoly prev = RPoly::constant(nv, 1);
    for (int k = 0; k < n - 1; ++k) {
        int best = -1;
        std::size_t best_size = 0;
        for (int i = k; i < n; ++i)
            if (!m[i][k].is_zero() && (best < 0 || m[i][k].num_terms() < best_size)) {
                best = i;
                best_size = m[i][k].num_terms();
            }
        if (best < 0) return RPoly::zero(nv);
        if (best != k) {
            std::swap(m[best], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                RPoly x = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(x, prev);
            }
            m[i][k] = RPoly::zero(nv);
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    auto sa = a.normalized(), sb = b.normalized();
    return gcd(RPoly::from_laurent(sa), RPoly::from_laurent(sb)).to_laurent().normalized();
}

LaurentPoly laurent_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return a;
    Exponent ma = a.min_exponents(), mb = b.min_exponents();
    Exponent na = ma, nb = mb;
    for (auto& x : na) x = -x;
    for (auto& x : nb) x = -x;
    RPoly q = exact_div(RPoly::from_laurent(a.shifted(na)), RPoly::from_laurent(b.shifted(nb)));
    Exponent back(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) back[i] = ma[i] - mb[i];
    return q.to_laurent().shifted(back);
}

}  // namespace veer
