#include "veer/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <fmt/format.h>

namespace veer {

LaurentPoly LaurentPoly::constant(int nvars, const mpz_class& c) {
    LaurentPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const mpz_class& c) {
    LaurentPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::univariate(const std::vector<mpz_class>& coeffs, int shift) {
    LaurentPoly p(1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term({static_cast<int>(i) + shift}, coeffs[i]);
    return p;
}

mpz_class LaurentPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const mpz_class& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
    LaurentPoly r(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& by) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (int i = 0; i < nvars_; ++i) f[i] += by[i];
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

Exponent LaurentPoly::min_exponents() const {
    if (terms_.empty()) return Exponent(nvars_, 0);
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Exponent LaurentPoly::max_exponents() const {
    if (terms_.empty()) return Exponent(nvars_, 0);
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

LaurentPoly LaurentPoly::primitive_part() const {
    mpz_class g = content();
    if (g == 0 || g == 1) return *this;
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

bool LaurentPoly::is_unit() const { return terms_.size() == 1 && abs(terms_.begin()->second) == 1; }

LaurentPoly LaurentPoly::normalized() const {
    if (terms_.empty()) return *this;
    Exponent m = min_exponents();
    for (auto& x : m) x = -x;
    LaurentPoly r = shifted(m);
    if (r.terms_.begin()->second < 0) r = -r;
    return r;
}

bool LaurentPoly::equal_up_to_unit(const LaurentPoly& o) const { return normalized() == o.normalized(); }

std::vector<std::string> default_var_names(int nvars) {
    if (nvars == 1) return {"t"};
    std::vector<std::string> base{"x", "y", "z", "w"};
    std::vector<std::string> out;
    for (int i = 0; i < nvars; ++i) out.push_back(i < 4 ? base[i] : fmt::format("x{}", i + 1));
    return out;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names_in) const {
    if (terms_.empty()) return "0";
    auto names = names_in.empty() ? default_var_names(nvars_) : names_in;
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.get_str();
        for (int i = 0; i < nvars_; ++i) out += fmt::format("*{}^({})", names[i], it->first[i]);
    }
    return out;
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;
    const std::vector<std::string>& names;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const char* what) const {
        throw std::invalid_argument(fmt::format("cannot parse polynomial at offset {}: {}", pos, what));
    }
    long integer() {
        skip();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stol(std::string(s.substr(start, pos - start)));
    }
    mpz_class digits() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return mpz_class(std::string(s.substr(start, pos - start)));
    }
    int var() {
        skip();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (s.substr(pos, names[i].size()) == names[i]) {
                std::size_t end = pos + names[i].size();
                if (end < s.size() && std::isalnum(static_cast<unsigned char>(s[end]))) continue;
                pos = end;
                return static_cast<int>(i);
            }
        return -1;
    }
    void factor(mpz_class& c, Exponent& e) {
        skip();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            c *= digits();
            return;
        }
        int v = var();
        if (v < 0) fail("expected variable or integer");
        long k = 1;
        if (eat('^')) {
            if (eat('(')) {
                k = integer();
                if (!eat(')')) fail("expected ')'");
            } else {
                k = integer();
            }
        }
        e[v] += static_cast<int>(k);
    }
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& names) {
    Parser p{text, 0, names};
    const int nv = static_cast<int>(names.size());
    LaurentPoly out(nv);
    bool first = true;
    while (true) {
        p.skip();
        if (p.pos >= text.size()) break;
        int sign = 1;
        bool had_sign = false;
        while (true) {
            if (p.eat('+')) had_sign = true;
            else if (p.eat('-')) {
                sign = -sign;
                had_sign = true;
            } else break;
        }
        if (!first && !had_sign) p.fail("expected '+' or '-'");
        first = false;
        mpz_class c = sign;
        Exponent e(nv, 0);
        p.factor(c, e);
        while (p.eat('*')) p.factor(c, e);
        out.add_term(e, c);
    }
    if (first) p.fail("empty polynomial");
    return out;
}

}  // namespace veer
