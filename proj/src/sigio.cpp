#include "veer/sigio.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <numeric>

namespace veer {

namespace {

constexpr std::string_view kAlphabet =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-";

int sval(char c) {
    auto pos = kAlphabet.find(c);
    if (pos == std::string_view::npos) throw SigError(fmt::format("invalid signature character '{}'", c));
    return static_cast<int>(pos);
}

char schar(int v) { return kAlphabet[static_cast<std::size_t>(v)]; }

std::size_t read_uint(std::string_view s, std::size_t& pos, int nchars) {
    if (pos + static_cast<std::size_t>(nchars) > s.size()) throw SigError("signature truncated");
    std::size_t v = 0;
    for (int i = 0; i < nchars; ++i) v |= static_cast<std::size_t>(sval(s[pos + i])) << (6 * i);
    pos += static_cast<std::size_t>(nchars);
    return v;
}

void write_uint(std::string& out, std::size_t v, int nchars) {
    for (int i = 0; i < nchars; ++i) {
        out.push_back(schar(static_cast<int>(v & 63)));
        v >>= 6;
    }
}

const std::array<Perm4, 24>& ordered_s4() {
    static const std::array<Perm4, 24> table = [] {
        std::array<Perm4, 24> t{};
        std::array<std::uint8_t, 4> a{0, 1, 2, 3};
        int i = 0;
        do {
            t[i++].img = a;
        } while (std::next_permutation(a.begin(), a.end()));
        return t;
    }();
    return table;
}

// Angle digit whose opposite-edge pair contains the edge {a,b}.
int pi_digit_of_edge(int a, int b) {
    int lo = std::min(a, b), hi = std::max(a, b);
    if ((lo == 0 && hi == 1) || (lo == 2 && hi == 3)) return 0;
    if ((lo == 0 && hi == 2) || (lo == 1 && hi == 3)) return 1;
    return 2;
}

std::pair<int, int> pi_edge_of_digit(int d) {
    switch (d) {
        case 0: return {0, 1};
        case 1: return {0, 2};
        default: return {0, 3};
    }
}

}  // namespace

Perm4 Perm4::inverse() const {
    Perm4 r;
    for (int i = 0; i < 4; ++i) r.img[img[i]] = static_cast<std::uint8_t>(i);
    return r;
}

int Perm4::sign() const {
    int s = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (img[i] > img[j]) s = -s;
    return s;
}

int Perm4::ordered_index() const {
    const auto& t = ordered_s4();
    for (int i = 0; i < 24; ++i)
        if (t[i].img == img) return i;
    throw SigError("not a permutation");
}

Perm4 Perm4::from_ordered_index(int idx) {
    if (idx < 0 || idx >= 24) throw SigError(fmt::format("permutation index {} out of range", idx));
    return ordered_s4()[idx];
}

Perm4 Perm4::of(int a, int b, int c, int d) {
    Perm4 p;
    p.img = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c),
             static_cast<std::uint8_t>(d)};
    return p;
}

Perm4 operator*(const Perm4& p, const Perm4& q) {
    Perm4 r;
    for (int i = 0; i < 4; ++i) r.img[i] = p.img[q.img[i]];
    return r;
}

TautSig split_taut_sig(std::string_view text) {
    auto us = text.find('_');
    if (us == std::string_view::npos || text.find('_', us + 1) != std::string_view::npos)
        throw SigError("taut signature must contain exactly one underscore");
    TautSig s;
    s.body = std::string(text.substr(0, us));
    for (char c : text.substr(us + 1)) {
        if (c < '0' || c > '2') throw SigError(fmt::format("angle digit '{}' outside 0..2", c));
        s.angles.push_back(c - '0');
    }
    if (s.body.empty()) throw SigError("empty signature body");
    return s;
}

RawTriangulation decode_isosig(std::string_view s) {
    std::size_t pos = 0;
    if (s.empty()) throw SigError("empty signature body");
    std::size_t n = static_cast<std::size_t>(sval(s[pos++]));
    int nchars = 1;
    if (n == 63) {
        if (pos >= s.size()) throw SigError("signature truncated");
        nchars = sval(s[pos++]);
        if (nchars == 0) throw SigError("invalid size width");
        n = read_uint(s, pos, nchars);
    }
    if (n == 0) throw SigError("signature encodes no tetrahedra");
    if (n > 100000) throw SigError("signature size implausibly large");

    std::vector<int> actions;
    std::size_t nfacets = 0, njoins = 0;
    while (nfacets < 4 * n) {
        if (pos >= s.size()) throw SigError("signature truncated in facet actions");
        int v = sval(s[pos++]);
        for (int j = 0; j < 3; ++j) {
            int a = (v >> (2 * j)) & 3;
            if (nfacets == 4 * n) {
                if (a != 0) throw SigError("nonzero padding in facet actions");
                continue;
            }
            if (a == 0) throw SigError("boundary face in signature");
            if (a == 3) throw SigError("invalid facet action");
            nfacets += 2;
            if (a == 2) ++njoins;
            if (nfacets > 4 * n) throw SigError("facet actions overflow");
            actions.push_back(a);
        }
    }
    std::vector<std::size_t> dest(njoins);
    for (auto& d : dest) d = read_uint(s, pos, nchars);
    std::vector<Perm4> perms(njoins);
    for (auto& p : perms) {
        if (pos >= s.size()) throw SigError("signature truncated in permutations");
        p = Perm4::from_ordered_index(sval(s[pos++]));
    }
    if (pos != s.size()) throw SigError("trailing characters in signature");

    RawTriangulation t;
    t.n = static_cast<int>(n);
    t.glue.assign(n, {});
    std::size_t next_unused = 1, ap = 0, jp = 0;
    for (std::size_t tet = 0; tet < n; ++tet) {
        for (int f = 0; f < 4; ++f) {
            if (t.glue[tet][f].tet >= 0) continue;
            if (ap >= actions.size()) throw SigError("facet actions exhausted");
            int a = actions[ap++];
            std::size_t u;
            Perm4 p;
            if (a == 1) {
                if (next_unused >= n) throw SigError("too many new tetrahedra");
                u = next_unused++;
            } else {
                u = dest[jp];
                p = perms[jp];
                ++jp;
                if (u >= next_unused) throw SigError("gluing to unseen tetrahedron");
            }
            if (t.glue[u][p[f]].tet >= 0 || (u == tet && p[f] == f))
                throw SigError("face glued twice");
            t.glue[tet][f] = {static_cast<int>(u), p};
            t.glue[u][p[f]] = {static_cast<int>(tet), p.inverse()};
        }
    }
    if (next_unused != n) throw SigError("disconnected signature");
    return t;
}

RawTriangulation parse_taut_sig(std::string_view text) {
    TautSig s = split_taut_sig(text);
    RawTriangulation t = decode_isosig(s.body);
    if (static_cast<int>(s.angles.size()) != t.n)
        throw SigError(fmt::format("angle string has length {} but signature has {} tetrahedra",
                                   s.angles.size(), t.n));
    t.pi_pair = s.angles;
    return t;
}

std::string encode_isosig(const RawTriangulation& t, std::vector<int>* angles_out) {
    auto diag = validate_gluing(t);
    if (!diag.empty()) throw SigError("cannot encode invalid gluing: " + diag.front());
    const int n = t.n;
    // Relabel tetrahedra in traversal order so that every first gluing is the identity.
    std::vector<int> label(n, -1), order;
    std::vector<Perm4> sigma(n);  // old vertex label -> new vertex label
    label[0] = 0;
    order.push_back(0);
    std::vector<int> actions;
    std::vector<int> dests, pidx;
    for (std::size_t k = 0; k < order.size(); ++k) {
        int old = order[k];
        Perm4 sinv = sigma[old].inverse();
        for (int jn = 0; jn < 4; ++jn) {
            int jo = sinv[jn];
            const Gluing& g = t.glue[old][jo];
            int partner_new_face;
            if (label[g.tet] >= 0) {
                partner_new_face = sigma[g.tet][g.perm[jo]];
                int pl = label[g.tet];
                if (pl < static_cast<int>(k) || (pl == static_cast<int>(k) && partner_new_face < jn)) continue;
                Perm4 P = sigma[g.tet] * g.perm * sinv;
                actions.push_back(2);
                dests.push_back(pl);
                pidx.push_back(P.ordered_index());
            } else {
                label[g.tet] = static_cast<int>(order.size());
                order.push_back(g.tet);
                sigma[g.tet] = sigma[old] * g.perm.inverse();
                actions.push_back(1);
            }
        }
    }
    if (static_cast<int>(order.size()) != n) throw SigError("cannot encode disconnected triangulation");

    std::string out;
    int nchars = 1;
    if (n < 63) {
        out.push_back(schar(n));
    } else {
        nchars = 0;
        while ((std::size_t{1} << (6 * nchars)) <= static_cast<std::size_t>(n)) ++nchars;
        out.push_back(schar(63));
        out.push_back(schar(nchars));
        write_uint(out, static_cast<std::size_t>(n), nchars);
    }
    for (std::size_t i = 0; i < actions.size(); i += 3) {
        int v = 0;
        for (std::size_t j = 0; j < 3 && i + j < actions.size(); ++j) v |= actions[i + j] << (2 * j);
        out.push_back(schar(v));
    }
    for (int d : dests) write_uint(out, static_cast<std::size_t>(d), nchars);
    for (int p : pidx) out.push_back(schar(p));

    if (angles_out) {
        angles_out->assign(n, 0);
        if (static_cast<int>(t.pi_pair.size()) == n) {
            for (int old = 0; old < n; ++old) {
                auto [a, b] = pi_edge_of_digit(t.pi_pair[old]);
                (*angles_out)[label[old]] = pi_digit_of_edge(sigma[old][a], sigma[old][b]);
            }
        }
    }
    return out;
}

std::string emit_taut_sig(const RawTriangulation& t) {
    if (static_cast<int>(t.pi_pair.size()) != t.n) throw SigError("angle choices missing");
    std::vector<int> angles;
    std::string body = encode_isosig(t, &angles);
    body.push_back('_');
    for (int a : angles) body.push_back(static_cast<char>('0' + a));
    return body;
}

std::vector<std::string> validate_gluing(const RawTriangulation& t) {
    std::vector<std::string> out;
    if (t.n <= 0) out.push_back("no tetrahedra");
    if (static_cast<int>(t.glue.size()) != t.n) {
        out.push_back("gluing table size mismatch");
        return out;
    }
    for (int i = 0; i < t.n; ++i) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.glue[i][f];
            if (g.tet < 0 || g.tet >= t.n) {
                out.push_back(fmt::format("tet {} face {}: unglued", i, f));
                continue;
            }
            auto img = g.perm.img;
            std::sort(img.begin(), img.end());
            if (img != std::array<std::uint8_t, 4>{0, 1, 2, 3}) {
                out.push_back(fmt::format("tet {} face {}: gluing map is not a permutation", i, f));
                continue;
            }
            int f2 = g.perm[f];
            if (g.tet == i && f2 == f) {
                out.push_back(fmt::format("tet {} face {}: glued to itself", i, f));
                continue;
            }
            const Gluing& back = t.glue[g.tet][f2];
            if (back.tet != i || back.perm[f2] != f) {
                out.push_back(fmt::format("tet {} face {}: involution violation (partner tet {} face {} points elsewhere)",
                                          i, f, g.tet, f2));
                continue;
            }
            if (!(back.perm * g.perm).is_identity())
                out.push_back(fmt::format("tet {} face {}: permutation violation (maps do not invert)", i, f));
        }
    }
    for (std::size_t i = 0; i < t.pi_pair.size(); ++i)
        if (t.pi_pair[i] < 0 || t.pi_pair[i] > 2) out.push_back(fmt::format("tet {}: angle digit out of range", i));
    return out;
}

}  // namespace veer
