#include "veer/veer_core.hpp"

#include <fmt/format.h>
#include <numeric>

namespace veer {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

std::string join_diag(const std::vector<std::string>& d) {
    std::string s;
    for (const auto& x : d) {
        if (!s.empty()) s += "; ";
        s += x;
    }
    return s;
}

// Red local edges for a positively oriented tet with the given angle digit.
std::array<int, 2> red_edges(int digit) {
    switch (digit) {
        case 0: return {local_edge(0, 2), local_edge(1, 3)};
        case 1: return {local_edge(0, 3), local_edge(1, 2)};
        default: return {local_edge(0, 1), local_edge(2, 3)};
    }
}

}  // namespace

const char* to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

const char* to_string(TetKind k) {
    switch (k) {
        case TetKind::Toggle: return "toggle";
        case TetKind::FanRed: return "fan-red";
        default: return "fan-blue";
    }
}

VeeringError::VeeringError(std::vector<std::string> diag)
    : std::runtime_error(join_diag(diag)), diag_(std::move(diag)) {}

int local_edge(int a, int b) {
    if (a > b) std::swap(a, b);
    static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[a][b];
}

EdgeClasses build_edge_classes(const RawTriangulation& raw) {
    const int n = raw.n;
    UnionFind uf(6 * n);
    for (int t = 0; t < n; ++t)
        for (int e = 0; e < 6; ++e) {
            auto [a, b] = kEdgeVerts[e];
            for (int f = 0; f < 4; ++f) {
                if (f == a || f == b) continue;
                const Gluing& g = raw.glue[t][f];
                uf.unite(6 * t + e, 6 * g.tet + local_edge(g.perm[a], g.perm[b]));
            }
        }
    EdgeClasses ec;
    ec.of.assign(n, {});
    std::vector<int> root_id(6 * n, -1);
    for (int t = 0; t < n; ++t)
        for (int e = 0; e < 6; ++e) {
            int r = uf.find(6 * t + e);
            if (root_id[r] < 0) root_id[r] = ec.count++;
            ec.of[t][e] = root_id[r];
        }
    ec.valence.assign(ec.count, 0);
    for (int t = 0; t < n; ++t)
        for (int e = 0; e < 6; ++e) ++ec.valence[ec.of[t][e]];
    return ec;
}

std::vector<int> derive_orientation(const RawTriangulation& raw) {
    std::vector<int> o(raw.n, 0);
    o[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = raw.glue[t][f];
            int want = -o[t] * g.perm.sign();
            if (o[g.tet] == 0) {
                o[g.tet] = want;
                stack.push_back(g.tet);
            } else if (o[g.tet] != want) {
                throw VeeringError({"triangulation is not orientable"});
            }
        }
    }
    return o;
}

std::vector<int> derive_coorientations(const RawTriangulation& raw) {
    const int n = raw.n;
    auto bottom_local = [&](int t, int choice) { return choice == 0 ? 5 - raw.pi_pair[t] : raw.pi_pair[t]; };
    auto is_top = [&](int t, int choice, int f) {
        auto [a, b] = kEdgeVerts[bottom_local(t, choice)];
        return f == a || f == b;
    };
    std::vector<int> choice(n, -1);
    choice[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = raw.glue[t][f];
            bool want = !is_top(t, choice[t], f);
            int uf = g.perm[f];
            if (choice[g.tet] < 0) {
                choice[g.tet] = is_top(g.tet, 0, uf) == want ? 0 : 1;
                stack.push_back(g.tet);
            } else if (is_top(g.tet, choice[g.tet], uf) != want) {
                throw VeeringError({fmt::format(
                    "not transverse taut: face {} of tet {} and face {} of tet {} are cooriented inconsistently", f, t, uf,
                    g.tet)});
            }
        }
    }
    return choice;
}

std::vector<Color> derive_veering_colors(const RawTriangulation& raw, const EdgeClasses& ec,
                                         const std::vector<int>& orientation) {
    std::vector<int> col(ec.count, -1);
    std::vector<std::string> diag;
    for (int t = 0; t < raw.n; ++t) {
        auto red = red_edges(raw.pi_pair[t]);
        for (int e = 0; e < 6; ++e) {
            if (e == raw.pi_pair[t] || e == 5 - raw.pi_pair[t]) continue;
            bool is_red = (e == red[0] || e == red[1]) == (orientation[t] > 0);
            int c = is_red ? 0 : 1;
            int k = ec.of[t][e];
            if (col[k] < 0) col[k] = c;
            else if (col[k] != c)
                diag.push_back(fmt::format("not veering: edge class {} receives both colors (tet {})", k, t));
        }
    }
    for (int k = 0; k < ec.count; ++k)
        if (col[k] < 0) diag.push_back(fmt::format("edge class {} has no zero-angle corner", k));
    if (!diag.empty()) throw VeeringError(diag);
    std::vector<Color> out(ec.count);
    for (int k = 0; k < ec.count; ++k) out[k] = col[k] == 0 ? Color::Red : Color::Blue;
    return out;
}

bool VeeringTriangulation::is_top_face(int tet, int face) const {
    auto [a, b] = kEdgeVerts[bottom_local[tet]];
    return face == a || face == b;
}

std::vector<TetKind> classify_tetrahedra(const VeeringTriangulation& v) {
    std::vector<TetKind> k(v.n);
    for (int t = 0; t < v.n; ++t) {
        Color a = v.top_color(t), b = v.bottom_color(t);
        k[t] = a != b ? TetKind::Toggle : (a == Color::Red ? TetKind::FanRed : TetKind::FanBlue);
    }
    return k;
}

EdgeSideProfile edge_side_profile(const VeeringTriangulation& v, int edge) {
    if (edge < 0 || edge >= v.edges.count) throw std::out_of_range("edge class out of range");
    EdgeSideProfile p;
    int L = static_cast<int>(v.walk[edge].size());
    int it = v.walk_top_index[edge];
    p.delta = {it - 1, L - it - 1};
    p.is_short = {p.delta[0] == 1, p.delta[1] == 1};
    return p;
}

VeeringTriangulation build_veering(const RawTriangulation& raw) {
    auto gd = validate_gluing(raw);
    if (!gd.empty()) throw VeeringError(gd);
    if (static_cast<int>(raw.pi_pair.size()) != raw.n) throw VeeringError({"angle choices missing"});

    VeeringTriangulation v;
    v.raw = raw;
    v.n = raw.n;
    v.edges = build_edge_classes(raw);

    std::vector<std::string> diag;
    if (v.edges.count != v.n)
        diag.push_back(fmt::format("{} edge classes for {} tetrahedra (ends are not all tori)", v.edges.count, v.n));
    std::vector<int> pi_corners(v.edges.count, 0);
    for (int t = 0; t < v.n; ++t) {
        ++pi_corners[v.edges.of[t][raw.pi_pair[t]]];
        ++pi_corners[v.edges.of[t][5 - raw.pi_pair[t]]];
    }
    for (int k = 0; k < v.edges.count; ++k)
        if (pi_corners[k] != 2)
            diag.push_back(fmt::format("not taut: edge class {} has angle sum {}pi", k, pi_corners[k]));
    if (!diag.empty()) throw VeeringError(diag);

    v.orientation = derive_orientation(raw);
    auto choice = derive_coorientations(raw);
    v.top_local.resize(v.n);
    v.bottom_local.resize(v.n);
    v.top_edge.resize(v.n);
    v.bottom_edge.resize(v.n);
    for (int t = 0; t < v.n; ++t) {
        v.top_local[t] = choice[t] == 0 ? raw.pi_pair[t] : 5 - raw.pi_pair[t];
        v.bottom_local[t] = 5 - v.top_local[t];
        v.top_edge[t] = v.edges.of[t][v.top_local[t]];
        v.bottom_edge[t] = v.edges.of[t][v.bottom_local[t]];
    }
    v.color = derive_veering_colors(raw, v.edges, v.orientation);
    v.kind = classify_tetrahedra(v);

    // Faces, each oriented from the tet below to the tet above.
    v.face_id.assign(v.n, {-1, -1, -1, -1});
    for (int t = 0; t < v.n; ++t)
        for (int f = 0; f < 4; ++f) {
            if (v.face_id[t][f] >= 0) continue;
            const Gluing& g = raw.glue[t][f];
            int id = static_cast<int>(v.face_below.size());
            v.face_id[t][f] = id;
            v.face_id[g.tet][g.perm[f]] = id;
            FaceSide here{t, f}, there{g.tet, g.perm[f]};
            if (v.is_top_face(t, f)) {
                v.face_below.push_back(here);
                v.face_above.push_back(there);
            } else {
                v.face_below.push_back(there);
                v.face_above.push_back(here);
            }
        }

    // Walk around each edge class starting in the tet having it as top edge.
    v.walk.assign(v.edges.count, {});
    v.walk_top_index.assign(v.edges.count, -1);
    for (int t = 0; t < v.n; ++t) {
        int e = v.top_edge[t];
        auto [a, b] = kEdgeVerts[v.top_local[t]];
        auto [c, d] = kEdgeVerts[v.bottom_local[t]];
        EdgeCorner start{t, a, b, std::min(c, d)};
        EdgeCorner cur = start;
        auto& w = v.walk[e];
        do {
            w.push_back(cur);
            if (w.size() > static_cast<std::size_t>(6 * v.n)) throw VeeringError({"edge walk does not close"});
            const Gluing& g = raw.glue[cur.tet][cur.exit];
            int na = g.perm[cur.a], nb = g.perm[cur.b], came = g.perm[cur.exit];
            int y = -1;
            for (int z = 0; z < 4; ++z)
                if (z != na && z != nb && z != came) y = z;
            cur = EdgeCorner{g.tet, na, nb, y};
        } while (!(cur.tet == start.tet && local_edge(cur.a, cur.b) == local_edge(start.a, start.b) &&
                   cur.exit == start.exit));
        int found = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto& c2 = w[i];
            int le = local_edge(c2.a, c2.b);
            if (le == v.bottom_local[c2.tet]) {
                v.walk_top_index[e] = static_cast<int>(i);
                ++found;
            }
            if (i > 0 && le == v.top_local[c2.tet]) ++found;
        }
        if (found != 1) diag.push_back(fmt::format("edge class {}: malformed pi corners on walk", e));
        else if (v.walk_top_index[e] < 2 || v.walk_top_index[e] > static_cast<int>(w.size()) - 2)
            diag.push_back(fmt::format("edge class {}: empty side stack", e));
    }
    if (!diag.empty()) throw VeeringError(diag);

    // Stack kind pattern on each side.
    for (int e = 0; e < v.edges.count; ++e) {
        const auto& w = v.walk[e];
        int L = static_cast<int>(w.size()), it = v.walk_top_index[e];
        std::array<std::vector<int>, 2> stacks;
        for (int i = 1; i < it; ++i) stacks[0].push_back(w[i].tet);
        for (int i = L - 1; i > it; --i) stacks[1].push_back(w[i].tet);
        Color c = v.color[e];
        TetKind same = c == Color::Red ? TetKind::FanRed : TetKind::FanBlue;
        TetKind opp = c == Color::Red ? TetKind::FanBlue : TetKind::FanRed;
        for (int s = 0; s < 2; ++s) {
            const auto& st = stacks[s];
            bool ok;
            if (st.size() == 1) {
                ok = v.kind[st[0]] == same;
            } else {
                ok = v.kind[st.front()] == TetKind::Toggle && v.kind[st.back()] == TetKind::Toggle;
                for (std::size_t i = 1; i + 1 < st.size(); ++i) ok = ok && v.kind[st[i]] == opp;
            }
            if (!ok) diag.push_back(fmt::format("edge class {} side {}: stack kind pattern violated", e, s + 1));
        }
    }
    if (!diag.empty()) throw VeeringError(diag);
    return v;
}

VeeringTriangulation build_veering(std::string_view taut_sig) { return build_veering(parse_taut_sig(taut_sig)); }

std::vector<std::string> validate_veering(std::string_view taut_sig) {
    try {
        build_veering(taut_sig);
    } catch (const VeeringError& e) {
        return e.diagnostics();
    } catch (const SigError& e) {
        return {e.what()};
    }
    return {};
}

}  // namespace veer
