#include "veer/branched.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <numeric>

namespace veer {

namespace {

std::vector<std::vector<int>> orbits(const std::vector<int>& next) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(next.size(), 0);
    for (std::size_t e = 0; e < next.size(); ++e) {
        if (seen[e]) continue;
        std::vector<int> c;
        for (int x = static_cast<int>(e); !seen[x]; x = next[x]) {
            seen[x] = 1;
            c.push_back(x);
        }
        out.push_back(std::move(c));
    }
    return out;
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

Turn DualGraph::turn(int e_in, int e_out) const {
    if (branch_next[e_in] == e_out) return Turn::Branching;
    if (anti_next[e_in] == e_out) return Turn::AntiBranching;
    throw std::invalid_argument(fmt::format("edges {} and {} are not consecutive", e_in, e_out));
}

DualGraph build_dual_graph(const VeeringTriangulation& v) {
    DualGraph g;
    g.num_vertices = v.n;
    const int m = v.num_faces();
    g.tail.resize(m);
    g.head.resize(m);
    for (int f = 0; f < m; ++f) {
        g.tail[f] = v.face_below[f].tet;
        g.head[f] = v.face_above[f].tet;
    }
    g.in_edges.assign(v.n, {-1, -1});
    g.out_edges.assign(v.n, {-1, -1});
    g.branch_next.assign(m, -1);
    g.anti_next.assign(m, -1);
    g.vertex_color.resize(v.n);
    for (int t = 0; t < v.n; ++t) {
        auto te = kEdgeVerts[v.top_local[t]];
        auto be = kEdgeVerts[v.bottom_local[t]];
        Color tc = v.top_color(t);
        g.vertex_color[t] = tc;
        for (int i = 0; i < 2; ++i) {
            g.in_edges[t][i] = v.face_id[t][te[i]];
            g.out_edges[t][i] = v.face_id[t][be[i]];
        }
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                int fin = v.face_id[t][te[i]], fout = v.face_id[t][be[j]];
                Color side = v.edge_color(t, local_edge(te[1 - i], be[1 - j]));
                (side != tc ? g.branch_next : g.anti_next)[fin] = fout;
            }
    }
    return g;
}

std::vector<std::vector<int>> branch_cycles(const DualGraph& g) { return orbits(g.branch_next); }
std::vector<std::vector<int>> ab_cycles(const DualGraph& g) { return orbits(g.anti_next); }

std::vector<Sector> build_sectors(const VeeringTriangulation& v, const DualGraph& g) {
    std::vector<Sector> out;
    std::vector<std::string> diag;
    for (int e = 0; e < v.edges.count; ++e) {
        const auto& w = v.walk[e];
        const int L = static_cast<int>(w.size()), it = v.walk_top_index[e];
        Sector s;
        s.edge = e;
        s.color = v.color[e];
        s.bottom_vertex = w[0].tet;
        s.top_vertex = w[it].tet;
        s.toggle = v.kind[s.top_vertex] == TetKind::Toggle;
        for (int i = 0; i < it; ++i) s.side[0].edges.push_back(v.face_id[w[i].tet][w[i].exit]);
        for (int i = L - 1; i >= it; --i) s.side[1].edges.push_back(v.face_id[w[i].tet][w[i].exit]);
        for (int b = 0; b < 2; ++b) {
            auto& sd = s.side[b];
            for (int k = 0; k < sd.delta(); ++k) sd.vertices.push_back(g.head[sd.edges[k]]);
            if (g.tail[sd.edges.front()] != s.bottom_vertex || g.head[sd.edges.back()] != s.top_vertex)
                diag.push_back(fmt::format("sector {} side {}: boundary does not close", e, b + 1));
            if (g.vertex_color[s.bottom_vertex] != s.color || g.vertex_color[sd.vertices.back()] != s.color)
                diag.push_back(fmt::format("sector {} side {}: bottom-side endpoint colour mismatch", e, b + 1));
            for (int k = 0; k + 1 < sd.delta(); ++k)
                if (g.vertex_color[sd.vertices[k]] == s.color)
                    diag.push_back(fmt::format("sector {} side {}: interior vertex colour mismatch", e, b + 1));
        }
        out.push_back(std::move(s));
    }
    if (!diag.empty()) throw VeeringError(diag);
    return out;
}

GammaPath hook_path(const Sector& s, int side, int k) {
    if (side < 0 || side > 1) throw std::out_of_range("side must be 0 or 1");
    const auto& sd = s.side[side];
    const int d = sd.delta();
    if (k < 1 || k > d + 1) throw std::out_of_range(fmt::format("hook index {} outside 1..{}", k, d + 1));
    GammaPath p;
    p.deep = k == 1;
    if (k == 1 && sd.edges.back() == sd.edges.front()) {
        p.edges.assign(sd.edges.begin(), sd.edges.begin() + d);
        p.cycle = true;
    } else {
        p.edges.assign(sd.edges.begin() + (k - 1), sd.edges.end());
    }
    return p;
}

GammaPath prefix_path(const Sector& s, int side) {
    const auto& sd = s.side[side];
    GammaPath p;
    if (sd.delta() >= 2) p.edges.assign(sd.edges.begin() + 1, sd.edges.begin() + sd.delta());
    return p;
}

void ResolutionSet::add(int vertex, Res r) {
    auto [pos, fresh] = at.emplace(vertex, r);
    if (!fresh && pos->second != r)
        throw ResolutionError(fmt::format("vertex {} resolved both ways", vertex));
}

void ResolutionSet::merge(const ResolutionSet& other) {
    for (auto [vx, r] : other.at) add(vx, r);
}

ResolutionSet path_resolution(const DualGraph& g, const GammaPath& p) {
    ResolutionSet I;
    const std::size_t m = p.edges.size();
    const std::size_t steps = p.cycle ? m : (m == 0 ? 0 : m - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        int a = p.edges[i], b = p.edges[(i + 1) % m];
        if (g.head[a] != g.tail[b]) throw ResolutionError(fmt::format("edges {} and {} do not meet", a, b));
        I.add(g.head[a], g.turn(a, b) == Turn::Branching ? Res::B : Res::A);
    }
    return I;
}

ResolvedGraph resolve(const DualGraph& g, const ResolutionSet& I) {
    ResolvedGraph r;
    const int m = g.num_edges();
    std::vector<int> vid(g.num_vertices, -1);
    for (int x = 0; x < g.num_vertices; ++x)
        if (!I.at.count(x)) {
            vid[x] = static_cast<int>(r.vertices.size());
            r.vertices.push_back(x);
        }
    auto next = [&](int e) {
        auto it = I.at.find(g.head[e]);
        if (it == I.at.end()) return -1;
        return it->second == Res::B ? g.branch_next[e] : g.anti_next[e];
    };
    r.strand_of.assign(m, -1);
    auto emit = [&](int start, bool open) {
        ResolvedGraph::Strand s;
        int e = start;
        do {
            r.strand_of[e] = static_cast<int>(r.strands.size());
            s.edges.push_back(e);
            int nx = next(e);
            if (nx < 0) break;
            e = nx;
        } while (e != start);
        if (open) {
            s.tail = vid[g.tail[s.edges.front()]];
            s.head = vid[g.head[s.edges.back()]];
        }
        r.strands.push_back(std::move(s));
    };
    for (int e = 0; e < m; ++e)
        if (vid[g.tail[e]] >= 0) emit(e, true);
    for (int e = 0; e < m; ++e)
        if (r.strand_of[e] < 0) emit(e, false);
    return r;
}

ResolvedGraph resolve(const DualGraph& g, const GammaPath& p) { return resolve(g, path_resolution(g, p)); }

Components components(const ResolvedGraph& r) {
    const int ns = static_cast<int>(r.strands.size()), nv = static_cast<int>(r.vertices.size());
    UnionFind uf(ns + nv);
    for (int s = 0; s < ns; ++s) {
        if (r.strands[s].tail >= 0) uf.unite(s, ns + r.strands[s].tail);
        if (r.strands[s].head >= 0) uf.unite(s, ns + r.strands[s].head);
    }
    Components c;
    std::map<int, int> label;
    auto id = [&](int x) { return label.emplace(uf.find(x), static_cast<int>(label.size())).first->second; };
    for (int s = 0; s < ns; ++s) c.strand_component.push_back(id(s));
    for (int x = 0; x < nv; ++x) c.vertex_component.push_back(id(ns + x));
    c.count = static_cast<int>(label.size());
    return c;
}

std::optional<std::vector<int>> eulerian_circuit(const ResolvedGraph& r) {
    if (components(r).count != 1) return std::nullopt;
    if (r.vertices.empty()) return r.strands.front().edges;
    const int nv = static_cast<int>(r.vertices.size());
    std::vector<std::vector<int>> out(nv);
    for (int s = static_cast<int>(r.strands.size()) - 1; s >= 0; --s) out[r.strands[s].tail].push_back(s);
    // Hierholzer, iterative
    std::vector<int> circuit, stack_v{0}, stack_s{-1};
    while (!stack_v.empty()) {
        int x = stack_v.back();
        if (!out[x].empty()) {
            int s = out[x].back();
            out[x].pop_back();
            stack_v.push_back(r.strands[s].head);
            stack_s.push_back(s);
        } else {
            if (stack_s.back() >= 0) circuit.push_back(stack_s.back());
            stack_v.pop_back();
            stack_s.pop_back();
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    std::vector<int> edges;
    for (int s : circuit) edges.insert(edges.end(), r.strands[s].edges.begin(), r.strands[s].edges.end());
    return edges;
}

SectorConditions sector_conditions(const DualGraph& g, const Sector& s) {
    SectorConditions c;
    for (int b = 0; b < 2; ++b) {
        const auto& sd = s.side[b];
        int top = sd.edges.back(), first = sd.edges.front();
        c.sbf[b] = top == first;
        c.tbt[b] = g.head[top] == s.bottom_vertex && g.anti_next[top] == first;
    }
    c.bsbf = c.sbf[0] && c.sbf[1];
    auto I = path_resolution(g, prefix_path(s, 0));
    I.merge(path_resolution(g, prefix_path(s, 1)));
    c.frc = components(resolve(g, I)).count == 1;
    return c;
}

bool m003_predicate(const DualGraph& g, const std::vector<Sector>& sectors) {
    for (const auto& s : sectors) {
        auto c = sector_conditions(g, s);
        if (s.toggle ? !c.bsbf : !(c.tbt[0] && c.tbt[1])) return false;
    }
    return true;
}

}  // namespace veer
