#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "veer/veer_core.hpp"

namespace veer {

enum class Turn : std::uint8_t { Branching, AntiBranching };
enum class Res : char { A = 'A', B = 'B' };

class ResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Branch locus of the stable branched surface. Edges are faces, vertices are tetrahedra.
struct DualGraph {
    int num_vertices = 0;
    std::vector<int> tail, head;
    std::vector<std::array<int, 2>> in_edges, out_edges;
    std::vector<int> branch_next;  // out-edge taking the branching turn after e
    std::vector<int> anti_next;
    std::vector<Color> vertex_color;

    int num_edges() const { return static_cast<int>(tail.size()); }
    Turn turn(int e_in, int e_out) const;
};

DualGraph build_dual_graph(const VeeringTriangulation& v);

std::vector<std::vector<int>> branch_cycles(const DualGraph& g);
std::vector<std::vector<int>> ab_cycles(const DualGraph& g);

struct SectorSide {
    std::vector<int> edges;     // e_1 .. e_{delta+1}
    std::vector<int> vertices;  // v_1 .. v_delta
    int delta() const { return static_cast<int>(edges.size()) - 1; }
};

struct Sector {
    int edge = -1;
    Color color = Color::Red;
    bool toggle = false;
    int bottom_vertex = -1;
    int top_vertex = -1;
    std::array<SectorSide, 2> side;
};

/// One sector per edge class; throws VeeringError if a colour pattern is violated.
std::vector<Sector> build_sectors(const VeeringTriangulation& v, const DualGraph& g);

struct GammaPath {
    std::vector<int> edges;
    bool cycle = false;
    bool deep = false;
};

/// Sides are 0 and 1; k runs from 1 to delta+1.
GammaPath hook_path(const Sector& s, int side, int k);
/// (e_2, ..., e_delta) on the given side.
GammaPath prefix_path(const Sector& s, int side);

struct ResolutionSet {
    std::map<int, Res> at;
    void add(int vertex, Res r);
    void merge(const ResolutionSet& other);
};

/// Resolution at each interior vertex making the path lift to a single strand.
ResolutionSet path_resolution(const DualGraph& g, const GammaPath& p);

struct ResolvedGraph {
    struct Strand {
        int tail = -1;  // index into vertices, -1 for a closed loop
        int head = -1;
        std::vector<int> edges;
    };
    std::vector<int> vertices;  // surviving vertices of the base graph
    std::vector<Strand> strands;
    std::vector<int> strand_of;  // base edge -> strand
};

ResolvedGraph resolve(const DualGraph& g, const ResolutionSet& I);
ResolvedGraph resolve(const DualGraph& g, const GammaPath& p);

struct Components {
    int count = 0;
    std::vector<int> strand_component;
    std::vector<int> vertex_component;
};
Components components(const ResolvedGraph& r);

/// Base-edge sequence of an Eulerian circuit, or nothing when disconnected.
std::optional<std::vector<int>> eulerian_circuit(const ResolvedGraph& r);

struct SectorConditions {
    std::array<bool, 2> tbt{};
    std::array<bool, 2> sbf{};
    bool bsbf = false;
    bool frc = false;
};

SectorConditions sector_conditions(const DualGraph& g, const Sector& s);

/// All fan sectors satisfy TBT on both sides and all toggle sectors satisfy BSBF.
bool m003_predicate(const DualGraph& g, const std::vector<Sector>& sectors);

}  // namespace veer
