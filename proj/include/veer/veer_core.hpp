#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "veer/sigio.hpp"

namespace veer {

enum class Color : std::uint8_t { Red, Blue };
enum class TetKind : std::uint8_t { Toggle, FanRed, FanBlue };

inline Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
const char* to_string(Color c);
const char* to_string(TetKind k);

class VeeringError : public std::runtime_error {
public:
    explicit VeeringError(std::vector<std::string> diag);
    const std::vector<std::string>& diagnostics() const { return diag_; }

private:
    std::vector<std::string> diag_;
};

/// Local edges of a tetrahedron, indexed 0..5 as 01,02,03,12,13,23; edge i is opposite edge 5-i.
constexpr std::array<std::array<int, 2>, 6> kEdgeVerts{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
int local_edge(int a, int b);
/// Local edge carrying a pi angle for the given angle digit (the other is 5 - result).
inline int pi_local_edge(int digit) { return digit; }

struct EdgeClasses {
    int count = 0;
    std::vector<std::array<int, 6>> of;  // [tet][local edge]
    std::vector<int> valence;
};

EdgeClasses build_edge_classes(const RawTriangulation& raw);

/// One step of the walk around an edge: the edge {a,b} of tet, leaving through face opposite `exit`.
struct EdgeCorner {
    int tet;
    int a, b;
    int exit;
};

struct FaceSide {
    int tet;
    int face;
};

struct VeeringTriangulation {
    RawTriangulation raw;
    int n = 0;
    EdgeClasses edges;
    std::vector<int> orientation;    // +1/-1 relative to the vertex labelling
    std::vector<int> top_local;      // local index of the top pi-edge
    std::vector<int> bottom_local;
    std::vector<int> top_edge;       // edge class of the top edge
    std::vector<int> bottom_edge;
    std::vector<std::array<int, 4>> face_id;  // [tet][face]
    std::vector<FaceSide> face_below;          // tet having the face as a top face
    std::vector<FaceSide> face_above;          // tet having the face as a bottom face
    std::vector<Color> color;                  // per edge class
    std::vector<TetKind> kind;
    /// Walk around each edge class, starting in the tet whose top edge it is.
    std::vector<std::vector<EdgeCorner>> walk;
    /// Index in walk[e] of the tet whose bottom edge is e.
    std::vector<int> walk_top_index;

    int num_faces() const { return 2 * n; }
    bool is_top_face(int tet, int face) const;
    Color top_color(int tet) const { return color[top_edge[tet]]; }
    Color bottom_color(int tet) const { return color[bottom_edge[tet]]; }
    Color edge_color(int tet, int local) const { return color[edges.of[tet][local]]; }
};

/// Per-tet choice 0/1 of which pi-edge is on top (0 means local edge pi_pair, 1 means its opposite).
std::vector<int> derive_coorientations(const RawTriangulation& raw);
std::vector<int> derive_orientation(const RawTriangulation& raw);
std::vector<Color> derive_veering_colors(const RawTriangulation& raw, const EdgeClasses& ec,
                                         const std::vector<int>& orientation);
std::vector<TetKind> classify_tetrahedra(const VeeringTriangulation& v);

struct EdgeSideProfile {
    std::array<int, 2> delta{};
    std::array<bool, 2> is_short{};
};
EdgeSideProfile edge_side_profile(const VeeringTriangulation& v, int edge);

/// Checks every structural condition; throws VeeringError with all diagnostics on failure.
VeeringTriangulation build_veering(const RawTriangulation& raw);
VeeringTriangulation build_veering(std::string_view taut_sig);

/// Diagnostics only; empty iff the signature describes a veering triangulation.
std::vector<std::string> validate_veering(std::string_view taut_sig);

}  // namespace veer
