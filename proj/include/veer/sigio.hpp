#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace veer {

class SigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Permutation of {0,1,2,3}, stored as its image table.
struct Perm4 {
    std::array<std::uint8_t, 4> img{0, 1, 2, 3};

    int operator[](int i) const { return img[i]; }
    Perm4 inverse() const;
    int sign() const;
    bool is_identity() const { return img == std::array<std::uint8_t, 4>{0, 1, 2, 3}; }
    /// Index in the lexicographically ordered list of all 24 permutations.
    int ordered_index() const;
    static Perm4 from_ordered_index(int idx);
    static Perm4 of(int a, int b, int c, int d);

    friend Perm4 operator*(const Perm4& p, const Perm4& q);  // (p*q)(i) = p(q(i))
    friend bool operator==(const Perm4& a, const Perm4& b) { return a.img == b.img; }
};

/// Face j of a tetrahedron is glued to face perm[j] of tet, vertex v going to perm[v].
struct Gluing {
    int tet = -1;
    Perm4 perm;
};

struct RawTriangulation {
    int n = 0;
    std::vector<std::array<Gluing, 4>> glue;
    /// 0: edges 01,23 carry pi; 1: 02,13; 2: 03,12.
    std::vector<int> pi_pair;
};

struct TautSig {
    std::string body;
    std::vector<int> angles;
};

TautSig split_taut_sig(std::string_view text);
RawTriangulation decode_isosig(std::string_view body);
RawTriangulation parse_taut_sig(std::string_view text);

std::string encode_isosig(const RawTriangulation& t, std::vector<int>* angles_out = nullptr);
std::string emit_taut_sig(const RawTriangulation& t);

/// Empty iff the gluing is a closed, consistent face pairing.
std::vector<std::string> validate_gluing(const RawTriangulation& t);

}  // namespace veer
