#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "veer/intmat.hpp"
#include "veer/laurent.hpp"
#include "veer/rpoly.hpp"
#include "veer/veer_core.hpp"

namespace veer {

enum class TreeChoice { Bfs, Dfs };

struct Letter {
    int gen;
    int exp;  // +1 or -1
};
using Word = std::vector<Letter>;

struct Presentation {
    std::vector<int> generators;         // face ids
    std::vector<int> generator_of_face;  // -1 for faces in the spanning tree
    std::vector<Word> relators;          // one per edge class
    int num_generators() const { return static_cast<int>(generators.size()); }
};

/// Dual spanning tree method: generators are faces off the tree, relators are the face cycles around edges.
Presentation pi1_presentation(const VeeringTriangulation& v, TreeChoice tree = TreeChoice::Bfs);

struct HomologyData {
    int b1 = 0;
    std::vector<mpz_class> torsion;
    /// Class in Z^b1 of crossing each face upward, relative to the presentation tree.
    std::vector<Exponent> face_class;
    /// Same, relative to the fixed reference tree; independent of the presentation tree.
    std::vector<Exponent> reference_face_class;
    /// Class of each presentation generator.
    std::vector<Exponent> generator_class;

    Exponent class_of_word(const Word& w) const;
    /// Class of a closed path of faces crossed upward (+1) or downward (-1).
    Exponent class_of_cycle(const std::vector<Letter>& faces) const;
};

HomologyData homology(const VeeringTriangulation& v, TreeChoice tree = TreeChoice::Bfs);
HomologyData homology(const VeeringTriangulation& v, const Presentation& p);

/// Abelianized Fox derivative of a word with respect to a generator.
LaurentPoly fox_derivative(const Word& w, int gen, const std::vector<Exponent>& gen_class);

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

LaurentMatrix fox_matrix(const Presentation& p, const HomologyData& h);

struct FittingOptions {
    std::size_t max_enumerated_minors = 256;
    int random_trials = 3;
    std::uint32_t seed = 12345;
};

/// gcd of the r x r minors, normalized; 1 for r = 0.
LaurentPoly fitting_gcd(LaurentMatrix m, int r, const FittingOptions& opt = {});

LaurentPoly alexander_polynomial(const VeeringTriangulation& v, TreeChoice tree = TreeChoice::Bfs);

/// Edge-module presentation: one relation per face over the edges of the triangulation.
LaurentMatrix taut_relation_matrix(const VeeringTriangulation& v, const HomologyData& h);
LaurentPoly taut_polynomial(const VeeringTriangulation& v, TreeChoice tree = TreeChoice::Bfs);

/// Phi_k for k >= 1.
LaurentPoly cyclotomic(int k);
LaurentPoly remove_cyclotomic_factors(const LaurentPoly& p, int max_order = 120);

LaurentPoly specialize(const LaurentPoly& p, const std::vector<long>& a);
mpz_class newton_norm(const LaurentPoly& p, const std::vector<long>& a);

}  // namespace veer
