#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "loopwork/certificate.hpp"
#include "loopwork/loop.hpp"
#include "loopwork/osborn.hpp"

namespace loopwork {

using Simplex = std::set<std::string>;

struct SimplicialComplex {
    std::vector<std::string> vertices;
    std::vector<Simplex> simplexes;  // nonempty, closed under subsets

    int dimension() const;  // max |s| - 1
    bool contains(const Simplex& s) const;
};

enum class ComplexWhich { K0, K1, K2, K3, K01, K23, K0123, K10 };
ComplexWhich parse_complex_which(const std::string& text);
std::string complex_name(ComplexWhich which);

// The abstract complex: K_i has vertices {dot, o_i, s_i} with the two
// isotopes joined by an edge; unions merge vertex sets and simplexes; K10
// has vertices {dot, o0, o1, s0, s1} and every subset of the four isotopes
// as a simplex (plus the singletons).
SimplicialComplex build_K(ComplexWhich which);

// Structural soundness of an abstract complex: no empty simplex, every
// vertex a singleton, closure under nonempty subsets.
bool is_complex(const SimplicialComplex& K);

// Validity of the complex of isotopes at p: within every simplex, each pair
// of distinct vertices must name isomorphic loops. The certificate records
// the first failing pair per simplex.
Certificate validate_complex(const Loop& loop, ComplexWhich which, Params p,
                             const OsbornOptions& opts = {});

// The statement attached to a complex: validity at every p holds exactly
// when the stated loop-theoretic condition holds (universal Osborn for
// K0/K1/K01, plus both gamma01 conditions at every p for K10). K2/K3/K23
// and K0123 are forward implications only; the converse value is still
// recorded as an informational clause.
Certificate theorem_K(const Loop& loop, ComplexWhich which,
                      const OsbornOptions& opts = {});

// Whether the vertex map f carries every simplex of K onto a simplex of K2.
// Throws UnknownVertexError when f is partial on K's vertices or maps
// outside K2's vertex set.
bool simplicial_map(const SimplicialComplex& K, const SimplicialComplex& K2,
                    const std::map<std::string, std::string>& f);

// The vertex map f_ij: dot->dot, o_i->o_j, s_i->s_j between K_i and K_j,
// checked to be simplicial (images of simplexes are simplexes).
Certificate simplicial_map_check(const Loop& loop, int i, int j, Params p,
                                 const OsbornOptions& opts = {});

// Whether the simplex family, read as a family of open sets over the vertex
// set, is a topology: contains the empty set and V, closed under pairwise
// union and intersection.
bool is_topology(const std::vector<std::string>& V,
                 const std::vector<Simplex>& S);
Certificate topology_check(const SimplicialComplex& K);

json complex_to_json(const SimplicialComplex& K);

}  // namespace loopwork
