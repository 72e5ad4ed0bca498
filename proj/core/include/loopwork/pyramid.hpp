#pragma once

#include <string>
#include <vector>

#include "loopwork/certificate.hpp"
#include "loopwork/loop.hpp"
#include "loopwork/osborn.hpp"

namespace loopwork {

// One letter of a translation word: a right or left translation by a fixed
// element, possibly inverted.
struct WordLetter {
    Side side = Side::right;
    int elem = 0;
    int exp = 1;  // +1 or -1
};
using Word = std::vector<WordLetter>;

// Letter count of the word as written; the identity word has length 0 and
// no free reduction is applied.
int word_length(const Word& word);
Perm eval_word(const Loop& loop, const Word& word);
std::string word_to_string(const Word& word);

// The defining word of the named map at p, the single source for both the
// permutation and its printed length.
Word gamma_word(const Loop& loop, GammaWhich which, Params p,
                Gamma1Variant g1 = Gamma1Variant::swapped,
                Phi1Variant f1 = Phi1Variant::mirrored);

struct PyramidEdge {
    std::string from, to;
    std::string label;   // "triple" for apex edges, else the gamma name
    int length = 0;
    bool verified = false;  // edge map checked as an isomorphism/isotopism
};

struct PyramidGraph {
    std::string loop_name;
    Params p{};
    std::vector<std::string> vertices;  // apex first, then the base cycle
    std::vector<PyramidEdge> edges;
};

// The rectangular pyramid over the four isotopes of the combined diagram:
// apex `dot` joined to o0, o1, s0, s1 by the principal triples (length 2
// each); base edges o0 -g01o-> o1, o0 -g0-> s0, s0 -g01s-> s1 and
// s1 -g1-> o1. Requires a universal Osborn loop.
PyramidGraph build_pyramid(const Loop& loop, Params p,
                           const OsbornOptions& opts = {});

// Opposite sides of the base must have equal length, and all four apex
// edges must agree.
Certificate verify_rectangle(const PyramidGraph& graph);

// json round-trips through parse_pyramid_json; dot is Graphviz; text is a
// fixed-width listing. The embedding is schematic, lengths are labels only.
std::string export_graph(const PyramidGraph& graph, const std::string& format);
PyramidGraph parse_pyramid_json(const std::string& text);

// Lexicographically first p at which all four base-edge words evaluate to
// verified maps.
Params default_pyramid_params(const Loop& loop, const OsbornOptions& opts = {});

}  // namespace loopwork
