#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "loopwork/loop.hpp"

namespace loopwork {

struct IsoTriple {
    Perm a, b, c;
    bool operator==(const IsoTriple&) const = default;
};

struct SearchBounds {
    int autotopisms = 8;
    int bs2 = 6;
    int universal_osborn = 12;
    int g_loop = 8;
};

// Principal isotope Q_{f,g} with x o y = (x/g)*(f\y); identity is f*g.
Loop principal_isotope(const Loop& loop, int f, int g);

// True iff xa o_H yb = (x *_G y)c for all x,y. Throws OrderMismatchError.
bool is_isotopism(const IsoTriple& t, const Loop& g, const Loop& h);
bool is_isomorphism(const Perm& theta, const Loop& g, const Loop& h);
bool is_autotopism(const Loop& loop, const IsoTriple& t);

// Complete AUT(Q), pruned via the forced reconstructions gamma = alpha R_{e
// beta} and beta = gamma L_{e alpha}^{-1}. Sorted lexicographically.
std::vector<IsoTriple> autotopisms(const Loop& loop, int bound = 8);
// Unpruned oracle over all permutation triples; only for very small n.
std::vector<IsoTriple> autotopisms_unpruned(const Loop& loop, int bound = 4);

// All autotopisms with the given third component: the first component
// determines the rest via c = e mu, lambda = nu R_c^{-1}, mu = nu L_{e
// lambda}^{-1}. Linear scan over c.
std::vector<std::pair<Perm, Perm>> autotopisms_with_third(const Loop& loop,
                                                          const Perm& nu);

struct Regularity {
    bool autotopic = false;
    bool lambda_regular = false;  // (U, I, U) in AUT
    bool rho_regular = false;     // (I, U, U) in AUT
};
Regularity regularity(const Loop& loop, const Perm& u, int bound = 8);

// Backtracking with identity pinning and product propagation; returns the
// deterministic first isomorphism or nullopt.
std::optional<Perm> find_isomorphism(const Loop& g, const Loop& h);

// Autotopism (alpha,beta,gamma) with f alpha = c, g beta = d, (fg) gamma = cd,
// or nullopt. Built from an isomorphism Q_{f,g} -> Q_{c,d} when one exists.
std::optional<IsoTriple> drisko(const Loop& loop, int f, int g, int c, int d);
// All such autotopisms (bounded AUT scan).
std::vector<IsoTriple> drisko_all(const Loop& loop, int f, int g, int c, int d,
                                  int bound = 8);
// The constructor (R_g theta R_d^{-1}, L_f theta L_c^{-1}, theta).
IsoTriple drisko_from_isomorphism(const Loop& loop, int f, int g, int c, int d,
                                  const Perm& theta);

// True iff c*b and a*d lie in the middle nucleus of Q_{a,b} and a*b = c*d.
bool bryant_schneider_identity_test(const Loop& loop, int a, int b, int c, int d);

struct GLoopResult {
    bool pass = false;
    std::array<int, 2> witness{};  // (f,g) with no isomorphism, when !pass
};
GLoopResult is_g_loop(const Loop& loop, int bound = 8);

// Evidence (a,b,c,d) that theta is an isomorphism Q_{a,b} -> Q_{c,d}, scanning
// (a,b) then the factorizations c*(c\t) of t = (ab)theta. Throws
// BoundExceededError above the bound.
std::optional<std::array<int, 4>> bs2_contains(const Loop& loop, const Perm& theta,
                                               int bound = 6);

}  // namespace loopwork
