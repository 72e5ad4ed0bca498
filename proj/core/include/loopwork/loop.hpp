#pragma once

#include <string>
#include <vector>

#include "loopwork/perm.hpp"

namespace loopwork {

enum class Side { left, right };
enum class InverseKind { lambda, rho };
enum class NucleusKind { left, middle, right };

// A finite loop: a quasigroup with a two-sided identity, held as a Cayley
// table. Elements are 0-based; the identity is auto-detected and need not
// be 0. Immutable after construction.
class Loop {
  public:
    int n = 0;
    int e = 0;
    std::string name;

    int mul(int a, int b) const { return cells_[a * n + b]; }
    // a \ b: the unique z with a*z = b.
    int ldiv(int a, int b) const { return ld_[a * n + b]; }
    // a / b: the unique z with z*b = a.
    int rdiv(int a, int b) const { return rd_[b * n + a]; }

    // Right translation R_a: x -> x*a, and left translation L_a: y -> a*y.
    Perm right_translation(int a) const;
    Perm left_translation(int a) const;
    // Their inverses (the blackboard operators of the translation words).
    Perm right_translation_inv(int a) const;
    Perm left_translation_inv(int a) const;

    // x^lambda = e/x (so lam(x)*x = e) and x^rho = x\e (so x*rho(x) = e).
    int lam(int x) const { return rdiv(e, x); }
    int rho(int x) const { return ldiv(x, e); }

    const std::vector<int>& cells() const { return cells_; }
    bool same_table(const Loop& other) const {
        return n == other.n && cells_ == other.cells_;
    }

    friend Loop make_loop(std::vector<int> cells, std::string name);

  private:
    std::vector<int> cells_;
    std::vector<int> ld_;  // ld_[a*n+b] = a\b
    std::vector<int> rd_;  // rd_[b*n+a] = a/b
};

// Validates an n*n row-major table (throws NotLatinError with the first
// offending cell, or NoIdentityError) and precomputes division tables.
Loop make_loop(std::vector<int> cells, std::string name = "");

// `.loop` text format: optional '#' comment lines; first non-comment line n;
// then n lines of n whitespace-separated 0-based integers.
Loop parse_loop(const std::string& text, std::string name = "");
std::string render_loop(const Loop& loop);

Perm translation(const Loop& loop, Side side, int a);
int divide(const Loop& loop, Side side, int a, int b);
int inverse_element(const Loop& loop, InverseKind kind, int x);
std::vector<int> nucleus(const Loop& loop, NucleusKind which);

}  // namespace loopwork
