#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "loopwork/loop.hpp"

namespace loopwork {

// Term grammar: variables a-z, constant `e`, binary `*` `\` `/` with equal
// precedence and left associativity, postfix `^l` `^r`, parentheses.
struct Term {
    enum class Kind { variable, identity_const, binary, post_inverse };
    Kind kind;
    char var = 0;            // variable
    char op = 0;             // binary: '*', '\\', '/'
    InverseKind inv_kind{};  // post_inverse
    std::unique_ptr<Term> lhs, rhs;  // binary: both; post_inverse: lhs only
};

struct Identity {
    std::string text;
    std::unique_ptr<Term> lhs, rhs;
    std::vector<char> vars;  // first-occurrence order

    Identity() = default;
    Identity(Identity&&) = default;
    Identity& operator=(Identity&&) = default;
    Identity clone() const;
};

// Throws SyntaxError with position on malformed input.
Identity parse_identity(const std::string& text);

int eval_term(const Loop& loop, const Term& term,
              const std::vector<int>& assignment, const std::vector<char>& vars);

struct Counterexample {
    std::vector<int> assignment;  // values in vars order
    int lhs = 0;
    int rhs = 0;
};

// Exhaustive evaluation over all n^k assignments in lexicographic order over
// the first-occurrence variable list; returns the first counterexample.
std::optional<Counterexample> check_identity(const Loop& loop, const Identity& id);

// Built-in identities.
const Identity& os3_identity();
const Identity& os5_identity();
const Identity& moufang_identity();
const Identity& extra_identity();
const Identity& left_bol_identity();
const Identity* builtin_identity(const std::string& name);

}  // namespace loopwork
