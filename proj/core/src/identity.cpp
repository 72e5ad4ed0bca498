#include "loopwork/identity.hpp"

#include <algorithm>
#include <cctype>

#include "loopwork/errors.hpp"

namespace loopwork {

namespace {

std::unique_ptr<Term> clone_term(const Term* t) {
    if (!t) return nullptr;
    auto out = std::make_unique<Term>();
    out->kind = t->kind;
    out->var = t->var;
    out->op = t->op;
    out->inv_kind = t->inv_kind;
    out->lhs = clone_term(t->lhs.get());
    out->rhs = clone_term(t->rhs.get());
    return out;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    // expr := factor (('*'|'\'|'/') factor)*, left associative, one level.
    std::unique_ptr<Term> parse_expr() {
        auto lhs = parse_factor();
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '*' && c != '\\' && c != '/') return lhs;
            ++pos_;
            auto node = std::make_unique<Term>();
            node->kind = Term::Kind::binary;
            node->op = c;
            node->lhs = std::move(lhs);
            node->rhs = parse_factor();
            lhs = std::move(node);
        }
    }

    // factor := atom ('^' ('l'|'r'))*
    std::unique_ptr<Term> parse_factor() {
        auto t = parse_atom();
        for (;;) {
            skip_ws();
            if (peek() != '^') return t;
            ++pos_;
            const char c = peek();
            if (c != 'l' && c != 'r')
                throw SyntaxError("expected 'l' or 'r' after '^'", pos_);
            ++pos_;
            auto node = std::make_unique<Term>();
            node->kind = Term::Kind::post_inverse;
            node->inv_kind = c == 'l' ? InverseKind::lambda : InverseKind::rho;
            node->lhs = std::move(t);
            t = std::move(node);
        }
    }

    std::unique_ptr<Term> parse_atom() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            auto t = parse_expr();
            skip_ws();
            if (peek() != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return t;
        }
        if (c == 'e') {
            ++pos_;
            auto t = std::make_unique<Term>();
            t->kind = Term::Kind::identity_const;
            return t;
        }
        if (c >= 'a' && c <= 'z') {
            ++pos_;
            auto t = std::make_unique<Term>();
            t->kind = Term::Kind::variable;
            t->var = c;
            return t;
        }
        throw SyntaxError(c ? std::string("unexpected '") + c + "'"
                            : std::string("unexpected end of input"),
                          pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void advance() { ++pos_; }

    std::size_t pos() const { return pos_; }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

void collect_vars(const Term* t, std::vector<char>& vars) {
    if (!t) return;
    if (t->kind == Term::Kind::variable) {
        if (std::find(vars.begin(), vars.end(), t->var) == vars.end())
            vars.push_back(t->var);
        return;
    }
    collect_vars(t->lhs.get(), vars);
    collect_vars(t->rhs.get(), vars);
}

}  // namespace

Identity Identity::clone() const {
    Identity out;
    out.text = text;
    out.lhs = clone_term(lhs.get());
    out.rhs = clone_term(rhs.get());
    out.vars = vars;
    return out;
}

Identity parse_identity(const std::string& text) {
    Parser parser(text);
    Identity id;
    id.text = text;
    id.lhs = parser.parse_expr();
    parser.skip_ws();
    if (parser.peek() != '=') throw SyntaxError("expected '='", parser.pos());
    parser.advance();
    id.rhs = parser.parse_expr();
    parser.skip_ws();
    if (parser.peek() != '\0')
        throw SyntaxError("trailing input after identity", parser.pos());
    collect_vars(id.lhs.get(), id.vars);
    collect_vars(id.rhs.get(), id.vars);
    return id;
}

int eval_term(const Loop& loop, const Term& term,
              const std::vector<int>& assignment, const std::vector<char>& vars) {
    switch (term.kind) {
        case Term::Kind::variable: {
            const auto it = std::find(vars.begin(), vars.end(), term.var);
            return assignment[static_cast<std::size_t>(it - vars.begin())];
        }
        case Term::Kind::identity_const:
            return loop.e;
        case Term::Kind::binary: {
            const int a = eval_term(loop, *term.lhs, assignment, vars);
            const int b = eval_term(loop, *term.rhs, assignment, vars);
            switch (term.op) {
                case '*': return loop.mul(a, b);
                case '\\': return loop.ldiv(a, b);
                case '/': return loop.rdiv(a, b);
            }
            return 0;
        }
        case Term::Kind::post_inverse: {
            const int a = eval_term(loop, *term.lhs, assignment, vars);
            return inverse_element(loop, term.inv_kind, a);
        }
    }
    return 0;
}

std::optional<Counterexample> check_identity(const Loop& loop, const Identity& id) {
    const int n = loop.n;
    const std::size_t k = id.vars.size();
    std::vector<int> assignment(k, 0);
    for (;;) {
        const int lhs = eval_term(loop, *id.lhs, assignment, id.vars);
        const int rhs = eval_term(loop, *id.rhs, assignment, id.vars);
        if (lhs != rhs) return Counterexample{assignment, lhs, rhs};
        // Advance the assignment as a base-n odometer, last variable fastest.
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++assignment[i] < n) break;
            assignment[i] = 0;
            if (i == 0) return std::nullopt;
        }
        if (k == 0) return std::nullopt;
    }
}

namespace {
const Identity& cached(const char* text) {
    static std::vector<std::pair<std::string, Identity>> cache;
    for (auto& entry : cache)
        if (entry.first == text) return entry.second;
    cache.emplace_back(text, parse_identity(text));
    return cache.back().second;
}
}  // namespace

const Identity& os3_identity() {
    return cached("(x*(y*z))*x = (x*y)*(((x^l)*(x*z))*x)");
}
const Identity& os5_identity() {
    return cached("(x*(y*z))*x = (x*y)*((x*((x^r)*z))*x)");
}
const Identity& moufang_identity() {
    return cached("(x*y)*(z*x) = (x*(y*z))*x");
}
const Identity& extra_identity() {
    return cached("x*(y*(z*x)) = ((x*y)*z)*x");
}
const Identity& left_bol_identity() {
    return cached("x*(y*(x*z)) = (x*(y*x))*z");
}

const Identity* builtin_identity(const std::string& name) {
    if (name == "os3") return &os3_identity();
    if (name == "os5") return &os5_identity();
    if (name == "moufang") return &moufang_identity();
    if (name == "extra") return &extra_identity();
    if (name == "left_bol") return &left_bol_identity();
    return nullptr;
}

}  // namespace loopwork
