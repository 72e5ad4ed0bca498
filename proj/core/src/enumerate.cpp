#include "loopwork/enumerate.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>

#include "loopwork/classify.hpp"
#include "loopwork/errors.hpp"
#include "loopwork/osborn.hpp"

namespace loopwork {

namespace {

struct Enumerator {
    int n;
    const std::function<bool(const Loop&)>& visit;
    std::vector<int> cells;
    std::vector<std::uint32_t> row_used, col_used;
    std::uint64_t count = 0;
    bool stopped = false;

    explicit Enumerator(int order, const std::function<bool(const Loop&)>& v)
        : n(order), visit(v), cells(static_cast<std::size_t>(order) * order),
          row_used(order), col_used(order) {
        for (int j = 0; j < n; ++j) cells[j] = j;
        for (int i = 0; i < n; ++i) cells[i * n] = i;
        for (int i = 1; i < n; ++i) row_used[i] = 1u << i;
        for (int j = 1; j < n; ++j) col_used[j] = 1u << j;
    }

    void emit() {
        ++count;
        Loop loop = make_loop(cells, "Q" + std::to_string(n) + "." +
                                         std::to_string(count));
        if (!visit(loop)) stopped = true;
    }

    void fill(int i, int j) {
        if (stopped) return;
        if (i == n) {
            emit();
            return;
        }
        const int ni = j == n - 1 ? i + 1 : i;
        const int nj = j == n - 1 ? 1 : j + 1;
        const std::uint32_t used = row_used[i] | col_used[j];
        for (int v = 0; v < n; ++v) {
            const std::uint32_t bit = 1u << v;
            if (used & bit) continue;
            cells[i * n + j] = v;
            row_used[i] |= bit;
            col_used[j] |= bit;
            fill(ni, nj);
            row_used[i] &= ~bit;
            col_used[j] &= ~bit;
            if (stopped) return;
        }
    }
};

Loop cyclic_group(int n, std::string name) {
    std::vector<int> cells(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cells[i * n + j] = (i + j) % n;
    return make_loop(std::move(cells), std::move(name));
}

Loop xor_group(int n, std::string name) {
    std::vector<int> cells(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cells[i * n + j] = i ^ j;
    return make_loop(std::move(cells), std::move(name));
}

// The symmetric group on three points, elements being the permutations of
// {0,1,2} in lexicographic order, multiplied by left-to-right composition.
Loop symmetric_group_3() {
    std::vector<Perm> elems;
    Perm p = {0, 1, 2};
    do {
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const auto index_of = [&](const Perm& q) {
        return static_cast<int>(std::find(elems.begin(), elems.end(), q) -
                                elems.begin());
    };
    const int n = static_cast<int>(elems.size());
    std::vector<int> cells(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cells[i * n + j] = index_of(compose(elems[i], elems[j]));
    return make_loop(std::move(cells), "S3");
}

Loop n5_loop() {
    return make_loop({0, 1, 2, 3, 4,
                      1, 0, 3, 4, 2,
                      2, 3, 4, 0, 1,
                      3, 4, 1, 2, 0,
                      4, 2, 0, 1, 3},
                     "N5");
}

// --- corpus filter grammar ---

struct FilterNode {
    enum class Kind { flag, universal_osborn, land, lor, lnot };
    Kind kind;
    std::string name;
    std::vector<FilterNode> children;
};

struct FilterParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit FilterParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
            ++pos;
    }
    bool eat(const std::string& token) {
        skip_ws();
        if (text.compare(pos, token.size(), token) == 0) {
            pos += token.size();
            return true;
        }
        return false;
    }
    // Word aliases must not swallow the prefix of a flag name.
    bool eat_word(const std::string& token) {
        skip_ws();
        if (text.compare(pos, token.size(), token) != 0) return false;
        const std::size_t end = pos + token.size();
        if (end < text.size() &&
            (std::isalnum(static_cast<unsigned char>(text[end])) ||
             text[end] == '_'))
            return false;
        pos = end;
        return true;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    FilterNode parse() {
        FilterNode node = parse_or();
        if (!at_end())
            throw BadFilterError("trailing input in filter at offset " +
                                 std::to_string(pos));
        return node;
    }
    FilterNode parse_or() {
        FilterNode lhs = parse_and();
        while (eat("|") || eat("∨") || eat_word("OR")) {
            FilterNode node{FilterNode::Kind::lor, "", {}};
            node.children.push_back(std::move(lhs));
            node.children.push_back(parse_and());
            lhs = std::move(node);
        }
        return lhs;
    }
    FilterNode parse_and() {
        FilterNode lhs = parse_not();
        while (eat("&") || eat("∧") || eat_word("AND")) {
            FilterNode node{FilterNode::Kind::land, "", {}};
            node.children.push_back(std::move(lhs));
            node.children.push_back(parse_not());
            lhs = std::move(node);
        }
        return lhs;
    }
    FilterNode parse_not() {
        if (eat("!") || eat("¬") || eat_word("NOT")) {
            FilterNode node{FilterNode::Kind::lnot, "", {}};
            node.children.push_back(parse_not());
            return node;
        }
        return parse_atom();
    }
    FilterNode parse_atom() {
        if (eat("(")) {
            FilterNode node = parse_or();
            if (!eat(")"))
                throw BadFilterError("missing ')' in filter at offset " +
                                     std::to_string(pos));
            return node;
        }
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_'))
            ++pos;
        if (pos == start)
            throw BadFilterError("expected a flag name at offset " +
                                 std::to_string(start));
        const std::string name = text.substr(start, pos - start);
        if (name == "universal_osborn")
            return FilterNode{FilterNode::Kind::universal_osborn, name, {}};
        for (const std::string& known : Flags::all_names())
            if (name == known)
                return FilterNode{FilterNode::Kind::flag, name, {}};
        throw BadFilterError("unknown flag '" + name + "' in filter");
    }
};

struct FilterEval {
    const Loop& loop;
    const Flags& flags;
    std::optional<bool> uo;

    bool eval(const FilterNode& node) {
        switch (node.kind) {
            case FilterNode::Kind::flag:
                return flags.get(node.name);
            case FilterNode::Kind::universal_osborn:
                if (!uo) uo = is_universal_osborn(loop).pass;
                return *uo;
            case FilterNode::Kind::land:
                return eval(node.children[0]) && eval(node.children[1]);
            case FilterNode::Kind::lor:
                return eval(node.children[0]) || eval(node.children[1]);
            case FilterNode::Kind::lnot:
                return !eval(node.children[0]);
        }
        throw BadFilterError("unreachable filter node");
    }
};

}  // namespace

std::uint64_t enumerate_loops(int n,
                              const std::function<bool(const Loop&)>& visit,
                              int bound) {
    if (n < 1) throw MalformedError("order must be at least 1");
    if (n > bound || n > 31)
        throw BoundExceededError("loop enumeration capped at order " +
                                 std::to_string(std::min(bound, 31)) + ", got " +
                                 std::to_string(n) + " (raise with --bound)");
    Enumerator e(n, visit);
    if (n == 1)
        e.emit();
    else
        e.fill(1, 1);
    return e.count;
}

std::uint64_t count_loops(int n, int bound) {
    return enumerate_loops(n, [](const Loop&) { return true; }, bound);
}

Loop chein_double(const Loop& group) {
    if (!is_associative(group))
        throw NotAGroupError("the doubling construction needs a group, and '" +
                             group.name + "' is not associative");
    const int m = group.n;
    const int n = 2 * m;
    std::vector<int> cells(static_cast<std::size_t>(n) * n);
    const auto inv = [&](int a) {
        return inverse_element(group, InverseKind::rho, a);
    };
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            cells[a * n + b] = group.mul(a, b);
            cells[a * n + (b + m)] = group.mul(b, a) + m;
            cells[(a + m) * n + b] = group.mul(a, inv(b)) + m;
            cells[(a + m) * n + (b + m)] = group.mul(inv(b), a);
        }
    return make_loop(std::move(cells), "M(" + group.name + ",2)");
}

const std::vector<NamedLoop>& builtins() {
    static const std::vector<NamedLoop> catalog = [] {
        std::vector<NamedLoop> list;
        for (int n = 1; n <= 6; ++n) {
            const std::string name = "Z" + std::to_string(n);
            list.push_back({name, cyclic_group(n, name)});
        }
        list.push_back({"Z2xZ2", xor_group(4, "Z2xZ2")});
        list.push_back({"Z2^3", xor_group(8, "Z2^3")});
        list.push_back({"S3", symmetric_group_3()});
        list.push_back({"N5", n5_loop()});
        Loop m12 = chein_double(symmetric_group_3());
        list.push_back({m12.name, std::move(m12)});
        return list;
    }();
    return catalog;
}

namespace {

bool name_matches(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

}  // namespace

const Loop& builtin_loop(const std::string& name) {
    for (const NamedLoop& entry : builtins())
        if (name_matches(entry.name, name)) return entry.loop;
    std::string known;
    for (const NamedLoop& entry : builtins()) {
        if (!known.empty()) known += ", ";
        known += entry.name;
    }
    throw UnknownLoopError("no built-in loop named '" + name +
                           "' (known: " + known + ")");
}

bool is_builtin(const std::string& name) {
    for (const NamedLoop& entry : builtins())
        if (name_matches(entry.name, name)) return true;
    return false;
}

std::function<bool(const Loop&)> compile_filter(const std::string& filter) {
    std::shared_ptr<FilterNode> root;
    {
        FilterParser parser(filter);
        if (!parser.at_end()) root = std::make_shared<FilterNode>(parser.parse());
    }
    return [root](const Loop& loop) {
        if (!root) return true;
        const Flags flags = classify(loop);
        FilterEval eval{loop, flags, std::nullopt};
        return eval.eval(*root);
    };
}

std::uint64_t corpus(const std::string& filter, int max_order,
                     const std::function<bool(const NamedLoop&)>& visit) {
    const auto matches = compile_filter(filter);

    std::uint64_t emitted = 0;
    bool stopped = false;
    for (const NamedLoop& entry : builtins()) {
        if (entry.loop.n > max_order) continue;
        if (!matches(entry.loop)) continue;
        ++emitted;
        if (!visit(entry)) return emitted;
    }
    for (int n = 1; n <= max_order && !stopped; ++n) {
        enumerate_loops(n, [&](const Loop& loop) {
            for (const NamedLoop& entry : builtins())
                if (entry.loop.n == n && entry.loop.same_table(loop))
                    return true;
            if (!matches(loop)) return true;
            ++emitted;
            if (!visit({loop.name, loop})) {
                stopped = true;
                return false;
            }
            return true;
        });
    }
    return emitted;
}

}  // namespace loopwork
