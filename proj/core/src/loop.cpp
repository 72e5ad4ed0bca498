#include "loopwork/loop.hpp"

#include <cctype>
#include <sstream>

#include "loopwork/errors.hpp"

namespace loopwork {

Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

bool is_perm(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> seen(n, false);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size())
        throw OrderMismatchError("cannot compose permutations of different degree");
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
    return r;
}

Perm parse_perm(const std::string& text) {
    Perm p;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw MalformedError("bad permutation entry '" + token + "'");
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos])))
            ++pos;
        if (pos != token.size())
            throw MalformedError("bad permutation entry '" + token + "'");
        p.push_back(value);
    }
    if (!is_perm(p))
        throw MalformedError("'" + text + "' is not a permutation of 0.." +
                             std::to_string(p.size() ? p.size() - 1 : 0));
    return p;
}

std::string perm_to_string(const Perm& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

Perm Loop::right_translation(int a) const {
    Perm p(n);
    for (int x = 0; x < n; ++x) p[x] = mul(x, a);
    return p;
}

Perm Loop::left_translation(int a) const {
    Perm p(n);
    for (int y = 0; y < n; ++y) p[y] = mul(a, y);
    return p;
}

Perm Loop::right_translation_inv(int a) const {
    Perm p(n);
    for (int x = 0; x < n; ++x) p[x] = rdiv(x, a);
    return p;
}

Perm Loop::left_translation_inv(int a) const {
    Perm p(n);
    for (int y = 0; y < n; ++y) p[y] = ldiv(a, y);
    return p;
}

Loop make_loop(std::vector<int> cells, std::string name) {
    Loop loop;
    const std::size_t size = cells.size();
    int n = 0;
    while (static_cast<std::size_t>(n) * n < size) ++n;
    if (n == 0 || static_cast<std::size_t>(n) * n != size)
        throw MalformedError("table of " + std::to_string(size) +
                             " cells is not square");
    for (std::size_t i = 0; i < size; ++i)
        if (cells[i] < 0 || cells[i] >= n)
            throw MalformedError("cell (" + std::to_string(i / n) + "," +
                                 std::to_string(i % n) + ") = " +
                                 std::to_string(cells[i]) + " out of range 0.." +
                                 std::to_string(n - 1));

    // Latin check in row-major order, reporting the first cell that repeats
    // a value already seen in its row or column.
    std::vector<bool> row_seen(static_cast<std::size_t>(n) * n, false);
    std::vector<bool> col_seen(static_cast<std::size_t>(n) * n, false);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const int v = cells[r * n + c];
            if (row_seen[r * n + v] || col_seen[c * n + v])
                throw NotLatinError("duplicate value " + std::to_string(v) +
                                    " at cell (" + std::to_string(r) + "," +
                                    std::to_string(c) + ")");
            row_seen[r * n + v] = true;
            col_seen[c * n + v] = true;
        }

    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = cells[cand * n + x] == x && cells[x * n + cand] == x;
        if (ok) e = cand;
    }
    if (e < 0) throw NoIdentityError("table has no two-sided identity");

    loop.n = n;
    loop.e = e;
    loop.name = std::move(name);
    loop.cells_ = std::move(cells);
    loop.ld_.assign(static_cast<std::size_t>(n) * n, 0);
    loop.rd_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = loop.cells_[a * n + b];
            loop.ld_[a * n + ab] = b;  // a \ (a*b) = b
            loop.rd_[b * n + ab] = a;  // (a*b) / b = a
        }
    return loop;
}

Loop parse_loop(const std::string& text, std::string name) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            if (line[first] == '#') continue;
            lines.push_back(line);
        }
    }
    if (lines.empty()) throw MalformedError("empty loop file");

    auto parse_ints = [](const std::string& line) {
        std::vector<int> out;
        std::istringstream in(line);
        std::string token;
        while (in >> token) {
            std::size_t pos = 0;
            int value = 0;
            try {
                value = std::stoi(token, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != token.size())
                throw MalformedError("bad table entry '" + token + "'");
            out.push_back(value);
        }
        return out;
    };

    const std::vector<int> header = parse_ints(lines[0]);
    if (header.size() != 1 || header[0] < 1)
        throw MalformedError("first line must be the order, got '" + lines[0] + "'");
    const int n = header[0];
    if (lines.size() != static_cast<std::size_t>(n) + 1)
        throw MalformedError("expected " + std::to_string(n) + " table rows, got " +
                             std::to_string(lines.size() - 1));

    std::vector<int> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        const std::vector<int> row = parse_ints(lines[r + 1]);
        if (row.size() != static_cast<std::size_t>(n))
            throw MalformedError("row " + std::to_string(r) + " has " +
                                 std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(n));
        cells.insert(cells.end(), row.begin(), row.end());
    }
    return make_loop(std::move(cells), std::move(name));
}

std::string render_loop(const Loop& loop) {
    std::string out = std::to_string(loop.n) + "\n";
    for (int r = 0; r < loop.n; ++r) {
        for (int c = 0; c < loop.n; ++c) {
            if (c) out += ' ';
            out += std::to_string(loop.mul(r, c));
        }
        out += '\n';
    }
    return out;
}

Perm translation(const Loop& loop, Side side, int a) {
    return side == Side::right ? loop.right_translation(a)
                               : loop.left_translation(a);
}

int divide(const Loop& loop, Side side, int a, int b) {
    return side == Side::right ? loop.rdiv(a, b) : loop.ldiv(a, b);
}

int inverse_element(const Loop& loop, InverseKind kind, int x) {
    return kind == InverseKind::lambda ? loop.lam(x) : loop.rho(x);
}

std::vector<int> nucleus(const Loop& loop, NucleusKind which) {
    std::vector<int> out;
    const int n = loop.n;
    for (int a = 0; a < n; ++a) {
        bool member = true;
        for (int x = 0; x < n && member; ++x)
            for (int y = 0; y < n && member; ++y) {
                int lhs = 0, rhs = 0;
                switch (which) {
                    case NucleusKind::left:
                        lhs = loop.mul(loop.mul(a, x), y);
                        rhs = loop.mul(a, loop.mul(x, y));
                        break;
                    case NucleusKind::middle:
                        lhs = loop.mul(loop.mul(x, a), y);
                        rhs = loop.mul(x, loop.mul(a, y));
                        break;
                    case NucleusKind::right:
                        lhs = loop.mul(loop.mul(x, y), a);
                        rhs = loop.mul(x, loop.mul(y, a));
                        break;
                }
                member = lhs == rhs;
            }
        if (member) out.push_back(a);
    }
    return out;
}

}  // namespace loopwork
