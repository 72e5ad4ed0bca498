#include "loopwork/isotopy.hpp"

#include <algorithm>
#include <numeric>

#include "loopwork/errors.hpp"

namespace loopwork {

namespace {

void require_order(const Loop& loop, int bound, const char* what) {
    if (loop.n > bound)
        throw BoundExceededError(std::string(what) + " capped at order " +
                                 std::to_string(bound) + ", got " +
                                 std::to_string(loop.n) +
                                 " (raise with --bound)");
}

bool triple_less(const IsoTriple& s, const IsoTriple& t) {
    if (s.a != t.a) return s.a < t.a;
    if (s.b != t.b) return s.b < t.b;
    return s.c < t.c;
}

}  // namespace

Loop principal_isotope(const Loop& loop, int f, int g) {
    const int n = loop.n;
    std::vector<int> cells(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            cells[x * n + y] = loop.mul(loop.rdiv(x, g), loop.ldiv(f, y));
    std::string name = "Q_{" + std::to_string(f) + "," + std::to_string(g) + "}";
    if (!loop.name.empty()) name += "(" + loop.name + ")";
    Loop iso = make_loop(std::move(cells), std::move(name));
    // The isotope's identity is f*g by construction.
    if (iso.e != loop.mul(f, g))
        throw MalformedError("principal isotope identity mismatch");
    return iso;
}

bool is_isotopism(const IsoTriple& t, const Loop& g, const Loop& h) {
    const int n = g.n;
    if (h.n != n || static_cast<int>(t.a.size()) != n ||
        static_cast<int>(t.b.size()) != n || static_cast<int>(t.c.size()) != n)
        throw OrderMismatchError("isotopism components must match the loop order");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (h.mul(t.a[x], t.b[y]) != t.c[g.mul(x, y)]) return false;
    return true;
}

bool is_isomorphism(const Perm& theta, const Loop& g, const Loop& h) {
    return is_isotopism(IsoTriple{theta, theta, theta}, g, h);
}

bool is_autotopism(const Loop& loop, const IsoTriple& t) {
    return is_isotopism(t, loop, loop);
}

std::vector<IsoTriple> autotopisms(const Loop& loop, int bound) {
    require_order(loop, bound, "autotopism enumeration");
    const int n = loop.n;
    std::vector<IsoTriple> out;
    Perm alpha = identity_perm(n);
    std::sort(alpha.begin(), alpha.end());
    do {
        const int d = alpha[loop.e];
        const Perm l_d_inv = loop.left_translation_inv(d);
        for (int c = 0; c < n; ++c) {
            // gamma = alpha R_c and beta = gamma L_d^{-1} are forced by
            // setting y = e resp. x = e in the autotopism equation.
            const Perm gamma = compose(alpha, loop.right_translation(c));
            const Perm beta = compose(gamma, l_d_inv);
            if (beta[loop.e] != c) continue;
            IsoTriple t{alpha, beta, gamma};
            if (is_autotopism(loop, t)) out.push_back(std::move(t));
        }
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    std::sort(out.begin(), out.end(), triple_less);
    return out;
}

std::vector<IsoTriple> autotopisms_unpruned(const Loop& loop, int bound) {
    require_order(loop, bound, "unpruned autotopism enumeration");
    const int n = loop.n;
    std::vector<Perm> perms;
    Perm p = identity_perm(n);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<IsoTriple> out;
    for (const Perm& a : perms)
        for (const Perm& b : perms)
            for (const Perm& c : perms) {
                IsoTriple t{a, b, c};
                if (is_autotopism(loop, t)) out.push_back(std::move(t));
            }
    std::sort(out.begin(), out.end(), triple_less);
    return out;
}

std::vector<std::pair<Perm, Perm>> autotopisms_with_third(const Loop& loop,
                                                          const Perm& nu) {
    const int n = loop.n;
    if (static_cast<int>(nu.size()) != n)
        throw OrderMismatchError("third component must match the loop order");
    std::vector<std::pair<Perm, Perm>> out;
    for (int c = 0; c < n; ++c) {
        // lambda = nu R_c^{-1} (y = e) and mu = nu L_d^{-1} with d = e lambda.
        const Perm lambda = compose(nu, loop.right_translation_inv(c));
        const int d = lambda[loop.e];
        const Perm mu = compose(nu, loop.left_translation_inv(d));
        if (mu[loop.e] != c) continue;
        if (is_autotopism(loop, IsoTriple{lambda, mu, nu}))
            out.emplace_back(lambda, mu);
    }
    return out;
}

Regularity regularity(const Loop& loop, const Perm& u, int bound) {
    require_order(loop, bound, "regularity check");
    const int n = loop.n;
    if (static_cast<int>(u.size()) != n)
        throw OrderMismatchError("permutation must match the loop order");
    Regularity r;
    const Perm id = identity_perm(n);
    r.lambda_regular = is_autotopism(loop, IsoTriple{u, id, u});
    r.rho_regular = is_autotopism(loop, IsoTriple{id, u, u});
    // (u, beta, gamma) in AUT for some beta, gamma: both are forced by the
    // value c = e beta, so a linear scan over c decides autotopy of u.
    const int d = u[loop.e];
    const Perm l_d_inv = loop.left_translation_inv(d);
    for (int c = 0; c < n && !r.autotopic; ++c) {
        const Perm gamma = compose(u, loop.right_translation(c));
        const Perm beta = compose(gamma, l_d_inv);
        if (beta[loop.e] != c) continue;
        r.autotopic = is_autotopism(loop, IsoTriple{u, beta, gamma});
    }
    return r;
}

std::optional<Perm> find_isomorphism(const Loop& g, const Loop& h) {
    const int n = g.n;
    if (h.n != n)
        throw OrderMismatchError("loops of different order cannot be isomorphic");

    std::vector<int> theta(n, -1);
    std::vector<bool> used(n, false);

    // Assigns theta[x] = y and closes under products of assigned pairs.
    // Returns the trail of assignments made, or nullopt on contradiction.
    auto propagate = [&](int x0, int y0) -> std::optional<std::vector<int>> {
        std::vector<int> trail;
        auto assign = [&](int x, int y) {
            if (theta[x] != -1) return theta[x] == y;
            if (used[y]) return false;
            theta[x] = y;
            used[y] = true;
            trail.push_back(x);
            return true;
        };
        auto undo = [&] {
            for (int x : trail) {
                used[theta[x]] = false;
                theta[x] = -1;
            }
        };
        if (!assign(x0, y0)) {
            undo();
            return std::nullopt;
        }
        for (std::size_t i = 0; i < trail.size(); ++i) {
            const int a = trail[i];
            for (int b = 0; b < n; ++b) {
                if (theta[b] == -1) continue;
                if (!assign(g.mul(a, b), h.mul(theta[a], theta[b])) ||
                    !assign(g.mul(b, a), h.mul(theta[b], theta[a]))) {
                    undo();
                    return std::nullopt;
                }
            }
        }
        return trail;
    };

    auto unassign = [&](const std::vector<int>& trail) {
        for (int x : trail) {
            used[theta[x]] = false;
            theta[x] = -1;
        }
    };

    auto search = [&](auto&& self) -> bool {
        int x = -1;
        for (int i = 0; i < n; ++i)
            if (theta[i] == -1) {
                x = i;
                break;
            }
        if (x == -1) return true;
        for (int y = 0; y < n; ++y) {
            if (used[y]) continue;
            auto trail = propagate(x, y);
            if (!trail) continue;
            if (self(self)) return true;
            unassign(*trail);
        }
        return false;
    };

    auto seed = propagate(g.e, h.e);
    if (!seed) return std::nullopt;
    if (!search(search)) return std::nullopt;
    return Perm(theta.begin(), theta.end());
}

IsoTriple drisko_from_isomorphism(const Loop& loop, int f, int g, int c, int d,
                                  const Perm& theta) {
    const Perm a = compose(compose(loop.right_translation(g), theta),
                           loop.right_translation_inv(d));
    const Perm b = compose(compose(loop.left_translation(f), theta),
                           loop.left_translation_inv(c));
    return IsoTriple{a, b, theta};
}

std::optional<IsoTriple> drisko(const Loop& loop, int f, int g, int c, int d) {
    const Loop qfg = principal_isotope(loop, f, g);
    const Loop qcd = principal_isotope(loop, c, d);
    const auto theta = find_isomorphism(qfg, qcd);
    if (!theta) return std::nullopt;
    IsoTriple t = drisko_from_isomorphism(loop, f, g, c, d, *theta);
    if (!is_autotopism(loop, t))
        throw MalformedError("isomorphism-built triple failed the autotopism check");
    return t;
}

std::vector<IsoTriple> drisko_all(const Loop& loop, int f, int g, int c, int d,
                                  int bound) {
    std::vector<IsoTriple> out;
    const int fg = loop.mul(f, g);
    const int cd = loop.mul(c, d);
    for (const IsoTriple& t : autotopisms(loop, bound))
        if (t.a[f] == c && t.b[g] == d && t.c[fg] == cd) out.push_back(t);
    return out;
}

bool bryant_schneider_identity_test(const Loop& loop, int a, int b, int c, int d) {
    const Loop qab = principal_isotope(loop, a, b);
    const std::vector<int> nmu = nucleus(qab, NucleusKind::middle);
    auto in_nmu = [&](int v) {
        return std::find(nmu.begin(), nmu.end(), v) != nmu.end();
    };
    return in_nmu(loop.mul(c, b)) && in_nmu(loop.mul(a, d)) &&
           loop.mul(a, b) == loop.mul(c, d);
}

GLoopResult is_g_loop(const Loop& loop, int bound) {
    require_order(loop, bound, "G-loop check");
    GLoopResult r;
    for (int f = 0; f < loop.n; ++f)
        for (int g = 0; g < loop.n; ++g)
            if (!find_isomorphism(loop, principal_isotope(loop, f, g))) {
                r.pass = false;
                r.witness = {f, g};
                return r;
            }
    r.pass = true;
    return r;
}

std::optional<std::array<int, 4>> bs2_contains(const Loop& loop, const Perm& theta,
                                               int bound) {
    require_order(loop, bound, "second Bryant-Schneider membership");
    const int n = loop.n;
    if (static_cast<int>(theta.size()) != n)
        throw OrderMismatchError("permutation must match the loop order");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Loop qab = principal_isotope(loop, a, b);
            const int t = theta[loop.mul(a, b)];
            for (int c = 0; c < n; ++c) {
                const int d = loop.ldiv(c, t);
                if (is_isomorphism(theta, qab, principal_isotope(loop, c, d)))
                    return std::array<int, 4>{a, b, c, d};
            }
        }
    return std::nullopt;
}

}  // namespace loopwork
