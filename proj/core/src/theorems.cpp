#include "loopwork/theorems.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "loopwork/classify.hpp"
#include "loopwork/errors.hpp"
#include "loopwork/pyramid.hpp"

namespace loopwork {

namespace {

int uxv(const Loop& q, Params p) { return q.ldiv(p.u, q.mul(p.x, p.v)); }

int c3_param(const Loop& q, Params p) {
    return q.rdiv(q.mul(p.x, q.ldiv(p.u, p.v)), p.v);
}

std::string p_name(Params p) {
    return "p(" + std::to_string(p.x) + "," + std::to_string(p.u) + "," +
           std::to_string(p.v) + ")";
}

void require_universal_osborn(const Loop& L, const OsbornOptions& opts) {
    const auto uo = is_universal_osborn(L, opts.bounds.universal_osborn);
    if (!uo.pass)
        throw HypothesisFailedError(
            "statement assumes a universal Osborn loop; isotope Q_{" +
            std::to_string(uo.witness[0]) + "," + std::to_string(uo.witness[1]) +
            "} fails the defining identity at (" +
            std::to_string(uo.witness[2]) + "," + std::to_string(uo.witness[3]) +
            "," + std::to_string(uo.witness[4]) + ")");
}

// Runs the per-parameter check over all p in lexicographic order, recording
// up to eight violations as clauses plus an all-p summary. Returns the
// violation count.
int scan_all_p(Certificate& cert, const Loop& L, int jobs,
               const std::function<std::optional<json>(Params)>& check,
               const char* summary_name = "all-p") {
    const int n = L.n;
    const int total = n * n * n;
    std::vector<std::optional<json>> results(static_cast<std::size_t>(total));
    auto worker = [&](int lo, int hi) {
        for (int idx = lo; idx < hi; ++idx)
            results[idx] = check(Params{idx / (n * n), (idx / n) % n, idx % n});
    };
    jobs = std::max(1, jobs);
    if (jobs <= 1 || total < 2 * jobs) {
        worker(0, total);
    } else {
        std::vector<std::thread> threads;
        const int chunk = (total + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            const int lo = t * chunk;
            const int hi = std::min(total, lo + chunk);
            if (lo < hi) threads.emplace_back(worker, lo, hi);
        }
        for (auto& th : threads) th.join();
    }
    int failures = 0;
    for (int idx = 0; idx < total; ++idx) {
        if (!results[idx]) continue;
        ++failures;
        if (failures <= 8)
            cert.add_clause(p_name(Params{idx / (n * n), (idx / n) % n, idx % n}),
                            false, *results[idx]);
    }
    cert.add_clause(summary_name, failures == 0,
                    json{{"checked", total}, {"failed", failures}});
    return failures;
}

struct Ctx {
    const Loop& L;
    OsbornOptions opts;

    Loop iso(IsotopeTag tag, Params p) const {
        return build_isotope(L, tag, p, opts.phi1);
    }
    Perm map(GammaWhich which, Params p) const {
        return eval_word(L, gamma_word(L, which, p, opts.gamma1, opts.phi1));
    }
    bool identity_iso(IsotopeTag a, IsotopeTag b, Params p) const {
        return is_isomorphism(identity_perm(L.n), iso(a, p), iso(b, p));
    }
    bool found_iso(IsotopeTag a, IsotopeTag b, Params p) const {
        return find_isomorphism(iso(a, p), iso(b, p)).has_value();
    }

    // Equation chain of the circle-pair criterion with beta = gamma = R_c:
    // uv = [u*(w/c)]/v * w and uv = [((xv)/c)/v] * w, w = u\(xv).
    bool eq11(Params p, int c) const {
        const int w = uxv(L, p);
        const int upper = L.mul(p.u, p.v);
        if (upper != L.mul(L.rdiv(L.mul(p.u, L.rdiv(w, c)), p.v), w)) return false;
        return upper ==
               L.mul(L.rdiv(L.rdiv(L.mul(p.x, p.v), c), p.v), w);
    }
    // Star-pair criterion with delta = pi = L_d:
    // uv = x * (u\((dx)*v)) and uv = x * (u\(d*(xv))).
    bool eq11b(Params p, int d) const {
        const int upper = L.mul(p.u, p.v);
        if (upper != L.mul(p.x, L.ldiv(p.u, L.mul(L.mul(d, p.x), p.v))))
            return false;
        return upper == L.mul(p.x, L.ldiv(p.u, L.mul(d, L.mul(p.x, p.v))));
    }

    bool bracket(Params p, const Perm& lam, const Perm& mu, const Perm& nu) const {
        const int w = uxv(L, p);
        return nu[L.mul(p.x, inverse(mu)[w])] == L.mul(lam[p.x], w);
    }

    bool in_bs2(const Perm& theta) const {
        return bs2_contains(L, theta, opts.bounds.bs2).has_value();
    }
};

Certificate base_certificate(const Loop& L, const std::string& name,
                             const OsbornOptions& opts) {
    Certificate cert;
    cert.check = "theorem." + name;
    cert.loop = L.name;
    cert.params["gamma1"] = gamma1_variant_name(opts.gamma1);
    cert.params["phi1"] = phi1_variant_name(opts.phi1);
    cert.pass = true;
    return cert;
}

// Shape-restricted autotopisms from the pruned enumeration.
std::vector<IsoTriple> shape_auts(const Loop& L, int bound, bool first_identity) {
    const Perm id = identity_perm(L.n);
    std::vector<IsoTriple> out;
    for (const IsoTriple& t : autotopisms(L, bound))
        if ((first_identity ? t.a : t.b) == id) out.push_back(t);
    return out;
}

bool commutes_with_all(const Loop& L, const Perm& q, Side side) {
    for (int a = 0; a < L.n; ++a) {
        const Perm t = translation(L, side, a);
        if (compose(q, t) != compose(t, q)) return false;
    }
    return true;
}

Certificate check_2post1_10(const Ctx& ctx) {
    Certificate cert = base_certificate(ctx.L, "2post1.10", ctx.opts);
    require_universal_osborn(ctx.L, ctx.opts);
    const Loop& L = ctx.L;
    const int n = L.n;
    bool iso_o = true, iso_s = true;
    std::optional<Params> first_o, first_s, pointwise_violation;
    for (int x = 0; x < n && !pointwise_violation; ++x)
        for (int u = 0; u < n && !pointwise_violation; ++u)
            for (int v = 0; v < n && !pointwise_violation; ++v) {
                const Params p{x, u, v};
                const bool po = ctx.identity_iso(IsotopeTag::o0, IsotopeTag::o1, p);
                const bool ps = ctx.identity_iso(IsotopeTag::s0, IsotopeTag::s1, p);
                if (!po && !first_o) first_o = p;
                if (!ps && !first_s) first_s = p;
                iso_o = iso_o && po;
                iso_s = iso_s && ps;
                // Proof fact: each identity-map isomorphism is equivalent to
                // x\(uv) = u\(xv) at that p.
                const bool cond =
                    L.ldiv(x, L.mul(u, v)) == L.ldiv(u, L.mul(x, v));
                if (po != cond || ps != cond) pointwise_violation = p;
            }
    const bool boolean = classify(L).boolean_group;
    const auto p_witness = [](const std::optional<Params>& p) -> json {
        if (!p) return nullptr;
        return json{{"x", p->x}, {"u", p->u}, {"v", p->v}};
    };
    cert.add_clause("identity-iso(o0,o1)", iso_o, p_witness(first_o));
    cert.add_clause("identity-iso(s0,s1)", iso_s, p_witness(first_s));
    cert.add_clause("boolean-group", boolean);
    const bool agree = iso_o == iso_s && iso_s == boolean;
    cert.pass = agree && !pointwise_violation;
    if (!agree)
        cert.add_clause("agreement", false,
                        json{{"identity-iso(o0,o1)", iso_o},
                             {"identity-iso(s0,s1)", iso_s},
                             {"boolean-group", boolean}});
    if (pointwise_violation)
        cert.add_clause("pointwise " + p_name(*pointwise_violation), false);
    return cert;
}

Certificate check_2post1_11(const Ctx& ctx, bool star) {
    Certificate cert =
        base_certificate(ctx.L, star ? "2post1.11b" : "2post1.11", ctx.opts);
    require_universal_osborn(ctx.L, ctx.opts);
    const Loop& L = ctx.L;
    const std::vector<int> nuc =
        nucleus(L, star ? NucleusKind::left : NucleusKind::right);
    const auto check = [&](Params p) -> std::optional<json> {
        const Loop from = ctx.iso(star ? IsotopeTag::s0 : IsotopeTag::o0, p);
        const Loop to = ctx.iso(star ? IsotopeTag::s1 : IsotopeTag::o1, p);
        const auto theta = find_isomorphism(from, to);
        bool rhs = false;
        for (int c : nuc)
            if (star ? ctx.eq11b(p, c) : ctx.eq11(p, c)) {
                rhs = true;
                break;
            }
        if (theta.has_value() != rhs)
            return json{{"isomorphism", theta.has_value()}, {"criterion", rhs}};
        if (theta) {
            // The isomorphism-to-autotopism construction must land in AUT.
            const IsoTriple t =
                star ? drisko_from_isomorphism(
                           L, p.x, p.v, phi(L, 1, p, ctx.opts.phi1), p.v, *theta)
                     : drisko_from_isomorphism(L, p.u, phi(L, 0, p), p.u,
                                               uxv(L, p), *theta);
            if (!is_autotopism(L, t)) return json{{"bridge", false}};
        }
        return std::nullopt;
    };
    cert.pass = scan_all_p(cert, L, ctx.opts.jobs, check) == 0;
    return cert;
}

Certificate check_2post1_12(const Ctx& ctx, bool star) {
    Certificate cert =
        base_certificate(ctx.L, star ? "2post1.13" : "2post1.12", ctx.opts);
    require_universal_osborn(ctx.L, ctx.opts);
    const Loop& L = ctx.L;
    const int n = L.n;

    bool premise = true;
    for (int x = 0; x < n && premise; ++x)
        for (int u = 0; u < n && premise; ++u)
            for (int v = 0; v < n && premise; ++v)
                premise = ctx.found_iso(star ? IsotopeTag::s0 : IsotopeTag::o0,
                                        star ? IsotopeTag::s1 : IsotopeTag::o1,
                                        Params{x, u, v});
    cert.add_clause("premise", premise);
    if (!premise) return cert;

    const Side conj_side = star ? Side::right : Side::left;
    const auto conjugate = [&](const Perm& q, int a) {
        const Perm t = translation(L, conj_side, a);
        return compose(compose(inverse(t), q), t);
    };
    const std::vector<IsoTriple> auts =
        shape_auts(L, ctx.opts.bounds.autotopisms, !star);

    // Existence: some shape autotopism whose outer component is the inner
    // one conjugated by every translation of the stated side.
    bool exists = false;
    for (const IsoTriple& t : auts) {
        const Perm& inner = star ? t.a : t.b;
        const Perm& outer = t.c;
        bool all = true;
        for (int a = 0; a < n && all; ++a) all = outer == conjugate(inner, a);
        if (all) {
            exists = true;
            break;
        }
    }
    cert.add_clause("exists-conjugation-linked", exists);
    if (!exists) cert.pass = false;

    bool item1 = true;
    json item1_witness;
    for (const IsoTriple& t : auts) {
        const Perm& inner = star ? t.a : t.b;
        const Perm& outer = t.c;
        const bool equal = inner == outer;
        const bool inner_central = commutes_with_all(L, inner, conj_side);
        const bool outer_central = commutes_with_all(L, outer, conj_side);
        if (equal != (inner_central || outer_central)) {
            item1 = false;
            item1_witness = json{{"inner", perm_to_string(inner)},
                                 {"outer", perm_to_string(outer)}};
            break;
        }
        // Regularity consequence: a commuting inner component pairs with
        // itself in a valid autotopism.
        if (inner_central) {
            const Perm id = identity_perm(n);
            const IsoTriple reg = star ? IsoTriple{inner, id, inner}
                                       : IsoTriple{id, inner, inner};
            if (!is_autotopism(L, reg)) {
                item1 = false;
                item1_witness = json{{"regularity", perm_to_string(inner)}};
                break;
            }
        }
    }
    cert.add_clause("item1", item1, item1_witness);
    if (!item1) cert.pass = false;

    bool item2 = true;
    json item2_witness;
    for (const IsoTriple& t : auts) {
        const Perm& inner = star ? t.a : t.b;
        const Perm& outer = t.c;
        for (int a = 0; a < n; ++a) {
            const Perm tr = translation(L, conj_side, a);
            if ((outer == tr) != (inner == tr)) {
                item2 = false;
                item2_witness = json{{"translation", a}};
                break;
            }
        }
        if (!item2) break;
    }
    cert.add_clause("item2", item2, item2_witness);
    if (!item2) cert.pass = false;
    return cert;
}

Certificate check_2post1_14(const Ctx& ctx) {
    Certificate cert = base_certificate(ctx.L, "2post1.14", ctx.opts);
    require_universal_osborn(ctx.L, ctx.opts);
    const Loop& L = ctx.L;
    const std::vector<int> nrho = nucleus(L, NucleusKind::right);
    const std::vector<int> nlam = nucleus(L, NucleusKind::left);
    const auto check = [&](Params p) -> std::optional<json> {
        const bool lhs = ctx.found_iso(IsotopeTag::o0, IsotopeTag::o1, p) &&
                         ctx.found_iso(IsotopeTag::s0, IsotopeTag::s1, p);
        bool rhs_o = false, rhs_s = false;
        for (int c : nrho)
            if (ctx.eq11(p, c)) {
                rhs_o = true;
                break;
            }
        for (int d : nlam)
            if (ctx.eq11b(p, d)) {
                rhs_s = true;
                break;
            }
        if (lhs != (rhs_o && rhs_s))
            return json{{"isomorphisms", lhs},
                        {"criterion-o", rhs_o},
                        {"criterion-s", rhs_s}};
        return std::nullopt;
    };
    cert.pass = scan_all_p(cert, L, ctx.opts.jobs, check) == 0;
    return cert;
}

Certificate check_2post1_15(const Ctx& ctx) {
    Certificate cert = base_certificate(ctx.L, "2post1.15", ctx.opts);
    require_universal_osborn(ctx.L, ctx.opts);
    const auto check = [&](Params p) -> std::optional<json> {
        const Perm g01o = ctx.map(GammaWhich::g01o, p);
        const Perm g01s = ctx.map(GammaWhich::g01s, p);
        if (!is_isomorphism(g01o, ctx.iso(IsotopeTag::o0, p),
                            ctx.iso(IsotopeTag::o1, p)))
            return std::nullopt;
        if (!is_isomorphism(g01s, ctx.iso(IsotopeTag::s0, p),
                            ctx.iso(IsotopeTag::s1, p)))
            return std::nullopt;
        const Perm path = compose(compose(ctx.map(GammaWhich::g0, p), g01s),
                                  ctx.map(GammaWhich::g1, p));
        if (path != g01o)
            return json{{"path", perm_to_string(path)},
                        {"g01o", perm_to_string(g01o)}};
        return std::nullopt;
    };
    cert.pass = scan_all_p(cert, ctx.L, ctx.opts.jobs, check) == 0;
    return cert;
}

Certificate check_2post1_16(const Ctx& ctx) {
    Certificate cert = base_certificate(ctx.L, "2post1.16", ctx.opts);
    require_universal_osborn(ctx.L, ctx.opts);
    const Loop& L = ctx.L;
    const int n = L.n;
    for (int x = 0; x < n; ++x)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                const Params p{x, u, v};
                if (!ctx.found_iso(IsotopeTag::o0, IsotopeTag::o1, p) ||
                    !ctx.found_iso(IsotopeTag::s0, IsotopeTag::s1, p))
                    throw HypothesisFailedError(
                        "statement assumes both unlabeled isomorphisms exist "
                        "at every parameter; missing at " + p_name(p));
            }

    const std::vector<int> nrho = nucleus(L, NucleusKind::right);
    const std::vector<int> nlam = nucleus(L, NucleusKind::left);
    const Perm id = identity_perm(n);
    const auto all_p = [&](const std::function<bool(Params)>& f) {
        for (int x = 0; x < n; ++x)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (!f(Params{x, u, v})) return false;
        return true;
    };
    const auto exists_trivial_o = [&](Params p) {
        for (int c : nrho)
            if (ctx.eq11(p, c) && L.right_translation(c) == id) return true;
        return false;
    };
    const auto exists_trivial_s = [&](Params p) {
        for (int d : nlam)
            if (ctx.eq11b(p, d) && L.left_translation(d) == id) return true;
        return false;
    };
    const bool clauses[7] = {
        all_p(exists_trivial_o),
        all_p(exists_trivial_o),
        all_p(exists_trivial_s),
        all_p(exists_trivial_s),
        all_p([&](Params p) {
            return ctx.identity_iso(IsotopeTag::o0, IsotopeTag::o1, p);
        }),
        all_p([&](Params p) {
            return ctx.identity_iso(IsotopeTag::s0, IsotopeTag::s1, p);
        }),
        classify(L).boolean_group,
    };
    const char* names[7] = {"beta=I",  "gamma=I",
                            "delta=I", "pi=I",
                            "identity-iso(o0,o1)", "identity-iso(s0,s1)",
                            "boolean-group"};
    bool agree = true;
    for (int i = 0; i < 7; ++i) {
        cert.add_clause(names[i], clauses[i]);
        agree = agree && clauses[i] == clauses[0];
    }
    cert.pass = agree;
    if (!agree) cert.add_clause("agreement", false);
    return cert;
}

Certificate check_2post1_17(const Ctx& ctx, bool star) {
    Certificate cert =
        base_certificate(ctx.L, star ? "2post1.17b" : "2post1.17", ctx.opts);
    require_universal_osborn(ctx.L, ctx.opts);
    const auto check = [&](Params p) -> std::optional<json> {
        const bool iso =
            star ? is_isomorphism(ctx.map(GammaWhich::g01s, p),
                                  ctx.iso(IsotopeTag::s0, p),
                                  ctx.iso(IsotopeTag::s1, p))
                 : is_isomorphism(ctx.map(GammaWhich::g01o, p),
                                  ctx.iso(IsotopeTag::o0, p),
                                  ctx.iso(IsotopeTag::o1, p));
        const bool cond = star ? eq12b_holds(ctx.L, p, ctx.opts.phi1)
                               : eq12_holds(ctx.L, p);
        if (iso != cond)
            return json{{"isomorphism", iso}, {"condition", cond}};
        return std::nullopt;
    };
    cert.pass = scan_all_p(cert, ctx.L, ctx.opts.jobs, check) == 0;
    return cert;
}

Certificate check_2post1_17c(const Ctx& ctx) {
    Certificate cert = base_certificate(ctx.L, "2post1.17c", ctx.opts);
    const Loop& L = ctx.L;
    const int n = L.n;
    const bool uo = is_universal_osborn(L, ctx.opts.bounds.universal_osborn).pass;
    const auto all_p = [&](const std::function<bool(Params)>& f) {
        for (int x = 0; x < n; ++x)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (!f(Params{x, u, v})) return false;
        return true;
    };
    const bool eq12_all = all_p([&](Params p) { return eq12_holds(L, p); });
    const bool g0_bs2 =
        all_p([&](Params p) { return ctx.in_bs2(ctx.map(GammaWhich::g0, p)); });
    const bool g01o_bs2 =
        all_p([&](Params p) { return ctx.in_bs2(ctx.map(GammaWhich::g01o, p)); });
    const bool item1 = (uo && eq12_all) == (g0_bs2 && g01o_bs2);

    const bool eq12b_all =
        all_p([&](Params p) { return eq12b_holds(L, p, ctx.opts.phi1); });
    const bool g1_bs2 =
        all_p([&](Params p) { return ctx.in_bs2(ctx.map(GammaWhich::g1, p)); });
    const bool g01s_bs2 =
        all_p([&](Params p) { return ctx.in_bs2(ctx.map(GammaWhich::g01s, p)); });
    const bool item2 = (uo && eq12b_all) == (g1_bs2 && g01s_bs2);

    cert.add_clause("universal-osborn", uo);
    cert.add_clause("eq12-all-p", eq12_all);
    cert.add_clause("g0-in-bs2", g0_bs2);
    cert.add_clause("g01o-in-bs2", g01o_bs2);
    cert.add_clause("item1", item1);
    cert.add_clause("eq12b-all-p", eq12b_all);
    cert.add_clause("g1-in-bs2", g1_bs2);
    cert.add_clause("g01s-in-bs2", g01s_bs2);
    cert.add_clause("item2", item2);
    cert.pass = item1 && item2;
    return cert;
}

Certificate check_2post1_18(const Ctx& ctx) {
    Certificate cert = base_certificate(ctx.L, "2post1.18", ctx.opts);
    require_universal_osborn(ctx.L, ctx.opts);
    const Loop& L = ctx.L;
    const auto check = [&](Params p) -> std::optional<json> {
        const bool lhs = ctx.found_iso(IsotopeTag::o2, IsotopeTag::o3, p);
        const Perm lam = ctx.map(GammaWhich::lam13, p);
        const Perm mu = ctx.map(GammaWhich::mu13, p);
        // nu is forced by (lam, mu): nu = lam R_c with c = e mu.
        const Perm nu = compose(lam, L.right_translation(mu[L.e]));
        const bool rhs = is_autotopism(L, IsoTriple{lam, mu, nu}) &&
                         ctx.bracket(p, lam, mu, nu);
        if (lhs != rhs)
            return json{{"isomorphism", lhs}, {"criterion", rhs}};
        return std::nullopt;
    };
    cert.pass = scan_all_p(cert, L, ctx.opts.jobs, check) == 0;
    return cert;
}

Certificate check_2post1_19(const Ctx& ctx) {
    Certificate cert = base_certificate(ctx.L, "2post1.19", ctx.opts);
    require_universal_osborn(ctx.L, ctx.opts);
    const Loop& L = ctx.L;
    const auto check = [&](Params p) -> std::optional<json> {
        const auto forms = gamma23_forms(L, p);
        if (forms.first != forms.second) return std::nullopt;
        const Perm& g23o = forms.first;
        const bool lhs = is_isomorphism(g23o, ctx.iso(IsotopeTag::o2, p),
                                        ctx.iso(IsotopeTag::o3, p));
        const Perm lam =
            compose(compose(L.right_translation(phi(L, 2, p)), g23o),
                    L.right_translation_inv(uxv(L, p)));
        const Perm mu = compose(compose(L.left_translation(p.x), g23o),
                                L.left_translation_inv(c3_param(L, p)));
        const bool rhs = is_autotopism(L, IsoTriple{lam, mu, g23o}) &&
                         ctx.bracket(p, lam, mu, g23o);
        if (lhs != rhs)
            return json{{"isomorphism", lhs}, {"criterion", rhs}};
        return std::nullopt;
    };
    cert.pass = scan_all_p(cert, L, ctx.opts.jobs, check) == 0;
    return cert;
}

Certificate check_2post1_20(const Ctx& ctx) {
    Certificate cert = base_certificate(ctx.L, "2post1.20", ctx.opts);
    require_universal_osborn(ctx.L, ctx.opts);
    const Loop& L = ctx.L;
    const auto check = [&](Params p) -> std::optional<json> {
        const auto forms = gamma23_forms(L, p);
        if (forms.first != forms.second) return std::nullopt;
        const Perm& g23o = forms.first;
        const bool lhs = ctx.in_bs2(g23o);
        bool rhs = false;
        for (const auto& [lam, mu] : autotopisms_with_third(L, g23o))
            if (ctx.bracket(p, lam, mu, g23o)) {
                rhs = true;
                break;
            }
        if (lhs != rhs)
            return json{{"membership", lhs}, {"criterion", rhs}};
        return std::nullopt;
    };
    cert.pass = scan_all_p(cert, L, ctx.opts.jobs, check) == 0;
    return cert;
}

Certificate check_2post1_21(const Ctx& ctx) {
    Certificate cert = base_certificate(ctx.L, "2post1.21", ctx.opts);
    const Loop& L = ctx.L;
    const bool uo = is_universal_osborn(L, ctx.opts.bounds.universal_osborn).pass;
    cert.add_clause("universal-osborn", uo);
    if (!uo) {
        // The implication's premise fails everywhere, so it holds vacuously.
        cert.add_clause("all-p", true, json{{"checked", 0}, {"failed", 0}});
        return cert;
    }
    const auto check = [&](Params p) -> std::optional<json> {
        const auto forms = gamma23_forms(L, p);
        if (forms.first != forms.second) return std::nullopt;
        const Perm& g23o = forms.first;
        if (!ctx.in_bs2(g23o)) return std::nullopt;
        if (!ctx.in_bs2(ctx.map(GammaWhich::g0, p)))
            return json{{"g0-in-bs2", false}};
        for (const auto& [lam, mu] : autotopisms_with_third(L, g23o))
            if (ctx.bracket(p, lam, mu, g23o)) return std::nullopt;
        return json{{"criterion", false}};
    };
    cert.pass = scan_all_p(cert, L, ctx.opts.jobs, check) == 0;
    return cert;
}

Certificate check_remark_commutator(const Ctx& ctx) {
    Certificate cert = base_certificate(ctx.L, "remark.commutator", ctx.opts);
    require_universal_osborn(ctx.L, ctx.opts);
    const Loop& L = ctx.L;
    const auto check = [&](Params p) -> std::optional<json> {
        const Perm a = compose(L.left_translation_inv(p.u),
                               L.left_translation(p.x));
        const Perm b = compose(L.right_translation_inv(p.v),
                               L.right_translation(uxv(L, p)));
        const Perm g0 = compose(b, a);
        const Perm g1 =
            ctx.opts.gamma1 == Gamma1Variant::swapped ? compose(a, b) : g0;
        const Perm commutator =
            compose(compose(compose(inverse(a), inverse(b)), a), b);
        const bool words_equal = g0 == g1;
        const bool commute = commutator == identity_perm(L.n);
        if (words_equal != commute)
            return json{{"words-equal", words_equal}, {"commutator-trivial", commute}};
        return std::nullopt;
    };
    cert.pass = scan_all_p(cert, L, ctx.opts.jobs, check) == 0;
    return cert;
}

}  // namespace

const std::vector<std::string>& theorem_names() {
    static const std::vector<std::string> names = {
        "2post1.10", "2post1.11", "2post1.11b", "2post1.12",
        "2post1.13", "2post1.14", "2post1.15",  "2post1.16",
        "2post1.17", "2post1.17b", "2post1.17c", "2post1.18",
        "2post1.19", "2post1.20", "2post1.21",  "remark.commutator"};
    return names;
}

Certificate check_theorem(const Loop& loop, const std::string& name,
                          const OsbornOptions& opts) {
    const Ctx ctx{loop, opts};
    if (name == "2post1.10") return check_2post1_10(ctx);
    if (name == "2post1.11") return check_2post1_11(ctx, false);
    if (name == "2post1.11b") return check_2post1_11(ctx, true);
    if (name == "2post1.12") return check_2post1_12(ctx, false);
    if (name == "2post1.13") return check_2post1_12(ctx, true);
    if (name == "2post1.14") return check_2post1_14(ctx);
    if (name == "2post1.15") return check_2post1_15(ctx);
    if (name == "2post1.16") return check_2post1_16(ctx);
    if (name == "2post1.17") return check_2post1_17(ctx, false);
    if (name == "2post1.17b") return check_2post1_17(ctx, true);
    if (name == "2post1.17c") return check_2post1_17c(ctx);
    if (name == "2post1.18") return check_2post1_18(ctx);
    if (name == "2post1.19") return check_2post1_19(ctx);
    if (name == "2post1.20") return check_2post1_20(ctx);
    if (name == "2post1.21") return check_2post1_21(ctx);
    if (name == "remark.commutator") return check_remark_commutator(ctx);
    throw MalformedError("unknown statement name '" + name + "'");
}

}  // namespace loopwork
