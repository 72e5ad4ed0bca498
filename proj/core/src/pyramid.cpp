#include "loopwork/pyramid.hpp"

#include <array>

#include "loopwork/errors.hpp"

namespace loopwork {

namespace {

WordLetter R(int a) { return {Side::right, a, 1}; }
WordLetter Rinv(int a) { return {Side::right, a, -1}; }
WordLetter L(int a) { return {Side::left, a, 1}; }
WordLetter Linv(int a) { return {Side::left, a, -1}; }

int uxv(const Loop& q, Params p) { return q.ldiv(p.u, q.mul(p.x, p.v)); }

}  // namespace

int word_length(const Word& word) { return static_cast<int>(word.size()); }

Perm eval_word(const Loop& loop, const Word& word) {
    Perm result = identity_perm(loop.n);
    for (const WordLetter& letter : word) {
        Perm t;
        if (letter.side == Side::right)
            t = letter.exp > 0 ? loop.right_translation(letter.elem)
                               : loop.right_translation_inv(letter.elem);
        else
            t = letter.exp > 0 ? loop.left_translation(letter.elem)
                               : loop.left_translation_inv(letter.elem);
        result = compose(result, t);
    }
    return result;
}

std::string word_to_string(const Word& word) {
    if (word.empty()) return "I";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += word[i].side == Side::right ? 'R' : 'L';
        out += '_' + std::to_string(word[i].elem);
        if (word[i].exp < 0) out += "^-1";
    }
    return out;
}

Word gamma_word(const Loop& loop, GammaWhich which, Params p, Gamma1Variant g1,
                Phi1Variant f1) {
    const int w = uxv(loop, p);
    const int uv = loop.ldiv(p.u, p.v);
    switch (which) {
        case GammaWhich::g0:
            return {Rinv(p.v), R(w), Linv(p.u), L(p.x)};
        case GammaWhich::g1:
            if (g1 == Gamma1Variant::printed)
                return gamma_word(loop, GammaWhich::g0, p);
            return {Linv(p.u), L(p.x), Rinv(p.v), R(w)};
        case GammaWhich::g01o:
        case GammaWhich::psi0:
            return {Rinv(phi(loop, 0, p)), R(w)};
        case GammaWhich::g01s:
        case GammaWhich::psi1:
            return {Linv(p.x), L(phi(loop, 1, p, f1))};
        case GammaWhich::g23o:
            return {Rinv(phi(loop, 2, p)), R(uv), Rinv(p.v), R(w)};
        case GammaWhich::g23s:
            return {R(uv)};
        case GammaWhich::lam13:
            return {R(uv), Rinv(p.v)};
        case GammaWhich::mu13:
            return {L(p.u), Linv(uv)};
    }
    return {};
}

PyramidGraph build_pyramid(const Loop& loop, Params p, const OsbornOptions& opts) {
    const auto uo = is_universal_osborn(loop, opts.bounds.universal_osborn);
    if (!uo.pass)
        throw HypothesisFailedError(
            "pyramid is defined for universal Osborn loops; isotope Q_{" +
            std::to_string(uo.witness[0]) + "," + std::to_string(uo.witness[1]) +
            "} fails the defining identity");

    PyramidGraph g;
    g.loop_name = loop.name;
    g.p = p;
    g.vertices = {"dot", "o0", "o1", "s0", "s1"};

    const Loop o0 = build_isotope(loop, IsotopeTag::o0, p, opts.phi1);
    const Loop o1 = build_isotope(loop, IsotopeTag::o1, p, opts.phi1);
    const Loop s0 = build_isotope(loop, IsotopeTag::s0, p, opts.phi1);
    const Loop s1 = build_isotope(loop, IsotopeTag::s1, p, opts.phi1);

    const Perm id = identity_perm(loop.n);
    struct ApexSpec {
        const char* to;
        int right_elem;
        int left_elem;
        const Loop* target;
    };
    const std::array<ApexSpec, 4> apex = {{
        {"o0", phi(loop, 0, p), p.u, &o0},
        {"s0", p.v, p.x, &s0},
        {"o1", uxv(loop, p), p.u, &o1},
        {"s1", p.v, phi(loop, 1, p, opts.phi1), &s1},
    }};
    for (const ApexSpec& a : apex) {
        const IsoTriple t{loop.right_translation(a.right_elem),
                          loop.left_translation(a.left_elem), id};
        PyramidEdge e;
        e.from = "dot";
        e.to = a.to;
        e.label = "triple";
        e.length = 1 + 1 + 0;
        e.verified = is_isotopism(t, loop, *a.target);
        g.edges.push_back(std::move(e));
    }

    struct BaseSpec {
        const char* from;
        const char* to;
        GammaWhich which;
        const char* label;
        const Loop* src;
        const Loop* dst;
    };
    const std::array<BaseSpec, 4> base = {{
        {"o0", "o1", GammaWhich::g01o, "g01o", &o0, &o1},
        {"o0", "s0", GammaWhich::g0, "g0", &o0, &s0},
        {"s0", "s1", GammaWhich::g01s, "g01s", &s0, &s1},
        {"s1", "o1", GammaWhich::g1, "g1", &s1, &o1},
    }};
    for (const BaseSpec& b : base) {
        const Word word = gamma_word(loop, b.which, p, opts.gamma1, opts.phi1);
        PyramidEdge e;
        e.from = b.from;
        e.to = b.to;
        e.label = b.label;
        // An isomorphism acts as the triple (theta,theta,theta); its length
        // is the component sum.
        e.length = 3 * word_length(word);
        e.verified = is_isomorphism(eval_word(loop, word), *b.src, *b.dst);
        g.edges.push_back(std::move(e));
    }
    return g;
}

namespace {

const PyramidEdge* find_edge(const PyramidGraph& g, const std::string& label) {
    for (const PyramidEdge& e : g.edges)
        if (e.label == label) return &e;
    return nullptr;
}

}  // namespace

Certificate verify_rectangle(const PyramidGraph& g) {
    Certificate cert;
    cert.check = "pyramid.rectangle";
    cert.loop = g.loop_name;
    cert.params["x"] = g.p.x;
    cert.params["u"] = g.p.u;
    cert.params["v"] = g.p.v;
    cert.pass = true;

    std::vector<int> apex_lengths;
    for (const PyramidEdge& e : g.edges)
        if (e.from == "dot") apex_lengths.push_back(e.length);
    bool apex_ok = apex_lengths.size() == 4;
    for (int len : apex_lengths) apex_ok = apex_ok && len == apex_lengths[0];
    cert.add_clause("apex-equal", apex_ok,
                    apex_ok ? json(nullptr) : json(apex_lengths));
    if (!apex_ok) cert.pass = false;

    const auto opposite = [&](const char* a, const char* b) {
        const PyramidEdge* ea = find_edge(g, a);
        const PyramidEdge* eb = find_edge(g, b);
        const bool ok = ea && eb && ea->length == eb->length;
        json witness = nullptr;
        if (!ok && ea && eb)
            witness = json{{a, ea->length}, {b, eb->length}};
        cert.add_clause(std::string("opposite(") + a + "," + b + ")", ok, witness);
        if (!ok) cert.pass = false;
    };
    opposite("g01o", "g01s");
    opposite("g0", "g1");
    return cert;
}

std::string export_graph(const PyramidGraph& g, const std::string& format) {
    if (format == "json") {
        json out;
        out["loop"] = g.loop_name;
        out["params"] = json{{"x", g.p.x}, {"u", g.p.u}, {"v", g.p.v}};
        out["vertices"] = g.vertices;
        out["edges"] = json::array();
        for (const PyramidEdge& e : g.edges)
            out["edges"].push_back(json{{"from", e.from},
                                        {"to", e.to},
                                        {"label", e.label},
                                        {"length", e.length},
                                        {"verified", e.verified}});
        return out.dump(2) + "\n";
    }
    if (format == "dot") {
        std::string out = "digraph pyramid {\n";
        out += "  label=\"" + g.loop_name + " at (" + std::to_string(g.p.x) +
               "," + std::to_string(g.p.u) + "," + std::to_string(g.p.v) +
               ")\";\n";
        for (const std::string& v : g.vertices) out += "  \"" + v + "\";\n";
        for (const PyramidEdge& e : g.edges) {
            out += "  \"" + e.from + "\" -> \"" + e.to + "\" [label=\"" +
                   e.label + " (" + std::to_string(e.length) + ")\"";
            if (!e.verified) out += ", color=red";
            out += "];\n";
        }
        out += "}\n";
        return out;
    }
    if (format == "text") {
        std::string out = "pyramid of " + g.loop_name + " at (" +
                          std::to_string(g.p.x) + "," + std::to_string(g.p.u) +
                          "," + std::to_string(g.p.v) + ")\n";
        for (const PyramidEdge& e : g.edges) {
            out += "  " + e.from + " -> " + e.to + "  " + e.label + "  length " +
                   std::to_string(e.length) +
                   (e.verified ? "  verified" : "  UNVERIFIED") + "\n";
        }
        return out;
    }
    throw MalformedError("unknown export format '" + format +
                         "' (expected json, dot or text)");
}

PyramidGraph parse_pyramid_json(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::parse_error& err) {
        throw MalformedError(std::string("bad pyramid JSON: ") + err.what());
    }
    try {
        PyramidGraph g;
        g.loop_name = in.at("loop").get<std::string>();
        g.p.x = in.at("params").at("x").get<int>();
        g.p.u = in.at("params").at("u").get<int>();
        g.p.v = in.at("params").at("v").get<int>();
        g.vertices = in.at("vertices").get<std::vector<std::string>>();
        for (const json& e : in.at("edges")) {
            PyramidEdge edge;
            edge.from = e.at("from").get<std::string>();
            edge.to = e.at("to").get<std::string>();
            edge.label = e.at("label").get<std::string>();
            edge.length = e.at("length").get<int>();
            edge.verified = e.at("verified").get<bool>();
            g.edges.push_back(std::move(edge));
        }
        return g;
    } catch (const json::exception& err) {
        throw MalformedError(std::string("bad pyramid JSON: ") + err.what());
    }
}

Params default_pyramid_params(const Loop& loop, const OsbornOptions& opts) {
    const int n = loop.n;
    for (int x = 0; x < n; ++x)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                const Params p{x, u, v};
                const Loop o0 = build_isotope(loop, IsotopeTag::o0, p, opts.phi1);
                const Loop o1 = build_isotope(loop, IsotopeTag::o1, p, opts.phi1);
                const Loop s0 = build_isotope(loop, IsotopeTag::s0, p, opts.phi1);
                const Loop s1 = build_isotope(loop, IsotopeTag::s1, p, opts.phi1);
                const auto verifies = [&](GammaWhich which, const Loop& src,
                                          const Loop& dst) {
                    return is_isomorphism(
                        eval_word(loop,
                                  gamma_word(loop, which, p, opts.gamma1,
                                             opts.phi1)),
                        src, dst);
                };
                if (verifies(GammaWhich::g01o, o0, o1) &&
                    verifies(GammaWhich::g0, o0, s0) &&
                    verifies(GammaWhich::g01s, s0, s1) &&
                    verifies(GammaWhich::g1, s1, o1))
                    return p;
            }
    return Params{0, 0, 0};
}

}  // namespace loopwork
