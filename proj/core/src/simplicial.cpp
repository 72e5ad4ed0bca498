#include "loopwork/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <thread>

#include "loopwork/errors.hpp"
#include "loopwork/isotopy.hpp"

namespace loopwork {

namespace {

std::string simplex_label(const Simplex& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) out += ",";
        out += *it;
    }
    return out + "}";
}

void push_simplex(SimplicialComplex& K, Simplex s) {
    if (!K.contains(s)) K.simplexes.push_back(std::move(s));
}

void merge_into(SimplicialComplex& K, const SimplicialComplex& other) {
    for (const std::string& v : other.vertices)
        if (std::find(K.vertices.begin(), K.vertices.end(), v) ==
            K.vertices.end())
            K.vertices.push_back(v);
    for (const Simplex& s : other.simplexes) push_simplex(K, s);
}

SimplicialComplex build_pair_complex(int i) {
    const std::string o = "o" + std::to_string(i);
    const std::string s = "s" + std::to_string(i);
    SimplicialComplex K;
    K.vertices = {"dot", o, s};
    K.simplexes = {{"dot"}, {o}, {s}, {o, s}};
    return K;
}

Loop resolve_vertex(const Loop& base, const std::string& label, Params p,
                    Phi1Variant phi1) {
    return build_isotope(base, parse_isotope_tag(label), p, phi1);
}

std::string p_name(Params p) {
    return "p(" + std::to_string(p.x) + "," + std::to_string(p.u) + "," +
           std::to_string(p.v) + ")";
}

// Vertices that must be mutually isomorphic, grouped by co-membership in
// some simplex. Isomorphism is an equivalence, so each group reduces to
// comparisons against its first member.
std::vector<std::vector<std::string>> isomorphism_groups(
    const SimplicialComplex& K) {
    std::vector<int> parent(K.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    const std::function<int(int)> root = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    const auto index_of = [&](const std::string& v) {
        return static_cast<int>(std::find(K.vertices.begin(), K.vertices.end(),
                                          v) -
                                K.vertices.begin());
    };
    for (const Simplex& s : K.simplexes) {
        if (s.size() < 2) continue;
        const int first = index_of(*s.begin());
        for (const std::string& v : s) parent[root(index_of(v))] = root(first);
    }
    std::vector<std::vector<std::string>> groups;
    for (std::size_t i = 0; i < K.vertices.size(); ++i) {
        if (root(static_cast<int>(i)) != static_cast<int>(i)) continue;
        std::vector<std::string> group;
        for (std::size_t j = 0; j < K.vertices.size(); ++j)
            if (root(static_cast<int>(j)) == static_cast<int>(i))
                group.push_back(K.vertices[j]);
        if (group.size() >= 2) groups.push_back(std::move(group));
    }
    return groups;
}

// First non-isomorphic pair at p among the grouped vertices, if any.
std::optional<json> groups_violation(
    const Loop& base, const std::vector<std::vector<std::string>>& groups,
    Params p, Phi1Variant phi1) {
    for (const auto& group : groups) {
        const Loop first = resolve_vertex(base, group[0], p, phi1);
        for (std::size_t k = 1; k < group.size(); ++k) {
            const Loop other = resolve_vertex(base, group[k], p, phi1);
            if (!find_isomorphism(first, other))
                return json{{"from", group[0]}, {"to", group[k]}};
        }
    }
    return std::nullopt;
}

int scan_all_p(Certificate& cert, const Loop& L, int jobs,
               const std::function<std::optional<json>(Params)>& check,
               const char* summary_name) {
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

}  // namespace

int SimplicialComplex::dimension() const {
    int dim = -1;
    for (const Simplex& s : simplexes)
        dim = std::max(dim, static_cast<int>(s.size()) - 1);
    return dim;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return std::find(simplexes.begin(), simplexes.end(), s) != simplexes.end();
}

ComplexWhich parse_complex_which(const std::string& text) {
    std::string t = text;
    if (!t.empty() && (t[0] == 'K' || t[0] == 'k')) t = t.substr(1);
    if (t == "0") return ComplexWhich::K0;
    if (t == "1") return ComplexWhich::K1;
    if (t == "2") return ComplexWhich::K2;
    if (t == "3") return ComplexWhich::K3;
    if (t == "01") return ComplexWhich::K01;
    if (t == "23") return ComplexWhich::K23;
    if (t == "0123") return ComplexWhich::K0123;
    if (t == "10") return ComplexWhich::K10;
    throw MalformedError("unknown complex '" + text +
                         "' (expected K0, K1, K2, K3, K01, K23, K0123 or K10)");
}

std::string complex_name(ComplexWhich which) {
    switch (which) {
        case ComplexWhich::K0: return "K0";
        case ComplexWhich::K1: return "K1";
        case ComplexWhich::K2: return "K2";
        case ComplexWhich::K3: return "K3";
        case ComplexWhich::K01: return "K01";
        case ComplexWhich::K23: return "K23";
        case ComplexWhich::K0123: return "K0123";
        case ComplexWhich::K10: return "K10";
    }
    throw MalformedError("unknown complex");
}

SimplicialComplex build_K(ComplexWhich which) {
    switch (which) {
        case ComplexWhich::K0: return build_pair_complex(0);
        case ComplexWhich::K1: return build_pair_complex(1);
        case ComplexWhich::K2: return build_pair_complex(2);
        case ComplexWhich::K3: return build_pair_complex(3);
        case ComplexWhich::K01: {
            SimplicialComplex K = build_pair_complex(0);
            merge_into(K, build_pair_complex(1));
            return K;
        }
        case ComplexWhich::K23: {
            SimplicialComplex K = build_pair_complex(2);
            merge_into(K, build_pair_complex(3));
            return K;
        }
        case ComplexWhich::K0123: {
            SimplicialComplex K = build_K(ComplexWhich::K01);
            merge_into(K, build_K(ComplexWhich::K23));
            return K;
        }
        case ComplexWhich::K10: {
            SimplicialComplex K;
            K.vertices = {"dot", "o0", "s0", "o1", "s1"};
            for (const std::string& v : K.vertices) K.simplexes.push_back({v});
            const std::vector<std::string> iso = {"o0", "s0", "o1", "s1"};
            for (std::size_t a = 0; a < iso.size(); ++a)
                for (std::size_t b = a + 1; b < iso.size(); ++b)
                    K.simplexes.push_back({iso[a], iso[b]});
            for (std::size_t a = 0; a < iso.size(); ++a) {
                Simplex s(iso.begin(), iso.end());
                s.erase(iso[iso.size() - 1 - a]);
                K.simplexes.push_back(std::move(s));
            }
            K.simplexes.push_back(Simplex(iso.begin(), iso.end()));
            return K;
        }
    }
    throw MalformedError("unknown complex");
}

bool is_complex(const SimplicialComplex& K) {
    for (const std::string& v : K.vertices)
        if (!K.contains({v})) return false;
    for (const Simplex& s : K.simplexes) {
        if (s.empty()) return false;
        for (const std::string& v : s)
            if (std::find(K.vertices.begin(), K.vertices.end(), v) ==
                K.vertices.end())
                return false;
        // Every nonempty proper subset must be present as well.
        const std::vector<std::string> members(s.begin(), s.end());
        const unsigned full = (1u << members.size()) - 1;
        for (unsigned mask = 1; mask < full; ++mask) {
            Simplex sub;
            for (std::size_t i = 0; i < members.size(); ++i)
                if (mask & (1u << i)) sub.insert(members[i]);
            if (!K.contains(sub)) return false;
        }
    }
    return true;
}

Certificate validate_complex(const Loop& loop, ComplexWhich which, Params p,
                             const OsbornOptions& opts) {
    const SimplicialComplex K = build_K(which);
    Certificate cert;
    cert.check = "complex." + complex_name(which);
    cert.loop = loop.name;
    cert.params["x"] = p.x;
    cert.params["u"] = p.u;
    cert.params["v"] = p.v;
    cert.params["phi1"] = phi1_variant_name(opts.phi1);
    cert.params["dimension"] = K.dimension();
    const bool structure = is_complex(K);
    cert.pass = structure;
    cert.add_clause("structure", structure);
    for (const Simplex& s : K.simplexes) {
        if (s.size() < 2) continue;
        const std::vector<std::string> members(s.begin(), s.end());
        const Loop first = resolve_vertex(loop, members[0], p, opts.phi1);
        bool ok = true;
        json witness;
        for (std::size_t k = 1; k < members.size() && ok; ++k) {
            const Loop other = resolve_vertex(loop, members[k], p, opts.phi1);
            if (!find_isomorphism(first, other)) {
                ok = false;
                witness = json{{"from", members[0]}, {"to", members[k]}};
            }
        }
        cert.add_clause(simplex_label(s), ok, witness);
        if (!ok) cert.pass = false;
    }
    return cert;
}

Certificate theorem_K(const Loop& loop, ComplexWhich which,
                      const OsbornOptions& opts) {
    const SimplicialComplex K = build_K(which);
    Certificate cert;
    cert.check = "theorem." + complex_name(which);
    cert.loop = loop.name;
    cert.params["phi1"] = phi1_variant_name(opts.phi1);
    cert.pass = true;

    const bool uo = is_universal_osborn(loop, opts.bounds.universal_osborn).pass;
    const auto groups = isomorphism_groups(K);
    const int failures = scan_all_p(
        cert, loop, opts.jobs,
        [&](Params p) { return groups_violation(loop, groups, p, opts.phi1); },
        "validity-all-p");
    const bool validity = failures == 0;
    cert.add_clause("universal-osborn", uo);

    if (which == ComplexWhich::K0 || which == ComplexWhich::K1 ||
        which == ComplexWhich::K01) {
        cert.add_clause("equivalence", validity == uo,
                        json{{"validity-all-p", validity},
                             {"universal-osborn", uo}});
        cert.pass = validity == uo;
        return cert;
    }
    if (which == ComplexWhich::K10) {
        const int n = loop.n;
        bool eq12_all = true, eq12b_all = true;
        for (int x = 0; x < n && (eq12_all || eq12b_all); ++x)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    const Params p{x, u, v};
                    eq12_all = eq12_all && eq12_holds(loop, p);
                    eq12b_all = eq12b_all && eq12b_holds(loop, p, opts.phi1);
                }
        cert.add_clause("eq12-all-p", eq12_all);
        cert.add_clause("eq12b-all-p", eq12b_all);
        const bool condition = uo && eq12_all && eq12b_all;
        cert.add_clause("equivalence", validity == condition,
                        json{{"validity-all-p", validity},
                             {"condition", condition}});
        cert.pass = validity == condition;
        return cert;
    }
    // Forward statements: the condition forces validity; the converse is
    // reported as data, never enforced.
    cert.add_clause("implication", !uo || validity,
                    json{{"validity-all-p", validity},
                         {"universal-osborn", uo}});
    cert.add_clause("converse", !validity || uo);
    cert.pass = !uo || validity;
    return cert;
}

bool simplicial_map(const SimplicialComplex& K, const SimplicialComplex& K2,
                    const std::map<std::string, std::string>& f) {
    for (const std::string& v : K.vertices) {
        const auto it = f.find(v);
        if (it == f.end())
            throw UnknownVertexError("map undefined on vertex '" + v + "'");
        if (std::find(K2.vertices.begin(), K2.vertices.end(), it->second) ==
            K2.vertices.end())
            throw UnknownVertexError("map image '" + it->second +
                                     "' is not a vertex of the target");
    }
    for (const Simplex& s : K.simplexes) {
        Simplex image;
        for (const std::string& v : s) image.insert(f.at(v));
        if (!K2.contains(image)) return false;
    }
    return true;
}

Certificate simplicial_map_check(const Loop& loop, int i, int j, Params p,
                                 const OsbornOptions& opts) {
    if (i < 0 || i > 3 || j < 0 || j > 3)
        throw MalformedError("complex index out of range (expected 0..3)");
    static const ComplexWhich table[4] = {ComplexWhich::K0, ComplexWhich::K1,
                                          ComplexWhich::K2, ComplexWhich::K3};
    const SimplicialComplex Ki = build_K(table[i]);
    const SimplicialComplex Kj = build_K(table[j]);
    const std::map<std::string, std::string> f = {
        {"dot", "dot"},
        {"o" + std::to_string(i), "o" + std::to_string(j)},
        {"s" + std::to_string(i), "s" + std::to_string(j)}};

    Certificate cert;
    cert.check = "map.f" + std::to_string(i) + std::to_string(j);
    cert.loop = loop.name;
    cert.params["x"] = p.x;
    cert.params["u"] = p.u;
    cert.params["v"] = p.v;
    cert.params["phi1"] = phi1_variant_name(opts.phi1);
    const bool ok = simplicial_map(Ki, Kj, f);
    cert.add_clause("simplicial", ok);
    cert.pass = ok;
    return cert;
}

bool is_topology(const std::vector<std::string>& V,
                 const std::vector<Simplex>& S) {
    const auto member = [&](const Simplex& s) {
        return std::find(S.begin(), S.end(), s) != S.end();
    };
    if (!member(Simplex{})) return false;
    if (!member(Simplex(V.begin(), V.end()))) return false;
    for (const Simplex& a : S)
        for (const Simplex& b : S) {
            Simplex uni = a;
            uni.insert(b.begin(), b.end());
            if (!member(uni)) return false;
            Simplex inter;
            for (const std::string& v : a)
                if (b.count(v)) inter.insert(v);
            if (!member(inter)) return false;
        }
    return true;
}

Certificate topology_check(const SimplicialComplex& K) {
    Certificate cert;
    cert.check = "topology";
    cert.loop = "";
    cert.pass = true;
    const std::vector<Simplex>& S = K.simplexes;
    const auto member = [&](const Simplex& s) {
        return std::find(S.begin(), S.end(), s) != S.end();
    };
    const bool has_empty = member(Simplex{});
    const bool has_space = member(Simplex(K.vertices.begin(), K.vertices.end()));
    bool unions = true, intersections = true;
    json union_witness, inter_witness;
    for (const Simplex& a : S)
        for (const Simplex& b : S) {
            Simplex uni = a;
            uni.insert(b.begin(), b.end());
            if (unions && !member(uni)) {
                unions = false;
                union_witness = json{{"a", simplex_label(a)},
                                     {"b", simplex_label(b)}};
            }
            Simplex inter;
            for (const std::string& v : a)
                if (b.count(v)) inter.insert(v);
            if (intersections && !member(inter)) {
                intersections = false;
                inter_witness = json{{"a", simplex_label(a)},
                                     {"b", simplex_label(b)}};
            }
        }
    cert.add_clause("contains-empty", has_empty);
    cert.add_clause("contains-space", has_space);
    cert.add_clause("union-closed", unions, union_witness);
    cert.add_clause("intersection-closed", intersections, inter_witness);
    cert.pass = has_empty && has_space && unions && intersections;
    return cert;
}

json complex_to_json(const SimplicialComplex& K) {
    json out;
    out["vertices"] = K.vertices;
    json simplexes = json::array();
    for (const Simplex& s : K.simplexes)
        simplexes.push_back(std::vector<std::string>(s.begin(), s.end()));
    out["simplexes"] = std::move(simplexes);
    out["dimension"] = K.dimension();
    return out;
}

}  // namespace loopwork
