#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "loopwork/certificate.hpp"
#include "loopwork/classify.hpp"
#include "loopwork/enumerate.hpp"
#include "loopwork/errors.hpp"
#include "loopwork/identity.hpp"
#include "loopwork/isotopy.hpp"
#include "loopwork/loop.hpp"
#include "loopwork/osborn.hpp"
#include "loopwork/perm.hpp"
#include "loopwork/pyramid.hpp"
#include "loopwork/simplicial.hpp"
#include "loopwork/theorems.hpp"

namespace {

using namespace loopwork;

std::string display_name(const std::string& arg) {
    if (is_builtin(arg)) return builtin_loop(arg).name;
    return std::filesystem::path(arg).stem().string();
}

// A loop argument is a built-in name (case-insensitive) or a `.loop` file.
Loop load_loop(const std::string& arg) {
    if (is_builtin(arg)) return builtin_loop(arg);
    std::ifstream in(arg);
    if (!in)
        throw UnknownLoopError("'" + arg +
                               "' is neither a built-in loop nor a readable file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_loop(buf.str(), std::filesystem::path(arg).stem().string());
}

int emit(const Certificate& cert, bool as_json) {
    if (as_json)
        std::cout << cert.to_json().dump(2) << "\n";
    else
        std::cout << cert.to_text();
    return cert.pass ? 0 : 1;
}

json table_json(const Loop& loop) {
    json rows = json::array();
    for (int a = 0; a < loop.n; ++a) {
        json row = json::array();
        for (int b = 0; b < loop.n; ++b) row.push_back(loop.mul(a, b));
        rows.push_back(std::move(row));
    }
    return rows;
}

json loop_json(const Loop& loop) {
    json out;
    out["name"] = loop.name;
    out["order"] = loop.n;
    out["identity"] = loop.e;
    out["table"] = table_json(loop);
    return out;
}

json params_json(Params p) {
    return json{{"x", p.x}, {"u", p.u}, {"v", p.v}};
}

struct Shared {
    bool json = false;
    int bound = 0;
    int jobs = 1;
    std::string gamma1 = "swapped";
    std::string phi1 = "mirrored";
};

void add_shared(CLI::App* cmd, Shared& s) {
    cmd->add_flag("--json", s.json, "print the result as JSON");
    cmd->add_option("--bound", s.bound, "override every search bound");
    cmd->add_option("--jobs", s.jobs, "worker threads for all-p scans");
    cmd->add_option("--gamma1", s.gamma1, "gamma1 word variant: swapped|printed");
    cmd->add_option("--phi1", s.phi1, "phi1 formula variant: mirrored|printed");
}

OsbornOptions make_options(const Shared& s) {
    OsbornOptions opts;
    opts.phi1 = parse_phi1_variant(s.phi1);
    opts.gamma1 = parse_gamma1_variant(s.gamma1);
    opts.jobs = s.jobs;
    if (s.bound > 0) {
        opts.bounds.autotopisms = s.bound;
        opts.bounds.bs2 = s.bound;
        opts.bounds.universal_osborn = s.bound;
        opts.bounds.g_loop = s.bound;
    }
    return opts;
}

void add_params(CLI::App* cmd, Params& p) {
    cmd->add_option("--x", p.x, "isotope parameter x");
    cmd->add_option("--u", p.u, "isotope parameter u");
    cmd->add_option("--v", p.v, "isotope parameter v");
}

int run_validate(const std::string& arg, bool as_json) {
    Certificate cert;
    cert.check = "validate";
    cert.loop = display_name(arg);
    std::string message;
    try {
        const Loop loop = load_loop(arg);
        cert.loop = loop.name;
        cert.params["order"] = loop.n;
        cert.params["identity"] = loop.e;
        cert.add_clause("latin-square", true);
        cert.add_clause("two-sided-identity", true);
        cert.pass = true;
        if (as_json)
            std::cout << cert.to_json().dump(2) << "\n";
        else
            std::cout << "loop of order " << loop.n << ", identity " << loop.e
                      << "\n";
        return 0;
    } catch (const NotLatinError& e) {
        message = e.what();
        cert.add_clause("latin-square", false, json{{"error", message}});
    } catch (const NoIdentityError& e) {
        message = e.what();
        cert.add_clause("latin-square", true);
        cert.add_clause("two-sided-identity", false, json{{"error", message}});
    } catch (const MalformedError& e) {
        message = e.what();
        cert.add_clause("well-formed", false, json{{"error", message}});
    }
    cert.pass = false;
    if (as_json)
        std::cout << cert.to_json().dump(2) << "\n";
    else
        std::cout << "not a loop: " << message << "\n";
    return 1;
}

int run_identity(const std::string& arg, const std::string& ident_text,
                 const Shared& s) {
    const Loop loop = load_loop(arg);
    Identity id;
    if (const Identity* builtin = builtin_identity(ident_text))
        id = builtin->clone();
    else
        id = parse_identity(ident_text);

    const auto cex = check_identity(loop, id);
    Certificate cert;
    cert.check = "identity";
    cert.loop = loop.name;
    cert.params["identity"] = id.text;
    if (cex) {
        json witness;
        json assignment = json::object();
        for (std::size_t i = 0; i < id.vars.size(); ++i)
            assignment[std::string(1, id.vars[i])] = cex->assignment[i];
        witness["assignment"] = std::move(assignment);
        witness["lhs"] = cex->lhs;
        witness["rhs"] = cex->rhs;
        cert.add_clause("holds", false, std::move(witness));
    } else {
        cert.add_clause("holds", true);
    }
    cert.pass = !cex;

    if (s.json) return emit(cert, true);
    if (!cex) {
        std::cout << "identity holds\n";
        return 0;
    }
    std::cout << "fails at (";
    for (std::size_t i = 0; i < id.vars.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << id.vars[i] << "=" << cex->assignment[i];
    }
    std::cout << "): " << cex->lhs << " != " << cex->rhs << "\n";
    return 1;
}

int run_osborn(const std::string& arg, bool universal, const Shared& s) {
    const Loop loop = load_loop(arg);
    const OsbornOptions opts = make_options(s);
    Certificate cert;
    cert.loop = loop.name;

    if (universal) {
        cert.check = "universal-osborn";
        cert.params["bound"] = opts.bounds.universal_osborn;
        const auto result = is_universal_osborn(loop, opts.bounds.universal_osborn);
        if (result.pass) {
            cert.add_clause("os3-on-every-principal-isotope", true);
        } else {
            const auto& w = result.witness;
            cert.add_clause("os3-on-every-principal-isotope", false,
                            json{{"f", w[0]},
                                 {"g", w[1]},
                                 {"x", w[2]},
                                 {"y", w[3]},
                                 {"z", w[4]}});
        }
        cert.pass = result.pass;
        if (s.json) return emit(cert, true);
        if (result.pass) {
            std::cout << "universal Osborn: OS3 holds on every principal isotope\n";
            return 0;
        }
        const auto& w = result.witness;
        std::cout << "OS3 fails on the isotope Q_{" << w[0] << "," << w[1]
                  << "} at (" << w[2] << "," << w[3] << "," << w[4] << ")\n";
        return 1;
    }

    cert.check = "osborn";
    const OsbornResult result = is_osborn(loop);
    if (result.pass) {
        cert.add_clause("OS3", true);
        cert.add_clause("OS5", true);
    } else {
        json witness;
        if (result.witness) {
            witness["x"] = result.witness->assignment[0];
            witness["y"] = result.witness->assignment[1];
            witness["z"] = result.witness->assignment[2];
            witness["lhs"] = result.witness->lhs;
            witness["rhs"] = result.witness->rhs;
        }
        cert.add_clause(result.failed_identity, false, std::move(witness));
        if (result.identities_disagree)
            cert.add_clause("OS3-OS5-agreement", false);
    }
    cert.pass = result.pass;
    if (s.json) return emit(cert, true);
    if (result.pass) {
        std::cout << "OS3 and OS5 hold\n";
        return 0;
    }
    if (result.witness) {
        const auto& a = result.witness->assignment;
        std::cout << result.failed_identity << " fails at (" << a[0] << ","
                  << a[1] << "," << a[2] << ")\n";
    }
    if (result.identities_disagree) std::cout << "OS3 and OS5 disagree\n";
    return 1;
}

int run_isotope(const std::string& arg, const std::string& which, int f, int g,
                Params p, const Shared& s) {
    const Loop loop = load_loop(arg);
    if (!which.empty()) {
        const IsotopeTag tag = parse_isotope_tag(which);
        const OsbornOptions opts = make_options(s);
        const auto pair = isotope_pair(loop, tag, p, opts.phi1);
        const Loop iso = build_isotope(loop, tag, p, opts.phi1);
        if (s.json) {
            json out;
            out["base"] = loop.name;
            out["tag"] = isotope_tag_name(tag);
            out["p"] = params_json(p);
            out["pair"] = json{pair[0], pair[1]};
            out["identity"] = iso.e;
            out["table"] = table_json(iso);
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        std::cout << "# " << isotope_tag_name(tag) << " isotope of " << loop.name
                  << " at (" << p.x << "," << p.u << "," << p.v << "), pair ("
                  << pair[0] << "," << pair[1] << ")\n"
                  << render_loop(iso);
        return 0;
    }
    if (f < 0 || g < 0)
        throw MalformedError("isotope needs --which TAG or both --f and --g");
    const Loop iso = principal_isotope(loop, f, g);
    if (s.json) {
        json out;
        out["base"] = loop.name;
        out["pair"] = json{f, g};
        out["identity"] = iso.e;
        out["table"] = table_json(iso);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "# principal isotope Q_{" << f << "," << g << "} of "
              << loop.name << "\n"
              << render_loop(iso);
    return 0;
}

int run_autotopisms(const std::string& arg, bool count_only, const Shared& s) {
    const Loop loop = load_loop(arg);
    const OsbornOptions opts = make_options(s);
    const auto triples = autotopisms(loop, opts.bounds.autotopisms);
    if (s.json) {
        json out;
        out["check"] = "autotopisms";
        out["loop"] = loop.name;
        out["bound"] = opts.bounds.autotopisms;
        out["count"] = triples.size();
        if (!count_only) {
            json items = json::array();
            for (const IsoTriple& t : triples)
                items.push_back(json{{"a", t.a}, {"b", t.b}, {"c", t.c}});
            out["triples"] = std::move(items);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << triples.size() << " autotopisms of " << loop.name << "\n";
    if (!count_only)
        for (const IsoTriple& t : triples)
            std::cout << "  a=" << perm_to_string(t.a)
                      << "  b=" << perm_to_string(t.b)
                      << "  c=" << perm_to_string(t.c) << "\n";
    return 0;
}

int run_isomorphic(const std::string& from, const std::string& to,
                   const std::string& theta_text, const Shared& s) {
    const Loop g = load_loop(from);
    const Loop h = load_loop(to);
    Certificate cert;
    cert.check = "isomorphic";
    cert.loop = g.name;
    cert.params["to"] = h.name;

    if (!theta_text.empty()) {
        const Perm theta = parse_perm(theta_text);
        if (static_cast<int>(theta.size()) != g.n)
            throw MalformedError("theta has " + std::to_string(theta.size()) +
                                 " points, the loop has " + std::to_string(g.n));
        const bool ok = g.n == h.n && is_isomorphism(theta, g, h);
        cert.params["theta"] = theta;
        cert.add_clause("theta-is-isomorphism", ok);
        cert.pass = ok;
        if (s.json) return emit(cert, true);
        std::cout << (ok ? "theta is an isomorphism\n"
                         : "theta is not an isomorphism\n");
        return ok ? 0 : 1;
    }

    std::optional<Perm> theta;
    if (g.n == h.n) theta = find_isomorphism(g, h);
    if (theta)
        cert.add_clause("exists-isomorphism", true, json{{"theta", *theta}});
    else
        cert.add_clause("exists-isomorphism", false);
    cert.pass = theta.has_value();
    if (s.json) return emit(cert, true);
    if (theta) {
        std::cout << "isomorphic via " << perm_to_string(*theta) << "\n";
        return 0;
    }
    std::cout << "not isomorphic\n";
    return 1;
}

int run_drisko(const std::string& arg, int f, int g, int c, int d, bool all,
               const Shared& s) {
    const Loop loop = load_loop(arg);
    const OsbornOptions opts = make_options(s);

    if (all) {
        const auto triples = drisko_all(loop, f, g, c, d, opts.bounds.autotopisms);
        if (s.json) {
            json out;
            out["check"] = "drisko-all";
            out["loop"] = loop.name;
            out["params"] = json{{"f", f}, {"g", g}, {"c", c}, {"d", d}};
            out["count"] = triples.size();
            json items = json::array();
            for (const IsoTriple& t : triples)
                items.push_back(json{{"a", t.a}, {"b", t.b}, {"c", t.c}});
            out["triples"] = std::move(items);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << triples.size() << " autotopisms with " << f << "->" << c
                      << ", " << g << "->" << d << "\n";
            for (const IsoTriple& t : triples)
                std::cout << "  a=" << perm_to_string(t.a)
                          << "  b=" << perm_to_string(t.b)
                          << "  c=" << perm_to_string(t.c) << "\n";
        }
        return triples.empty() ? 1 : 0;
    }

    const auto triple = drisko(loop, f, g, c, d);
    Certificate cert;
    cert.check = "drisko";
    cert.loop = loop.name;
    cert.params["f"] = f;
    cert.params["g"] = g;
    cert.params["c"] = c;
    cert.params["d"] = d;
    if (triple)
        cert.add_clause("exists-autotopism", true,
                        json{{"a", triple->a}, {"b", triple->b}, {"c", triple->c}});
    else
        cert.add_clause("exists-autotopism", false);
    cert.pass = triple.has_value();
    if (s.json) return emit(cert, true);
    if (triple) {
        std::cout << "autotopism found\n"
                  << "  a=" << perm_to_string(triple->a) << "\n"
                  << "  b=" << perm_to_string(triple->b) << "\n"
                  << "  c=" << perm_to_string(triple->c) << "\n";
        return 0;
    }
    std::cout << "no autotopism carries (" << f << "," << g << ") to (" << c
              << "," << d << ")\n";
    return 1;
}

int run_bs2(const std::string& arg, const std::string& theta_text,
            const Shared& s) {
    const Loop loop = load_loop(arg);
    const OsbornOptions opts = make_options(s);
    const Perm theta = parse_perm(theta_text);
    const auto evidence = bs2_contains(loop, theta, opts.bounds.bs2);
    Certificate cert;
    cert.check = "bs2";
    cert.loop = loop.name;
    cert.params["theta"] = theta;
    cert.params["bound"] = opts.bounds.bs2;
    if (evidence) {
        const auto& w = *evidence;
        cert.add_clause(
            "theta-in-bs2", true,
            json{{"a", w[0]}, {"b", w[1]}, {"c", w[2]}, {"d", w[3]}});
    } else {
        cert.add_clause("theta-in-bs2", false);
    }
    cert.pass = evidence.has_value();
    if (s.json) return emit(cert, true);
    if (evidence) {
        const auto& w = *evidence;
        std::cout << "theta maps Q_{" << w[0] << "," << w[1] << "} onto Q_{"
                  << w[2] << "," << w[3] << "}\n";
        return 0;
    }
    std::cout << "no witnessing pair of principal isotopes\n";
    return 1;
}

int run_theorem(const std::string& arg, const std::string& name, bool list,
                const Shared& s) {
    if (list) {
        for (const std::string& n : theorem_names()) std::cout << n << "\n";
        return 0;
    }
    if (arg.empty() || name.empty())
        throw MalformedError("theorem needs LOOP and --name (or --list)");
    const Loop loop = load_loop(arg);
    return emit(check_theorem(loop, name, make_options(s)), s.json);
}

std::string simplex_text(const Simplex& simplex) {
    std::string out = "{";
    for (const std::string& v : simplex) {
        if (out.size() > 1) out += ",";
        out += v;
    }
    return out + "}";
}

int run_complex(const std::string& arg, const std::string& which, bool all,
                bool build, Params p, const Shared& s) {
    const ComplexWhich w = parse_complex_which(which);
    if (build) {
        const SimplicialComplex K = build_K(w);
        if (s.json) {
            std::cout << complex_to_json(K).dump(2) << "\n";
            return 0;
        }
        std::cout << "complex " << complex_name(w) << ": " << K.vertices.size()
                  << " vertices, " << K.simplexes.size()
                  << " simplexes, dimension " << K.dimension() << "\n";
        std::cout << "vertices:";
        for (const std::string& v : K.vertices) std::cout << " " << v;
        std::cout << "\nsimplexes:\n";
        for (const Simplex& simplex : K.simplexes)
            std::cout << "  " << simplex_text(simplex) << "\n";
        return 0;
    }
    if (arg.empty())
        throw MalformedError("complex needs LOOP unless --build is given");
    const Loop loop = load_loop(arg);
    const OsbornOptions opts = make_options(s);
    const Certificate cert =
        all ? theorem_K(loop, w, opts) : validate_complex(loop, w, p, opts);
    return emit(cert, s.json);
}

int run_map(const std::string& arg, int from, int to, Params p, const Shared& s) {
    const Loop loop = load_loop(arg);
    return emit(simplicial_map_check(loop, from, to, p, make_options(s)), s.json);
}

int run_topology(const std::string& which, bool power_set, bool as_json) {
    const ComplexWhich w = parse_complex_which(which);
    const SimplicialComplex K = build_K(w);
    if (!power_set) {
        Certificate cert = topology_check(K);
        cert.params["complex"] = complex_name(w);
        return emit(cert, as_json);
    }

    std::vector<Simplex> family;
    const std::size_t n = K.vertices.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Simplex subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) subset.insert(K.vertices[i]);
        family.push_back(std::move(subset));
    }
    const bool ok = is_topology(K.vertices, family);
    Certificate cert;
    cert.check = "topology.power-set";
    cert.params["complex"] = complex_name(w);
    cert.params["sets"] = family.size();
    cert.add_clause("topology", ok);
    cert.pass = ok;
    return emit(cert, as_json);
}

int run_pyramid(const std::string& arg, bool have_p, Params p,
                const std::string& format, bool verify, const Shared& s) {
    const Loop loop = load_loop(arg);
    const OsbornOptions opts = make_options(s);
    if (!have_p) p = default_pyramid_params(loop, opts);
    const PyramidGraph graph = build_pyramid(loop, p, opts);
    if (verify) return emit(verify_rectangle(graph), s.json);
    std::cout << export_graph(graph, s.json ? "json" : format);
    return 0;
}

int run_enumerate(int order, const std::string& filter, bool count_only,
                  const std::string& emit_dir, const Shared& s) {
    const int bound = s.bound > 0 ? s.bound : 7;
    const auto matches = compile_filter(filter);
    std::uint64_t kept = 0;
    std::vector<std::string> names;
    if (!emit_dir.empty()) std::filesystem::create_directories(emit_dir);

    enumerate_loops(
        order,
        [&](const Loop& loop) {
            if (!matches(loop)) return true;
            ++kept;
            if (!emit_dir.empty()) {
                const auto path = std::filesystem::path(emit_dir) /
                                  ("o" + std::to_string(order) + "_" +
                                   std::to_string(kept) + ".loop");
                std::ofstream out(path);
                out << "# " << loop.name << "\n" << render_loop(loop);
            } else if (!count_only) {
                if (s.json)
                    names.push_back(loop.name);
                else
                    std::cout << loop.name << "\n";
            }
            return true;
        },
        bound);

    if (s.json) {
        json out;
        out["order"] = order;
        if (!filter.empty()) out["filter"] = filter;
        out["count"] = kept;
        if (!emit_dir.empty())
            out["dir"] = emit_dir;
        else if (!count_only)
            out["names"] = names;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (!emit_dir.empty())
        std::cout << "wrote " << kept << " loops to " << emit_dir << "\n";
    else if (count_only)
        std::cout << kept << "\n";
    return 0;
}

int run_chein(const std::string& arg, bool as_json) {
    const Loop group = load_loop(arg);
    const Loop doubled = chein_double(group);
    if (as_json) {
        std::cout << loop_json(doubled).dump(2) << "\n";
        return 0;
    }
    std::cout << "# " << doubled.name << "\n" << render_loop(doubled);
    return 0;
}

int run_corpus(const std::string& filter, int max_order, bool count_only,
               bool as_json) {
    json items = json::array();
    const std::uint64_t total =
        corpus(filter, max_order, [&](const NamedLoop& entry) {
            if (count_only) return true;
            if (as_json)
                items.push_back(
                    json{{"name", entry.name}, {"order", entry.loop.n}});
            else
                std::cout << entry.name << " (order " << entry.loop.n << ")\n";
            return true;
        });
    if (as_json) {
        json out;
        if (!filter.empty()) out["filter"] = filter;
        out["max_order"] = max_order;
        out["count"] = total;
        if (!count_only) out["loops"] = std::move(items);
        std::cout << out.dump(2) << "\n";
    } else if (count_only) {
        std::cout << total << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "workbench for finite loops: isotopes, autotopisms, Osborn identities,\n"
        "commuting diagrams, simplicial complexes and the isotope pyramid"};
    app.require_subcommand(1);
    int rc = 0;

    {
        auto* cmd = app.add_subcommand("validate",
                                       "check a Cayley table for the loop axioms");
        auto arg = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("loop", *arg, "built-in name or .loop file")->required();
        cmd->add_flag("--json", *as_json, "print the result as JSON");
        cmd->callback([&rc, arg, as_json] { rc = run_validate(*arg, *as_json); });
    }
    {
        auto* cmd = app.add_subcommand(
            "identity", "evaluate an identity over all assignments");
        auto arg = std::make_shared<std::string>();
        auto ident = std::make_shared<std::string>();
        auto s = std::make_shared<Shared>();
        cmd->add_option("loop", *arg, "built-in name or .loop file")->required();
        cmd->add_option("identity", *ident,
                        "identity text like \"(x*y)*z = x*(y*z)\", or a "
                        "built-in name: os3, os5, moufang, extra, left_bol")
            ->required();
        add_shared(cmd, *s);
        cmd->callback([&rc, arg, ident, s] { rc = run_identity(*arg, *ident, *s); });
    }
    {
        auto* cmd = app.add_subcommand("osborn",
                                       "check the OS3 and OS5 identities");
        auto arg = std::make_shared<std::string>();
        auto universal = std::make_shared<bool>(false);
        auto s = std::make_shared<Shared>();
        cmd->add_option("loop", *arg, "built-in name or .loop file")->required();
        cmd->add_flag("--universal", *universal,
                      "check OS3 on every principal isotope");
        add_shared(cmd, *s);
        cmd->callback(
            [&rc, arg, universal, s] { rc = run_osborn(*arg, *universal, *s); });
    }
    {
        auto* cmd =
            app.add_subcommand("isotope", "print a principal isotope's table");
        auto arg = std::make_shared<std::string>();
        auto which = std::make_shared<std::string>();
        auto f = std::make_shared<int>(-1);
        auto g = std::make_shared<int>(-1);
        auto p = std::make_shared<Params>();
        auto s = std::make_shared<Shared>();
        cmd->add_option("loop", *arg, "built-in name or .loop file")->required();
        cmd->add_option("--which", *which,
                        "named isotope: dot, o0..o3, s0..s3 (uses --x/--u/--v)");
        cmd->add_option("--f", *f, "principal pair component f");
        cmd->add_option("--g", *g, "principal pair component g");
        add_params(cmd, *p);
        add_shared(cmd, *s);
        cmd->callback([&rc, arg, which, f, g, p, s] {
            rc = run_isotope(*arg, *which, *f, *g, *p, *s);
        });
    }
    {
        auto* cmd = app.add_subcommand("autotopisms",
                                       "enumerate the autotopism group");
        auto arg = std::make_shared<std::string>();
        auto count_only = std::make_shared<bool>(false);
        auto s = std::make_shared<Shared>();
        cmd->add_option("loop", *arg, "built-in name or .loop file")->required();
        cmd->add_flag("--count", *count_only, "print only the count");
        add_shared(cmd, *s);
        cmd->callback(
            [&rc, arg, count_only, s] { rc = run_autotopisms(*arg, *count_only, *s); });
    }
    {
        auto* cmd = app.add_subcommand("isomorphic",
                                       "find or verify a loop isomorphism");
        auto from = std::make_shared<std::string>();
        auto to = std::make_shared<std::string>();
        auto theta = std::make_shared<std::string>();
        auto s = std::make_shared<Shared>();
        cmd->add_option("from", *from, "built-in name or .loop file")->required();
        cmd->add_option("to", *to, "built-in name or .loop file")->required();
        cmd->add_option("--theta", *theta,
                        "verify this permutation (images, e.g. \"2,0,1\") "
                        "instead of searching");
        add_shared(cmd, *s);
        cmd->callback(
            [&rc, from, to, theta, s] { rc = run_isomorphic(*from, *to, *theta, *s); });
    }
    {
        auto* cmd = app.add_subcommand(
            "drisko", "autotopism carrying one principal pair to another");
        auto arg = std::make_shared<std::string>();
        auto f = std::make_shared<int>(0);
        auto g = std::make_shared<int>(0);
        auto c = std::make_shared<int>(0);
        auto d = std::make_shared<int>(0);
        auto all = std::make_shared<bool>(false);
        auto s = std::make_shared<Shared>();
        cmd->add_option("loop", *arg, "built-in name or .loop file")->required();
        cmd->add_option("--f", *f, "source pair component f")->required();
        cmd->add_option("--g", *g, "source pair component g")->required();
        cmd->add_option("--c", *c, "target pair component c")->required();
        cmd->add_option("--d", *d, "target pair component d")->required();
        cmd->add_flag("--all", *all, "list every such autotopism");
        add_shared(cmd, *s);
        cmd->callback([&rc, arg, f, g, c, d, all, s] {
            rc = run_drisko(*arg, *f, *g, *c, *d, *all, *s);
        });
    }
    {
        auto* cmd = app.add_subcommand(
            "bs2", "membership in the Bryant-Schneider kind-2 set");
        auto arg = std::make_shared<std::string>();
        auto theta = std::make_shared<std::string>();
        auto s = std::make_shared<Shared>();
        cmd->add_option("loop", *arg, "built-in name or .loop file")->required();
        cmd->add_option("--theta", *theta, "permutation images, e.g. \"2,0,1\"")
            ->required();
        add_shared(cmd, *s);
        cmd->callback([&rc, arg, theta, s] { rc = run_bs2(*arg, *theta, *s); });
    }
    {
        auto* cmd = app.add_subcommand("diagram",
                                       "verify a commuting diagram of isotopes");
        auto arg = std::make_shared<std::string>();
        auto which = std::make_shared<std::string>();
        auto all = std::make_shared<bool>(false);
        auto p = std::make_shared<Params>();
        auto s = std::make_shared<Shared>();
        cmd->add_option("loop", *arg, "built-in name or .loop file")->required();
        cmd->add_option("--which", *which, "diagram: 7, 8, 7m, 8m, 9 or 17")
            ->required();
        cmd->add_flag("--all", *all, "quantify over every (x,u,v)");
        add_params(cmd, *p);
        add_shared(cmd, *s);
        cmd->callback([&rc, arg, which, all, p, s] {
            const Loop loop = load_loop(*arg);
            const DiagramWhich w = parse_diagram_which(*which);
            const OsbornOptions opts = make_options(*s);
            const Certificate cert = *all ? verify_diagram_all(loop, w, opts)
                                          : verify_diagram(loop, w, *p, opts);
            rc = emit(cert, s->json);
        });
    }
    {
        auto* cmd = app.add_subcommand("theorem",
                                       "verify a named statement exhaustively");
        auto arg = std::make_shared<std::string>();
        auto name = std::make_shared<std::string>();
        auto list = std::make_shared<bool>(false);
        auto s = std::make_shared<Shared>();
        cmd->add_option("loop", *arg, "built-in name or .loop file");
        cmd->add_option("--name", *name, "statement name (see --list)");
        cmd->add_flag("--list", *list, "print the statement catalog");
        add_shared(cmd, *s);
        cmd->callback(
            [&rc, arg, name, list, s] { rc = run_theorem(*arg, *name, *list, *s); });
    }
    {
        auto* cmd = app.add_subcommand(
            "complex", "simplicial complexes of isotopes: build and validate");
        auto arg = std::make_shared<std::string>();
        auto which = std::make_shared<std::string>();
        auto all = std::make_shared<bool>(false);
        auto build = std::make_shared<bool>(false);
        auto p = std::make_shared<Params>();
        auto s = std::make_shared<Shared>();
        cmd->add_option("loop", *arg, "built-in name or .loop file");
        cmd->add_option("--which", *which,
                        "complex: K0..K3, K01, K23, K0123 or K10")
            ->required();
        cmd->add_flag("--all", *all,
                      "check the statement attached to the complex over all p");
        cmd->add_flag("--build", *build, "print the abstract complex and exit");
        add_params(cmd, *p);
        add_shared(cmd, *s);
        cmd->callback([&rc, arg, which, all, build, p, s] {
            rc = run_complex(*arg, *which, *all, *build, *p, *s);
        });
    }
    {
        auto* cmd = app.add_subcommand(
            "map", "check the vertex map between two complexes is simplicial");
        auto arg = std::make_shared<std::string>();
        auto from = std::make_shared<int>(0);
        auto to = std::make_shared<int>(0);
        auto p = std::make_shared<Params>();
        auto s = std::make_shared<Shared>();
        cmd->add_option("loop", *arg, "built-in name or .loop file")->required();
        cmd->add_option("--from", *from, "source complex index 0..3")->required();
        cmd->add_option("--to", *to, "target complex index 0..3")->required();
        add_params(cmd, *p);
        add_shared(cmd, *s);
        cmd->callback(
            [&rc, arg, from, to, p, s] { rc = run_map(*arg, *from, *to, *p, *s); });
    }
    {
        auto* cmd = app.add_subcommand(
            "topology", "read a simplex family as open sets and check the axioms");
        auto which = std::make_shared<std::string>();
        auto power_set = std::make_shared<bool>(false);
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("--which", *which,
                        "complex: K0..K3, K01, K23, K0123 or K10")
            ->required();
        cmd->add_flag("--power-set", *power_set,
                      "check the full power set of the vertices instead");
        cmd->add_flag("--json", *as_json, "print the result as JSON");
        cmd->callback([&rc, which, power_set, as_json] {
            rc = run_topology(*which, *power_set, *as_json);
        });
    }
    {
        auto* cmd = app.add_subcommand(
            "pyramid", "build the rectangular pyramid over the four isotopes");
        auto arg = std::make_shared<std::string>();
        auto p = std::make_shared<Params>();
        auto format = std::make_shared<std::string>("text");
        auto verify = std::make_shared<bool>(false);
        auto s = std::make_shared<Shared>();
        cmd->add_option("loop", *arg, "built-in name or .loop file")->required();
        auto* px = cmd->add_option("--x", p->x, "isotope parameter x");
        auto* pu = cmd->add_option("--u", p->u, "isotope parameter u");
        auto* pv = cmd->add_option("--v", p->v, "isotope parameter v");
        cmd->add_option("--format", *format, "output format: text, dot or json");
        cmd->add_flag("--verify", *verify,
                      "check side lengths and apex agreement instead");
        add_shared(cmd, *s);
        cmd->callback([&rc, arg, p, format, verify, s, px, pu, pv] {
            const bool have_p = px->count() || pu->count() || pv->count();
            rc = run_pyramid(*arg, have_p, *p, *format, *verify, *s);
        });
    }
    {
        auto* cmd = app.add_subcommand("enumerate",
                                       "stream every reduced loop of an order");
        auto order = std::make_shared<int>(0);
        auto filter = std::make_shared<std::string>();
        auto count_only = std::make_shared<bool>(false);
        auto emit_dir = std::make_shared<std::string>();
        auto s = std::make_shared<Shared>();
        cmd->add_option("--order", *order, "loop order")->required();
        cmd->add_option("--filter", *filter,
                        "keep loops matching this flag expression");
        auto* count_flag = cmd->add_flag("--count", *count_only,
                                         "print only the count");
        cmd->add_option("--emit", *emit_dir, "write .loop files here")
            ->excludes(count_flag);
        add_shared(cmd, *s);
        cmd->callback([&rc, order, filter, count_only, emit_dir, s] {
            rc = run_enumerate(*order, *filter, *count_only, *emit_dir, *s);
        });
    }
    {
        auto* cmd =
            app.add_subcommand("chein", "print the double M(G,2) of a group");
        auto arg = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("group", *arg, "built-in name or .loop file")->required();
        cmd->add_flag("--json", *as_json, "print the result as JSON");
        cmd->callback([&rc, arg, as_json] { rc = run_chein(*arg, *as_json); });
    }
    {
        auto* cmd = app.add_subcommand(
            "corpus", "stream the built-ins plus small enumerated loops");
        auto filter = std::make_shared<std::string>();
        auto max_order = std::make_shared<int>(6);
        auto count_only = std::make_shared<bool>(false);
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("--filter", *filter,
                        "keep loops matching this flag expression");
        cmd->add_option("--max-order", *max_order,
                        "largest enumerated order to include");
        cmd->add_flag("--count", *count_only, "print only the count");
        cmd->add_flag("--json", *as_json, "print the result as JSON");
        cmd->callback([&rc, filter, max_order, count_only, as_json] {
            rc = run_corpus(*filter, *max_order, *count_only, *as_json);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
