#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "loopwork/certificate.hpp"
#include "loopwork/identity.hpp"
#include "loopwork/isotopy.hpp"
#include "loopwork/loop.hpp"

namespace loopwork {

struct Params {
    int x = 0, u = 0, v = 0;
};

enum class IsotopeTag { dot, o0, o1, o2, o3, s0, s1, s2, s3 };
IsotopeTag parse_isotope_tag(const std::string& text);  // "dot","o0",..,"s3"
std::string isotope_tag_name(IsotopeTag tag);

// The star-1 isotope parameter has two formula variants: `mirrored` is the
// left-right mirror of phi_0 and is the one under which the diagrams commute;
// `printed` repeats phi_0's formula verbatim.
enum class Phi1Variant { mirrored, printed };
Phi1Variant parse_phi1_variant(const std::string& text);
std::string phi1_variant_name(Phi1Variant v);

// The gamma1 word: `swapped` exchanges the two two-letter blocks of gamma0
// and is the default; `printed` is gamma0's own word.
enum class Gamma1Variant { swapped, printed };
Gamma1Variant parse_gamma1_variant(const std::string& text);
std::string gamma1_variant_name(Gamma1Variant v);

struct OsbornOptions {
    Phi1Variant phi1 = Phi1Variant::mirrored;
    Gamma1Variant gamma1 = Gamma1Variant::swapped;
    SearchBounds bounds;
    int jobs = 1;
};

int phi(const Loop& loop, int i, Params p,
        Phi1Variant variant = Phi1Variant::mirrored);

// The principal pair (f,g) named by a tag: dot->(e,e), s0->(x,v),
// o0->(u,phi0), o1->(u,u\(xv)), s1->(phi1,v), o2->(x,phi2),
// o3->([x*(u\v)]/v, u\(xv)), s2->(u,e), s3->(e,v).
std::array<int, 2> isotope_pair(const Loop& loop, IsotopeTag tag, Params p,
                                Phi1Variant variant = Phi1Variant::mirrored);
Loop build_isotope(const Loop& loop, IsotopeTag tag, Params p,
                   Phi1Variant variant = Phi1Variant::mirrored);

enum class GammaWhich { g0, g1, g01o, g01s, g23o, g23s, psi0, psi1, lam13, mu13 };
GammaWhich parse_gamma_which(const std::string& text);

// Evaluates the named translation word at p. g23o checks that its two printed
// expressions agree and throws Gamma23MismatchError otherwise.
Perm gamma(const Loop& loop, GammaWhich which, Params p,
           Gamma1Variant g1 = Gamma1Variant::swapped,
           Phi1Variant f1 = Phi1Variant::mirrored);
// Both printed expressions for g23o, unguarded.
std::pair<Perm, Perm> gamma23_forms(const Loop& loop, Params p);

// The two-part identities conditioning the gamma01 arrows.
bool eq12_holds(const Loop& loop, Params p);
bool eq12b_holds(const Loop& loop, Params p,
                 Phi1Variant variant = Phi1Variant::mirrored);

struct OsbornResult {
    bool pass = false;
    const char* failed_identity = "";        // "OS3" or "OS5"
    std::optional<Counterexample> witness;   // assignment over (x,y,z)
    bool identities_disagree = false;        // OS3 and OS5 differ on this loop
};
OsbornResult is_osborn(const Loop& loop);

struct UniversalOsbornResult {
    bool pass = false;
    std::array<int, 5> witness{};  // (f,g,x,y,z) when !pass
};
UniversalOsbornResult is_universal_osborn(const Loop& loop, int bound = 12);

enum class DiagramWhich { d7, d8, d7m, d8m, d9, d17 };
DiagramWhich parse_diagram_which(const std::string& text);  // "7","8","7m",...
std::string diagram_name(DiagramWhich which);

// Checks every labeled arrow of the named diagram at p. Plain arrows must be
// valid isotopisms/isomorphisms of the stated kind; the gamma01/gamma23
// arrows of the combined diagrams are conditional and are checked as exact
// biconditionals (word-is-isomorphism vs the arrow's condition); a
// gamma23-form mismatch is recorded as status "mismatch" and leaves the
// diagram verdict untouched. The certificate lists one clause per arrow.
Certificate verify_diagram(const Loop& loop, DiagramWhich which, Params p,
                           const OsbornOptions& opts = {});
// Quantifies over all p; clause per failing p (capped), deterministic order.
Certificate verify_diagram_all(const Loop& loop, DiagramWhich which,
                               const OsbornOptions& opts = {});

}  // namespace loopwork
