#include "loopwork/classify.hpp"

#include <algorithm>

#include "loopwork/identity.hpp"

namespace loopwork {

bool Flags::get(const std::string& name) const {
    if (name == "group") return group;
    if (name == "abelian") return abelian;
    if (name == "boolean_group") return boolean_group;
    if (name == "moufang") return moufang;
    if (name == "extra") return extra;
    if (name == "left_bol") return left_bol;
    if (name == "cc") return cc;
    if (name == "osborn") return osborn;
    return false;
}

std::vector<std::string> Flags::names() const {
    std::vector<std::string> out;
    for (const std::string& name : all_names())
        if (get(name)) out.push_back(name);
    return out;
}

const std::vector<std::string>& Flags::all_names() {
    static const std::vector<std::string> names = {
        "group",    "abelian", "boolean_group", "moufang",
        "extra",    "left_bol", "cc",           "osborn"};
    return names;
}

bool is_associative(const Loop& loop) {
    const int n = loop.n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (loop.mul(loop.mul(x, y), z) != loop.mul(x, loop.mul(y, z)))
                    return false;
    return true;
}

bool is_commutative(const Loop& loop) {
    const int n = loop.n;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (loop.mul(x, y) != loop.mul(y, x)) return false;
    return true;
}

namespace {

bool translations_conjugation_closed(const Loop& loop, Side side) {
    const int n = loop.n;
    std::vector<Perm> set;
    set.reserve(n);
    for (int a = 0; a < n; ++a) set.push_back(translation(loop, side, a));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Perm conj = compose(compose(inverse(set[a]), set[b]), set[a]);
            if (std::find(set.begin(), set.end(), conj) == set.end())
                return false;
        }
    return true;
}

}  // namespace

Flags classify(const Loop& loop) {
    Flags f;
    f.group = is_associative(loop);
    f.abelian = f.group && is_commutative(loop);
    if (f.group) {
        f.boolean_group = true;
        for (int x = 0; x < loop.n && f.boolean_group; ++x)
            f.boolean_group = loop.mul(x, x) == loop.e;
    }
    f.moufang = !check_identity(loop, moufang_identity());
    f.extra = !check_identity(loop, extra_identity());
    f.left_bol = !check_identity(loop, left_bol_identity());
    f.cc = translations_conjugation_closed(loop, Side::left) &&
           translations_conjugation_closed(loop, Side::right);
    f.osborn = !check_identity(loop, os3_identity()) &&
               !check_identity(loop, os5_identity());
    return f;
}

}  // namespace loopwork
