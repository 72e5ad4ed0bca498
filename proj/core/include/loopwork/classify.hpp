#pragma once

#include <string>
#include <vector>

#include "loopwork/loop.hpp"

namespace loopwork {

struct Flags {
    bool group = false;
    bool abelian = false;        // commutative group
    bool boolean_group = false;  // group with x*x = e
    bool moufang = false;
    bool extra = false;
    bool left_bol = false;
    bool cc = false;  // left and right translation sets closed under
                      // conjugation by their own kind
    bool osborn = false;

    bool get(const std::string& name) const;
    std::vector<std::string> names() const;  // set flags, in canonical order

    static const std::vector<std::string>& all_names();
};

bool is_associative(const Loop& loop);
bool is_commutative(const Loop& loop);
Flags classify(const Loop& loop);

}  // namespace loopwork
