#pragma once

#include <string>
#include <vector>

namespace loopwork {

// A permutation of {0..n-1}, stored as its image list: p[i] = image of i.
// Application is postfix (x then p), and compose(p, q) applies p first:
// x(pq) = (xp)q.
using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_perm(const Perm& p);
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);

// Parses "2,0,1" into a validated Perm.
Perm parse_perm(const std::string& text);
std::string perm_to_string(const Perm& p);

}  // namespace loopwork
