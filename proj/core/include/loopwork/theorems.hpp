#pragma once

#include <string>
#include <vector>

#include "loopwork/certificate.hpp"
#include "loopwork/isotopy.hpp"
#include "loopwork/loop.hpp"
#include "loopwork/osborn.hpp"

namespace loopwork {

// The statement names accepted by check_theorem, in catalog order.
const std::vector<std::string>& theorem_names();

// Verifies the named statement exhaustively on the given loop. Statements
// whose hypothesis is a universal-Osborn loop throw HypothesisFailedError
// when the loop is not one ("2post1.17c" and "2post1.21" instead carry that
// hypothesis as a checked clause). The certificate has one clause per
// quantifier instance that fails, plus summary clauses; pass means no
// violation was found.
Certificate check_theorem(const Loop& loop, const std::string& name,
                          const OsbornOptions& opts = {});

}  // namespace loopwork
