#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "loopwork/loop.hpp"

namespace loopwork {

// Streams every reduced loop of order n (identity 0, first row and column
// in natural order) in lexicographic cell order. Returns the count; a false
// visitor stops the walk early. Orders above the bound are refused.
std::uint64_t enumerate_loops(int n, const std::function<bool(const Loop&)>& visit,
                              int bound = 7);
std::uint64_t count_loops(int n, int bound = 7);

// The Chein double of a group G on G x {0,1}. Throws NotAGroupError when
// the input is not associative.
Loop chein_double(const Loop& group);

struct NamedLoop {
    std::string name;
    Loop loop;
};

// The built-in catalog: cyclic groups Z1..Z6, Z2xZ2, Z2^3, S3, the order-5
// loop N5, and M(S3,2).
const std::vector<NamedLoop>& builtins();
const Loop& builtin_loop(const std::string& name);  // UnknownLoopError if absent
bool is_builtin(const std::string& name);

// Compiles a filter expression into a predicate. Grammar: flag names plus
// `universal_osborn`, combined with & | ! ( ) or their aliases (AND, OR,
// NOT, and the UTF-8 connectives). An empty filter accepts everything;
// malformed input throws BadFilterError at compile time.
std::function<bool(const Loop&)> compile_filter(const std::string& filter);

// Streams the built-ins (in catalog order) and then the enumerated loops of
// order <= max_order (skipping tables identical to a built-in), keeping
// those matching the filter.
std::uint64_t corpus(const std::string& filter, int max_order,
                     const std::function<bool(const NamedLoop&)>& visit);

}  // namespace loopwork
