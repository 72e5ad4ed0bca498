#include "loopwork/certificate.hpp"

namespace loopwork {

namespace {

std::string scalar_to_text(const json& value) {
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
}

}  // namespace

std::string Certificate::to_text() const {
    std::string out = "check: " + check + "\n";
    if (!loop.empty()) out += "loop: " + loop + "\n";
    if (!params.empty()) {
        out += "params:";
        for (auto it = params.begin(); it != params.end(); ++it)
            out += " " + it.key() + "=" + scalar_to_text(it.value());
        out += "\n";
    }
    for (const json& clause : clauses) {
        out += clause["pass"].get<bool>() ? "  [ok]   " : "  [FAIL] ";
        out += clause["name"].get<std::string>();
        if (clause.contains("witness"))
            out += "  witness: " + clause["witness"].dump();
        out += "\n";
    }
    out += pass ? "pass\n" : "FAIL\n";
    return out;
}

}  // namespace loopwork
