#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace loopwork {

// Insertion-ordered JSON keeps serialized certificates byte-identical run to
// run. Certificates carry no timestamps or absolute paths.
using json = nlohmann::ordered_json;

struct Certificate {
    std::string check;
    std::string loop;
    json params = json::object();
    bool pass = false;
    json clauses = json::array();

    void add_clause(const std::string& name, bool clause_pass,
                    json witness = nullptr) {
        json c;
        c["name"] = name;
        c["pass"] = clause_pass;
        if (!witness.is_null()) c["witness"] = std::move(witness);
        clauses.push_back(std::move(c));
    }

    json to_json() const {
        json out;
        out["check"] = check;
        out["loop"] = loop;
        out["params"] = params;
        out["pass"] = pass;
        out["clauses"] = clauses;
        return out;
    }

    std::string to_text() const;
};

}  // namespace loopwork
