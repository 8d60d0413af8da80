#pragma once

#include <string>
#include <vector>

namespace critgraph {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    bool ok() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

} // namespace critgraph
