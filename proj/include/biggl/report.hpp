#pragma once

#include <string>
#include <vector>

namespace biggl {

// Outcome of one verification command: a list of named comparisons, with
// both sides and their difference serialized only for failures.
struct ReportItem {
    std::string name;
    std::string lhs;
    std::string rhs;
    std::string diff;  // empty iff the comparison passed
};

struct Report {
    std::string command;
    std::vector<ReportItem> items;
    long checks = 0;

    bool pass() const {
        for (auto& i : items)
            if (!i.diff.empty()) return false;
        return true;
    }
    void note_pass() { ++checks; }
    void add_failure(const std::string& name, const std::string& lhs, const std::string& rhs,
                     const std::string& diff) {
        ++checks;
        items.push_back({name, lhs, rhs, diff.empty() ? "<nonzero>" : diff});
    }

    std::string text() const;
    std::string json() const;
};

}  // namespace biggl
