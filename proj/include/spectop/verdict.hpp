#pragma once

#include <string>
#include <utility>
#include <vector>

namespace spectop {

struct Witness {
    std::string note;
    // Labelled element lists, e.g. {"U", {"x", "w"}}.
    std::vector<std::pair<std::string, std::vector<std::string>>> sets;

    bool empty() const { return note.empty() && sets.empty(); }
    std::string to_string() const;
};

struct Verdict {
    bool holds = false;
    Witness witness;

    explicit operator bool() const { return holds; }
};

std::string format_names(const std::vector<std::string>& names);

}  // namespace spectop
