#include "spectop/cli/examples.hpp"

#include "spectop/errors.hpp"

namespace spectop::cli {

LatticeFile fig_ln_lattice() {
    return {{"0", "z", "x", "y", "w", "1"},
            {{"0", "z"}, {"z", "x"}, {"z", "y"}, {"x", "w"}, {"y", "w"}, {"w", "1"}},
            "0", "1", std::nullopt};
}

LatticeFile n5_lattice() {
    return {{"0", "y", "z", "x", "1"},
            {{"0", "y"}, {"0", "z"}, {"y", "x"}, {"x", "1"}, {"z", "1"}},
            "0", "1", std::nullopt};
}

LatticeFile not_pm_lattice() {
    return {{"0", "u", "v", "t", "x", "y", "1"},
            {{"0", "u"}, {"0", "v"}, {"u", "t"}, {"v", "t"}, {"t", "x"}, {"t", "y"}, {"x", "1"}, {"y", "1"}},
            "0", "1", std::nullopt};
}

LatticeFile strongly_disjoint_lattice() {
    return {{"0", "z", "w", "u", "v", "t", "x", "y", "1"},
            {{"0", "z"}, {"0", "w"}, {"z", "u"}, {"z", "t"}, {"w", "t"}, {"w", "v"},
             {"u", "x"}, {"t", "x"}, {"t", "y"}, {"v", "y"}, {"x", "1"}, {"y", "1"}},
            "0", "1", std::nullopt};
}

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names{"X", "Y", "Q", "H", "G", "N5a", "N5b", "notpm", "sd"};
    return names;
}

LatticeFile builtin_example(std::string_view name) {
    auto with_x = [](LatticeFile f, std::vector<std::string> x) {
        f.x = std::move(x);
        return f;
    };
    if (name == "X") return with_x(fig_ln_lattice(), {"0", "x", "y", "w"});
    if (name == "Y") return with_x(fig_ln_lattice(), {"x", "y", "w"});
    if (name == "Q") return with_x(fig_ln_lattice(), {"0", "x", "y"});
    if (name == "H") return with_x(fig_ln_lattice(), {"x", "y"});
    if (name == "G") return with_x(fig_ln_lattice(), {"x", "w"});
    if (name == "N5a") return with_x(n5_lattice(), {"0", "y", "x"});
    if (name == "N5b") return with_x(n5_lattice(), {"y", "x"});
    if (name == "notpm") return with_x(not_pm_lattice(), {"x", "u", "y", "v"});
    if (name == "sd") return with_x(strongly_disjoint_lattice(), {"x", "u", "y", "v"});
    throw BadParameters("unknown example '" + std::string(name) + "'");
}

}  // namespace spectop::cli
