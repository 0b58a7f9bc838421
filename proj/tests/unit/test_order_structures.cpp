#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "spectop/cli/examples.hpp"
#include "spectop/errors.hpp"
#include "spectop/order_structures.hpp"

using namespace spectop;

namespace {

XTopContext example(const char* name) {
    const auto f = cli::builtin_example(name);
    return XTopContext(cli::to_lattice(f), *f.x);
}

std::set<std::string> names(const XTopContext& ctx, Subset s) {
    const auto v = ctx.names_of(s);
    return {v.begin(), v.end()};
}

std::set<std::string> witness_set(const Witness& w, const std::string& label) {
    for (const auto& [l, n] : w.sets)
        if (l == label) return {n.begin(), n.end()};
    return {"<missing " + label + ">"};
}

}  // namespace

TEST_CASE("maxima and minima") {
    const auto q = example("Q");
    const auto p = max_min_profile(q);
    CHECK(names(q, p.max_x) == std::set<std::string>{"x", "y"});
    CHECK(names(q, p.min_x) == std::set<std::string>{"0"});
    CHECK(names(q, p.max_of[0]) == std::set<std::string>{"x", "y"});

    const auto n5 = example("N5b");
    const auto f = structure_flags(n5);
    CHECK(f.local.holds);
    CHECK(f.colocal.holds);
    CHECK(names(n5, max_min_profile(n5).min_x) == std::set<std::string>{"y"});
}

TEST_CASE("pm-property and Jacobson") {
    const auto np = example("notpm");
    const auto pm = pm_properties(np);
    CHECK_FALSE(pm.pm.holds);
    CHECK(witness_set(pm.pm.witness, "Max(u;X)") == std::set<std::string>{"x", "y"});
    CHECK(pm_properties(example("X")).pm.holds);
    CHECK(pm_properties(example("H")).jacobson.holds);
    CHECK_FALSE(pm_properties(example("Q")).pm.holds);
}

TEST_CASE("retractions onto the maximal points") {
    const auto np = find_retraction(example("notpm"));
    CHECK_FALSE(np.retraction.has_value());
    CHECK_FALSE(np.obstruction.empty());

    const auto x = example("X");
    const auto r = find_retraction(x);
    REQUIRE(r.retraction.has_value());
    CHECK(r.from_pm_construction);
    for (std::size_t m : r.retraction->map) CHECK(x.lattice().name(m) == "w");

    const auto sd = example("sd");
    const auto rs = find_retraction(sd);
    REQUIRE(rs.retraction.has_value());

    Limits tiny;
    tiny.max_retraction_candidates = 1;
    CHECK_THROWS_AS(find_retraction(example("Q"), tiny), SizeLimitExceeded);
}

TEST_CASE("tree decompositions") {
    const auto sd = tree_analysis(example("sd"));
    CHECK(sd.kind == TreeKind::wedge_forest);
    CHECK(sd.components.size() == 2);
    CHECK(sd.strongly_disjoint);

    const auto x = example("X");
    const auto tx = tree_analysis(x);
    CHECK(tx.kind == TreeKind::vee_tree_found);
    REQUIRE(tx.vee.has_value());
    CHECK(x.lattice().name((*tx.vee)[0]) == "0");

    const auto y = tree_analysis(example("Y"));
    CHECK(y.kind == TreeKind::wedge_forest);
    CHECK(y.components.size() == 1);
    CHECK(example("Y").lattice().name(y.components[0].apex) == "w");

    CHECK(to_string(TreeKind::vee_tree_found) == "vee_tree_found");
}

TEST_CASE("implication checks hold on every example") {
    for (const auto& n : cli::example_names()) {
        const auto ctx = example(n.c_str());
        const auto checks = theorem_deciders(ctx);
        CHECK(checks.size() > 20);
        for (const auto& c : checks) {
            INFO(n << ": " << c.name);
            CHECK(c.consistent);
        }
    }
}

TEST_CASE("instance facts") {
    const auto f = instance_facts(example("sd"));
    CHECK(f.retraction_decided);
    CHECK(f.completely_strongly_x_irreducible);
    CHECK(f.separation.completely_normal.holds);
    CHECK_FALSE(f.separation.perfectly_normal.holds);
}
