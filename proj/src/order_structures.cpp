#include "spectop/order_structures.hpp"

#include "spectop/errors.hpp"

namespace spectop {

namespace {

Verdict yes(std::string note) { return Verdict{true, Witness{std::move(note), {}}}; }
Verdict no(std::string note) { return Verdict{false, Witness{std::move(note), {}}}; }

}  // namespace

std::string to_string(TreeKind kind) {
    switch (kind) {
        case TreeKind::wedge_forest: return "wedge_forest";
        case TreeKind::vee_tree_found: return "vee_tree_found";
        case TreeKind::neither: return "neither";
    }
    return "neither";
}

MaxMinProfile max_min_profile(const XTopContext& ctx) {
    const auto& order = ctx.lattice().order();
    const Subset x = ctx.x_set();
    MaxMinProfile p;
    for (std::size_t e : x) {
        if ((order.up_set(e) & x) == Subset::single(e)) p.max_x.insert(e);
        if ((order.down_set(e) & x) == Subset::single(e)) p.min_x.insert(e);
    }
    for (std::size_t e : ctx.points()) {
        p.max_of.push_back(order.up_set(e) & p.max_x);
        p.min_of.push_back(order.down_set(e) & p.min_x);
    }
    return p;
}

StructureFlags structure_flags(const XTopContext& ctx) {
    const auto p = max_min_profile(ctx);
    const auto& pts = ctx.points();
    StructureFlags f;
    f.atomic = yes("every point lies above a minimal point");
    f.coatomic = yes("every point lies below a maximal point");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (p.min_of[i].empty()) f.atomic = no(ctx.lattice().name(pts[i]) + " has no minimal point below it");
        if (p.max_of[i].empty()) f.coatomic = no(ctx.lattice().name(pts[i]) + " has no maximal point above it");
    }
    if (!f.atomic.holds || !f.coatomic.holds) throw InternalInconsistency("finite X must be atomic and coatomic");

    if (p.max_x.size() == 1) {
        f.local = yes("coatomic with a single maximal point");
        f.local.witness.sets.emplace_back("Max", ctx.names_of(p.max_x));
    } else {
        f.local = no("Max(X) has " + std::to_string(p.max_x.size()) + " points");
        f.local.witness.sets.emplace_back("Max", ctx.names_of(p.max_x));
    }
    if (p.min_x.size() == 1) {
        f.colocal = yes("atomic with a single minimal point");
        f.colocal.witness.sets.emplace_back("Min", ctx.names_of(p.min_x));
    } else {
        f.colocal = no("Min(X) has " + std::to_string(p.min_x.size()) + " points");
        f.colocal.witness.sets.emplace_back("Min", ctx.names_of(p.min_x));
    }
    return f;
}

PmProperties pm_properties(const XTopContext& ctx) {
    const auto p = max_min_profile(ctx);
    const auto& lat = ctx.lattice();
    const auto& pts = ctx.points();
    PmProperties r;
    r.pm = yes("every point lies below exactly one maximal point");
    r.m = yes("every point lies above exactly one minimal point");
    r.jacobson = yes("every point is the meet of the maximal points above it");
    r.dual_jacobson = yes("every point is the join of the minimal points below it");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string& x = lat.name(pts[i]);
        if (r.pm.holds && p.max_of[i].size() != 1) {
            r.pm = no("Max(" + x + ";X) has " + std::to_string(p.max_of[i].size()) + " elements");
            r.pm.witness.sets.emplace_back("Max(" + x + ";X)", ctx.names_of(p.max_of[i]));
        }
        if (r.m.holds && p.min_of[i].size() != 1) {
            r.m = no("Min(" + x + ";X) has " + std::to_string(p.min_of[i].size()) + " elements");
            r.m.witness.sets.emplace_back("Min(" + x + ";X)", ctx.names_of(p.min_of[i]));
        }
        if (r.jacobson.holds && lat.meet_of(p.max_of[i]) != pts[i]) {
            r.jacobson = no(x + " differs from the meet " + lat.name(lat.meet_of(p.max_of[i])) + " of Max(" + x + ";X)");
            r.jacobson.witness.sets.emplace_back("Max(" + x + ";X)", ctx.names_of(p.max_of[i]));
        }
        if (r.dual_jacobson.holds && lat.join_of(p.min_of[i]) != pts[i]) {
            r.dual_jacobson = no(x + " differs from the join " + lat.name(lat.join_of(p.min_of[i])) + " of Min(" + x + ";X)");
            r.dual_jacobson.witness.sets.emplace_back("Min(" + x + ";X)", ctx.names_of(p.min_of[i]));
        }
    }
    return r;
}

namespace {

bool continuous_into_max(const FiniteSpace& space, Subset max_points, const std::vector<std::size_t>& map_points) {
    // Closed sets of the subspace Max(X) are C & Max for closed C.
    for (Subset c : space.closed_sets()) {
        const Subset target = c & max_points;
        Subset preimage;
        for (std::size_t i = 0; i < map_points.size(); ++i)
            if (target.contains(map_points[i])) preimage.insert(i);
        if (!space.is_closed(preimage)) return false;
    }
    return true;
}

}  // namespace

RetractionResult find_retraction(const XTopContext& ctx, const Limits& limits) {
    const FiniteSpace space = generate_space(ctx);
    const auto profile = max_min_profile(ctx);
    const Subset max_points = ctx.to_points(profile.max_x);
    const std::size_t n = space.size();
    RetractionResult r;

    auto to_result = [&](const std::vector<std::size_t>& map_points) {
        Retraction ret;
        for (std::size_t m : map_points) ret.map.push_back(ctx.points()[m]);
        return ret;
    };

    // Send each point to its unique maximal point when there is one.
    bool pm = true;
    std::vector<std::size_t> candidate(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Subset above = ctx.to_points(profile.max_of[i]);
        if (above.size() != 1) pm = false;
        else candidate[i] = above.front();
    }
    if (pm) {
        ++r.candidates_examined;
        if (continuous_into_max(space, max_points, candidate)) {
            r.retraction = to_result(candidate);
            r.from_pm_construction = true;
            return r;
        }
    }

    const std::vector<std::size_t> free_points = (space.all() - max_points).indices();
    const std::vector<std::size_t> targets = max_points.indices();
    double total = 1;
    for (std::size_t k = 0; k < free_points.size(); ++k) {
        total *= static_cast<double>(targets.size());
        if (total > static_cast<double>(limits.max_retraction_candidates))
            throw SizeLimitExceeded("retraction search", static_cast<std::size_t>(total), limits.max_retraction_candidates);
    }

    std::vector<std::size_t> map(n, 0);
    for (std::size_t m : targets) map[m] = m;
    std::vector<std::size_t> digits(free_points.size(), 0);
    while (true) {
        for (std::size_t k = 0; k < free_points.size(); ++k) map[free_points[k]] = targets[digits[k]];
        ++r.candidates_examined;
        if (continuous_into_max(space, max_points, map)) {
            r.retraction = to_result(map);
            return r;
        }
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == targets.size()) digits[k++] = 0;
        if (k == digits.size()) break;
    }

    // Explain the failure: a continuous retraction is constant on each point closure.
    for (std::size_t i = 0; i < n; ++i) {
        const Subset above = ctx.to_points(profile.max_of[i]);
        if (above.size() >= 2) {
            const std::string x = ctx.lattice().name(ctx.points()[i]);
            r.obstruction.note = "a continuous retraction is constant on V(" + x + "), which contains several maximal points";
            r.obstruction.sets.emplace_back("V(" + x + ")", space.names_of(space.point_closure(i)));
            r.obstruction.sets.emplace_back("Max(" + x + ";X)", space.names_of(above));
            return r;
        }
    }
    r.obstruction.note = "no Max-fixing map is continuous";
    return r;
}

TreeDecomposition tree_analysis(const XTopContext& ctx) {
    const auto& order = ctx.lattice().order();
    const Subset x = ctx.x_set();
    auto less = [&](std::size_t a, std::size_t b) { return a != b && order.leq(a, b); };
    auto comparable = [&](std::size_t a, std::size_t b) { return order.leq(a, b) || order.leq(b, a); };

    TreeDecomposition t;
    Subset seen;
    for (std::size_t start : x) {
        if (seen.contains(start)) continue;
        Subset comp = Subset::single(start);
        Subset frontier = comp;
        while (!frontier.empty()) {
            Subset next;
            for (std::size_t a : frontier) next |= (order.up_set(a) | order.down_set(a)) & x;
            frontier = next - comp;
            comp |= next;
        }
        seen |= comp;

        TreeComponent c{comp, comp.front(), true};
        for (std::size_t a : comp) {
            for (std::size_t b : comp) {
                if (a >= b || comparable(a, b)) continue;
                bool bounded = false;
                for (std::size_t z : comp) bounded = bounded || (less(a, z) && less(b, z));
                if (!bounded) c.wedge_tree = false;
            }
            for (std::size_t y : comp)
                for (std::size_t z : comp)
                    if (less(a, y) && less(a, z) && !comparable(y, z)) c.wedge_tree = false;
        }
        for (std::size_t a : comp)
            if ((order.up_set(a) & comp) == Subset::single(a)) {
                c.apex = a;
                break;
            }
        t.components.push_back(c);
    }

    t.wedge_forest = true;
    for (const auto& c : t.components) t.wedge_forest = t.wedge_forest && c.wedge_tree;

    t.strongly_disjoint = true;
    for (std::size_t i = 0; i < t.components.size(); ++i) {
        for (std::size_t j = i + 1; j < t.components.size(); ++j) {
            const auto v = strongly_disjoint(ctx, t.components[i].elements, t.components[j].elements);
            if (!v.holds && t.strongly_disjoint) {
                t.strongly_disjoint = false;
                t.witness.note = "components are not strongly disjoint";
                t.witness.sets.emplace_back("T1", ctx.names_of(t.components[i].elements));
                t.witness.sets.emplace_back("T2", ctx.names_of(t.components[j].elements));
                t.witness.sets.insert(t.witness.sets.end(), v.witness.sets.begin(), v.witness.sets.end());
            }
        }
    }

    for (std::size_t m : x) {
        for (std::size_t y : x) {
            for (std::size_t z : x) {
                if (!t.vee && y < z && less(m, y) && less(m, z) && !comparable(y, z)) t.vee = std::array{m, y, z};
            }
        }
    }

    if (t.vee) {
        t.kind = TreeKind::vee_tree_found;
        if (t.witness.note.empty()) {
            t.witness.note = "V2 pattern: one point below two incomparable points";
            t.witness.sets.emplace_back("V", ctx.names_of(Subset::single((*t.vee)[0]) | Subset::single((*t.vee)[1]) |
                                                          Subset::single((*t.vee)[2])));
        }
    } else if (t.wedge_forest) {
        t.kind = TreeKind::wedge_forest;
        if (t.witness.note.empty()) t.witness.note = "disjoint union of wedge trees";
    } else {
        t.kind = TreeKind::neither;
        if (t.witness.note.empty()) t.witness.note = "a component violates the wedge-tree clauses";
    }
    return t;
}

}  // namespace spectop
