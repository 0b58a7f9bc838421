#include "spectop/errors.hpp"
#include "spectop/order_structures.hpp"

namespace spectop {

InstanceFacts instance_facts(const XTopContext& ctx, const Limits& limits) {
    FiniteSpace space = generate_space(ctx);
    SeparationReport separation = separation_report(space, limits);
    InstanceFacts f{std::move(space), std::move(separation), max_min_profile(ctx), structure_flags(ctx),
                    pm_properties(ctx), {}, false, tree_analysis(ctx), true};
    try {
        f.retraction = find_retraction(ctx, limits);
        f.retraction_decided = true;
    } catch (const SizeLimitExceeded& e) {
        f.retraction.obstruction.note = e.what();
    }
    for (std::size_t x : ctx.x_set())
        if (!is_strongly_irreducible(ctx, x, ctx.x_set(), true).holds) f.completely_strongly_x_irreducible = false;
    return f;
}

std::vector<ImplicationCheck> theorem_deciders(const XTopContext& ctx, const InstanceFacts& f) {
    (void)ctx;
    const auto& s = f.separation;
    const bool atomic = f.flags.atomic.holds, coatomic = f.flags.coatomic.holds;
    const bool local = f.flags.local.holds, colocal = f.flags.colocal.holds;
    const bool normal = s.normal.holds, pm = f.pm.pm.holds;
    const bool retract = f.retraction.retraction.has_value();
    const bool uc = s.ultraconnected.holds;
    const bool dim0 = s.krull_dim == 0;
    const bool qh = s.quasi_hausdorff.holds;

    std::vector<ImplicationCheck> out;
    auto implies = [&](std::string name, bool hyp, bool concl) {
        out.push_back({std::move(name), hyp, concl, !hyp || concl});
    };
    auto all_equal = [](std::initializer_list<bool> xs) {
        for (bool x : xs)
            if (x != *xs.begin()) return false;
        return true;
    };

    implies("coatomic and normal implies pm-property", coatomic && normal, pm);
    if (f.retraction_decided) {
        implies("coatomic and max-retractable implies pm-property", coatomic && retract, pm);
        implies("pm-property with complete strong X-irreducibility gives a retraction",
                coatomic && f.completely_strongly_x_irreducible && pm, retract);
        implies("finite X: normal, pm-property and max-retractable coincide", true, all_equal({normal, pm, retract}));
    }
    implies("atomic, coatomic, finite Min: normal iff pm-property", atomic && coatomic, normal == pm);
    implies("local implies ultraconnected", local, uc);
    implies("ultraconnected implies normal", uc, normal);
    implies("colocal, coatomic and normal implies local", colocal && coatomic && normal, local);
    implies("colocal and coatomic: local, ultraconnected and normal coincide", colocal && coatomic,
            all_equal({local, uc, normal}));
    implies("strongly disjoint wedge forest implies completely normal",
            f.trees.wedge_forest && f.trees.strongly_disjoint, s.completely_normal.holds);
    implies("completely normal implies no vee tree with two maximal points", s.completely_normal.holds,
            !f.trees.vee.has_value());
    implies("perfectly normal implies Krull dimension 0", s.perfectly_normal.holds, dim0);
    implies("T6 iff perfectly normal", true, s.t6.holds == s.perfectly_normal.holds);
    implies("T1 iff Krull dimension 0", true, s.t1.holds == dim0);
    implies("T2 iff Krull dimension 0 and quasi-Hausdorff", true, s.t2.holds == (dim0 && qh));
    implies("T1/4 iff Krull dimension at most 1", true, s.t_quarter.holds == (s.krull_dim <= 1));
    implies("X is T0 and spectral", true, s.t0.holds && s.spectral.holds);
    implies("regular iff T3", true, s.regular.holds == s.t3.holds);
    implies("completely regular iff T3.5", true, s.completely_regular.holds == s.t3_half.holds);
    implies("regular, T3, T2.5, T2, T4, T3.5, T1 with quasi-Hausdorff, dimension 0 with quasi-Hausdorff coincide",
            true,
            all_equal({s.regular.holds, s.t3.holds, s.t2_half.holds, s.t2.holds, s.t4.holds, s.t3_half.holds,
                       s.t1.holds && qh, dim0 && qh}));
    implies("coatomic: regular iff normal and Jacobson", coatomic,
            s.regular.holds == (normal && f.pm.jacobson.holds));
    implies("Stone iff spectral with T2, regular, T3, T4, T3.5, dimension 0, Jacobson and pm, or dual Jacobson and m",
            s.spectral.holds,
            all_equal({s.stone.holds, s.t2.holds, s.regular.holds, s.t3.holds, s.t4.holds, s.t3_half.holds, dim0,
                       f.pm.jacobson.holds && normal, f.pm.jacobson.holds && pm,
                       f.pm.dual_jacobson.holds && f.pm.m.holds}));
    implies("extremely non-Hausdorff iff at least two points and hyperconnected", true,
            s.extremely_non_hausdorff.holds == (f.space.size() >= 2 && s.hyperconnected.holds));
    implies("hyperconnected with a regular task implies extremely non-regular",
            s.hyperconnected.holds && s.regular_tasks > 0, s.extremely_non_regular.holds);
    implies("extremely non-regular with a normal task implies extremely non-normal",
            s.extremely_non_regular.holds && s.normal_tasks > 0, s.extremely_non_normal.holds);
    implies("T0 and regular implies T1", s.t0.holds && s.regular.holds, s.t1.holds);
    implies("T0 and completely regular implies T1", s.t0.holds && s.completely_regular.holds, s.t1.holds);
    implies("T0 and perfectly normal implies T1", s.t0.holds && s.perfectly_normal.holds, s.t1.holds);
    implies("perfectly normal implies completely regular and completely normal", s.perfectly_normal.holds,
            s.completely_regular.holds && s.completely_normal.holds);
    implies("completely regular implies regular", s.completely_regular.holds, s.regular.holds);
    implies("completely normal implies normal", s.completely_normal.holds, normal);
    implies("anti-Hausdorff iff the order on X is total", true,
            s.anti_hausdorff.holds == (f.trees.components.size() == 1 && [&] {
                for (std::size_t a = 0; a < f.space.size(); ++a)
                    for (std::size_t b = 0; b < f.space.size(); ++b)
                        if (!f.space.point_closure(a).contains(b) && !f.space.point_closure(b).contains(a)) return false;
                return true;
            }()));

    const bool chain[] = {s.t6.holds, s.t5.holds, s.t4.holds, s.t3_half.holds, s.t3.holds, s.t2.holds,
                          s.t1.holds, s.t_three_quarter.holds, s.t_half.holds, s.t_quarter.holds, s.t0.holds};
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < std::size(chain); ++i) monotone = monotone && (!chain[i] || chain[i + 1]);
    implies("T6 => T5 => T4 => T3.5 => T3 => T2 => T1 => T3/4 => T1/2 => T1/4 => T0", true, monotone);
    implies("T3 => T2.5 => T2", true, (!s.t3.holds || s.t2_half.holds) && (!s.t2_half.holds || s.t2.holds));
    return out;
}

std::vector<ImplicationCheck> theorem_deciders(const XTopContext& ctx, const Limits& limits) {
    return theorem_deciders(ctx, instance_facts(ctx, limits));
}

}  // namespace spectop
