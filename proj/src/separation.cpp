#include <algorithm>
#include <functional>

#include "spectop/errors.hpp"
#include "spectop/topology.hpp"

namespace spectop {

namespace {

Verdict yes(std::string note = {}) { return Verdict{true, Witness{std::move(note), {}}}; }
Verdict no(std::string note = {}) { return Verdict{false, Witness{std::move(note), {}}}; }

Verdict& with(Verdict& v, const FiniteSpace& s, const std::string& label, Subset set) {
    v.witness.sets.emplace_back(label, s.names_of(set));
    return v;
}

// Point-level tests used inside subspace enumeration. Restricting to y gives
// Ker_y(p) = Ker(p) & y and cl_y(p) = cl(p) & y.
bool normal_on(const FiniteSpace& s, Subset y) {
    for (std::size_t c : y)
        for (std::size_t d : y)
            if (c < d && (s.point_closure(c) & s.point_closure(d) & y).empty() &&
                !(s.point_kernel(c) & s.point_kernel(d) & y).empty())
                return false;
    return true;
}

bool regular_on(const FiniteSpace& s, Subset y) {
    for (std::size_t p : y)
        for (std::size_t c : y)
            if (!s.point_closure(c).contains(p) && !(s.point_kernel(c) & s.point_kernel(p) & y).empty())
                return false;
    return true;
}

bool t2_on(const FiniteSpace& s, Subset y) {
    for (std::size_t a : y)
        for (std::size_t b : y)
            if (a < b && !(s.point_kernel(a) & s.point_kernel(b) & y).empty()) return false;
    return true;
}

// Smallest clopen set containing c.
Subset clopen_hull(const FiniteSpace& s, Subset c) {
    Subset u = c;
    while (true) {
        Subset next = s.closure(s.kernel(u));
        if (next == u) return u;
        u = next;
    }
}

void check_subspace_limit(const FiniteSpace& s, const Limits& limits, const char* what) {
    if (s.size() > limits.max_subspace_points) throw SizeLimitExceeded(what, s.size(), limits.max_subspace_points);
}

std::string pair_note(const FiniteSpace& s, std::size_t a, std::size_t b) {
    return "points " + s.name(a) + " and " + s.name(b);
}

}  // namespace

std::string to_string(TLevel level) {
    switch (level) {
        case TLevel::none: return "none";
        case TLevel::t0: return "T0";
        case TLevel::t_quarter: return "T1/4";
        case TLevel::t_half: return "T1/2";
        case TLevel::t_three_quarter: return "T3/4";
        case TLevel::t1: return "T1";
        case TLevel::t2: return "T2";
        case TLevel::t2_half: return "T2.5";
        case TLevel::t3: return "T3";
        case TLevel::t3_half: return "T3.5";
        case TLevel::t4: return "T4";
        case TLevel::t5: return "T5";
        case TLevel::t6: return "T6";
    }
    return "none";
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::holds: return "holds";
        case FamilyKind::extremely_non: return "extremely_non";
        case FamilyKind::neither: return "neither";
    }
    return "neither";
}

std::vector<PointClass> classify_points(const FiniteSpace& s) {
    std::vector<PointClass> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        PointClass pc;
        pc.point = i;
        const Subset single = Subset::single(i);
        pc.closed = s.is_closed(single);
        pc.isolated = s.is_open(single);
        pc.kernel = s.point_kernel(i);
        pc.kerneled = pc.kernel == single;
        pc.regular_open = s.interior(s.closure(single)) == single;
        if (pc.isolated && !pc.kerneled) throw InternalInconsistency("isolated point " + s.name(i) + " is not kerneled");
        out.push_back(pc);
    }
    return out;
}

FamilyReport regular_family(const FiniteSpace& s) {
    FamilyReport r;
    for (Subset c : s.closed_sets()) {
        if (c.empty() || c == s.all()) continue;
        const Subset kc = s.kernel(c);
        for (std::size_t p : s.all() - c) {
            SeparationTask t{c, Subset::single(p), !kc.intersects(s.point_kernel(p))};
            r.separable_count += t.separable;
            r.tasks.push_back(t);
        }
    }
    const auto failing = std::find_if(r.tasks.begin(), r.tasks.end(), [](const auto& t) { return !t.separable; });
    if (failing == r.tasks.end()) {
        r.holds = yes(r.tasks.empty() ? "no closed set and outside point to separate" : "Ker(C) and Ker(p) disjoint for every task");
    } else {
        r.holds = no("inseparable closed set and point");
        with(r.holds, s, "C", failing->closed);
        with(r.holds, s, "p", failing->other);
    }
    if (!r.tasks.empty() && r.separable_count == 0) {
        r.extremely_non = yes("no task is separable");
        r.kind = FamilyKind::extremely_non;
    } else {
        r.extremely_non = no(r.tasks.empty() ? "no tasks" : "some task is separable");
        if (r.separable_count > 0) {
            const auto ok = std::find_if(r.tasks.begin(), r.tasks.end(), [](const auto& t) { return t.separable; });
            with(r.extremely_non, s, "C", ok->closed);
            with(r.extremely_non, s, "p", ok->other);
            with(r.extremely_non, s, "U", s.kernel(ok->closed));
            with(r.extremely_non, s, "V", s.kernel(ok->other));
        }
        r.kind = r.holds.holds ? FamilyKind::holds : FamilyKind::neither;
    }
    return r;
}

FamilyReport normal_family(const FiniteSpace& s) {
    FamilyReport r;
    const auto& closed = s.closed_sets();
    for (std::size_t i = 0; i < closed.size(); ++i) {
        if (closed[i].empty()) continue;
        for (std::size_t j = i + 1; j < closed.size(); ++j) {
            if (closed[j].empty() || closed[i].intersects(closed[j])) continue;
            SeparationTask t{closed[i], closed[j], !s.kernel(closed[i]).intersects(s.kernel(closed[j]))};
            r.separable_count += t.separable;
            r.tasks.push_back(t);
        }
    }
    const auto failing = std::find_if(r.tasks.begin(), r.tasks.end(), [](const auto& t) { return !t.separable; });
    if (failing == r.tasks.end()) {
        r.holds = yes(r.tasks.empty() ? "no two disjoint nonempty closed sets" : "Ker(C) and Ker(D) disjoint for every pair");
    } else {
        r.holds = no("inseparable disjoint closed sets");
        with(r.holds, s, "C", failing->closed);
        with(r.holds, s, "D", failing->other);
    }
    if (!r.tasks.empty() && r.separable_count == 0) {
        r.extremely_non = yes("no pair is separable");
        r.kind = FamilyKind::extremely_non;
    } else {
        r.extremely_non = no(r.tasks.empty() ? "no pairs" : "some pair is separable");
        if (r.separable_count > 0) {
            const auto ok = std::find_if(r.tasks.begin(), r.tasks.end(), [](const auto& t) { return t.separable; });
            with(r.extremely_non, s, "C", ok->closed);
            with(r.extremely_non, s, "D", ok->other);
            with(r.extremely_non, s, "U", s.kernel(ok->closed));
            with(r.extremely_non, s, "V", s.kernel(ok->other));
        }
        r.kind = r.holds.holds ? FamilyKind::holds : FamilyKind::neither;
    }
    return r;
}

// A continuous map to the reals has clopen fibres on a finite space, and any clopen
// partition with distinct values is continuous, so (C,p) is functionally separable
// iff some clopen set contains C and misses p.
Verdict completely_regular(const FiniteSpace& s) {
    for (Subset c : s.closed_sets()) {
        if (c.empty() || c == s.all()) continue;
        const Subset hull = clopen_hull(s, c);
        for (std::size_t p : s.all() - c) {
            if (hull.contains(p)) {
                Verdict v = no("every clopen set containing C contains p");
                with(v, s, "C", c);
                with(v, s, "p", Subset::single(p));
                return v;
            }
        }
    }
    return yes("each closed C lies in a clopen set missing every point outside C");
}

CompletelyNormalReport completely_normal(const FiniteSpace& s, const Limits& limits) {
    CompletelyNormalReport r;

    // Route (ii). A separated pair (A,B) fails iff some a in A, b in B have meeting
    // kernels, and ({a},{b}) is then itself separated; so singleton pairs decide it.
    std::optional<std::pair<std::size_t, std::size_t>> bad_pair;
    for (std::size_t a = 0; a < s.size() && !bad_pair; ++a)
        for (std::size_t b = a + 1; b < s.size() && !bad_pair; ++b)
            if (!s.point_closure(a).contains(b) && !s.point_closure(b).contains(a) &&
                s.point_kernel(a).intersects(s.point_kernel(b)))
                bad_pair = std::pair{a, b};
    r.separated_pairs_route = !bad_pair;

    // Route (i): every subspace normal.
    std::optional<Subset> bad_subspace;
    if (s.size() <= limits.max_subspace_points) {
        for_each_subset(s.all(), [&](Subset y) {
            if (!bad_subspace && y.size() >= 2 && !normal_on(s, y)) bad_subspace = y;
        });
        r.subspace_route = !bad_subspace;
        if (*r.subspace_route != r.separated_pairs_route)
            throw InternalInconsistency("completely normal: subspace route and separated-pairs route disagree");
    }

    if (r.separated_pairs_route) {
        r.verdict = yes(r.subspace_route ? "every subspace normal; every separated pair separable"
                                         : "every separated pair separable");
    } else {
        r.verdict = no("separated sets without disjoint open neighbourhoods");
        with(r.verdict, s, "A", Subset::single(bad_pair->first));
        with(r.verdict, s, "B", Subset::single(bad_pair->second));
        if (bad_subspace) with(r.verdict, s, "non-normal subspace", *bad_subspace);
    }
    return r;
}

Verdict g_delta_space(const FiniteSpace& s) {
    // A countable intersection of opens in a finite space is open.
    for (Subset c : s.closed_sets()) {
        if (!s.is_open(c)) {
            Verdict v = no("closed set that is not a G-delta (not open)");
            return with(v, s, "C", c);
        }
    }
    return yes("every closed set is open");
}

PerfectlyNormalReport perfectly_normal(const FiniteSpace& s) {
    PerfectlyNormalReport r;
    // Route (i): every pair (C,D) of disjoint closed sets, empty ones included, needs
    // a map with f^-1(0) = C and f^-1(1) = D; on a finite space that means C and D are
    // clopen. Pairs (C, empty) make this "every closed set is clopen".
    std::optional<Subset> bad;
    const auto& closed = s.closed_sets();
    for (std::size_t i = 0; i < closed.size() && !bad; ++i) {
        for (std::size_t j = 0; j < closed.size() && !bad; ++j) {
            if (closed[i].intersects(closed[j])) continue;
            if (!s.is_open(closed[i])) bad = closed[i];
            else if (!s.is_open(closed[j])) bad = closed[j];
        }
    }
    r.clopen_route = !bad;
    r.vedenissoff_route = normal_family(s).holds.holds && g_delta_space(s).holds;
    if (r.clopen_route != r.vedenissoff_route)
        throw InternalInconsistency("perfectly normal: clopen route and Vedenissoff route disagree");
    if (r.clopen_route) {
        r.verdict = yes("every closed set is clopen");
    } else {
        r.verdict = no("closed set that is not open");
        with(r.verdict, s, "C", *bad);
    }
    return r;
}

HausdorffReport t2_and_quasi(const FiniteSpace& s, const Limits& limits) {
    HausdorffReport r;
    const std::size_t n = s.size();

    r.t2 = yes("point kernels pairwise disjoint");
    for (std::size_t a = 0; a < n && r.t2.holds; ++a)
        for (std::size_t b = a + 1; b < n && r.t2.holds; ++b)
            if (s.point_kernel(a).intersects(s.point_kernel(b))) r.t2 = no(pair_note(s, a, b) + " have no disjoint neighbourhoods");
    if (r.t2.holds)
        for (std::size_t a = 0; a < n; ++a) with(r.t2, s, "Ker(" + s.name(a) + ")", s.point_kernel(a));

    r.quasi_hausdorff = yes("each pair is separated or lies in one point closure");
    for (std::size_t a = 0; a < n && r.quasi_hausdorff.holds; ++a) {
        for (std::size_t b = a + 1; b < n && r.quasi_hausdorff.holds; ++b) {
            if (!s.point_kernel(a).intersects(s.point_kernel(b))) continue;
            bool common = false;
            for (std::size_t z = 0; z < n; ++z)
                common = common || (s.point_closure(z).contains(a) && s.point_closure(z).contains(b));
            if (!common) r.quasi_hausdorff = no(pair_note(s, a, b) + " neither separated nor in a common point closure");
        }
    }

    // Separable pairs of distinct points.
    std::optional<std::pair<std::size_t, std::size_t>> separable;
    for (std::size_t a = 0; a < n && !separable; ++a)
        for (std::size_t b = a + 1; b < n && !separable; ++b)
            if (!s.point_kernel(a).intersects(s.point_kernel(b))) separable = std::pair{a, b};
    if (n >= 2 && !separable) {
        r.extremely_non_hausdorff = yes("no two distinct points are separated");
    } else {
        r.extremely_non_hausdorff = no(n < 2 ? "fewer than two points" : pair_note(s, separable->first, separable->second) + " are separated");
        if (separable) {
            with(r.extremely_non_hausdorff, s, "U", s.point_kernel(separable->first));
            with(r.extremely_non_hausdorff, s, "V", s.point_kernel(separable->second));
        }
    }

    // Anti-Hausdorff: total specialization preorder, cross-checked by subspace enumeration.
    std::optional<std::pair<std::size_t, std::size_t>> incomparable;
    for (std::size_t a = 0; a < n && !incomparable; ++a)
        for (std::size_t b = a + 1; b < n && !incomparable; ++b)
            if (!s.point_closure(a).contains(b) && !s.point_closure(b).contains(a)) incomparable = std::pair{a, b};
    const bool total = !incomparable;
    if (n <= limits.max_subspace_points) {
        bool enumerated = true;
        for_each_subset(s.all(), [&](Subset y) {
            if (y.size() >= 2 && t2_on(s, y)) enumerated = false;
        });
        if (enumerated != total)
            throw InternalInconsistency("anti-Hausdorff: total-order criterion and subspace enumeration disagree");
    }
    if (total) {
        r.anti_hausdorff = yes("specialization order is total");
    } else {
        r.anti_hausdorff = no("two-point Hausdorff subspace");
        with(r.anti_hausdorff, s, "Y", Subset::single(incomparable->first) | Subset::single(incomparable->second));
    }
    return r;
}

ConnectivityReport connectivity(const FiniteSpace& s) {
    ConnectivityReport r;
    r.connected = yes("only the trivial clopen sets");
    for (Subset c : s.closed_sets()) {
        if (!c.empty() && c != s.all() && s.is_open(c)) {
            r.connected = no("nontrivial clopen set");
            with(r.connected, s, "U", c);
            break;
        }
    }
    // Two nonempty disjoint opens exist iff two point kernels are disjoint; dually for closeds.
    const std::size_t n = s.size();
    r.hyperconnected = yes("no two nonempty open sets are disjoint");
    r.ultraconnected = yes("no two nonempty closed sets are disjoint");
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (r.hyperconnected.holds && !s.point_kernel(a).intersects(s.point_kernel(b))) {
                r.hyperconnected = no("disjoint nonempty open sets");
                with(r.hyperconnected, s, "U", s.point_kernel(a));
                with(r.hyperconnected, s, "V", s.point_kernel(b));
            }
            if (r.ultraconnected.holds && !s.point_closure(a).intersects(s.point_closure(b))) {
                r.ultraconnected = no("disjoint nonempty closed sets");
                with(r.ultraconnected, s, "C", s.point_closure(a));
                with(r.ultraconnected, s, "D", s.point_closure(b));
            }
        }
    }
    return r;
}

std::vector<Subset> specialization(const FiniteSpace& s) {
    std::vector<Subset> rows;
    for (std::size_t i = 0; i < s.size(); ++i) rows.push_back(s.point_closure(i));
    return rows;
}

SoberReport sober_spectral_stone(const FiniteSpace& s) {
    SoberReport r;
    r.sober = yes("every irreducible closed set has a unique generic point");
    for (Subset c : s.closed_sets()) {
        if (c.empty()) continue;
        // Every proper closed subset of c is a union of point closures inside c, so c is
        // reducible iff the proper point closures inside it cover it.
        Subset proper;
        Subset generic;
        for (std::size_t y : c) {
            if (s.point_closure(y) == c) generic.insert(y);
            else proper |= s.point_closure(y);
        }
        const bool irreducible = proper != c;
        if (irreducible && generic.size() != 1) {
            r.sober = no(generic.empty() ? "irreducible closed set without generic point"
                                         : "irreducible closed set with several generic points");
            with(r.sober, s, "C", c);
            if (!generic.empty()) with(r.sober, s, "generic", generic);
            break;
        }
    }

    std::optional<std::pair<std::size_t, std::size_t>> twins;
    for (std::size_t a = 0; a < s.size() && !twins; ++a)
        for (std::size_t b = a + 1; b < s.size() && !twins; ++b)
            if (s.point_closure(a) == s.point_closure(b)) twins = std::pair{a, b};
    const bool t0 = !twins;
    // Finite spaces always have a base of compact opens closed under intersection and are
    // quasi-compact, so spectral reduces to sober.
    if (t0 != r.sober.holds) throw InternalInconsistency("finite space: T0 and sober disagree");
    r.spectral = t0 ? yes("finite T0 space") : no(pair_note(s, twins->first, twins->second) + " have the same closure");

    if (!t0) {
        r.stone = no("not T0");
    } else {
        r.stone = yes("every point kernel is clopen");
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (!s.is_closed(s.point_kernel(i))) {
                r.stone = no("smallest open neighbourhood of " + s.name(i) + " is not clopen, so no clopen base");
                with(r.stone, s, "Ker", s.point_kernel(i));
                break;
            }
        }
    }
    return r;
}

std::size_t krull_dim(const FiniteSpace& s) {
    const std::size_t n = s.size();
    std::vector<std::size_t> height(n, 0);
    std::vector<bool> done(n, false);
    // Longest strict chain ending at i, following x ~> y with y not ~> x.
    std::function<std::size_t(std::size_t)> ht = [&](std::size_t i) -> std::size_t {
        if (done[i]) return height[i];
        std::size_t best = 0;
        for (std::size_t x = 0; x < n; ++x)
            if (x != i && s.point_closure(x).contains(i) && !s.point_closure(i).contains(x)) best = std::max(best, ht(x) + 1);
        done[i] = true;
        return height[i] = best;
    };
    std::size_t dim = 0;
    for (std::size_t i = 0; i < n; ++i) dim = std::max(dim, ht(i));
    return dim;
}

Verdict anti_regular(const FiniteSpace& s, const Limits& limits) {
    check_subspace_limit(s, limits, "anti-regular subspace enumeration");
    std::optional<Subset> bad;
    for_each_subset(s.all(), [&](Subset y) {
        if (!bad && y.size() >= 2 && regular_on(s, y)) bad = y;
    });
    if (!bad) return yes("no regular subspace with more than one point");
    Verdict v = no("regular subspace with more than one point");
    return with(v, s, "Y", *bad);
}

Verdict anti_normal(const FiniteSpace& s, const Limits& limits) {
    check_subspace_limit(s, limits, "anti-normal subspace enumeration");
    std::optional<Subset> bad;
    for_each_subset(s.all(), [&](Subset y) {
        if (!bad && y.size() >= 3 && normal_on(s, y)) bad = y;
    });
    if (!bad) return yes("no normal subspace with more than two points");
    Verdict v = no("normal subspace with more than two points");
    return with(v, s, "Y", *bad);
}

TLevel t_level(const FiniteSpace& s) {
    return separation_report(s, Limits{.max_subspace_points = 0}).level;
}

SeparationReport separation_report(const FiniteSpace& s, const Limits& limits) {
    SeparationReport r;
    const auto points = classify_points(s);
    const auto sober = sober_spectral_stone(s);
    r.sober = sober.sober;
    r.spectral = sober.spectral;
    r.stone = sober.stone;
    r.t0 = r.spectral.holds ? yes("distinct points have distinct closures") : no(r.spectral.witness.note);

    auto cover = [&](auto pred, const std::string& what) {
        for (const auto& pc : points) {
            if (!pc.closed && !pred(pc)) {
                Verdict v = no(s.name(pc.point) + " is neither closed nor " + what);
                return v;
            }
        }
        return yes("every point is closed or " + what);
    };
    r.t_quarter = cover([](const PointClass& pc) { return pc.kerneled; }, "kerneled");
    r.t_half = cover([](const PointClass& pc) { return pc.isolated; }, "isolated");
    r.t_three_quarter = cover([](const PointClass& pc) { return pc.regular_open; }, "regular open");
    r.t1 = yes("every point is closed");
    for (const auto& pc : points) {
        if (!pc.closed) {
            r.t1 = no(s.name(pc.point) + " is not closed");
            with(r.t1, s, "cl", s.point_closure(pc.point));
            break;
        }
    }

    const auto h = t2_and_quasi(s, limits);
    r.t2 = h.t2;
    r.quasi_hausdorff = h.quasi_hausdorff;
    r.extremely_non_hausdorff = h.extremely_non_hausdorff;
    r.anti_hausdorff = h.anti_hausdorff;

    r.t2_half = yes("closed neighbourhoods cl(Ker(x)) pairwise disjoint");
    for (std::size_t a = 0; a < s.size() && r.t2_half.holds; ++a)
        for (std::size_t b = a + 1; b < s.size() && r.t2_half.holds; ++b)
            if (s.closure(s.point_kernel(a)).intersects(s.closure(s.point_kernel(b))))
                r.t2_half = no(pair_note(s, a, b) + " have no disjoint closed neighbourhoods");

    const auto reg = regular_family(s);
    r.regular = reg.holds;
    r.extremely_non_regular = reg.extremely_non;
    r.regular_tasks = reg.tasks.size();
    r.regular_separable = reg.separable_count;
    r.completely_regular = completely_regular(s);

    const auto nor = normal_family(s);
    r.normal = nor.holds;
    r.extremely_non_normal = nor.extremely_non;
    r.normal_tasks = nor.tasks.size();
    r.normal_separable = nor.separable_count;

    const auto cn = completely_normal(s, limits);
    r.completely_normal = cn.verdict;
    r.cn_subspace_route = cn.subspace_route;
    r.cn_separated_pairs_route = cn.separated_pairs_route;

    const auto pn = perfectly_normal(s);
    r.perfectly_normal = pn.verdict;
    r.pn_clopen_route = pn.clopen_route;
    r.pn_vedenissoff_route = pn.vedenissoff_route;
    r.g_delta_space = g_delta_space(s);

    auto both = [](const Verdict& a, const Verdict& b) {
        if (!a.holds) return a;
        if (!b.holds) return b;
        return yes("T1 and " + b.witness.note);
    };
    r.t3 = both(r.t1, r.regular);
    r.t3_half = both(r.t1, r.completely_regular);
    r.t4 = both(r.t1, r.normal);
    r.t5 = both(r.t1, r.completely_normal);
    r.t6 = both(r.t1, r.perfectly_normal);

    if (s.size() <= limits.max_subspace_points) {
        r.anti_regular = anti_regular(s, limits);
        r.anti_normal = anti_normal(s, limits);
    }

    const auto conn = connectivity(s);
    r.connected = conn.connected;
    r.hyperconnected = conn.hyperconnected;
    r.ultraconnected = conn.ultraconnected;
    r.krull_dim = krull_dim(s);

    const std::pair<TLevel, const Verdict*> chain[] = {
        {TLevel::t6, &r.t6}, {TLevel::t5, &r.t5}, {TLevel::t4, &r.t4}, {TLevel::t3_half, &r.t3_half},
        {TLevel::t3, &r.t3}, {TLevel::t2_half, &r.t2_half}, {TLevel::t2, &r.t2}, {TLevel::t1, &r.t1},
        {TLevel::t_three_quarter, &r.t_three_quarter}, {TLevel::t_half, &r.t_half},
        {TLevel::t_quarter, &r.t_quarter}, {TLevel::t0, &r.t0},
    };
    for (const auto& [level, v] : chain) {
        if (v->holds) {
            r.level = level;
            break;
        }
    }
    return r;
}

}  // namespace spectop
