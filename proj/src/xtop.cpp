#include "spectop/xtop.hpp"

#include <algorithm>
#include <map>

#include "spectop/errors.hpp"

namespace spectop {

XTopContext::XTopContext(std::shared_ptr<const BoundedLattice> lattice, Subset x)
    : lattice_(std::move(lattice)), x_(x) {
    const auto& lat = *lattice_;
    if (x_.empty()) throw EmptySubset("X must be nonempty");
    if (!x_.is_subset_of(lat.order().all())) throw InvalidXSet("X mentions an element outside the lattice");
    if (x_.contains(lat.top())) throw InvalidXSet("X must not contain the top element '" + lat.name(lat.top()) + "'");

    point_of_.assign(lat.size(), lat.size());
    for (std::size_t e : x_) {
        point_of_[e] = points_.size();
        points_.push_back(e);
    }

    std::map<std::uint64_t, Subset> by_variety;
    for (std::size_t a = 0; a < lat.size(); ++a) {
        if (a != lat.top() && radical(a) == a) cx_.insert(a);
        by_variety[variety(a).bits()].insert(a);
    }
    for (std::size_t e : x_)
        if (!cx_.contains(e)) throw InternalInconsistency(lat.name(e) + " is in X but not radical-fixed");
    for (const auto& [bits, witnesses] : by_variety) closed_.push_back({Subset{bits}, witnesses});
    std::sort(closed_.begin(), closed_.end(),
              [](const ClosedSet& a, const ClosedSet& b) { return canonical_less(a.members, b.members); });
}

XTopContext::XTopContext(const BoundedLattice& lattice, const std::vector<std::string>& x)
    : XTopContext(std::make_shared<const BoundedLattice>(lattice), lattice.order().subset_of(x)) {}

Subset XTopContext::to_points(Subset elements) const {
    Subset out;
    for (std::size_t e : elements & x_) out.insert(point_of_[e]);
    return out;
}

Subset XTopContext::to_elements(Subset points) const {
    Subset out;
    for (std::size_t p : points) out.insert(points_.at(p));
    return out;
}

Subset variety(const XTopContext& ctx, std::string_view a) { return ctx.variety(ctx.element(a)); }
Subset under_set(const XTopContext& ctx, std::string_view a) { return ctx.under_set(ctx.element(a)); }
std::size_t radical(const XTopContext& ctx, std::string_view a) { return ctx.radical(ctx.element(a)); }
Subset cx_set(const XTopContext& ctx) { return ctx.cx(); }

namespace {

constexpr std::size_t exhaustive_limit = 16;

}  // namespace

Verdict is_strongly_irreducible(const XTopContext& ctx, std::size_t q, Subset b, bool complete) {
    const auto& lat = ctx.lattice();
    if (q >= lat.size()) throw UnknownElement(std::to_string(q));
    // Only members not below q can make a subset fail, and meets shrink as sets grow, so a
    // failing subset exists iff the meet of all such members lies below q.
    Subset candidates;
    for (std::size_t a : b)
        if (!lat.leq(a, q)) candidates.insert(a);

    const bool whole_fails = lat.leq(lat.meet_of(candidates), q);
    std::optional<Subset> failing;
    if (whole_fails) {
        Subset a = candidates;
        for (std::size_t e : candidates)
            if (lat.leq(lat.meet_of(a - Subset::single(e)), q)) a.erase(e);
        failing = a;
    }

    // Finite subsets enumerated directly, smallest first; on a finite carrier this must
    // agree with the argument over the whole of B.
    if (candidates.size() <= exhaustive_limit) {
        std::optional<Subset> smallest;
        for_each_subset(candidates, [&](Subset a) {
            if (lat.leq(lat.meet_of(a), q) && (!smallest || a.size() < smallest->size())) smallest = a;
        });
        if (smallest.has_value() != whole_fails)
            throw InternalInconsistency("strong irreducibility: finite and complete checks disagree at " + lat.name(q));
        if (smallest) failing = smallest;
    }

    const std::string kind = complete ? "completely strongly irreducible" : "strongly irreducible";
    if (!failing) return Verdict{true, Witness{lat.name(q) + " is " + kind, {}}};
    Verdict v{false, Witness{"meet of A lies below " + lat.name(q) + " but no member does", {}}};
    v.witness.sets.emplace_back("A", ctx.names_of(*failing));
    return v;
}

XTopVerdict is_xtop(const XTopContext& ctx) {
    const auto& lat = ctx.lattice();
    XTopVerdict r;

    std::optional<std::size_t> bad_point;
    for (std::size_t x : ctx.x_set()) {
        if (!is_strongly_irreducible(ctx, x, ctx.cx(), false).holds) {
            bad_point = x;
            break;
        }
    }
    r.irreducibility_route = !bad_point;

    std::vector<std::uint64_t> varieties;
    for (const auto& c : ctx.closed_family()) varieties.push_back(c.members.bits());
    std::sort(varieties.begin(), varieties.end());
    std::optional<std::pair<std::size_t, std::size_t>> bad_pair;
    for (std::size_t a = 0; a < lat.size() && !bad_pair; ++a) {
        for (std::size_t b = a + 1; b < lat.size() && !bad_pair; ++b) {
            const auto u = (ctx.variety(a) | ctx.variety(b)).bits();
            if (!std::binary_search(varieties.begin(), varieties.end(), u)) bad_pair = std::pair{a, b};
        }
    }
    r.union_route = !bad_pair;

    if (r.irreducibility_route != r.union_route)
        throw InternalInconsistency("X-top criterion and union-closure test disagree");

    if (r.union_route) {
        r.verdict = Verdict{true, Witness{"every point of X is strongly C^X-irreducible; varieties closed under union", {}}};
    } else {
        const std::string a = lat.name(bad_pair->first), b = lat.name(bad_pair->second);
        r.verdict = Verdict{false, Witness{lat.name(*bad_point) + " is not strongly C^X-irreducible; V(" + a + ") u V(" + b +
                                               ") is not a variety", {}}};
        r.verdict.witness.sets.emplace_back("V(" + a + ") u V(" + b + ")",
                                            ctx.names_of(ctx.variety(bad_pair->first) | ctx.variety(bad_pair->second)));
    }
    return r;
}

namespace {

FiniteSpace space_of(const XTopContext& ctx) {
    std::vector<std::string> names = ctx.names_of(ctx.x_set());
    std::vector<Subset> closed;
    for (const auto& c : ctx.closed_family()) closed.push_back(ctx.to_points(c.members));
    return FiniteSpace(std::move(names), std::move(closed));
}

}  // namespace

FiniteSpace generate_space(const XTopContext& ctx) {
    const auto v = is_xtop(ctx);
    if (!v.verdict.holds) throw NotXTop("not an X-top lattice: " + v.verdict.witness.to_string());
    FiniteSpace space = space_of(ctx);
    const auto& lat = ctx.lattice();
    const auto& pts = ctx.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (space.point_closure(i).contains(j) != lat.leq(pts[i], pts[j]))
                throw InternalInconsistency("specialization order differs from the lattice order on X");
    return space;
}

XTopContext subspace(const XTopContext& ctx, Subset y) {
    if (y.empty()) throw EmptySubset("subspace must be nonempty");
    for (std::size_t e : y)
        if (!ctx.x_set().contains(e)) throw NotSubsetOfX(e < ctx.lattice().size() ? ctx.lattice().name(e) : std::to_string(e));
    XTopContext sub(ctx.shared_lattice(), y);
    if (is_xtop(ctx).verdict.holds) {
        const FiniteSpace expected = generate_space(ctx).subspace(ctx.to_points(y));
        if (!is_xtop(sub).verdict.holds || space_of(sub) != expected)
            throw InternalInconsistency("subspace varieties differ from the induced topology");
    }
    return sub;
}

XTopContext subspace(const XTopContext& ctx, const std::vector<std::string>& y) {
    Subset s;
    for (const auto& n : y) {
        auto i = ctx.lattice().order().find(n);
        if (!i) throw UnknownElement(n);
        if (!ctx.x_set().contains(*i)) throw NotSubsetOfX(n);
        s.insert(*i);
    }
    return subspace(ctx, s);
}

Verdict strongly_disjoint(const XTopContext& ctx, Subset a, Subset b) {
    if (a.empty() || b.empty()) throw EmptySubset("strong disjointness needs nonempty sets");
    if (!a.is_subset_of(ctx.x_set()) || !b.is_subset_of(ctx.x_set()))
        throw NotSubsetOfX(ctx.names_of((a | b) - ctx.x_set()).front());
    const auto& lat = ctx.lattice();
    const Subset common = ctx.variety(lat.meet_of(a)) & ctx.variety(lat.meet_of(b));
    if (common.empty()) return Verdict{true, Witness{"V(meet A) and V(meet B) are disjoint", {}}};
    Verdict v{false, Witness{"V(meet A) and V(meet B) meet", {}}};
    v.witness.sets.emplace_back("intersection", ctx.names_of(common));
    return v;
}

}  // namespace spectop
