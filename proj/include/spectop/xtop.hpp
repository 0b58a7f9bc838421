#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "spectop/lattice.hpp"
#include "spectop/topology.hpp"
#include "spectop/verdict.hpp"

namespace spectop {

// A bounded lattice with a nonempty X not containing the top, plus the cached
// radical-fixed elements and the family of varieties V(a) = {x in X : a <= x}.
// Element arguments and returned sets use lattice indices unless noted.
class XTopContext {
public:
    struct ClosedSet {
        Subset members;    // points of X, as lattice indices
        Subset witnesses;  // every a with V(a) == members
    };

    XTopContext(std::shared_ptr<const BoundedLattice> lattice, Subset x);
    XTopContext(const BoundedLattice& lattice, const std::vector<std::string>& x);

    const BoundedLattice& lattice() const { return *lattice_; }
    std::shared_ptr<const BoundedLattice> shared_lattice() const { return lattice_; }
    std::size_t element(std::string_view name) const { return lattice_->order().index_of(name); }
    std::vector<std::string> names_of(Subset elements) const { return lattice_->order().names_of(elements); }

    Subset x_set() const { return x_; }
    // Points of X in declaration order; position in this list is the point index of the space.
    const std::vector<std::size_t>& points() const { return points_; }
    Subset to_points(Subset elements) const;
    Subset to_elements(Subset points) const;

    Subset variety(std::size_t a) const { return lattice_->order().up_set(a) & x_; }
    Subset under_set(std::size_t a) const { return lattice_->order().down_set(a) & x_; }
    std::size_t radical(std::size_t a) const { return lattice_->meet_of(variety(a)); }

    // Radical-fixed elements other than the top (the top is always fixed).
    Subset cx() const { return cx_; }
    const std::vector<ClosedSet>& closed_family() const { return closed_; }

private:
    std::shared_ptr<const BoundedLattice> lattice_;
    Subset x_;
    std::vector<std::size_t> points_;
    std::vector<std::size_t> point_of_;
    Subset cx_;
    std::vector<ClosedSet> closed_;
};

Subset variety(const XTopContext& ctx, std::string_view a);
Subset under_set(const XTopContext& ctx, std::string_view a);
std::size_t radical(const XTopContext& ctx, std::string_view a);
Subset cx_set(const XTopContext& ctx);

// Witness set "A" is a failing subset of B when the verdict is negative.
Verdict is_strongly_irreducible(const XTopContext& ctx, std::size_t q, Subset b, bool complete);

struct XTopVerdict {
    Verdict verdict;
    bool irreducibility_route = false;  // X = SI^{C^X}(X)
    bool union_route = false;           // varieties closed under pairwise union
};

XTopVerdict is_xtop(const XTopContext& ctx);

// Space on the points of X (named as in the lattice) with closed sets V(a).
// Throws NotXTop when the varieties do not form a topology.
FiniteSpace generate_space(const XTopContext& ctx);

XTopContext subspace(const XTopContext& ctx, Subset y);
XTopContext subspace(const XTopContext& ctx, const std::vector<std::string>& y);

Verdict strongly_disjoint(const XTopContext& ctx, Subset a, Subset b);

}  // namespace spectop
