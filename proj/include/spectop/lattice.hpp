#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectop/limits.hpp"
#include "spectop/subset.hpp"

namespace spectop {

// A finite partial order, stored as the full reflexive-transitive relation.
class PartialOrder {
public:
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws UnknownElement

    bool leq(std::size_t a, std::size_t b) const { return up_[a].contains(b); }
    Subset up_set(std::size_t a) const { return up_[a]; }
    Subset down_set(std::size_t a) const { return down_[a]; }
    Subset all() const { return Subset::first(size()); }

    // Every pair (a, b) with a <= b, a != b, in declaration order.
    std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;
    // Covering pairs of the order.
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

    std::vector<std::string> names_of(Subset s) const;
    Subset subset_of(const std::vector<std::string>& names) const;

    PartialOrder reversed() const;

    bool operator==(const PartialOrder&) const = default;

private:
    friend PartialOrder build_poset(std::vector<std::string>,
                                    const std::vector<std::pair<std::string, std::string>>&,
                                    const Limits&);
    std::vector<std::string> names_;
    std::vector<Subset> up_;
    std::vector<Subset> down_;
};

PartialOrder build_poset(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& pairs,
                         const Limits& limits = {});

class BoundedLattice {
public:
    const PartialOrder& order() const { return order_; }
    std::size_t size() const { return order_.size(); }
    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }
    bool leq(std::size_t a, std::size_t b) const { return order_.leq(a, b); }
    const std::string& name(std::size_t i) const { return order_.name(i); }

    std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
    std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
    std::size_t meet_of(Subset s) const;  // top for the empty set
    std::size_t join_of(Subset s) const;  // bottom for the empty set

    bool operator==(const BoundedLattice&) const = default;

private:
    friend BoundedLattice lattice_from_poset(const PartialOrder&, std::string_view, std::string_view);
    friend BoundedLattice dual(const BoundedLattice&);
    PartialOrder order_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
    std::vector<std::size_t> meet_;
    std::vector<std::size_t> join_;
};

BoundedLattice lattice_from_poset(const PartialOrder& order, std::string_view bottom, std::string_view top);

std::size_t meet_set(const BoundedLattice& lattice, const std::vector<std::string>& names);

BoundedLattice dual(const BoundedLattice& lattice);

}  // namespace spectop
