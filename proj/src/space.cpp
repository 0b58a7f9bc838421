#include <algorithm>

#include "spectop/errors.hpp"
#include "spectop/topology.hpp"

namespace spectop {

FiniteSpace::FiniteSpace(std::vector<std::string> points, std::vector<Subset> closed)
    : names_(std::move(points)) {
    if (names_.size() > Subset::capacity) throw SizeLimitExceeded("space", names_.size(), Subset::capacity);
    const Subset full = all();
    for (Subset c : closed)
        if (!c.is_subset_of(full)) throw InvalidSpace("closed set mentions a point outside the space");
    std::sort(closed.begin(), closed.end(), canonical_less);
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    closed_ = std::move(closed);
    index();
    if (!is_closed(Subset{}) || !is_closed(full)) throw InvalidSpace("family must contain the empty set and the whole space");
    for (Subset a : closed_) {
        for (Subset b : closed_) {
            if (!is_closed(a | b)) throw InvalidSpace("family not closed under union: " + format_names(names_of(a | b)));
            if (!is_closed(a & b)) throw InvalidSpace("family not closed under intersection: " + format_names(names_of(a & b)));
        }
    }
}

FiniteSpace::FiniteSpace(Trusted, std::vector<std::string> points, std::vector<Subset> closed)
    : names_(std::move(points)), closed_(std::move(closed)) {
    std::sort(closed_.begin(), closed_.end(), canonical_less);
    closed_.erase(std::unique(closed_.begin(), closed_.end()), closed_.end());
    index();
}

void FiniteSpace::index() {
    sorted_bits_.clear();
    for (Subset c : closed_) sorted_bits_.push_back(c.bits());
    std::sort(sorted_bits_.begin(), sorted_bits_.end());

    const std::size_t n = size();
    cl_.assign(n, all());
    ker_.assign(n, all());
    for (Subset c : closed_) {
        for (std::size_t i : c) cl_[i] &= c;
        Subset open = all() - c;
        for (std::size_t i : open) ker_[i] &= open;
    }
}

std::vector<std::string> FiniteSpace::names_of(Subset s) const {
    std::vector<std::string> out;
    for (std::size_t i : s) out.push_back(names_.at(i));
    return out;
}

std::vector<Subset> FiniteSpace::open_sets() const {
    std::vector<Subset> out;
    for (Subset c : closed_) out.push_back(all() - c);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

bool FiniteSpace::is_closed(Subset s) const {
    return std::binary_search(sorted_bits_.begin(), sorted_bits_.end(), s.bits());
}

Subset FiniteSpace::closure(Subset s) const {
    Subset out;
    for (std::size_t i : s) out |= cl_[i];
    return out;
}

Subset FiniteSpace::kernel(Subset s) const {
    Subset out;
    for (std::size_t i : s) out |= ker_[i];
    return out;
}

FiniteSpace FiniteSpace::subspace(Subset y) const {
    if (!y.is_subset_of(all())) throw InvalidSpace("subspace mentions a point outside the space");
    std::vector<std::string> names;
    std::vector<std::size_t> pos(size(), 0);
    for (std::size_t i : y) {
        pos[i] = names.size();
        names.push_back(names_[i]);
    }
    std::vector<Subset> closed;
    closed.reserve(closed_.size());
    for (Subset c : closed_) {
        Subset r;
        for (std::size_t i : c & y) r.insert(pos[i]);
        closed.push_back(r);
    }
    return FiniteSpace(Trusted{}, std::move(names), std::move(closed));
}

}  // namespace spectop
