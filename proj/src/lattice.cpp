#include "spectop/lattice.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "spectop/errors.hpp"

namespace spectop {

namespace {

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](unsigned char c) { return c > 0x20 && c < 0x7f; });
}

// Shortest path from `from` to `to` along generating edges, inclusive of both ends.
std::vector<std::size_t> path(const std::vector<std::vector<std::size_t>>& succ, std::size_t from, std::size_t to) {
    std::vector<std::size_t> parent(succ.size(), succ.size());
    std::deque<std::size_t> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (std::size_t w : succ[v]) {
            if (parent[w] == succ.size()) {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t v = to; v != from; v = parent[v]) out.push_back(v);
    out.push_back(from);
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<std::size_t> PartialOrder::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t PartialOrder::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw UnknownElement(std::string(name));
}

std::vector<std::pair<std::size_t, std::size_t>> PartialOrder::strict_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b : up_[a])
            if (b != a) out.emplace_back(a, b);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> PartialOrder::hasse_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto [a, b] : strict_pairs()) {
        Subset between = (up_[a] & down_[b]) - Subset::single(a) - Subset::single(b);
        if (between.empty()) out.emplace_back(a, b);
    }
    return out;
}

std::vector<std::string> PartialOrder::names_of(Subset s) const {
    std::vector<std::string> out;
    for (std::size_t i : s) out.push_back(names_[i]);
    return out;
}

Subset PartialOrder::subset_of(const std::vector<std::string>& names) const {
    Subset s;
    for (const auto& n : names) s.insert(index_of(n));
    return s;
}

PartialOrder PartialOrder::reversed() const {
    PartialOrder r = *this;
    std::swap(r.up_, r.down_);
    return r;
}

PartialOrder build_poset(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& pairs,
                         const Limits& limits) {
    const std::size_t cap = std::min(limits.max_carrier, Subset::capacity);
    if (elements.size() > cap) throw SizeLimitExceeded("lattice carrier", elements.size(), cap);

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!valid_name(elements[i])) throw InvalidName(elements[i]);
        if (!index.emplace(elements[i], i).second) throw DuplicateElement(elements[i]);
    }
    auto lookup = [&](const std::string& n) {
        auto it = index.find(n);
        if (it == index.end()) throw UnknownElement(n);
        return it->second;
    };

    const std::size_t n = elements.size();
    std::vector<std::vector<std::size_t>> succ(n);
    std::vector<Subset> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = Subset::single(i);
    for (const auto& [a, b] : pairs) {
        std::size_t ia = lookup(a), ib = lookup(b);
        succ[ia].push_back(ib);
        up[ia].insert(ib);
    }
    // Warshall closure on bit rows.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (up[i].contains(k)) up[i] |= up[k];

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b : up[a]) {
            if (b != a && up[b].contains(a)) {
                auto forward = path(succ, a, b);
                auto back = path(succ, b, a);
                std::vector<std::string> cycle;
                for (std::size_t v : forward) cycle.push_back(elements[v]);
                for (std::size_t j = 1; j + 1 < back.size(); ++j) cycle.push_back(elements[back[j]]);
                throw CycleError(std::move(cycle));
            }
        }
    }

    PartialOrder order;
    order.names_ = std::move(elements);
    order.up_ = std::move(up);
    order.down_.assign(n, Subset{});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b : order.up_[a]) order.down_[b].insert(a);
    return order;
}

std::size_t BoundedLattice::meet_of(Subset s) const {
    std::size_t m = top_;
    for (std::size_t a : s) m = meet(m, a);
    return m;
}

std::size_t BoundedLattice::join_of(Subset s) const {
    std::size_t j = bottom_;
    for (std::size_t a : s) j = join(j, a);
    return j;
}

BoundedLattice lattice_from_poset(const PartialOrder& order, std::string_view bottom, std::string_view top) {
    const std::size_t n = order.size();
    const std::size_t b = order.index_of(bottom);
    const std::size_t t = order.index_of(top);
    if (order.up_set(b) != order.all())
        throw NotBounded("'" + std::string(bottom) + "' is not the least element");
    if (order.down_set(t) != order.all())
        throw NotBounded("'" + std::string(top) + "' is not the greatest element");

    BoundedLattice lat;
    lat.order_ = order;
    lat.bottom_ = b;
    lat.top_ = t;
    lat.meet_.assign(n * n, 0);
    lat.join_.assign(n * n, 0);

    // The greatest element of a set of bounds: the one lying above every other bound.
    auto greatest = [&](Subset bounds) -> std::optional<std::size_t> {
        for (std::size_t g : bounds)
            if (bounds.is_subset_of(order.down_set(g))) return g;
        return std::nullopt;
    };
    auto least = [&](Subset bounds) -> std::optional<std::size_t> {
        for (std::size_t l : bounds)
            if (bounds.is_subset_of(order.up_set(l))) return l;
        return std::nullopt;
    };

    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            auto g = greatest(order.down_set(x) & order.down_set(y));
            if (!g) throw NotALattice(order.name(x), order.name(y), "greatest lower bound");
            auto l = least(order.up_set(x) & order.up_set(y));
            if (!l) throw NotALattice(order.name(x), order.name(y), "least upper bound");
            lat.meet_[x * n + y] = *g;
            lat.join_[x * n + y] = *l;
        }
    }

    for (std::size_t x = 0; x < n; ++x) {
        if (lat.meet(x, x) != x || lat.join(x, x) != x)
            throw InternalInconsistency("idempotence fails at " + order.name(x));
        for (std::size_t y = 0; y < n; ++y) {
            if (lat.meet(x, y) != lat.meet(y, x) || lat.join(x, y) != lat.join(y, x))
                throw InternalInconsistency("commutativity fails at " + order.name(x) + "," + order.name(y));
            if (lat.meet(x, lat.join(x, y)) != x || lat.join(x, lat.meet(x, y)) != x)
                throw InternalInconsistency("absorption fails at " + order.name(x) + "," + order.name(y));
            for (std::size_t z = 0; z < n; ++z) {
                if (lat.meet(lat.meet(x, y), z) != lat.meet(x, lat.meet(y, z)) ||
                    lat.join(lat.join(x, y), z) != lat.join(x, lat.join(y, z)))
                    throw InternalInconsistency("associativity fails");
            }
        }
    }
    return lat;
}

std::size_t meet_set(const BoundedLattice& lattice, const std::vector<std::string>& names) {
    return lattice.meet_of(lattice.order().subset_of(names));
}

BoundedLattice dual(const BoundedLattice& lattice) {
    BoundedLattice d = lattice;
    d.order_ = lattice.order_.reversed();
    std::swap(d.bottom_, d.top_);
    std::swap(d.meet_, d.join_);
    return d;
}

}  // namespace spectop
