#include <algorithm>

#include "spectop/errors.hpp"
#include "spectop/topology.hpp"

namespace spectop {

namespace {

struct Degree {
    std::size_t up = 0;    // points in the closure
    std::size_t down = 0;  // points whose closure contains this one
    bool operator==(const Degree&) const = default;
    auto operator<=>(const Degree&) const = default;
};

std::vector<Degree> degrees(const FiniteSpace& s) {
    std::vector<Degree> d(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        d[i].up = s.point_closure(i).size();
        for (std::size_t j = 0; j < s.size(); ++j) d[i].down += s.point_closure(j).contains(i);
    }
    return d;
}

bool maps_closed_onto_closed(const FiniteSpace& s1, const FiniteSpace& s2, const std::vector<std::size_t>& map) {
    for (Subset c : s1.closed_sets()) {
        Subset image;
        for (std::size_t i : c) image.insert(map[i]);
        if (!s2.is_closed(image)) return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_homeomorphism(const FiniteSpace& s1, const FiniteSpace& s2,
                                                           const Limits& limits) {
    const std::size_t n = s1.size();
    const std::size_t larger = std::max(n, s2.size());
    if (larger > limits.max_homeomorphism_points)
        throw SizeLimitExceeded("homeomorphism search", larger, limits.max_homeomorphism_points);
    if (n != s2.size() || s1.closed_sets().size() != s2.closed_sets().size()) return std::nullopt;

    const auto d1 = degrees(s1), d2 = degrees(s2);
    auto sorted1 = d1, sorted2 = d2;
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    if (sorted1 != sorted2) return std::nullopt;

    std::vector<std::size_t> map(n, 0);
    std::vector<bool> used(n, false);
    // A finite space is determined by its specialization preorder, so preserving it
    // point by point is the pruning rule; the final check confirms on closed sets.
    auto extend = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) return maps_closed_onto_closed(s1, s2, map);
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || d1[i] != d2[j]) continue;
            bool consistent = s1.point_closure(i).contains(i) == s2.point_closure(j).contains(j);
            for (std::size_t k = 0; k < i && consistent; ++k) {
                consistent = s1.point_closure(i).contains(k) == s2.point_closure(j).contains(map[k]) &&
                             s1.point_closure(k).contains(i) == s2.point_closure(map[k]).contains(j);
            }
            if (!consistent) continue;
            used[j] = true;
            map[i] = j;
            if (self(self, i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    if (extend(extend, 0)) return map;
    return std::nullopt;
}

Verdict homeomorphic(const FiniteSpace& s1, const FiniteSpace& s2, const Limits& limits) {
    auto map = find_homeomorphism(s1, s2, limits);
    if (!map) {
        return Verdict{false, Witness{"no bijection carries the closed sets onto the closed sets", {}}};
    }
    Verdict v{true, Witness{"bijection", {}}};
    for (std::size_t i = 0; i < map->size(); ++i)
        v.witness.sets.emplace_back(s1.name(i) + "->" + s2.name((*map)[i]), std::vector<std::string>{});
    return v;
}

std::string shape_label(const FiniteSpace& s) {
    const std::size_t n = s.size();
    if (n == 0) return "other";
    // Strict order x < y iff y is in the closure of x and x != y; needs T0.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (s.point_closure(a) == s.point_closure(b)) return "other";

    auto less = [&](std::size_t a, std::size_t b) { return a != b && s.point_closure(a).contains(b); };
    auto comparable = [&](std::size_t a, std::size_t b) { return a == b || less(a, b) || less(b, a); };
    Subset minimal, maximal;
    bool antichain = true, chain = true;
    for (std::size_t a = 0; a < n; ++a) {
        bool has_below = false, has_above = false;
        for (std::size_t b = 0; b < n; ++b) {
            has_below = has_below || less(b, a);
            has_above = has_above || less(a, b);
            if (a != b) {
                antichain = antichain && !comparable(a, b);
                chain = chain && comparable(a, b);
            }
        }
        if (!has_below) minimal.insert(a);
        if (!has_above) maximal.insert(a);
    }
    const std::string k = std::to_string(n);
    if (antichain) return "P" + k;
    if (chain) return "C" + k;
    const Subset middle = s.all() - minimal - maximal;
    if (minimal.size() == 1 && middle.empty()) return "V" + std::to_string(maximal.size());
    if (maximal.size() == 1 && middle.empty()) return "T" + std::to_string(minimal.size());
    if (minimal.size() == 1 && maximal.size() == 1 && middle.size() >= 2) {
        for (std::size_t a : middle)
            for (std::size_t b : middle)
                if (less(a, b)) return "other";
        return "D" + k;
    }
    return "other";
}

}  // namespace spectop
