#include "generators.hpp"

#include <algorithm>
#include <set>

namespace testgen {

spectop::BoundedLattice LatticeSpec::build() const {
    return spectop::lattice_from_poset(spectop::build_poset(names, pairs), bottom, top);
}

oracle::RawOrder LatticeSpec::raw() const { return oracle::close_order(names.size(), index_pairs); }

namespace {

LatticeSpec make_spec(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    LatticeSpec l;
    for (std::size_t i = 0; i < n; ++i) l.names.push_back("e" + std::to_string(i));
    for (auto [a, b] : pairs) l.pairs.emplace_back(l.names[a], l.names[b]);
    l.index_pairs = pairs;
    l.bottom = l.names.front();
    l.top = l.names.back();
    return l;
}

}  // namespace

std::vector<LatticeSpec> all_small_lattices(std::size_t max_size) {
    std::vector<LatticeSpec> out;
    for (std::size_t n = 2; n <= max_size; ++n) {
        const std::size_t m = n - 2;
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t a = 1; a <= m; ++a)
            for (std::size_t b = 1; b <= m; ++b)
                if (a != b) slots.emplace_back(a, b);
        for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << slots.size()); ++rel) {
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t k = 0; k < slots.size(); ++k)
                if ((rel >> k) & 1U) pairs.push_back(slots[k]);
            const auto closed = oracle::close_order(n, pairs);
            // Keep only relations that are already transitive and antisymmetric.
            bool exact = true;
            for (std::size_t k = 0; k < slots.size(); ++k) {
                auto [a, b] = slots[k];
                if (closed.leq[a][b] != static_cast<bool>((rel >> k) & 1U)) exact = false;
                if (closed.leq[a][b] && closed.leq[b][a]) exact = false;
            }
            if (!exact) continue;
            for (std::size_t a = 1; a <= m; ++a) {
                pairs.emplace_back(0, a);
                pairs.emplace_back(a, n - 1);
            }
            if (m == 0) pairs.emplace_back(0, n - 1);
            auto spec = make_spec(n, pairs);
            if (oracle::is_lattice(spec.raw())) out.push_back(std::move(spec));
        }
    }
    return out;
}

LatticeSpec random_lattice(std::mt19937_64& rng, std::size_t max_size) {
    while (true) {
        const std::size_t ground = 2 + rng() % 3;
        const std::uint64_t full = (std::uint64_t{1} << ground) - 1;
        std::set<std::uint64_t> fam{full};
        const std::size_t picks = 1 + rng() % 6;
        for (std::size_t k = 0; k < picks; ++k) fam.insert(rng() & full);
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto a : std::vector<std::uint64_t>(fam.begin(), fam.end()))
                for (auto b : std::vector<std::uint64_t>(fam.begin(), fam.end()))
                    grew = fam.insert(a & b).second || grew;
        }
        if (fam.size() < 2 || fam.size() > max_size) continue;
        std::vector<std::uint64_t> sets(fam.begin(), fam.end());
        std::sort(sets.begin(), sets.end(), [](auto a, auto b) {
            const int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
            return pa != pb ? pa < pb : a < b;
        });
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < sets.size(); ++a)
            for (std::size_t b = 0; b < sets.size(); ++b)
                if (a != b && (sets[a] & sets[b]) == sets[a]) pairs.emplace_back(a, b);
        return make_spec(sets.size(), pairs);
    }
}

std::uint64_t random_x(std::mt19937_64& rng, const LatticeSpec& l) {
    const std::uint64_t non_top = (std::uint64_t{1} << (l.names.size() - 1)) - 1;
    while (true) {
        const std::uint64_t x = rng() & non_top;
        if (x) return x;
    }
}

std::vector<std::size_t> indices(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 64; ++i)
        if ((mask >> i) & 1U) out.push_back(i);
    return out;
}

oracle::RawSpace raw_space(const spectop::FiniteSpace& s) {
    oracle::RawSpace r{s.size(), {}};
    for (auto c : s.closed_sets()) r.closed.push_back(c.bits());
    std::sort(r.closed.begin(), r.closed.end());
    return r;
}

spectop::FiniteSpace random_space(std::mt19937_64& rng, std::size_t n) {
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::set<std::uint64_t> fam{0, full};
    const std::size_t picks = rng() % (n + 2);
    for (std::size_t k = 0; k < picks; ++k) fam.insert(rng() & full);
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto a : std::vector<std::uint64_t>(fam.begin(), fam.end()))
            for (auto b : std::vector<std::uint64_t>(fam.begin(), fam.end()))
                grew = fam.insert(a & b).second | fam.insert(a | b).second | grew;
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    std::vector<spectop::Subset> closed;
    for (auto m : fam) closed.emplace_back(m);
    return spectop::FiniteSpace(std::move(names), std::move(closed));
}

}  // namespace testgen
