#include "spectop/semiring.hpp"

#include <algorithm>
#include <set>

#include "spectop/errors.hpp"

namespace spectop {

std::size_t FiniteSemiring::index_of(const std::string& name) const {
    auto it = std::find(t_.carrier.begin(), t_.carrier.end(), name);
    if (it == t_.carrier.end()) throw UnknownElement(name);
    return static_cast<std::size_t>(it - t_.carrier.begin());
}

std::vector<std::string> FiniteSemiring::names_of(Subset s) const {
    std::vector<std::string> out;
    for (std::size_t i : s) out.push_back(t_.carrier.at(i));
    return out;
}

FiniteSemiring validate_semiring(SemiringTables t) {
    const std::size_t n = t.carrier.size();
    if (n == 0) throw AxiomViolation("nonempty carrier", {});
    if (n > Subset::capacity) throw SizeLimitExceeded("semiring carrier", n, Subset::capacity);
    std::set<std::string> names(t.carrier.begin(), t.carrier.end());
    if (names.size() != n) throw AxiomViolation("distinct element names", {});
    auto total = [&](const std::vector<std::vector<std::size_t>>& table, const char* op) {
        if (table.size() != n) throw AxiomViolation(std::string(op) + " table is total", {});
        for (const auto& row : table) {
            if (row.size() != n) throw AxiomViolation(std::string(op) + " table is total", {});
            for (std::size_t v : row)
                if (v >= n) throw AxiomViolation(std::string(op) + " table stays in the carrier", {});
        }
    };
    total(t.add, "addition");
    total(t.mul, "multiplication");
    if (t.zero >= n || t.one >= n) throw AxiomViolation("zero and one belong to the carrier", {});

    const auto& c = t.carrier;
    const auto& add = t.add;
    const auto& mul = t.mul;
    for (std::size_t a = 0; a < n; ++a) {
        if (add[a][t.zero] != a) throw AxiomViolation("zero is the additive identity", {c[a]});
        if (mul[a][t.one] != a) throw AxiomViolation("one is the multiplicative identity", {c[a]});
        if (mul[a][t.zero] != t.zero || mul[t.zero][a] != t.zero) throw AxiomViolation("zero is absorbing", {c[a]});
        for (std::size_t b = 0; b < n; ++b) {
            if (add[a][b] != add[b][a]) throw AxiomViolation("addition is commutative", {c[a], c[b]});
            if (mul[a][b] != mul[b][a]) throw AxiomViolation("multiplication is commutative", {c[a], c[b]});
            for (std::size_t d = 0; d < n; ++d) {
                if (add[add[a][b]][d] != add[a][add[b][d]]) throw AxiomViolation("addition is associative", {c[a], c[b], c[d]});
                if (mul[mul[a][b]][d] != mul[a][mul[b][d]])
                    throw AxiomViolation("multiplication is associative", {c[a], c[b], c[d]});
                if (mul[a][add[b][d]] != add[mul[a][b]][mul[a][d]])
                    throw AxiomViolation("multiplication distributes over addition", {c[a], c[b], c[d]});
                if (mul[add[b][d]][a] != add[mul[b][a]][mul[d][a]])
                    throw AxiomViolation("multiplication distributes over addition", {c[b], c[d], c[a]});
            }
        }
    }
    if (t.zero == t.one) throw AxiomViolation("zero differs from one", {c[t.zero]});

    FiniteSemiring r;
    r.semidomain_ = true;
    r.ring_ = true;
    for (std::size_t a = 0; a < n; ++a) {
        bool inverse = false;
        for (std::size_t b = 0; b < n; ++b) {
            inverse = inverse || add[a][b] == t.zero;
            if (a != t.zero && b != t.zero && mul[a][b] == t.zero) r.semidomain_ = false;
        }
        r.ring_ = r.ring_ && inverse;
    }
    r.t_ = std::move(t);
    return r;
}

FiniteSemiring bni(int n, int i) {
    if (n < 2 || i < 0 || i > n - 1)
        throw BadParameters("B(n,i) needs n >= 2 and 0 <= i <= n-1, got B(" + std::to_string(n) + "," + std::to_string(i) + ")");
    const auto size = static_cast<std::size_t>(n);
    auto reduce = [&](int s) {
        if (s <= n - 1) return s;
        return i + (s - i) % (n - i);
    };
    SemiringTables t;
    t.add.assign(size, std::vector<std::size_t>(size));
    t.mul.assign(size, std::vector<std::size_t>(size));
    for (int a = 0; a < n; ++a) {
        t.carrier.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b) {
            t.add[a][b] = static_cast<std::size_t>(reduce(a + b));
            t.mul[a][b] = static_cast<std::size_t>(reduce(a * b));
        }
    }
    t.zero = 0;
    t.one = 1;
    if (i == 0) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (t.add[a][b] != static_cast<std::size_t>((a + b) % n) || t.mul[a][b] != static_cast<std::size_t>((a * b) % n))
                    throw InternalInconsistency("B(n,0) differs from Z_n");
    }
    return validate_semiring(std::move(t));
}

namespace {

FiniteSpace disjoint_union(const FiniteSpace& a, const FiniteSpace& b) {
    std::vector<std::string> names;
    for (const auto& n : a.names()) names.push_back("1:" + n);
    for (const auto& n : b.names()) names.push_back("2:" + n);
    std::vector<Subset> closed;
    for (Subset ca : a.closed_sets())
        for (Subset cb : b.closed_sets()) closed.push_back(ca | Subset{cb.bits() << a.size()});
    return FiniteSpace(std::move(names), std::move(closed));
}

}  // namespace

FiniteSemiring product(const FiniteSemiring& r1, const FiniteSemiring& r2, const Limits& limits) {
    const std::size_t n1 = r1.size(), n2 = r2.size(), n = n1 * n2;
    if (n > limits.max_semiring_carrier) throw SizeLimitExceeded("product carrier", n, limits.max_semiring_carrier);
    SemiringTables t;
    t.add.assign(n, std::vector<std::size_t>(n));
    t.mul.assign(n, std::vector<std::size_t>(n));
    auto at = [&](std::size_t a, std::size_t b) { return a * n2 + b; };
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b) t.carrier.push_back("(" + r1.name(a) + "," + r2.name(b) + ")");
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t x1 = x / n2, x2 = x % n2, y1 = y / n2, y2 = y % n2;
            t.add[x][y] = at(r1.add(x1, y1), r2.add(x2, y2));
            t.mul[x][y] = at(r1.mul(x1, y1), r2.mul(x2, y2));
        }
    }
    t.zero = at(r1.zero(), r2.zero());
    t.one = at(r1.one(), r2.one());
    FiniteSemiring r = validate_semiring(std::move(t));

    const Spectrum s1 = spectrum(r1, limits), s2 = spectrum(r2, limits), s = spectrum(r, limits);
    if (s.space.size() <= limits.max_homeomorphism_points &&
        !homeomorphic(s.space, disjoint_union(s1.space, s2.space), limits).holds)
        throw InternalInconsistency("product spectrum is not the disjoint union of the factor spectra");
    return r;
}

Subset ideal_closure(const FiniteSemiring& r, Subset generators) {
    Subset s = generators | Subset::single(r.zero());
    while (true) {
        Subset next = s;
        for (std::size_t a : s) {
            for (std::size_t b : s) next.insert(r.add(a, b));
            for (std::size_t x = 0; x < r.size(); ++x) next.insert(r.mul(x, a));
        }
        if (next == s) return s;
        s = next;
    }
}

std::vector<Ideal> enumerate_ideals(const FiniteSemiring& r, const Limits& limits) {
    if (r.size() > limits.max_semiring_carrier)
        throw SizeLimitExceeded("ideal enumeration", r.size(), limits.max_semiring_carrier);
    std::vector<Subset> found{ideal_closure(r, Subset{})};
    std::set<std::uint64_t> seen{found.front().bits()};
    for (std::size_t k = 0; k < found.size(); ++k) {
        const Subset base = found[k];
        for (std::size_t a = 0; a < r.size(); ++a) {
            if (base.contains(a)) continue;
            const Subset next = ideal_closure(r, base | Subset::single(a));
            if (seen.insert(next.bits()).second) found.push_back(next);
        }
    }
    std::sort(found.begin(), found.end(), canonical_less);
    std::vector<Ideal> out;
    for (Subset s : found) out.push_back({s});
    return out;
}

bool is_prime(const FiniteSemiring& r, const Ideal& p) {
    if (p.members == Subset::first(r.size())) return false;
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b)
            if (p.members.contains(r.mul(a, b)) && !p.members.contains(a) && !p.members.contains(b)) return false;
    return true;
}

bool is_prime_by_ideals(const FiniteSemiring& r, const Ideal& p, const std::vector<Ideal>& ideals) {
    if (p.members == Subset::first(r.size())) return false;
    for (const auto& i : ideals) {
        for (const auto& j : ideals) {
            bool product_inside = true;
            for (std::size_t a : i.members)
                for (std::size_t b : j.members) product_inside = product_inside && p.members.contains(r.mul(a, b));
            if (product_inside && !i.members.is_subset_of(p.members) && !j.members.is_subset_of(p.members)) return false;
        }
    }
    return true;
}

std::string ideal_name(const FiniteSemiring& r, const Ideal& ideal) {
    return format_names(r.names_of(ideal.members));
}

namespace {

XTopContext ideal_context(const FiniteSemiring& r, const std::vector<Ideal>& ideals, const std::vector<Ideal>& primes,
                          const Limits& limits) {
    std::vector<std::string> names;
    for (const auto& i : ideals) names.push_back(ideal_name(r, i));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t a = 0; a < ideals.size(); ++a)
        for (std::size_t b = 0; b < ideals.size(); ++b)
            if (a != b && ideals[a].members.is_subset_of(ideals[b].members)) pairs.emplace_back(names[a], names[b]);
    const PartialOrder order = build_poset(names, pairs, limits);
    const Ideal zero{ideal_closure(r, Subset{})};
    const Ideal whole{Subset::first(r.size())};
    const BoundedLattice lattice = lattice_from_poset(order, ideal_name(r, zero), ideal_name(r, whole));

    for (std::size_t a = 0; a < ideals.size(); ++a) {
        for (std::size_t b = 0; b < ideals.size(); ++b) {
            if (ideals[lattice.meet(a, b)].members != (ideals[a].members & ideals[b].members))
                throw InternalInconsistency("ideal meet is not the intersection");
            if (ideals[lattice.join(a, b)].members != ideal_closure(r, ideals[a].members | ideals[b].members))
                throw InternalInconsistency("ideal join is not the ideal generated by the union");
        }
    }

    std::vector<std::string> x;
    for (const auto& p : primes) x.push_back(ideal_name(r, p));
    return XTopContext(lattice, x);
}

}  // namespace

Spectrum spectrum(const FiniteSemiring& r, const Limits& limits) {
    std::vector<Ideal> ideals = enumerate_ideals(r, limits);
    std::vector<Ideal> primes;
    for (const auto& i : ideals) {
        const bool elementwise = is_prime(r, i);
        if (elementwise != is_prime_by_ideals(r, i, ideals))
            throw InternalInconsistency("elementwise and ideal-wise prime tests disagree at " + ideal_name(r, i));
        if (elementwise) primes.push_back(i);
    }
    XTopContext ctx = ideal_context(r, ideals, primes, limits);
    if (!is_xtop(ctx).verdict.holds) throw InternalInconsistency("prime spectrum is not X-top in the ideal lattice");
    FiniteSpace space = generate_space(ctx);
    const std::size_t dim = krull_dim(space);
    return Spectrum{std::move(ideals), std::move(primes), std::move(ctx), std::move(space), dim};
}

RegularityReport regularity_predicates(const FiniteSemiring& r) {
    const std::size_t n = r.size();
    auto power = [&](std::size_t a, std::size_t k) {
        std::size_t p = r.one();
        for (std::size_t j = 0; j < k; ++j) p = r.mul(p, a);
        return p;
    };
    RegularityReport out;
    out.von_neumann_regular = Verdict{true, Witness{"every a has b with a = aba", {}}};
    out.pi_regular = Verdict{true, Witness{"every a has b and k >= 1 with a^k = a^k b a^k", {}}};
    for (std::size_t a = 0; a < n; ++a) {
        bool vn = false;
        for (std::size_t b = 0; b < n && !vn; ++b) vn = r.mul(r.mul(a, b), a) == a;
        if (!vn && out.von_neumann_regular.holds)
            out.von_neumann_regular = Verdict{false, Witness{"no b with a = aba", {{"a", {r.name(a)}}}}};

        // Powers repeat with period at most n, so exponents up to n suffice.
        bool pi = false;
        for (std::size_t k = 1; k <= n && !pi; ++k) {
            const std::size_t ak = power(a, k);
            for (std::size_t b = 0; b < n && !pi; ++b) pi = r.mul(r.mul(ak, b), ak) == ak;
        }
        if (!pi && out.pi_regular.holds)
            out.pi_regular = Verdict{false, Witness{"no b, k with a^k = a^k b a^k", {{"a", {r.name(a)}}}}};

        for (std::size_t k = 1; k <= n; ++k)
            if (power(a, k) == r.zero()) {
                out.nilradical.insert(a);
                break;
            }
    }
    if (out.nilradical == Subset::single(r.zero())) {
        out.reduced = Verdict{true, Witness{"Nil(R) = {0}", {}}};
    } else {
        out.reduced = Verdict{false, Witness{"nonzero nilpotents", {{"Nil(R)", r.names_of(out.nilradical)}}}};
    }
    return out;
}

}  // namespace spectop
