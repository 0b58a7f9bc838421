#pragma once

// Brute-force reference implementations. They work on raw bitmasks and share no
// code with the library beyond plain data, so agreement is meaningful.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

struct RawOrder {
    std::size_t n = 0;
    std::vector<std::vector<bool>> leq;  // reflexive, transitive
};

// Reflexive-transitive closure by repeated relaxation.
RawOrder close_order(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

std::optional<std::size_t> meet(const RawOrder& o, std::size_t a, std::size_t b);
std::optional<std::size_t> join(const RawOrder& o, std::size_t a, std::size_t b);
bool is_lattice(const RawOrder& o);

struct RawSpace {
    std::size_t n = 0;
    std::vector<Mask> closed;  // sorted, distinct

    Mask all() const { return n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }
    std::vector<Mask> opens() const;
    bool is_closed(Mask m) const;
    bool is_open(Mask m) const { return is_closed(all() & ~m); }
    Mask closure(Mask m) const;
    Mask interior(Mask m) const;
    RawSpace subspace(Mask y) const;  // points renumbered in increasing order
};

// Varieties of X (given as element indices, in increasing order); nullopt when they
// are not closed under union.
std::optional<RawSpace> zariski(const RawOrder& o, const std::vector<std::size_t>& x);

bool t0(const RawSpace& s);
bool t_quarter(const RawSpace& s);
bool t_half(const RawSpace& s);
bool t_three_quarter(const RawSpace& s);
bool t1(const RawSpace& s);
bool t2(const RawSpace& s);
bool t2_half(const RawSpace& s);
bool regular(const RawSpace& s);
bool completely_regular(const RawSpace& s);
bool normal(const RawSpace& s);
// Separated sets have disjoint neighbourhoods; exponential, keep n small.
bool completely_normal(const RawSpace& s);
// Normal and every closed set an intersection of open sets.
bool perfectly_normal(const RawSpace& s);
bool hyperconnected(const RawSpace& s);
bool ultraconnected(const RawSpace& s);
bool extremely_non_regular(const RawSpace& s);
bool extremely_non_normal(const RawSpace& s);
bool anti_normal(const RawSpace& s);
std::size_t krull_dim(const RawSpace& s);
// "T0" ... "T6" or "none", from the definitions.
std::string t_level(const RawSpace& s);

bool is_point_closed(const RawSpace& s, std::size_t p);
bool is_point_isolated(const RawSpace& s, std::size_t p);
bool is_point_regular_open(const RawSpace& s, std::size_t p);

// Tries every permutation.
bool homeomorphic(const RawSpace& a, const RawSpace& b);
// Does map (point of a -> point of b) send closed sets exactly onto closed sets?
bool is_homeomorphism(const RawSpace& a, const RawSpace& b, const std::vector<std::size_t>& map);

struct RawSemiring {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> add, mul;
    std::size_t zero = 0, one = 1;
};

// B(n,i) straight from the overflow rule.
RawSemiring bni(int n, int i);
// Every subset that is an ideal.
std::vector<Mask> ideals(const RawSemiring& r);
// Elementwise definition.
std::vector<Mask> primes(const RawSemiring& r);
bool von_neumann_regular(const RawSemiring& r);
bool reduced(const RawSemiring& r);

}  // namespace oracle
