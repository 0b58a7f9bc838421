#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spectop/limits.hpp"
#include "spectop/subset.hpp"
#include "spectop/topology.hpp"
#include "spectop/verdict.hpp"
#include "spectop/xtop.hpp"

namespace spectop {

// Raw operation tables, indexed by carrier position.
struct SemiringTables {
    std::vector<std::string> carrier;
    std::vector<std::vector<std::size_t>> add;
    std::vector<std::vector<std::size_t>> mul;
    std::size_t zero = 0;
    std::size_t one = 0;
};

class FiniteSemiring {
public:
    std::size_t size() const { return t_.carrier.size(); }
    const std::vector<std::string>& carrier() const { return t_.carrier; }
    const std::string& name(std::size_t i) const { return t_.carrier.at(i); }
    std::size_t add(std::size_t a, std::size_t b) const { return t_.add[a][b]; }
    std::size_t mul(std::size_t a, std::size_t b) const { return t_.mul[a][b]; }
    std::size_t zero() const { return t_.zero; }
    std::size_t one() const { return t_.one; }
    const SemiringTables& tables() const { return t_; }
    std::size_t index_of(const std::string& name) const;
    std::vector<std::string> names_of(Subset s) const;

    bool semidomain() const { return semidomain_; }
    bool ring() const { return ring_; }
    bool proper() const { return !ring_; }

    bool operator==(const FiniteSemiring& o) const { return t_.carrier == o.t_.carrier && t_.add == o.t_.add &&
                                                            t_.mul == o.t_.mul && t_.zero == o.t_.zero && t_.one == o.t_.one; }

private:
    friend FiniteSemiring validate_semiring(SemiringTables tables);
    SemiringTables t_;
    bool semidomain_ = false;
    bool ring_ = false;
};

// Throws AxiomViolation naming the axiom and a witness.
FiniteSemiring validate_semiring(SemiringTables tables);

// B(n,i) on {0,...,n-1}: ordinary arithmetic below n, otherwise the unique u in
// [i, n-1] congruent to the result modulo n-i. Throws BadParameters.
FiniteSemiring bni(int n, int i);

// Componentwise product; elements are named "(a,b)". Throws SizeLimitExceeded.
FiniteSemiring product(const FiniteSemiring& r1, const FiniteSemiring& r2, const Limits& limits = {});

struct Ideal {
    Subset members;
    bool operator==(const Ideal&) const = default;
};

// All ideals in canonical order. Throws SizeLimitExceeded above limits.max_semiring_carrier.
std::vector<Ideal> enumerate_ideals(const FiniteSemiring& r, const Limits& limits = {});

Subset ideal_closure(const FiniteSemiring& r, Subset generators);

// Elementwise prime test: proper, and ab in P forces a or b in P.
bool is_prime(const FiniteSemiring& r, const Ideal& p);
// Ideal-wise prime test: proper, and IJ in P forces I or J in P.
bool is_prime_by_ideals(const FiniteSemiring& r, const Ideal& p, const std::vector<Ideal>& ideals);

std::string ideal_name(const FiniteSemiring& r, const Ideal& ideal);

struct Spectrum {
    std::vector<Ideal> ideals;
    std::vector<Ideal> primes;   // canonical order
    XTopContext context;         // ideal lattice with X = primes
    FiniteSpace space;           // Zariski topology on the primes
    std::size_t krull_dim = 0;
};

Spectrum spectrum(const FiniteSemiring& r, const Limits& limits = {});

struct RegularityReport {
    Verdict von_neumann_regular;
    Verdict pi_regular;
    Verdict reduced;
    Subset nilradical;
};

RegularityReport regularity_predicates(const FiniteSemiring& r);

}  // namespace spectop
