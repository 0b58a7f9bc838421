#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spectop/limits.hpp"
#include "spectop/subset.hpp"
#include "spectop/verdict.hpp"

namespace spectop {

// A finite topological space given by its closed sets.
class FiniteSpace {
public:
    // Validates that the family contains the empty and full sets and is closed under
    // pairwise union and intersection. Duplicates are dropped.
    FiniteSpace(std::vector<std::string> points, std::vector<Subset> closed);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::vector<std::string> names_of(Subset s) const;
    Subset all() const { return Subset::first(size()); }

    // Closed sets in canonical order.
    const std::vector<Subset>& closed_sets() const { return closed_; }
    std::vector<Subset> open_sets() const;

    bool is_closed(Subset s) const;
    bool is_open(Subset s) const { return is_closed(all() - s); }
    bool is_clopen(Subset s) const { return is_closed(s) && is_open(s); }

    Subset closure(Subset s) const;
    Subset interior(Subset s) const { return all() - closure(all() - s); }
    // Smallest open set containing s.
    Subset kernel(Subset s) const;
    Subset point_closure(std::size_t i) const { return cl_[i]; }
    Subset point_kernel(std::size_t i) const { return ker_[i]; }

    // Induced topology on the points of y; point order is preserved.
    FiniteSpace subspace(Subset y) const;

    bool operator==(const FiniteSpace& o) const { return names_ == o.names_ && closed_ == o.closed_; }

private:
    struct Trusted {};
    FiniteSpace(Trusted, std::vector<std::string> points, std::vector<Subset> closed);
    void index();

    std::vector<std::string> names_;
    std::vector<Subset> closed_;
    std::vector<std::uint64_t> sorted_bits_;
    std::vector<Subset> cl_;
    std::vector<Subset> ker_;
};

struct PointClass {
    std::size_t point = 0;
    bool closed = false;
    bool isolated = false;
    bool kerneled = false;
    bool regular_open = false;
    Subset kernel;
};

std::vector<PointClass> classify_points(const FiniteSpace& s);

enum class TLevel { none, t0, t_quarter, t_half, t_three_quarter, t1, t2, t2_half, t3, t3_half, t4, t5, t6 };

std::string to_string(TLevel level);
TLevel t_level(const FiniteSpace& s);

enum class FamilyKind { holds, extremely_non, neither };

std::string to_string(FamilyKind kind);

// One separation task: a closed set and a point (regular) or two disjoint closed sets (normal).
struct SeparationTask {
    Subset closed;
    Subset other;
    bool separable = false;
};

struct FamilyReport {
    FamilyKind kind = FamilyKind::holds;
    Verdict holds;
    Verdict extremely_non;
    std::vector<SeparationTask> tasks;
    std::size_t separable_count = 0;
};

FamilyReport regular_family(const FiniteSpace& s);
FamilyReport normal_family(const FiniteSpace& s);

Verdict completely_regular(const FiniteSpace& s);

struct CompletelyNormalReport {
    Verdict verdict;
    std::optional<bool> subspace_route;  // unset when above the subspace limit
    bool separated_pairs_route = false;
};

CompletelyNormalReport completely_normal(const FiniteSpace& s, const Limits& limits = {});

struct PerfectlyNormalReport {
    Verdict verdict;
    bool clopen_route = false;
    bool vedenissoff_route = false;
};

PerfectlyNormalReport perfectly_normal(const FiniteSpace& s);

Verdict g_delta_space(const FiniteSpace& s);

struct HausdorffReport {
    Verdict t2;
    Verdict quasi_hausdorff;
    Verdict extremely_non_hausdorff;
    Verdict anti_hausdorff;
};

HausdorffReport t2_and_quasi(const FiniteSpace& s, const Limits& limits = {});

struct ConnectivityReport {
    Verdict connected;
    Verdict hyperconnected;
    Verdict ultraconnected;
};

ConnectivityReport connectivity(const FiniteSpace& s);

struct SoberReport {
    Verdict sober;
    Verdict spectral;
    Verdict stone;
};

SoberReport sober_spectral_stone(const FiniteSpace& s);

// x ~> y iff y lies in the closure of x. Row i is the set of such y.
std::vector<Subset> specialization(const FiniteSpace& s);

std::size_t krull_dim(const FiniteSpace& s);

// Both throw SizeLimitExceeded above limits.max_subspace_points.
Verdict anti_regular(const FiniteSpace& s, const Limits& limits = {});
Verdict anti_normal(const FiniteSpace& s, const Limits& limits = {});

// map[i] is the image in s2 of point i of s1. Throws SizeLimitExceeded above the limit.
std::optional<std::vector<std::size_t>> find_homeomorphism(const FiniteSpace& s1, const FiniteSpace& s2,
                                                           const Limits& limits = {});
Verdict homeomorphic(const FiniteSpace& s1, const FiniteSpace& s2, const Limits& limits = {});

// Shape of the specialization order: P<k>, C<k>, V<k>, T<k>, D<k>, or "other".
std::string shape_label(const FiniteSpace& s);

struct SeparationReport {
    Verdict t0, t_quarter, t_half, t_three_quarter, t1, t2, t2_half;
    Verdict quasi_hausdorff;
    Verdict regular, completely_regular, normal, completely_normal, perfectly_normal;
    Verdict t3, t3_half, t4, t5, t6;
    Verdict extremely_non_hausdorff, anti_hausdorff;
    Verdict extremely_non_regular, extremely_non_normal;
    std::optional<Verdict> anti_regular, anti_normal;  // unset above the subspace limit
    Verdict connected, hyperconnected, ultraconnected;
    Verdict sober, spectral, stone;
    Verdict g_delta_space;
    std::size_t krull_dim = 0;
    TLevel level = TLevel::none;

    std::size_t regular_tasks = 0, regular_separable = 0;
    std::size_t normal_tasks = 0, normal_separable = 0;
    std::optional<bool> cn_subspace_route;
    bool cn_separated_pairs_route = false;
    bool pn_clopen_route = false;
    bool pn_vedenissoff_route = false;
};

SeparationReport separation_report(const FiniteSpace& s, const Limits& limits = {});

}  // namespace spectop
