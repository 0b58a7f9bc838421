#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spectop/limits.hpp"
#include "spectop/topology.hpp"
#include "spectop/xtop.hpp"

namespace spectop {

// Sets are lattice indices; per-point vectors follow ctx.points().
struct MaxMinProfile {
    Subset max_x;
    Subset min_x;
    std::vector<Subset> max_of;
    std::vector<Subset> min_of;
};

MaxMinProfile max_min_profile(const XTopContext& ctx);

struct StructureFlags {
    Verdict atomic, coatomic, local, colocal;
};

StructureFlags structure_flags(const XTopContext& ctx);

struct PmProperties {
    Verdict pm, m, jacobson, dual_jacobson;
};

PmProperties pm_properties(const XTopContext& ctx);

struct Retraction {
    std::vector<std::size_t> map;  // point index -> lattice index of a maximal element
};

struct RetractionResult {
    std::optional<Retraction> retraction;
    bool from_pm_construction = false;
    std::size_t candidates_examined = 0;
    Witness obstruction;  // set when no retraction exists
};

// Throws SizeLimitExceeded when the exhaustive fallback would exceed the candidate limit.
RetractionResult find_retraction(const XTopContext& ctx, const Limits& limits = {});

enum class TreeKind { wedge_forest, vee_tree_found, neither };

std::string to_string(TreeKind kind);

struct TreeComponent {
    Subset elements;
    std::size_t apex;  // unique maximal element of the component
    bool wedge_tree = false;
};

struct TreeDecomposition {
    TreeKind kind = TreeKind::neither;
    std::vector<TreeComponent> components;  // comparability components of (X, <=)
    bool wedge_forest = false;              // every component satisfies both wedge-tree clauses
    bool strongly_disjoint = false;         // components pairwise strongly disjoint
    std::optional<std::array<std::size_t, 3>> vee;  // m below the incomparable y and z
    Witness witness;
};

TreeDecomposition tree_analysis(const XTopContext& ctx);

struct ImplicationCheck {
    std::string name;
    bool hypotheses_hold = false;
    bool conclusion_holds = false;
    bool consistent = true;
};

// Everything the theorem checks need, computed independently from first principles.
struct InstanceFacts {
    FiniteSpace space;
    SeparationReport separation;
    MaxMinProfile profile;
    StructureFlags flags;
    PmProperties pm;
    RetractionResult retraction;
    bool retraction_decided = false;
    TreeDecomposition trees;
    bool completely_strongly_x_irreducible = false;
};

InstanceFacts instance_facts(const XTopContext& ctx, const Limits& limits = {});

std::vector<ImplicationCheck> theorem_deciders(const XTopContext& ctx, const InstanceFacts& facts);
std::vector<ImplicationCheck> theorem_deciders(const XTopContext& ctx, const Limits& limits = {});

}  // namespace spectop
