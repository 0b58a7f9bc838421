#include <algorithm>

#include "spectop/errors.hpp"
#include "spectop/subset.hpp"
#include "spectop/verdict.hpp"

namespace spectop {

namespace {

std::string join_names(const std::vector<std::string>& names, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += sep;
        out += names[i];
    }
    return out;
}

}  // namespace

bool canonical_less(Subset a, Subset b) {
    if (a.size() != b.size()) return a.size() < b.size();
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return false;
}

std::string format_names(const std::vector<std::string>& names) {
    return "{" + join_names(names, ",") + "}";
}

std::string Witness::to_string() const {
    std::string out = note;
    for (const auto& [label, names] : sets) {
        if (!out.empty()) out += "; ";
        out += label + "=" + format_names(names);
    }
    return out;
}

CycleError::CycleError(std::vector<std::string> cycle)
    : Error("order relation has a cycle: " + join_names(cycle, " <= ") + " <= " + cycle.front()),
      cycle_(std::move(cycle)) {}

AxiomViolation::AxiomViolation(std::string axiom, std::vector<std::string> witness)
    : Error("semiring axiom violated: " + axiom + " at (" + join_names(witness, ", ") + ")"),
      axiom_(std::move(axiom)), witness_(std::move(witness)) {}

}  // namespace spectop
