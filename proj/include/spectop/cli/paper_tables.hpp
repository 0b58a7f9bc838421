#pragma once

#include <string>
#include <vector>

#include "spectop/limits.hpp"
#include "spectop/verdict.hpp"

namespace spectop::cli {

struct TableCell {
    std::string column;
    std::string expected;
    std::string computed;
    Witness witness;  // explains the computed value when it differs from the expected one

    bool matches() const { return expected == computed; }
};

struct TableRow {
    std::vector<std::string> lead;  // row labels, e.g. {"X", "{0,x,y,w}"}
    std::vector<TableCell> cells;
};

struct PaperTable {
    std::string title;
    std::vector<std::string> lead_header;
    std::vector<TableRow> rows;

    std::size_t mismatches() const;
};

// Summary of the five subspaces of the six-element lattice.
PaperTable subspace_table(const Limits& limits = {});
// Spectra of representative B(n,i).
PaperTable bni_table(const Limits& limits = {});

std::string render_table_text(const PaperTable& table);
std::string render_tables_struct(const std::vector<PaperTable>& tables);

}  // namespace spectop::cli
