#include "spectop/cli/paper_tables.hpp"

#include <algorithm>

#include "json.hpp"
#include "spectop/cli/examples.hpp"
#include "spectop/semiring.hpp"
#include "spectop/topology.hpp"
#include "spectop/xtop.hpp"

namespace spectop::cli {

namespace {

const char* const tick = "✓";
const char* const cross = "✗";

std::string mark(bool b) { return b ? tick : cross; }

const Verdict* level_verdict(const SeparationReport& s, const std::string& level) {
    if (level == "T0") return &s.t0;
    if (level == "T1/4") return &s.t_quarter;
    if (level == "T1/2") return &s.t_half;
    if (level == "T3/4") return &s.t_three_quarter;
    if (level == "T1") return &s.t1;
    if (level == "T2") return &s.t2;
    if (level == "T2.5") return &s.t2_half;
    if (level == "T3") return &s.t3;
    if (level == "T3.5") return &s.t3_half;
    if (level == "T4") return &s.t4;
    if (level == "T5") return &s.t5;
    if (level == "T6") return &s.t6;
    return nullptr;
}

std::string order_note(const FiniteSpace& sp) {
    const auto rows = specialization(sp);
    std::string out = "specialization:";
    for (std::size_t a = 0; a < sp.size(); ++a)
        for (std::size_t b : rows[a] - Subset::single(a)) out += " " + sp.name(a) + "<" + sp.name(b);
    return out;
}

// Expected cells in column order; empty strings are skipped.
struct Expected {
    std::vector<std::string> lead;
    std::vector<std::string> cells;
};

void fill_row(TableRow& row, const std::vector<std::string>& columns, const std::vector<std::string>& expected,
              const FiniteSpace& sp, const SeparationReport& s) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const std::string& col = columns[c];
        TableCell cell{col, expected[c], {}, {}};
        const Verdict* v = nullptr;
        if (col == "Graph") {
            cell.computed = shape_label(sp);
            cell.witness.note = order_note(sp);
        } else if (col == "K.dim") {
            cell.computed = std::to_string(s.krull_dim);
            cell.witness.note = order_note(sp);
        } else if (col == "T") {
            cell.computed = to_string(s.level);
            const Verdict* exp = level_verdict(s, cell.expected);
            const bool expected_higher = exp && !exp->holds;
            v = expected_higher ? exp : level_verdict(s, cell.computed);
            if (v) {
                cell.witness = v->witness;
                cell.witness.note = (expected_higher ? cell.expected + " fails: " : cell.computed + " holds: ") +
                                    cell.witness.note;
                v = nullptr;
            }
        } else {
            if (col == "UC") v = &s.ultraconnected;
            else if (col == "HC") v = &s.hyperconnected;
            else if (col == "R") v = &s.regular;
            else if (col == "CR") v = &s.completely_regular;
            else if (col == "N") v = &s.normal;
            else if (col == "CN") v = &s.completely_normal;
            else if (col == "PN") v = &s.perfectly_normal;
            cell.computed = mark(v->holds);
            cell.witness = v->witness;
        }
        if (cell.matches()) cell.witness = {};
        row.cells.push_back(std::move(cell));
    }
}

// Code points, so the check marks line up.
std::size_t display_len(const std::string& s) {
    std::size_t len = 0;
    for (unsigned char ch : s) len += (ch & 0xC0) != 0x80;
    return len;
}

std::string pad(const std::string& s, std::size_t width) {
    const std::size_t len = display_len(s);
    return s + std::string(width > len ? width - len : 0, ' ');
}

}  // namespace

std::size_t PaperTable::mismatches() const {
    std::size_t n = 0;
    for (const auto& r : rows)
        for (const auto& c : r.cells) n += !c.matches();
    return n;
}

PaperTable subspace_table(const Limits& limits) {
    const std::vector<std::string> columns{"Graph", "K.dim", "UC", "HC", "R", "CR", "N", "CN", "PN", "T"};
    const std::string y = tick, n = cross;
    const std::vector<Expected> expected{
        {{"X", "{0,x,y,w}"}, {"D4", "2", y, y, n, n, y, n, n, "T0"}},
        {{"Y", "{x,y,w}"}, {"T2", "1", y, n, n, n, y, y, n, "T3/4"}},
        {{"Q", "{0,x,y}"}, {"V2", "1", n, y, n, n, n, n, n, "T1/2"}},
        {{"H", "{x,y}"}, {"P2", "0", y, n, y, y, y, y, y, "T6"}},
        {{"G", "{x,w}"}, {"C2", "1", y, y, n, n, y, y, n, "T1/2"}},
    };
    PaperTable t{"subspaces of the six-element lattice", {"space", "X"}, {}};
    for (const auto& e : expected) {
        const LatticeFile file = builtin_example(e.lead[0]);
        const XTopContext ctx(to_lattice(file), *file.x);
        const FiniteSpace sp = generate_space(ctx);
        TableRow row{{e.lead[0], format_names(ctx.names_of(ctx.x_set()))}, {}};
        fill_row(row, columns, e.cells, sp, separation_report(sp, limits));
        t.rows.push_back(std::move(row));
    }
    return t;
}

PaperTable bni_table(const Limits& limits) {
    const std::vector<std::string> columns{"Graph", "K.dim", "R", "CR", "N", "CN", "PN", "T"};
    const std::string y = tick, n = cross;
    struct Instance {
        int n, i;
        std::string n_range, i_range, omega;
        std::vector<std::string> cells;
    };
    const std::vector<Instance> instances{
        {12, 0, ">=2", "0", "w(n)", {"P2", "0", y, y, y, y, y, "T6"}},
        {2, 1, "2", "1", "0", {"P1", "0", y, y, y, y, y, "T6"}},
        {3, 1, ">=3", "1", "1", {"C2", "1", n, n, y, y, n, "T1/2"}},
        {7, 1, ">=7", "1", ">=2", {"V2", "1", n, n, n, n, n, "T1/2"}},
        {4, 3, ">=3", "n-1", "0", {"C2", "1", n, n, y, y, n, "T1/2"}},
        {6, 3, ">=4", "[2,n-2]", "1", {"C3", "2", n, n, y, y, n, "T1/2"}},
        {8, 2, ">=8", "[2,n-2]", ">=2", {"D4", "2", n, n, y, n, n, "T0"}},
    };
    PaperTable t{"prime spectra of B(n,i)", {"instance", "n", "i", "w(m)"}, {}};
    for (const auto& inst : instances) {
        const Spectrum spec = spectrum(bni(inst.n, inst.i), limits);
        TableRow row{{"B(" + std::to_string(inst.n) + "," + std::to_string(inst.i) + ")", inst.n_range, inst.i_range,
                      inst.omega},
                     {}};
        fill_row(row, columns, inst.cells, spec.space, separation_report(spec.space, limits));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string render_table_text(const PaperTable& table) {
    std::vector<std::string> header = table.lead_header;
    if (!table.rows.empty())
        for (const auto& c : table.rows.front().cells) header.push_back(c.column);
    std::vector<std::vector<std::string>> grid{header};
    for (const auto& r : table.rows) {
        std::vector<std::string> line = r.lead;
        for (const auto& c : r.cells) line.push_back(c.matches() ? c.computed : c.computed + "(!" + c.expected + ")");
        grid.push_back(std::move(line));
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : grid)
        for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], display_len(line[k]));

    std::string out = table.title + "\n";
    for (const auto& line : grid) {
        std::string text;
        for (std::size_t k = 0; k < line.size(); ++k) text += pad(line[k], width[k] + 2);
        while (!text.empty() && text.back() == ' ') text.pop_back();
        out += text + "\n";
    }
    for (const auto& r : table.rows)
        for (const auto& c : r.cells)
            if (!c.matches())
                out += "MISMATCH " + r.lead[0] + " " + c.column + ": expected " + c.expected + ", computed " +
                       c.computed + "; " + c.witness.to_string() + "\n";
    return out;
}

std::string render_tables_struct(const std::vector<PaperTable>& tables) {
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& t : tables) {
        nlohmann::json rows = nlohmann::json::object();
        for (const auto& r : t.rows) {
            nlohmann::json cells = nlohmann::json::object();
            for (const auto& c : r.cells) {
                nlohmann::json cell{{"expected", c.expected}, {"computed", c.computed}, {"matches", c.matches()}};
                if (!c.witness.empty()) cell["witness"] = c.witness.to_string();
                cells[c.column] = std::move(cell);
            }
            rows[r.lead[0]] = {{"lead", r.lead}, {"cells", std::move(cells)}};
        }
        doc[t.title] = {{"rows", std::move(rows)}, {"mismatches", t.mismatches()}};
    }
    return doc.dump(2) + "\n";
}

}  // namespace spectop::cli
