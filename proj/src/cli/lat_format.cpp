#include "spectop/cli/lat_format.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "spectop/errors.hpp"

namespace spectop::cli {

namespace {

bool name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view s, std::size_t offset) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
        if (i > start) out.push_back({std::string(s.substr(start, i - start)), offset + start + 1});
    }
    return out;
}

void check_name(const Token& t, std::size_t line, std::size_t column_shift = 0, std::string_view name = {}) {
    const std::string_view n = name.empty() ? std::string_view(t.text) : name;
    for (std::size_t k = 0; k < n.size(); ++k)
        if (!name_char(n[k])) throw ParseError(line, t.column + column_shift + k, "invalid character in name '" + std::string(n) + "'");
    if (n.empty()) throw ParseError(line, t.column + column_shift, "empty name");
}

}  // namespace

LatticeFile parse_lattice_text(std::string_view text) {
    LatticeFile f;
    std::set<std::string> declared;
    bool have_elements = false, have_bottom = false, have_top = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;

    auto require_declared = [&](const std::string& name, std::size_t line) {
        if (!declared.count(name)) throw SemanticError(line, "element '" + name + "' used before it is declared");
    };

    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) {
            if (end == text.size()) break;
            continue;
        }
        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError(line_no, first + 1, "expected 'key:'");
        std::string key(line.substr(first, colon - first));
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        const auto tokens = split(line.substr(colon + 1), colon + 1);

        if (key == "elements") {
            if (have_elements) throw SemanticError(line_no, "elements declared twice");
            have_elements = true;
            for (const auto& t : tokens) {
                check_name(t, line_no);
                if (!declared.insert(t.text).second) throw SemanticError(line_no, "duplicate element '" + t.text + "'");
                f.elements.push_back(t.text);
            }
        } else if (key == "leq") {
            for (const auto& t : tokens) {
                const auto lt = t.text.find('<');
                if (lt == std::string::npos || t.text.find('<', lt + 1) != std::string::npos)
                    throw ParseError(line_no, t.column, "expected a pair 'a<b'");
                const std::string a = t.text.substr(0, lt), b = t.text.substr(lt + 1);
                check_name(t, line_no, 0, a);
                check_name(t, line_no, lt + 1, b);
                require_declared(a, line_no);
                require_declared(b, line_no);
                f.pairs.emplace_back(a, b);
            }
        } else if (key == "bottom" || key == "top") {
            if (tokens.size() != 1)
                throw ParseError(line_no, colon + 2, "'" + key + "' takes exactly one element");
            check_name(tokens[0], line_no);
            require_declared(tokens[0].text, line_no);
            bool& seen = key == "bottom" ? have_bottom : have_top;
            if (seen) throw SemanticError(line_no, key + " declared twice");
            seen = true;
            (key == "bottom" ? f.bottom : f.top) = tokens[0].text;
        } else if (key == "x") {
            if (f.x) throw SemanticError(line_no, "x declared twice");
            std::vector<std::string> xs;
            std::set<std::string> seen;
            for (const auto& t : tokens) {
                check_name(t, line_no);
                require_declared(t.text, line_no);
                if (!seen.insert(t.text).second) throw SemanticError(line_no, "duplicate element '" + t.text + "' in x");
                xs.push_back(t.text);
            }
            f.x = std::move(xs);
        } else {
            throw ParseError(line_no, first + 1, "unknown key '" + key + "'");
        }
        if (end == text.size()) break;
    }
    if (!have_elements) throw SemanticError(line_no, "missing 'elements:' line");
    if (!have_bottom) throw SemanticError(line_no, "missing 'bottom:' line");
    if (!have_top) throw SemanticError(line_no, "missing 'top:' line");
    return f;
}

LatticeFile read_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_lattice_text(buf.str());
}

BoundedLattice to_lattice(const LatticeFile& file) {
    return lattice_from_poset(build_poset(file.elements, file.pairs), file.bottom, file.top);
}

}  // namespace spectop::cli
