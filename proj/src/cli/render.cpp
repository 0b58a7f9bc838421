#include "spectop/cli/render.hpp"

#include <stdexcept>

#include "json.hpp"
#include "spectop/errors.hpp"

namespace spectop::cli {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

ReportSection& ReportSection::add(std::string key, std::string value) {
    items.push_back({std::move(key), std::move(value), std::nullopt, {}});
    return *this;
}

ReportSection& ReportSection::add(std::string key, const Verdict& v, std::string value) {
    items.push_back({std::move(key), std::move(value), v.holds, v.witness});
    return *this;
}

const ReportSection& RenderedReport::section(const std::string& title) const {
    for (const auto& s : sections)
        if (s.title == title) return s;
    throw std::out_of_range("no report section '" + title + "'");
}

const ReportItem& RenderedReport::item(const std::string& title, const std::string& key) const {
    for (const auto& it : section(title).items)
        if (it.key == key) return it;
    throw std::out_of_range("no item '" + key + "' in section '" + title + "'");
}

std::string render_text(const RenderedReport& report) {
    std::string out = "source: " + report.source + "\n";
    if (!report.x.empty()) out += "X: " + format_names(report.x) + "\n";
    for (const auto& sec : report.sections) {
        out += "\n[" + sec.title + "]\n";
        for (const auto& it : sec.items) {
            out += "  " + it.key + ":";
            if (it.verdict) out += " " + yes_no(*it.verdict);
            if (!it.value.empty()) out += (it.verdict ? "  " : " ") + it.value;
            out += "\n";
            if (!it.witness.empty()) out += "      " + it.witness.to_string() + "\n";
        }
    }
    return out;
}

std::string render_struct(const RenderedReport& report) {
    nlohmann::json doc;
    doc["source"] = report.source;
    doc["x"] = report.x;
    nlohmann::json sections = nlohmann::json::object();
    for (const auto& sec : report.sections) {
        nlohmann::json items = nlohmann::json::object();
        for (const auto& it : sec.items) {
            nlohmann::json entry = nlohmann::json::object();
            if (!it.value.empty()) entry["value"] = it.value;
            if (it.verdict) entry["holds"] = *it.verdict;
            if (!it.witness.empty()) {
                nlohmann::json w;
                w["note"] = it.witness.note;
                w["sets"] = nlohmann::json::array();
                for (const auto& [label, names] : it.witness.sets) w["sets"].push_back({{"label", label}, {"members", names}});
                entry["witness"] = std::move(w);
            }
            if (items.contains(it.key)) throw InternalInconsistency("duplicate report key '" + it.key + "' in " + sec.title);
            items[it.key] = std::move(entry);
        }
        sections[sec.title] = std::move(items);
    }
    doc["sections"] = std::move(sections);
    return doc.dump(2) + "\n";
}

std::string render(const RenderedReport& report, Format format) {
    return format == Format::text ? render_text(report) : render_struct(report);
}

}  // namespace spectop::cli
