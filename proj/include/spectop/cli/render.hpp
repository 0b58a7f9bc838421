#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectop/verdict.hpp"

namespace spectop::cli {

enum class Format { text, structured };

struct ReportItem {
    std::string key;
    std::string value;
    std::optional<bool> verdict;
    Witness witness;
};

struct ReportSection {
    std::string title;
    std::vector<ReportItem> items;

    ReportSection& add(std::string key, std::string value);
    ReportSection& add(std::string key, const Verdict& v, std::string value = {});
};

struct RenderedReport {
    std::string source;
    std::vector<std::string> x;
    std::vector<ReportSection> sections;

    // Throws std::out_of_range when absent.
    const ReportSection& section(const std::string& title) const;
    const ReportItem& item(const std::string& title, const std::string& key) const;
};

std::string render_text(const RenderedReport& report);
// Nested key/value document with sorted keys.
std::string render_struct(const RenderedReport& report);
std::string render(const RenderedReport& report, Format format);

std::string yes_no(bool b);

}  // namespace spectop::cli
