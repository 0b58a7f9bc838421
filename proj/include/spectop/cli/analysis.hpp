#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spectop/cli/lat_format.hpp"
#include "spectop/cli/render.hpp"
#include "spectop/limits.hpp"

namespace spectop::cli {

struct LatticeFileSource {
    std::string path;
    LatticeFile file;
};

struct ExampleSource {
    std::string name;
};

struct BniSource {
    int n = 0;
    int i = 0;
};

struct ProductSource {
    BniSource first;
    BniSource second;
};

using Source = std::variant<LatticeFileSource, ExampleSource, BniSource, ProductSource>;

struct AnalysisRequest {
    Source source;
    std::optional<std::vector<std::string>> x_subset;
    Limits limits;
    Format format = Format::text;
};

// Reads a .lat file; its x line (if any) becomes the request's X.
AnalysisRequest parse_input(const std::string& path);

// "6,3"
BniSource parse_bni_spec(std::string_view spec);
// "bni(3,2) x bni(3,2)"
ProductSource parse_product_spec(std::string_view spec);
// "a,b,c"
std::vector<std::string> parse_name_list(std::string_view list);

std::string describe(const Source& source);

// Throws BadParameters when X is missing for a lattice source or given for a semiring source.
void validate(const AnalysisRequest& request);

RenderedReport analyze(const AnalysisRequest& request);

}  // namespace spectop::cli
