// spectop: analyze finite X-top lattices and semiring spectra.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "spectop/cli/analysis.hpp"
#include "spectop/cli/examples.hpp"
#include "spectop/cli/paper_tables.hpp"
#include "spectop/errors.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_input_error = 2;

std::optional<std::size_t> env_limit() {
    const char* v = std::getenv("SPECTOP_LIMIT");
    if (!v || !*v) return std::nullopt;
    try {
        std::size_t pos = 0;
        const unsigned long n = std::stoul(v, &pos);
        if (v[pos] != '\0') throw std::invalid_argument(v);
        return n;
    } catch (const std::exception&) {
        throw spectop::BadParameters("SPECTOP_LIMIT must be a non-negative integer, got '" + std::string(v) + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace spectop;
    CLI::App app{"Separation axioms and order structure of finite X-top lattices and semiring spectra"};
    app.require_subcommand(1);

    std::optional<std::size_t> limit_flag;
    std::string format = "text";
    app.add_option("--limit-subspaces", limit_flag, "Largest space on which subspaces are enumerated");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "struct"}));

    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one lattice, example or semiring");
    analyze_cmd->fallthrough();
    std::string file, x_list, bni_spec, product_spec, example;
    auto* file_opt = analyze_cmd->add_option("file", file, ".lat file");
    auto* x_opt = analyze_cmd->add_option("--x", x_list, "Comma-separated X, overrides the file's x line");
    auto* bni_opt = analyze_cmd->add_option("--bni", bni_spec, "B(n,i) as N,I");
    auto* product_opt = analyze_cmd->add_option("--product", product_spec, "\"bni(N1,I1) x bni(N2,I2)\"");
    auto* example_opt = analyze_cmd->add_option("--example", example, "Built-in example")
                            ->check(CLI::IsMember(cli::example_names()));
    file_opt->excludes(bni_opt, product_opt, example_opt);
    bni_opt->excludes(product_opt, example_opt);
    product_opt->excludes(example_opt);
    analyze_cmd->require_option(1, 2);

    auto* tables_cmd = app.add_subcommand("paper-tables", "Recompute the two summary tables");
    tables_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    }

    try {
        Limits limits;
        if (auto v = env_limit()) limits.max_subspace_points = *v;
        if (limit_flag) limits.max_subspace_points = *limit_flag;
        const auto fmt = format == "struct" ? cli::Format::structured : cli::Format::text;

        if (*tables_cmd) {
            const std::vector<cli::PaperTable> tables{cli::subspace_table(limits), cli::bni_table(limits)};
            std::size_t mismatches = 0;
            if (fmt == cli::Format::structured) {
                std::cout << cli::render_tables_struct(tables);
            } else {
                for (std::size_t k = 0; k < tables.size(); ++k)
                    std::cout << (k ? "\n" : "") << cli::render_table_text(tables[k]);
            }
            for (const auto& t : tables) mismatches += t.mismatches();
            if (mismatches) {
                std::cerr << mismatches << " cell(s) disagree with the expected values\n";
                return exit_mismatch;
            }
            return exit_ok;
        }

        const bool have_source = *file_opt || *bni_opt || *product_opt || *example_opt;
        if (!have_source) throw BadParameters("analyze needs a file, --bni, --product or --example");
        cli::AnalysisRequest req;
        if (*file_opt) req = cli::parse_input(file);
        else if (*bni_opt) req.source = cli::parse_bni_spec(bni_spec);
        else if (*product_opt) req.source = cli::parse_product_spec(product_spec);
        else req.source = cli::ExampleSource{example};
        if (*x_opt) req.x_subset = cli::parse_name_list(x_list);
        req.limits = limits;
        req.format = fmt;
        std::cout << cli::render(cli::analyze(req), req.format);
        return exit_ok;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return exit_input_error;
}
