#include "spectop/cli/analysis.hpp"

#include <charconv>
#include <memory>

#include "spectop/cli/examples.hpp"
#include "spectop/errors.hpp"
#include "spectop/order_structures.hpp"
#include "spectop/semiring.hpp"

namespace spectop::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view what) {
    s = trim(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw BadParameters("expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
    return v;
}

BniSource parse_bni_call(std::string_view s) {
    s = trim(s);
    if (s.substr(0, 4) != "bni(" || s.empty() || s.back() != ')')
        throw BadParameters("expected 'bni(N,I)', got '" + std::string(s) + "'");
    return parse_bni_spec(s.substr(4, s.size() - 5));
}

std::string bni_label(const BniSource& b) { return "bni(" + std::to_string(b.n) + "," + std::to_string(b.i) + ")"; }

std::string names(const XTopContext& ctx, Subset s) { return format_names(ctx.names_of(s)); }
std::string names(const FiniteSpace& s, Subset set) { return format_names(s.names_of(set)); }

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
    return out;
}

ReportSection lattice_section(const XTopContext& ctx) {
    const auto& lat = ctx.lattice();
    ReportSection sec{"lattice", {}};
    sec.add("elements", format_names(lat.order().names()));
    std::vector<std::string> edges;
    for (auto [a, b] : lat.order().hasse_edges()) edges.push_back(lat.name(a) + "<" + lat.name(b));
    sec.add("covers", join(edges));
    sec.add("bottom", lat.name(lat.bottom()));
    sec.add("top", lat.name(lat.top()));
    return sec;
}

void add_space_sections(RenderedReport& report, const XTopContext& ctx, const Limits& limits) {
    const auto& lat = ctx.lattice();
    const XTopVerdict xv = is_xtop(ctx);
    ReportSection xsec{"xtop", {}};
    xsec.add("is_xtop", xv.verdict);
    xsec.add("strong_irreducibility_route", yes_no(xv.irreducibility_route));
    xsec.add("union_route", yes_no(xv.union_route));
    xsec.add("C^X", names(ctx, ctx.cx()));
    report.sections.push_back(std::move(xsec));
    if (!xv.verdict.holds) return;

    const InstanceFacts f = instance_facts(ctx, limits);
    const FiniteSpace& sp = f.space;
    const SeparationReport& s = f.separation;

    ReportSection closed{"closed sets", {}}, open{"open sets", {}};
    for (std::size_t a = 0; a < lat.size(); ++a) {
        closed.add("V(" + lat.name(a) + ")", names(ctx, ctx.variety(a)));
        open.add("D(" + lat.name(a) + ")", names(ctx, ctx.x_set() - ctx.variety(a)));
    }
    report.sections.push_back(std::move(closed));
    report.sections.push_back(std::move(open));

    ReportSection pts{"points", {}};
    Subset cl, iso;
    for (const auto& pc : classify_points(sp)) {
        if (pc.closed) cl.insert(pc.point);
        if (pc.isolated) iso.insert(pc.point);
        pts.add(sp.name(pc.point), "closed=" + yes_no(pc.closed) + " isolated=" + yes_no(pc.isolated) +
                                       " kerneled=" + yes_no(pc.kerneled) + " regular_open=" + yes_no(pc.regular_open) +
                                       " kernel=" + names(sp, pc.kernel));
    }
    pts.add("Cl", names(sp, cl));
    pts.add("Iso", names(sp, iso));
    report.sections.push_back(std::move(pts));

    ReportSection spec{"specialization", {}};
    const auto rows = specialization(sp);
    std::vector<std::string> edges;
    for (std::size_t a = 0; a < sp.size(); ++a)
        for (std::size_t b : rows[a] - Subset::single(a)) {
            bool cover = true;
            for (std::size_t c : rows[a] - Subset::single(a) - Subset::single(b))
                if (rows[c].contains(b)) cover = false;
            if (cover) edges.push_back(sp.name(a) + "<" + sp.name(b));
        }
    spec.add("covers", join(edges));
    spec.add("shape", shape_label(sp));
    spec.add("krull_dim", std::to_string(s.krull_dim));
    report.sections.push_back(std::move(spec));

    ReportSection sep{"separation", {}};
    sep.add("t_level", to_string(s.level));
    sep.add("T0", s.t0).add("T1/4", s.t_quarter).add("T1/2", s.t_half).add("T3/4", s.t_three_quarter);
    sep.add("T1", s.t1).add("T2", s.t2).add("T2.5", s.t2_half).add("quasi_hausdorff", s.quasi_hausdorff);
    sep.add("regular", s.regular).add("completely_regular", s.completely_regular).add("normal", s.normal);
    sep.add("completely_normal", s.completely_normal,
            "subspace_route=" + (s.cn_subspace_route ? yes_no(*s.cn_subspace_route) : std::string("skipped")) +
                " separated_pairs_route=" + yes_no(s.cn_separated_pairs_route));
    sep.add("perfectly_normal", s.perfectly_normal,
            "clopen_route=" + yes_no(s.pn_clopen_route) + " vedenissoff_route=" + yes_no(s.pn_vedenissoff_route));
    sep.add("g_delta_space", s.g_delta_space);
    sep.add("T3", s.t3).add("T3.5", s.t3_half).add("T4", s.t4).add("T5", s.t5).add("T6", s.t6);
    sep.add("extremely_non_hausdorff", s.extremely_non_hausdorff).add("anti_hausdorff", s.anti_hausdorff);
    sep.add("extremely_non_regular", s.extremely_non_regular).add("extremely_non_normal", s.extremely_non_normal);
    if (s.anti_regular) sep.add("anti_regular", *s.anti_regular);
    else sep.add("anti_regular", "skipped above the subspace limit");
    if (s.anti_normal) sep.add("anti_normal", *s.anti_normal);
    else sep.add("anti_normal", "skipped above the subspace limit");
    sep.add("connected", s.connected).add("hyperconnected", s.hyperconnected).add("ultraconnected", s.ultraconnected);
    sep.add("sober", s.sober).add("spectral", s.spectral).add("stone", s.stone);
    report.sections.push_back(std::move(sep));

    auto task_section = [&](std::string title, const FamilyReport& fam) {
        ReportSection sec{std::move(title), {}};
        sec.add("kind", to_string(fam.kind));
        sec.add("separable", std::to_string(fam.separable_count) + " of " + std::to_string(fam.tasks.size()));
        for (const auto& t : fam.tasks) {
            std::string key = "(" + names(sp, t.closed) + "," + names(sp, t.other) + ")";
            Verdict v{t.separable, {}};
            if (t.separable) {
                v.witness.note = "separated by";
                v.witness.sets.emplace_back("U", sp.names_of(sp.kernel(t.closed)));
                v.witness.sets.emplace_back("V", sp.names_of(sp.kernel(t.other)));
            } else {
                v.witness.note = "kernels meet";
                v.witness.sets.emplace_back("Ker meet", sp.names_of(sp.kernel(t.closed) & sp.kernel(t.other)));
            }
            sec.add(std::move(key), v);
        }
        report.sections.push_back(std::move(sec));
    };
    task_section("regular tasks", regular_family(sp));
    task_section("normal tasks", normal_family(sp));

    ReportSection ord{"order", {}};
    ord.add("Max", names(ctx, f.profile.max_x));
    ord.add("Min", names(ctx, f.profile.min_x));
    for (std::size_t i = 0; i < ctx.points().size(); ++i) {
        const std::string& x = lat.name(ctx.points()[i]);
        ord.add("Max(" + x + ";X)", names(ctx, f.profile.max_of[i]));
        ord.add("Min(" + x + ";X)", names(ctx, f.profile.min_of[i]));
    }
    ord.add("atomic", f.flags.atomic).add("coatomic", f.flags.coatomic);
    ord.add("local", f.flags.local).add("colocal", f.flags.colocal);
    ord.add("pm", f.pm.pm).add("m", f.pm.m).add("jacobson", f.pm.jacobson).add("dual_jacobson", f.pm.dual_jacobson);
    ord.add("completely_strongly_x_irreducible", yes_no(f.completely_strongly_x_irreducible));
    report.sections.push_back(std::move(ord));

    ReportSection ret{"retraction", {}};
    if (!f.retraction_decided) {
        ret.add("max_retractable", f.retraction.obstruction.note);
    } else if (f.retraction.retraction) {
        std::vector<std::string> map;
        for (std::size_t i = 0; i < ctx.points().size(); ++i)
            map.push_back(lat.name(ctx.points()[i]) + "->" + lat.name(f.retraction.retraction->map[i]));
        ret.add("max_retractable", Verdict{true, {}}, join(map));
        ret.add("method", f.retraction.from_pm_construction ? "pm construction"
                                                            : "exhaustive search, " +
                                                                  std::to_string(f.retraction.candidates_examined) +
                                                                  " candidates");
    } else {
        ret.add("max_retractable", Verdict{false, f.retraction.obstruction});
    }
    report.sections.push_back(std::move(ret));

    ReportSection tr{"trees", {}};
    tr.add("kind", Verdict{f.trees.kind == TreeKind::wedge_forest, f.trees.witness}, to_string(f.trees.kind));
    for (std::size_t k = 0; k < f.trees.components.size(); ++k) {
        const auto& c = f.trees.components[k];
        tr.add("component " + std::to_string(k + 1),
               names(ctx, c.elements) + (c.wedge_tree ? " apex=" + lat.name(c.apex) : std::string()) +
                   " wedge_tree=" + yes_no(c.wedge_tree));
    }
    tr.add("wedge_forest", yes_no(f.trees.wedge_forest));
    tr.add("strongly_disjoint", yes_no(f.trees.strongly_disjoint));
    if (f.trees.vee) {
        const auto& v = *f.trees.vee;
        tr.add("vee", lat.name(v[0]) + " below " + lat.name(v[1]) + " and " + lat.name(v[2]));
    }
    report.sections.push_back(std::move(tr));

    ReportSection th{"theorem checks", {}};
    for (const auto& c : theorem_deciders(ctx, f))
        th.add(c.name, Verdict{c.consistent, {}},
               "hypotheses=" + yes_no(c.hypotheses_hold) + " conclusion=" + yes_no(c.conclusion_holds));
    report.sections.push_back(std::move(th));
}

void add_semiring_sections(RenderedReport& report, const FiniteSemiring& r, const Limits& limits) {
    ReportSection sec{"semiring", {}};
    sec.add("carrier", format_names(r.carrier()));
    sec.add("proper", yes_no(r.proper()));
    sec.add("ring", yes_no(r.ring()));
    sec.add("semidomain", yes_no(r.semidomain()));
    const RegularityReport reg = regularity_predicates(r);
    sec.add("von_neumann_regular", reg.von_neumann_regular);
    sec.add("pi_regular", reg.pi_regular);
    sec.add("reduced", reg.reduced);
    sec.add("nilradical", format_names(r.names_of(reg.nilradical)));

    const Spectrum spec = spectrum(r, limits);
    std::vector<std::string> ideals, primes;
    for (const auto& i : spec.ideals) ideals.push_back(ideal_name(r, i));
    for (const auto& p : spec.primes) primes.push_back(ideal_name(r, p));
    sec.add("ideals", join(ideals));
    sec.add("spec", join(primes));
    sec.add("krull_dim", std::to_string(spec.krull_dim));
    report.sections.push_back(std::move(sec));
    report.x = primes;

    report.sections.push_back(lattice_section(spec.context));
    add_space_sections(report, spec.context, limits);
}

}  // namespace

std::vector<std::string> parse_name_list(std::string_view list) {
    std::vector<std::string> out;
    while (true) {
        const auto comma = list.find(',');
        const auto part = trim(list.substr(0, comma));
        if (part.empty()) throw BadParameters("empty name in list");
        out.emplace_back(part);
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
    }
    return out;
}

BniSource parse_bni_spec(std::string_view spec) {
    const auto comma = spec.find(',');
    if (comma == std::string_view::npos) throw BadParameters("expected 'N,I', got '" + std::string(spec) + "'");
    return {parse_int(spec.substr(0, comma), "N"), parse_int(spec.substr(comma + 1), "I")};
}

ProductSource parse_product_spec(std::string_view spec) {
    // The factors contain no letter x, so the first standalone 'x' splits them.
    const auto close = spec.find(')');
    if (close == std::string_view::npos) throw BadParameters("expected 'bni(N1,I1) x bni(N2,I2)'");
    const auto rest = trim(spec.substr(close + 1));
    if (rest.empty() || rest.front() != 'x') throw BadParameters("expected 'x' between the factors");
    return {parse_bni_call(spec.substr(0, close + 1)), parse_bni_call(rest.substr(1))};
}

AnalysisRequest parse_input(const std::string& path) {
    AnalysisRequest req;
    LatticeFile file = read_lattice_file(path);
    req.x_subset = file.x;
    req.source = LatticeFileSource{path, std::move(file)};
    return req;
}

std::string describe(const Source& source) {
    struct {
        std::string operator()(const LatticeFileSource& s) const { return "file:" + s.path; }
        std::string operator()(const ExampleSource& s) const { return "example:" + s.name; }
        std::string operator()(const BniSource& s) const { return bni_label(s); }
        std::string operator()(const ProductSource& s) const { return bni_label(s.first) + " x " + bni_label(s.second); }
    } visitor;
    return std::visit(visitor, source);
}

void validate(const AnalysisRequest& request) {
    const bool semiring = std::holds_alternative<BniSource>(request.source) ||
                          std::holds_alternative<ProductSource>(request.source);
    if (semiring && request.x_subset) throw BadParameters("X is the prime spectrum for semiring sources; drop --x");
    if (std::holds_alternative<LatticeFileSource>(request.source) && !request.x_subset)
        throw BadParameters("lattice file has no 'x:' line; pass --x");
}

RenderedReport analyze(const AnalysisRequest& request) {
    validate(request);
    RenderedReport report;
    report.source = describe(request.source);

    if (const auto* b = std::get_if<BniSource>(&request.source)) {
        add_semiring_sections(report, bni(b->n, b->i), request.limits);
        return report;
    }
    if (const auto* p = std::get_if<ProductSource>(&request.source)) {
        add_semiring_sections(report,
                              product(bni(p->first.n, p->first.i), bni(p->second.n, p->second.i), request.limits),
                              request.limits);
        return report;
    }

    LatticeFile file = std::holds_alternative<ExampleSource>(request.source)
                           ? builtin_example(std::get<ExampleSource>(request.source).name)
                           : std::get<LatticeFileSource>(request.source).file;
    if (request.x_subset) file.x = request.x_subset;
    auto lattice = std::make_shared<const BoundedLattice>(to_lattice(file));
    const XTopContext ctx(lattice, lattice->order().subset_of(*file.x));
    report.x = ctx.names_of(ctx.x_set());
    report.sections.push_back(lattice_section(ctx));
    add_space_sections(report, ctx, request.limits);
    return report;
}

}  // namespace spectop::cli
