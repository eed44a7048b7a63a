#include "canon/cli/commands.hpp"

#include "canon/cli/svg.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace canon::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

int parse_int(const std::string& text, const char* what)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw InputError(std::string("malformed ") + what + " '" + text + "'");
    }
    if (used != text.size()) throw InputError(std::string("malformed ") + what + " '" + text + "'");
    return v;
}

std::vector<std::string> expect_args(const std::string& body, std::size_t n, const std::string& spec)
{
    auto parts = split(body, ',');
    if (parts.size() != n)
        throw InputError("constructor '" + spec + "' expects " + std::to_string(n) + " comma-separated values");
    return parts;
}

void emit(const json& doc, bool pretty, std::ostream& out)
{
    if (!pretty) {
        out << doc.dump() << '\n';
        return;
    }
    for (const auto& [key, value] : doc.items()) {
        out << std::left << std::setw(18) << key << ' ' << (value.is_string() ? value.get<std::string>() : value.dump())
            << '\n';
    }
    out << '\n';
}

std::string roots_summary(const ClosedFormRoots& r)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& x : r.isolated) {
        os << (first ? "" : "; ") << to_display_string(x);
        first = false;
    }
    for (const auto& p : r.pairs) {
        os << (first ? "" : "; ") << to_display_string(p.real_part) << " +- sqrt(" << to_display_string(p.radicand)
           << ")/2";
        first = false;
    }
    return os.str();
}

// Joins "--flag -3..5" into "--flag=-3..5" so ranges and negative values are
// never mistaken for short options.
std::vector<std::string> join_negative_values(const std::vector<std::string>& args)
{
    static const std::vector<std::string> value_flags{"--c1sq", "--c2", "--c1cube", "--c1c2", "--s", "--dim"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        const bool is_value_flag = std::find(value_flags.begin(), value_flags.end(), a) != value_flags.end();
        if (is_value_flag && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
            (std::isdigit(static_cast<unsigned char>(args[i + 1][1])) || args[i + 1][1] == '.')) {
            out.push_back(a + "=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(a);
        }
    }
    return out;
}

struct Common {
    bool no_timestamp = false;
    bool pretty = false;
};

void maybe_svg(const std::string& path, const std::vector<RootPanel>& panels)
{
    if (!path.empty()) write_root_svg(path, panels);
}

// --------------------------------------------------------------------------

struct StripArgs {
    std::string coeffs;
    std::vector<std::string> surface;
    std::vector<std::string> threefold;
    std::string curve;
    std::string constructor;
    int dim = 0;
    std::string svg;
};

int cmd_strip(const StripArgs& a, const Common& c, std::ostream& out)
{
    const int sources = !a.coeffs.empty() + !a.surface.empty() + !a.threefold.empty() + !a.curve.empty() +
                        !a.constructor.empty();
    if (sources != 1)
        throw InputError("strip needs exactly one of --coeffs, --surface, --threefold, --curve, --constructor");

    ConstructorSpec spec;
    if (!a.coeffs.empty())
        spec = parse_constructor("coeffs:" + a.coeffs);
    else if (!a.surface.empty())
        spec = parse_constructor("surface:" + a.surface[0] + "," + a.surface[1]);
    else if (!a.threefold.empty())
        spec = parse_constructor("threefold:" + a.threefold[0] + "," + a.threefold[1]);
    else if (!a.curve.empty())
        spec = parse_constructor("curve:" + a.curve);
    else
        spec = parse_constructor(a.constructor);

    const int dim = a.dim > 0 ? a.dim : spec.dim;
    if (spec.polynomial.is_zero()) throw InputError("strip: the polynomial is zero");

    VerdictDocument doc;
    doc.command = "strip";
    doc.input = spec.echo;
    doc.input["dim"] = dim;
    doc.polynomial = spec.polynomial;
    doc.strip = classify_strip(spec.polynomial, dim);
    doc.approx_roots = doc.strip->approx_roots;
    doc.extra["serre_symmetric"] = serre_check(spec.polynomial, dim);
    if (spec.chern) doc.extra["closed_form_roots"] = closed_form_to_json(closed_form_roots(*spec.chern));

    maybe_svg(a.svg, {RootPanel{spec.polynomial.to_string(), doc.approx_roots, dim, std::nullopt}});
    emit(doc.to_json(!c.no_timestamp), c.pretty, out);
    return kExitOk;
}

// --------------------------------------------------------------------------

struct GrassArgs {
    int k = 0;
    int n = 0;
    std::string section;
    std::string svg;
};

int cmd_grassmannian(const GrassArgs& a, const Common& c, std::ostream& out)
{
    const GrassmannianSpec g = GrassmannianSpec::make(a.k, a.n);
    const Polynomial h = hilbert_grassmannian(g);

    json mults = json::array();
    for (int i = 1; i < g.n; ++i) {
        mults.push_back(json{{"root", to_fraction_string(make_rational(-i, g.n))},
                             {"multiplicity", std::min({g.k, i, g.n - i})}});
    }

    VerdictDocument doc;
    doc.command = "grassmannian";
    doc.input = json{{"k", g.k}, {"N", g.n}};
    doc.extra["dim"] = g.dimension();

    RootPanel panel;
    panel.dim = g.dimension();
    if (a.section.empty()) {
        doc.polynomial = h;
        doc.strip = classify_strip(h, g.dimension());
        doc.approx_roots = doc.strip->approx_roots;
        doc.extra["root_multiplicities"] = mults;
        doc.extra["values"] = json{{"H(0)", to_fraction_string(h.evaluate(Rational(0)))},
                                   {"H(1)", to_fraction_string(h.evaluate(Rational(1)))}};
        panel.title = "G(" + std::to_string(g.k) + "," + std::to_string(g.n) + ")";
    } else {
        const Rational m = parse_rational(a.section);
        doc.input["section"] = to_fraction_string(m);
        const EmbeddedSection sec = restricted_hilbert(h, m);
        doc.polynomial = sec.restricted;
        doc.line = sec.line();
        doc.line_check = verify_canonical_line(sec);
        doc.approx_roots = approx_roots(sec.restricted);
        doc.extra["ambient"] = polynomial_to_json(h);
        panel.title = "section of G(" + std::to_string(g.k) + "," + std::to_string(g.n) + "), m=" +
                      to_display_string(m);
        panel.test_line = sec.line().get_d();
    }
    panel.roots = doc.approx_roots;
    maybe_svg(a.svg, {panel});
    emit(doc.to_json(!c.no_timestamp), c.pretty, out);
    return kExitOk;
}

// --------------------------------------------------------------------------

struct EmbeddedArgs {
    std::string ambient;
    std::string s;
    std::string svg;
};

int cmd_embedded(const EmbeddedArgs& a, const Common& c, std::ostream& out)
{
    const ConstructorSpec spec = parse_constructor(a.ambient);
    const Rational s = parse_rational(a.s);
    const EmbeddedSection sec = restricted_hilbert(spec.polynomial, s);

    VerdictDocument doc;
    doc.command = "embedded";
    doc.input = json{{"ambient", spec.echo}, {"s", to_fraction_string(s)}};
    doc.polynomial = sec.restricted;
    doc.line = sec.line();
    doc.line_check = verify_canonical_line(sec);
    doc.approx_roots = approx_roots(sec.restricted);
    doc.extra["ambient"] = polynomial_to_json(spec.polynomial);
    const StripVerdict ambient = classify_strip(spec.polynomial, spec.dim, false);
    doc.extra["ambient_cs"] = ambient.cs;
    doc.extra["ambient_serre_symmetric"] = serre_check(spec.polynomial, spec.dim);

    maybe_svg(a.svg, {RootPanel{"section s=" + to_display_string(s), doc.approx_roots, spec.dim, sec.line().get_d()}});
    emit(doc.to_json(!c.no_timestamp), c.pretty, out);
    return kExitOk;
}

// --------------------------------------------------------------------------

struct EhrhartArgs {
    std::string file;
    std::string catalog;
    std::string svg;
};

int cmd_ehrhart(const EhrhartArgs& a, const Common& c, std::ostream& out)
{
    if (a.file.empty() == a.catalog.empty()) throw InputError("ehrhart needs exactly one of --file, --catalog");
    const std::vector<NamedPolytope> polys = a.file.empty() ? load_catalog(a.catalog) : load_polytope_file(a.file);

    std::vector<RootPanel> panels;
    for (const auto& [name, poly] : polys) {
        const ConjectureReport r = conjecture_verdict(poly);
        VerdictDocument doc;
        doc.command = "ehrhart";
        doc.input = a.file.empty() ? json{{"catalog", a.catalog}, {"name", name}} : json{{"file", a.file}, {"name", name}};
        doc.polynomial = r.ehrhart.polynomial;
        doc.line = make_rational(-1, 2);
        doc.line_check = CanonicalLineCheck{r.ehrhart.cl, r.ehrhart.at_half};
        doc.approx_roots = approx_roots(r.ehrhart.polynomial);
        json counts = json::array();
        for (const auto& [t, n] : r.ehrhart.counts) counts.push_back(json{{"t", t}, {"points", n}});
        doc.extra["dim"] = poly.dim();
        doc.extra["vertices"] = poly.vertices();
        doc.extra["reflexive"] = r.reflexive;
        doc.extra["smooth"] = r.smooth;
        doc.extra["terminal"] = r.terminal;
        doc.extra["probe"] = probe_name(r.probe);
        doc.extra["counts"] = counts;
        emit(doc.to_json(!c.no_timestamp), c.pretty, out);
        panels.push_back(RootPanel{name, doc.approx_roots, poly.dim(), std::nullopt});
    }
    maybe_svg(a.svg, panels);
    return kExitOk;
}

// --------------------------------------------------------------------------

struct ScanArgs {
    std::string family;
    std::string c1sq, c2, c1cube, c1c2;
    std::string out;
};

json scan_row_json(const ScanRow& row)
{
    json j = chern_to_json(row.data);
    j["ratio"] = to_fraction_string(row.ratio);
    j["cs"] = row.verdict.cs;
    j["ncs"] = row.verdict.ncs;
    j["cl"] = row.verdict.cl;
    j["report_half"] = report_to_json(row.verdict.at_half);
    j["roots"] = roots_summary(closed_form_roots(row.data));
    return j;
}

std::string scan_csv(const ScanResult& result, ScanFamily family)
{
    const bool surface = family == ScanFamily::DelPezzo || family == ScanFamily::Surface;
    std::ostringstream os;
    os << "family," << (surface ? "c1sq,c2" : "c1cube,c1c2") << ",ratio,cs,ncs,cl,left_half,on_half,right_half,roots\n";
    for (const auto& row : result.rows) {
        std::string a, b;
        if (const auto* s = std::get_if<SurfaceData>(&row.data)) {
            a = to_display_string(s->c1sq);
            b = to_display_string(s->c2);
        } else if (const auto* t = std::get_if<ThreefoldData>(&row.data)) {
            a = to_display_string(t->c1cube);
            b = to_display_string(t->c1c2);
        }
        const auto& h = row.verdict.at_half;
        os << family_name(family) << ',' << a << ',' << b << ',' << to_display_string(row.ratio) << ','
           << row.verdict.cs << ',' << row.verdict.ncs << ',' << row.verdict.cl << ',' << h.left_count << ','
           << h.on_count << ',' << h.right_count << ",\"" << roots_summary(closed_form_roots(row.data)) << "\"\n";
    }
    return os.str();
}

int cmd_scan(const ScanArgs& a, const Common& c, std::ostream& out)
{
    const ScanFamily family = parse_family(a.family);
    ScanRequest req = default_scan(family);
    const bool surface = family == ScanFamily::DelPezzo || family == ScanFamily::Surface;
    const bool free_second = family == ScanFamily::Surface || family == ScanFamily::Threefold;

    if (surface && (!a.c1cube.empty() || !a.c1c2.empty()))
        throw InputError("scan: --c1cube/--c1c2 do not apply to family " + a.family);
    if (!surface && (!a.c1sq.empty() || !a.c2.empty()))
        throw InputError("scan: --c1sq/--c2 do not apply to family " + a.family);
    if (!free_second && (!a.c2.empty() || !a.c1c2.empty()))
        throw InputError("scan: family " + a.family + " fixes the second Chern number");

    const std::string& first = surface ? a.c1sq : a.c1cube;
    const std::string& second = surface ? a.c2 : a.c1c2;
    if (!first.empty()) req.first = IntRange::parse(first);
    if (!second.empty()) req.second = IntRange::parse(second);

    const ScanResult result = scan(req);
    json summary{{"rows", result.summary.rows},
                 {"cs", result.summary.cs},
                 {"ncs", result.summary.ncs},
                 {"cl", result.summary.cl},
                 {"skipped", result.summary.skipped}};
    json doc{{"tool", kToolName},
             {"version", kToolVersion},
             {"command", "scan"},
             {"input",
              json{{"family", family_name(family)},
                   {"first", std::to_string(req.first.lo) + ".." + std::to_string(req.first.hi)},
                   {"second", free_second ? std::to_string(req.second.lo) + ".." + std::to_string(req.second.hi)
                                          : std::string("constrained")}}},
             {"summary", summary}};

    if (a.out.empty()) {
        json rows = json::array();
        for (const auto& row : result.rows) rows.push_back(scan_row_json(row));
        doc["rows"] = rows;
    } else {
        const std::filesystem::path path(a.out);
        std::ofstream file(path, std::ios::binary);
        if (!file) throw IoError("cannot write " + a.out);
        if (path.extension() == ".csv") {
            file << scan_csv(result, family);
        } else {
            json rows = json::array();
            for (const auto& row : result.rows) rows.push_back(scan_row_json(row));
            file << json{{"family", family_name(family)}, {"rows", rows}, {"summary", summary}}.dump(1) << '\n';
        }
        if (!file) throw IoError("failed writing " + a.out);
        doc["out"] = a.out;
    }
    if (!c.no_timestamp) doc["timestamp"] = utc_timestamp();
    emit(doc, c.pretty, out);
    return kExitOk;
}

// --------------------------------------------------------------------------

struct LemmaArgs {
    std::size_t cases = 200;
    int max_degree = 10;
    std::string s_list = "1,2,3,4";
    std::uint64_t seed = 7;
};

int cmd_lemma(const LemmaArgs& a, const Common& c, std::ostream& out)
{
    std::vector<Rational> s_values;
    for (const auto& item : split(a.s_list, ',')) s_values.push_back(parse_rational(item));
    const LemmaSummary summary = lemma_property_suite(a.cases, a.max_degree, s_values, a.seed);
    json doc = lemma_summary_to_json(summary, a.seed);
    json svals = json::array();
    for (const auto& s : s_values) svals.push_back(to_fraction_string(s));
    doc["s_values"] = svals;
    doc["max_degree"] = a.max_degree;
    if (!c.no_timestamp) doc["timestamp"] = utc_timestamp();
    emit(doc, c.pretty, out);
    return summary.ok() ? kExitOk : kExitFailure;
}

} // namespace

ConstructorSpec parse_constructor(const std::string& spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw InputError("constructor '" + spec + "' must look like name:args (e.g. projective:3)");
    const std::string name = spec.substr(0, colon);
    const std::string body = spec.substr(colon + 1);

    ConstructorSpec out;
    out.echo = json{{"constructor", name}};
    if (name == "projective") {
        const int n = parse_int(body, "dimension");
        out.polynomial = hilbert_projective(n);
        out.dim = n;
        out.echo["n"] = n;
    } else if (name == "grassmannian") {
        auto p = expect_args(body, 2, spec);
        const GrassmannianSpec g = GrassmannianSpec::make(parse_int(p[0], "k"), parse_int(p[1], "N"));
        out.polynomial = hilbert_grassmannian(g);
        out.dim = g.dimension();
        out.echo["k"] = g.k;
        out.echo["N"] = g.n;
    } else if (name == "surface") {
        auto p = expect_args(body, 2, spec);
        SurfaceData d{parse_rational(p[0]), parse_rational(p[1])};
        out.polynomial = hilbert_surface(d);
        out.dim = 2;
        out.chern = d;
        out.echo["chern"] = chern_to_json(d);
    } else if (name == "threefold") {
        auto p = expect_args(body, 2, spec);
        ThreefoldData d{parse_rational(p[0]), parse_rational(p[1])};
        out.polynomial = hilbert_threefold(d);
        out.dim = 3;
        out.chern = d;
        out.echo["chern"] = chern_to_json(d);
    } else if (name == "curve") {
        CurveData d{parse_int(body, "genus")};
        out.polynomial = hilbert_curve(d.genus);
        out.dim = 1;
        out.chern = d;
        out.echo["chern"] = chern_to_json(d);
    } else if (name == "coeffs") {
        out.polynomial = parse_coefficients(body);
        out.dim = std::max(1, out.polynomial.degree());
        out.echo["coeffs"] = polynomial_to_json(out.polynomial)["coeffs"];
    } else {
        throw InputError("unknown constructor '" + name +
                         "' (expected projective, grassmannian, surface, threefold, curve, coeffs)");
    }
    return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact root location for Hilbert and Ehrhart polynomials", kToolName};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_flag("--no-timestamp", common.no_timestamp, "Omit the timestamp field from documents");
    app.add_flag("--pretty", common.pretty, "Print a human-readable table instead of JSON");

    StripArgs strip_args;
    auto* strip = app.add_subcommand("strip", "Canonical strip / narrowed strip / canonical line verdicts");
    strip->add_option("--coeffs", strip_args.coeffs, "Ascending coefficients, e.g. \"1/2,1,1/2\"");
    strip->add_option("--surface", strip_args.surface, "Surface Chern numbers c1^2 c2")->expected(2);
    strip->add_option("--threefold", strip_args.threefold, "Threefold Chern numbers c1^3 c1c2")->expected(2);
    strip->add_option("--curve", strip_args.curve, "Curve genus");
    strip->add_option("--constructor", strip_args.constructor, "Named constructor, e.g. projective:3");
    strip->add_option("--dim", strip_args.dim, "Dimension for the narrowed strip")->check(CLI::PositiveNumber);
    strip->add_option("--svg", strip_args.svg, "Write a root scatter SVG");

    GrassArgs grass_args;
    auto* grass = app.add_subcommand("grassmannian", "Hilbert polynomial of G(k,N) and its anticanonical sections");
    grass->add_option("k", grass_args.k)->required();
    grass->add_option("N", grass_args.n)->required();
    grass->add_option("--section", grass_args.section, "Section multiple m >= 1");
    grass->add_option("--svg", grass_args.svg, "Write a root scatter SVG");

    EmbeddedArgs emb_args;
    auto* emb = app.add_subcommand("embedded", "Restricted Hilbert polynomial H(z) - H(z - s)");
    emb->add_option("--ambient", emb_args.ambient, "Ambient constructor, e.g. projective:3 or coeffs:...")->required();
    emb->add_option("--s", emb_args.s, "Rational multiple s >= 1")->required();
    emb->add_option("--svg", emb_args.svg, "Write a root scatter SVG");

    EhrhartArgs ehr_args;
    auto* ehr = app.add_subcommand("ehrhart", "Ehrhart polynomials of lattice polytopes");
    ehr->add_option("--file", ehr_args.file, "Polytope or catalog JSON file");
    ehr->add_option("--catalog", ehr_args.catalog, "Built-in catalog: smooth-dim1, smooth-dim2, smooth-dim3");
    ehr->add_option("--svg", ehr_args.svg, "Write a multi-panel root scatter SVG");

    ScanArgs scan_args;
    auto* scn = app.add_subcommand("scan", "Scan Chern-number ranges for strip verdicts");
    scn->add_option("--family", scan_args.family, "dp | fano3 | surface | threefold")->required();
    scn->add_option("--c1sq", scan_args.c1sq, "Range a..b");
    scn->add_option("--c2", scan_args.c2, "Range a..b");
    scn->add_option("--c1cube", scan_args.c1cube, "Range a..b");
    scn->add_option("--c1c2", scan_args.c1c2, "Range a..b");
    scn->add_option("--out", scan_args.out, "Results file (.csv for CSV, JSON otherwise)");

    LemmaArgs lemma_args;
    auto* lem = app.add_subcommand("lemma-test", "Randomized canonical-line suite for H(z) - H(z - s)");
    lem->add_option("--cases", lemma_args.cases)->check(CLI::PositiveNumber);
    lem->add_option("--max-degree", lemma_args.max_degree)->check(CLI::PositiveNumber);
    lem->add_option("--s-list", lemma_args.s_list, "Comma-separated rationals >= 1");
    lem->add_option("--seed", lemma_args.seed);

    const std::vector<std::string> args = join_negative_values(raw_args);
    std::vector<const char*> argv{kToolName};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (strip->parsed()) return cmd_strip(strip_args, common, out);
        if (grass->parsed()) return cmd_grassmannian(grass_args, common, out);
        if (emb->parsed()) return cmd_embedded(emb_args, common, out);
        if (ehr->parsed()) return cmd_ehrhart(ehr_args, common, out);
        if (scn->parsed()) return cmd_scan(scan_args, common, out);
        if (lem->parsed()) return cmd_lemma(lemma_args, common, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace canon::cli
