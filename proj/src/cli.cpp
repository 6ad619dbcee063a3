#include "fermat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermat/error.hpp"
#include "fermat/formulas.hpp"
#include "fermat/interp.hpp"
#include "fermat/parse.hpp"
#include "fermat/render.hpp"
#include "fermat/scheme.hpp"

namespace fermat {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string spec;
    std::string config_id;
    std::string scheme_file;
    int random_points = 0;
    int ambient = 2;
    std::string formula;
    int degree = -1;
    std::vector<int> flat_dims;
    std::vector<int> mults;
    int trials = 3;
    std::uint64_t seed = 1;
    long box = kDefaultBox;
    std::string out;
    std::string format = "text";
    std::string derived;
    int t = -1;
    int min = 2;
    std::string point;
    std::string viewport = "-2,2,-2,2";
    std::string infinity;
    int resolution = 512;
    bool no_timing = false;
};

Json config_json(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    if (!c.spec.empty()) j["spec"] = c.spec;
    if (!c.config_id.empty()) j["config_id"] = c.config_id;
    if (!c.scheme_file.empty()) j["scheme"] = c.scheme_file;
    if (c.random_points > 0) {
        j["random_points"] = c.random_points;
        j["ambient"] = c.ambient;
    }
    if (!c.formula.empty()) j["formula"] = c.formula;
    if (c.degree >= 0) j["degree"] = c.degree;
    if (!c.flat_dims.empty()) {
        auto t = Json::array();
        for (std::size_t i = 0; i < c.flat_dims.size(); ++i) t.push_back({{"flat_dim", c.flat_dims[i]}, {"mult", c.mults[i]}});
        j["template"] = t;
    }
    if (c.command == "unexpected" || c.command == "verify-formula" || c.random_points > 0) {
        j["trials"] = c.trials;
        j["seed"] = c.seed;
        j["box"] = c.box;
    }
    if (!c.derived.empty()) j["derived"] = c.derived;
    if (c.t >= 0) {
        j["t"] = c.t;
        j["min"] = c.min;
    }
    if (c.command == "render") {
        if (!c.point.empty()) j["point"] = c.point;
        j["viewport"] = c.viewport;
        j["resolution"] = c.resolution;
        if (!c.infinity.empty()) j["infinity"] = c.infinity;
    }
    j["format"] = c.format;
    return j;
}

std::string text_header(const RunConfig& c) {
    std::ostringstream out;
    out << "# fermat " << library_version() << "\n";
    out << "# config " << config_json(c).dump() << "\n";
    return out.str();
}

ProjPoint parse_point(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }), s.end());
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw ParseError("expected ')'", s.size());
        s = s.substr(1, s.size() - 2);
    }
    std::vector<Cyclo> coords;
    std::size_t start = 0;
    for (;;) {
        const std::size_t colon = s.find(':', start);
        coords.push_back(parse_scalar(s.substr(start, colon == std::string::npos ? std::string::npos : colon - start)));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    try {
        return ProjPoint(std::move(coords));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// `t=1 min=3`
void parse_derived(const std::string& text, int& t, int& min) {
    std::istringstream in(text);
    std::string tok;
    bool have_t = false;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw UsageError("--derived expects 't=<int> min=<int>'");
        const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw UsageError("--derived: '" + val + "' is not an integer");
        }
        if (key == "t") {
            t = v;
            have_t = true;
        } else if (key == "min") {
            min = v;
        } else {
            throw UsageError("--derived: unknown key '" + key + "'");
        }
    }
    if (!have_t) throw UsageError("--derived needs t=<int>");
}

struct Base {
    std::string name;
    FatScheme scheme;
    std::optional<NamedConfig> named;
};

Base resolve_base(const RunConfig& c) {
    const int given = !c.config_id.empty() + !c.scheme_file.empty() + (c.random_points > 0) + !c.spec.empty();
    if (given != 1) throw UsageError("give exactly one of --config-id, --scheme, --random-points, --spec");
    Base b;
    if (!c.config_id.empty()) {
        b.named = named_configuration(ConfigKey::parse(c.config_id));
        b.name = b.named->key.to_string();
        b.scheme = b.named->scheme;
    } else if (!c.scheme_file.empty()) {
        std::ifstream in(c.scheme_file);
        if (!in) throw UsageError("cannot open scheme file '" + c.scheme_file + "'");
        b.scheme = read_scheme(in);
        b.name = "file:" + c.scheme_file;
    } else if (c.random_points > 0) {
        if (c.ambient < 1) throw UsageError("--ambient must be >= 1");
        // separate stream from the trial draws
        TrialRng rng(c.seed ^ 0x9E3779B97F4A7C15ULL);
        b.scheme.ambient = c.ambient;
        std::vector<Flat> taken;
        for (int i = 0; i < c.random_points; ++i) {
            taken.push_back(random_flat(c.ambient, 0, rng, b.scheme, taken, c.box));
            b.scheme.add(taken.back(), 1);
        }
        b.name = "RANDOM(" + std::to_string(c.random_points) + " points in P^" + std::to_string(c.ambient) + ")";
    } else {
        const auto arr = parse_arrangement_spec(c.spec);
        b.scheme.ambient = arr.N;
        for (const auto& p : dual_points(arr)) b.scheme.add_point(p);
        b.name = "DUAL " + arr.spec_string();
    }
    return b;
}

std::vector<FlatTemplate> resolve_template(const RunConfig& c, int ambient) {
    if (c.flat_dims.empty()) throw UsageError("give at least one --flat-dim/--mult pair");
    if (c.flat_dims.size() != c.mults.size()) throw UsageError("--flat-dim and --mult must be given in pairs");
    std::vector<FlatTemplate> t;
    for (std::size_t i = 0; i < c.flat_dims.size(); ++i) {
        if (c.flat_dims[i] < 0 || c.flat_dims[i] >= ambient)
            throw UsageError("--flat-dim must lie in [0, " + std::to_string(ambient - 1) + "]");
        if (c.mults[i] < 1) throw UsageError("--mult must be >= 1");
        t.push_back({c.flat_dims[i], c.mults[i]});
    }
    return t;
}

void require_degree(const RunConfig& c) {
    if (c.degree < 0) throw UsageError("--degree is required and must be >= 0");
}

Json flats_json(const std::vector<Flat>& flats) {
    auto a = Json::array();
    for (const auto& f : flats) a.push_back(f.to_string());
    return a;
}

std::string list_text(const std::string& title, const std::vector<std::string>& items) {
    std::ostringstream out;
    out << title << " " << items.size() << "\n";
    for (const auto& s : items) out << "  " << s << "\n";
    return out.str();
}

struct Output {
    Json record;
    std::string text;
};

Output cmd_arrangement(const RunConfig& c, bool dual_only) {
    if (c.spec.empty()) throw UsageError("--spec is required");
    const auto arr = parse_arrangement_spec(c.spec);
    Output o;
    o.record["record"] = dual_only ? "dual" : "arrangement";
    o.record["arrangement"] = arr.spec_string();
    o.record["N"] = arr.N;
    o.record["n"] = arr.n;
    o.record["k"] = arr.k;
    std::vector<std::string> hs, ps;
    for (const auto& h : arr.hyperplanes) hs.push_back(h.to_string());
    for (const auto& p : dual_points(arr)) ps.push_back(p.to_string());
    std::ostringstream text;
    text << "arrangement " << arr.spec_string() << " (N=" << arr.N << ", n=" << arr.n << ", k=" << arr.k << ")\n";
    if (!dual_only) {
        o.record["real"] = arr.is_real();
        o.record["hyperplanes"] = hs;
        text << list_text("hyperplanes", hs);
    }
    o.record["dual_points"] = ps;
    text << list_text("dual points", ps);
    if (!dual_only && !c.derived.empty()) {
        int t = -1, min = 2;
        parse_derived(c.derived, t, min);
        const auto flats = derived_flats(arr, t, min);
        o.record["derived"] = {{"t", t}, {"min", min}, {"count", flats.size()}, {"flats", flats_json(flats)}};
        std::vector<std::string> fs;
        for (const auto& f : flats) fs.push_back(f.to_string());
        text << list_text("derived t=" + std::to_string(t) + " min=" + std::to_string(min) + ":", fs);
    }
    o.text = text.str();
    return o;
}

Output cmd_derived(const RunConfig& c) {
    if (c.spec.empty()) throw UsageError("--spec is required");
    int t = c.t, min = c.min;
    if (!c.derived.empty()) parse_derived(c.derived, t, min);
    if (t < 0) throw UsageError("--t is required");
    const auto arr = parse_arrangement_spec(c.spec);
    const auto flats = derived_flats(arr, t, min);
    Output o;
    o.record["record"] = "derived";
    o.record["arrangement"] = arr.spec_string();
    o.record["t"] = t;
    o.record["min"] = min;
    o.record["count"] = flats.size();
    auto items = Json::array();
    std::vector<std::string> fs;
    for (const auto& f : flats) {
        const auto m = lattice_membership(arr, f);
        items.push_back({{"flat", f.to_string()}, {"containing", m.containing_count}, {"member", m.member}});
        fs.push_back(f.to_string() + "  [on " + std::to_string(m.containing_count) + "]");
    }
    o.record["flats"] = items;
    o.text = "arrangement " + arr.spec_string() + "\n" +
             list_text("derived t=" + std::to_string(t) + " min=" + std::to_string(min) + ":", fs);
    return o;
}

Output cmd_dimension(const RunConfig& c) {
    require_degree(c);
    const Base b = resolve_base(c);
    const auto mat = conditions_rows(b.scheme, c.degree);
    const std::size_t rank = matrix_rank(mat.rows, mat.ncols, lcm_order(mat.root_order, common_order(mat.rows)));
    Output o;
    o.record["record"] = "dimension";
    o.record["scheme"] = b.name;
    o.record["components"] = b.scheme.size();
    o.record["degree"] = c.degree;
    o.record["ncols"] = mat.ncols;
    o.record["rank"] = rank;
    o.record["dimension"] = mat.ncols - rank;
    std::ostringstream t;
    t << "scheme      " << b.name << " (" << b.scheme.size() << " components)\n";
    t << "degree      " << c.degree << "\n";
    t << "monomials   " << mat.ncols << "\n";
    t << "rank        " << rank << "\n";
    t << "dimension   " << mat.ncols - rank << "\n";
    o.text = t.str();
    return o;
}

Output cmd_hilbert(const RunConfig& c) {
    require_degree(c);
    const Base b = resolve_base(c);
    const auto hf = hilbert_function(b.scheme, c.degree);
    Output o;
    o.record["record"] = "hilbert";
    o.record["scheme"] = b.name;
    o.record["d_max"] = c.degree;
    o.record["hilbert_function"] = hf;
    std::ostringstream t;
    t << "scheme  " << b.name << "\n";
    t << "d  HF\n";
    for (std::size_t d = 0; d < hf.size(); ++d) t << d << "  " << hf[d] << "\n";
    o.text = t.str();
    return o;
}

Output cmd_unexpected(const RunConfig& c) {
    require_degree(c);
    if (c.trials < 1) throw UsageError("--trials must be >= 1");
    const Base b = resolve_base(c);
    const auto templ = resolve_template(c, b.scheme.ambient);
    const auto r = decide_unexpected(b.scheme, templ, c.degree, c.trials, c.seed, b.name, c.box);
    Output o;
    o.record = Json::parse(report_to_json(r));
    o.text = report_to_text(r);
    return o;
}

Output cmd_verify_formula(const RunConfig& c) {
    if (c.formula.empty()) throw UsageError("--formula is required");
    if (c.trials < 1) throw UsageError("--trials must be >= 1");
    const auto v = verify_formula(FormulaSpec::parse(c.formula), c.trials, c.seed);
    Output o;
    o.record = Json::parse(verification_to_json(v, !c.no_timing));
    o.text = verification_to_text(v, !c.no_timing);
    return o;
}

Output cmd_verify_generators(const RunConfig& c) {
    if (c.config_id.empty()) throw UsageError("--config-id is required");
    const auto cfg = named_configuration(ConfigKey::parse(c.config_id));
    if (cfg.published_generators.empty()) throw UsageError(cfg.key.to_string() + " has no published generators");
    const auto each = verify_generators_each(cfg);
    const auto names = default_var_names(cfg.scheme.ambient + 1);
    Output o;
    o.record["record"] = "generators";
    o.record["config"] = cfg.key.to_string();
    o.record["components"] = cfg.scheme.size();
    std::ostringstream t;
    t << "config      " << cfg.key.to_string() << " (" << cfg.scheme.size() << " components)\n";
    auto gens = Json::array();
    int max_deg = 0, min_deg = 1 << 20;
    for (std::size_t i = 0; i < each.size(); ++i) {
        const auto& g = cfg.published_generators[i];
        const int deg = g.degree().value_or(0);
        max_deg = std::max(max_deg, deg);
        min_deg = std::min(min_deg, deg);
        gens.push_back({{"degree", deg}, {"vanishes", static_cast<bool>(each[i])}, {"polynomial", g.to_string(names)}});
        t << "generator   deg " << deg << (each[i] ? "  vanishes   " : "  FAILS      ") << g.to_string(names) << "\n";
    }
    o.record["generators"] = gens;
    const bool all = std::all_of(each.begin(), each.end(), [](bool b) { return b; });
    o.record["all_vanish"] = all;
    t << "all vanish  " << (all ? "yes" : "no") << "\n";
    auto dims = Json::array();
    t << std::left << std::setw(8) << "degree" << std::setw(11) << "generated" << "I(Z)_d\n";
    for (int d = min_deg; d <= max_deg + 2; ++d) {
        const std::size_t gen = generated_dimension(cfg.published_generators, d);
        const std::size_t full = system_dimension(cfg.scheme, d);
        dims.push_back({{"degree", d}, {"generated", gen}, {"ideal", full}});
        t << std::setw(8) << d << std::setw(11) << gen << full << "\n";
    }
    o.record["degreewise"] = dims;
    const auto coords = coordinate_points_in(cfg.scheme);
    o.record["coordinate_points"] = coords;
    t << "coordinate points in Z: " << coords.size() << "\n";
    o.text = t.str();
    return o;
}

Output cmd_render(const RunConfig& c, std::string& svg) {
    RenderInput in;
    RenderOptions opt;
    opt.view = parse_viewport(c.viewport);
    opt.resolution = c.resolution;
    if (!c.infinity.empty()) opt.infinity = parse_linear_form(c.infinity, 3);
    if (c.spec.empty() && c.formula.empty()) throw UsageError("give --spec and/or --formula");
    if (!c.spec.empty()) {
        in.arrangement = parse_arrangement_spec(c.spec);
        in.title = in.arrangement->spec_string();
    }
    if (!c.formula.empty()) {
        const auto spec = FormulaSpec::parse(c.formula);
        const auto fam = formula_family(spec);
        if (fam.ambient != 2 || fam.existence_only) throw UsageError("only plane curve formulas can be rendered");
        if (c.point.empty()) throw UsageError("--point is required with --formula");
        const ProjPoint p = parse_point(c.point);
        if (p.size() != 3) throw UsageError("--point needs three coordinates");
        in.curve = specialize(build_formula(spec), 2, p.coords());
        in.marked = p;
        const auto cfg = named_configuration(fam.configs.front());
        bool real = true;
        for (const auto& comp : cfg.scheme.components) {
            const ProjPoint q = comp.flat.as_point();
            for (const auto& x : q.coords()) real = real && x.is_rational();
        }
        if (real)
            for (const auto& comp : cfg.scheme.components) in.points.push_back(comp.flat.as_point());
        in.title += (in.title.empty() ? "" : " + ") + spec.to_string() + " at " + p.to_string();
    }
    svg = render_svg(in, opt);
    Output o;
    o.record["record"] = "render";
    o.record["title"] = in.title;
    o.record["bytes"] = svg.size();
    if (!c.out.empty()) o.record["file"] = c.out;
    o.text = "rendered " + in.title + " (" + std::to_string(svg.size()) + " bytes)" +
             (c.out.empty() ? "" : " to " + c.out) + "\n";
    return o;
}

void add_common(CLI::App* sub, RunConfig& c) {
    sub->add_option("--out", c.out, "Write the result to this file");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
}

void add_base(CLI::App* sub, RunConfig& c) {
    sub->add_option("--config-id", c.config_id, "Named configuration, e.g. B3_DUAL, FERMAT_DUAL(3,2), LINES42");
    sub->add_option("--scheme", c.scheme_file, "Scheme file");
    sub->add_option("--spec", c.spec, "Dual points of the arrangement A(N+1,k+1,n)");
    sub->add_option("--random-points", c.random_points, "Random rational points drawn from the seed");
    sub->add_option("--ambient", c.ambient, "Ambient dimension for --random-points");
    sub->add_option("--seed", c.seed, "Seed");
    sub->add_option("--box", c.box, "Random coordinates are drawn from [-box, box]")->check(CLI::NonNegativeNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Fermat-type arrangements, fat schemes and unexpected hypersurfaces", "fermat"};
    app.set_version_flag("--version", std::string(library_version()));
    app.require_subcommand(1);

    auto* arr = app.add_subcommand("arrangement", "List hyperplanes, dual points and derived flats");
    arr->add_option("--spec", c.spec, "A(N+1,k+1,n)")->required();
    arr->add_option("--derived", c.derived, "Derived flats, e.g. \"t=1 min=3\"");
    add_common(arr, c);

    auto* dual = app.add_subcommand("dual", "Dual points of an arrangement");
    dual->add_option("--spec", c.spec, "A(N+1,k+1,n)")->required();
    add_common(dual, c);

    auto* der = app.add_subcommand("derived", "Derived flats of the intersection lattice");
    der->add_option("--spec", c.spec, "A(N+1,k+1,n)")->required();
    der->add_option("--t", c.t, "Flat dimension");
    der->add_option("--min", c.min, "Minimum number of containing hyperplanes");
    der->add_option("--derived", c.derived, "Alternative form \"t=1 min=3\"");
    add_common(der, c);

    auto* dim = app.add_subcommand("dimension", "Dimension of degree-d forms vanishing on a scheme");
    add_base(dim, c);
    dim->add_option("--degree", c.degree, "Degree")->required();
    add_common(dim, c);

    auto* hil = app.add_subcommand("hilbert", "Hilbert function of a scheme up to a degree");
    add_base(hil, c);
    hil->add_option("--degree", c.degree, "Largest degree")->required();
    add_common(hil, c);

    auto* une = app.add_subcommand("unexpected", "Decide unexpectedness with respect to general fat flats");
    add_base(une, c);
    une->add_option("--degree", c.degree, "Degree")->required();
    une->add_option("--flat-dim", c.flat_dims, "Dimension of a general flat (repeatable, paired with --mult)")
        ->take_all()
        ->allow_extra_args(false);
    une->add_option("--mult", c.mults, "Multiplicity of the general flat (repeatable)")->take_all()->allow_extra_args(false);
    une->add_option("--trials", c.trials, "Random trials");
    add_common(une, c);

    auto* vf = app.add_subcommand("verify-formula", "Verify a closed-form unexpected curve or surface");
    vf->add_option("--formula", c.formula, "B3, M3, M4, GEN(m), BMSS, MULT4(n), P5")->required();
    vf->add_option("--trials", c.trials, "Random trials for the uniqueness check");
    vf->add_option("--seed", c.seed, "Seed");
    vf->add_flag("--no-timing", c.no_timing, "Omit wall time for byte-identical output");
    add_common(vf, c);

    auto* vg = app.add_subcommand("verify-generators", "Check published ideal generators against a configuration");
    vg->add_option("--config-id", c.config_id, "Named configuration")->required();
    add_common(vg, c);

    auto* ren = app.add_subcommand("render", "SVG of a real arrangement and/or a specialized curve");
    ren->add_option("--spec", c.spec, "A(N+1,k+1,n) with n <= 2");
    ren->add_option("--formula", c.formula, "Plane curve formula id");
    ren->add_option("--point", c.point, "General point, e.g. 2:3:5");
    ren->add_option("--viewport", c.viewport, "xmin,xmax,ymin,ymax");
    ren->add_option("--resolution", c.resolution, "Contour grid cells per side");
    ren->add_option("--infinity", c.infinity, "Line at infinity of the chart, e.g. 3*x0+5*x1+7*x2");
    add_common(ren, c);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    c.command = app.get_subcommands().front()->get_name();

    try {
        Output o;
        std::string svg;
        if (c.command == "arrangement") o = cmd_arrangement(c, false);
        else if (c.command == "dual") o = cmd_arrangement(c, true);
        else if (c.command == "derived") o = cmd_derived(c);
        else if (c.command == "dimension") o = cmd_dimension(c);
        else if (c.command == "hilbert") o = cmd_hilbert(c);
        else if (c.command == "unexpected") o = cmd_unexpected(c);
        else if (c.command == "verify-formula") o = cmd_verify_formula(c);
        else if (c.command == "verify-generators") o = cmd_verify_generators(c);
        else if (c.command == "render") o = cmd_render(c, svg);

        std::string body;
        if (c.format == "structured") {
            Json rec;
            rec["record"] = o.record.contains("record") ? o.record["record"] : Json(c.command);
            rec["version"] = library_version();
            rec["config"] = config_json(c);
            for (auto it = o.record.begin(); it != o.record.end(); ++it)
                if (it.key() != "record" && it.key() != "version") rec[it.key()] = it.value();
            body = rec.dump(2) + "\n";
        } else {
            body = text_header(c) + o.text;
        }

        if (c.command == "render") {
            if (c.out.empty()) {
                out << svg;
                return kExitOk;
            }
            std::ofstream f(c.out, std::ios::binary);
            if (!f) throw ComputationError("cannot write '" + c.out + "'");
            f << svg;
            out << body;
            return kExitOk;
        }
        if (c.out.empty()) {
            out << body;
        } else {
            std::ofstream f(c.out, std::ios::binary);
            if (!f) throw ComputationError("cannot write '" + c.out + "'");
            f << body;
        }
        return kExitOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ComputationError& e) {
        err << "computation failed: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "computation failed: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace fermat
