#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hypercircle/io.hpp"

using namespace hc;
using io::json;

namespace {

constexpr int kUsage = 1, kSchemaExit = 2, kMathExit = 3, kInconclusiveExit = 4;

struct Options {
    std::string field_file, in_file, out_file, grid;
    int height = -1;
    int digits = 12;
    bool timings = false;
    std::string from = "-5", to = "5";
    int steps = 200;
};

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

struct Job {
    json doc;
    FieldPtr field;
};

Job load(const Options& o) {
    Job job{parse_document(slurp(o.in_file)), nullptr};
    if (!job.doc.is_object()) throw SchemaError("job must be a JSON object");
    if (job.doc.contains("schema") && job.doc["schema"] != io::kSchema) throw SchemaError("unsupported schema version");
    json fdoc;
    if (!o.field_file.empty()) {
        fdoc = parse_document(slurp(o.field_file));
        if (fdoc.contains("field")) fdoc = fdoc["field"];
    } else {
        fdoc = io::require(job.doc, "field");
    }
    job.field = io::field_from_json(fdoc);
    return job;
}

json header(const std::string& command, const FieldPtr& f) {
    return json{{"schema", io::kSchema}, {"command", command}, {"field", io::field_to_json(f)}};
}

MoebiusUnit unit_of(const Job& job, const char* key = "unit") { return io::unit_from_json(io::require(job.doc, key), job.field); }

// A parametrization given directly, or the one of a unit.
Parametrization parametrization_of(const Job& job) {
    if (job.doc.contains("parametrization")) return io::parametrization_from_json(job.doc["parametrization"], job.field);
    return parametrize_unit(unit_of(job), job.field);
}

std::vector<Rational> parse_grid(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(Rational::parse(item));
    }
    if (out.empty()) throw SchemaError("empty grid");
    return out;
}

json quadrics_to_json(const QuadricSystem& q) {
    json hom = json::array(), aff = json::array();
    auto hnames = variable_names("X", q.n + 1), anames = variable_names("X", q.n);
    for (const auto& g : q.homogeneous) hom.push_back(io::to_json(g, hnames));
    for (const auto& g : q.affine) aff.push_back(io::to_json(g, anames));
    return json{{"count", q.affine.size()}, {"homogeneous", hom}, {"affine", aff}};
}

json qcurve_to_json(const QCurve& c) {
    json out = json::array();
    for (const auto& r : c) out.push_back(io::to_json(r));
    return out;
}

json cmd_param(const Job& job, const Options& o) {
    MoebiusUnit u = unit_of(job);
    FieldPtr f = job.field;
    if (job.doc.contains("basis")) {
        // the same unit written in the primitive element beta
        BasisChange bc(io::element_from_json(job.doc["basis"], f));
        f = bc.target();
        u = MoebiusUnit(f, bc.forward(u.a()), bc.forward(u.b()), bc.forward(u.c()), bc.forward(u.d()));
    }
    Parametrization phi = parametrize_unit(u, f);
    json out = header("param", f);
    out["parametrization"] = io::to_json(phi);
    out["degree"] = phi.degree();
    if (o.height >= 0) out["points"] = io::points_to_json(find_rational_points(phi, o.height));
    return out;
}

json cmd_reduce(const Job& job, const Options&) {
    ReducedForm r = reduced_form(unit_of(job));
    json out = header("reduce", job.field);
    out["reduced"] = io::unit_to_json(r.reduced, job.field);
    out["lambda1"] = io::to_json(r.lambda1, job.field);
    out["lambda2"] = io::to_json(r.lambda2, job.field);
    return out;
}

json cmd_isline(const Job& job, const Options&) {
    json out = header("isline", job.field);
    out["line"] = is_line(unit_of(job));
    return out;
}

json cmd_degree(const Job& job, const Options&) {
    MoebiusUnit u = unit_of(job);
    json out = header("degree", job.field);
    out["hc_degree"] = hc_degree(u);
    out["primitive"] = is_primitive(u, job.field);
    out["parametrization_degree"] = parametrize_unit(u, job.field).degree();
    return out;
}

json cmd_infinity(const Job& job, const Options&) {
    const ProjectivePoint p = points_at_infinity_principal(job.field);
    json coords = json::array();
    for (const auto& c : p.coords()) coords.push_back(io::to_json(c, job.field));
    json out = header("infinity", job.field);
    out["point"] = coords;
    if (job.doc.contains("unit") || job.doc.contains("parametrization"))
        out["tangent_check"] = tangent_infinity_check(parametrization_of(job));
    return out;
}

json cmd_invmap(const Job& job, const Options&) {
    MoebiusUnit u = unit_of(job);
    json out = header("invmap", job.field);
    if (job.doc.contains("point")) {
        std::vector<NFElement> x;
        for (const auto& c : job.doc["point"]) x.push_back(io::element_from_json(c, job.field));
        if (x.size() != job.field->degree()) throw SchemaError("point needs one coordinate per field degree");
        out["t"] = io::to_json(inverse_point_map(u, x), job.field);
    } else {
        out["inverse"] = io::to_json(inverse_point_map(u, parametrization_of(job)), job.field);
    }
    return out;
}

json cmd_threepoints(const Job& job, const Options&) {
    auto pts = io::points_from_json(io::require(job.doc, "points"));
    if (pts.size() != 3) throw SchemaError("exactly three points are required");
    for (const auto& p : pts)
        if (p.size() != job.field->degree()) throw SchemaError("point needs one coordinate per field degree");
    MoebiusUnit u = unit_through_three_points(job.field, pts);
    json out = header("threepoints", job.field);
    out["unit"] = io::unit_to_json(u, job.field);
    out["parametrization"] = io::to_json(parametrize_unit(u, job.field));
    return out;
}

json cmd_normalform(const Job& job, const Options&) {
    MoebiusUnit u = unit_of(job);
    json out = header("normalform", job.field);
    if (is_line(u)) {
        out["line"] = true;
        return out;
    }
    ReducedForm r = reduced_form(u);
    out["line"] = false;
    out["reduced"] = io::unit_to_json(r.reduced, job.field);
    out["lambda1"] = io::to_json(r.lambda1, job.field);
    out["lambda2"] = io::to_json(r.lambda2, job.field);
    out["hc_degree"] = hc_degree(u);
    out["affine"] = io::to_json(normal_curve_affine_map(r.reduced, job.field));
    out["projective"] = io::to_json(normal_curve_projective_map(r.reduced, job.field));
    return out;
}

json cmd_implicitize(const Job& job, const Options&) {
    json out = header("implicitize", job.field);
    out["quadrics"] = quadrics_to_json(implicitize_normal(parametrization_of(job)));
    return out;
}

json cmd_invunit_eqs(const Job& job, const Options&) {
    InverseUnitEquations e = inverse_unit_equations(unit_of(job), job.field);
    auto names = variable_names("X", job.field->degree());
    json r = json::array();
    for (const auto& g : e.r) r.push_back(io::to_json(g, names));
    json out = header("invunit-eqs", job.field);
    out["r0"] = io::to_json(e.r0, names);
    out["r"] = r;
    out["s"] = io::to_json(e.s, names);
    return out;
}

json cmd_equiv(const Job& job, const Options&) {
    Parametrization phi = parametrization_of(job);
    Parametrization psi = parametrize_unit(unit_of(job, "unit2"), job.field);
    json out = header("equiv", job.field);
    auto tau = same_hypercircle(phi, psi);
    out["same_hypercircle"] = static_cast<bool>(tau);
    out["tau"] = tau ? io::unit_to_json(*tau, job.field) : json(nullptr);
    if (job.doc.contains("unit")) {
        MoebiusUnit u1 = unit_of(job), u2 = unit_of(job, "unit2");
        if (!u1.is_polynomial() && !u2.is_polynomial()) {
            AffineEquivalence a = affine_equivalence_witness(u1, u2);
            out["affine_tau"] = a.tau ? io::unit_to_json(*a.tau, job.field) : json(nullptr);
            out["affine_complete"] = a.complete;
        }
    }
    return out;
}

json cmd_embed(const Job& job, const Options&) {
    Embedding e = embed_nonprimitive(unit_of(job), job.field);
    json out = header("embed", job.field);
    out["subfield"] = io::field_to_json(e.subfield);
    out["unit"] = io::unit_to_json(e.unit, e.subfield);
    out["witness"] = io::to_json(e.witness);
    out["sub_parametrization"] = io::to_json(e.sub_parametrization);
    return out;
}

json cmd_verify(const Job& job, const Options&) {
    HypercircleCheck c = verify_hypercircle(parametrization_of(job), job.field);
    json out = header("verify", job.field);
    out["hypercircle"] = static_cast<bool>(c.witness);
    out["stage"] = c.stage;
    out["witness"] = c.witness ? io::unit_to_json(*c.witness, job.field) : json(nullptr);
    out["points"] = io::points_to_json(c.points);
    return out;
}

json cmd_descente(const Job& job, const Options&) {
    WeilSystem w = descente(io::lcurve_from_json(io::require(job.doc, "eta"), job.field), job.field);
    json out = header("descente", job.field);
    out["weil"] = io::to_json(w);
    if (job.doc.contains("candidate"))
        out["candidate_satisfies"] = verify_vanishing(w.delta_set(), io::lcurve_from_json(job.doc["candidate"], job.field));
    return out;
}

json cmd_repar(const Job& job, const Options&) {
    QCurve c = reparametrize(io::lcurve_from_json(io::require(job.doc, "eta"), job.field), unit_of(job));
    json out = header("repar", job.field);
    out["eta_q"] = qcurve_to_json(c);
    return out;
}

json cmd_pipeline(const Job& job, const Options& o, int& code) {
    PipelineOptions po;
    if (!o.grid.empty())
        po.grid = parse_grid(o.grid);
    else if (o.height >= 0)
        po.grid = rationals_by_height(o.height);
    PipelineResult r = pipeline(io::lcurve_from_json(io::require(job.doc, "eta"), job.field),
                                io::lcurve_from_json(io::require(job.doc, "candidate"), job.field), job.field, po);
    json stages = json::array();
    for (const auto& s : r.stages) {
        json st{{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}};
        if (o.timings) st["seconds"] = s.seconds;
        stages.push_back(st);
    }
    json out = header("pipeline", job.field);
    out["ok"] = r.ok;
    out["stages"] = stages;
    out["points"] = io::points_to_json(r.points);
    if (r.unit) {
        out["unit"] = io::unit_to_json(*r.unit, job.field);
        out["eta_q"] = qcurve_to_json(r.eta_q);
    }
    if (!r.ok) code = kMathExit;
    return out;
}

std::string cmd_sample(const Job& job, const Options& o) {
    if (o.steps < 1) throw SchemaError("--steps must be positive");
    if (o.digits < 1) throw SchemaError("--digits must be positive");
    Parametrization phi = parametrization_of(job);
    const Rational a = Rational::parse(o.from), b = Rational::parse(o.to);
    const Rational h = (b - a) / Rational(o.steps);
    std::ostringstream os;
    os << "t";
    for (std::size_t i = 0; i < phi.dim(); ++i) os << ",x" << i;
    os << "\n";
    for (int k = 0; k <= o.steps; ++k) {
        const Rational t = a + h * Rational(k);
        if (phi.denominator(t).is_zero()) continue;
        os << to_decimal(t, o.digits);
        for (const auto& x : phi.at(t)) os << "," << to_decimal(x, o.digits);
        os << "\n";
    }
    return os.str();
}

void emit(const Options& o, const std::string& text) {
    if (o.out_file.empty() || o.out_file == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out_file);
    if (!out) throw SchemaError("cannot write " + o.out_file);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with hypercircles"};
    app.require_subcommand(1);
    Options o;

    using Handler = std::function<json(const Job&, const Options&, int&)>;
    auto plain = [](json (*f)(const Job&, const Options&)) -> Handler {
        return [f](const Job& j, const Options& o, int&) { return f(j, o); };
    };
    const std::vector<std::tuple<std::string, std::string, Handler>> commands{
        {"param", "parametrize the hypercircle of a unit", plain(cmd_param)},
        {"reduce", "reduced form of a unit", plain(cmd_reduce)},
        {"isline", "whether the hypercircle is a line", plain(cmd_isline)},
        {"degree", "degree of the hypercircle", plain(cmd_degree)},
        {"infinity", "principal point at infinity", plain(cmd_infinity)},
        {"invmap", "inverse of the parametrization", plain(cmd_invmap)},
        {"threepoints", "unit through three rational points", plain(cmd_threepoints)},
        {"normalform", "maps onto the rational normal curve", plain(cmd_normalform)},
        {"implicitize", "quadric equations of the hypercircle", plain(cmd_implicitize)},
        {"invunit-eqs", "equations from the inverse unit", plain(cmd_invunit_eqs)},
        {"equiv", "compare two hypercircles", plain(cmd_equiv)},
        {"embed", "embedding of a non-primitive hypercircle", plain(cmd_embed)},
        {"verify", "decide whether a parametrization is a hypercircle", plain(cmd_verify)},
        {"descente", "Weil descente equations of a curve", plain(cmd_descente)},
        {"repar", "reparametrize a curve by a unit", plain(cmd_repar)},
        {"pipeline", "full reparametrization over the base field", cmd_pipeline},
    };

    auto common = [&o](CLI::App* sub) {
        sub->add_option("--field", o.field_file, "field JSON file");
        sub->add_option("--in", o.in_file, "job JSON file (default stdin)");
        sub->add_option("--out", o.out_file, "output file (default stdout)");
        sub->add_option("--height", o.height, "height bound for rational points");
        sub->add_option("--grid", o.grid, "comma separated rationals for the point search");
    };

    const Handler* chosen = nullptr;
    std::string chosen_name;
    for (const auto& [name, help, handler] : commands) {
        auto* sub = app.add_subcommand(name, help);
        common(sub);
        if (name == "pipeline") sub->add_flag("--timings", o.timings, "include stage timings");
        sub->callback([&chosen, &chosen_name, &handler, name = name] {
            chosen = &handler;
            chosen_name = name;
        });
    }
    auto* sample = app.add_subcommand("sample", "CSV of points on the curve");
    common(sample);
    sample->add_option("--digits", o.digits, "decimal digits")->capture_default_str();
    sample->add_option("--from", o.from, "first parameter value")->capture_default_str();
    sample->add_option("--to", o.to, "last parameter value")->capture_default_str();
    sample->add_option("--steps", o.steps, "number of intervals")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : kUsage;
    }

    try {
        Job job = load(o);
        if (sample->parsed()) {
            emit(o, cmd_sample(job, o));
            return 0;
        }
        int code = 0;
        json out = (*chosen)(job, o, code);
        emit(o, out.dump(2) + "\n");
        return code;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kSchemaExit;
    } catch (const json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kSchemaExit;
    } catch (const MathError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return kMathExit;
    } catch (const Inconclusive& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kInconclusiveExit;
    }
}
