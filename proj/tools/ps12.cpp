// ps12: command-line front end for C^3 quintic simplex splines on the
// Powell-Sabin 12-split.
//
// Exit codes: 0 success, 1 validation failure, 2 IO or parse error.

#include "ps12/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using ps12::json;

struct CliConfig {
    std::string basis = "c";
    int grid = 10;
    double tol = 1e-10;
    std::string layer;
    std::string out;
    int threads = 1;
    std::string stage = "split";
    std::string table;
    std::string spline_path;
    std::string mesh_path;
    std::string data_path;
    std::string point;
    std::string obj_path;
    bool control = false;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ps12::ParseError(path + ": " + e.what());
    }
}

/// Writes to --out, or stdout when it is empty.
void emit(const CliConfig& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(cfg.out);
    if (!os)
        throw IoError("cannot write '" + cfg.out + "'");
    os << text;
    if (!os)
        throw IoError("write to '" + cfg.out + "' failed");
}

bool exact_layer(const CliConfig& cfg, bool default_exact)
{
    if (cfg.layer.empty())
        return default_exact;
    return cfg.layer == "exact";
}

template <class T>
ps12::Point2<T> parse_point(const std::string& text)
{
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ps12::ParseError("point must be written x,y");
    auto x = ps12::parse_rational(text.substr(0, comma));
    auto y = ps12::parse_rational(text.substr(comma + 1));
    return {ps12::scalar_from<T>(x), ps12::scalar_from<T>(y)};
}

int cmd_search(const CliConfig& cfg)
{
    auto report = ps12::run_search(ps12::parse_stage(cfg.stage), cfg.threads);
    emit(cfg, ps12::to_json(report).dump(2) + "\n");
    return 0;
}

int cmd_tables(const CliConfig& cfg)
{
    emit(cfg, ps12::table_json(cfg.table).dump(2) + "\n");
    return 0;
}

template <class T>
int eval_in_layer(const CliConfig& cfg)
{
    auto s = ps12::spline_from_json<T>(read_json(cfg.spline_path), cfg.basis[0]);
    T v = ps12::eval_spline(s, parse_point<T>(cfg.point), cfg.tol);
    std::ostringstream os;
    if constexpr (std::is_same_v<T, double>)
        os << std::setprecision(17) << v << "\n";
    else
        os << ps12::to_string(v) << "\n";
    emit(cfg, os.str());
    return 0;
}

int cmd_eval(const CliConfig& cfg)
{
    return exact_layer(cfg, false) ? eval_in_layer<ps12::Rational>(cfg) : eval_in_layer<double>(cfg);
}

template <class T>
int sample_in_layer(const CliConfig& cfg)
{
    auto s = ps12::spline_from_json<T>(read_json(cfg.spline_path), cfg.basis[0]);
    std::ostringstream os;
    ps12::write_sample_csv(os, s, cfg.grid);
    emit(cfg, os.str());
    return 0;
}

int cmd_sample(const CliConfig& cfg)
{
    return exact_layer(cfg, false) ? sample_in_layer<ps12::Rational>(cfg) : sample_in_layer<double>(cfg);
}

/// Reports C^0..C^2 jumps and the C^3 side condition on every interior edge;
/// returns false when a C^2 jump exceeds the tolerance.
bool report_edges(const ps12::GlobalSpline<double>& g, double tol)
{
    bool ok = true;
    for (const auto& e : ps12::mesh_edges(g.mesh)) {
        if (!e.interior())
            continue;
        auto jumps = ps12::verify_smoothness(g, e, 2);
        double worst = *std::max_element(jumps.begin(), jumps.end());
        double c3 = ps12::edge_c3_residual(g, e);
        std::cerr << "edge " << e.a << "-" << e.b << ": max C2 jump " << worst;
        if (std::fabs(c3) > tol)
            std::cerr << "; warning: C3 relation violated, residual " << c3;
        std::cerr << "\n";
        ok = ok && worst <= tol * 1e3;
    }
    return ok;
}

int cmd_assemble(const CliConfig& cfg)
{
    auto mesh = ps12::triangulation_from_json<double>(read_json(cfg.mesh_path));
    auto data = ps12::hermite_data_from_json<double>(read_json(cfg.data_path));
    auto g = ps12::hermite_interpolate(mesh, data);
    bool ok = report_edges(g, cfg.tol);
    emit(cfg, ps12::to_json(g).dump(2) + "\n");
    return ok ? 0 : 1;
}

int cmd_nodal(const CliConfig& cfg)
{
    auto g = ps12::hexagon_nodal_function();
    std::cerr << std::setprecision(12) << "value at v0: " << ps12::eval_global(g, g.mesh.vertices[0]) << "\n";
    for (std::size_t v = 1; v < g.mesh.vertices.size(); ++v)
        std::cerr << "value at v" << v << ": " << ps12::eval_global(g, g.mesh.vertices[v]) << "\n";
    bool ok = report_edges(g, cfg.tol);
    if (!cfg.obj_path.empty()) {
        std::ofstream os(cfg.obj_path);
        if (!os)
            throw IoError("cannot write '" + cfg.obj_path + "'");
        ps12::write_obj(os, g, cfg.grid, cfg.control);
    }
    emit(cfg, ps12::to_json(g).dump(2) + "\n");
    return ok ? 0 : 1;
}

int cmd_export_obj(const CliConfig& cfg)
{
    auto j = read_json(cfg.spline_path);
    ps12::GlobalSpline<double> g = j.contains("triangles") ? ps12::global_spline_from_json<double>(j)
                                                           : ps12::as_global(ps12::spline_from_json<double>(j));
    std::ostringstream os;
    ps12::write_obj(os, g, cfg.grid, cfg.control);
    emit(cfg, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"C^3 quintic simplex-spline bases on the Powell-Sabin 12-split"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--tol", cfg.tol, "tolerance for float checks")->check(CLI::PositiveNumber);
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    };
    auto add_layer = [&](CLI::App* sub) {
        sub->add_option("--layer", cfg.layer, "arithmetic layer")->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--basis", cfg.basis, "basis id a..f when the file omits it")->check(CLI::IsMember({"a", "b", "c", "d", "e", "f"}));
    };

    auto* search = app.add_subcommand("search", "run the basis search pipeline");
    search->add_option("--stage", cfg.stage, "last stage: rank, nonnegative, positive, inside, edge8, split");
    add_common(search);

    auto* tables = app.add_subcommand("tables", "regenerate a table as JSON");
    tables->add_option("which", cfg.table, "dual, restrict0..restrict3, dims, smoothness")->required();
    add_common(tables);

    auto* eval = app.add_subcommand("eval", "evaluate a spline at a point");
    eval->add_option("spline", cfg.spline_path, "spline JSON")->required();
    eval->add_option("--point", cfg.point, "x,y")->required();
    add_common(eval);
    add_layer(eval);

    auto* sample = app.add_subcommand("sample", "sample a spline on a barycentric grid (CSV)");
    sample->add_option("spline", cfg.spline_path, "spline JSON")->required();
    sample->add_option("--grid", cfg.grid, "grid resolution N")->check(CLI::PositiveNumber);
    add_common(sample);
    add_layer(sample);

    auto* assemble = app.add_subcommand("assemble", "C^2 Hermite interpolation on a triangulation");
    assemble->add_option("mesh", cfg.mesh_path, "triangulation JSON")->required();
    assemble->add_option("data", cfg.data_path, "Hermite data JSON")->required();
    add_common(assemble);

    auto* nodal = app.add_subcommand("nodal", "nodal function of the hexagon centre");
    nodal->add_option("--obj", cfg.obj_path, "also write an OBJ surface");
    nodal->add_option("--grid", cfg.grid, "OBJ grid resolution N")->check(CLI::PositiveNumber);
    nodal->add_flag("--control", cfg.control, "include the control meshes in the OBJ");
    add_common(nodal);

    auto* obj = app.add_subcommand("export-obj", "sampled surface of a spline or global spline as OBJ");
    obj->add_option("spline", cfg.spline_path, "spline or global spline JSON")->required();
    obj->add_option("--grid", cfg.grid, "grid resolution N")->check(CLI::PositiveNumber);
    obj->add_flag("--control", cfg.control, "include the control mesh");
    add_common(obj);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*search)
            return cmd_search(cfg);
        if (*tables)
            return cmd_tables(cfg);
        if (*eval)
            return cmd_eval(cfg);
        if (*sample)
            return cmd_sample(cfg);
        if (*assemble)
            return cmd_assemble(cfg);
        if (*nodal)
            return cmd_nodal(cfg);
        if (*obj)
            return cmd_export_obj(cfg);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ps12::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ps12::UnknownTable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ps12::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
