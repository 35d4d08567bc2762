#include "rotkit/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include "rodrigues/rodrigues.hpp"
#include "rotkit/format.hpp"
#include "rotkit/svg.hpp"
#include "rotkit/trajectory_io.hpp"

namespace rotkit {

using namespace rodrigues;

namespace {

/// Could not read or write a file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    bool degrees = false;
    int precision = kDefaultPrecision;

    std::string num(double v) const { return format_number(v, precision); }
    std::string angle(double radians) const { return num(degrees ? radians * 180.0 / std::numbers::pi : radians); }
};

void print_rotation(std::ostream& out, const RotationResult& r, const Globals& g) {
    out << format_result(r, g.precision) << '\n';
    out << format_aa(axis_angle_of(r), g.degrees, g.precision) << '\n';
    out << format_mat(matrix_of(r).matrix(), g.precision) << '\n';
}

/// Bare "x,y,z" is a Rodrigues vector; a prefixed spec must be regular.
RodriguesVector parse_rodrigues_arg(const std::string& text, const Globals& g) {
    if (text.find(':') == std::string::npos) return RodriguesVector(parse_vec3(text));
    return parse_rotation_spec(text, g.degrees).rodrigues();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << content;
    f.close();
    if (!f) throw IoError("failed writing '" + path + "'");
}

// -----------------------------------------------------------------------------

struct ConvertArgs {
    std::string spec;
    std::string to = "auto";
};

int cmd_convert(const ConvertArgs& a, const Globals& g, std::ostream& out) {
    const RotationResult r = parse_rotation_spec(a.spec, g.degrees);
    if (a.to == "rod") {
        out << format_rod(r.rodrigues(), g.precision) << '\n';
    } else if (a.to == "half") {
        out << format_half(r.half_turn(), g.precision) << '\n';
    } else if (a.to == "aa") {
        out << format_aa(axis_angle_of(r), g.degrees, g.precision) << '\n';
    } else if (a.to == "mat") {
        out << format_mat(matrix_of(r).matrix(), g.precision) << '\n';
    } else {
        out << format_result(r, g.precision) << '\n';
    }
    return 0;
}

int cmd_compose(const std::vector<std::string>& specs, const Globals& g, std::ostream& out) {
    if (specs.size() < 2) throw ParseError("compose needs at least two rotations");
    RotationResult acc = parse_rotation_spec(specs[0], g.degrees);
    std::vector<std::string> lambdas;
    for (std::size_t k = 1; k < specs.size(); ++k) {
        const RotationResult next = parse_rotation_spec(specs[k], g.degrees);
        std::string lambda = "undefined";
        if (acc.is_regular() && next.is_regular()) {
            lambda = g.num(1.0 - dot(next.rodrigues().vec(), acc.rodrigues().vec()));
        }
        lambdas.push_back("lambda[" + std::to_string(k) + "]=" + lambda);
        acc = compose_general(next, acc);
    }
    print_rotation(out, acc, g);
    for (const std::string& l : lambdas) out << l << '\n';
    return 0;
}

int cmd_donkin(const std::string& first, const std::string& second, const Globals& g, std::ostream& out) {
    const RodriguesVector q1 = parse_rotation_spec(first, g.degrees).rodrigues();
    const RodriguesVector q2 = parse_rotation_spec(second, g.degrees).rodrigues();
    const SphericalTriangle tri = donkin_triangle(q1, q2);
    const double theta3 = axis_angle_of(compose(q2, q1)).canonical().angle();
    out << "A=" << format_vec(tri.a(), g.precision) << '\n';
    out << "B=" << format_vec(tri.b(), g.precision) << '\n';
    out << "C=" << format_vec(tri.c(), g.precision) << '\n';
    out << "arc_AB=" << g.angle(arc_angle(tri.a(), tri.b()))
        << " half_theta1=" << g.angle(axis_angle_from_rodrigues(q1).canonical().angle() / 2) << '\n';
    out << "arc_BC=" << g.angle(arc_angle(tri.b(), tri.c()))
        << " half_theta2=" << g.angle(axis_angle_from_rodrigues(q2).canonical().angle() / 2) << '\n';
    out << "arc_AC=" << g.angle(arc_angle(tri.a(), tri.c())) << " half_theta3=" << g.angle(theta3 / 2) << '\n';
    out << "lambda=" << g.num(1.0 - dot(q2.vec(), q1.vec())) << '\n';
    out << "residual=" << g.num(donkin_verify(tri)) << '\n';
    return 0;
}

struct IntegrateArgs {
    std::string file;
    std::string scheme = "exact-step";
    int substeps = 1;
    std::string initial;
    std::string trajectory;
    bool print_trajectory = false;
    bool matrix_columns = false;
};

int cmd_integrate(const IntegrateArgs& a, const Globals& g, std::ostream& out) {
    std::ifstream in(a.file);
    if (!in) throw IoError("cannot open '" + a.file + "'");
    const std::vector<AngularVelocitySample> samples = read_omega(in);
    IntegrationOptions opt;
    opt.scheme = a.scheme == "first-order" ? IncrementScheme::FirstOrder : IncrementScheme::ExactStep;
    opt.substeps = a.substeps;
    if (!a.initial.empty()) opt.initial = parse_rotation_spec(a.initial, g.degrees);
    const AttitudeTrajectory traj = integrate_attitude(samples, opt);

    out << "t=" << g.num(traj.samples.back().t) << '\n';
    print_rotation(out, traj.final_orientation(), g);
    if (a.print_trajectory) write_trajectory(out, traj, a.matrix_columns, g.precision);
    if (!a.trajectory.empty()) {
        std::ostringstream text;
        write_trajectory(text, traj, a.matrix_columns, g.precision);
        write_file(a.trajectory, text.str());
    }
    return 0;
}

struct FigureArgs {
    std::string kind;
    std::string q;
    std::string q1;
    std::string q2;
    std::string x;
    std::string view;
    std::string out;
};

int cmd_figure(const FigureArgs& a, const Globals& g, std::ostream& out) {
    const std::optional<FigureKind> kind = parse_figure_kind(a.kind);
    if (!kind) throw ParseError("unknown figure kind '" + a.kind + "'");
    const bool two_rotations = *kind == FigureKind::Fig4 || *kind == FigureKind::Fig5;
    const std::string& main = two_rotations && !a.q1.empty() ? a.q1 : a.q;
    if (main.empty()) {
        throw Error(ErrorCode::MissingInput, std::string(two_rotations ? "--q1" : "--q") + " is required for " + a.kind);
    }
    const RodriguesVector q = parse_rodrigues_arg(main, g);
    std::optional<Vec3> x;
    if (!a.x.empty()) x = parse_vec3(a.x);
    std::optional<RodriguesVector> second;
    if (!a.q2.empty()) second = parse_rodrigues_arg(a.q2, g);

    const FigureScene scene = figure_scene(*kind, q, x, second);
    SvgOptions opt;
    if (!a.view.empty()) opt.view = parse_vec3(a.view);
    const std::string svg = render_svg(scene, opt);
    if (a.out.empty() || a.out == "-") {
        out << svg;
    } else {
        write_file(a.out, svg);
        out << "wrote " << a.out << " (" << scene.primitives.size() << " primitives";
        if (scene.degenerate) out << ", degenerate";
        out << ")\n";
    }
    return 0;
}

int cmd_check(int n, std::uint64_t seed, const CheckKernels& kernels, const Globals& g, std::ostream& out) {
    const std::vector<Diagnostic> diags = run_checks(n, seed, kernels);
    int failed = 0;
    for (const Diagnostic& d : diags) {
        out << std::left << std::setw(26) << d.name << " max=" << std::setw(20) << format_number(d.max_residual, 6)
            << " tol=" << std::setw(8) << format_number(d.tolerance, 6) << (d.passed() ? "PASS" : "FAIL");
        if (!d.failure.empty()) out << " (" << d.failure << ')';
        out << '\n';
        failed += d.passed() ? 0 : 1;
    }
    (void)g;
    if (failed) {
        out << "check: " << failed << " of " << diags.size() << " diagnostics failed (n=" << n << ", seed=" << seed
            << ")\n";
        return static_cast<int>(ExitCode::CheckFailed);
    }
    out << "check: all " << diags.size() << " diagnostics passed (n=" << n << ", seed=" << seed << ")\n";
    return 0;
}

}  // namespace

ExitCode exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::HalfTurnUndefined: return ExitCode::HalfTurnUndefined;
        case ErrorCode::ParallelAxes: return ExitCode::ParallelAxes;
        case ErrorCode::NonMonotonicTime: return ExitCode::NonMonotonicTime;
        case ErrorCode::StepTooLarge: return ExitCode::StepTooLarge;
        default: return ExitCode::Usage;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CheckKernels& kernels) {
    CLI::App app{"rotkit: rotations through Rodrigues vectors", "rotkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--degrees", g.degrees, "Read and print axis-angle angles in degrees");
    app.add_option("--precision", g.precision, "Significant digits in printed numbers")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();

    ConvertArgs conv;
    auto* convert = app.add_subcommand("convert", "Convert a rotation between representations");
    convert->add_option("spec", conv.spec, "aa:nx,ny,nz,theta | rod:qx,qy,qz | mat:r11,...,r33 | half:nx,ny,nz")
        ->required();
    convert->add_option("--to", conv.to, "Target representation")
        ->check(CLI::IsMember({"aa", "rod", "mat", "half", "auto"}))
        ->capture_default_str();

    std::vector<std::string> specs;
    auto* compose_cmd = app.add_subcommand(
        "compose", "Compose rotations listed in the order they are applied (first listed acts first)");
    compose_cmd->add_option("specs", specs, "Two or more rotation specs")->required();

    std::string donkin_first;
    std::string donkin_second;
    auto* donkin = app.add_subcommand("donkin", "Show the spherical triangle of two composed rotations");
    donkin->add_option("first", donkin_first, "Rotation applied first")->required();
    donkin->add_option("second", donkin_second, "Rotation applied second")->required();

    IntegrateArgs integ;
    auto* integrate = app.add_subcommand("integrate", "Propagate attitude from sampled angular velocity");
    integrate->add_option("file", integ.file, "Text file of 't wx wy wz' lines")->required();
    integrate->add_option("--scheme", integ.scheme, "Per-step increment")
        ->check(CLI::IsMember({"first-order", "exact-step"}))
        ->capture_default_str();
    integrate->add_option("--substeps", integ.substeps, "Steps per sample interval")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    integrate->add_option("--initial", integ.initial, "Initial orientation spec");
    integrate->add_option("--trajectory", integ.trajectory, "Write the trajectory to this file");
    integrate->add_flag("--print-trajectory", integ.print_trajectory, "Print the trajectory after the result");
    integrate->add_flag("--matrix-columns", integ.matrix_columns, "Add the first two columns of R to trajectory rows");

    FigureArgs fig;
    auto* figure = app.add_subcommand("figure", "Render a construction as SVG");
    figure->add_option("--kind", fig.kind, "fig1a | fig1b | fig1c | fig2 | fig4 | fig5")->required();
    figure->add_option("--q", fig.q, "Rodrigues vector qx,qy,qz");
    figure->add_option("--q1", fig.q1, "First rotation (fig4, fig5)");
    figure->add_option("--q2", fig.q2, "Second rotation (fig4, fig5)");
    figure->add_option("--x", fig.x, "Point x (unit vector a for fig1c)");
    figure->add_option("--view", fig.view, "View direction x,y,z");
    figure->add_option("--out", fig.out, "Output SVG path, - for stdout");

    int check_n = 1000;
    std::uint64_t check_seed = 42;
    auto* check = app.add_subcommand("check", "Run the residual diagnostics on seeded random inputs");
    check->add_option("--n", check_n, "Samples per diagnostic")->check(CLI::PositiveNumber)->capture_default_str();
    check->add_option("--seed", check_seed, "Random seed")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ExitCode::Usage);
    }

    try {
        if (*convert) return cmd_convert(conv, g, out);
        if (*compose_cmd) return cmd_compose(specs, g, out);
        if (*donkin) return cmd_donkin(donkin_first, donkin_second, g, out);
        if (*integrate) return cmd_integrate(integ, g, out);
        if (*figure) return cmd_figure(fig, g, out);
        if (*check) return cmd_check(check_n, check_seed, kernels, g, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::Io);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::Usage);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(exit_code_for(e.code()));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::Usage);
    }
    return static_cast<int>(ExitCode::Usage);
}

}  // namespace rotkit
