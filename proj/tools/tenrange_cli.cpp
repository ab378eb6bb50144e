#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tenrange/checks.hpp"
#include "tenrange/generate.hpp"
#include "tenrange/io.hpp"
#include "tenrange/numrange.hpp"
#include "tenrange/pinv.hpp"
#include "tenrange/spectral.hpp"

namespace {

using namespace tenrange;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

int cmd_boundary(const std::string& in, std::size_t n, const std::string& csv_path,
                 const std::string& svg_path, bool eigs) {
    Tensor a = io::read_tensor_file(in);
    numrange::Boundary b = numrange::boundary(a, n);
    io::write_text_file(csv_path, io::boundary_csv(b));
    if (!svg_path.empty()) {
        std::vector<scalar> marks;
        if (eigs) marks = spectral::eigenvalues(a).values;
        io::write_text_file(svg_path, io::boundary_svg(b, marks));
    }
    return kExitOk;
}

int cmd_radius(const std::string& in, std::size_t n) {
    Tensor a = io::read_tensor_file(in);
    std::printf("%.6f\n", numrange::numerical_radius(a, n));
    return kExitOk;
}

int cmd_spectrum(const std::string& in) {
    Tensor a = io::read_tensor_file(in);
    for (const scalar& v : spectral::eigenvalues(a).values)
        std::printf("%s %s\n", io::format_double(v.real()).c_str(),
                    io::format_double(v.imag()).c_str());
    return kExitOk;
}

int cmd_pinv(const std::string& in, const std::string& out, bool residuals) {
    Tensor a = io::read_tensor_file(in);
    Tensor x = pinv::moore_penrose(a);
    io::write_tensor_file(out, x);
    if (residuals) {
        pinv::PenroseResiduals r = pinv::penrose_residuals(a, x);
        std::printf("r1 %s\nr2 %s\nr3 %s\nr4 %s\n", io::format_double(r.r1).c_str(),
                    io::format_double(r.r2).c_str(), io::format_double(r.r3).c_str(),
                    io::format_double(r.r4).c_str());
    }
    return kExitOk;
}

int cmd_check(const std::string& in, std::uint64_t seed, std::size_t instances) {
    std::optional<Tensor> input;
    if (!in.empty()) input = io::read_tensor_file(in);
    std::vector<checks::CheckResult> results = checks::run_battery(input, seed, instances);
    std::fputs(checks::format_report(results, seed).c_str(), stdout);
    return checks::all_passed(results) ? kExitOk : 1;
}

int cmd_gen(const std::string& kind, const std::vector<std::size_t>& shape,
            std::optional<std::size_t> row_modes, std::uint64_t seed, const std::string& out) {
    generate::Rng rng(seed);
    Tensor result = [&] {
        if (kind == "random") {
            const std::size_t rm = row_modes ? *row_modes : shape.size() / 2;
            if (rm > shape.size())
                throw CLI::ValidationError("--row-modes exceeds the number of modes");
            return generate::random_tensor(shape, rm, rng);
        }
        // square kinds read the full even-order shape and split it in half
        if (shape.size() % 2 != 0)
            throw CLI::ValidationError("kind " + kind + " needs an even-order square shape");
        const Shape half(shape.begin(), shape.begin() + shape.size() / 2);
        const Shape other(shape.begin() + shape.size() / 2, shape.end());
        if (half != other)
            throw CLI::ValidationError("kind " + kind + " needs matching mode blocks");
        if (kind == "diag") return generate::random_diagonal(half, rng);
        if (kind == "unitary") return generate::random_unitary(half, rng);
        if (kind == "rank1") return generate::random_rank_one(half, rng);
        throw CLI::ValidationError("unknown kind " + kind);
    }();
    io::write_tensor_file(out, result);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Einstein-product tensor numerical ranges, spectra, and pseudoinverses"};
    app.require_subcommand(1);

    std::string in, out, csv_path, svg_path, kind;
    std::size_t n_boundary = 500, n_radius = 2000;
    bool eigs = false, residuals = false;
    std::uint64_t seed = 1;
    std::vector<std::size_t> shape;
    std::optional<std::size_t> row_modes;

    CLI::App* boundary = app.add_subcommand("boundary", "sample the numerical range boundary");
    boundary->add_option("--in", in, "input tensor document")->required();
    boundary->add_option("--n", n_boundary, "number of angles");
    boundary->add_option("--csv", csv_path, "output CSV path")->required();
    boundary->add_option("--svg", svg_path, "output SVG path");
    boundary->add_flag("--eigs", eigs, "overlay eigenvalues in the SVG");

    CLI::App* radius = app.add_subcommand("radius", "numerical radius");
    radius->add_option("--in", in, "input tensor document")->required();
    radius->add_option("--n", n_radius, "number of angles");

    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues, one per line");
    spectrum->add_option("--in", in, "input tensor document")->required();

    CLI::App* pinv_cmd = app.add_subcommand("pinv", "Moore-Penrose inverse");
    pinv_cmd->add_option("--in", in, "input tensor document")->required();
    pinv_cmd->add_option("--out", out, "output tensor document")->required();
    pinv_cmd->add_flag("--residuals", residuals, "print the four Penrose residuals");

    std::size_t instances = 100;
    CLI::App* check = app.add_subcommand("check", "run the invariant battery");
    check->add_option("--in", in, "input tensor document");
    check->add_option("--seed", seed, "random instance seed");
    check->add_option("--instances", instances, "random instances per property");

    CLI::App* gen = app.add_subcommand("gen", "emit a reproducible test tensor");
    gen->add_option("--kind", kind, "diag|unitary|rank1|random")->required();
    gen->add_option("--shape", shape, "mode extents")->required()->expected(-1);
    gen->add_option("--row-modes", row_modes, "row mode count (random kind)");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out", out, "output tensor document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(boundary))
            return cmd_boundary(in, n_boundary, csv_path, svg_path, eigs);
        if (app.got_subcommand(radius)) return cmd_radius(in, n_radius);
        if (app.got_subcommand(spectrum)) return cmd_spectrum(in);
        if (app.got_subcommand(pinv_cmd)) return cmd_pinv(in, out, residuals);
        if (app.got_subcommand(check)) return cmd_check(in, seed, instances);
        if (app.got_subcommand(gen)) return cmd_gen(kind, shape, row_modes, seed, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
