#include "curv/flow.hpp"
#include "curv/image_ops.hpp"
#include "curv/io.hpp"
#include "curv/oracle.hpp"
#include "curv/reference_ops.hpp"
#include "curv/sampling.hpp"
#include "curv/voxel_ops.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace {

struct GlobalOpts {
    double w1 = 1.0;
    double w2 = 0.0;  // 0 = auto 1/max(H,W)
    std::string out = "-";
    std::string format = "csv";
    std::string normalize = "none";

    curv::WeightScheme scheme() const {
        curv::WeightScheme s;
        s.w1 = w1;
        s.w2 = w2;
        return s;
    }

    curv::OutputSpec spec() const {
        static const std::map<std::string, curv::OutputFormat> formats{
            {"pgm", curv::OutputFormat::PGM},
            {"csv", curv::OutputFormat::CSV},
            {"raw", curv::OutputFormat::RawF32}};
        static const std::map<std::string, curv::Normalization> norms{
            {"none", curv::Normalization::None},
            {"minmax", curv::Normalization::MinMax},
            {"signedsym", curv::Normalization::SignedSym}};
        curv::OutputSpec spec;
        spec.format = formats.at(format);
        spec.normalization = norms.at(normalize);
        spec.target = out;
        return spec;
    }
};

void add_global_flags(CLI::App* cmd, GlobalOpts& g) {
    cmd->add_option("--w1", g.w1, "Global weight factor")->check(CLI::PositiveNumber);
    cmd->add_option("--w2", g.w2, "Per-dimension weight factor (default 1/max(H,W))");
    cmd->add_option("--out", g.out, "Output target (default stdout, CSV only)");
    cmd->add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"pgm", "csv", "raw"}));
    cmd->add_option("--normalize", g.normalize, "PGM normalization")
        ->check(CLI::IsMember({"none", "minmax", "signedsym"}));
}

void emit_edge_quantity(const curv::EdgeField& field, const std::string& direction,
                        const GlobalOpts& g) {
    if (direction == "edges") {
        curv::write_field(field, g.spec());
        return;
    }
    curv::Direction dir = curv::Direction::Average;
    if (direction == "h") dir = curv::Direction::Horizontal;
    if (direction == "v") dir = curv::Direction::Vertical;
    curv::write_field(curv::directional_map(field, dir), g.spec());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete curvature maps and Laplacians for grayscale images and volumes"};
    app.require_subcommand(1);

    GlobalOpts g;
    std::string input;
    std::string direction = "avg";
    std::string kind = "box1";
    std::string mode = "up";
    int factor = 2;
    curv::FlowConfig flow_cfg;
    int oc_size = 8, oc_trials = 50;

    auto* ricci = app.add_subcommand("ricci", "Ricci curvature map");
    ricci->add_option("--direction", direction, "h, v, avg, or edges")
        ->check(CLI::IsMember({"h", "v", "avg", "edges"}));
    ricci->add_option("input", input, "Input image (PGM or grayscale PNG)")->required();
    add_global_flags(ricci, g);

    auto* comb = app.add_subcommand("comb-ricci", "Unit-convention combinatorial Ricci map");
    comb->add_option("--direction", direction, "h, v, avg, or edges")
        ->check(CLI::IsMember({"h", "v", "avg", "edges"}));
    comb->add_option("input", input)->required();
    add_global_flags(comb, g);

    auto* lap = app.add_subcommand("laplacian", "Edge Laplacian maps");
    lap->add_option("--kind", kind, "box1, bochner, or box2")
        ->check(CLI::IsMember({"box1", "bochner", "box2"}));
    lap->add_option("--direction", direction, "h, v, avg, or edges")
        ->check(CLI::IsMember({"h", "v", "avg", "edges"}));
    lap->add_option("input", input)->required();
    add_global_flags(lap, g);

    auto* r3 = app.add_subcommand("ricci3d", "3D Ricci curvature of a voxel volume");
    r3->add_option("input", input, "Volume file: text header \"D H W\", then raw bytes")
        ->required();
    add_global_flags(r3, g);

    auto* gauss = app.add_subcommand("gauss-ref", "Classical Gaussian curvature reference");
    gauss->add_option("input", input)->required();
    add_global_flags(gauss, g);

    auto* clap = app.add_subcommand("laplacian-ref", "Classical 5-point Laplacian reference");
    clap->add_option("input", input)->required();
    add_global_flags(clap, g);

    auto* resample = app.add_subcommand("resample", "Pixel subdivision / fusion");
    resample->add_option("--mode", mode, "up or down")->check(CLI::IsMember({"up", "down"}));
    resample->add_option("--factor", factor, "2 or 3")->check(CLI::IsMember({2, 3}));
    resample->add_option("input", input)->required();
    add_global_flags(resample, g);

    auto* flow = app.add_subcommand("flow", "Edge-weight Ricci flow; --out is a directory");
    flow->add_option("--steps", flow_cfg.steps, "Number of Euler steps")
        ->check(CLI::NonNegativeNumber);
    flow->add_option("--dt", flow_cfg.dt, "Time step")->check(CLI::PositiveNumber);
    flow->add_option("--floor", flow_cfg.floor, "Minimum edge weight")
        ->check(CLI::NonNegativeNumber);
    flow->add_flag("--renormalize", flow_cfg.renormalize, "Keep total edge mass constant");
    flow->add_option("input", input)->required();
    add_global_flags(flow, g);

    auto* oc = app.add_subcommand("oracle-check",
                                  "Compare fast kernels against the enumeration oracle");
    oc->add_option("--size", oc_size, "Image side length")->check(CLI::PositiveNumber);
    oc->add_option("--trials", oc_trials, "Number of random images")->check(CLI::PositiveNumber);
    add_global_flags(oc, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const curv::WeightScheme scheme = g.scheme();
        if (ricci->parsed()) {
            emit_edge_quantity(curv::ricci_edges(curv::read_image(input), scheme), direction, g);
        } else if (comb->parsed()) {
            emit_edge_quantity(curv::combinatorial_ricci_edges(curv::read_image(input), scheme),
                               direction, g);
        } else if (lap->parsed()) {
            const curv::GrayImage img = curv::read_image(input);
            curv::EdgeField field;
            if (kind == "box1")
                field = curv::box1_edges(img, scheme);
            else if (kind == "bochner")
                field = curv::bochner_edges(img, scheme);
            else
                field = curv::box2_edges(img, scheme);
            emit_edge_quantity(field, direction, g);
        } else if (r3->parsed()) {
            curv::write_field(curv::ricci_edges_3d(curv::read_volume(input), scheme), g.spec());
        } else if (gauss->parsed()) {
            const curv::GrayImage img = curv::read_image(input);
            const double spacing = scheme.resolve_w2(img.rows(), img.cols());
            curv::write_field(curv::classical_gauss(img, spacing), g.spec());
        } else if (clap->parsed()) {
            const curv::GrayImage img = curv::read_image(input);
            const double spacing = scheme.resolve_w2(img.rows(), img.cols());
            curv::write_field(curv::classical_laplacian(img, spacing), g.spec());
        } else if (resample->parsed()) {
            const curv::GrayImage img = curv::read_image(input);
            const curv::GrayImage out =
                mode == "up" ? curv::upsample(img, factor) : curv::downsample(img, factor);
            curv::write_gray(out, g.spec());
        } else if (flow->parsed()) {
            if (g.out == "-")
                throw std::invalid_argument("flow requires --out <directory>");
            const auto trace = curv::run_flow(curv::read_image(input), scheme, flow_cfg);
            std::filesystem::create_directories(g.out);
            for (std::size_t s = 0; s < trace.size(); ++s) {
                std::ostringstream name;
                name << g.out << "/step_" << std::setw(4) << std::setfill('0') << s << ".csv";
                curv::OutputSpec spec;
                spec.format = curv::OutputFormat::CSV;
                spec.target = name.str();
                curv::write_field(trace[s], spec);
            }
        } else if (oc->parsed()) {
            const double dev2 = curv::oracle_check_2d(oc_size, oc_trials);
            std::cout << "2D kernels vs oracle: max deviation " << dev2 << " over " << oc_trials
                      << " random " << oc_size << "x" << oc_size << " images\n";
            return dev2 <= 1e-10 ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
