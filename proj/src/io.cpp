#include "curv/io.hpp"

#include <png.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace curv {

namespace {

[[noreturn]] void fail_at(const std::string& path, std::istream& in, const std::string& what) {
    const auto pos = in.tellg();
    throw std::runtime_error(path + ": " + what + " (byte offset " +
                             std::to_string(pos < 0 ? 0 : static_cast<long long>(pos)) + ")");
}

double height_from_gray(int g) { return (g + 1) / 256.0; }

// Skips whitespace and '#' comment lines in a PGM header.
void skip_pgm_separators(std::istream& in) {
    for (;;) {
        const int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            return;
        }
    }
}

int read_pgm_int(std::istream& in, const std::string& path) {
    skip_pgm_separators(in);
    int v;
    if (!(in >> v)) fail_at(path, in, "malformed PGM header integer");
    return v;
}

GrayImage read_pgm(std::ifstream& in, const std::string& path, bool binary) {
    const int width = read_pgm_int(in, path);
    const int height = read_pgm_int(in, path);
    const int maxval = read_pgm_int(in, path);
    if (width < 1 || height < 1) fail_at(path, in, "invalid PGM dimensions");
    if (maxval < 1 || maxval > 255) fail_at(path, in, "unsupported PGM maxval (want <= 255)");

    Gridd h(height, width);
    if (binary) {
        in.get();  // single whitespace byte after maxval
        std::vector<unsigned char> row(static_cast<std::size_t>(width));
        for (int i = 0; i < height; ++i) {
            if (!in.read(reinterpret_cast<char*>(row.data()), width))
                fail_at(path, in, "truncated P5 pixel data");
            for (int j = 0; j < width; ++j) {
                if (row[j] > maxval) fail_at(path, in, "P5 sample above maxval");
                h(i, j) = height_from_gray(row[j]);
            }
        }
    } else {
        for (int i = 0; i < height; ++i)
            for (int j = 0; j < width; ++j) {
                const int g = read_pgm_int(in, path);
                if (g < 0 || g > maxval) fail_at(path, in, "P2 sample out of range");
                h(i, j) = height_from_gray(g);
            }
    }
    return GrayImage(h);
}

GrayImage read_png(const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "rb");
    if (!fp) throw std::runtime_error(path + ": cannot open file");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        if (png) png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw std::runtime_error(path + ": libpng initialization failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw std::runtime_error(path + ": malformed PNG stream");
    }
    png_init_io(png, fp);
    png_read_info(png, info);

    const png_byte color = png_get_color_type(png, info);
    const png_byte depth = png_get_bit_depth(png, info);
    if (color != PNG_COLOR_TYPE_GRAY || depth > 8) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw std::runtime_error(path + ": unsupported PNG format (need 8-bit grayscale)");
    }
    if (depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    png_read_update_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    std::vector<unsigned char> row(width);

    Gridd h(height, width);
    for (png_uint_32 i = 0; i < height; ++i) {
        png_read_row(png, row.data(), nullptr);
        for (png_uint_32 j = 0; j < width; ++j) h(i, j) = height_from_gray(row[j]);
    }
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    return GrayImage(h);
}

}  // namespace

GrayImage read_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5'))
        return read_pgm(in, path, magic[1] == '5');
    if (magic[0] == '\x89' && magic[1] == 'P') {
        in.close();
        return read_png(path);
    }
    fail_at(path, in, "unrecognized image format (want PGM P2/P5 or PNG)");
}

VoxelVolume read_volume(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    std::string header;
    if (!std::getline(in, header)) fail_at(path, in, "missing volume header");
    std::istringstream hs(header);
    long long d, h, w;
    if (!(hs >> d >> h >> w) || d < 1 || h < 1 || w < 1)
        fail_at(path, in, "malformed volume header (want \"D H W\")");

    VoxelVolume vol(d, h, w);
    std::vector<unsigned char> buf(static_cast<std::size_t>(d * h * w));
    if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size())))
        fail_at(path, in, "truncated volume data");
    for (std::size_t i = 0; i < buf.size(); ++i) vol.h[i] = height_from_gray(buf[i]);
    return vol;
}

Grid<int> quantize(const Gridd& values, Normalization norm) {
    const Eigen::Index H = values.rows(), W = values.cols();
    Grid<int> out(H, W);
    switch (norm) {
        case Normalization::None: {
            if (H * W > 0 && (values.minCoeff() < 0.0 || values.maxCoeff() > 255.0))
                throw std::invalid_argument(
                    "values outside [0,255] require MinMax or SignedSym normalization");
            out = values.round().cast<int>();
            break;
        }
        case Normalization::MinMax: {
            const double lo = values.minCoeff(), hi = values.maxCoeff();
            if (hi == lo) {
                out.setConstant(128);
            } else {
                out = (255.0 * (values - lo) / (hi - lo)).round().cast<int>();
            }
            break;
        }
        case Normalization::SignedSym: {
            const double m = values.abs().maxCoeff();
            if (m == 0.0) {
                out.setConstant(128);
            } else {
                out = (128.0 + 127.0 * values / m).round().cast<int>().min(255).max(0);
            }
            break;
        }
    }
    return out;
}

namespace {

void write_pgm_grid(const Grid<int>& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << "P5\n" << g.cols() << " " << g.rows() << "\n255\n";
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j)
            out.put(static_cast<char>(static_cast<unsigned char>(g(i, j))));
    if (!out) throw std::runtime_error(path + ": write failed");
}

void write_csv_grid(const Gridd& g, std::ostream& out) {
    out.precision(17);
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            if (j) out << ',';
            out << g(i, j);
        }
        out << '\n';
    }
}

std::ofstream open_out(const std::string& path, bool binary = false) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    return out;
}

void write_rawf32_grid(const Gridd& g, const std::string& kind, const std::string& path) {
    std::ofstream out = open_out(path, true);
    out << kind << " " << g.rows() << " " << g.cols() << "\n";
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            const float v = static_cast<float>(g(i, j));
            out.write(reinterpret_cast<const char*>(&v), sizeof v);
        }
    if (!out) throw std::runtime_error(path + ": write failed");
}

void write_csv_to_target(const std::string& target,
                         const std::vector<std::pair<std::string, const Gridd*>>& sections) {
    const bool to_stdout = target == "-";
    std::ofstream file;
    if (!to_stdout) file = open_out(target);
    std::ostream& out = to_stdout ? std::cout : file;
    const bool named = sections.size() > 1;
    for (const auto& [name, grid] : sections) {
        if (named) out << "# " << name << "\n";
        write_csv_grid(*grid, out);
    }
    if (!out) throw std::runtime_error(target + ": write failed");
}

void write_rawf32_grid3d(const Grid3D& g, const std::string& kind, const std::string& path) {
    std::ofstream out = open_out(path, true);
    out << kind << " " << g.n0 << " " << g.n1 << " " << g.n2 << "\n";
    for (double d : g.v) {
        const float v = static_cast<float>(d);
        out.write(reinterpret_cast<const char*>(&v), sizeof v);
    }
    if (!out) throw std::runtime_error(path + ": write failed");
}

Gridd grid3d_flat(const Grid3D& g) {
    // Row-major flattening: one output row per (z, y) slice row.
    Gridd out(g.n0 * g.n1, g.n2);
    for (Eigen::Index z = 0; z < g.n0; ++z)
        for (Eigen::Index y = 0; y < g.n1; ++y)
            for (Eigen::Index x = 0; x < g.n2; ++x) out(z * g.n1 + y, x) = g(z, y, x);
    return out;
}

}  // namespace

void write_gray(const GrayImage& image, const OutputSpec& spec) {
    switch (spec.format) {
        case OutputFormat::PGM: {
            Grid<int> g = (image.h * 256.0 - 1.0).round().cast<int>().min(255).max(0);
            write_pgm_grid(g, spec.target);
            break;
        }
        case OutputFormat::CSV:
            write_csv_to_target(spec.target, {{"gray", &image.h}});
            break;
        case OutputFormat::RawF32:
            write_rawf32_grid(image.h, "gray", spec.target);
            break;
    }
}

void write_field(const PixelField& field, const OutputSpec& spec) {
    switch (spec.format) {
        case OutputFormat::PGM:
            write_pgm_grid(quantize(field, spec.normalization), spec.target);
            break;
        case OutputFormat::CSV:
            write_csv_to_target(spec.target, {{"pixels", &field}});
            break;
        case OutputFormat::RawF32:
            write_rawf32_grid(field, "pixelfield", spec.target);
            break;
    }
}

void write_field(const EdgeField& field, const OutputSpec& spec) {
    switch (spec.format) {
        case OutputFormat::PGM:
            write_pgm_grid(quantize(field.horizontal, spec.normalization), spec.target + ".h");
            write_pgm_grid(quantize(field.vertical, spec.normalization), spec.target + ".v");
            break;
        case OutputFormat::CSV:
            write_csv_to_target(spec.target,
                                {{"hEdges", &field.horizontal}, {"vEdges", &field.vertical}});
            break;
        case OutputFormat::RawF32:
            write_rawf32_grid(field.horizontal, "edgefield-h", spec.target + ".h");
            write_rawf32_grid(field.vertical, "edgefield-v", spec.target + ".v");
            break;
    }
}

void write_field(const EdgeField3D& field, const OutputSpec& spec) {
    const Gridd fx = grid3d_flat(field.x), fy = grid3d_flat(field.y), fz = grid3d_flat(field.z);
    switch (spec.format) {
        case OutputFormat::PGM:
            throw std::invalid_argument("PGM output is not supported for 3D edge fields");
        case OutputFormat::CSV:
            write_csv_to_target(spec.target, {{"xEdges", &fx}, {"yEdges", &fy}, {"zEdges", &fz}});
            break;
        case OutputFormat::RawF32:
            write_rawf32_grid3d(field.x, "edgefield3d-x", spec.target + ".x");
            write_rawf32_grid3d(field.y, "edgefield3d-y", spec.target + ".y");
            write_rawf32_grid3d(field.z, "edgefield3d-z", spec.target + ".z");
            break;
    }
}

}  // namespace curv
