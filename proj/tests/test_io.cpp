#include "curv/io.hpp"

#include <doctest.h>
#include <png.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace curv;
namespace fs = std::filesystem;

namespace {

fs::path tmp_file(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "curv-io-tests";
    fs::create_directories(dir);
    return dir / name;
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

void write_test_png(const fs::path& p, int color_type, const std::vector<unsigned char>& pixels,
                    int width, int height) {
    std::FILE* fp = std::fopen(p.c_str(), "wb");
    REQUIRE(fp != nullptr);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    REQUIRE(setjmp(png_jmpbuf(png)) == 0);
    png_init_io(png, fp);
    png_set_IHDR(png, info, width, height, 8, color_type, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    const int channels = color_type == PNG_COLOR_TYPE_RGB ? 3 : 1;
    for (int i = 0; i < height; ++i)
        png_write_row(png, const_cast<png_bytep>(&pixels[static_cast<std::size_t>(i) * width *
                                                         channels]));
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}

}  // namespace

TEST_CASE("P2 gray levels map to (g+1)/256") {
    const fs::path p = tmp_file("levels.pgm");
    write_text(p, "P2\n2 1\n255\n255 0\n");
    const GrayImage img = read_image(p.string());
    CHECK(img.rows() == 1);
    CHECK(img.cols() == 2);
    CHECK(img.h(0, 0) == 1.0);
    CHECK(img.h(0, 1) == 1.0 / 256.0);
}

TEST_CASE("P2 and P5 encodings of the same image agree") {
    const fs::path p2 = tmp_file("same.p2.pgm");
    const fs::path p5 = tmp_file("same.p5.pgm");
    write_text(p2, "P2\n# a comment\n3 2\n255\n10 20 30\n40 50 60\n");
    std::string bin = "P5\n3 2\n255\n";
    for (unsigned char g : {10, 20, 30, 40, 50, 60}) bin.push_back(static_cast<char>(g));
    write_text(p5, bin);
    const GrayImage a = read_image(p2.string());
    const GrayImage b = read_image(p5.string());
    CHECK((a.h == b.h).all());
}

TEST_CASE("malformed PGM reports a byte offset") {
    const fs::path p = tmp_file("broken.pgm");
    write_text(p, "P2\n2 2\n255\n10 20 30\n");  // one sample short
    try {
        read_image(p.string());
        FAIL("expected std::runtime_error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("byte offset") != std::string::npos);
    }
    const fs::path bad = tmp_file("bad-magic.img");
    write_text(bad, "XX junk");
    CHECK_THROWS_AS(read_image(bad.string()), std::runtime_error);
}

TEST_CASE("grayscale PNG round trip through libpng") {
    const fs::path p = tmp_file("gray.png");
    write_test_png(p, PNG_COLOR_TYPE_GRAY, {0, 128, 255, 64, 32, 16}, 3, 2);
    const GrayImage img = read_image(p.string());
    CHECK(img.rows() == 2);
    CHECK(img.cols() == 3);
    CHECK(img.h(0, 0) == 1.0 / 256.0);
    CHECK(img.h(0, 2) == 1.0);
    CHECK(img.h(1, 0) == 65.0 / 256.0);
}

TEST_CASE("color PNG is rejected") {
    const fs::path p = tmp_file("color.png");
    write_test_png(p, PNG_COLOR_TYPE_RGB, std::vector<unsigned char>(2 * 2 * 3, 100), 2, 2);
    CHECK_THROWS_AS(read_image(p.string()), std::runtime_error);
}

TEST_CASE("edge-field CSV round trip keeps full precision") {
    EdgeField e = EdgeField::zero(3, 3);
    e.horizontal.setRandom();
    e.vertical.setRandom();
    e.horizontal = e.horizontal.abs() + 0.1;
    e.vertical = e.vertical.abs() + 0.1;

    const fs::path p = tmp_file("field.csv");
    OutputSpec spec;
    spec.format = OutputFormat::CSV;
    spec.target = p.string();
    write_field(e, spec);

    std::ifstream in(p);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "# hEdges");
    EdgeField back = EdgeField::zero(3, 3);
    auto read_rows = [&](Gridd& g) {
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            REQUIRE(std::getline(in, line));
            std::istringstream row(line);
            std::string cell;
            for (Eigen::Index j = 0; j < g.cols(); ++j) {
                REQUIRE(std::getline(row, cell, ','));
                g(i, j) = std::stod(cell);
            }
        }
    };
    read_rows(back.horizontal);
    REQUIRE(std::getline(in, line));
    CHECK(line == "# vEdges");
    read_rows(back.vertical);

    CHECK((back.horizontal == e.horizontal).all());
    CHECK((back.vertical == e.vertical).all());
}

TEST_CASE("rawf32 payload size matches the grid") {
    PixelField f = Gridd::Constant(2, 3, 0.25);
    const fs::path p = tmp_file("field.raw");
    OutputSpec spec;
    spec.format = OutputFormat::RawF32;
    spec.target = p.string();
    write_field(f, spec);

    std::ifstream in(p, std::ios::binary);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == "pixelfield 2 3");
    std::vector<char> payload((std::istreambuf_iterator<char>(in)),
                              std::istreambuf_iterator<char>());
    CHECK(payload.size() == 2 * 3 * sizeof(float));
    float first;
    std::memcpy(&first, payload.data(), sizeof first);
    CHECK(first == 0.25f);
}

TEST_CASE("quantize normalization modes") {
    Gridd v(1, 3);
    v << -2.0, 0.0, 2.0;
    SUBCASE("none rejects values outside [0,255]") {
        CHECK_THROWS_AS(quantize(v, Normalization::None), std::invalid_argument);
        Gridd ok(1, 2);
        ok << 0.0, 255.0;
        const Grid<int> q = quantize(ok, Normalization::None);
        CHECK(q(0, 0) == 0);
        CHECK(q(0, 1) == 255);
    }
    SUBCASE("minmax spans the full range; degenerate input maps to 128") {
        const Grid<int> q = quantize(v, Normalization::MinMax);
        CHECK(q(0, 0) == 0);
        CHECK(q(0, 1) == 128);
        CHECK(q(0, 2) == 255);
        const Grid<int> flat = quantize(Gridd::Constant(2, 2, 7.0), Normalization::MinMax);
        CHECK((flat == 128).all());
    }
    SUBCASE("signed-symmetric keeps zero at 128") {
        const Grid<int> q = quantize(v, Normalization::SignedSym);
        CHECK(q(0, 0) == 1);
        CHECK(q(0, 1) == 128);
        CHECK(q(0, 2) == 255);
        const Grid<int> zero = quantize(Gridd::Zero(1, 2), Normalization::SignedSym);
        CHECK((zero == 128).all());
    }
}

TEST_CASE("volume reader") {
    const fs::path p = tmp_file("vol.bin");
    std::string data = "2 1 3\n";
    for (unsigned char g : {0, 127, 255, 10, 20, 30}) data.push_back(static_cast<char>(g));
    write_text(p, data);
    const VoxelVolume vol = read_volume(p.string());
    CHECK(vol.depth == 2);
    CHECK(vol.rows == 1);
    CHECK(vol.cols == 3);
    CHECK(vol(0, 0, 0) == 1.0 / 256.0);
    CHECK(vol(0, 0, 2) == 1.0);
    CHECK(vol(1, 0, 1) == 21.0 / 256.0);

    SUBCASE("truncated data is an error") {
        const fs::path bad = tmp_file("vol-short.bin");
        write_text(bad, "2 2 2\nabc");
        CHECK_THROWS_AS(read_volume(bad.string()), std::runtime_error);
    }
}
