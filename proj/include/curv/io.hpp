#pragma once

#include "curv/types.hpp"

#include <string>

namespace curv {

enum class OutputFormat { PGM, CSV, RawF32 };
enum class Normalization { None, MinMax, SignedSym };

struct OutputSpec {
    OutputFormat format = OutputFormat::CSV;
    Normalization normalization = Normalization::None;
    /// File path; "-" writes to standard output (CSV only).
    std::string target = "-";
};

/// Reads a PGM (P2/P5) or 8-bit grayscale PNG image; gray level g maps to
/// height (g+1)/256. Malformed input raises std::runtime_error with the
/// offending byte offset.
GrayImage read_image(const std::string& path);

/// Reads a voxel volume: one text header line "D H W" followed by D*H*W
/// little-endian 8-bit samples, x fastest; same (g+1)/256 height mapping.
VoxelVolume read_volume(const std::string& path);

/// Writes heights back out as an image. PGM quantizes g = h*256 - 1.
void write_gray(const GrayImage& image, const OutputSpec& spec);

void write_field(const PixelField& field, const OutputSpec& spec);

/// CSV keeps both directions in one file as named sections; PGM and RawF32
/// write two files with suffixes ".h" and ".v".
void write_field(const EdgeField& field, const OutputSpec& spec);

/// CSV: three named sections; RawF32: three files ".x", ".y", ".z".
/// PGM is not supported for 3D fields.
void write_field(const EdgeField3D& field, const OutputSpec& spec);

/// Maps values to 0..255 per the normalization; a degenerate range maps to
/// mid-gray 128. Exposed for tests.
Grid<int> quantize(const Gridd& values, Normalization norm);

}  // namespace curv
