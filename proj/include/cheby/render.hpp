#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cheby/dynamics.hpp"

namespace cheby {

/// Axis-aligned window on the plane mapped onto a px * py pixel grid.
/// The plane height is derived from the width so plane aspect always equals
/// pixel aspect.  Pixel (i, j) samples the center of its cell; row 0 is the
/// top of the window.
struct Viewport {
    Complex center{};
    double width = 4.0;
    int px = 800;
    int py = 800;

    double height() const { return width * static_cast<double>(py) / px; }
    Complex pixel_point(int i, int j) const;
};

inline constexpr std::int16_t kPixelUndecided = -1;
inline constexpr std::int16_t kPixelPreimageOfParabolic = -2;

struct PixelRecord {
    std::int16_t attractor = kPixelUndecided;  // id or sentinel
    std::int32_t iterations = 0;

    bool operator==(const PixelRecord&) const = default;
};

struct BasinGrid {
    Viewport viewport;
    AttractorSet attractors;
    int budget = 0;
    double elapsed_seconds = 0;       // wall-clock render time
    std::vector<PixelRecord> pixels;  // row-major, py rows of px

    const PixelRecord& at(int i, int j) const { return pixels[static_cast<size_t>(j) * viewport.px + i]; }
};

/// Render the basin map of C_p over the viewport.  Work is split into
/// 64 x 64 tiles handed to `workers` threads; every tile writes only its own
/// pixels, so the grid is identical for any worker count.  workers = 0 means
/// hardware concurrency.
BasinGrid render_basins(const Polynomial& p, const Viewport& vp, int budget,
                        int workers = 0);
BasinGrid render_basins(const RationalMap& r, const AttractorSet& att, const Viewport& vp,
                        int budget, int workers = 0);

using Rgb = std::array<std::uint8_t, 3>;

struct Palette {
    std::vector<Rgb> attractor;  // one entry per attractor id
    Rgb undecided{0, 0, 0};
    Rgb preimage_of_parabolic{255, 255, 255};
};

/// Root basins cycle blue/green/pink, extraneous basins red then orange.
Palette default_palette(const AttractorSet& att);

/// Flat 8-bit RGB pixels (row-major), brightness shaded by log iteration count.
std::vector<std::uint8_t> shade(const BasinGrid& grid, const Palette& palette);

/// Write the grid as a binary PPM (P6) image plus a JSON sidecar
/// (<path>.json) describing viewport, budget, palette, and attractor legend.
void write_image(const BasinGrid& grid, const Palette& palette,
                 const std::filesystem::path& path);

struct SymmetryReport {
    double fraction = 0;
    bool pass = false;
    std::string note;
};

/// Fraction of vertically mirrored pixel pairs whose basin labels agree
/// under complex conjugation (an attractor pairs with its conjugate; real
/// attractors and sentinels with themselves).  Throws DegenerateInput for a
/// viewport not centered on the real axis.  Pass at >= 0.995.
SymmetryReport real_axis_symmetry(const BasinGrid& grid);

/// For maps with C(w z) = w C(z) (w = exp(2 pi i / 3), e.g. p = z^3 - 1):
/// fraction of pixel-center sample points z whose stored label maps, under the
/// induced attractor rotation, to a fresh classification of the orbit of w * z
/// at the same budget.  `stride` subsamples the grid.  Throws DegenerateInput
/// for a viewport not centered at the origin.  Pass at >= 0.995.
SymmetryReport rotation_equivariance(const RationalMap& r, const BasinGrid& grid, int stride = 1);

}  // namespace cheby
