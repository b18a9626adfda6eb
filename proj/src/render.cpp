#include "cheby/render.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <thread>

namespace cheby {

Complex Viewport::pixel_point(int i, int j) const {
    double dx = width / px;
    double left = center.real() - 0.5 * width;
    double top = center.imag() + 0.5 * height();
    return {left + (i + 0.5) * dx, top - (j + 0.5) * dx};
}

BasinGrid render_basins(const RationalMap& r, const AttractorSet& att, const Viewport& vp,
                        int budget, int workers) {
    auto t0 = std::chrono::steady_clock::now();
    BasinGrid grid;
    grid.viewport = vp;
    grid.attractors = att;
    grid.budget = default_budget(att, budget);
    grid.pixels.assign(static_cast<size_t>(vp.px) * vp.py, PixelRecord{});

    constexpr int kTile = 64;
    int tiles_x = (vp.px + kTile - 1) / kTile;
    int tiles_y = (vp.py + kTile - 1) / kTile;
    int total_tiles = tiles_x * tiles_y;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min(workers, total_tiles);

    std::atomic<int> next_tile{0};
    auto run = [&]() {
        for (;;) {
            int tile = next_tile.fetch_add(1);
            if (tile >= total_tiles) return;
            int tx = tile % tiles_x;
            int ty = tile / tiles_x;
            int i_end = std::min(vp.px, (tx + 1) * kTile);
            int j_end = std::min(vp.py, (ty + 1) * kTile);
            for (int j = ty * kTile; j < j_end; ++j) {
                for (int i = tx * kTile; i < i_end; ++i) {
                    StepResult res =
                        classify_orbit(r, SpherePoint{vp.pixel_point(i, j)}, att, grid.budget);
                    PixelRecord rec;
                    rec.iterations = res.iterations;
                    switch (res.outcome) {
                        case OrbitOutcome::converged:
                        case OrbitOutcome::parabolic_converged:
                            rec.attractor = static_cast<std::int16_t>(res.attractor);
                            break;
                        case OrbitOutcome::preimage_of_parabolic:
                            rec.attractor = kPixelPreimageOfParabolic;
                            break;
                        default:
                            rec.attractor = kPixelUndecided;
                    }
                    grid.pixels[static_cast<size_t>(j) * vp.px + i] = rec;
                }
            }
        }
    };

    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    grid.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return grid;
}

BasinGrid render_basins(const Polynomial& p, const Viewport& vp, int budget, int workers) {
    RationalMap map = chebyshev_map(p);
    AttractorSet att = attractors_of(p);
    return render_basins(map, att, vp, budget, workers);
}

Palette default_palette(const AttractorSet& att) {
    static const Rgb kRootCycle[3] = {{66, 135, 245}, {72, 199, 116}, {255, 121, 198}};
    static const Rgb kExtraneousCycle[2] = {{230, 57, 70}, {255, 165, 60}};
    Palette pal;
    int roots = 0;
    int extraneous = 0;
    for (const auto& a : att.items) {
        if (a.is_root)
            pal.attractor.push_back(kRootCycle[roots++ % 3]);
        else
            pal.attractor.push_back(kExtraneousCycle[extraneous++ % 2]);
    }
    return pal;
}

std::vector<std::uint8_t> shade(const BasinGrid& grid, const Palette& palette) {
    std::vector<std::uint8_t> out(grid.pixels.size() * 3);
    double log_budget = std::log(1.0 + std::max(1, grid.budget));
    for (size_t k = 0; k < grid.pixels.size(); ++k) {
        const PixelRecord& rec = grid.pixels[k];
        Rgb c;
        if (rec.attractor == kPixelUndecided) {
            c = palette.undecided;
        } else if (rec.attractor == kPixelPreimageOfParabolic) {
            c = palette.preimage_of_parabolic;
        } else {
            c = palette.attractor[static_cast<size_t>(rec.attractor) % palette.attractor.size()];
            double t = std::log(1.0 + std::max(0, rec.iterations)) / log_budget;
            double f = 1.0 - 0.65 * std::min(1.0, t);
            for (auto& ch : c) ch = static_cast<std::uint8_t>(std::lround(ch * f));
        }
        out[3 * k + 0] = c[0];
        out[3 * k + 1] = c[1];
        out[3 * k + 2] = c[2];
    }
    return out;
}

namespace {

std::string hex_color(const Rgb& c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
    return buf;
}

const char* kind_name(AttractorKind k) {
    switch (k) {
        case AttractorKind::superattracting: return "superattracting";
        case AttractorKind::attracting: return "attracting";
        case AttractorKind::parabolic: return "parabolic";
    }
    return "unknown";
}

}  // namespace

void write_image(const BasinGrid& grid, const Palette& palette,
                 const std::filesystem::path& path) {
    std::vector<std::uint8_t> rgb = shade(grid, palette);
    {
        std::ofstream os(path, std::ios::binary);
        os << "P6\n" << grid.viewport.px << " " << grid.viewport.py << "\n255\n";
        os.write(reinterpret_cast<const char*>(rgb.data()), static_cast<std::streamsize>(rgb.size()));
    }

    nlohmann::json side;
    side["image"] = path.filename().string();
    side["viewport"] = {{"center", {grid.viewport.center.real(), grid.viewport.center.imag()}},
                        {"width", grid.viewport.width},
                        {"px", grid.viewport.px},
                        {"py", grid.viewport.py}};
    side["budget"] = grid.budget;
    nlohmann::json attractors = nlohmann::json::array();
    for (const auto& a : grid.attractors.items) {
        attractors.push_back({{"id", a.id},
                              {"location", {a.location.real(), a.location.imag()}},
                              {"kind", kind_name(a.kind)},
                              {"multiplier", {a.multiplier.real(), a.multiplier.imag()}},
                              {"is_root", a.is_root},
                              {"color", a.id >= 0 && a.id < static_cast<int>(palette.attractor.size())
                                            ? hex_color(palette.attractor[static_cast<size_t>(a.id)])
                                            : std::string{}}});
    }
    side["attractors"] = std::move(attractors);
    side["palette"] = {{"undecided", hex_color(palette.undecided)},
                       {"preimage_of_parabolic", hex_color(palette.preimage_of_parabolic)}};
    long decided = 0;
    for (const auto& rec : grid.pixels)
        if (rec.attractor >= 0 || rec.attractor == kPixelPreimageOfParabolic) ++decided;
    side["decided_fraction"] = static_cast<double>(decided) / static_cast<double>(grid.pixels.size());
    side["timing"] = {{"elapsed_seconds", grid.elapsed_seconds}};

    std::filesystem::path sidecar = path;
    sidecar += ".json";
    std::ofstream os(sidecar);
    os << side.dump(2) << "\n";
}

namespace {

// Attractor index pairing under a geometric involution/rotation of locations;
// -3 marks "no partner", which never matches a stored label.
std::vector<std::int16_t> paired_ids(const AttractorSet& att, const std::function<Complex(Complex)>& f) {
    std::vector<std::int16_t> map(att.items.size(), -3);
    for (size_t i = 0; i < att.items.size(); ++i) {
        Complex want = f(att.items[i].location);
        for (const auto& b : att.items) {
            if (std::abs(b.location - want) <= 1e-6 * (1.0 + std::abs(want))) {
                map[i] = static_cast<std::int16_t>(b.id);
                break;
            }
        }
    }
    return map;
}

std::int16_t expected_label(std::int16_t label, const std::vector<std::int16_t>& pairing) {
    if (label < 0) return label;  // sentinels pair with themselves
    return pairing[static_cast<size_t>(label)];
}

}  // namespace

SymmetryReport real_axis_symmetry(const BasinGrid& grid) {
    SymmetryReport rep;
    if (std::abs(grid.viewport.center.imag()) > 1e-12)
        throw DegenerateInput("real-axis symmetry check needs a viewport centered on the real axis");
    std::vector<std::int16_t> pairing =
        paired_ids(grid.attractors, [](Complex z) { return std::conj(z); });
    long total = 0;
    long good = 0;
    for (int j = 0; j < grid.viewport.py; ++j) {
        int jj = grid.viewport.py - 1 - j;
        for (int i = 0; i < grid.viewport.px; ++i) {
            std::int16_t a = grid.at(i, j).attractor;
            std::int16_t b = grid.at(i, jj).attractor;
            if (b == expected_label(a, pairing)) ++good;
            ++total;
        }
    }
    rep.fraction = total > 0 ? static_cast<double>(good) / static_cast<double>(total) : 0.0;
    rep.pass = rep.fraction >= 0.995;
    return rep;
}

SymmetryReport rotation_equivariance(const RationalMap& r, const BasinGrid& grid, int stride) {
    SymmetryReport rep;
    if (std::abs(grid.viewport.center) > 1e-12)
        throw DegenerateInput("rotation equivariance check needs a viewport centered at the origin");
    const Complex omega{-0.5, 0.8660254037844386};
    std::vector<std::int16_t> pairing =
        paired_ids(grid.attractors, [&](Complex z) { return omega * z; });

    const Viewport& vp = grid.viewport;
    if (stride < 1) stride = 1;
    long total = 0;
    long good = 0;
    for (int j = 0; j < vp.py; j += stride) {
        for (int i = 0; i < vp.px; i += stride) {
            Complex w = omega * vp.pixel_point(i, j);
            StepResult res = classify_orbit(r, SpherePoint{w}, grid.attractors, grid.budget);
            std::int16_t b;
            switch (res.outcome) {
                case OrbitOutcome::converged:
                case OrbitOutcome::parabolic_converged:
                    b = static_cast<std::int16_t>(res.attractor);
                    break;
                case OrbitOutcome::preimage_of_parabolic:
                    b = kPixelPreimageOfParabolic;
                    break;
                default:
                    b = kPixelUndecided;
            }
            std::int16_t a = grid.at(i, j).attractor;
            if (b == expected_label(a, pairing)) ++good;
            ++total;
        }
    }
    rep.fraction = total > 0 ? static_cast<double>(good) / static_cast<double>(total) : 0.0;
    rep.pass = rep.fraction >= 0.995;
    return rep;
}

}  // namespace cheby
