#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iostream>

#include "cheby/serialize.hpp"

namespace {

using namespace cheby;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// input plumbing

struct PolyInput {
    std::string poly_json;  // coefficient array
    std::string roots_spec; // root:multiplicity list
    std::string lead = "1";
    double lambda_re = 0;
    double lambda_im = 0;
    bool lambda_set = false;

    void attach(CLI::App* cmd, bool with_lambda) {
        cmd->add_option("--poly", poly_json,
                        "polynomial as a JSON coefficient array, ascending powers; entries are "
                        "[re,im] pairs or plain numbers");
        cmd->add_option("--roots", roots_spec,
                        "exact root spec \"r1:m1,r2:m2,...\" with complex roots like 1+2i");
        cmd->add_option("--lead", lead, "leading coefficient used with --roots (default 1)");
        if (with_lambda) {
            auto* opt = cmd->add_option_function<std::string>(
                "--lambda",
                [this](const std::string& s) {
                    size_t comma = s.find(',');
                    lambda_re = std::stod(s.substr(0, comma));
                    lambda_im = comma == std::string::npos ? 0.0 : std::stod(s.substr(comma + 1));
                    lambda_set = true;
                },
                "family parameter, \"re\" or \"re,im\"");
            (void)opt;
        }
    }

    bool has_input() const { return lambda_set || !poly_json.empty() || !roots_spec.empty(); }

    Complex parse_lead() const {
        auto parsed = parse_root_spec(lead + ":1");
        return parsed.front().first;
    }

    Polynomial build() const {
        int given = (poly_json.empty() ? 0 : 1) + (roots_spec.empty() ? 0 : 1) + (lambda_set ? 1 : 0);
        if (given != 1)
            throw DegenerateInput("give exactly one of --poly, --roots, or --lambda");
        if (lambda_set) return lambda_polynomial(Complex{lambda_re, lambda_im});
        if (!roots_spec.empty())
            return Polynomial::from_roots(parse_root_spec(roots_spec), parse_lead());
        Json j = Json::parse(poly_json);
        return polynomial_from_json(j);
    }

    Json config_json() const {
        Json j;
        if (lambda_set)
            j["lambda"] = {lambda_re, lambda_im};
        else if (!roots_spec.empty())
            j["roots"] = roots_spec;
        else
            j["poly"] = poly_json;
        return j;
    }
};

void write_json_report(const std::string& path, const Json& j) {
    if (path.empty()) return;
    std::ofstream os(path);
    if (!os) throw DegenerateInput("cannot open output file " + path);
    os << j.dump(2) << "\n";
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw DegenerateInput("cannot read " + path.string());
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    std::vector<char> buf(1 << 16);
    while (is) {
        is.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        EVP_DigestUpdate(ctx, buf.data(), static_cast<size_t>(is.gcount()));
    }
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, md, &len);
    EVP_MD_CTX_free(ctx);
    std::string hex;
    for (unsigned int i = 0; i < len; ++i) {
        char b[4];
        std::snprintf(b, sizeof b, "%02x", md[i]);
        hex += b;
    }
    return hex;
}

// ---------------------------------------------------------------------------
// subcommand bodies (return process exit code)

int run_degree(const PolyInput& input, double tol, const std::string& json_path) {
    Polynomial p = input.build();
    DegreeBreakdown b = predicted_degree(p, tol);
    std::cout << "degree " << p.degree() << ": m=" << b.m << " n=" << b.n << " r=" << b.r
              << " s=" << b.s << " B=" << b.B << "\n";
    std::cout << "predicted=" << b.predicted << " actual=" << b.actual
              << (b.agrees ? "  (agrees)" : "  (DISAGREES)") << "\n";
    Json j{{"config", {{"input", input.config_json()}, {"tol", tol}}},
           {"breakdown", to_json(b)},
           {"polynomial", to_json(p)}};
    write_json_report(json_path, j);
    return b.agrees ? 0 : 1;
}

int run_fixed_points(const PolyInput& input, double tol, const std::string& json_path) {
    Polynomial p = input.build();
    std::vector<FixedPointRecord> recs = find_fixed_points(p, tol);
    RationalMap map = chebyshev_map(p);
    std::cout << "map degree " << map.degree << ", " << recs.size()
              << " fixed points (including infinity)\n";
    std::cout << fixed_point_table(recs);
    Json j{{"config", {{"input", input.config_json()}, {"tol", tol}}},
           {"map", to_json(map)},
           {"fixed_points", to_json(recs)}};
    write_json_report(json_path, j);
    return 0;
}

int run_lambda_report(const PolyInput& input, const std::string& json_path, bool with_evidence,
                      int budget) {
    if (!input.lambda_set) throw DegenerateInput("lambda-report needs --lambda");
    Complex lambda{input.lambda_re, input.lambda_im};
    LambdaFamilyRecord rec = lambda_record(lambda);

    std::cout << "lambda = " << lambda.real();
    if (lambda.imag() != 0) std::cout << (lambda.imag() > 0 ? "+" : "") << lambda.imag() << "i";
    std::cout << "\npsi = " << rec.psi_value.real();
    if (rec.psi_value.imag() != 0) std::cout << " + " << rec.psi_value.imag() << "i";
    std::cout << "\ndistinguished extraneous point " << rec.distinguished_extraneous.real();
    if (rec.distinguished_extraneous.imag() != 0)
        std::cout << " + " << rec.distinguished_extraneous.imag() << "i";
    std::cout << " with multiplier " << rec.distinguished_multiplier.real() << " + "
              << rec.distinguished_multiplier.imag() << "i\n";
    std::cout << "closed form agrees: " << (rec.closed_form_agrees ? "yes" : "NO") << "\n";
    std::cout << fixed_point_table(rec.fixed_points);
    bool checks_ok = true;
    for (const auto& c : rec.bound_checks) {
        std::cout << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name << "  " << c.detail << "\n";
        checks_ok = checks_ok && c.pass;
    }

    Json j = to_json(rec);
    j["config"] = {{"lambda", {lambda.real(), lambda.imag()}}, {"budget", budget}};
    bool evidence_ok = true;
    if (with_evidence) {
        ConnectivityEvidence ev = connectivity_evidence(rec.p_lambda, budget);
        j["evidence"] = to_json(ev);
        evidence_ok = ev.verdict == EvidenceVerdict::evidence_consistent;
        std::cout << "connectivity evidence: " << to_string(ev.verdict) << "\n";
    }
    write_json_report(json_path, j);
    return (rec.closed_form_agrees && checks_ok && evidence_ok) ? 0 : 1;
}

int run_audit(const PolyInput& input, bool degree_corpus, int count, std::uint64_t seed, double tol,
              int workers, int budget, const std::string& jsonl_path, const std::string& csv_path,
              const std::string& json_path) {
    if (degree_corpus || !input.has_input()) {
        auto t0 = Clock::now();
        std::vector<CorpusEntry> corpus = make_degree_corpus(seed, count);
        DegreeAuditReport report = degree_audit(corpus, tol, workers);
        double elapsed = seconds_since(t0);
        std::cout << "degree audit: " << report.rows.size() << " polynomials, "
                  << report.disagreements << " disagreements, " << report.census_mismatches
                  << " census mismatches, " << report.ambiguous << " ambiguous, "
                  << report.degree_five_count << " of degree five; "
                  << (report.pass ? "PASS" : "FAIL") << " (" << elapsed << " s)\n";
        if (!jsonl_path.empty()) {
            std::ofstream os(jsonl_path);
            write_degree_report_jsonl(report, os);
        }
        if (!csv_path.empty()) {
            std::ofstream os(csv_path);
            write_degree_report_csv(report, os);
        }
        return report.pass ? 0 : 1;
    }

    Polynomial p = input.build();
    auto t0 = Clock::now();
    ConnectivityEvidence ev = connectivity_evidence(p, budget);
    double elapsed = seconds_since(t0);
    std::cout << "attractors: " << ev.attractors.items.size() << "\n";
    for (const auto& a : ev.attractors.items)
        std::cout << "  #" << a.id << " at " << a.location.real() << (a.location.imag() < 0 ? "" : "+")
                  << a.location.imag() << "i  |multiplier| " << std::abs(a.multiplier)
                  << (a.is_root ? "  (root)" : "  (extraneous)") << "\n";
    std::cout << "critical orbits settled: " << (ev.critical_orbits.pass ? "yes" : "NO") << "\n";
    std::cout << "ray probe: " << (ev.ray.pass ? "pass" : "FAIL")
              << ", pole probe: " << (ev.poles.pass ? "pass" : "FAIL") << "\n";
    std::cout << "verdict: " << to_string(ev.verdict) << " (" << elapsed << " s)\n";
    Json j = to_json(ev);
    j["config"] = {{"input", input.config_json()}, {"budget", budget}, {"tol", tol}};
    j["elapsed_seconds"] = elapsed;
    write_json_report(json_path, j);
    return ev.verdict == EvidenceVerdict::evidence_consistent ? 0 : 1;
}

int run_render(const PolyInput& input, double center_re, double center_im, double width, int px,
               int py, int budget, int workers, const std::string& out,
               bool check_symmetry, bool check_rotation) {
    Polynomial p = input.build();
    Viewport vp;
    vp.center = Complex{center_re, center_im};
    vp.width = width;
    vp.px = px;
    vp.py = py;
    auto t0 = Clock::now();
    BasinGrid grid = render_basins(p, vp, budget, workers);
    double elapsed = seconds_since(t0);
    Palette pal = default_palette(grid.attractors);
    write_image(grid, pal, out);
    long decided = 0;
    for (const auto& rec : grid.pixels)
        if (rec.attractor != kPixelUndecided) ++decided;
    std::cout << "rendered " << px << "x" << py << " to " << out << " in " << elapsed << " s; "
              << grid.attractors.items.size() << " attractors, decided fraction "
              << static_cast<double>(decided) / static_cast<double>(grid.pixels.size()) << "\n";
    int code = 0;
    if (check_symmetry) {
        SymmetryReport rep = real_axis_symmetry(grid);
        std::cout << "real-axis symmetry: " << rep.fraction << (rep.pass ? " (pass)" : " (FAIL)")
                  << "\n";
        if (!rep.pass) code = 1;
    }
    if (check_rotation) {
        SymmetryReport rep = rotation_equivariance(chebyshev_map(p), grid);
        std::cout << "rotation equivariance: " << rep.fraction << (rep.pass ? " (pass)" : " (FAIL)")
                  << "\n";
        if (!rep.pass) code = 1;
    }
    return code;
}

int run_sweep(const std::string& grid_spec, const std::string& checks, const std::string& out) {
    if (checks != "all") throw DegenerateInput("--checks supports only \"all\"");
    double lo = -1, hi = 1;
    int n = 41;
    {
        std::stringstream ss(grid_spec);
        std::string a, b, c;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
            throw DegenerateInput("--lambda-grid expects lo:hi:count");
        lo = std::stod(a);
        hi = std::stod(b);
        n = std::stoi(c);
        if (n < 2) throw DegenerateInput("--lambda-grid needs at least 2 points");
    }
    static const char* kCheckNames[] = {"real_root_bracket",    "alpha_bracket",
                                        "critical_value_bound", "horizontal_preimage",
                                        "ordering_chain",       "nonreal_extraneous"};
    std::ostringstream csv;
    csv.precision(15);
    csv << "lambda,psi,real_root,real_extraneous,multiplier_error";
    for (const char* name : kCheckNames) csv << ',' << name;
    csv << ",all_pass\n";
    bool all_ok = true;
    for (int i = 0; i < n; ++i) {
        double lambda = lo + (hi - lo) * i / (n - 1);
        double psi_v = psi(Complex{lambda, 0.0}).real();
        double r = real_root_of_lambda_poly(lambda);
        double alpha = real_extraneous_root(lambda);
        Polynomial p = lambda_polynomial(Complex{lambda, 0.0});
        RationalMap deriv = chebyshev_derivative(p);
        Complex mult = deriv(Complex{-1.0 / std::sqrt(5.0 - lambda), 0.0}).value();
        double mult_err = std::abs(mult - Complex{lambda, 0.0});
        std::vector<BoundCheck> checks_row = lemma_bound_audit(lambda);
        bool row_ok = mult_err <= 1e-8;
        csv << lambda << ',' << psi_v << ',' << r << ',' << alpha << ',' << mult_err;
        for (const char* name : kCheckNames) {
            bool pass = false;
            for (const auto& c : checks_row)
                if (c.name == name) pass = c.pass;
            row_ok = row_ok && pass;
            csv << ',' << (pass ? 1 : 0);
        }
        csv << ',' << (row_ok ? 1 : 0) << "\n";
        all_ok = all_ok && row_ok;
    }
    if (out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream os(out);
        if (!os) throw DegenerateInput("cannot open output file " + out);
        os << csv.str();
        std::cout << "sweep of " << n << " parameter values written to " << out << "; "
                  << (all_ok ? "all rows pass" : "SOME ROWS FAIL") << "\n";
    }
    return all_ok ? 0 : 1;
}

int run_reproduce_figures(const std::string& out_dir, int workers, const std::string& only) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    struct Job {
        std::string file;
        std::string description;
        bool lambda_input;
        double lambda;
        std::vector<std::pair<Complex, int>> roots;  // used when !lambda_input
        Complex center;
        double width;
        int px, py;
        int budget;
    };
    const double a0 = -1.0 / std::sqrt(5.0);  // extraneous point, lambda = 0
    const double am1 = -1.0 / std::sqrt(6.0); // parabolic point, lambda = -1
    std::vector<Job> jobs = {
        {"lambda_-1_full.ppm", "cubic family, lambda=-1, full frame", true, -1.0, {},
         Complex{0, 0}, 8.0, 800, 800, 200000},
        {"lambda_-1_zoom.ppm", "cubic family, lambda=-1, parabolic point zoom", true, -1.0, {},
         Complex{am1, 0}, 0.8, 640, 640, 200000},
        {"lambda_0_full.ppm", "cubic family, lambda=0, full frame", true, 0.0, {},
         Complex{0, 0}, 8.0, 800, 800, 2000},
        {"lambda_0_zoom.ppm", "cubic family, lambda=0, extraneous basin zoom", true, 0.0, {},
         Complex{a0, 0}, 0.8, 640, 640, 2000},
        {"lambda_1_full.ppm", "cubic family, lambda=1, full frame", true, 1.0, {},
         Complex{0, 0}, 8.0, 800, 800, 200000},
        {"lambda_1_zoom.ppm", "cubic family, lambda=1, parabolic petals zoom", true, 1.0, {},
         Complex{-0.5, 0}, 0.8, 640, 640, 200000},
        {"cubic_roots.ppm", "unicritical cubic with simple roots", false, 0.0,
         {{Complex{1, 0}, 1},
          {Complex{-0.5, 0.8660254037844386}, 1},
          {Complex{-0.5, -0.8660254037844386}, 1}},
         Complex{0, 0}, 8.0, 800, 800, 2000},
        {"double_root.ppm", "cubic with one double and one simple root", false, 0.0,
         {{Complex{1, 0}, 2}, {Complex{-2, 0}, 1}},
         Complex{0, 0}, 8.0, 800, 800, 2000},
    };

    if (!only.empty()) {
        std::erase_if(jobs, [&](const Job& j) { return j.file.find(only) == std::string::npos; });
        if (jobs.empty()) throw DegenerateInput("--only \"" + only + "\" matches no figure");
    }

    Json manifest;
    manifest["config"] = {{"workers", workers}, {"tile", 64}, {"palette", "default"}};
    Json images = Json::array();
    auto total0 = Clock::now();
    for (const auto& job : jobs) {
        Polynomial p = job.lambda_input ? lambda_polynomial(Complex{job.lambda, 0.0})
                                        : Polynomial::from_roots(job.roots);
        Viewport vp;
        vp.center = job.center;
        vp.width = job.width;
        vp.px = job.px;
        vp.py = job.py;
        auto t0 = Clock::now();
        BasinGrid grid = render_basins(p, vp, job.budget, workers);
        double elapsed = seconds_since(t0);
        Palette pal = default_palette(grid.attractors);
        fs::path path = fs::path(out_dir) / job.file;
        write_image(grid, pal, path);
        long decided = 0;
        for (const auto& rec : grid.pixels)
            if (rec.attractor != kPixelUndecided) ++decided;
        Json entry{{"file", job.file},
                   {"description", job.description},
                   {"sha256", sha256_file(path)},
                   {"viewport",
                    {{"center", {job.center.real(), job.center.imag()}},
                     {"width", job.width},
                     {"px", job.px},
                     {"py", job.py}}},
                   {"budget", job.budget},
                   {"decided_fraction",
                    static_cast<double>(decided) / static_cast<double>(grid.pixels.size())},
                   {"elapsed_seconds", elapsed}};
        if (job.lambda_input) entry["lambda"] = job.lambda;
        images.push_back(std::move(entry));
        std::cout << job.file << " done in " << elapsed << " s\n";
    }
    manifest["images"] = std::move(images);
    manifest["total_elapsed_seconds"] = seconds_since(total0);
    std::ofstream os(fs::path(out_dir) / "manifest.json");
    os << manifest.dump(2) << "\n";
    std::cout << "manifest written to " << (fs::path(out_dir) / "manifest.json").string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chebyshev iteration maps: degree and fixed-point theory, the "
                 "multiplier-parametrized cubic family, dynamical audits, and basin renders"};
    app.require_subcommand(1);

    double tol = kDefaultClusterTol;
    app.add_option("--tol", tol, "root clustering tolerance")->capture_default_str();

    // degree
    auto* degree_cmd = app.add_subcommand("degree", "predict and verify the degree of the iteration map");
    PolyInput degree_in;
    degree_in.attach(degree_cmd, true);
    std::string degree_json;
    degree_cmd->add_option("--json", degree_json, "write the report as JSON to this path");

    // fixed-points
    auto* fixed_cmd = app.add_subcommand("fixed-points", "locate and classify all fixed points");
    PolyInput fixed_in;
    fixed_in.attach(fixed_cmd, true);
    std::string fixed_json;
    fixed_cmd->add_option("--json", fixed_json, "write the report as JSON to this path");

    // lambda-report
    auto* lambda_cmd = app.add_subcommand("lambda-report", "full per-parameter family record");
    PolyInput lambda_in;
    lambda_in.attach(lambda_cmd, true);
    std::string lambda_json;
    bool lambda_evidence = false;
    int lambda_budget = 0;
    lambda_cmd->add_option("--json", lambda_json, "write the record as JSON to this path");
    lambda_cmd->add_flag("--evidence", lambda_evidence, "also run the connectivity probes");
    lambda_cmd->add_option("--budget", lambda_budget, "iteration budget for the probes (0 = default)");

    // audit
    auto* audit_cmd = app.add_subcommand(
        "audit", "degree-theorem corpus audit, or dynamical probes for one polynomial");
    PolyInput audit_in;
    audit_in.attach(audit_cmd, true);
    bool audit_corpus = false;
    int audit_count = 240;
    std::uint64_t audit_seed = 7042;
    int audit_workers = 1;
    int audit_budget = 0;
    std::string audit_jsonl, audit_csv, audit_json;
    audit_cmd->add_flag("--degree-corpus", audit_corpus, "run the degree corpus audit (default when no input given)");
    audit_cmd->add_option("--count", audit_count, "corpus size")->capture_default_str();
    audit_cmd->add_option("--seed", audit_seed, "corpus seed")->capture_default_str();
    audit_cmd->add_option("--workers", audit_workers, "worker threads")->capture_default_str();
    audit_cmd->add_option("--budget", audit_budget, "iteration budget for probes (0 = default)");
    audit_cmd->add_option("--jsonl", audit_jsonl, "write per-polynomial rows as JSON lines");
    audit_cmd->add_option("--csv", audit_csv, "write per-polynomial rows as CSV");
    audit_cmd->add_option("--json", audit_json, "write the probe report as JSON (single-polynomial mode)");

    // render
    auto* render_cmd = app.add_subcommand("render", "render basins of attraction");
    PolyInput render_in;
    render_in.attach(render_cmd, true);
    double render_cx = 0, render_cy = 0, render_width = 8;
    int render_px = 800, render_py = 800, render_budget = 0, render_workers = 0;
    std::string render_out = "basins.ppm";
    bool render_symmetry = false, render_rotation = false;
    render_cmd->add_option("--center-re", render_cx, "viewport center, real part")->capture_default_str();
    render_cmd->add_option("--center-im", render_cy, "viewport center, imaginary part")->capture_default_str();
    render_cmd->add_option("--width", render_width, "viewport width in plane units")->capture_default_str();
    render_cmd->add_option("--px", render_px, "pixels across")->capture_default_str();
    render_cmd->add_option("--py", render_py, "pixels down")->capture_default_str();
    render_cmd->add_option("--budget", render_budget, "iteration budget (0 = default by attractor type)");
    render_cmd->add_option("--workers", render_workers, "worker threads (0 = hardware)");
    render_cmd->add_option("--out", render_out, "output image path (binary PPM + JSON sidecar)")
        ->capture_default_str();
    render_cmd->add_flag("--symmetry", render_symmetry, "check real-axis symmetry of the result");
    render_cmd->add_flag("--rotation", render_rotation, "check 3-fold rotation equivariance");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep with lemma-bound checks as CSV");
    std::string sweep_grid = "-1:1:41";
    std::string sweep_checks = "all";
    std::string sweep_out;
    sweep_cmd->add_option("--lambda-grid", sweep_grid, "grid as lo:hi:count")->capture_default_str();
    sweep_cmd->add_option("--checks", sweep_checks, "which checks to run (all)")->capture_default_str();
    sweep_cmd->add_option("--out", sweep_out, "CSV output path (default stdout)");

    // reproduce-figures
    auto* figures_cmd = app.add_subcommand("reproduce-figures",
                                           "render the canonical image set and write a hash manifest");
    std::string figures_dir = "figures";
    int figures_workers = 0;
    std::string figures_only;
    figures_cmd->add_option("--out-dir", figures_dir, "output directory")->capture_default_str();
    figures_cmd->add_option("--workers", figures_workers, "worker threads (0 = hardware)");
    figures_cmd->add_option("--only", figures_only,
                            "render only figures whose file name contains this substring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    }

    try {
        if (degree_cmd->parsed()) return run_degree(degree_in, tol, degree_json);
        if (fixed_cmd->parsed()) return run_fixed_points(fixed_in, tol, fixed_json);
        if (lambda_cmd->parsed())
            return run_lambda_report(lambda_in, lambda_json, lambda_evidence, lambda_budget);
        if (audit_cmd->parsed())
            return run_audit(audit_in, audit_corpus, audit_count, audit_seed, tol, audit_workers,
                             audit_budget, audit_jsonl, audit_csv, audit_json);
        if (render_cmd->parsed())
            return run_render(render_in, render_cx, render_cy, render_width, render_px, render_py,
                              render_budget, render_workers, render_out, render_symmetry,
                              render_rotation);
        if (sweep_cmd->parsed()) return run_sweep(sweep_grid, sweep_checks, sweep_out);
        if (figures_cmd->parsed())
            return run_reproduce_figures(figures_dir, figures_workers, figures_only);
    } catch (const DegenerateInput& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const ForbiddenLambda& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const nlohmann::json::parse_error& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const std::out_of_range& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
