// seminorm-lab: corpus generation, seminorm tables, and verification
// batteries for screened/homogeneous function-space seminorms.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "snlb/corpus.hpp"
#include "snlb/field_ops.hpp"
#include "snlb/fundamental.hpp"
#include "snlb/grid_io.hpp"
#include "snlb/hardy.hpp"
#include "snlb/interpolation.hpp"
#include "snlb/littlewood_paley.hpp"
#include "snlb/operator_check.hpp"
#include "snlb/rearrangement.hpp"
#include "snlb/report.hpp"
#include "snlb/screened.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace snlb;

namespace {

struct RunConfig {
    GridSpec grid = GridSpec::make(1, 1024, 8.0 * std::numbers::pi);
    std::uint64_t seed = 7;
    fs::path out = "out";
    std::vector<std::string> corpus;  // empty = builtin battery
    std::vector<double> sweep_s = {0.25, 0.5, 0.75};
    std::vector<double> sweep_p = {2.0};
    std::vector<double> sweep_q = {2.0};
    std::vector<double> sweep_sigma = {1.0};
    int depth = 8;        // 2^depth radial quadrature nodes
    double slack = 0.02;  // multiplicative slack on paper brackets
    bool plot = false;
    bool refine = true;
};

double parse_value(const std::string& tok) {
    if (tok == "inf" || tok == "Inf" || tok == "INF") return kInf;
    return std::stod(tok);
}

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_value(tok));
    return out;
}

GridSpec parse_grid(const std::string& text) {
    // dim x N x L, e.g. "1x1024x25.132741"
    std::stringstream ss(text);
    std::string tok;
    std::vector<std::string> parts;
    while (std::getline(ss, tok, 'x')) parts.push_back(tok);
    if (parts.size() != 3) throw CLI::ValidationError("--grid expects DIMxNxL");
    return GridSpec::make(std::stoi(parts[0]), std::stoull(parts[1]), std::stod(parts[2]));
}

void apply_json(RunConfig& cfg, const json& j) {
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        cfg.grid = GridSpec::make(g.value("dim", 1), g.value("n", 1024),
                                  g.value("length", 8.0 * std::numbers::pi));
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("corpus")) cfg.corpus = j["corpus"].get<std::vector<std::string>>();
    auto list = [&](const char* key, std::vector<double>& dst) {
        if (!j.contains("sweep") || !j["sweep"].contains(key)) return;
        dst.clear();
        for (const auto& v : j["sweep"][key])
            dst.push_back(v.is_string() ? parse_value(v.get<std::string>()) : v.get<double>());
    };
    list("s", cfg.sweep_s);
    list("p", cfg.sweep_p);
    list("q", cfg.sweep_q);
    list("sigma", cfg.sweep_sigma);
    if (j.contains("depth")) cfg.depth = j["depth"].get<int>();
    if (j.contains("slack")) cfg.slack = j["slack"].get<double>();
    if (j.contains("plot")) cfg.plot = j["plot"].get<bool>();
    if (j.contains("refine")) cfg.refine = j["refine"].get<bool>();
}

std::string sanitize(const std::string& name) {
    std::string s = name;
    for (char& c : s)
        if (c == ':' || c == '/' || c == '\\') c = '_';
    return s;
}

std::vector<CorpusEntry> load_corpus(const RunConfig& cfg) {
    if (cfg.corpus.empty()) return builtin_corpus(cfg.grid, cfg.seed);
    std::vector<CorpusEntry> out;
    std::uint64_t s = cfg.seed;
    for (const std::string& name : cfg.corpus) out.push_back(make_corpus_entry(name, cfg.grid, s++));
    return out;
}

std::string fmt_param(double v) {
    if (std::isinf(v)) return "inf";
    std::string s = format_g17(v);
    return s;
}

// ---------------------------------------------------------------- gen ----
int cmd_gen(const RunConfig& cfg) {
    fs::create_directories(cfg.out / "corpus");
    std::vector<std::string> names, files;
    std::vector<std::vector<double>> meta(3);
    for (const CorpusEntry& e : load_corpus(cfg)) {
        const fs::path file = cfg.out / "corpus" / (sanitize(e.name) + ".snlb");
        write_raw(file, e.f);
        names.push_back(e.name);
        files.push_back(file.string());
    }
    std::ofstream manifest(cfg.out / "corpus" / "manifest.csv");
    manifest << "name,file,dim,n,length\n";
    for (std::size_t i = 0; i < names.size(); ++i)
        manifest << names[i] << ',' << files[i] << ',' << cfg.grid.dim << ',' << cfg.grid.size[0]
                 << ',' << format_g17(cfg.grid.length) << '\n';
    std::cout << "wrote " << names.size() << " corpus files under " << (cfg.out / "corpus")
              << "\n";
    return 0;
}

// ----------------------------------------------------------- seminorm ----
int cmd_seminorm(const RunConfig& cfg) {
    fs::create_directories(cfg.out);
    const DyadicPartition partition = DyadicPartition::build(cfg.grid);
    BesovOptions quad;
    quad.radial_nodes = 1 << cfg.depth;

    std::ofstream os(cfg.out / "seminorms.csv");
    os << "case_id,kind,s,p,q,sigma,value,error_estimate,dropped_mass\n";
    std::vector<std::string> rows;
    for (const CorpusEntry& e : load_corpus(cfg))
        for (double s : cfg.sweep_s)
            for (double p : cfg.sweep_p)
                for (double q : cfg.sweep_q)
                    for (double sigma : cfg.sweep_sigma) {
                        ScreenedParams params{s, p, q, sigma};
                        params.validate(cfg.grid);
                        struct Val {
                            std::string kind;
                            double value, err, dropped;
                        };
                        std::vector<Val> vals;
                        const ScreenedResult sd =
                            screened_seminorm(e.f, params, ScreenedMode::Difference, quad);
                        vals.push_back({"screened-diff", sd.value, sd.tail_small, 0.0});
                        const ScreenedResult sm =
                            screened_seminorm(e.f, params, ScreenedMode::Modulus, quad);
                        vals.push_back({"screened-mod", sm.value, sm.tail_small, 0.0});
                        const BesovResult bm = besov_seminorm(e.f, s, p, q, BesovMode::Modulus, quad);
                        vals.push_back({"besov-mod", bm.value, bm.tail_small + bm.tail_large, 0.0});
                        vals.push_back(
                            {"besov-lipschitz",
                             besov_lipschitz_seminorm(e.f, s, p, q, partition), 0.0, 0.0});
                        const BandSeminormResult rz = riesz_seminorm(e.f, s, p, partition);
                        vals.push_back({"riesz", rz.value, 0.0, rz.dropped_mass});
                        vals.push_back({"w1p", w1p_seminorm(e.f, p), 0.0, 0.0});
                        vals.push_back({"lp", lp_norm(e.f, p), 0.0, 0.0});
                        vals.push_back({"strichartz", strichartz_seminorm(e.f, s), 0.0, 0.0});
                        const FrequencySeminormResult gf = generalized_frequency_seminorm(
                            e.f, s, 1.0, p, q, partition, FrequencyFamily::Btilde);
                        vals.push_back({"genfreq-B", gf.value, 0.0, gf.dropped_mass});
                        for (const Val& v : vals) {
                            std::ostringstream row;
                            row << e.name << '|' << v.kind << '|' << fmt_param(s) << '|'
                                << fmt_param(p) << '|' << fmt_param(q) << '|' << fmt_param(sigma)
                                << ',' << v.kind << ',' << fmt_param(s) << ',' << fmt_param(p)
                                << ',' << fmt_param(q) << ',' << fmt_param(sigma) << ','
                                << format_g17(v.value) << ',' << format_g17(v.err) << ','
                                << format_g17(v.dropped);
                            rows.push_back(row.str());
                        }
                    }
    std::sort(rows.begin(), rows.end());
    for (const std::string& r : rows) os << r << '\n';
    std::cout << "wrote " << rows.size() << " rows to " << (cfg.out / "seminorms.csv") << "\n";
    return 0;
}

// ------------------------------------------------------------- verify ----
void core_engine_checks(const RunConfig& cfg, std::vector<CheckReport>& checks) {
    Rng rng(cfg.seed);
    auto rand_pair = [&](std::size_t dim) {
        std::vector<double> w0(dim), w1(dim);
        for (double& w : w0) w = 0.1 + 9.9 * rng.uniform();
        for (double& w : w1) w = 0.1 + 9.9 * rng.uniform();
        return WeightedSpacePair::diag_l1(w0, w1);
    };
    auto rand_vec = [&](std::size_t dim) {
        std::vector<double> x(dim);
        for (double& v : x) v = rng.symmetric();
        return x;
    };

    // seminorm axioms for K(t,.) on random couples
    double worst_axiom = 0.0;
    for (int c = 0; c < 40; ++c) {
        const auto pair = rand_pair(5);
        const double t = std::exp2(4.0 * rng.symmetric());
        const auto x = rand_vec(5);
        const auto y = rand_vec(5);
        std::vector<double> xy(5);
        for (int i = 0; i < 5; ++i) xy[i] = x[i] + y[i];
        const double kx = k_functional(pair, t, x).value;
        const double ky = k_functional(pair, t, y).value;
        const double kxy = k_functional(pair, t, xy).value;
        worst_axiom = std::max(worst_axiom, (kxy - kx - ky) / std::max(kx + ky, 1e-30));
        const double lam = 3.0 * rng.symmetric();
        std::vector<double> lx(5);
        for (int i = 0; i < 5; ++i) lx[i] = lam * x[i];
        const double klx = k_functional(pair, t, lx).value;
        worst_axiom =
            std::max(worst_axiom, std::abs(klx - std::abs(lam) * kx) / std::max(kx, 1e-30));
    }
    checks.push_back({"core/k-axioms", worst_axiom, 1e-9, 1.0, worst_axiom <= 1e-9});

    // monotone/concave in t plus the two-sided scale bound
    double worst_shape = 0.0;
    for (int c = 0; c < 40; ++c) {
        const auto pair = rand_pair(5);
        const auto x = rand_vec(5);
        const double t1 = std::exp2(4.0 * rng.symmetric());
        const double t2 = t1 * (1.0 + rng.uniform());
        const double t3 = t2 * (1.0 + rng.uniform());
        const double k1 = k_functional(pair, t1, x).value;
        const double k2 = k_functional(pair, t2, x).value;
        const double k3 = k_functional(pair, t3, x).value;
        const double sc = std::max({k1, k2, k3, 1e-30});
        worst_shape = std::max(worst_shape, (k1 - k2) / sc);  // increasing
        const double lam = (t2 - t1) / (t3 - t1);
        worst_shape =
            std::max(worst_shape, (((1.0 - lam) * k1 + lam * k3) - k2) / sc);  // concavity
        worst_shape =
            std::max(worst_shape, (k2 - std::max(1.0, t2 / t1) * k1) / sc);
        worst_shape =
            std::max(worst_shape, (std::min(1.0, t2 / t1) * k1 - k2) / sc);
    }
    checks.push_back({"core/k-shape", worst_shape, 1e-9, 1.0, worst_shape <= 1e-9});

    // quadrature route agrees with the exact backend (negative control at
    // slack 0: the generic route is quadrature-limited by design)
    {
        double worst = 0.0;
        for (int c = 0; c < 6; ++c) {
            const auto pair = rand_pair(4);
            const auto x = rand_vec(4);
            InterpolationParams ip{0.25 + 0.5 * rng.uniform(), (c % 2) ? 1.0 : 2.0, 1.0};
            const double exact = interpolation_seminorm(pair, ip, x).value;
            const double quad =
                interpolation_seminorm(pair, ip, x, 12, 40.0, KMethod::ConvexSearch).value;
            if (exact > 0.0) worst = std::max(worst, std::abs(quad / exact - 1.0));
        }
        const double tol = std::max(cfg.slack, 0.0) > 0.0 ? std::max(1e-3, cfg.slack) : 0.0;
        checks.push_back({"core/quadrature-consistency", worst, tol, 1.0, worst <= tol});
    }

    // Hardy battery: exact step functions, both truncated inequalities
    {
        bool all = true;
        double margin = 0.0;
        for (int c = 0; c < 100; ++c) {
            const double s = 0.1 + 0.8 * rng.uniform();
            const int p = 1 + static_cast<int>(rng.uniform() * 3.0);
            const double sigma = std::exp2(2.0 * rng.symmetric());
            const int pieces = 3 + static_cast<int>(rng.uniform() * 5.0);
            std::vector<double> breaks(static_cast<std::size_t>(pieces + 1));
            double t = 1.0;
            for (auto& b : breaks) {
                b = t;
                t *= 1.0 + 3.0 * rng.uniform();
            }
            const double top = sigma * (0.2 + 0.8 * rng.uniform());
            for (auto& b : breaks) b *= top / breaks.back();
            std::vector<double> vals(static_cast<std::size_t>(pieces));
            for (auto& v : vals) v = rng.uniform();
            const HardyResult h = hardy_verify(breaks, vals, s, p, sigma);
            all = all && h.pass;
            margin = std::max(margin, h.lhs - h.rhs / s);
            const HardyResult h2 = hardy_verify_upper(breaks, vals, s, p);
            all = all && h2.pass;
            margin = std::max(margin, h2.lhs - h2.rhs / s);
        }
        checks.push_back({"core/hardy", margin, 1e-12, 1.0, all});
    }

    // interpolation of a bounded operator between couples
    {
        const auto domain = rand_pair(4);
        const auto range = rand_pair(4);
        Matrix T{4, 4, std::vector<double>(16)};
        for (double& v : T.a) v = rng.symmetric();
        InterpolationParams ip{0.5, 2.0, 1.0};
        const OperatorCheckReport rep =
            operator_interpolation_check(domain, range, T, ip, 50, cfg.seed + 17);
        checks.push_back(
            {"core/operator-interpolation", rep.max_ratio, 1.0, 1.0, rep.pass});
    }

    // fundamental lemma bound at r = 2
    {
        double worst = 0.0;
        for (int c = 0; c < 20; ++c) {
            const auto pair = rand_pair(4);
            const auto x = rand_vec(4);
            const auto dec = fundamental_decomposition(pair, x, 2.0, 1e-8, 16);
            worst = std::max(worst, fundamental_bound_ratio(pair, x, dec));
        }
        checks.push_back({"core/fundamental-bound", worst, 1.0, 1.0, worst <= 1.0 + 1e-6});
    }
}

int cmd_verify(const RunConfig& cfg) {
    fs::create_directories(cfg.out);
    std::vector<CheckReport> checks;
    core_engine_checks(cfg, checks);

    const DyadicPartition partition = DyadicPartition::build(cfg.grid);
    checks.push_back({"lp/partition-identity", partition.partition_residual(), 1e-12, 1.0,
                      partition.partition_residual() < 1e-12});

    SuiteOptions sopts;
    sopts.quadrature.radial_nodes = 1 << cfg.depth;
    sopts.slack = cfg.slack;
    sopts.refine = cfg.refine;

    std::vector<EquivalenceReport> equiv;
    for (const CorpusEntry& e : load_corpus(cfg))
        for (double s : cfg.sweep_s)
            for (double p : cfg.sweep_p)
                for (double q : cfg.sweep_q)
                    for (double sigma : cfg.sweep_sigma) {
                        ScreenedParams params{s, p, q, sigma};
                        params.validate(cfg.grid);
                        const std::string id = e.name + "|s=" + fmt_param(s) + "|p=" + fmt_param(p) +
                                               "|q=" + fmt_param(q) + "|sigma=" + fmt_param(sigma);
                        auto reports = equivalence_suite(e.f, id, params, partition, sopts);
                        equiv.insert(equiv.end(), reports.begin(), reports.end());
                    }

    write_check_csv(cfg.out / "verify_checks.csv", checks);
    write_equivalence_csv(cfg.out / "verify_equivalence.csv", equiv);

    int failures = 0;
    for (const CheckReport& c : checks)
        if (!c.pass) {
            ++failures;
            std::cout << "FAIL " << c.case_id << "\n";
        }
    for (const EquivalenceReport& r : equiv)
        if (!r.pass) {
            ++failures;
            std::cout << "FAIL " << r.case_id << " " << r.name << "\n";
        }
    std::cout << (failures == 0 ? "verify: all checks passed" : "verify: failures") << " ("
              << checks.size() << " checks, " << equiv.size() << " equivalences)\n";
    return failures == 0 ? 0 : 1;
}

// ------------------------------------------------------------- report ----
void write_modulus_svg(const fs::path& path, const GridFunction& f, double s, double p) {
    const double radius = 0.25 * f.spec().length;
    const int n = 96;
    std::vector<double> radii(n);
    const double lo = radius * std::exp2(-12.0);
    for (int i = 0; i < n; ++i)
        radii[i] = lo * std::pow(radius / lo, static_cast<double>(i) / (n - 1));
    const ModulusProfile prof = modulus_profile(f, radii, p);

    const int W = 640, H = 420, M = 48;
    std::ofstream os(path);
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
    os << "<rect width='100%' height='100%' fill='white'/>\n";
    double ymin = 1e300, ymax = -1e300;
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < n; ++i) {
        const double v = std::pow(radii[i], -s) * prof.value[i];
        if (v <= 0.0) continue;
        const double x = std::log10(radii[i]);
        const double y = std::log10(v);
        pts.push_back({x, y});
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (pts.size() >= 2) {
        const double xmin = pts.front().first, xmax = pts.back().first;
        os << "<polyline fill='none' stroke='steelblue' stroke-width='1.5' points='";
        for (const auto& [x, y] : pts) {
            const double px = M + (x - xmin) / (xmax - xmin) * (W - 2 * M);
            const double py = H - M - (y - ymin) / std::max(ymax - ymin, 1e-12) * (H - 2 * M);
            os << px << ',' << py << ' ';
        }
        os << "'/>\n";
    }
    os << "<text x='" << M << "' y='20' font-size='13'>t^-s * omega_p(t, f)  (log-log)</text>\n";
    os << "</svg>\n";
}

int cmd_report(const RunConfig& cfg) {
    const fs::path eq = cfg.out / "verify_equivalence.csv";
    int failures = 0;
    if (fs::exists(eq)) {
        const auto reports = read_equivalence_csv(eq);
        std::size_t pass = 0;
        for (const auto& r : reports) {
            if (r.pass)
                ++pass;
            else {
                ++failures;
                std::cout << "FAIL " << r.case_id << " " << r.name << " ratio=" << r.ratio << "\n";
            }
        }
        std::cout << "equivalences: " << pass << "/" << reports.size() << " passed\n";
    } else {
        std::cout << "no verification output under " << cfg.out << " (run verify first)\n";
    }
    if (cfg.plot) {
        fs::create_directories(cfg.out / "plots");
        for (const CorpusEntry& e : load_corpus(cfg))
            write_modulus_svg(cfg.out / "plots" / (sanitize(e.name) + ".svg"), e.f,
                              cfg.sweep_s.front(), cfg.sweep_p.front());
        std::cout << "plots under " << (cfg.out / "plots") << "\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"function-space seminorm laboratory"};
    app.require_subcommand(1);

    std::string config_path, grid_text, sweep_text;
    RunConfig cfg;
    bool plot_flag = false;
    long long seed_flag = -1;
    int depth_flag = -1;
    std::string out_flag;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file");
        cmd->add_option("--out", out_flag, "output directory");
        cmd->add_option("--seed", seed_flag, "random seed");
        cmd->add_option("--depth", depth_flag, "log2 of the radial quadrature nodes");
        cmd->add_option("--grid", grid_text, "grid as DIMxNxL");
        cmd->add_option("--sweep", sweep_text, "e.g. s=0.25,0.5;p=2;q=2,inf;sigma=1");
        cmd->add_flag("--plot", plot_flag, "emit SVG modulus plots (report)");
    };

    CLI::App* gen = app.add_subcommand("gen", "write the builtin corpus");
    CLI::App* sem = app.add_subcommand("seminorm", "tabulate seminorms over the sweep");
    CLI::App* ver = app.add_subcommand("verify", "run the verification batteries");
    CLI::App* rep = app.add_subcommand("report", "summarize verification output");
    for (CLI::App* c : {gen, sem, ver, rep}) add_common(c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            std::ifstream is(config_path);
            if (!is) throw std::runtime_error("cannot open config " + config_path);
            json j;
            is >> j;
            apply_json(cfg, j);
        }
        if (!out_flag.empty()) cfg.out = out_flag;
        if (seed_flag >= 0) cfg.seed = static_cast<std::uint64_t>(seed_flag);
        if (depth_flag >= 0) cfg.depth = depth_flag;
        if (!grid_text.empty()) cfg.grid = parse_grid(grid_text);
        if (plot_flag) cfg.plot = true;
        if (!sweep_text.empty()) {
            std::stringstream ss(sweep_text);
            std::string part;
            while (std::getline(ss, part, ';')) {
                const auto eq = part.find('=');
                if (eq == std::string::npos) throw std::runtime_error("bad --sweep clause: " + part);
                const std::string key = part.substr(0, eq);
                const auto vals = parse_list(part.substr(eq + 1));
                if (key == "s")
                    cfg.sweep_s = vals;
                else if (key == "p")
                    cfg.sweep_p = vals;
                else if (key == "q")
                    cfg.sweep_q = vals;
                else if (key == "sigma")
                    cfg.sweep_sigma = vals;
                else
                    throw std::runtime_error("unknown sweep key: " + key);
            }
        }

        if (gen->parsed()) return cmd_gen(cfg);
        if (sem->parsed()) return cmd_seminorm(cfg);
        if (ver->parsed()) return cmd_verify(cfg);
        if (rep->parsed()) return cmd_report(cfg);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
