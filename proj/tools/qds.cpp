// qds: command-line workbench for data-syndrome codes.
//
// Subcommands: construct, enumerate, distance, bound, lp, ensemble,
// simulate, asymptotic, verify.  Every file output gets a JSON manifest
// written beside it (<output>.manifest.json) recording the subcommand,
// parameters, seed, tool version and input digests.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qds/qds.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input: " + path);
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

void write_manifest(const std::string& out_path, const std::string& subcommand, json parameters,
                    std::optional<std::uint64_t> seed, const std::vector<std::string>& inputs) {
    json m;
    m["subcommand"] = subcommand;
    m["parameters"] = std::move(parameters);
    if (seed) m["seed"] = *seed;
    else m["seed"] = nullptr;
    m["version"] = qds::kVersion;
    m["inputs"] = json::array();
    for (const auto& p : inputs) m["inputs"].push_back({{"path", p}, {"digest_fnv1a64", fnv1a64_file(p)}});
    m["outputs"] = json::array({out_path});
    std::ofstream out(out_path + ".manifest.json");
    if (!out) throw std::runtime_error("cannot write manifest for: " + out_path);
    out << m.dump(2) << "\n";
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output: " + path);
    return out;
}

// ---------------------------------------------------------------- construct

int cmd_construct(const std::string& spec_path, const std::string& out_path) {
    qds::CodeSpec spec = qds::load_code_spec(spec_path);
    if (spec.css) {
        auto rows = spec.to_hprime();  // validates lengths
        std::cout << "css n=" << spec.n << " k=" << spec.k << " r=" << spec.r
                  << " rows=" << rows.size() << "\n";
    } else {
        qds::DSCode code = spec.to_ds_code();
        spec = qds::spec_from_code(code);  // normalized form
        std::cout << "n=" << code.n() << " k=" << code.k() << " r=" << code.r()
                  << " ds_rows=" << code.ds_rows() << "\n";
    }
    if (!out_path.empty()) {
        auto out = open_output(out_path);
        qds::write_code_spec(out, spec);
        write_manifest(out_path, "construct", {{"spec", spec_path}}, std::nullopt, {spec_path});
    }
    return 0;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const std::string& spec_path, bool dual, const std::string& out_path) {
    qds::DSCode code = qds::load_code_spec(spec_path).to_ds_code();
    qds::SplitWeightEnumerator B = dual ? qds::enumerate_dual(code) : qds::enumerate_code(code);
    if (out_path.empty()) {
        qds::write_enumerator_csv(std::cout, B);
    } else {
        auto out = open_output(out_path);
        qds::write_enumerator_csv(out, B);
        write_manifest(out_path, "enumerate", {{"spec", spec_path}, {"dual", dual}}, std::nullopt,
                       {spec_path});
    }
    return 0;
}

// ----------------------------------------------------------------- distance

int cmd_distance(const std::string& spec_path) {
    qds::CodeSpec spec = qds::load_code_spec(spec_path);
    if (spec.css) {
        std::cout << "d=" << qds::css_distance_scan(spec.to_hprime(), spec.n) << "\n";
    } else {
        qds::DistanceResult res = qds::min_distance(spec.to_ds_code());
        std::cout << "d=" << res.d << (res.degenerate ? " (degenerate)" : "") << "\n";
    }
    return 0;
}

// -------------------------------------------------------------------- bound

int cmd_bound(const std::string& kind, int n, int d, int tD, int tS, const std::string& out_path) {
    int kmax;
    std::string term;
    if (kind == "singleton") {
        kmax = qds::singleton_max_k(n, d);
        term = "n-2(d-1)";
    } else if (kind == "hamming-nondeg") {
        kmax = qds::hamming_nondeg_max_k(n, d);
        term = "sphere-count";
    } else if (kind == "hamming-unrestricted") {
        kmax = qds::hamming_unrestricted_max_k(n, d);
        term = "min-over-lambda";
    } else if (kind == "hybrid") {
        if (tD < 0 || tS < 0) throw CLI::ValidationError("bound", "hybrid needs --tD and --tS");
        d = 2 * tD + 1;
        kmax = qds::hybrid_hamming_max_k(n, tD, tS);
        term = "rectangle";
    } else {
        throw CLI::ValidationError("bound", "unknown --kind " + kind);
    }
    std::ostringstream csv;
    csv << "kind,n,d,tD,tS,k_max,dominating_term\n"
        << kind << ',' << n << ',' << d << ',' << tD << ',' << tS << ',' << kmax << ',' << term << "\n";
    std::cout << csv.str();
    if (!out_path.empty()) {
        auto out = open_output(out_path);
        out << csv.str();
        write_manifest(out_path, "bound",
                       {{"kind", kind}, {"n", n}, {"d", d}, {"tD", tD}, {"tS", tS}}, std::nullopt, {});
    }
    return 0;
}

// ----------------------------------------------------------------------- lp

int cmd_lp(int n, int k, int d, int r, bool scan_d, const std::string& out_path) {
    if (scan_d) {
        std::cout << "d_max=" << qds::verdict_to_distance_bound(n, k, r) << "\n";
        return 0;
    }
    qds::RationalTableau t(n, k, d, r);
    qds::FeasibilityVerdict v = qds::solve_feasibility(t);
    bool feasible = v.status == qds::LPStatus::feasible;
    std::cout << (feasible ? "feasible" : "infeasible") << "\n";
    if (!out_path.empty()) {
        auto out = open_output(out_path);
        if (feasible) {
            out << "variable,value\n";
            for (std::size_t c = 0; c < t.variables().size(); ++c)
                out << t.variables()[c].name() << ',' << v.witness[c].get_str() << "\n";
        } else {
            out << "constraint,multiplier\n";
            for (std::size_t i = 0; i < t.rows().size(); ++i)
                out << '"' << t.rows()[i].label << "\"," << v.certificate[i].get_str() << "\n";
        }
        write_manifest(out_path, "lp",
                       {{"n", n}, {"k", k}, {"d", d}, {"r", r}, {"verdict", feasible ? "feasible" : "infeasible"}},
                       std::nullopt, {});
    }
    return 0;
}

// ----------------------------------------------------------------- ensemble

int cmd_ensemble(int n, int k, int r, int samples, std::uint64_t seed, const std::string& out_path) {
    qds::EnsembleParams p(n, k, r);
    qds::AvgEnumerator exact = qds::avg_enumerators(p);
    std::optional<qds::AvgEnumerator> emp;
    if (samples > 0) emp = qds::sample_ensemble(p, samples, seed);
    std::ostringstream csv;
    csv << "side,i,j,closed_form" << (emp ? ",sampled" : "") << "\n";
    for (int dual = 0; dual < 2; ++dual)
        for (int i = 0; i <= p.n; ++i)
            for (int j = 0; j <= p.mr(); ++j) {
                const qds::QGrid& g = dual ? exact.Bperp : exact.B;
                csv << (dual ? "dual" : "code") << ',' << i << ',' << j << ','
                    << g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_str();
                if (emp) {
                    const qds::QGrid& s = dual ? emp->Bperp : emp->B;
                    csv << ',' << s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_d();
                }
                csv << "\n";
            }
    std::cout << csv.str();
    if (!out_path.empty()) {
        auto out = open_output(out_path);
        out << csv.str();
        write_manifest(out_path, "ensemble", {{"n", n}, {"k", k}, {"r", r}, {"samples", samples}},
                       samples > 0 ? std::optional<std::uint64_t>(seed) : std::nullopt, {});
    }
    return 0;
}

// ----------------------------------------------------------------- simulate

std::vector<double> parse_grid(const std::string& s) {
    double a, b, step;
    char c1, c2;
    std::istringstream in(s);
    if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0.0)
        throw std::invalid_argument("simulate: --pm-grid must be a:b:step");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        double v = a + i * step;
        if (v > b + 1e-12) break;
        grid.push_back(v);
    }
    return grid;
}

qds::SMCode load_sm(const std::string& which) {
    if (which == "rep5") return qds::SMCode::repetition(3, 5);
    if (which == "builtin-15-3") return qds::builtin_sm_15_3();
    // file: one line per generator row of the redundancy block A (r bits each)
    std::ifstream in(which);
    if (!in) throw std::runtime_error("cannot open SM matrix file: " + which);
    std::vector<std::uint64_t> rows;
    int r = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        qds::BitVec b = qds::parse_bit_vector(line);
        if (r < 0) r = b.len;
        if (b.len != r) throw std::invalid_argument("SM matrix rows must have equal length");
        rows.push_back(b.bits);
    }
    if (rows.empty()) throw std::invalid_argument("SM matrix file has no rows");
    return qds::SMCode(static_cast<int>(rows.size()), r, rows);
}

int cmd_simulate(const std::string& sm, const std::string& weights, const std::string& pm_grid,
                 long mc_trials, std::uint64_t seed, const std::string& out_path) {
    qds::SMCode A = load_sm(sm);
    const int len = A.m() + A.r();
    std::vector<int> w;
    {
        std::istringstream in(weights);
        std::string tok;
        while (std::getline(in, tok, ',')) w.push_back(std::stoi(tok));
    }
    if (static_cast<int>(w.size()) == 1) w.assign(static_cast<std::size_t>(len), w[0]);
    if (static_cast<int>(w.size()) != len)
        throw std::invalid_argument("simulate: --weights needs 1 or m+r entries");
    std::ostringstream csv;
    csv << "p_m,P_se,P_sber" << (mc_trials > 0 ? ",ci95_radius" : "") << "\n";
    for (double pm : parse_grid(pm_grid)) {
        std::vector<double> probs;
        for (int b = 0; b < len; ++b) probs.push_back(qds::p_err(w[static_cast<std::size_t>(b)], pm));
        if (mc_trials > 0) {
            qds::McResult res = qds::mc_Pse(A, probs, mc_trials, seed);
            csv << pm << ',' << res.P_se << ',' << res.P_sber << ',' << res.radius << "\n";
        } else {
            qds::PseResult res = qds::exact_Pse(A, probs);
            csv << pm << ',' << res.P_se << ',' << res.P_sber << "\n";
        }
    }
    std::cout << csv.str();
    if (!out_path.empty()) {
        auto out = open_output(out_path);
        out << csv.str();
        std::vector<std::string> inputs;
        if (sm != "rep5" && sm != "builtin-15-3") inputs.push_back(sm);
        write_manifest(out_path, "simulate",
                       {{"sm", sm}, {"weights", weights}, {"pm_grid", pm_grid}, {"mc", mc_trials}},
                       mc_trials > 0 ? std::optional<std::uint64_t>(seed) : std::nullopt, inputs);
    }
    return 0;
}

// --------------------------------------------------------------- asymptotic

int cmd_asymptotic(const std::string& curve, int grid, double rho, const std::string& out_path) {
    std::ostringstream csv;
    bool rate_curve = curve == "hamming-nondeg" || curve == "hamming-deg" || curve == "lp1" ||
                      curve == "singleton";
    csv << (rate_curve ? "delta,R" : (curve == "gv" || curve == "gv-ds" ? "R,delta" : "R,rho_star"))
        << "\n";
    for (int g = 0; g <= grid; ++g) {
        double x = rate_curve ? 0.35 * g / grid : 0.98 * g / grid;
        double v;
        try {
            if (curve == "hamming-nondeg") v = qds::hamming_nondeg_rate(x);
            else if (curve == "hamming-deg") v = qds::hamming_deg_rate(x);
            else if (curve == "lp1") v = qds::lp1_rate(x);
            else if (curve == "singleton") v = 1.0 - 2.0 * x;
            else if (curve == "gv") v = qds::gv_stabilizer(x);
            else if (curve == "gv-ds") v = qds::gv_ds(x, rho);
            else if (curve == "rho-star") v = qds::rho_star(x);
            else throw CLI::ValidationError("asymptotic", "unknown --curve " + curve);
        } catch (const std::domain_error&) {
            continue;  // outside this curve's domain
        }
        csv << x << ',' << v << "\n";
    }
    std::cout << csv.str();
    if (!out_path.empty()) {
        auto out = open_output(out_path);
        out << csv.str();
        write_manifest(out_path, "asymptotic", {{"curve", curve}, {"grid", grid}, {"rho", rho}},
                       std::nullopt, {});
    }
    return 0;
}

// ------------------------------------------------------------------- verify

int g_verify_failures = 0;

void vcheck(bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++g_verify_failures;
}

void verify_identities() {
    using namespace qds;
    bool orth = true, prod4 = true, prod2 = true, lemma = true;
    for (int q : {2, 4})
        for (int n = 1; n <= 8; ++n) {
            KrawTable K(n, q);
            for (int rr = 0; rr <= n; ++rr)
                for (int s = 0; s <= n; ++s) {
                    mpz_class acc = 0;
                    for (int i = 0; i <= n; ++i) acc += K(rr, i) * K(i, s);
                    if (acc != (rr == s ? pow_int(q, n) : mpz_class(0))) orth = false;
                }
        }
    for (int n = 1; n <= 8; ++n) {
        KrawTable K(n, 4);
        for (int g = 0; g <= std::min(3, n); ++g)
            for (int h = 0; h <= std::min(3, n); ++h)
                for (int i = 0; i <= n; ++i) {
                    mpz_class rhs = 0;
                    for (int x = 0; x <= n; ++x) {
                        mpz_class c = 0;
                        for (int w = 0; w <= n; ++w) c += alpha(n, x, g, h, w);
                        rhs += c * K(x, i);
                    }
                    if (rhs != K(g, i) * K(h, i)) prod4 = false;
                }
    }
    for (int m = 1; m <= 8; ++m) {
        KrawTable K(m, 2);
        for (int a = 0; a <= std::min(4, m); ++a)
            for (int b = 0; b <= std::min(4, m); ++b)
                for (int j = 0; j <= m; ++j) {
                    mpz_class rhs = 0;
                    for (int u = 0; u <= m; ++u) rhs += beta(m, u, a, b) * K(u, j);
                    if (rhs != K(a, j) * K(b, j)) prod2 = false;
                }
    }
    for (int n = 1; n <= 8; ++n)
        for (int m = 0; m <= n; ++m)
            for (int u = 0; u <= n; ++u) {
                KrawTable K(n, 2);
                mpz_class acc = 0;
                for (int j = 0; j <= m; ++j) acc += binom(m, j) * K(u, j);
                if (acc != binom_kraw_sum(m, n, u)) lemma = false;
            }
    vcheck(orth, "Krawtchouk orthogonality, n <= 8, q in {2,4}");
    vcheck(prod4, "GF(4) product expansion via alpha");
    vcheck(prod2, "binary product expansion via beta");
    vcheck(lemma, "binomially weighted Krawtchouk sums");
}

void verify_oracles() {
    using namespace qds;
    std::mt19937_64 rng(7);
    bool dual_ok = true, mw_ok = true, dist_ok = true;
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        int m = 1 + static_cast<int>(rng() % std::min(3, n));
        int r = static_cast<int>(rng() % (std::min(2, m) + 1));
        DSCode code(sample_check_matrix(n, m, rng),
                    r == 0 ? SMCode::empty(m) : sample_sm_matrix(m, r, rng));
        SplitWeightEnumerator B = enumerate_code(code), Bp = enumerate_dual(code);
        if (!(Bp == brute_force_dual(code))) dual_ok = false;
        if (!(macwilliams(Bp) == B)) mw_ok = false;
        if (min_distance(code).d != min_distance_from_tables(B, Bp)) dist_ok = false;
    }
    vcheck(dual_ok, "dual enumeration equals the brute-force oracle");
    vcheck(mw_ok, "MacWilliams transform round-trips");
    vcheck(dist_ok, "table-based distance equals the direct scan");
}

void verify_paper_values(const std::string& data_dir) {
    using namespace qds;
    const int expected[10] = {3, 4, 4, 4, 5, 5, 5, 6, 6, 7};
    bool table = true;
    for (int r = 0; r < 10; ++r) {
        CodeSpec spec = load_code_spec(data_dir + "/golay_r" + std::to_string(r) + ".code");
        if (css_distance_scan(spec.to_hprime(), spec.n) != expected[r]) table = false;
    }
    vcheck(table, "circulant distance table d(r) = 3,4,4,4,5,5,5,6,6,7");
    RationalTableau t(7, 1, 3, 6);
    FeasibilityVerdict v = solve_feasibility(t);
    vcheck(v.status == LPStatus::feasible && t.satisfied_by(v.witness),
           "LP feasibility at (7,1,3,6) with exact witness");
}

void verify_asymptotics() {
    using namespace qds;
    bool gv_ok = true, rho_ok = true, res_ok = true;
    for (int s = 1; s <= 9; ++s) {
        double R = s * 0.1;
        double dgv = gv_stabilizer(R);
        if (std::fabs(entropy(dgv) + dgv * kLog2_3 - (1.0 - R)) >= 1e-9) res_ok = false;
        if (!(gv_ds(R, 0.0) < dgv)) gv_ok = false;
        if (!(rho_star(R) < 1.0 - R)) rho_ok = false;
    }
    vcheck(gv_ok, "gv_ds(R,0) below the stabilizer GV curve");
    vcheck(rho_ok, "rho*(R) strictly below 1-R");
    vcheck(res_ok, "root residuals below 1e-9");
}

int cmd_verify(const std::string& suite, const std::string& data_dir) {
    g_verify_failures = 0;
    if (suite == "identities") verify_identities();
    else if (suite == "oracles") verify_oracles();
    else if (suite == "paper-values") verify_paper_values(data_dir);
    else if (suite == "asymptotics") verify_asymptotics();
    else throw CLI::ValidationError("verify", "unknown suite '" + suite + "'");
    if (g_verify_failures) {
        std::cout << g_verify_failures << " check(s) failed\n";
        return 1;
    }
    std::cout << "all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qds: data-syndrome code workbench"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads (the tool is single-threaded; accepted for compatibility)");

    // construct
    std::string c_spec, c_out;
    auto* construct = app.add_subcommand("construct", "validate a code definition file and write its normalized form");
    construct->add_option("--spec", c_spec, "code definition file")->required();
    construct->add_option("--out", c_out, "output code definition file");

    // enumerate
    std::string e_spec, e_out;
    bool e_dual = false;
    auto* enumerate = app.add_subcommand("enumerate", "split weight enumerator of a code (CSV)");
    enumerate->add_option("--spec", e_spec, "code definition file")->required();
    enumerate->add_flag("--dual", e_dual, "enumerate the dual side");
    enumerate->add_option("--out", e_out, "output CSV (stdout if omitted)");

    // distance
    std::string d_spec;
    auto* distance = app.add_subcommand("distance", "minimum distance of a code");
    distance->add_option("--spec", d_spec, "code definition file")->required();

    // bound
    std::string b_kind, b_out;
    int b_n = 0, b_d = 1, b_tD = -1, b_tS = -1;
    auto* bound = app.add_subcommand("bound", "finite-length upper bound on k (CSV row)");
    bound->add_option("--kind", b_kind, "singleton | hamming-nondeg | hamming-unrestricted | hybrid")->required();
    bound->add_option("--n", b_n, "code length")->required();
    bound->add_option("--d", b_d, "target distance");
    bound->add_option("--tD", b_tD, "data error radius (hybrid)");
    bound->add_option("--tS", b_tS, "syndrome error radius (hybrid)");
    bound->add_option("--out", b_out, "output CSV");

    // lp
    int l_n = 0, l_k = 0, l_d = 1, l_r = 0;
    bool l_scan = false;
    std::string l_out;
    auto* lp = app.add_subcommand("lp", "LP feasibility of [[n,k,d:r]] parameters");
    lp->add_option("--n", l_n)->required();
    lp->add_option("--k", l_k)->required();
    lp->add_option("--d", l_d);
    lp->add_option("--r", l_r);
    lp->add_flag("--scan-d", l_scan, "report the largest feasible d instead");
    lp->add_option("--out", l_out, "witness / certificate CSV");

    // ensemble
    int en_n = 0, en_k = 0, en_r = 0, en_samples = 0;
    std::uint64_t en_seed = 1;
    std::string en_out;
    auto* ensemble = app.add_subcommand("ensemble", "average enumerators of the random ensemble (CSV)");
    ensemble->add_option("--n", en_n)->required();
    ensemble->add_option("--k", en_k)->required();
    ensemble->add_option("--r", en_r)->required();
    ensemble->add_option("--samples", en_samples, "also sample empirically");
    ensemble->add_option("--seed", en_seed, "sampling seed");
    ensemble->add_option("--out", en_out, "output CSV");

    // simulate
    std::string s_sm, s_weights = "4", s_grid, s_out;
    long s_mc = 0;
    std::uint64_t s_seed = 1;
    auto* simulate = app.add_subcommand("simulate", "syndrome decoding error rates (CSV)");
    simulate->add_option("--sm", s_sm, "rep5 | builtin-15-3 | FILE with binary redundancy rows")->required();
    simulate->add_option("--weights", s_weights, "stabilizer weights: one value or m+r comma-separated");
    simulate->add_option("--pm-grid", s_grid, "measurement error grid a:b:step")->required();
    simulate->add_option("--mc", s_mc, "Monte Carlo trials (exact evaluation if omitted)");
    simulate->add_option("--seed", s_seed, "Monte Carlo seed");
    simulate->add_option("--out", s_out, "output CSV");

    // asymptotic
    std::string a_curve, a_out;
    int a_grid = 100;
    double a_rho = 0.0;
    auto* asymptotic = app.add_subcommand("asymptotic", "asymptotic rate / distance curves (CSV)");
    asymptotic->add_option("--curve", a_curve,
                           "hamming-nondeg | hamming-deg | lp1 | singleton | gv | gv-ds | rho-star")->required();
    asymptotic->add_option("--grid", a_grid, "number of grid intervals");
    asymptotic->add_option("--rho", a_rho, "syndrome redundancy rate (gv-ds)");
    asymptotic->add_option("--out", a_out, "output CSV");

    // verify
    std::string v_suite, v_data = "data";
    auto* verify = app.add_subcommand("verify", "run a self-check suite");
    verify->add_option("suite", v_suite, "identities | oracles | paper-values | asymptotics")->required();
    verify->add_option("--data", v_data, "directory with checked-in code definition files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (*construct) return cmd_construct(c_spec, c_out);
        if (*enumerate) return cmd_enumerate(e_spec, e_dual, e_out);
        if (*distance) return cmd_distance(d_spec);
        if (*bound) return cmd_bound(b_kind, b_n, b_d, b_tD, b_tS, b_out);
        if (*lp) return cmd_lp(l_n, l_k, l_d, l_r, l_scan, l_out);
        if (*ensemble) return cmd_ensemble(en_n, en_k, en_r, en_samples, en_seed, en_out);
        if (*simulate) return cmd_simulate(s_sm, s_weights, s_grid, s_mc, s_seed, s_out);
        if (*asymptotic) return cmd_asymptotic(a_curve, a_grid, a_rho, a_out);
        if (*verify) return cmd_verify(v_suite, v_data);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
