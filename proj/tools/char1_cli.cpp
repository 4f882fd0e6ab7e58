#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "char1/additive.hpp"
#include "char1/elliptic.hpp"
#include "char1/errors.hpp"
#include "char1/io.hpp"
#include "char1/numtheory.hpp"
#include "char1/semiring.hpp"
#include "char1/witt.hpp"
#include "char1/zeta.hpp"
#include "json.hpp"

#ifndef CHAR1_VERSION
#define CHAR1_VERSION "0.0.0"
#endif

using namespace char1;
using nlohmann::json;

namespace {

struct Options {
    int p = 5;
    int N = 3;
    std::int64_t n = 10;
    std::int64_t ell_N = 1000, ent_n = 101, man_n = 100;
    std::string curve, scheme, s_grid = "1.5:4:11", window = "-2:2,-2:2", out, mode = "integral";
    std::string search = "brute", coeffs = "points";
    std::string plain;  // command line as typed, for the header
    double tolerance = 1e-8;
    bool no_header = false;
    bool check_dirichlet = false;
};

std::string timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string csv_header(const Options& o, const std::string& command) {
    if (o.no_header) return {};
    return "# char1 " CHAR1_VERSION " " + command + " " + o.plain + " " + timestamp() + "\n";
}

void add_meta(json& j, const Options& o, const std::string& command) {
    if (o.no_header) return;
    j["meta"] = {{"version", CHAR1_VERSION}, {"command", command}, {"options", o.plain}, {"timestamp", timestamp()}};
}

// --out names a file; empty means stdout.
void emit(const Options& o, const std::string& contents) {
    if (o.out.empty()) std::cout << contents;
    else io::write_file(o.out, contents);
}

// Multi-output commands treat --out as a directory.
std::string out_path(const Options& o, const std::string& name) {
    std::filesystem::create_directories(o.out);
    return (std::filesystem::path(o.out) / name).string();
}

std::string rational(const mpq_class& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

std::string num(double v) {
    std::ostringstream ss;
    ss << std::setprecision(17) << (v == 0 ? 0.0 : v);
    return ss.str();
}

ZetaMode parse_mode(const std::string& m) {
    if (m == "integral") return ZetaMode::Integral;
    if (m == "discrete") return ZetaMode::Discrete;
    throw ValidationError("--mode must be integral or discrete");
}

// "a:b:k" -> k evenly spaced values (k = 1 gives a).
std::vector<double> parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string t; std::getline(ss, t, ':');) parts.push_back(t);
    try {
        if (parts.size() == 1) return {std::stod(parts[0])};
        if (parts.size() != 3) throw ValidationError("range must be a:b:count");
        const double a = std::stod(parts[0]), b = std::stod(parts[1]);
        const int k = std::stoi(parts[2]);
        if (k < 1) throw ValidationError("range count must be >= 1");
        std::vector<double> v;
        for (int i = 0; i < k; ++i) v.push_back(k == 1 ? a : a + (b - a) * i / (k - 1));
        return v;
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const ValidationError*>(&e)) throw;
        throw ValidationError("malformed range \"" + text + "\"");
    }
}

std::pair<std::vector<double>, std::vector<double>> parse_grid(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_range(text), {0.0}};
    return {parse_range(text.substr(0, comma)), parse_range(text.substr(comma + 1))};
}

// "re_min:re_max,im_min:im_max"
Window parse_window(const std::string& text) {
    double v[4];
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream ss(text);
    if (!(ss >> v[0] >> c1 >> v[1] >> c2 >> v[2] >> c3 >> v[3]) || c1 != ':' || c2 != ',' || c3 != ':' || !ss.eof())
        throw ValidationError("window must be re_min:re_max,im_min:im_max");
    return {v[0], v[1], v[2], v[3]};
}

int run_witt_table(const Options& o) {
    std::ostringstream ss;
    ss << csv_header(o, "witt-table");
    write_witt_table_csv(witt_coeffs(o.p, o.N), ss);
    emit(o, ss.str());
    return 0;
}

int run_zeta_f1(const Options& o) {
    if (o.scheme.empty()) throw ValidationError("zeta-f1 needs --scheme");
    const SchemeData x = io::read_scheme_json(o.scheme);
    const ZetaMode mode = parse_mode(o.mode);
    json ex;
    ex["alpha"] = json::array();
    for (auto& a : alpha_exponents(x)) ex["alpha"].push_back(rational(a));
    ex["epsilon"] = json::array();
    for (auto& p : x.points) ex["epsilon"].push_back(rational(epsilon_H(p)));
    add_meta(ex, o, "zeta-f1");

    const auto ev = LogDerivEvaluator::from_scheme(x);
    auto [re, im] = parse_grid(o.s_grid);
    std::ostringstream ld;
    ld << csv_header(o, "zeta-f1") << "re_s,im_s,re_val,im_val\n";
    for (double a : re)
        for (double b : im) {
            const auto v = zeta_logderiv(ev, cplx(a, b), mode);
            if (v.error_bound > o.tolerance)
                throw AccuracyError("log-derivative at " + num(a) + "+" + num(b) + "i has error bound " + num(v.error_bound));
            ld << num(a) << "," << num(b) << "," << num(v.value.real()) << "," << num(v.value.imag()) << "\n";
        }
    std::ostringstream cnt;
    cnt << csv_header(o, "zeta-f1") << "z,re_N,im_N\n";
    for (std::int64_t i = 0; i <= 4 * o.n; ++i) {
        const double z = 1.0 + i / 4.0;
        const cplx v = canonical_extension_eval(x, z);
        cnt << num(z) << "," << num(v.real()) << "," << num(v.imag()) << "\n";
    }
    if (o.out.empty()) {
        std::cout << ex.dump(2) << "\n";
        return 0;
    }
    io::write_file(out_path(o, "exponents.json"), ex.dump(2) + "\n");
    io::write_file(out_path(o, "logderiv.csv"), ld.str());
    io::write_file(out_path(o, "counting.csv"), cnt.str());
    std::cout << "wrote exponents.json, logderiv.csv, counting.csv to " << o.out << "\n";
    return 0;
}

int run_count_points(const Options& o) {
    if (o.n < 1) throw ValidationError("--n must be >= 1");
    std::ostringstream ss;
    ss << csv_header(o, "count-points");
    if (!o.curve.empty()) {
        const auto e = io::read_curve_json(o.curve);
        ss << "p,N_p\n";
        for (std::int64_t p = 2; p <= o.n; ++p)
            if (nt::is_prime(p)) ss << p << "," << count_points_modp(e, p) << "\n";
    } else if (!o.scheme.empty()) {
        const auto x = io::read_scheme_json(o.scheme);
        ss << "n,count\n";
        for (std::int64_t k = 1; k <= o.n; ++k) ss << k << "," << count_points_f1n(x, k).get_str() << "\n";
    } else {
        throw ValidationError("count-points needs --scheme or --curve");
    }
    emit(o, ss.str());
    return 0;
}

int run_elliptic(const Options& o) {
    if (o.curve.empty()) throw ValidationError("elliptic needs --curve");
    const auto e = io::read_curve_json(o.curve);
    const std::int64_t N = o.ell_N;
    if (N < 1) throw ValidationError("--N must be >= 1");
    DirichletCoeffs a;
    if (o.coeffs == "eta") {
        if (e.coefficients() != std::vector<mpz_class>{0, -1, 1, -10, -20})
            throw ValidationError("--coeffs eta is only valid for y^2 + y = x^3 - x^2 - 10x - 20");
        a = eta_coeffs(N);
    } else if (o.coeffs == "points") {
        a = l_coeffs_from_curve(e, N);
    } else {
        throw ValidationError("--coeffs must be eta or points");
    }
    const auto bad = bad_reduction_types(e);
    std::cout << "discriminant " << e.discriminant().get_str() << "\n";
    for (auto& [p, type] : bad) {
        std::cout << "p=" << p << ": " << to_string(type) << "\n";
        if (p <= 1000000) {
            auto r = reduction_report(e, p);
            if (!r.warning.empty()) std::cerr << "warning: " << r.warning << "\n";
        }
    }
    int status = 0;
    if (o.check_dirichlet) {
        const auto rep = dirichlet_identity_check(a, bad, N);
        std::cout << rep.message << "\n";
        if (!rep.holds) status = 1;
    }
    if (!o.out.empty()) {
        const auto t = t_coeffs(a, bad, N);
        const auto counts = counting_function(t);
        std::ostringstream cs;
        cs << csv_header(o, "elliptic") << "n,N\n";
        for (std::int64_t k = 1; k <= N; ++k) cs << k << "," << counts[static_cast<std::size_t>(k)] << "\n";
        io::write_file(out_path(o, "counting.csv"), cs.str());
        const Window w = parse_window(o.window);
        json sj;
        sj["singularities"] = json::array();
        for (auto& s : singularity_catalog(e, w))
            sj["singularities"].push_back({{"re", s.location.real()},
                                           {"im", s.is_line ? json(nullptr) : json(s.location.imag())},
                                           {"source", s.source},
                                           {"order", s.order},
                                           {"line", s.is_line},
                                           {"conditional", s.conditional}});
        add_meta(sj, o, "elliptic");
        io::write_file(out_path(o, "singularities.json"), sj.dump(2) + "\n");
        std::cout << "wrote counting.csv, singularities.json to " << o.out << "\n";
    }
    return status;
}

int run_additive_search(const Options& o) {
    if (o.n < 1 || o.n > 1000000) throw ValidationError("--n must be in [1, 10^6]");
    SearchMode mode;
    if (o.search == "brute") mode = SearchMode::Brute;
    else if (o.search == "constructive") mode = SearchMode::Constructive;
    else throw ValidationError("--search must be brute or constructive");
    const auto found = search_A(static_cast<int>(o.n), mode);
    std::cout << "n=" << o.n << ": " << found.size() << " structures\n";
    std::ostringstream ss;
    ss << csv_header(o, "additive-search") << "structure,kind,s\n";
    for (std::size_t i = 0; i < found.size(); ++i) {
        ss << i << "," << (found[i].is_bijective() ? "field" : "semifield") << ",";
        for (std::size_t k = 0; k < found[i].s.size(); ++k) ss << (k ? " " : "") << found[i].s[k];
        ss << "\n";
    }
    if (o.out.empty()) std::cout << ss.str();
    else io::write_file(o.out, ss.str());
    return 0;
}

int run_entropy_demo(const Options& o) {
    const std::int64_t n = o.ent_n;
    if (n < 2) throw ValidationError("--n must be >= 2");
    std::ostringstream ss;
    ss << csv_header(o, "entropy-demo") << "s,S,c,free_energy_check\n";
    for (std::int64_t i = 0; i < n; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(n - 1);
        // sup_s c(s) x^s y^(1-s) = x + y; report it at (x, y) = (s, 1 - s) when both positive
        std::string check;
        if (s > 0 && s < 1) check = num(free_energy_sup(s, 1 - s).value);
        ss << num(s) << "," << num(entropy_S(s)) << "," << num(entropy_c(s)) << "," << check << "\n";
    }
    emit(o, ss.str());
    return 0;
}

int run_mangoldt(const Options& o) {
    if (o.man_n < 1) throw ValidationError("--n must be >= 1");
    std::ostringstream ss;
    ss << csv_header(o, "mangoldt") << "n,N_exact,N_value\n";
    for (auto& m : mangoldt_profile(o.man_n)) {
        ss << m.n << ",";
        if (m.p == 0) ss << "0";
        else ss << m.factor << "*log(" << m.p << ")";
        ss << "," << num(m.value()) << "\n";
    }
    emit(o, ss.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characteristic-one and F_1 computations"};
    app.set_version_flag("--version", CHAR1_VERSION);
    app.require_subcommand(1);
    Options o;
    for (int i = 2; i < argc; ++i) o.plain += (i > 2 ? " " : "") + std::string(argv[i]);

    auto common = [&](CLI::App* c) {
        c->add_option("--out", o.out, "Output file (or directory for multi-file commands)");
        c->add_flag("--no-header", o.no_header, "Omit the version/options/timestamp header");
    };
    auto* witt = app.add_subcommand("witt-table", "Coefficients w_p(alpha) modulo T^(N+1)");
    witt->add_option("--p", o.p, "Prime (2, 3, 5 or 7)");
    witt->add_option("--N", o.N, "Truncation level (1..3)");
    common(witt);

    auto* zeta = app.add_subcommand("zeta-f1", "Exponents, log-derivative samples and counting function of an F_1-scheme");
    zeta->add_option("--scheme", o.scheme, "SchemeData JSON file")->check(CLI::ExistingFile);
    zeta->add_option("--mode", o.mode, "integral or discrete");
    zeta->add_option("--s-grid", o.s_grid, "re_min:re_max:count[,im_min:im_max:count]");
    zeta->add_option("--n", o.n, "Counting function sampled on z in [1, n+1], step 1/4");
    zeta->add_option("--tolerance", o.tolerance, "Maximum accepted error bound");
    common(zeta);

    auto* count = app.add_subcommand("count-points", "Point counts of an F_1-scheme or of a curve mod p");
    count->add_option("--scheme", o.scheme, "SchemeData JSON file")->check(CLI::ExistingFile);
    count->add_option("--curve", o.curve, "Curve JSON file")->check(CLI::ExistingFile);
    count->add_option("--n", o.n, "Largest n (or largest prime p with --curve)");
    common(count);

    auto* ell = app.add_subcommand("elliptic", "Reduction types, t(n), Dirichlet identity and singularities of a curve");
    ell->add_option("--curve", o.curve, "Curve JSON file")->check(CLI::ExistingFile);
    ell->add_option("--N", o.ell_N, "Number of coefficients");
    ell->add_option("--coeffs", o.coeffs, "points (count mod p) or eta (11a only)");
    ell->add_option("--s-grid", o.window, "Singularity window re_min:re_max,im_min:im_max");
    ell->add_flag("--check-dirichlet", o.check_dirichlet, "Verify the Dirichlet-series identity through N");
    common(ell);

    auto* add = app.add_subcommand("additive-search", "Symmetries s of F_1[mu_n] giving an additive structure");
    add->add_option("--n", o.n, "Order of the cyclic group");
    add->add_option("--mode", o.search, "brute or constructive");
    common(add);

    auto* ent = app.add_subcommand("entropy-demo", "Entropy S(s), c(s) and the free-energy sup on a grid");
    ent->add_option("--n", o.ent_n, "Grid points on [0, 1]");
    common(ent);

    auto* man = app.add_subcommand("mangoldt", "N(n) = n Lambda(n)");
    man->add_option("--n", o.man_n, "Largest n");
    common(man);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    try {
        if (*witt) return run_witt_table(o);
        if (*zeta) return run_zeta_f1(o);
        if (*count) return run_count_points(o);
        if (*ell) return run_elliptic(o);
        if (*add) return run_additive_search(o);
        if (*ent) return run_entropy_demo(o);
        if (*man) return run_mangoldt(o);
    } catch (const AccuracyError& e) {
        std::cerr << "accuracy error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
