// hec: hyperelliptic curve census and parity obstruction toolkit for
// finite fields of characteristic 2.
//
// Exit codes: 0 success, 1 verification failure, 2 precondition
// violation (e.g. gcd(g+1, 2^n - 1) != 1), 3 malformed input, 4 I/O
// failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hec/census.hpp"
#include "hec/io.hpp"
#include "hec/obstruct.hpp"
#include "hec/oracle.hpp"
#include "hec/stats.hpp"
#include "hec/zeta.hpp"

namespace {

using namespace hec;

int default_jobs() {
    if (const char* env = std::getenv("HEC_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

const Field& resolve_field(int n, std::uint32_t field_poly) {
    if (field_poly != 0) return Field::intern(n, field_poly);
    return Field::get(n);
}

std::string partition_str(const Partition& d) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << ',';
        os << d[i];
    }
    os << '}';
    return os.str();
}

struct EnumerateArgs {
    int genus = 3;
    int n = 1;
    int with_counts = 0;
    int jobs = default_jobs();
    std::string out;
    std::string format = "jsonl";
    std::uint32_t field_poly = 0;
};

int run_enumerate(const EnumerateArgs& args) {
    const Field& F = resolve_field(args.n, args.field_poly);
    const Format fmt = format_parse(args.format);
    auto records = enumerate_genus(args.genus, F, args.jobs);
    if (F.conway()) {
        const int K = args.with_counts > 0 ? args.with_counts : args.genus;
        annotate_records(records, K, args.jobs);
    } else {
        if (args.with_counts > 1)
            throw std::domain_error("--with-counts needs the Conway modulus "
                                    "(embeddings are disabled for overrides)");
        std::cerr << "custom modulus: skipping zeta annotation\n";
    }
    if (args.out.empty()) {
        write_census(std::cout, records, fmt);
    } else {
        std::ofstream os(args.out);
        if (!os) throw std::ios_base::failure("cannot open " + args.out);
        write_census(os, records, fmt);
        if (!os) throw std::ios_base::failure("write failed: " + args.out);
    }
    std::cerr << records.size() << " isomorphism classes (genus " << args.genus
              << ", q = " << F.q() << ")\n";
    return 0;
}

void print_report_text(const ObstructionReport& rep) {
    std::cout << pattern_str(rep.pattern) << ' '
              << (rep.obstructed ? "obstructed" : "admissible");
    if (rep.witness) std::cout << " witness " << partition_str(*rep.witness);
    for (const auto& c : rep.certificates)
        std::cout << " certificate k=" << c.k << " mod=" << c.modulus
                  << " value=" << c.value;
    std::cout << '\n';
}

void print_report_jsonl(const ObstructionReport& rep) {
    std::cout << "{\"pattern\":\"" << pattern_str(rep.pattern) << "\",\"obstructed\":"
              << (rep.obstructed ? "true" : "false");
    if (rep.witness) {
        std::cout << ",\"witness\":[";
        for (std::size_t i = 0; i < rep.witness->size(); ++i)
            std::cout << (i ? "," : "") << (*rep.witness)[i];
        std::cout << ']';
    }
    if (!rep.certificates.empty()) {
        std::cout << ",\"certificates\":[";
        for (std::size_t i = 0; i < rep.certificates.size(); ++i) {
            const auto& c = rep.certificates[i];
            std::cout << (i ? "," : "") << "{\"k\":" << c.k << ",\"mod\":" << c.modulus
                      << ",\"value\":" << c.value << '}';
        }
        std::cout << ']';
    }
    std::cout << "}\n";
}

int run_obstructions(int genus, int max_ext, bool higher_power, bool all,
                     const std::string& format, int jobs) {
    const int K = max_ext > 0 ? max_ext : 2 * genus;
    bool jsonl = false;
    if (format == "jsonl")
        jsonl = true;
    else if (format != "text")
        throw std::invalid_argument("unknown format: " + format);
    const auto print = [&](const ObstructionReport& rep) {
        if (jsonl)
            print_report_jsonl(rep);
        else
            print_report_text(rep);
    };
    std::vector<ResiduePattern> patterns;
    if (all) {
        for (std::uint32_t bits = 0; bits < (1u << genus); ++bits)
            patterns.push_back({genus, bits});
        std::sort(patterns.begin(), patterns.end(), pattern_less);
    } else {
        patterns = generate_obstructions(genus, K, higher_power, jobs);
    }
    for (const auto& p : patterns) print(pattern_is_obstruction(p, K, higher_power));
    return 0;
}

int run_count(int genus, int n, const std::string& v_str, const std::string& u_str,
              int ext, std::uint32_t field_poly) {
    const Field& F = resolve_field(n, field_poly);
    const Poly v = poly_parse(F, v_str);
    const Poly u = poly_parse(F, u_str);
    if (!v.is_monic()) throw std::domain_error("v must be monic");
    std::cout << "N=[";
    for (int k = 1; k <= ext; ++k) {
        if (k > 1) std::cout << ',';
        std::cout << count_points(v, u, genus, k);
    }
    std::cout << "]\n";
    if (!is_hyperelliptic(v, u, genus))
        std::cerr << "note: (v, u) does not define a smooth genus-" << genus
                  << " hyperelliptic curve\n";
    return 0;
}

int run_weil(int genus, std::int64_t q, const std::string& coeffs) {
    std::vector<std::int64_t> a;
    std::istringstream is(coeffs);
    std::string tok;
    while (std::getline(is, tok, ',')) a.push_back(std::stoll(tok));
    if (static_cast<int>(a.size()) != genus)
        throw std::invalid_argument("expected " + std::to_string(genus) + " coefficients");
    const WeilPoly w{genus, q, a};
    const bool valid = is_weil_poly(w);
    const auto pattern = pattern_of(w);
    std::cout << "valid=" << (valid ? "true" : "false") << '\n';
    std::cout << "two_rank=" << two_rank(w) << '\n';
    std::cout << "pattern=" << pattern_str(pattern) << '\n';
    const auto rep = pattern_is_obstruction(pattern, 2 * genus);
    std::cout << "obstructed=" << (rep.obstructed ? "true" : "false");
    if (rep.witness) std::cout << " witness=" << partition_str(*rep.witness);
    std::cout << '\n';
    return 0;
}

int run_stats_w3(int n, bool tau, int jobs, const std::string& out) {
    const auto table = w3_class_counts(std::int64_t(1) << n, jobs);
    std::ostringstream body;
    body << table_csv_header() << '\n' << table_csv_row(table) << '\n';
    if (out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream os(out);
        if (!os) throw std::ios_base::failure("cannot open " + out);
        os << body.str();
        if (!os) throw std::ios_base::failure("write failed: " + out);
    }
    if (tau) {
        const auto t = tau3(table);
        std::cout << "tau3_over_ordinary=" << t.over_ordinary().convert_to<double>()
                  << '\n'
                  << "tau3_over_all=" << t.over_all().convert_to<double>() << '\n';
    }
    return 0;
}

int run_verify(const std::string& in, int max_ext, int jobs) {
    std::ifstream is(in);
    if (!is) throw std::ios_base::failure("cannot open " + in);
    const auto records = read_census(is);
    if (records.empty()) {
        std::cerr << "verify: no records in " << in << '\n';
        return 3;
    }
    const int g = records.front().g;
    const int K = max_ext > 0 ? max_ext : 2 * g;
    const auto obstructions = generate_obstructions(g, 2 * g);
    int failures = 0;
    auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS  " : "FAIL  ") << name;
        if (!detail.empty()) std::cout << "  (" << detail << ')';
        std::cout << '\n';
        if (!ok) ++failures;
    };

    bool parity_ok = true, congruence_ok = true, rank_ok = true, weil_ok = true,
         roundtrip_ok = true;
    std::uint64_t obstructed_hits = 0, conjecture_hits = 0;
    std::vector<CurveRecord> work(records);
    annotate_records(work, std::max(K, g), jobs);
    for (const auto& c : work) {
        for (int k = 1; k <= K; ++k) {
            const auto nk = count_points(c, k);
            const auto wk = count_weierstrass(c, k);
            if ((nk - wk) % 2 != 0) parity_ok = false;
            if (k % 2 == 0) {
                int a = 0, kk = k;
                while (kk % 2 == 0) {
                    kk /= 2;
                    ++a;
                }
                const int mod = 1 << (a + 1);
                if (((nk - (2 - wk)) % mod + mod) % mod != 0) congruence_ok = false;
            }
        }
        if (c.two_rank + 1 != geometric_weierstrass(c.v, c.g)) rank_ok = false;
        const WeilPoly w{c.g, c.field->q(), c.weil};
        if (!is_weil_poly(w)) weil_ok = false;
        const auto pattern = pattern_of(w);
        for (const auto& ob : obstructions)
            if (ob == pattern) ++obstructed_hits;
        if (g == 3 && pattern_str(pattern) == "110") ++conjecture_hits;
        if (g == 4 && pattern_str(pattern) == "1100") ++conjecture_hits;
        const auto back = record_from_jsonl(record_jsonl(c));
        if (!(back.v == c.v) || !(back.u == c.u)) roundtrip_ok = false;
    }
    report("N_k = W_k (mod 2), k <= " + std::to_string(K), parity_ok);
    report("N_k = 2 - W_k (mod 2^(v2(k)+1)), even k <= " + std::to_string(K),
           congruence_ok);
    report("two_rank + 1 = geometric #W", rank_ok);
    report("Weil validity of every record", weil_ok);
    report("no obstructed residue pattern in the census", obstructed_hits == 0,
           std::to_string(obstructed_hits) + " hits");
    report("no conjectured pattern (110/1100) in the census", conjecture_hits == 0,
           std::to_string(conjecture_hits) + " hits");
    report("JSONL roundtrip", roundtrip_ok);
    std::cout << (failures == 0 ? "verify: all checks passed (" : "verify: FAILURES (")
              << work.size() << " records)\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperelliptic curve census over GF(2^n): enumeration, zeta data, "
                 "parity obstructions"};
    app.require_subcommand(1);

    EnumerateArgs en;
    auto* cmd_en = app.add_subcommand("enumerate",
                                      "enumerate isomorphism classes of genus-g curves");
    cmd_en->add_option("--genus", en.genus, "curve genus")->required();
    cmd_en->add_option("--n", en.n, "extension degree of the base field")->required();
    cmd_en->add_option("--with-counts", en.with_counts,
                       "store point counts N_1..N_K (default K = genus)");
    cmd_en->add_option("--jobs", en.jobs, "worker threads");
    cmd_en->add_option("--out", en.out, "output path (default stdout)");
    cmd_en->add_option("--format", en.format, "jsonl or csv");
    cmd_en->add_option("--field-poly", en.field_poly,
                       "override modulus bits (disables extension counts)");

    int ob_genus = 3, ob_max_ext = 0, ob_jobs = default_jobs();
    bool ob_higher = false, ob_all = false;
    std::string ob_format = "text";
    auto* cmd_ob = app.add_subcommand("obstructions",
                                      "generate parity obstruction patterns");
    cmd_ob->add_option("--genus", ob_genus, "genus")->required();
    cmd_ob->add_option("--max-ext", ob_max_ext, "extension cutoff K (default 2g)");
    cmd_ob->add_flag("--higher-power", ob_higher, "add mod 2^(a+1) certificates");
    cmd_ob->add_flag("--all", ob_all, "print every pattern with its verdict");
    cmd_ob->add_option("--format", ob_format, "text or jsonl");
    cmd_ob->add_option("--jobs", ob_jobs, "worker threads");

    int ct_genus = 3, ct_n = 1, ct_ext = 1;
    std::string ct_v, ct_u;
    std::uint32_t ct_poly = 0;
    auto* cmd_ct = app.add_subcommand("count", "point counts of one curve model");
    cmd_ct->add_option("--genus", ct_genus)->required();
    cmd_ct->add_option("--n", ct_n)->required();
    cmd_ct->add_option("--v", ct_v, "v coefficients, degree 0 first")->required();
    cmd_ct->add_option("--u", ct_u, "u coefficients, degree 0 first")->required();
    cmd_ct->add_option("--ext", ct_ext, "count over F_{q^k} for k = 1..ext");
    cmd_ct->add_option("--field-poly", ct_poly, "override modulus bits");

    int wl_genus = 3;
    std::int64_t wl_q = 2;
    std::string wl_coeffs;
    auto* cmd_wl = app.add_subcommand("weil", "validity and obstruction data of a "
                                              "Weil coefficient vector");
    cmd_wl->add_option("--q", wl_q)->required();
    cmd_wl->add_option("--genus", wl_genus)->required();
    cmd_wl->add_option("--coeffs", wl_coeffs, "a_1,...,a_g")->required();

    auto* cmd_st = app.add_subcommand("stats", "distributional data");
    int st_n = 8, st_jobs = default_jobs();
    bool st_tau = false;
    std::string st_out;
    auto* cmd_w3 = cmd_st->add_subcommand("w3", "genus-3 coefficient class counts");
    cmd_w3->add_option("--n", st_n, "q = 2^n")->required();
    cmd_w3->add_flag("--tau", st_tau, "print tau3 ratios");
    cmd_w3->add_option("--jobs", st_jobs, "worker threads");
    cmd_w3->add_option("--out", st_out, "CSV output path (default stdout)");
    cmd_st->require_subcommand(1);

    std::string vf_in;
    int vf_max_ext = 0, vf_jobs = default_jobs();
    auto* cmd_vf = app.add_subcommand("verify", "run the invariant suite on a census file");
    cmd_vf->add_option("--in", vf_in)->required();
    cmd_vf->add_option("--max-ext", vf_max_ext, "extension cutoff (default 2g)");
    cmd_vf->add_option("--jobs", vf_jobs, "worker threads");

    try {
        app.parse(argc, argv);
        if (*cmd_en) return run_enumerate(en);
        if (*cmd_ob)
            return run_obstructions(ob_genus, ob_max_ext, ob_higher, ob_all, ob_format,
                                    ob_jobs);
        if (*cmd_ct) return run_count(ct_genus, ct_n, ct_v, ct_u, ct_ext, ct_poly);
        if (*cmd_wl) return run_weil(wl_genus, wl_q, wl_coeffs);
        if (*cmd_st) return run_stats_w3(st_n, st_tau, st_jobs, st_out);
        if (*cmd_vf) return run_verify(vf_in, vf_max_ext, vf_jobs);
        return 3;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "malformed input: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
