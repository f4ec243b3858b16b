// Command line front end: invariant reports, the Delta-family tables,
// generating series, the verification suite, and the enumeration cache.

#include "lp2dt/json_io.hpp"
#include "lp2dt/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace lp2dt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;

struct CacheConfig {
    std::string dir_flag;
    bool disabled = false;

    fs::path dir() const {
        if (!dir_flag.empty()) return dir_flag;
        if (const char* env = std::getenv("LP2DT_CACHE_DIR")) return env;
        return ".lp2dt-cache";
    }
};

std::vector<TableRow> load_table(int b, const CacheConfig& cache, int a_floor) {
    fs::path file = cache.dir() / ("table_b" + std::to_string(b) + ".json");
    if (!cache.disabled && fs::exists(file)) {
        std::ifstream in(file);
        ordered_json j;
        in >> j;
        std::vector<TableRow> rows;
        if (table_from_json(j, b, rows)) return rows;
    }
    EnumerateOptions opts;
    opts.a_floor_override = a_floor;
    auto rows = enumerate_delta_families(b, opts);
    if (!cache.disabled) {
        fs::create_directories(cache.dir());
        std::ofstream out(file);
        out << table_to_json(b, rows).dump(1) << "\n";
    }
    return rows;
}

std::string csv_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string partitions_csv(const DeltaFamilyData& data) {
    std::string out;
    for (int i = 0; i < 6; ++i) {
        if (i) out += " ";
        out += data.pis[static_cast<size_t>(i)].str();
    }
    return out;
}

std::string coincidences_str(const DeltaFamilyData& data) {
    if (data.coincidences.empty()) return "{}";
    std::string out = "{";
    for (size_t i = 0; i < data.coincidences.size(); ++i) {
        if (i) out += ",";
        out += "(" + std::to_string(data.coincidences[i].first + 1) + "," +
               std::to_string(data.coincidences[i].second + 1) + ")";
    }
    return out + "}";
}

void print_table(int b, const std::vector<TableRow>& rows, const std::string& format,
                 std::ostream& os) {
    if (format == "json") {
        os << table_to_json(b, rows).dump(1) << "\n";
        return;
    }
    if (format == "csv") {
        os << "index,A,deltas,partitions,coincidences,c_ss,c_st,multiplicity\n";
        int i = 0;
        for (const auto& row : rows) {
            os << ++i << "," << row.data.A << "," << csv_escape([&] {
                std::string d = "(" + std::to_string(row.data.deltas[0]) + "," +
                                std::to_string(row.data.deltas[1]) + "," +
                                std::to_string(row.data.deltas[2]) + ")";
                return d;
            }()) << "," << csv_escape(partitions_csv(row.data)) << ","
               << csv_escape(coincidences_str(row.data)) << "," << row.c_ss << "," << row.c_st
               << "," << row.multiplicity << "\n";
        }
        return;
    }
    int i = 0;
    long long css = 0, cst = 0;
    for (const auto& row : rows) {
        os << ++i << " | " << row.data.str() << " | c_ss=" << row.c_ss << " c_st=" << row.c_st
           << " mult=" << row.multiplicity << "\n";
        css += row.multiplicity * row.c_ss;
        cst += row.multiplicity * row.c_st;
    }
    os << "rows: " << rows.size() << ", sum mult*c_ss = " << css << ", sum mult*c_st = " << cst
       << "\n";
}

void print_report(const InvariantReport& rep, const std::string& format, std::ostream& os) {
    if (format == "json") {
        os << report_to_json(rep).dump(1) << "\n";
        return;
    }
    if (format == "csv") {
        os << rep.b << "," << to_string(rep.dt_bar) << "," << to_string(rep.dt_hat) << ","
           << rep.chi_stable << "," << rep.sum_c_ss << "," << rep.sum_c_st << "," << rep.rows
           << "\n";
        return;
    }
    os << "b = " << rep.b << " (" << (rep.even ? "even" : "odd") << ")\n";
    os << "  dt_bar      = " << to_string(rep.dt_bar) << "\n";
    os << "  dt_hat      = " << to_string(rep.dt_hat)
       << (rep.even ? (rep.dt_hat_integral ? "  [integral]" : "  [NOT integral]") : "") << "\n";
    os << "  chi(M^s)    = " << rep.chi_stable << "\n";
    os << "  sum c_ss    = " << rep.sum_c_ss << ", sum c_st = " << rep.sum_c_st
       << ", families = " << rep.rows << "\n";
    if (rep.even)
        os << "  PI_n        = " << to_string(rep.pi_n[0]) << " at n=" << rep.n_used[0] << ", "
           << to_string(rep.pi_n[1]) << " at n=" << rep.n_used[1] << "\n";
    else
        os << "  signed dt   = " << rep.dt_signed << "  [(-1)^dim convention]\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Donaldson-Thomas invariants of rank-2 sheaves on local P^2"};
    app.require_subcommand(1);
    app.fallthrough();

    CacheConfig cache;
    std::string format = "pretty";
    int a_floor = 0;
    app.add_option("--cache-dir", cache.dir_flag, "cache directory (or LP2DT_CACHE_DIR)");
    app.add_flag("--no-cache", cache.disabled, "do not read or write the table cache");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    app.add_option("--a-floor", a_floor, "safety floor for the A sweep (negative)");

    auto* dt = app.add_subcommand("dt", "invariant report per b");
    std::vector<int> dt_bs;
    int n_override = 0;
    dt->add_option("--b", dt_bs, "values of b (default 0,-2,-4,-6,-8,-1,-3,-5)");
    dt->add_option("--n", n_override, "pair-counting level override");

    auto* table = app.add_subcommand("table", "Delta-family table for one b");
    int table_b = 0;
    table->add_option("--b", table_b, "value of b")->required();

    auto* series = app.add_subcommand("series", "generating series coefficients");
    std::string kind = "k1";
    int order = 30;
    int eta_exp = -3;
    series->add_option("--kind", kind, "series kind")
        ->check(CLI::IsMember({"k1", "k2a1", "mu", "eta"}));
    series->add_option("--order", order, "truncation order");
    series->add_option("--eta-exponent", eta_exp, "exponent for --kind eta");

    auto* verify = app.add_subcommand("verify", "identity and property suite");
    int verify_order = 20;
    std::vector<int> verify_bs;
    bool ex_toric_only = false;
    verify->add_option("--order", verify_order, "series identity order");
    verify->add_option("--b", verify_bs, "b values to verify (default 0,-2,-4,-6,-1,-3)");
    verify->add_flag("--ex-toric", ex_toric_only, "only the worked section-count checks");

    auto* cache_cmd = app.add_subcommand("cache", "enumeration cache maintenance");
    std::string cache_action = "status";
    cache_cmd->add_option("action", cache_action, "status or clear")
        ->check(CLI::IsMember({"status", "clear"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (*dt) {
            if (dt_bs.empty()) dt_bs = {0, -2, -4, -6, -8, -1, -3, -5};
            bool all_consistent = true;
            bool first = true;
            for (int b : dt_bs) {
                if (b > 0) throw Error("b must be nonpositive");
                auto rows = load_table(b, cache, a_floor);
                InvariantReport rep;
                try {
                    rep = make_report(b, rows, n_override);
                } catch (const Error& e) {
                    std::cerr << "b=" << b << ": " << e.what() << "\n";
                    all_consistent = false;
                    continue;
                }
                if (format == "csv" && first)
                    std::cout << "b,dt_bar,dt_hat,chi_stable,sum_c_ss,sum_c_st,families\n";
                print_report(rep, format, std::cout);
                first = false;
                if (rep.even && (!rep.dt_hat_integral || !rep.c_ss_even)) {
                    std::cerr << "b=" << b << ": integrality finding, see report\n";
                    all_consistent = false;
                }
            }
            return all_consistent ? kExitOk : kExitCheckFailure;
        }

        if (*table) {
            if (table_b > 0) throw Error("b must be nonpositive");
            if (table_b % 2 != 0) throw Error("table applies to even b");
            auto rows = load_table(table_b, cache, a_floor);
            print_table(table_b, rows, format, std::cout);
            return kExitOk;
        }

        if (*series) {
            PowerSeries s = [&] {
                if (kind == "k1") return series_k1(order);
                if (kind == "k2a1") return series_k2_a1(order);
                if (kind == "mu") return mu_stable_series(order);
                return eta_power_series(eta_exp, order);
            }();
            if (format == "json") {
                ordered_json j;
                j["kind"] = kind;
                j["order"] = order;
                ordered_json coeffs = ordered_json::array();
                for (int n = 0; n <= order; ++n) coeffs.push_back(to_string(s[n]));
                j["coefficients"] = std::move(coeffs);
                std::cout << j.dump(1) << "\n";
            } else if (format == "csv") {
                std::cout << "n,coefficient\n";
                for (int n = 0; n <= order; ++n) std::cout << n << "," << to_string(s[n]) << "\n";
            } else {
                std::cout << s.str() << "\n";
            }
            return kExitOk;
        }

        if (*verify) {
            VerifyOptions opts;
            opts.order = verify_order;
            if (!verify_bs.empty()) opts.bs = verify_bs;
            else if (ex_toric_only) opts.bs = {};
            else opts.bs = {0, -2, -4, -6, -1, -3};
            auto results = run_verification(opts);
            bool ok = true;
            for (const auto& r : results) {
                std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
                if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
                std::cout << "\n";
                ok = ok && r.passed;
            }
            std::cout << (ok ? "verification passed" : "verification FAILED") << "\n";
            return ok ? kExitOk : kExitCheckFailure;
        }

        if (*cache_cmd) {
            fs::path dir = cache.dir();
            if (cache_action == "clear") {
                size_t removed = 0;
                if (fs::exists(dir))
                    for (const auto& entry : fs::directory_iterator(dir))
                        if (entry.path().extension() == ".json") {
                            fs::remove(entry.path());
                            ++removed;
                        }
                std::cout << "removed " << removed << " cache file(s) from " << dir.string()
                          << "\n";
            } else {
                std::cout << "cache directory: " << dir.string() << "\n";
                if (fs::exists(dir))
                    for (const auto& entry : fs::directory_iterator(dir))
                        std::cout << "  " << entry.path().filename().string() << " ("
                                  << fs::file_size(entry.path()) << " bytes)\n";
                else
                    std::cout << "  (not present)\n";
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitConfigError;
}
