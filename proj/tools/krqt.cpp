// Command-line surface: character dumps with an on-disk cache, the
// verification sweeps, and the rank-1 table dumps.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "krqt/cluster.hpp"
#include "krqt/exchange.hpp"
#include "krqt/json_io.hpp"
#include "krqt/tableaux.hpp"

namespace {

using krqt::Json;

constexpr int kMaxRank = 4;
constexpr int kMaxKmax = 8;
constexpr int kMaxJWindow = 8;

struct Report {
    Json body;
    bool pass = false;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

// Runs one closure per instance, preserving instance order in the output.
std::vector<Report> run_sweep(const std::vector<std::function<Report()>>& instances, int jobs) {
    std::vector<Report> results(instances.size());
    if (jobs < 1) jobs = 1;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= instances.size()) return;
            try {
                results[idx] = instances[idx]();
            } catch (const krqt::UsageWindow&) {
                throw;
            } catch (const std::exception& e) {
                Json body;
                body["check"] = "exception";
                body["params"] = Json::object();
                body["pass"] = false;
                body["witness"] = e.what();
                body["wall_ms"] = 0.0;
                results[idx] = Report{std::move(body), false};
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t width = std::min<std::size_t>(static_cast<std::size_t>(jobs), instances.size());
    for (std::size_t w = 0; w + 1 < width; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return results;
}

void print_reports(const std::vector<Report>& reports, const std::string& format) {
    for (const auto& r : reports) {
        if (format == "json") {
            std::cout << r.body.dump() << "\n";
        } else {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.body["check"].get<std::string>()
                      << " " << r.body["params"].dump();
            if (!r.pass && r.body.contains("witness")) std::cout << " :: " << r.body["witness"].dump();
            std::cout << " (" << r.body["wall_ms"].get<double>() << " ms)\n";
        }
    }
}

Report finish(Json body, bool pass, std::chrono::steady_clock::time_point start) {
    body["wall_ms"] = elapsed_ms(start);
    return Report{std::move(body), pass};
}

std::vector<int> parity_spectrals(int node, int window) {
    std::vector<int> out;
    for (int j = -window; j <= window; ++j)
        if (((1 - node - j) % 2 + 2) % 2 == 0) out.push_back(j);
    return out;
}

int cmd_char(int rank, int i, int k, int j, const std::string& format, bool no_cache) {
    const krqt::KrLabel label{rank, i, j, k};
    if (!label.valid()) {
        std::cerr << "char: invalid label (need 1 <= i <= rank, k >= 0, (1-i-j) even)\n";
        return 2;
    }
    krqt::QtCharacter chi;
    const krqt::CharacterCache cache = krqt::CharacterCache::from_environment();
    if (!no_cache) {
        if (auto hit = cache.load(label)) chi = *hit;
        else {
            chi = krqt::q_character(label);
            cache.store(label, chi);
        }
    } else {
        chi = krqt::q_character(label);
    }

    if (format == "json") {
        std::cout << krqt::to_json(chi, &label).dump(2) << "\n";
    } else {
        std::cout << "chi(r=" << rank << ", i=" << i << ", k=" << k << ", j=" << j << ") = "
                  << chi.str() << "\n"
                  << chi.term_count() << " terms, dominant " << chi.dominant().str() << "\n";
    }
    return 0;
}

std::vector<std::function<Report()>> commute_instances(int rank, int kmax) {
    std::vector<std::function<Report()>> out;
    const auto cluster = krqt::fundamental_cluster(rank, kmax);
    for (std::size_t a = 0; a < cluster.size(); ++a)
        for (std::size_t b = a; b < cluster.size(); ++b) {
            const krqt::KrLabel la = cluster[a], lb = cluster[b];
            out.push_back([la, lb, rank] {
                const auto start = std::chrono::steady_clock::now();
                const krqt::QtCharacter ca = krqt::q_character(la), cb = krqt::q_character(lb);
                const auto fwd = krqt::twisted_mul(ca, cb, krqt::TwistMode::StarGamma, rank);
                const auto rev = krqt::twisted_mul(cb, ca, krqt::TwistMode::StarGamma, rank);
                const auto alpha = krqt::t_commutation_exponent(ca, cb, rank);
                const int two_eps = 2 * krqt::epsilon(ca.dominant(), cb.dominant(), rank);
                const bool pass = fwd == rev && alpha.has_value() && *alpha == two_eps;
                Json body;
                body["check"] = "commute";
                body["params"] = {{"rank", rank}, {"i1", la.node}, {"k1", la.width},
                                  {"i2", lb.node}, {"k2", lb.width}};
                body["pass"] = pass;
                body["alpha"] = alpha ? Json(*alpha) : Json(nullptr);
                body["two_epsilon"] = two_eps;
                if (!pass) body["witness"] = "products differ or alpha != 2 epsilon";
                return finish(std::move(body), pass, start);
            });
        }
    return out;
}

std::vector<std::function<Report()>> identity_instances(const std::string& which, int rank,
                                                        int kmax, int jwindow) {
    std::vector<std::function<Report()>> out;
    for (int i = 1; i <= rank; ++i)
        for (int k = 1; k <= kmax; ++k)
            for (int j : parity_spectrals(i, jwindow)) {
                out.push_back([which, rank, i, k, j] {
                    const auto start = std::chrono::steady_clock::now();
                    const krqt::IdentityReport rep =
                        which == "tsystem" ? krqt::verify_t_system(rank, i, k, j)
                                           : krqt::verify_quantum_mutation(rank, i, k, j);
                    return finish(krqt::to_json(rep), rep.pass, start);
                });
            }
    return out;
}

std::vector<std::function<Report()>> thm31_instances(int rank, int kmax) {
    std::vector<std::function<Report()>> out;
    const auto cluster = krqt::fundamental_cluster(rank, kmax);
    for (std::size_t a = 0; a < cluster.size(); ++a)
        for (std::size_t b = a; b < cluster.size(); ++b) {
            const krqt::KrLabel la = cluster[a], lb = cluster[b];
            out.push_back([la, lb] {
                const auto start = std::chrono::steady_clock::now();
                const krqt::SigmaPartition part = krqt::sigma_partition(la, lb);
                return finish(krqt::to_json(part), part.pass, start);
            });
        }
    return out;
}

int cmd_verify(const std::string& subcheck, int rank, int kmax, int jwindow, int jobs,
               const std::string& format) {
    std::vector<std::function<Report()>> instances;
    if (subcheck == "commute") {
        instances = commute_instances(rank, kmax);
    } else if (subcheck == "tsystem" || subcheck == "mutation") {
        instances = identity_instances(subcheck, rank, kmax, jwindow);
    } else if (subcheck == "compat") {
        instances.push_back([rank, kmax] {
            const auto start = std::chrono::steady_clock::now();
            const krqt::CompatReport rep = krqt::compatibility_check(rank, kmax);
            return finish(krqt::to_json(rep), rep.pass, start);
        });
    } else if (subcheck == "thm31") {
        instances = thm31_instances(rank, kmax);
    } else if (subcheck == "counterexample") {
        instances.push_back([] {
            const auto start = std::chrono::steady_clock::now();
            const krqt::CounterexampleReport rep = krqt::k_direction_counterexample();
            return finish(krqt::to_json(rep), rep.pass, start);
        });
    } else {
        std::cerr << "verify: unknown subcheck '" << subcheck << "'\n";
        return 2;
    }

    std::vector<Report> reports;
    try {
        reports = run_sweep(instances, jobs);
    } catch (const krqt::UsageWindow& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 2;
    }
    print_reports(reports, format);
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;
    return all_pass ? 0 : 1;
}

std::string index_header(int n) {
    std::ostringstream os;
    for (int k = 1; k <= n; ++k) os << ",(1;" << k << ")";
    return os.str();
}

int cmd_tables(int rank, int n, const std::string& format) {
    if (rank != 1) {
        std::cerr << "tables: reference tables exist for rank 1 only\n";
        return 2;
    }
    const krqt::A1Tables t = krqt::a1_tables(n);
    if (format == "json") {
        std::cout << krqt::to_json(t).dump(2) << "\n";
    } else if (format == "csv") {
        for (const auto& [name, m] :
             {std::pair<std::string, const std::vector<std::vector<int>>*>{"B", &t.b},
              {"epsilon", &t.eps}}) {
            std::cout << name << index_header(n) << "\n";
            for (int a = 1; a <= n; ++a) {
                std::cout << "(1;" << a << ")";
                for (int b = 1; b <= n; ++b)
                    std::cout << "," << (*m)[static_cast<std::size_t>(a - 1)]
                                            [static_cast<std::size_t>(b - 1)];
                std::cout << "\n";
            }
        }
    } else {
        auto dump = [n](const char* name, const std::vector<std::vector<int>>& m) {
            std::cout << name << ":\n";
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) std::cout << "\t" << m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                std::cout << "\n";
            }
        };
        dump("B", t.b);
        dump("epsilon", t.eps);
        std::cout << "closed forms match: " << (t.closed_forms_match ? "yes" : "no") << "\n";
    }
    return t.closed_forms_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine and verifier for KR (q,t)-characters of type A"};
    app.require_subcommand(1);

    int rank = 1, node = 1, width = 1, spectral = 0, n = 9, jwindow = 4;
    int kmax = 0, jobs = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
    std::string format = "pretty", subcheck;
    bool no_cache = false;

    auto* char_cmd = app.add_subcommand("char", "Print one KR (q,t)-character");
    char_cmd->add_option("--rank", rank, "Lie algebra rank r")->required();
    char_cmd->add_option("--i", node, "Dynkin node")->required();
    char_cmd->add_option("--k", width, "width k")->required();
    char_cmd->add_option("--j", spectral, "spectral shift j")->required();
    char_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));
    char_cmd->add_flag("--no-cache", no_cache, "bypass the on-disk cache");

    auto* verify_cmd = app.add_subcommand("verify", "Run one verification sweep");
    verify_cmd->add_option("subcheck", subcheck, "commute|tsystem|mutation|compat|thm31|counterexample")
        ->required();
    verify_cmd->add_option("--rank", rank, "Lie algebra rank r");
    verify_cmd->add_option("--kmax", kmax, "width bound of the sweep");
    verify_cmd->add_option("--jwindow", jwindow, "|j| bound for spectral sweeps");
    verify_cmd->add_option("--jobs", jobs, "parallel sweep width");
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));

    auto* tables_cmd = app.add_subcommand("tables", "Rank-1 B and epsilon windows");
    tables_cmd->add_option("--rank", rank, "must be 1")->required();
    tables_cmd->add_option("--n", n, "window size");
    tables_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "pretty", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (char_cmd->parsed()) {
            if (rank < 1 || rank > kMaxRank || width > 16) {
                std::cerr << "char: rank outside 1.." << kMaxRank << " or k above 16\n";
                return 2;
            }
            return cmd_char(rank, node, width, spectral, format, no_cache);
        }
        if (verify_cmd->parsed()) {
            if (kmax == 0) kmax = subcheck == "compat" ? 6 : (subcheck == "commute" ? 3 : 2);
            // Character sizes grow quickly; cap each sweep at desk scale.
            const int kmax_budget = subcheck == "compat" ? kMaxKmax
                                    : subcheck == "thm31" ? 3
                                                          : 4;
            if (rank < 1 || rank > kMaxRank || kmax < 1 || kmax > kmax_budget || jwindow < 0 ||
                jwindow > kMaxJWindow || jobs < 1 || jobs > 64) {
                std::cerr << "verify: sweep ranges outside the configured budgets\n";
                return 2;
            }
            return cmd_verify(subcheck, rank, kmax, jwindow, jobs, format);
        }
        if (tables_cmd->parsed()) {
            if (n < 2 || n > 64) {
                std::cerr << "tables: n outside 2..64\n";
                return 2;
            }
            return cmd_tables(rank, n, format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
