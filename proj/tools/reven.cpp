#include "reven/analytic.hpp"
#include "reven/arith.hpp"
#include "reven/dft.hpp"
#include "reven/error.hpp"
#include "reven/even.hpp"
#include "reven/factor.hpp"
#include "reven/naive_dft.hpp"
#include "reven/ramanujan.hpp"
#include "reven/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using reven::i64;
using reven::Rat;

using Cell = std::variant<std::string, i64, Rat, double>;

struct OutputTable {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

struct RunConfig {
    std::string command;
    std::string format = "human";
    std::vector<std::pair<std::string, std::string>> params;
    std::string verdict = "ok";
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string cell_text(const Cell& c, bool canonical_rats) {
    if (std::holds_alternative<std::string>(c))
        return std::get<std::string>(c);
    if (std::holds_alternative<i64>(c))
        return std::to_string(std::get<i64>(c));
    if (std::holds_alternative<Rat>(c))
        return canonical_rats ? reven::rat_canonical(std::get<Rat>(c))
                              : reven::rat_human(std::get<Rat>(c));
    return fmt_double(std::get<double>(c));
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string render_human(const RunConfig& cfg, const OutputTable& t) {
    std::ostringstream os;
    os << "command: " << cfg.command << '\n';
    for (const auto& [k, v] : cfg.params)
        os << k << ": " << v << '\n';

    std::vector<std::size_t> width(t.header.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < t.header.size(); ++i)
        width[i] = t.header[i].size();
    for (const auto& row : t.rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line.push_back(cell_text(row[i], false));
            width[i] = std::max(width[i], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto put = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            os << line[i];
            if (i + 1 < line.size())
                os << std::string(width[i] - line[i].size() + 2, ' ');
        }
        os << '\n';
    };
    put(t.header);
    for (const auto& line : cells)
        put(line);
    os << "verdict: " << cfg.verdict << '\n';
    return os.str();
}

std::string render_json(const RunConfig& cfg, const OutputTable& t) {
    nlohmann::ordered_json doc;
    doc["command"] = cfg.command;
    nlohmann::ordered_json conf;
    conf["format"] = cfg.format;
    for (const auto& [k, v] : cfg.params)
        conf[k] = v;
    doc["config"] = std::move(conf);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            const Cell& c = row[i];
            if (std::holds_alternative<i64>(c))
                obj[t.header[i]] = std::get<i64>(c);
            else if (std::holds_alternative<double>(c))
                obj[t.header[i]] = std::get<double>(c);
            else
                obj[t.header[i]] = cell_text(c, true);
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    doc["verdict"] = cfg.verdict;
    return doc.dump(2) + "\n";
}

std::string render_csv(const OutputTable& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.header.size(); ++i)
        os << csv_escape(t.header[i]) << (i + 1 < t.header.size() ? "," : "");
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << csv_escape(cell_text(row[i], false)) << (i + 1 < row.size() ? "," : "");
        os << '\n';
    }
    return os.str();
}

void emit(const RunConfig& cfg, const OutputTable& t, const std::string& out_path) {
    std::string text;
    if (cfg.format == "json")
        text = render_json(cfg, t);
    else if (cfg.format == "csv")
        text = render_csv(t);
    else
        text = render_human(cfg, t);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file)
            throw reven::UsageError("cannot open output file '" + out_path + "'");
        file << text;
    }
}

std::pair<i64, i64> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            i64 v = std::stoll(text);
            return {v, v};
        }
        i64 lo = std::stoll(text.substr(0, dots));
        i64 hi = std::stoll(text.substr(dots + 2));
        if (lo > hi)
            throw reven::UsageError("empty range '" + text + "'");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw reven::UsageError("cannot parse range '" + text + "'");
    } catch (const std::out_of_range&) {
        throw reven::UsageError("range endpoint too large in '" + text + "'");
    }
}

double time_ms(const std::function<void()>& work) {
    auto begin = std::chrono::steady_clock::now();
    work();
    auto end = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(end - begin).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for gcd-periodic functions and their transforms"};
    app.require_subcommand(1);

    std::string format = "human";
    long long seed = 1;
    long long rmax = 0;
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--seed", seed, "seed for randomized sweeps");
    app.add_option("--rmax", rmax, "modulus bound override for verify suites");
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    auto* table = app.add_subcommand("table", "print value tables");
    table->fallthrough();
    std::string kind;
    table->add_option("kind", kind, "ramanujan | dft | coefficients")
        ->required()
        ->check(CLI::IsMember({"ramanujan", "dft", "coefficients"}));
    long long table_r = 0;
    table->add_option("--r", table_r, "modulus")->required();
    std::string table_range;
    table->add_option("--n", table_range, "argument range LO..HI (default 1..r)");
    std::string table_f;
    table->add_option("--f", table_f, "named function (dft and coefficient tables)");

    auto* verify = app.add_subcommand("verify", "run identity suites");
    verify->fallthrough();
    std::string suite;
    verify->add_option("suite", suite, "suite name or 'all'");
    bool list_suites = false;
    verify->add_flag("--list", list_suites, "list suite names and exit");
    long long nmax = 0, vcount = 0;
    verify->add_option("--nmax", nmax, "argument bound override");
    verify->add_option("--count", vcount, "randomized case count override");

    auto* count = app.add_subcommand("count", "restricted congruence counting");
    count->fallthrough();
    long long count_r = 0, count_n = 0, count_k = 0;
    count->add_option("--r", count_r, "modulus")->required();
    count->add_option("--k", count_k, "number of coprime summands")->required();
    count->add_option("--n", count_n, "target residue")->required();
    bool with_oracle = false;
    count->add_flag("--oracle", with_oracle, "also run the brute-force enumeration");

    auto* bench = app.add_subcommand("bench", "structured vs naive transform timings");
    bench->fallthrough();
    std::vector<long long> bench_rs;
    bench->add_option("--r", bench_rs, "comma-separated moduli")->required()->delimiter(',');
    long long reps = 3;
    bench->add_option("--reps", reps, "repetitions per modulus (best-of)");

    auto* series = app.add_subcommand("series", "truncated Dirichlet-series checks");
    series->fallthrough();
    std::string series_F = "eps";
    series->add_option("--F", series_F, "named function (eps, one, tau, two-omega)");
    long long series_n = 1, series_r = 1;
    double series_s = 2.0, series_t = 2.0;
    long long trunc = 100000;
    double aF = -1.0;
    series->add_option("--n", series_n, "fixed n for the r-sum");
    series->add_option("--r", series_r, "fixed r for the n-sum");
    series->add_option("--s", series_s, "evaluation point s");
    series->add_option("--t", series_t, "second evaluation point (double sum)");
    series->add_option("--trunc", trunc, "truncation length");
    series->add_option("--aF", aF, "declared convergence abscissa (default: registry)");

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            int code = app.exit(e);
            return code == 0 ? 0 : static_cast<int>(reven::ExitCode::usage);
        }

        RunConfig cfg;
        cfg.format = format;
        OutputTable t;

        if (app.got_subcommand(table)) {
            cfg.command = "table";
            if (table_r < 1)
                throw reven::UsageError("--r must be >= 1");
            cfg.params.emplace_back("kind", kind);
            cfg.params.emplace_back("r", std::to_string(table_r));
            if (kind == "ramanujan") {
                auto [lo, hi] = parse_range(
                    table_range.empty() ? "1.." + std::to_string(table_r) : table_range);
                cfg.params.emplace_back("n", std::to_string(lo) + ".." + std::to_string(hi));
                t.header = {"n", "c_r(n)"};
                for (i64 n = lo; n <= hi; ++n)
                    t.rows.push_back({n, reven::ramanujan_sum(table_r, n)});
            } else {
                if (table_f.empty())
                    throw reven::UsageError("table " + kind + " needs --f");
                cfg.params.emplace_back("f", table_f);
                reven::ArithFunction F = reven::arith_by_name(table_f);
                reven::EvenFunction f = reven::completely_even(F, table_r);
                if (kind == "dft") {
                    reven::EvenFunction hat = reven::dft(f);
                    t.header = {"d", "f(d)", "dft(d)"};
                    for (std::size_t i = 0; i < hat.divs.size(); ++i)
                        t.rows.push_back({hat.divs[i], f.values[i], hat.values[i]});
                } else {
                    reven::FourierCoefficients a = reven::fourier_coefficients(f);
                    t.header = {"d", "alpha(d)"};
                    for (std::size_t i = 0; i < a.divs.size(); ++i)
                        t.rows.push_back({a.divs[i], a.alpha[i]});
                }
            }
            emit(cfg, t, out_path);
            return static_cast<int>(reven::ExitCode::ok);
        }

        if (app.got_subcommand(verify)) {
            cfg.command = "verify";
            if (list_suites) {
                t.header = {"suite"};
                for (const std::string& name : reven::suite_names())
                    t.rows.push_back({name});
                emit(cfg, t, out_path);
                return static_cast<int>(reven::ExitCode::ok);
            }
            if (suite.empty())
                throw reven::UsageError("verify needs a suite name or 'all'");
            reven::VerifyOptions opt;
            opt.rmax = rmax;
            opt.nmax = nmax;
            opt.count = vcount;
            opt.seed = static_cast<std::uint64_t>(seed);
            cfg.params.emplace_back("suite", suite);
            cfg.params.emplace_back("seed", std::to_string(seed));

            std::vector<reven::SuiteResult> results;
            if (suite == "all")
                results = reven::run_all(opt);
            else
                results.push_back(reven::run_suite(suite, opt));

            bool all_pass = true;
            t.header = {"suite", "cases", "failures", "result", "bounds", "witnesses"};
            for (const reven::SuiteResult& res : results) {
                all_pass = all_pass && res.pass();
                std::string witnesses;
                for (std::size_t i = 0; i < res.failures.size(); ++i) {
                    if (i)
                        witnesses += "; ";
                    witnesses += res.failures[i];
                }
                t.rows.push_back({res.suite, res.cases,
                                  static_cast<i64>(res.failures.size()),
                                  std::string(res.pass() ? "pass" : "FAIL"), res.notes,
                                  witnesses});
            }
            cfg.verdict = all_pass ? "pass" : "fail";
            emit(cfg, t, out_path);
            return static_cast<int>(all_pass ? reven::ExitCode::ok
                                             : reven::ExitCode::violation);
        }

        if (app.got_subcommand(count)) {
            cfg.command = "count";
            cfg.params.emplace_back("r", std::to_string(count_r));
            cfg.params.emplace_back("k", std::to_string(count_k));
            cfg.params.emplace_back("n", std::to_string(count_n));
            if (count_k < 1 || count_k > 64)
                throw reven::UsageError("--k must be in 1..64");
            i64 fast =
                reven::count_congruence_solutions(count_r, static_cast<int>(count_k), count_n);
            bool ok = true;
            if (with_oracle) {
                std::vector<i64> brute =
                    reven::count_congruence_bruteforce(count_r, static_cast<int>(count_k));
                i64 residue = ((count_n % count_r) + count_r) % count_r;
                i64 oracle = brute[static_cast<std::size_t>(residue)];
                ok = fast == oracle;
                t.header = {"r", "k", "n", "count", "oracle", "match"};
                t.rows.push_back({static_cast<i64>(count_r), static_cast<i64>(count_k),
                                  static_cast<i64>(count_n), fast, oracle,
                                  std::string(ok ? "ok" : "MISMATCH")});
            } else {
                t.header = {"r", "k", "n", "count"};
                t.rows.push_back({static_cast<i64>(count_r), static_cast<i64>(count_k),
                                  static_cast<i64>(count_n), fast});
            }
            cfg.verdict = ok ? "ok" : "fail";
            emit(cfg, t, out_path);
            return static_cast<int>(ok ? reven::ExitCode::ok : reven::ExitCode::violation);
        }

        if (app.got_subcommand(bench)) {
            cfg.command = "bench";
            cfg.params.emplace_back("reps", std::to_string(reps));
            if (reps < 1)
                throw reven::UsageError("--reps must be >= 1");
            t.header = {"r",         "tau",      "structured_ops", "structured_ms",
                        "naive_ops", "naive_ms", "match"};
            bool all_ok = true;
            for (long long r : bench_rs) {
                if (r < 1)
                    throw reven::UsageError("--r entries must be >= 1");
                reven::EvenFunction f = reven::completely_even(reven::af_tau(), r);
                i64 tau_r = static_cast<i64>(f.divs.size());

                reven::EvenFunction hat = reven::dft(f); // warm the modulus table
                double structured_best = 1e300;
                for (long long rep = 0; rep < reps; ++rep)
                    structured_best =
                        std::min(structured_best, time_ms([&] { hat = reven::dft(f); }));

                std::string match = "skipped";
                double naive_best = 0.0;
                i64 naive_ops = 0;
                if (r <= reven::kNaiveDftBound) {
                    reven::ComplexTable in = reven::to_complex(reven::expand(f));
                    reven::ComplexTable out = reven::dft_naive(in);
                    naive_best = 1e300;
                    for (long long rep = 0; rep < reps; ++rep)
                        naive_best =
                            std::min(naive_best, time_ms([&] { out = reven::dft_naive(in); }));
                    naive_ops = r * r;
                    double diff =
                        reven::max_abs_diff(out, reven::to_complex(reven::expand(hat)));
                    bool ok = diff <= 1e-9 * reven::l1_norm(in);
                    match = ok ? "ok" : "MISMATCH";
                    all_ok = all_ok && ok;
                }
                t.rows.push_back({static_cast<i64>(r), tau_r, tau_r * tau_r, structured_best,
                                  naive_ops, naive_best, match});
            }
            cfg.verdict = all_ok ? "ok" : "fail";
            emit(cfg, t, out_path);
            return static_cast<int>(all_ok ? reven::ExitCode::ok : reven::ExitCode::violation);
        }

        if (app.got_subcommand(series)) {
            cfg.command = "series";
            const reven::ArithFunction F = reven::arith_by_name(series_F);
            double abscissa = aF >= 0 ? aF : reven::series_abscissa(F.name);
            cfg.params.emplace_back("F", F.name);
            cfg.params.emplace_back("aF", fmt_double(abscissa));
            cfg.params.emplace_back("n", std::to_string(series_n));
            cfg.params.emplace_back("r", std::to_string(series_r));
            cfg.params.emplace_back("s", fmt_double(series_s));
            cfg.params.emplace_back("t", fmt_double(series_t));
            cfg.params.emplace_back("trunc", std::to_string(trunc));
            std::vector<reven::SeriesReport> reports = reven::dirichlet_series_check(
                F, abscissa, series_n, series_r, series_s, series_t, trunc);
            t.header = {"identity", "F", "s", "t", "n", "r", "truncation", "lhs", "rhs",
                        "discrepancy", "tail_estimate", "result"};
            bool all_pass = true;
            for (const reven::SeriesReport& rep : reports) {
                all_pass = all_pass && rep.pass;
                t.rows.push_back({rep.identity, rep.F, rep.s, rep.t, rep.n, rep.r,
                                  rep.truncation, rep.lhs_partial, rep.rhs_closed_form,
                                  rep.discrepancy, rep.tail_estimate,
                                  std::string(rep.pass ? "pass" : "FAIL")});
            }
            cfg.verdict = all_pass ? "pass" : "fail";
            emit(cfg, t, out_path);
            return static_cast<int>(all_pass ? reven::ExitCode::ok
                                             : reven::ExitCode::violation);
        }

        throw reven::UsageError("no subcommand selected");
    } catch (const reven::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return static_cast<int>(reven::ExitCode::usage);
    } catch (const reven::BoundError& e) {
        std::cerr << "resource bound: " << e.what() << '\n';
        return static_cast<int>(reven::ExitCode::bound);
    } catch (const reven::IdentityViolation& e) {
        std::cerr << "identity violation: " << e.what() << '\n';
        return static_cast<int>(reven::ExitCode::violation);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(reven::ExitCode::violation);
    }
}
