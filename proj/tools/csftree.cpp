#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csf/census.hpp"
#include "csf/coeffs.hpp"
#include "csf/enumerate.hpp"
#include "csf/errors.hpp"
#include "csf/identities.hpp"
#include "csf/reconstruct.hpp"
#include "csf/tree.hpp"
#include "csf/verify.hpp"

namespace {

std::string read_all(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw csf::FormatError("cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

csf::Tree load_tree(const std::string& path) {
    return csf::parse_tree_text(read_all(path));
}

csf::CoeffMap load_coeffs(const std::string& path) {
    return csf::CoeffMap::from_json_text(read_all(path));
}

// Exit 2 covers malformed input and misuse; exit 1 covers semantic
// verification failures (inconsistent coefficients, failed checks, bad cache).
bool is_usage_error(const csf::Error& e) {
    return dynamic_cast<const csf::FormatError*>(&e) ||
           dynamic_cast<const csf::BadLabelError*>(&e) ||
           dynamic_cast<const csf::NotATreeError*>(&e) ||
           dynamic_cast<const csf::EdgeNotFoundError*>(&e) ||
           dynamic_cast<const csf::InvalidClassError*>(&e) ||
           dynamic_cast<const csf::InvalidSpecError*>(&e) ||
           dynamic_cast<const csf::OutOfRangeError*>(&e) ||
           dynamic_cast<const csf::OrderTooLargeError*>(&e) ||
           dynamic_cast<const csf::WeightTooLargeError*>(&e) ||
           dynamic_cast<const csf::OverflowError*>(&e);
}

void note_timing(const std::string& what, double seconds) {
    std::cerr << "# " << what << ": " << std::fixed << std::setprecision(3)
              << seconds << "s" << std::endl;
}

void write_report_file(const std::string& path, const std::string& payload) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw csf::FormatError("cannot open report file " + path);
    out << payload << '\n';
}

int run_verify_distinct(int min_order, int max_order, int jobs,
                        const std::string& cache, const std::string& report) {
    if (min_order < 0) min_order = max_order;
    if (min_order > max_order) {
        std::cerr << "error: --min-order exceeds --max-order" << std::endl;
        return 2;
    }
    csf::VerifyOptions opts;
    opts.jobs = jobs;
    opts.cache_path = cache;
    opts.max_order = std::min(max_order, csf::kDefaultEnumMaxOrder);
    bool ok = true;
    std::vector<std::string> payloads;
    for (int d = min_order; d <= max_order; ++d) {
        csf::VerifyReport r = csf::verify_distinct(d, opts);
        note_timing("verify-distinct d=" + std::to_string(d), r.wall_seconds);
        if (min_order == max_order) {
            std::cout << r.summary() << '\n';
        } else {
            std::cout << "d=" << d << ": " << r.summary() << '\n';
        }
        for (const auto& [a, b] : r.failures) {
            std::cout << "  " << a << " == " << b << '\n';
        }
        ok = ok && r.pass();
        payloads.push_back(r.to_json());
    }
    if (!report.empty()) {
        std::string joined = "[";
        for (std::size_t i = 0; i < payloads.size(); ++i) {
            if (i > 0) joined += ",";
            joined += payloads[i];
        }
        joined += "]";
        write_report_file(report, joined);
    }
    return ok ? 0 : 1;
}

int run_ranged_verify(const csf::VerifyReport& r, const std::string& report) {
    note_timing("verify " + r.kind, r.wall_seconds);
    std::cout << r.summary() << '\n';
    for (const auto& [item, detail] : r.failures) {
        std::cout << "  " << item << ": " << detail << '\n';
    }
    if (!report.empty()) write_report_file(report, r.to_json());
    return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic symmetric function toolkit for trees"};
    app.require_subcommand(1);

    std::string coeffs_input;
    std::string coeffs_engine = "dp";
    std::string coeffs_format = "text";
    auto* coeffs_cmd =
        app.add_subcommand("coeffs", "power-sum coefficients of one tree");
    coeffs_cmd->add_option("--input", coeffs_input, "edge list file, - for stdin")
        ->required();
    coeffs_cmd->add_option("--engine", coeffs_engine, "naive or dp")
        ->check(CLI::IsMember({"naive", "dp"}));
    coeffs_cmd->add_option("--format", coeffs_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string census_input;
    auto* census_cmd =
        app.add_subcommand("census", "rooted subtree census of one tree");
    census_cmd->add_option("--input", census_input, "edge list file, - for stdin")
        ->required();

    std::string ident_input;
    auto* ident_cmd = app.add_subcommand(
        "identities", "check all applicable coefficient identities");
    ident_cmd->add_option("--input", ident_input, "edge list file, - for stdin")
        ->required();

    std::string rho3_input;
    std::string rho3_coeffs;
    auto* rho3_cmd = app.add_subcommand(
        "rho3", "solve (rho_{3,1}, rho_{3,2}) from coefficients");
    rho3_cmd->add_option("--input", rho3_input, "edge list file, - for stdin");
    rho3_cmd->add_option("--coeffs", rho3_coeffs, "coefficient JSON file");

    std::string rec_coeffs;
    auto* rec_cmd = app.add_subcommand(
        "reconstruct", "recover a 2-spider from its coefficients");
    rec_cmd->add_option("--coeffs", rec_coeffs, "coefficient JSON file")
        ->required();

    std::string spider_spec;
    auto* spider_cmd =
        app.add_subcommand("spider", "build the tree for a spider spec");
    spider_cmd->add_option("--spec", spider_spec, "legs as '1,1;4,4'")
        ->required();

    int enum_order = 0;
    bool enum_rooted = false;
    std::string enum_format = "codes";
    auto* enum_cmd = app.add_subcommand(
        "enumerate", "stream all trees of one order, one per class");
    enum_cmd->add_option("--order", enum_order, "number of vertices")
        ->required();
    enum_cmd->add_flag("--rooted", enum_rooted, "rooted classes instead of free");
    enum_cmd->add_option("--format", enum_format, "codes or edges")
        ->check(CLI::IsMember({"codes", "edges"}));

    int vd_min = -1, vd_max = 0, vd_jobs = 1;
    std::string vd_cache, vd_report;
    auto* vd_cmd = app.add_subcommand(
        "verify-distinct", "coefficient maps separate all trees per order");
    vd_cmd->add_option("--min-order", vd_min, "first order (default: --max-order)");
    vd_cmd->add_option("--max-order", vd_max, "last order")->required();
    vd_cmd->add_option("--jobs", vd_jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    vd_cmd->add_option("--cache", vd_cache, "fingerprint cache TSV");
    vd_cmd->add_option("--report", vd_report, "write JSON report here");

    int vs_min = 4, vs_max = 0;
    std::string vs_report;
    auto* vs_cmd = app.add_subcommand(
        "verify-spiders", "2-spider build/reconstruct round-trips");
    vs_cmd->add_option("--min-order", vs_min, "first order (default 4)");
    vs_cmd->add_option("--max-order", vs_max, "last order")->required();
    vs_cmd->add_option("--report", vs_report, "write JSON report here");

    int vi_min = 2, vi_max = 0;
    std::string vi_report;
    auto* vi_cmd = app.add_subcommand(
        "verify-identities", "identity sweep over all trees per order");
    vi_cmd->add_option("--min-order", vi_min, "first order (default 2)");
    vi_cmd->add_option("--max-order", vi_max, "last order")->required();
    vi_cmd->add_option("--report", vi_report, "write JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*coeffs_cmd) {
            csf::Tree t = load_tree(coeffs_input);
            csf::CoeffMap c = coeffs_engine == "naive" ? csf::coeffs_naive(t)
                                                       : csf::coeffs_dp(t);
            if (coeffs_format == "json") {
                std::cout << c.to_json() << '\n';
            } else {
                std::cout << csf::render_power_sum_polynomial(c) << '\n';
            }
            return 0;
        }
        if (*census_cmd) {
            std::cout << csf::census_tsv(csf::build_census(load_tree(census_input)));
            return 0;
        }
        if (*ident_cmd) {
            auto reports = csf::check_all(load_tree(ident_input));
            std::cout << csf::identities_tsv(reports);
            for (const auto& r : reports) {
                if (!r.pass) return 1;
            }
            return 0;
        }
        if (*rho3_cmd) {
            if (rho3_input.empty() == rho3_coeffs.empty()) {
                std::cerr << "error: rho3 needs exactly one of --input, --coeffs"
                          << std::endl;
                return 2;
            }
            csf::CoeffMap c = rho3_input.empty()
                                  ? load_coeffs(rho3_coeffs)
                                  : csf::coeffs_dp(load_tree(rho3_input));
            auto [r1, r2] = csf::solve_rho3(c);
            std::cout << "rho_{3,1} = " << r1 << '\n'
                      << "rho_{3,2} = " << r2 << '\n';
            return 0;
        }
        if (*rec_cmd) {
            csf::ReconstructResult res =
                csf::reconstruct_two_spider(load_coeffs(rec_coeffs));
            std::cout << csf::format_spider_spec(res.spec);
            if (res.tag) std::cout << " (" << csf::format_case_tag(*res.tag) << ")";
            std::cout << '\n';
            return 0;
        }
        if (*spider_cmd) {
            csf::Tree t = csf::build_spider(csf::parse_spider_spec(spider_spec));
            std::cout << csf::serialize_tree(t);
            return 0;
        }
        if (*enum_cmd) {
            bool first = true;
            auto emit = [&](const csf::Tree& t, const csf::CanonicalCode& code) {
                if (enum_format == "codes") {
                    std::cout << code << '\n';
                } else {
                    if (!first) std::cout << '\n';
                    std::cout << csf::serialize_tree(t);
                }
                first = false;
            };
            if (enum_rooted) {
                csf::RootedTreeGenerator gen(enum_order);
                while (auto r = gen.next()) emit(r->tree, csf::rooted_canonical_code(*r));
            } else {
                csf::FreeTreeGenerator gen(enum_order);
                while (auto t = gen.next()) emit(*t, csf::canonical_code(*t));
            }
            return 0;
        }
        if (*vd_cmd) {
            return run_verify_distinct(vd_min, vd_max, vd_jobs, vd_cache,
                                       vd_report);
        }
        if (*vs_cmd) {
            return run_ranged_verify(csf::verify_spider_roundtrip(vs_min, vs_max),
                                     vs_report);
        }
        if (*vi_cmd) {
            return run_ranged_verify(csf::verify_identities(vi_min, vi_max),
                                     vi_report);
        }
    } catch (const csf::Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return is_usage_error(e) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 2;
}
