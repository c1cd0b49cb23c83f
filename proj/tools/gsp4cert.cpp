// gsp4cert: batch verifier for the symbolic computations behind the
// Siegel threefold period arguments.
//
//   gsp4cert verify --config cfg.json [--suite NAME]... [--out report.json]
//                   [--max-degree N]
//   gsp4cert dump --out DIR
//
// Exit codes: 0 all checks pass, 1 usage or I/O error, 2 at least one
// check failed.

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsp4/report.hpp"
#include "gsp4/suites.hpp"
#include "gsp4/uea.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_check_failed = 2;

struct VerifyConfig {
    std::vector<std::string> suites;
    bool suites_listed = false;
    std::string out_path;
    long max_degree = 6;
};

int load_config(const std::string& path, VerifyConfig& cfg) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "gsp4cert: cannot open config " << path << "\n";
        return exit_usage;
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        std::cerr << "gsp4cert: bad config " << path << ": " << e.what()
                  << "\n";
        return exit_usage;
    }
    if (doc.contains("suites")) {
        cfg.suites_listed = true;
        cfg.suites.clear();
        for (const auto& s : doc["suites"]) {
            cfg.suites.push_back(s.get<std::string>());
        }
    }
    if (doc.contains("max_degree")) cfg.max_degree = doc["max_degree"].get<long>();
    if (doc.contains("out")) cfg.out_path = doc["out"].get<std::string>();
    return exit_ok;
}

// Keeps the canonical suite order regardless of how the request was
// phrased, so equal requests produce byte-equal reports.
int resolve_suites(const VerifyConfig& cfg, std::vector<std::string>& order) {
    const auto& known = gsp4::suites::suite_names();
    if (!cfg.suites_listed) {
        order = known;
        return exit_ok;
    }
    std::set<std::string> want(cfg.suites.begin(), cfg.suites.end());
    for (const auto& s : want) {
        if (std::find(known.begin(), known.end(), s) == known.end()) {
            std::cerr << "gsp4cert: unknown suite '" << s << "'\n";
            return exit_usage;
        }
    }
    for (const auto& s : known) {
        if (want.count(s)) order.push_back(s);
    }
    return exit_ok;
}

int cmd_verify(const VerifyConfig& cfg) {
    std::vector<std::string> order;
    if (int rc = resolve_suites(cfg, order); rc != exit_ok) return rc;

    gsp4::suites::SuiteOptions opt;
    opt.max_degree = cfg.max_degree;

    std::vector<std::future<std::vector<gsp4::report::CheckRecord>>> jobs;
    jobs.reserve(order.size());
    for (const auto& name : order) {
        jobs.push_back(std::async(std::launch::async, [name, opt] {
            return gsp4::suites::run_suite(name, opt);
        }));
    }

    gsp4::report::Report rep;
    try {
        for (auto& j : jobs) {
            auto checks = j.get();
            rep.checks.insert(rep.checks.end(), checks.begin(), checks.end());
        }
    } catch (const std::exception& e) {
        std::cerr << "gsp4cert: suite execution failed: " << e.what() << "\n";
        return exit_usage;
    }

    std::string serialized = gsp4::report::to_string(rep);
    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path);
        if (!out) {
            std::cerr << "gsp4cert: cannot write " << cfg.out_path << "\n";
            return exit_usage;
        }
        out << serialized;
        std::cout << (rep.all_pass() ? "pass" : "fail") << ": "
                  << rep.checks.size() - rep.failed_count() << "/"
                  << rep.checks.size() << " checks, report written to "
                  << cfg.out_path << "\n";
    } else {
        std::cout << serialized;
    }
    return rep.all_pass() ? exit_ok : exit_check_failed;
}

nlohmann::ordered_json structure_dump() {
    nlohmann::ordered_json doc;
    doc["schema"] = "1";

    auto basis_entry = [](size_t k) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        const auto& m = gsp4::lie::basis()[k];
        for (size_t i = 0; i < 4; ++i) {
            auto row = nlohmann::ordered_json::array();
            for (size_t j = 0; j < 4; ++j) row.push_back(m(i, j).to_string());
            rows.push_back(row);
        }
        return rows;
    };
    nlohmann::ordered_json basis;
    for (size_t k = 0; k < gsp4::lie::basis_count; ++k) {
        basis[gsp4::lie::basis_name(k)] = basis_entry(k);
    }
    doc["basis"] = basis;

    nlohmann::ordered_json b0;
    const char* names[6] = {"a", "h", "n0", "n1", "n2", "n3"};
    auto span = gsp4::lie::b0_basis();
    for (size_t i = 0; i < 6; ++i) {
        for (size_t j = i + 1; j < 6; ++j) {
            auto w = gsp4::lie::bracket(span[i], span[j]);
            if (w.is_zero()) continue;
            auto c = gsp4::lie::to_coords(w);
            nlohmann::ordered_json entry;
            for (size_t k = 0; k < 6; ++k) {
                if (!c[k].is_zero()) entry[names[k]] = c[k].to_string();
            }
            doc["b0_brackets"][std::string(names[i]) + "," + names[j]] = entry;
        }
    }

    nlohmann::ordered_json frame;
    for (const auto& [name, w] : gsp4::lie::frame_table()) {
        nlohmann::ordered_json entry;
        entry["weight"] = w.to_string();
        auto c = gsp4::lie::to_coords(gsp4::lie::frame_vector(name));
        nlohmann::ordered_json coords;
        for (size_t k = 0; k < gsp4::lie::basis_count; ++k) {
            if (!c[k].is_zero())
                coords[gsp4::lie::basis_name(k)] = c[k].to_string();
        }
        entry["coords"] = coords;
        frame[name] = entry;
    }
    doc["frame_vectors"] = frame;

    nlohmann::ordered_json lb;
    const auto& lnames = gsp4::uea::letter_names();
    for (size_t i = 0; i < gsp4::uea::letter_count; ++i) {
        for (size_t j = i + 1; j < gsp4::uea::letter_count; ++j) {
            const auto& sc = gsp4::uea::bracket_letters(i, j);
            nlohmann::ordered_json entry;
            for (size_t k = 0; k < gsp4::uea::letter_count; ++k) {
                if (!sc[k].is_zero()) entry[lnames[k]] = sc[k].to_string();
            }
            if (!entry.empty())
                lb[lnames[i] + "," + lnames[j]] = entry;
        }
    }
    doc["letter_brackets"] = lb;
    return doc;
}

nlohmann::ordered_json uea_dump() {
    nlohmann::ordered_json doc;
    doc["schema"] = "1";
    doc["beta_pairing"] = gsp4::uea::beta_value().to_string();
    doc["casimir"] = gsp4::uea::casimir().to_string();

    nlohmann::ordered_json mus = nlohmann::ordered_json::array();
    for (long j = 0; j <= 5; ++j) mus.push_back(gsp4::uea::mu(j).to_string());
    doc["mu"] = mus;

    nlohmann::ordered_json cs;
    for (long i = 0; i <= 6; ++i) {
        cs["C" + std::to_string(i)] = gsp4::uea::c_polynomial(i).to_string();
    }
    doc["c_polynomials"] = cs;
    return doc;
}

int cmd_dump(const std::string& dir) {
    for (const auto& [file, doc] :
         {std::pair<std::string, nlohmann::ordered_json>{"structure.json",
                                                         structure_dump()},
          {"uea.json", uea_dump()}}) {
        std::string path = dir + "/" + file;
        std::ofstream out(path);
        if (!out) {
            std::cerr << "gsp4cert: cannot write " << path << "\n";
            return exit_usage;
        }
        out << doc.dump(2) << "\n";
    }
    std::cout << "dump written to " << dir << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for the GSp(4) period computations"};
    app.require_subcommand(1);

    VerifyConfig cfg;
    std::string config_path;
    std::vector<std::string> suite_flags;
    std::string out_flag;
    long max_degree_flag = -1;

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--config", config_path, "JSON configuration file");
    verify->add_option("--suite", suite_flags,
                       "suite to run (repeatable; overrides the config list)");
    verify->add_option("--out", out_flag, "report output path");
    verify->add_option("--max-degree", max_degree_flag,
                       "degree budget for the algebraic suites");

    std::string dump_dir;
    CLI::App* dump = app.add_subcommand("dump", "write structure dumps");
    dump->add_option("--out", dump_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    if (verify->parsed()) {
        if (!config_path.empty()) {
            if (int rc = load_config(config_path, cfg); rc != exit_ok)
                return rc;
        }
        if (!suite_flags.empty()) {
            cfg.suites = suite_flags;
            cfg.suites_listed = true;
        }
        if (!out_flag.empty()) cfg.out_path = out_flag;
        if (max_degree_flag >= 0) cfg.max_degree = max_degree_flag;
        return cmd_verify(cfg);
    }
    return cmd_dump(dump_dir);
}
