// Command-line front end: classification, fusion, decomposition, twisted
// weights, and the verification suites, with table or JSON output and an
// optional persistent gram-rank cache.
#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <memory>

#include "kleinorb/gram_cache.hpp"
#include "kleinorb/json_io.hpp"

using namespace kleinorb;

namespace {

struct Options {
    std::string cache_dir;
    std::string format = "table";
    long k = 1, m = 4, i = 0;
    int r = -1, depth = -1;
    std::string a, b;
};

void emit(const Json& j, const Options& opt, const std::function<void(const Json&)>& table) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        table(j);
}

void classify_table(const Json& j) {
    std::cout << "irreducible modules of L(" << j["k"] << ",0)^K: " << j["count"] << "\n";
    for (const auto& e : j["modules"])
        std::cout << "  " << e["label"].get<std::string>() << "  weight "
                  << e["weight"].get<std::string>() << "  top_dim " << e["top_dim"]
                  << "  generator " << e["generator"].get<std::string>() << "\n";
}

void commutant_table(const Json& j) {
    std::cout << "irreducible commutant modules at m = " << j["m"] << ": " << j["count"] << "\n";
    for (const auto& e : j["modules"])
        std::cout << "  " << e["type"].get<std::string>() << "  " << e["label"].get<std::string>()
                  << "  weight " << e["weight"].get<std::string>() << "  top_dim " << e["top_dim"]
                  << "\n";
    for (const auto& f : j["flags"]) std::cout << "  flag: " << f.get<std::string>() << "\n";
}

void fuse_table(const Json& j) {
    const auto& r = j["result"];
    if (r.empty()) {
        std::cout << "0\n";
        return;
    }
    for (std::size_t t = 0; t < r.size(); ++t)
        std::cout << (t ? " + " : "") << r[t].get<std::string>();
    std::cout << "\n";
}

void decompose_table(const Json& j) {
    std::cout << "isotypic dimensions of L(" << j["k"] << "," << j["i"] << ") by degree\n  deg";
    for (const auto& c : j["columns"]) std::cout << "  " << c.get<std::string>();
    std::cout << "\n";
    int d = 0;
    for (const auto& row : j["dims"]) {
        std::cout << "  " << d++ << "   ";
        for (const auto& v : row) std::cout << "  " << v;
        std::cout << "\n";
    }
}

void twist_table(const Json& j) {
    std::cout << "sigma_" << j["r"] << "-twist of L(" << j["k"] << "," << j["i"]
              << "), lowest weight " << j["base_weight"].get<std::string>() << "\n";
    for (const auto& c : j["components"]) {
        std::cout << "  component " << c["component"].get<std::string>() << "  lowest "
                  << c["lowest_weight"].get<std::string>() << "  dims";
        for (const auto& d : c["dims"])
            std::cout << "  [+" << d["offset"].get<std::string>() << "] " << d["dim"];
        std::cout << "\n";
    }
}

void report_table(const Json& j) {
    if (j.contains("checks")) {
        for (const auto& c : j["checks"]) {
            std::cout << "  " << (c["pass"].get<bool>() ? "pass" : "FAIL") << "  "
                      << c["name"].get<std::string>();
            auto ce = c["counterexample"].get<std::string>();
            if (!ce.empty()) std::cout << "  (" << ce << ")";
            std::cout << "\n";
        }
    }
    for (const char* key : {"commutative", "associative", "generators_fixed"})
        if (j.contains(key)) std::cout << "  " << key << ": " << j[key] << "\n";
    if (j.contains("unit")) std::cout << "  unit: " << j["unit"].get<std::string>() << "\n";
    if (j.contains("simple_currents")) {
        std::cout << "  simple currents:";
        for (const auto& s : j["simple_currents"]) std::cout << " " << s.get<std::string>();
        std::cout << "\n";
    }
    if (j.contains("span_dims")) {
        std::cout << "  span dims: ";
        for (const auto& v : j["span_dims"]) std::cout << " " << v;
        std::cout << "\n  fixed dims:";
        for (const auto& v : j["fixed_dims"]) std::cout << " " << v;
        std::cout << "\n";
    }
    if (j.contains("checked")) {
        std::cout << "  descriptors checked: " << j["checked"] << "\n";
        for (const auto& s : j["mismatches"])
            std::cout << "  mismatch: " << s.get<std::string>() << "\n";
    }
    std::cout << "ok: " << (j["ok"].get<bool>() ? "true" : "false") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact representation engine for Klein-group orbifolds of affine sl2"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--cache-dir", opt.cache_dir, "gram-rank cache directory")
        ->envname("KLEINORB_CACHE_DIR");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    auto* classify = app.add_subcommand("classify", "list the irreducible orbifold modules");
    classify->add_option("--k", opt.k, "level")->required()->check(CLI::Range(1L, 1000L));

    auto* commutant = app.add_subcommand("commutant", "list the irreducible commutant modules");
    commutant->add_option("--m", opt.m, "rank parameter")->required()->check(CLI::Range(4L, 1000L));

    bool fuse_all = false;
    auto* fusecmd = app.add_subcommand("fuse", "fuse two Z2-orbifold labels");
    fusecmd->add_option("--k", opt.k, "level")->required()->check(CLI::Range(1L, 1000L));
    auto* fa = fusecmd->add_option("--a", opt.a, "left label, e.g. U(1,+)");
    auto* fb = fusecmd->add_option("--b", opt.b, "right label, e.g. T(0,-)");
    fusecmd->add_flag("--all", fuse_all, "dump the full fusion table")
        ->excludes(fa)
        ->excludes(fb);
    fb->needs(fa);

    auto* decompose = app.add_subcommand("decompose", "K-isotypic dimensions of L(k,i)");
    decompose->add_option("--k", opt.k, "level")->required()->check(CLI::Range(1L, 1000L));
    decompose->add_option("--i", opt.i, "module index")->required();
    decompose->add_option("--depth", opt.depth, "degree bound")->check(CLI::Range(0, 12));

    auto* twist = app.add_subcommand("twist", "twisted component dimensions");
    twist->add_option("--k", opt.k, "level")->required()->check(CLI::Range(1L, 1000L));
    twist->add_option("--i", opt.i, "module index")->required();
    twist->add_option("--r", opt.r, "twist direction")->check(CLI::Range(1, 3));
    twist->add_option("--depth", opt.depth, "twisted-degree bound")->check(CLI::Range(0, 12));

    auto* vring = app.add_subcommand("verify-ring", "fusion ring axioms");
    vring->add_option("--k", opt.k, "level")->required()->check(CLI::Range(1L, 12L));

    auto* vfermion = app.add_subcommand("verify-fermion", "fermionic realization checks");
    vfermion->add_option("--m", opt.m, "rank parameter")->check(CLI::Range(4L, 16L));
    vfermion->add_option("--depth", opt.depth, "degree bound")->check(CLI::Range(0, 4));

    auto* vgen = app.add_subcommand("verify-generators", "orbifold generator-set check");
    vgen->add_option("--k", opt.k, "level")->required()->check(CLI::Range(1L, 6L));
    vgen->add_option("--r", opt.r, "twist direction, 0 for all")->check(CLI::Range(0, 3));
    vgen->add_option("--depth", opt.depth, "degree bound")->check(CLI::Range(0, 6));

    auto* xcheck = app.add_subcommand("cross-check", "descriptors against the engines");
    xcheck->add_option("--k", opt.k, "level")->required()->check(CLI::Range(1L, 8L));
    xcheck->add_option("--depth", opt.depth, "degree bound")->check(CLI::Range(0, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    }

    if (opt.depth < 0)
        opt.depth = (app.got_subcommand(vgen) || app.got_subcommand(xcheck)) ? 3 : 2;
    if (opt.r < 0) opt.r = app.got_subcommand(vgen) ? 0 : 1;

    RankCache ranks;
    std::unique_ptr<DiskRankStore> store;
    if (!opt.cache_dir.empty()) {
        store = std::make_unique<DiskRankStore>(opt.cache_dir);
        ranks.attach(store.get());
    }

    try {
        if (app.got_subcommand(classify)) {
            emit(classify_json(opt.k), opt, classify_table);
        } else if (app.got_subcommand(commutant)) {
            emit(commutant_json(opt.m), opt, commutant_table);
        } else if (app.got_subcommand(fusecmd)) {
            if (fuse_all) {
                Json j = fusion_table_json(opt.k);
                emit(j, opt, [](const Json& t) {
                    for (const auto& row : t["rows"]) {
                        std::cout << row["a"].get<std::string>() << " x "
                                  << row["b"].get<std::string>() << " = ";
                        const auto& result = row["result"];
                        for (std::size_t s = 0; s < result.size(); ++s)
                            std::cout << (s ? " + " : "") << result[s].get<std::string>();
                        std::cout << "\n";
                    }
                });
            } else {
                if (opt.a.empty() || opt.b.empty())
                    throw std::invalid_argument("fuse needs --a and --b (or --all)");
                Z2Label a = parse_z2_label(opt.a);
                Z2Label b = parse_z2_label(opt.b);
                emit(fuse_json(opt.k, a, b), opt, fuse_table);
            }
        } else if (app.got_subcommand(decompose)) {
            emit(decompose_json(opt.k, opt.i, opt.depth), opt, decompose_table);
        } else if (app.got_subcommand(twist)) {
            emit(twist_json(opt.k, opt.i, opt.r, opt.depth, ranks), opt, twist_table);
        } else if (app.got_subcommand(vring)) {
            Json j = ring_json(opt.k);
            emit(j, opt, report_table);
            if (!j["ok"].get<bool>()) return 1;
        } else if (app.got_subcommand(vfermion)) {
            Json j = fermion_json(opt.m, opt.depth);
            emit(j, opt, report_table);
            if (!j["ok"].get<bool>()) return 1;
        } else if (app.got_subcommand(vgen)) {
            bool all_ok = true;
            for (int r = 1; r <= 3; ++r) {
                if (opt.r != 0 && opt.r != r) continue;
                Json j = generators_json(opt.k, r, opt.depth);
                emit(j, opt, report_table);
                if (!j["ok"].get<bool>()) all_ok = false;
            }
            if (!all_ok) return 1;
        } else if (app.got_subcommand(xcheck)) {
            Json j = crosscheck_json(opt.k, opt.depth, ranks);
            emit(j, opt, report_table);
            if (!j["ok"].get<bool>()) return 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
