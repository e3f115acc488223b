// Command-line front end: enumerate partition classes, compute signatures,
// expand the exact q-series, inspect the hypergraphs, and run the identity
// verifiers. All results go to stdout deterministically; timings go to stderr.
//
// Exit codes: 0 success / verification passed; 1 verification failed;
// 2 bad flags or parameter violations; 3 partition not neighborly;
// 4 signature methods disagree.

#include "gordonlab/gordonlab.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace gordonlab;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitNotNeighborly = 3;
constexpr int kExitMethodMismatch = 4;

struct Options {
    std::string command;

    int n = 0;
    std::string cls = "all";
    int r = 0;
    int i = 0;
    int trunc = 0;
    int max_level = 0;
    bool infinite = false;
    std::string partition_text;
    std::string interp_name = "induced";
    std::string method = "dp";
    std::string which;
    std::string identity;
    std::string format;
    std::string cache_dir;
    int cases = 50;
    std::uint64_t seed = 20240917;
};

PartitionClass make_class(const std::string& name, int r, int i) {
    if (name == "all") return PartitionClass::all();
    if (name == "neighborly") return PartitionClass::neighborly(r, i);
    if (name == "gordon-b") return PartitionClass::gordon_b(r, i);
    if (name == "gordon-a") return PartitionClass::gordon_a(r, i);
    if (name == "distinct-r") return PartitionClass::distinct_r(r, i);
    throw std::invalid_argument("unknown class: '" + name + "'");
}

std::string csv_escape(const std::string& field) {
    return '"' + field + '"';
}

int cmd_enumerate(const Options& opt) {
    PartitionClass cls = make_class(opt.cls, opt.r, opt.i);
    Interpretation interp = parse_interpretation(opt.interp_name);
    std::vector<Partition> members = enumerate_class(opt.n, cls, interp);

    if (opt.format == "json") {
        Json j{{"n", opt.n}, {"class", cls.name()}};
        if (cls.tag != PartitionClass::Tag::All) {
            j["r"] = cls.r;
            j["i"] = cls.i;
        }
        if (cls.tag == PartitionClass::Tag::Neighborly) j["interp"] = to_string(interp);
        j["count"] = members.size();
        Json list = Json::array();
        for (const Partition& p : members) list.push_back(partition_to_json(p));
        j["partitions"] = std::move(list);
        std::cout << j.dump(2) << '\n';
    } else if (opt.format == "csv") {
        std::cout << "partition\n";
        for (const Partition& p : members) std::cout << csv_escape(p.to_string()) << '\n';
    } else {
        for (const Partition& p : members) std::cout << p.to_string() << '\n';
        std::cout << "count: " << members.size() << '\n';
    }
    return kExitOk;
}

int cmd_signature(const Options& opt) {
    if (opt.method != "dp" && opt.method != "brute" && opt.method != "both")
        throw std::invalid_argument("unknown method: '" + opt.method + "' (expected dp|brute|both)");
    Partition p = parse_partition(opt.partition_text);
    Interpretation interp = parse_interpretation(opt.interp_name);
    detail::check_ri(opt.r, opt.i);

    if (!is_neighborly(p, opt.r, opt.i, interp)) {
        std::cerr << "partition " << p.to_string() << " is not (" << opt.r << "," << opt.i
                  << ")-neighborly under the " << to_string(interp) << " reading\n";
        return kExitNotNeighborly;
    }

    std::vector<SignatureResult> results;
    if (opt.method == "brute" || opt.method == "both")
        results.push_back(signature_of_partition(p, opt.r, opt.i, interp, SignatureMethod::BruteForce));
    if (opt.method == "dp" || opt.method == "both")
        results.push_back(signature_of_partition(p, opt.r, opt.i, interp, SignatureMethod::LevelDP));

    bool agree = true;
    for (const SignatureResult& res : results)
        if (res.value != results.front().value) agree = false;

    if (opt.format == "json") {
        Json j{{"partition", partition_to_json(p)},
               {"r", opt.r},
               {"i", opt.i},
               {"interp", to_string(interp)}};
        Json list = Json::array();
        for (const SignatureResult& res : results) {
            Json rj{{"method", to_string(res.method)},
                    {"delta", res.value},
                    {"edge_count", res.edge_count}};
            if (res.method == SignatureMethod::BruteForce)
                rj["spanning_subsets"] = res.spanning_subset_count;
            list.push_back(std::move(rj));
        }
        j["results"] = std::move(list);
        j["agreement"] = agree;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "partition: " << p.to_string() << '\n'
                  << "r: " << opt.r << '\n'
                  << "i: " << opt.i << '\n'
                  << "interp: " << to_string(interp) << '\n';
        for (const SignatureResult& res : results) {
            std::cout << "method: " << to_string(res.method) << '\n'
                      << "delta: " << res.value << '\n'
                      << "edges: " << res.edge_count << '\n';
            if (res.method == SignatureMethod::BruteForce)
                std::cout << "spanning_subsets: " << res.spanning_subset_count << '\n';
        }
        if (results.size() > 1) std::cout << "agreement: " << (agree ? "yes" : "no") << '\n';
    }
    return agree ? kExitOk : kExitMethodMismatch;
}

TruncatedSeries compute_series(const Options& opt, Interpretation interp) {
    const std::string& which = opt.which;
    if (which == "neighborly-signed") return neighborly_signed_series(opt.r, opt.i, opt.trunc, interp);
    if (which == "product") return product_side(opt.r, opt.i, opt.trunc);
    if (which == "ag-sum") return andrews_gordon_sum_side(opt.r, opt.i, opt.trunc);
    if (which == "ag-product") return andrews_gordon_product_side(opt.r, opt.i, opt.trunc);
    if (which == "gordon-b") return class_series(PartitionClass::gordon_b(opt.r, opt.i), opt.trunc);
    if (which == "gordon-a") return class_series(PartitionClass::gordon_a(opt.r, opt.i), opt.trunc);
    if (which == "distinct-r-signed") return signed_R_series(opt.r, opt.i, opt.trunc);
    if (which == "hp-p") return hp_P_ri(opt.r, opt.i, opt.trunc, interp);
    if (which == "hp-j") return hp_quotient_J(opt.r, opt.i, opt.trunc);
    throw std::invalid_argument("unknown series: '" + which + "'");
}

bool series_depends_on_interp(const std::string& which) {
    return which == "neighborly-signed" || which == "hp-p";
}

int cmd_series(const Options& opt) {
    Interpretation interp = parse_interpretation(opt.interp_name);

    std::optional<SeriesCache> cache;
    if (!opt.cache_dir.empty() || std::getenv("GORDONLAB_CACHE") != nullptr)
        cache.emplace(opt.cache_dir.empty() ? "." : opt.cache_dir);

    SeriesCacheKey key{opt.which, opt.r, opt.i, opt.trunc,
                       series_depends_on_interp(opt.which) ? to_string(interp) : ""};
    std::optional<TruncatedSeries> series;
    if (cache) {
        series = cache->load(key);
        if (series) std::cerr << "cache: hit\n";
    }
    if (!series) {
        series = compute_series(opt, interp);
        if (cache) {
            cache->store(key, *series);
            std::cerr << "cache: stored\n";
        }
    }

    if (opt.format == "csv") {
        std::cout << "n,coefficient\n";
        for (int n = 0; n <= series->trunc(); ++n)
            std::cout << n << ',' << series->coeff(n) << '\n';
    } else {
        std::cout << series_to_json(*series).dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_hypergraph(const Options& opt) {
    Interpretation interp = parse_interpretation(opt.interp_name);
    Hypergraph h;
    if (opt.infinite) {
        if (!opt.partition_text.empty())
            throw std::invalid_argument("--partition and --infinite are mutually exclusive");
        if (opt.max_level < 1) throw std::invalid_argument("--max-level must be >= 1");
        h = truncate_H_infinity(opt.r, opt.i, opt.max_level);
    } else {
        if (opt.partition_text.empty())
            throw std::invalid_argument("provide --partition or --infinite");
        Partition p = parse_partition(opt.partition_text);
        if (!satisfies_neighborly_bounds(p, opt.r, opt.i)) {
            std::cerr << "partition " << p.to_string() << " violates the multiplicity bounds for ("
                      << opt.r << "," << opt.i << ")\n";
            return kExitNotNeighborly;
        }
        h = build_H_lambda(p, opt.r, opt.i, interp);
    }

    if (opt.format == "json")
        std::cout << hypergraph_to_json(h).dump(2) << '\n';
    else
        std::cout << render_paoh(h);
    return kExitOk;
}

VerificationReport run_identity(const Options& opt, Interpretation interp) {
    const std::string& id = opt.identity;
    if (id == "main") return verify_main_identity(opt.r, opt.i, opt.trunc, interp);
    if (id == "gordon") return verify_gordon(opt.r, opt.i, opt.trunc);
    if (id == "andrews-gordon") return verify_andrews_gordon(opt.r, opt.i, opt.trunc);
    if (id == "hilbert-numerator") return verify_hilbert_numerator(opt.cases, opt.trunc, opt.seed);
    if (id == "polarization") return verify_polarization_relation(opt.r, opt.i, opt.trunc, interp);
    if (id == "dp-vs-brute") return verify_dp_vs_brute(opt.r, opt.i, opt.trunc, interp);
    throw std::invalid_argument("unknown identity: '" + id + "'");
}

int cmd_verify(const Options& opt) {
    Interpretation interp = parse_interpretation(opt.interp_name);
    VerificationReport report = run_identity(opt, interp);
    std::cerr << "elapsed_ms: " << report.elapsed_ms << '\n';

    if (opt.format == "json") {
        std::cout << report_to_json(report).dump(2) << '\n';
    } else {
        std::cout << "identity: " << report.identity << '\n';
        for (const auto& [k, v] : report.params) std::cout << k << ": " << v << '\n';
        std::cout << "rows: " << report.rows.size() << '\n';
        std::cout << "index lhs rhs equal\n";
        for (const ReportRow& row : report.rows)
            std::cout << row.index << ' ' << row.lhs << ' ' << row.rhs << ' '
                      << (row.equal ? "yes" : "NO") << '\n';
        if (report.pass) {
            std::cout << "result: PASS\n";
        } else {
            std::cout << "result: FAIL (first failing index: " << *report.first_failure << ")\n";
        }
    }
    return report.pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact partition/hypergraph identity toolkit"};
    app.require_subcommand(1);

    CLI::App* enumerate = app.add_subcommand("enumerate", "list a partition class at weight n");
    enumerate->add_option("--n", opt.n, "partition weight")->required();
    enumerate->add_option("--class", opt.cls,
                          "all|neighborly|gordon-b|gordon-a|distinct-r (default all)");
    enumerate->add_option("--r", opt.r, "gap parameter r");
    enumerate->add_option("--i", opt.i, "index parameter i (1 <= i <= r)");
    enumerate->add_option("--interp", opt.interp_name, "induced|definition (default induced)");
    enumerate->add_option("--format", opt.format, "text|json|csv (default text)");

    CLI::App* signature = app.add_subcommand("signature", "signed edge-cover count of a partition");
    signature->add_option("--partition", opt.partition_text, "comma-separated parts, e.g. 2,2,1")
        ->required();
    signature->add_option("--r", opt.r, "gap parameter r")->required();
    signature->add_option("--i", opt.i, "index parameter i")->required();
    signature->add_option("--interp", opt.interp_name, "induced|definition (default induced)");
    signature->add_option("--method", opt.method, "dp|brute|both (default dp)");
    signature->add_option("--format", opt.format, "text|json (default text)");

    CLI::App* series = app.add_subcommand("series", "expand an exact q-series");
    series->add_option("--which", opt.which,
                       "neighborly-signed|product|ag-sum|ag-product|gordon-b|gordon-a|"
                       "distinct-r-signed|hp-p|hp-j")
        ->required();
    series->add_option("--r", opt.r, "gap parameter r")->required();
    series->add_option("--i", opt.i, "index parameter i")->required();
    series->add_option("--trunc", opt.trunc, "truncation order N")->required();
    series->add_option("--interp", opt.interp_name, "induced|definition (default induced)");
    series->add_option("--format", opt.format, "json|csv (default json)");
    series->add_option("--cache-dir", opt.cache_dir,
                       "cache directory (GORDONLAB_CACHE overrides)");

    CLI::App* hypergraph = app.add_subcommand("hypergraph", "render a partition or family hypergraph");
    hypergraph->add_option("--partition", opt.partition_text, "comma-separated parts");
    hypergraph->add_flag("--infinite", opt.infinite, "truncate the doubly-indexed family instead");
    hypergraph->add_option("--max-level", opt.max_level, "levels kept with --infinite");
    hypergraph->add_option("--r", opt.r, "gap parameter r")->required();
    hypergraph->add_option("--i", opt.i, "index parameter i")->required();
    hypergraph->add_option("--interp", opt.interp_name, "induced|definition (default induced)");
    hypergraph->add_option("--format", opt.format, "paoh|json (default paoh)");

    CLI::App* verify = app.add_subcommand("verify", "check an identity coefficientwise");
    verify->add_option("--identity", opt.identity,
                       "main|gordon|andrews-gordon|hilbert-numerator|polarization|dp-vs-brute")
        ->required();
    verify->add_option("--r", opt.r, "gap parameter r");
    verify->add_option("--i", opt.i, "index parameter i");
    verify->add_option("--trunc", opt.trunc, "truncation order / max weight")->required();
    verify->add_option("--interp", opt.interp_name, "induced|definition (default induced)");
    verify->add_option("--cases", opt.cases, "random cases for hilbert-numerator (default 50)");
    verify->add_option("--seed", opt.seed, "random seed for hilbert-numerator");
    verify->add_option("--format", opt.format, "text|json (default text)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        auto started = std::chrono::steady_clock::now();
        int code = kExitBadArgs;
        if (enumerate->parsed()) code = cmd_enumerate(opt);
        else if (signature->parsed()) code = cmd_signature(opt);
        else if (series->parsed()) code = cmd_series(opt);
        else if (hypergraph->parsed()) code = cmd_hypergraph(opt);
        else if (verify->parsed()) code = cmd_verify(opt);
        if (!verify->parsed()) {
            std::chrono::duration<double, std::milli> took =
                std::chrono::steady_clock::now() - started;
            std::cerr << "elapsed_ms: " << took.count() << '\n';
        }
        return code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotNeighborly;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    }
}
