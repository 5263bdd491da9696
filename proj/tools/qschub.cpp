// qschub: products, index correspondences and verification suites from the
// command line.  Exit status: 0 success, 1 verification failure, 2 usage or
// domain error.

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qschub/errors.hpp"
#include "qschub/io.hpp"
#include "qschub/maps.hpp"
#include "qschub/oracle/quantum_fl.hpp"
#include "qschub/oracle/quantum_gr.hpp"
#include "qschub/verify.hpp"

using namespace qschub;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct ProductArgs {
    int m = 0;
    int n = 0;
    std::string a, b;
    std::string method = "bcff";
    bool pretty = false;
};

struct MapArgs {
    std::string which;
    std::string json;
    bool from_stdin = false;
    bool pretty = false;
    std::optional<int> m, n, d, k;
    std::string lambda, mu, nu, eta, u, v, w, deg;
};

struct VerifyArgs {
    std::string suite;
    int n = 0;
    int threads = 0;
};

int run_product_gr(const ProductArgs& args) {
    const RectContext ctx = RectContext::from_mn(args.m, args.n);
    const Partition a = parse_partition(args.a);
    const Partition b = parse_partition(args.b);
    const GrTable table = args.method == "pieri" ? quantum_product_pieri(a, b, ctx)
                                                 : quantum_product_gr(a, b, ctx);
    std::cout << (args.pretty ? to_pretty(table) : to_json(table, ctx) + "\n");
    return 0;
}

int run_product_fl(const ProductArgs& args) {
    const Permutation a = parse_permutation(args.a);
    const Permutation b = parse_permutation(args.b);
    if (a.n() != args.n || b.n() != args.n)
        throw DomainError("permutations must have size n = " + std::to_string(args.n));
    const FlTable& table = quantum_product_fl(a, b);
    std::cout << (args.pretty ? to_pretty(table) : to_json(table, args.n) + "\n");
    return 0;
}

IndexRecord read_record(const MapArgs& args) {
    if (args.from_stdin) {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        return parse_index_record(text);
    }
    if (!args.json.empty()) return parse_index_record(args.json);

    auto need = [](const std::optional<int>& v, const char* flag) {
        if (!v) throw ParseError(std::string("missing ") + flag);
        return *v;
    };
    if (args.which == "sd" || args.which == "pc" || args.which == "gr") {
        return GrIndex(parse_partition(args.lambda), parse_partition(args.mu), parse_partition(args.nu),
                       need(args.d, "--d"),
                       RectContext::from_mn(need(args.m, "--m"), need(args.n, "--n")));
    }
    if (args.which == "t" || args.which == "flinv") {
        return FlIndex(parse_permutation(args.u), parse_permutation(args.v), parse_permutation(args.w),
                       parse_degree(args.deg));
    }
    const int k = args.k ? *args.k : need(args.n, "--n or --k") - 1;
    AffRecord rec{AffIndex(parse_partition(args.lambda), parse_partition(args.mu),
                           parse_partition(args.eta), k),
                  std::nullopt};
    if (args.m && args.n) rec.ctx = RectContext::from_mn(*args.m, *args.n);
    return rec;
}

template <class T>
const T& expect_kind(const IndexRecord& rec, const char* kind, const std::string& which) {
    if (const T* x = std::get_if<T>(&rec)) return *x;
    throw DomainError("map " + which + " expects a " + kind + " record");
}

int run_map(MapArgs args) {
    const IndexRecord rec = read_record(args);
    IndexRecord out = rec;
    const std::string& which = args.which;
    if (which == "sd") {
        out = gamma_sd(expect_kind<GrIndex>(rec, "gr", which));
    } else if (which == "pc") {
        out = psi_pc(expect_kind<GrIndex>(rec, "gr", which));
    } else if (which == "t") {
        out = gamma_t(expect_kind<FlIndex>(rec, "fl", which));
    } else if (which == "gr") {
        const GrIndex& x = expect_kind<GrIndex>(rec, "gr", which);
        out = AffRecord{phi_gr(x), x.ctx()};
    } else if (which == "fl") {
        const AffRecord& a = expect_kind<AffRecord>(rec, "aff", which);
        std::optional<RectContext> ctx = a.ctx;
        if (args.m && args.n) ctx = RectContext::from_mn(*args.m, *args.n);
        if (!ctx) throw DomainError("map fl needs the rectangle: pass --m and --n");
        out = phi_fl(a.index, *ctx);
    } else {
        out = AffRecord{phi_fl_inv(expect_kind<FlIndex>(rec, "fl", which)), std::nullopt};
    }
    std::cout << (args.pretty ? to_pretty(out) : to_json(out) + "\n");
    return 0;
}

void print_report(const SuiteReport& rep) {
    nlohmann::ordered_json j;
    j["suite"] = rep.suite;
    j["n"] = rep.bound;
    j["checked"] = rep.checked;
    j["failures"] = rep.failures;
    j["seconds"] = rep.seconds;
    std::cout << j.dump() << std::endl;
}

int run_verify(const VerifyArgs& args) {
    VerifyOptions opts;
    opts.threads = args.threads;
    opts.sink = [](const std::string& line) { std::cerr << "FAIL " << line << std::endl; };

    std::vector<SuiteReport> reports;
    if (args.suite == "pentagon") reports.push_back(verify_pentagon(args.n, opts));
    else if (args.suite == "pc-numeric") reports.push_back(verify_pc_numeric(args.n, opts));
    else if (args.suite == "sd-numeric") reports.push_back(verify_sd_numeric(args.n, opts));
    else if (args.suite == "t-numeric") reports.push_back(verify_t_numeric(args.n, opts));
    else if (args.suite == "lift") reports.push_back(verify_lift(args.n, opts));
    else reports = verify_props(args.n, opts);

    bool ok = true;
    for (const SuiteReport& rep : reports) {
        print_report(rep);
        ok = ok && rep.ok();
    }
    return ok ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Schubert calculus index correspondences and coefficient oracles"};
    app.require_subcommand(1);

    ProductArgs prod;
    auto* product = app.add_subcommand("product", "Expand a product of two Schubert classes");
    product->require_subcommand(1);
    auto* pgr = product->add_subcommand("gr", "Product in QH*(Gr(m,n))");
    pgr->add_option("--m", prod.m, "Subspace dimension")->required()->check(CLI::PositiveNumber);
    pgr->add_option("--n", prod.n, "Ambient dimension")->required()->check(CLI::PositiveNumber);
    pgr->add_option("--a", prod.a, "First partition, e.g. 2,2,1")->required();
    pgr->add_option("--b", prod.b, "Second partition")->required();
    pgr->add_option("--method", prod.method, "bcff or pieri")->check(CLI::IsMember({"bcff", "pieri"}));
    pgr->add_flag("--pretty", prod.pretty, "Human-readable output");
    auto* pfl = product->add_subcommand("fl", "Product in QH*(Fl_n)");
    pfl->add_option("--n", prod.n, "Ambient dimension")
        ->required()
        ->check(CLI::Range(1, kMaxFlagN));
    pfl->add_option("--a", prod.a, "First permutation, e.g. 13245 or 1,3,2,4,5")->required();
    pfl->add_option("--b", prod.b, "Second permutation")->required();
    pfl->add_flag("--pretty", prod.pretty, "Human-readable output");

    MapArgs margs;
    auto* map = app.add_subcommand("map", "Apply an index correspondence");
    map->add_option("which", margs.which, "sd, pc, t, gr, fl or flinv")
        ->required()
        ->check(CLI::IsMember({"sd", "pc", "t", "gr", "fl", "flinv"}));
    map->add_option("--json", margs.json, "Input index record as JSON");
    map->add_flag("--stdin", margs.from_stdin, "Read the input record from standard input");
    map->add_flag("--pretty", margs.pretty, "Human-readable output");
    map->add_option("--m", margs.m);
    map->add_option("--n", margs.n);
    map->add_option("--k", margs.k);
    map->add_option("--d", margs.d, "Integer degree (gr records)");
    map->add_option("--lambda", margs.lambda);
    map->add_option("--mu", margs.mu);
    map->add_option("--nu", margs.nu);
    map->add_option("--eta", margs.eta);
    map->add_option("--u", margs.u);
    map->add_option("--v", margs.v);
    map->add_option("--w", margs.w);
    map->add_option("--deg", margs.deg, "Degree vector (fl records)");

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
    verify->add_option("suite", vargs.suite, "pentagon, pc-numeric, sd-numeric, t-numeric, props or lift")
        ->required()
        ->check(CLI::IsMember({"pentagon", "pc-numeric", "sd-numeric", "t-numeric", "props", "lift"}));
    verify->add_option("--n", vargs.n, "Largest n to enumerate")->required()->check(CLI::Range(2, 16));
    verify->add_option("--threads", vargs.threads, "Worker threads (default: QSCHUB_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (product->parsed()) return pgr->parsed() ? run_product_gr(prod) : run_product_fl(prod);
        if (map->parsed()) return run_map(margs);
        return run_verify(vargs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return kExitUsage;
    }
}
