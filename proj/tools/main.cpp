// minorsign: classify square rational matrices by principal-minor signs,
// predict their real-eigenvalue counts, and verify the predictions by exact
// Sturm root counting.
//
// Exit codes: 0 ok/consistent, 1 expectation or consistency failure,
// 2 bad input, 3 minor-enumeration cap exceeded, 4 hunt ran out of trials.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "minorsign/io.hpp"
#include "minorsign/suite.hpp"

using namespace minorsign;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_cap = 3;
constexpr int exit_exhausted = 4;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path, 0, 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

DocumentFormat format_for(const std::string& path) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return DocumentFormat::csv;
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return DocumentFormat::json;
    return DocumentFormat::auto_detect;
}

int check_cap(int cap) {
    if (cap < 1 || cap > max_minor_cap) {
        std::cerr << "error: cap must be between 1 and " << max_minor_cap << "\n";
        return exit_bad_input;
    }
    return exit_ok;
}

int run_classify_cmd(const std::string& path, int cap, bool pretty) {
    MatrixDocument doc = read_matrix_document(slurp(path), format_for(path));
    Matrix m = doc.to_matrix();
    ClassifyOptions opts{cap};
    ClassifyRun run = run_classify(m, opts);
    if (pretty)
        std::cout << pretty_classify(doc, run, cap);
    else
        std::cout << classify_report(doc, run, cap).dump(2) << "\n";
    if (!run.classes.not_evaluated.empty()) return exit_cap;
    if (!expected_missing(doc, run.classes).empty()) return exit_violation;
    return exit_ok;
}

int run_verify_cmd(const std::string& path, int cap, bool pretty) {
    MatrixDocument doc = read_matrix_document(slurp(path), format_for(path));
    Matrix m = doc.to_matrix();
    ClassifyOptions opts{cap};
    ConsistencyReport report = check_consistency(m, opts);
    if (pretty)
        std::cout << pretty_verify(doc, report, cap);
    else
        std::cout << verify_report(doc, report, cap).dump(2) << "\n";
    if (!report.classes.not_evaluated.empty()) return exit_cap;
    if (!report.consistent) return exit_violation;
    if (!expected_missing(doc, report.classes).empty()) return exit_violation;
    return exit_ok;
}

struct HuntArgs {
    std::string class_name;
    int n = 2;
    int count = 1;
    std::uint64_t seed = 0;
    bool symmetric = false;
    long max_trials = 0;
    std::string range;
    long denominator = 1;
};

int run_hunt_cmd(const HuntArgs& args, int cap) {
    auto target = MatrixClass::from_name(args.class_name);
    if (!target) {
        std::cerr << "error: unknown class \"" << args.class_name << "\"; valid names:";
        for (const MatrixClass& c : all_classes()) std::cerr << " " << c.name();
        std::cerr << "\n";
        return exit_bad_input;
    }
    GenSpec spec;
    spec.target = *target;
    spec.n = args.n;
    spec.symmetric = args.symmetric;
    spec.seed = args.seed;
    spec.count = args.count;
    spec.max_trials = args.max_trials;
    spec.range.denominator = args.denominator;
    if (!args.range.empty()) {
        auto colon = args.range.find(':');
        if (colon == std::string::npos) {
            std::cerr << "error: --range wants LO:HI\n";
            return exit_bad_input;
        }
        auto lo = Rational::parse(args.range.substr(0, colon));
        auto hi = Rational::parse(args.range.substr(colon + 1));
        if (!lo || !hi || !(*lo < *hi)) {
            std::cerr << "error: --range wants rationals LO < HI\n";
            return exit_bad_input;
        }
        spec.range.lo = *lo;
        spec.range.hi = *hi;
    }

    GenResult result = generate(spec, ClassifyOptions{cap});
    Json out = Json::array();
    for (size_t i = 0; i < result.matrices.size(); ++i) {
        MatrixDocument doc = MatrixDocument::from_matrix(result.matrices[i]);
        std::ostringstream name;
        name << "hunt class=" << target->name() << " n=" << spec.n << " seed=" << spec.seed
             << " symmetric=" << (spec.symmetric ? 1 : 0) << " index=" << i;
        doc.name = name.str();
        doc.expected_classes = std::vector<MatrixClass>{*target};
        out.push_back(matrix_document_to_json(doc));
    }
    std::cout << out.dump(2) << "\n";
    if (result.exhausted) {
        std::cerr << "trials exhausted: " << result.matrices.size() << "/" << spec.count << " witnesses after "
                  << result.trials_used << " trials\n";
        return exit_exhausted;
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact principal-minor sign classes and real-eigenvalue counts"};
    app.require_subcommand(1);

    int cap = default_minor_cap;
    bool pretty = false;
    std::uint64_t seed = 0;
    app.add_option("--cap", cap, "minor-enumeration cap (env MINORSIGN_CAP)")
        ->envname("MINORSIGN_CAP");
    app.add_flag("--pretty", pretty, "human-readable output instead of JSON");
    auto* seed_opt = app.add_option("--seed", seed, "seed for randomized commands (hunt: 0, suite: 1)");

    std::string classify_path = "-";
    auto* classify_cmd = app.add_subcommand("classify", "class memberships and principal minors");
    classify_cmd->fallthrough();
    classify_cmd->add_option("path", classify_path, "matrix document (JSON or CSV); - for stdin");

    std::string verify_path = "-";
    auto* verify_cmd = app.add_subcommand("verify", "full consistency check against the predictions");
    verify_cmd->fallthrough();
    verify_cmd->add_option("path", verify_path, "matrix document (JSON or CSV); - for stdin");

    HuntArgs hunt;
    auto* hunt_cmd = app.add_subcommand("hunt", "generate verified witness matrices of a class");
    hunt_cmd->fallthrough();
    hunt_cmd->add_option("--class", hunt.class_name, "target class name")->required();
    hunt_cmd->add_option("--n", hunt.n, "dimension")->required();
    hunt_cmd->add_option("--count", hunt.count, "witnesses wanted");
    hunt_cmd->add_flag("--symmetric", hunt.symmetric, "require symmetric witnesses");
    hunt_cmd->add_option("--max-trials", hunt.max_trials, "trial budget (default 1000 per witness)");
    hunt_cmd->add_option("--range", hunt.range, "rejection-sampling entry range LO:HI (default -3:3)");
    hunt_cmd->add_option("--denominator", hunt.denominator, "entry denominator (default 1)");

    auto* table_cmd = app.add_subcommand("table", "the prediction table for symbolic n");
    table_cmd->fallthrough();

    SuiteOptions suite_opts;
    auto* suite_cmd = app.add_subcommand("suite", "generate witnesses of all classes and verify every prediction");
    suite_cmd->fallthrough();
    suite_cmd->add_option("--n-max", suite_opts.n_max, "largest dimension");
    suite_cmd->add_option("--per-class", suite_opts.per_class, "witnesses per class and dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_bad_input;
    }

    if (int rc = check_cap(cap); rc != exit_ok) return rc;

    try {
        if (*classify_cmd) return run_classify_cmd(classify_path, cap, pretty);
        if (*verify_cmd) return run_verify_cmd(verify_path, cap, pretty);
        if (*hunt_cmd) {
            if (seed_opt->count() > 0) hunt.seed = seed;
            return run_hunt_cmd(hunt, cap);
        }
        if (*table_cmd) {
            std::cout << render_prediction_table();
            return exit_ok;
        }
        if (*suite_cmd) {
            if (seed_opt->count() > 0) suite_opts.seed = seed;
            suite_opts.cap = cap;
            SuiteResult result = run_suite(suite_opts);
            std::cout << render_suite_summary(result);
            return result.inconsistencies == 0 ? exit_ok : exit_violation;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error";
        if (e.line() > 0) std::cerr << " at line " << e.line() << ", column " << e.column();
        std::cerr << ": " << e.what() << "\n";
        return exit_bad_input;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return exit_cap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
    return exit_bad_input;
}
