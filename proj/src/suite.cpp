#include "minorsign/suite.hpp"

#include <sstream>

namespace minorsign {

int SuiteResult::witnesses(MatrixClass c, int n) const {
    int total = 0;
    for (const SuiteCombo& combo : combos)
        if (combo.cls == c && combo.n == n) total += combo.found;
    return total;
}

SuiteResult run_suite(const SuiteOptions& options,
                      const std::function<void(const Matrix&, const ConsistencyReport&)>& hook) {
    SuiteResult result;
    result.options = options;
    ClassifyOptions copts{options.cap};

    std::uint64_t stream = 0;
    for (const MatrixClass& cls : all_classes()) {
        for (int n = 1; n <= options.n_max; ++n) {
            for (bool symmetric : {false, true}) {
                int want = (options.per_class + (symmetric ? 0 : 1)) / 2;
                SuiteCombo combo;
                combo.cls = cls;
                combo.n = n;
                combo.symmetric = symmetric;

                GenSpec spec;
                spec.target = cls;
                spec.n = n;
                spec.symmetric = symmetric;
                spec.seed = derive_seed(options.seed, stream++);
                spec.count = want;
                spec.max_trials = options.trials_factor * std::max(want, 1);
                GenResult gen = generate(spec, copts);

                combo.found = static_cast<int>(gen.matrices.size());
                for (const Matrix& m : gen.matrices) {
                    ConsistencyReport report = check_consistency(m, copts);
                    ++result.matrices_checked;
                    if (hook) hook(m, report);
                    if (!report.consistent) {
                        ++combo.inconsistent;
                        ++result.inconsistencies;
                        if (result.failures.size() < 10) {
                            std::ostringstream os;
                            os << "class=" << cls.name() << " n=" << n
                               << (symmetric ? " symmetric" : " general") << " roots " << report.roots;
                            result.failures.push_back(os.str());
                        }
                    }
                }
                result.combos.push_back(combo);
            }
        }
    }
    return result;
}

std::string render_suite_summary(const SuiteResult& result) {
    std::ostringstream os;
    os << "suite: n-max " << result.options.n_max << ", per-class " << result.options.per_class << ", seed "
       << result.options.seed << ", cap " << result.options.cap << "\n";

    os << "class        ";
    for (int n = 1; n <= result.options.n_max; ++n) os << "  n=" << n << "   ";
    os << "\n";
    for (const MatrixClass& cls : all_classes()) {
        std::string name = cls.name();
        os << name << std::string(name.size() < 13 ? 13 - name.size() : 1, ' ');
        for (int n = 1; n <= result.options.n_max; ++n) {
            int found = 0, bad = 0;
            for (const SuiteCombo& combo : result.combos)
                if (combo.cls == cls && combo.n == n) {
                    found += combo.found;
                    bad += combo.inconsistent;
                }
            std::ostringstream cell;
            cell << found;
            if (bad > 0) cell << "!" << bad;
            std::string s = cell.str();
            os << s << std::string(s.size() < 7 ? 7 - s.size() : 1, ' ');
        }
        os << "\n";
    }

    std::vector<std::string> gaps;
    for (const SuiteCombo& combo : result.combos)
        if (combo.found == 0) {
            std::ostringstream g;
            g << combo.cls.name() << " n=" << combo.n << (combo.symmetric ? " symmetric" : " general");
            gaps.push_back(g.str());
        }
    if (!gaps.empty()) {
        os << "no witnesses found (" << gaps.size() << " combos):";
        size_t shown = 0;
        for (const std::string& g : gaps) {
            if (shown++ == 12) {
                os << " ...";
                break;
            }
            os << " [" << g << "]";
        }
        os << "\n";
    }

    os << "matrices checked: " << result.matrices_checked << "\n";
    os << "inconsistencies: " << result.inconsistencies << "\n";
    for (const std::string& f : result.failures) os << "  INCONSISTENT " << f << "\n";
    return os.str();
}

}  // namespace minorsign
