// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact arithmetic; the only tolerances here are the
// two wall-clock budgets, which are asserted as stated.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "minorsign/io.hpp"
#include "minorsign/suite.hpp"

using namespace minorsign;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Matrix random_rational_matrix(int n, SplitMix64& rng, bool symmetric) {
    std::vector<Rational> flat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (symmetric && j < i) {
                flat[static_cast<size_t>(i) * n + j] = flat[static_cast<size_t>(j) * n + i];
                continue;
            }
            long num = rng.next_in(-9, 9);
            long den = rng.next_in(0, 4) == 0 ? rng.next_in(2, 9) : 1;
            flat[static_cast<size_t>(i) * n + j] = Rational(num, den);
        }
    return Matrix(n, std::move(flat));
}

// Minor-family to sum-family lifts, asserted on every matrix the criteria touch.
bool inclusions_hold(const ClassSet& s, std::string& complaint) {
    const std::pair<Family, Family> lifts[] = {
        {Family::P, Family::Q}, {Family::N, Family::R}, {Family::PN, Family::QR}};
    for (auto [from, to] : lifts)
        for (Variant v : {Variant::strict, Variant::almost, Variant::weak, Variant::sub_zero}) {
            MatrixClass src{from, v}, dst{to, v};
            if (s.evaluated(src) && s.is_member(src) && !s.is_member(dst)) {
                complaint = src.name() + " without " + dst.name();
                return false;
            }
        }
    return true;
}

struct Corpus {
    std::vector<Matrix> matrices;
};

Corpus build_corpus(int count, int n_max, std::uint64_t seed) {
    Corpus corpus;
    SplitMix64 rng(seed);
    for (int i = 0; i < count; ++i) {
        int n = 1 + static_cast<int>(rng.next_in(0, n_max - 1));
        corpus.matrices.push_back(random_rational_matrix(n, rng, false));
    }
    return corpus;
}

long inclusion_failures = 0;
long inclusion_checked = 0;

void note_inclusions(const ClassSet& s) {
    ++inclusion_checked;
    std::string complaint;
    if (!inclusions_hold(s, complaint)) {
        ++inclusion_failures;
        if (inclusion_failures <= 3) std::cerr << "  inclusion violated: " << complaint << "\n";
    }
}

void criterion_1_and_2(const Corpus& corpus) {
    auto start = Clock::now();
    long route_mismatches = 0;
    long descartes_violations = 0;
    for (const Matrix& m : corpus.matrices) {
        MinorTable table = all_principal_minors(m);
        CharPoly via_minors = char_poly_from_minors(table);
        CharPoly via_faddeev = char_poly_faddeev(m);
        if (via_minors != via_faddeev) ++route_mismatches;

        Polynomial cp = via_faddeev.as_polynomial();
        DescartesBound bound = descartes_bounds(cp);
        RootCount rc = root_counts(cp);
        bool pos_ok = rc.pos <= bound.var_pos && (bound.var_pos - rc.pos) % 2 == 0;
        bool neg_ok = rc.neg <= bound.var_neg && (bound.var_neg - rc.neg) % 2 == 0;
        if (!pos_ok || !neg_ok) ++descartes_violations;

        note_inclusions(classify_with(m, table.sums, &table));
    }
    double elapsed = seconds_since(start);
    std::ostringstream d1;
    d1 << corpus.matrices.size() << " matrices, " << route_mismatches << " mismatches, " << elapsed << "s";
    report(1, "minor-sum and Faddeev-LeVerrier char-poly routes agree exactly, n in 1..7",
           route_mismatches == 0 && elapsed < 60.0, d1.str());
    std::ostringstream d2;
    d2 << descartes_violations << " violations";
    report(2, "verified root counts respect the sign-variation bound with matching parity",
           descartes_violations == 0, d2.str());
}

void criterion_3() {
    long violations = 0;
    SplitMix64 rng(20260808);
    const int count = 500;
    for (int i = 0; i < count; ++i) {
        int n = 1 + static_cast<int>(rng.next_in(0, 5));
        Matrix m = random_rational_matrix(n, rng, true);
        CharPoly cp = char_poly_faddeev(m);
        RootCount rc = root_counts(cp.as_polynomial());
        int var_pos = sign_variations(cp.coeffs);
        if (rc.nonreal != 0 || rc.pos != var_pos) ++violations;
        note_inclusions(classify(m));
    }
    std::ostringstream d;
    d << count << " symmetric matrices, " << violations << " violations";
    report(3, "symmetric matrices: no non-real eigenvalues and positive count = Var exactly",
           violations == 0, d.str());
}

void criterion_4() {
    auto start = Clock::now();
    SuiteOptions opts;
    opts.n_max = 6;
    opts.per_class = 200;
    opts.seed = 1;
    SuiteResult result = run_suite(opts, [](const Matrix&, const ConsistencyReport& r) {
        note_inclusions(r.classes);
    });
    double elapsed = seconds_since(start);

    bool coverage_ok = true;
    std::ostringstream missing;
    for (const char* name : {"p", "n", "pn", "q", "r", "qr", "almost-p", "almost-n", "almost-pn",
                             "almost-q", "almost-r", "almost-qr"})
        for (int n : {2, 3})
            if (result.witnesses(*MatrixClass::from_name(name), n) == 0) {
                coverage_ok = false;
                missing << " " << name << "@n=" << n;
            }
    for (const char* name : {"p0", "q0", "n0", "r0"})
        if (result.witnesses(*MatrixClass::from_name(name), 2) == 0) {
            coverage_ok = false;
            missing << " " << name << "@n=2";
        }

    std::ostringstream d;
    d << result.matrices_checked << " matrices, " << result.inconsistencies << " inconsistencies, "
      << elapsed << "s" << (coverage_ok ? "" : ", missing:" + missing.str());
    report(4, "suite at n-max 6, per-class 200: zero inconsistencies and full required coverage",
           result.inconsistencies == 0 && coverage_ok && elapsed < 300.0, d.str());
    for (const std::string& f : result.failures) std::cerr << "  " << f << "\n";
}

void criterion_5() {
    long violations = 0;
    int produced = 0;
    std::uint64_t stream = 0;
    for (int n : {2, 3, 4}) {
        GenSpec spec;
        spec.target = *MatrixClass::from_name("n");
        spec.n = n;
        spec.seed = derive_seed(99, stream++);
        spec.count = 70;
        GenResult gen = generate(spec);
        for (const Matrix& m : gen.matrices) {
            ++produced;
            auto inverse = m.inverse();
            if (!inverse) {
                ++violations;
                continue;
            }
            ClassSet inv_classes = classify(*inverse);
            note_inclusions(inv_classes);
            if (!inv_classes.is_member(*MatrixClass::from_name("almost-p"))) {
                ++violations;
                continue;
            }
            auto back = inverse->inverse();
            if (!back || !classify(*back).is_member(*MatrixClass::from_name("n"))) ++violations;
        }
    }
    std::ostringstream d;
    d << produced << " N-matrices, " << violations << " violations";
    report(5, "inverses of N-matrices are almost-P and invert back to N (n in 2..4)",
           produced >= 200 && violations == 0, d.str());
}

void criterion_6() {
    std::ostringstream d;
    d << inclusion_checked << " class sets checked, " << inclusion_failures << " violations";
    report(6, "P->Q, N->R, PN->QR inclusions on every matrix touched above", inclusion_failures == 0,
           d.str());
}

void criterion_7() {
    const char* golden_env = std::getenv("MINORSIGN_GOLDEN");
    std::string golden_dir = golden_env ? golden_env : "tests/golden";

    bool ok = true;
    std::string detail;

    Matrix worked = Matrix::from_rows({{-1, -2}, {-2, -1}});
    MinorTable table = all_principal_minors(worked);
    ok = ok && table.minor(IndexSet{{1}}) == Rational(-1) && table.minor(IndexSet{{2}}) == Rational(-1) &&
         table.minor(IndexSet{{1, 2}}) == Rational(-3);
    ConsistencyReport r = check_consistency(worked);
    ok = ok && r.char_poly.coeffs == std::vector<Rational>{1, 2, -3};
    ok = ok && r.roots.pos == 1 && r.roots.neg == 1 && r.roots.zero == 0 && r.consistent;
    for (const char* name : {"n", "weak-n", "n0", "r", "weak-r", "r0"})
        ok = ok && r.classes.is_member(*MatrixClass::from_name(name));

    // byte-exact against the committed golden report
    std::ifstream golden_in(golden_dir + "/worked_example_report.json", std::ios::binary);
    std::ifstream input_in(golden_dir + "/worked_example.json", std::ios::binary);
    if (!golden_in || !input_in) {
        ok = false;
        detail = "golden files missing under " + golden_dir;
    } else {
        std::ostringstream golden_buf, input_buf;
        golden_buf << golden_in.rdbuf();
        input_buf << input_in.rdbuf();
        MatrixDocument doc = read_matrix_document(input_buf.str());
        std::string produced = verify_report(doc, check_consistency(doc.to_matrix()), default_minor_cap).dump(2);
        produced += "\n";
        if (produced != golden_buf.str()) {
            ok = false;
            detail = "report does not match the golden file byte for byte";
        }
    }
    report(7, "worked 2x2 example: minors, char poly, classes, root counts, golden report", ok, detail);
}

void criterion_8() {
    SplitMix64 rng(5150);
    Matrix dense = random_rational_matrix(10, rng, false);
    auto start = Clock::now();
    ClassSet classes = classify(dense);
    double classify_elapsed = seconds_since(start);
    bool classify_ok = classify_elapsed < 1.0 && classes.not_evaluated.empty();

    GenSpec spec;
    spec.target = *MatrixClass::from_name("n");
    spec.n = 4;
    spec.seed = 8;
    spec.count = 10;
    start = Clock::now();
    GenResult gen = generate(spec);
    double hunt_elapsed = seconds_since(start);
    bool hunt_ok = static_cast<int>(gen.matrices.size()) == 10 && hunt_elapsed < 10.0;

    std::ostringstream d;
    d << "classify n=10: " << classify_elapsed << "s; 10 N-witnesses at n=4: " << hunt_elapsed << "s";
    report(8, "performance floor: n=10 classify under 1s, 10 N-witnesses at n=4 under 10s",
           classify_ok && hunt_ok, d.str());
}

}  // namespace

int main() {
    Corpus corpus = build_corpus(1000, 7, 424242);
    criterion_1_and_2(corpus);
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: " + std::to_string(failures) + " criteria FAILED\n");
    return failures == 0 ? 0 : 1;
}
