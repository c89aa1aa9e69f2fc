#include "minorsign/spectra.hpp"

#include <sstream>
#include <stdexcept>

namespace minorsign {

std::vector<SquarefreeFactor> squarefree_decompose(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("square-free decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (f.degree() == 0) return out;

    // Yun's algorithm over the monic normalization.
    Polynomial fm = f.monic();
    Polynomial fp = fm.derivative();
    Polynomial a = Polynomial::gcd(fm, fp);
    Polynomial b = Polynomial::divmod(fm, a).first;
    Polynomial c = Polynomial::divmod(fp, a).first;
    Polynomial d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Polynomial g = Polynomial::gcd(b, d);
        if (g.degree() > 0) out.push_back({g.monic(), i});
        b = Polynomial::divmod(b, g).first;
        c = Polynomial::divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

SturmChain SturmChain::build(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    SturmChain chain;
    chain.seq.push_back(f.primitive_part());
    Polynomial d = f.derivative();
    if (d.is_zero()) return chain;
    chain.seq.push_back(d.primitive_part());
    while (true) {
        const Polynomial& prev = chain.seq[chain.seq.size() - 2];
        const Polynomial& cur = chain.seq.back();
        Polynomial rem = Polynomial::divmod(prev, cur).second;
        if (rem.is_zero()) break;
        chain.seq.push_back((-rem).primitive_part());
    }
    return chain;
}

bool SturmChain::squarefree_input() const { return seq.back().degree() <= 0; }

namespace {

int variations_of(const std::vector<Sign>& signs) {
    int count = 0;
    Sign prev = Sign::zero;
    for (Sign s : signs) {
        if (s == Sign::zero) continue;
        if (prev != Sign::zero && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

int SturmChain::variations_at(const Rational& x) const {
    std::vector<Sign> signs;
    signs.reserve(seq.size());
    for (const Polynomial& p : seq) signs.push_back(p.eval(x).sign());
    return variations_of(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<Sign> signs;
    signs.reserve(seq.size());
    for (const Polynomial& p : seq) signs.push_back(p.leading().sign());
    return variations_of(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<Sign> signs;
    signs.reserve(seq.size());
    for (const Polynomial& p : seq) {
        Sign s = p.leading().sign();
        if (p.degree() % 2 != 0) s = -s;
        signs.push_back(s);
    }
    return variations_of(signs);
}

int SturmChain::count_roots(const Interval& interval) const {
    int at_lo = interval.lo ? variations_at(*interval.lo) : variations_at_neg_inf();
    int at_hi = interval.hi ? variations_at(*interval.hi) : variations_at_pos_inf();
    return at_lo - at_hi;
}

int count_real_roots(const Polynomial& f, const Interval& interval) {
    if (f.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    if (interval.lo && interval.hi && !(*interval.lo < *interval.hi))
        throw std::invalid_argument("empty interval");
    if (interval.lo && f.eval(*interval.lo).is_zero())
        throw std::logic_error("interval endpoint is a root of f");
    if (interval.hi && f.eval(*interval.hi).is_zero())
        throw std::logic_error("interval endpoint is a root of f");
    if (f.degree() == 0) return 0;
    SturmChain chain = SturmChain::build(f);
    if (!chain.squarefree_input()) throw std::logic_error("count_real_roots requires a square-free polynomial");
    return chain.count_roots(interval);
}

RootCount root_counts(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("root counts of the zero polynomial");
    RootCount rc;
    int n = f.degree();

    // Multiplicity of the root 0 = number of trailing zero coefficients.
    std::vector<Rational> c = f.coeffs();
    while (!c.empty() && c.back().is_zero()) {
        c.pop_back();
        ++rc.zero;
    }
    Polynomial g(std::move(c));
    if (g.degree() > 0) {
        for (const SquarefreeFactor& sf : squarefree_decompose(g)) {
            rc.pos += sf.multiplicity * count_real_roots(sf.factor, Interval::positive());
            rc.neg += sf.multiplicity * count_real_roots(sf.factor, Interval::negative());
        }
    }
    rc.nonreal = n - rc.pos - rc.neg - rc.zero;
    return rc;
}

std::ostream& operator<<(std::ostream& os, const RootCount& rc) {
    return os << "{pos " << rc.pos << ", neg " << rc.neg << ", zero " << rc.zero << ", nonreal "
              << rc.nonreal << "}";
}

// --- predictions -----------------------------------------------------------

std::string CountExpr::str() const {
    if (n_coeff == 0) return std::to_string(offset);
    std::string s = n_coeff == 1 ? "n" : std::to_string(n_coeff) + "n";
    if (offset > 0) s += "+" + std::to_string(offset);
    if (offset < 0) s += std::to_string(offset);
    return s;
}

std::string_view eigen_side_name(EigenSide s) {
    switch (s) {
        case EigenSide::positive: return "positive";
        case EigenSide::negative: return "negative";
        case EigenSide::non_negative: return "non negative";
        case EigenSide::non_positive: return "non positive";
    }
    return "?";
}

bool Outcome::matches(const RootCount& rc, int n) const {
    for (const OutcomeTerm& t : terms) {
        int have = 0;
        switch (t.side) {
            case EigenSide::positive: have = rc.pos; break;
            case EigenSide::negative: have = rc.neg; break;
            case EigenSide::non_negative: have = rc.pos + rc.zero; break;
            case EigenSide::non_positive: have = rc.neg + rc.zero; break;
        }
        int want = t.count.eval(n);
        if (t.at_most ? have > want : have != want) return false;
    }
    return true;
}

std::string Outcome::str(std::optional<int> n) const {
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " and ";
        const OutcomeTerm& t = terms[i];
        if (t.at_most) out += "<= ";
        out += n ? std::to_string(t.count.eval(*n)) : t.count.str();
        out += " ";
        out += eigen_side_name(t.side);
    }
    return out;
}

bool EigenPrediction::matches(const RootCount& rc) const {
    for (const Outcome& o : allowed)
        if (o.matches(rc, n)) return true;
    return false;
}

namespace {

Outcome outcome(std::vector<OutcomeTerm> terms) { return Outcome{std::move(terms)}; }

OutcomeTerm exactly(CountExpr q, EigenSide side) { return {false, q, side}; }
OutcomeTerm at_most(CountExpr q, EigenSide side) { return {true, q, side}; }

constexpr CountExpr kZero{0, 0};
constexpr CountExpr kOne{0, 1};
constexpr CountExpr kTwo{0, 2};
constexpr CountExpr kN{1, 0};
constexpr CountExpr kNm1{1, -1};
constexpr CountExpr kNm2{1, -2};

std::vector<MatrixClass> classes_named(std::initializer_list<const char*> names) {
    std::vector<MatrixClass> out;
    for (const char* n : names) out.push_back(*MatrixClass::from_name(n));
    return out;
}

}  // namespace

const std::vector<PredictionRow>& prediction_rows() {
    static const std::vector<PredictionRow> rows = [] {
        std::vector<PredictionRow> r;
        r.push_back({classes_named({"q", "weak-q", "p", "weak-p"}),
                     {outcome({exactly(kZero, EigenSide::negative)})},
                     {outcome({exactly(kN, EigenSide::positive)})}});
        r.push_back({classes_named({"q0", "p0"}),
                     {outcome({exactly(kZero, EigenSide::negative)})},
                     {outcome({exactly(kN, EigenSide::non_negative)})}});
        r.push_back({classes_named({"almost-q", "almost-p"}),
                     {outcome({exactly(kOne, EigenSide::negative)})},
                     {outcome({exactly(kNm1, EigenSide::positive), exactly(kOne, EigenSide::negative)})}});
        r.push_back({classes_named({"r", "weak-r", "n", "weak-n"}),
                     {outcome({exactly(kOne, EigenSide::negative)})},
                     {outcome({exactly(kNm1, EigenSide::positive), exactly(kOne, EigenSide::negative)})}});
        r.push_back({classes_named({"r0", "n0"}),
                     {outcome({at_most(kOne, EigenSide::negative)})},
                     {outcome({exactly(kN, EigenSide::non_negative)}),
                      outcome({exactly(kNm1, EigenSide::non_negative), exactly(kOne, EigenSide::negative)})}});
        r.push_back({classes_named({"almost-r", "almost-n"}),
                     {outcome({exactly(kZero, EigenSide::negative)}), outcome({exactly(kTwo, EigenSide::negative)})},
                     {outcome({exactly(kN, EigenSide::positive)}),
                      outcome({exactly(kNm2, EigenSide::positive), exactly(kTwo, EigenSide::negative)})}});
        r.push_back({classes_named({"qr", "weak-qr", "pn", "weak-pn"}),
                     {outcome({exactly(kOne, EigenSide::positive)})},
                     {outcome({exactly(kNm1, EigenSide::negative), exactly(kOne, EigenSide::positive)})}});
        r.push_back({classes_named({"qr0", "pn0"}),
                     {outcome({at_most(kOne, EigenSide::positive)})},
                     {outcome({exactly(kN, EigenSide::non_positive)}),
                      outcome({exactly(kNm1, EigenSide::non_positive), exactly(kOne, EigenSide::positive)})}});
        r.push_back({classes_named({"almost-qr", "almost-pn"}),
                     {outcome({exactly(kZero, EigenSide::positive)}), outcome({exactly(kTwo, EigenSide::positive)})},
                     {outcome({exactly(kN, EigenSide::negative)}),
                      outcome({exactly(kNm2, EigenSide::negative), exactly(kTwo, EigenSide::positive)})}});
        return r;
    }();
    return rows;
}

EigenPrediction predict(MatrixClass c, bool symmetric, int n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    for (const PredictionRow& row : prediction_rows()) {
        for (const MatrixClass& rc : row.classes) {
            if (!(rc == c)) continue;
            EigenPrediction p;
            p.cls = c;
            p.symmetric = symmetric;
            p.n = n;
            for (const Outcome& o : symmetric ? row.symmetric : row.general) {
                bool feasible = true;
                for (const OutcomeTerm& t : o.terms)
                    if (t.count.eval(n) < 0) feasible = false;
                if (feasible) p.allowed.push_back(o);
            }
            return p;
        }
    }
    throw std::logic_error("class missing from prediction rows");
}

// --- consistency -------------------------------------------------------------

ConsistencyReport check_consistency(const Matrix& a, const ClassifyOptions& options) {
    ConsistencyReport report;
    report.n = a.n();
    report.symmetric = a.symmetric();

    report.char_poly = char_poly_faddeev(a);
    std::optional<MinorTable> table;
    if (a.n() <= options.cap) {
        table = all_principal_minors(a, options.cap);
        // Standing self-test of the minor/coefficient identity: the two
        // computation paths must agree exactly.
        if (char_poly_from_minors(*table) != report.char_poly)
            throw std::logic_error("characteristic polynomial paths disagree");
    }
    report.classes = classify_with(a, report.char_poly.minor_sums(), table ? &*table : nullptr, options);

    Polynomial cp = report.char_poly.as_polynomial();
    DescartesBound bound = descartes_bounds(cp);
    report.var_pos = bound.var_pos;
    report.var_neg = bound.var_neg;
    report.roots = root_counts(cp);

    report.consistent = true;
    for (const MatrixClass& c : all_classes()) {
        if (!report.classes.is_member(c)) continue;
        ClassCheck check;
        check.cls = c;
        check.prediction = predict(c, report.symmetric, report.n);
        check.verified = check.prediction.matches(report.roots);
        if (!check.verified) report.consistent = false;
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace minorsign
