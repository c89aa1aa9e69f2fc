#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "minorsign/classify.hpp"
#include "minorsign/descartes.hpp"
#include "minorsign/minors.hpp"

namespace minorsign {

// f = lc * product of factor^multiplicity, factors monic, square-free,
// pairwise coprime (Yun's algorithm).
struct SquarefreeFactor {
    Polynomial factor;
    int multiplicity;
};

std::vector<SquarefreeFactor> squarefree_decompose(const Polynomial& f);

// Open interval; a missing endpoint means -infinity / +infinity.
struct Interval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    static Interval whole() { return {std::nullopt, std::nullopt}; }
    static Interval positive() { return {Rational(0), std::nullopt}; }
    static Interval negative() { return {std::nullopt, Rational(0)}; }
};

// Sturm chain: p0 = f, p1 = f', p_{i+1} = -rem(p_{i-1}, p_i), each element
// scaled primitive (positive factors only, so signs are faithful).
struct SturmChain {
    std::vector<Polynomial> seq;

    static SturmChain build(const Polynomial& f);

    bool squarefree_input() const;  // true iff the chain ends in a constant
    int variations_at(const Rational& x) const;
    int variations_at_pos_inf() const;
    int variations_at_neg_inf() const;
    int count_roots(const Interval& interval) const;
};

// Distinct real roots of square-free f in an open interval. Endpoints must
// not be roots; either contract violation throws std::logic_error.
int count_real_roots(const Polynomial& f, const Interval& interval);

// Real-root counts with multiplicity; zero is read off the trailing zero
// coefficients, the rest via square-free decomposition + Sturm per factor.
struct RootCount {
    int pos = 0;
    int neg = 0;
    int zero = 0;
    int nonreal = 0;  // n - pos - neg - zero; always even
};

RootCount root_counts(const Polynomial& f);

std::ostream& operator<<(std::ostream& os, const RootCount& rc);

// --- predictions -----------------------------------------------------------
//
// A predicted outcome is a conjunction of count constraints, each "exactly q"
// or "at most q" eigenvalues on one side, with q affine in n so the table
// can be rendered symbolically. "non negative" counts pos + zero, mirrored
// for "non positive".

struct CountExpr {
    int n_coeff = 0;
    int offset = 0;

    int eval(int n) const { return n_coeff * n + offset; }
    std::string str() const;  // "0", "n", "n-2", ...
};

enum class EigenSide { positive, negative, non_negative, non_positive };

std::string_view eigen_side_name(EigenSide s);

struct OutcomeTerm {
    bool at_most = false;
    CountExpr count;
    EigenSide side;
};

struct Outcome {
    std::vector<OutcomeTerm> terms;

    bool matches(const RootCount& rc, int n) const;
    std::string str(std::optional<int> n = std::nullopt) const;  // symbolic unless n given
};

struct EigenPrediction {
    MatrixClass cls;
    bool symmetric = false;
    int n = 0;
    std::vector<Outcome> allowed;  // satisfied when any outcome matches

    bool matches(const RootCount& rc) const;
};

EigenPrediction predict(MatrixClass c, bool symmetric, int n);

// The nine prediction rows, in table order; the single source both predict()
// and the rendered table draw from.
struct PredictionRow {
    std::vector<MatrixClass> classes;
    std::vector<Outcome> general;
    std::vector<Outcome> symmetric;
};

const std::vector<PredictionRow>& prediction_rows();

// --- consistency -----------------------------------------------------------

struct ClassCheck {
    MatrixClass cls;
    EigenPrediction prediction;
    bool verified = false;
};

struct ConsistencyReport {
    int n = 0;
    bool symmetric = false;
    ClassSet classes;
    CharPoly char_poly;
    int var_pos = 0;
    int var_neg = 0;
    RootCount roots;
    std::vector<ClassCheck> checks;
    bool consistent = false;
};

// Classify, take the characteristic polynomial along both routes (they must
// agree exactly; disagreement is an internal error), count real roots by
// Sturm, and test every membership against its predicted outcome set.
ConsistencyReport check_consistency(const Matrix& a, const ClassifyOptions& options = {});

}  // namespace minorsign
