#include "minorsign/generate.hpp"

#include <functional>
#include <optional>

namespace minorsign {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = seed + (stream + 1) * 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

namespace {

using Candidate = std::optional<Matrix>;
using Strategy = std::function<Candidate(SplitMix64&)>;

// a*I + b*J
Matrix diag_plus_ones(int n, long a, long b) {
    return Matrix::build(n, [&](int i, int j) { return Rational(i == j ? a + b : b); });
}

Matrix diag_matrix(const std::vector<Rational>& d) {
    int n = static_cast<int>(d.size());
    return Matrix::build(n, [&](int i, int j) { return i == j ? d[static_cast<size_t>(i)] : Rational(0); });
}

Matrix random_matrix(int n, bool symmetric, const EntryRange& range, SplitMix64& rng) {
    mpz_class lo_num, hi_num;
    mpq_class lo_scaled = range.lo.raw() * range.denominator;
    mpq_class hi_scaled = range.hi.raw() * range.denominator;
    mpz_cdiv_q(lo_num.get_mpz_t(), lo_scaled.get_num_mpz_t(), lo_scaled.get_den_mpz_t());
    mpz_fdiv_q(hi_num.get_mpz_t(), hi_scaled.get_num_mpz_t(), hi_scaled.get_den_mpz_t());
    long lo = lo_num.get_si();
    long hi = hi_num.get_si();
    if (lo > hi) lo = hi;
    std::vector<Rational> flat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (symmetric && j < i) {
                flat[static_cast<size_t>(i) * n + j] = flat[static_cast<size_t>(j) * n + i];
                continue;
            }
            flat[static_cast<size_t>(i) * n + j] = Rational(rng.next_in(lo, hi), range.denominator);
        }
    return Matrix(n, std::move(flat));
}

// 4*base + delta with delta entries in {-1, 0, 1}. Positive scaling leaves
// every class invariant, so this explores a small cone around the base.
Matrix perturbed(const Matrix& base, bool symmetric, SplitMix64& rng) {
    int n = base.n();
    std::vector<Rational> flat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (symmetric && j < i) {
                flat[static_cast<size_t>(i) * n + j] = flat[static_cast<size_t>(j) * n + i];
                continue;
            }
            flat[static_cast<size_t>(i) * n + j] = Rational(4) * base.at(i, j) + Rational(rng.next_in(-1, 1));
        }
    return Matrix(n, std::move(flat));
}

// Strictly upper-triangular noise keeps the spectrum of a diagonal base.
Matrix with_upper_noise(const Matrix& base, SplitMix64& rng) {
    return Matrix::build(base.n(), [&](int i, int j) {
        if (j > i) return base.at(i, j) + Rational(rng.next_in(-2, 2));
        return base.at(i, j);
    });
}

// Off-diagonal-only noise; preserves planted zero diagonals.
Matrix with_offdiag_noise(const Matrix& base, bool symmetric, SplitMix64& rng) {
    int n = base.n();
    std::vector<Rational> flat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (symmetric && j < i) {
                flat[static_cast<size_t>(i) * n + j] = flat[static_cast<size_t>(j) * n + i];
                continue;
            }
            Rational v = base.at(i, j);
            if (i != j) v += Rational(rng.next_in(-1, 1));
            flat[static_cast<size_t>(i) * n + j] = v;
        }
    return Matrix(n, std::move(flat));
}

Matrix negated(const Matrix& m) { return Rational(-1) * m; }

// Strictly diagonally dominant with positive diagonal: a P-matrix.
Matrix sdd_positive(int n, bool symmetric, const EntryRange& range, SplitMix64& rng) {
    Matrix base = random_matrix(n, symmetric, range, rng);
    std::vector<Rational> flat(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        Rational row_sum;
        for (int j = 0; j < n; ++j)
            if (j != i) row_sum += base.at(i, j).abs();
        for (int j = 0; j < n; ++j)
            flat[static_cast<size_t>(i) * n + j] = i == j ? row_sum + Rational(1 + rng.next_in(0, 2)) : base.at(i, j);
    }
    // a symmetric base keeps the result symmetric: only the diagonal moved
    return Matrix(n, std::move(flat));
}

// B B^T + d I: symmetric positive definite, hence P.
Matrix gram_shift(int n, const EntryRange& range, SplitMix64& rng) {
    Matrix b = random_matrix(n, false, range, rng);
    return b * b.transpose() + Rational(1 + rng.next_in(0, 2)) * Matrix::identity(n);
}

// Diagonal pattern for almost-Q: (m, ..., m, -c) with m > c(n-1).
Matrix diag_almost_q(int n, SplitMix64& rng) {
    long c = 1 + rng.next_in(0, 1);
    long m = c * (n - 1) + 1 + rng.next_in(0, 2);
    std::vector<Rational> d(static_cast<size_t>(n), Rational(m));
    d.back() = Rational(-c);
    return diag_matrix(d);
}

// Diagonal pattern for almost-R: two negative entries, positives elsewhere.
// For n >= 3 the eigenvalue multiset ((p+1), ..., (p+1), -p(p+1), -1) with
// p = n-2 lands in the class at every n; random draws add variety around it.
Matrix diag_almost_r(int n, SplitMix64& rng) {
    if (n == 1) return diag_matrix({Rational(1 + rng.next_in(0, 3))});
    if (n == 2) return diag_matrix({Rational(-1 - rng.next_in(0, 3)), Rational(-1 - rng.next_in(0, 3))});
    std::vector<Rational> d;
    if (rng.next_bool()) {
        long p = n - 2;
        d.assign(static_cast<size_t>(n), Rational(p + 1));
        d[0] = Rational(-p * (p + 1));
        d[1] = Rational(-1);
    } else {
        d.push_back(Rational(-1 - rng.next_in(0, 5)));
        d.push_back(Rational(-1 - rng.next_in(0, 5)));
        for (int i = 2; i < n; ++i) d.push_back(Rational(1 + rng.next_in(0, 5)));
    }
    // permuting the diagonal changes nothing structural but varies the output
    for (int i = n - 1; i > 0; --i) {
        long j = rng.next_in(0, i);
        std::swap(d[static_cast<size_t>(i)], d[static_cast<size_t>(j)]);
    }
    return diag_matrix(d);
}

// Upper triangular with the given diagonal: every principal minor is a
// product of diagonal entries, so the sign pattern is fully planted.
Matrix triangular_with_diag(const std::vector<Rational>& diag, bool symmetric, SplitMix64& rng) {
    int n = static_cast<int>(diag.size());
    return Matrix::build(n, [&](int i, int j) {
        if (i == j) return diag[static_cast<size_t>(i)];
        if (j > i && !symmetric) return Rational(rng.next_in(-2, 2));
        return Rational(0);
    });
}

// Zero out a random set of rows and matching columns.
Matrix planted_zeros(int n, bool symmetric, const EntryRange& range, SplitMix64& rng) {
    Matrix base = random_matrix(n, symmetric, range, rng);
    std::vector<bool> dead(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) dead[static_cast<size_t>(i)] = rng.next_bool();
    return Matrix::build(n, [&](int i, int j) {
        if (dead[static_cast<size_t>(i)] || dead[static_cast<size_t>(j)]) return Rational(0);
        return base.at(i, j);
    });
}

std::vector<Strategy> strategies_for(const GenSpec& spec) {
    const int n = spec.n;
    const bool sym = spec.symmetric;
    const EntryRange& range = spec.range;
    const Family fam = spec.target.family;
    const Variant var = spec.target.variant;
    std::vector<Strategy> out;
    auto add = [&](Strategy s) { out.push_back(std::move(s)); };

    auto add_p_bases = [&] {
        add([=](SplitMix64& rng) -> Candidate { return sdd_positive(n, sym, range, rng); });
        add([=](SplitMix64& rng) -> Candidate { return gram_shift(n, range, rng); });
    };
    auto add_n_bases = [&] {
        add([=](SplitMix64& rng) -> Candidate { return perturbed(diag_plus_ones(n, 1, -2), sym, rng); });
    };
    auto add_pn_bases = [&] {
        add([=](SplitMix64& rng) -> Candidate { return perturbed(diag_plus_ones(n, -1, 2), sym, rng); });
    };
    auto add_almost_n_bases = [&] {
        if (n == 1) return;
        if (n == 2)
            add([=](SplitMix64& rng) -> Candidate {
                return diag_matrix({Rational(-1 - rng.next_in(0, 2)), Rational(-1 - rng.next_in(0, 2))});
            });
        if (n == 3)
            add([=](SplitMix64& rng) -> Candidate { return perturbed(diag_plus_ones(n, -3, 2), sym, rng); });
    };
    auto maybe_noisy_diag = [&](Matrix (*make)(int, SplitMix64&)) {
        add([=](SplitMix64& rng) -> Candidate {
            Matrix d = make(n, rng);
            return sym ? d : with_upper_noise(d, rng);
        });
    };

    switch (fam) {
        case Family::P:
        case Family::Q:
            switch (var) {
                case Variant::strict:
                    add_p_bases();
                    break;
                case Variant::almost:
                    if (fam == Family::P) {
                        // exact inverse of an N-matrix (the characterization of almost-P)
                        add([=](SplitMix64& rng) -> Candidate {
                            Matrix cand = perturbed(diag_plus_ones(n, 1, -2), sym, rng);
                            if (!is_class(cand, {Family::N, Variant::strict}).member) return std::nullopt;
                            auto inv = cand.inverse();
                            if (!inv) return std::nullopt;
                            return *inv;
                        });
                    } else {
                        maybe_noisy_diag(&diag_almost_q);
                    }
                    break;
                case Variant::weak:
                    add_p_bases();
                    if (!sym && n >= 2 && fam == Family::P)
                        add([=](SplitMix64& rng) -> Candidate {
                            // [[0,-1],[1,1]] block, positive diagonal tail: weak-P with a zero minor
                            return Matrix::build(n, [&](int i, int j) -> Rational {
                                if (i == 0 && j == 0) return 0;
                                if (i == 0 && j == 1) return -1;
                                if (i == 1 && j == 0) return 1;
                                if (i == 1 && j == 1) return 1;
                                if (i == j) return Rational(1 + rng.next_in(0, 2));
                                return 0;
                            });
                        });
                    if (!sym && n == 2 && fam == Family::Q)
                        add([=](SplitMix64& rng) -> Candidate {
                            long b = 1 + rng.next_in(0, 2);
                            return Matrix::from_rows({{0, Rational(-b)}, {Rational(b), 0}});
                        });
                    break;
                case Variant::sub_zero:
                    add([=](SplitMix64&) -> Candidate { return Matrix(n); });
                    add([=](SplitMix64& rng) -> Candidate {
                        std::vector<Rational> d(static_cast<size_t>(n));
                        for (auto& x : d) x = Rational(rng.next_in(0, 2));
                        return triangular_with_diag(d, sym, rng);
                    });
                    add([=](SplitMix64& rng) -> Candidate { return planted_zeros(n, sym, range, rng); });
                    add_p_bases();
                    break;
            }
            break;

        case Family::N:
        case Family::R:
            switch (var) {
                case Variant::strict:
                    add_n_bases();
                    break;
                case Variant::almost:
                    if (fam == Family::N)
                        add_almost_n_bases();
                    else
                        maybe_noisy_diag(&diag_almost_r);
                    break;
                case Variant::weak:
                    add_n_bases();
                    if (n >= 2)
                        add([=](SplitMix64& rng) -> Candidate {
                            return with_offdiag_noise(diag_plus_ones(n, 1, -1), sym, rng);
                        });
                    break;
                case Variant::sub_zero:
                    add([=](SplitMix64&) -> Candidate { return Matrix(n); });
                    add([=](SplitMix64& rng) -> Candidate {
                        std::vector<Rational> d(static_cast<size_t>(n), Rational(0));
                        d[0] = Rational(-rng.next_in(0, 2));
                        return triangular_with_diag(d, sym, rng);
                    });
                    add([=](SplitMix64& rng) -> Candidate { return planted_zeros(n, sym, range, rng); });
                    add_n_bases();
                    break;
            }
            break;

        case Family::PN:
        case Family::QR:
            switch (var) {
                case Variant::strict:
                    add_pn_bases();
                    break;
                case Variant::almost:
                    if (fam == Family::PN) {
                        // almost-PN candidates are negated almost-N candidates
                        if (n == 2) add_p_bases();
                        if (n == 3)
                            add([=](SplitMix64& rng) -> Candidate {
                                return perturbed(diag_plus_ones(n, 3, -2), sym, rng);
                            });
                    } else {
                        add([=](SplitMix64& rng) -> Candidate {
                            Matrix d = negated(diag_almost_r(n, rng));
                            return sym ? d : with_upper_noise(d, rng);
                        });
                    }
                    break;
                case Variant::weak:
                    add_pn_bases();
                    if (n >= 2)
                        add([=](SplitMix64& rng) -> Candidate {
                            return with_offdiag_noise(diag_plus_ones(n, -1, 1), sym, rng);
                        });
                    break;
                case Variant::sub_zero:
                    add([=](SplitMix64&) -> Candidate { return Matrix(n); });
                    add([=](SplitMix64& rng) -> Candidate {
                        std::vector<Rational> d(static_cast<size_t>(n), Rational(0));
                        d[0] = Rational(rng.next_in(0, 2));
                        return triangular_with_diag(d, sym, rng);
                    });
                    add([=](SplitMix64& rng) -> Candidate { return planted_zeros(n, sym, range, rng); });
                    add_pn_bases();
                    break;
            }
            break;
    }

    // Plain rejection sampling backs every class.
    add([=](SplitMix64& rng) -> Candidate { return random_matrix(n, sym, range, rng); });
    return out;
}

}  // namespace

GenResult generate(const GenSpec& spec, const ClassifyOptions& options) {
    if (spec.n < 1) throw std::invalid_argument("dimension must be >= 1");
    if (spec.count < 0) throw std::invalid_argument("count must be >= 0");
    if (spec.range.denominator < 1) throw std::invalid_argument("denominator must be >= 1");

    const long max_trials = spec.max_trials > 0 ? spec.max_trials : 1000L * std::max(spec.count, 1);
    const std::vector<Strategy> strategies = strategies_for(spec);

    GenResult result;
    for (long trial = 0; trial < max_trials; ++trial) {
        if (static_cast<int>(result.matrices.size()) >= spec.count) break;
        ++result.trials_used;
        SplitMix64 rng(derive_seed(spec.seed, static_cast<std::uint64_t>(trial)));
        const Strategy& strategy = strategies[static_cast<size_t>(trial) % strategies.size()];
        Candidate cand = strategy(rng);
        if (!cand) continue;
        if (spec.symmetric && !cand->symmetric()) continue;
        if (!is_class(*cand, spec.target, options).member) continue;
        result.matrices.push_back(std::move(*cand));
    }
    result.exhausted = static_cast<int>(result.matrices.size()) < spec.count;
    return result;
}

std::vector<MatrixClass> CoverageReport::gaps() const {
    std::vector<MatrixClass> out;
    for (const MatrixClass& c : all_classes())
        if (witnesses.count(c) == 0 || witnesses.at(c) == 0) out.push_back(c);
    return out;
}

CoverageReport coverage_report(int n, long budget, std::uint64_t seed, const ClassifyOptions& options) {
    CoverageReport report;
    report.n = n;
    report.budget = budget;
    report.seed = seed;
    std::uint64_t stream = 0;
    for (const MatrixClass& c : all_classes()) {
        GenSpec spec;
        spec.target = c;
        spec.n = n;
        spec.seed = derive_seed(seed, stream++);
        spec.count = static_cast<int>(budget);
        spec.max_trials = budget;
        report.witnesses[c] = static_cast<int>(generate(spec, options).matrices.size());
    }
    return report;
}

}  // namespace minorsign
