#include "minorsign/classify.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace minorsign {

namespace {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::P: return "p";
        case Family::N: return "n";
        case Family::PN: return "pn";
        case Family::Q: return "q";
        case Family::R: return "r";
        case Family::QR: return "qr";
    }
    return "?";
}

// Base sign pattern of the family on cardinality k.
Sign base_sign(Family f, int k) {
    switch (f) {
        case Family::P:
        case Family::Q: return Sign::positive;
        case Family::N:
        case Family::R: return Sign::negative;
        case Family::PN:
        case Family::QR: return k % 2 == 1 ? Sign::positive : Sign::negative;
    }
    return Sign::zero;
}

}  // namespace

std::string MatrixClass::name() const {
    std::string base(family_name(family));
    switch (variant) {
        case Variant::strict: return base;
        case Variant::almost: return "almost-" + base;
        case Variant::weak: return "weak-" + base;
        case Variant::sub_zero: return base + "0";
    }
    return base;
}

std::optional<MatrixClass> MatrixClass::from_name(std::string_view name) {
    for (const MatrixClass& c : all_classes())
        if (c.name() == name) return c;
    return std::nullopt;
}

const std::array<MatrixClass, 24>& all_classes() {
    static const std::array<MatrixClass, 24> classes = [] {
        std::array<MatrixClass, 24> out{};
        size_t i = 0;
        for (Family f : {Family::P, Family::N, Family::PN, Family::Q, Family::R, Family::QR})
            for (Variant v : {Variant::strict, Variant::almost, Variant::weak, Variant::sub_zero})
                out[i++] = MatrixClass{f, v};
        return out;
    }();
    return classes;
}

std::ostream& operator<<(std::ostream& os, const MatrixClass& c) { return os << c.name(); }

std::vector<Sign> SignSet::members() const {
    std::vector<Sign> out;
    for (Sign s : {Sign::positive, Sign::zero, Sign::negative})
        if (contains(s)) out.push_back(s);
    return out;
}

std::string SignSet::str() const {
    std::string out;
    for (Sign s : members()) {
        if (!out.empty()) out += " or ";
        out += sign_name(s);
    }
    return out.empty() ? "(none)" : out;
}

SignRequirement required_signs(MatrixClass c, int n) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
    SignRequirement req;
    req.individual_minors = c.minor_based();
    req.has_det_clause = c.variant == Variant::almost || c.variant == Variant::weak;
    req.per_k.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        Sign b = base_sign(c.family, k);
        SignSet allowed;
        switch (c.variant) {
            case Variant::strict: allowed = SignSet::exactly(b); break;
            case Variant::almost: allowed = k == n ? SignSet::exactly(-b) : SignSet::exactly(b); break;
            case Variant::weak: allowed = k == n ? SignSet::exactly(b) : SignSet::or_zero(b); break;
            case Variant::sub_zero: allowed = SignSet::or_zero(b); break;
        }
        req.per_k.push_back(allowed);
    }
    return req;
}

std::string Evidence::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::minor: os << "minor " << (index_set ? index_set->str() : "?"); break;
        case Kind::minor_sum: os << "E_" << cardinality; break;
        case Kind::determinant: os << "determinant"; break;
    }
    os << " has sign " << sign_name(found) << ", required " << required.str();
    return os.str();
}

namespace {

// Lexicographic k-combinations of {0..n-1}; returns false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < n - k + i) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

Evidence::Kind violation_kind(const SignRequirement& req, int k, int n) {
    if (k == n && req.has_det_clause) return Evidence::Kind::determinant;
    return req.individual_minors ? Evidence::Kind::minor : Evidence::Kind::minor_sum;
}

MembershipResult scan_minor_family(const SignRequirement& req, int n,
                                   const std::function<Rational(const std::vector<int>&)>& minor_of) {
    for (int k = 1; k <= n; ++k) {
        const SignSet& allowed = req.at(k);
        std::vector<int> combo(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) combo[static_cast<size_t>(i)] = i;
        do {
            Sign s = minor_of(combo).sign();
            if (!allowed.contains(s)) {
                Evidence e;
                e.kind = violation_kind(req, k, n);
                IndexSet idx;
                for (int z : combo) idx.indices.push_back(z + 1);
                e.index_set = std::move(idx);
                e.cardinality = k;
                e.found = s;
                e.required = allowed;
                return {false, std::move(e)};
            }
        } while (next_combination(combo, n));
    }
    return {true, std::nullopt};
}

MembershipResult scan_sum_family(const SignRequirement& req, int n, const std::vector<Rational>& sums) {
    for (int k = 1; k <= n; ++k) {
        Sign s = sums[static_cast<size_t>(k - 1)].sign();
        if (!req.at(k).contains(s)) {
            Evidence e;
            e.kind = violation_kind(req, k, n);
            if (e.kind == Evidence::Kind::determinant) e.index_set = IndexSet::full(n);
            e.cardinality = k;
            e.found = s;
            e.required = req.at(k);
            return {false, std::move(e)};
        }
    }
    return {true, std::nullopt};
}

}  // namespace

MembershipResult is_class(const Matrix& a, MatrixClass c, const ClassifyOptions& options) {
    int n = a.n();
    SignRequirement req = required_signs(c, n);
    if (c.minor_based()) {
        if (n > options.cap) throw capacity_error(n, options.cap);
        MinorEvaluator eval(a);
        return scan_minor_family(req, n, [&](const std::vector<int>& rows) { return eval.minor(rows); });
    }
    return scan_sum_family(req, n, minor_sums(a));
}

ClassSet classify_with(const Matrix& a, const std::vector<Rational>& sums, const MinorTable* table,
                       const ClassifyOptions& options) {
    (void)options;
    int n = a.n();
    ClassSet out;
    for (const MatrixClass& c : all_classes()) {
        SignRequirement req = required_signs(c, n);
        MembershipResult r;
        if (c.minor_based()) {
            if (table == nullptr) {
                out.not_evaluated.insert(c);
                continue;
            }
            r = scan_minor_family(req, n, [&](const std::vector<int>& rows) {
                std::uint32_t mask = 0;
                for (int z : rows) mask |= 1u << z;
                return table->minor(mask);
            });
        } else {
            r = scan_sum_family(req, n, sums);
        }
        if (r.member)
            out.members.insert(c);
        else
            out.evidence.emplace(c, std::move(*r.violation));
    }
    validate_class_set(out);
    return out;
}

ClassSet classify(const Matrix& a, const ClassifyOptions& options) {
    int n = a.n();
    std::optional<MinorTable> table;
    std::vector<Rational> sums;
    if (n <= options.cap) {
        table = all_principal_minors(a, options.cap);
        sums = table->sums;
    } else {
        sums = minor_sums(a);
    }
    return classify_with(a, sums, table ? &*table : nullptr, options);
}

void validate_class_set(const ClassSet& set) {
    auto fail = [](const std::string& what) {
        throw std::logic_error("class set invariant violated: " + what);
    };
    auto member = [&](Family f, Variant v) { return set.is_member({f, v}); };
    auto evaluated = [&](Family f, Variant v) { return set.evaluated({f, v}); };

    for (Family f : {Family::P, Family::N, Family::PN, Family::Q, Family::R, Family::QR}) {
        // strict subset of weak subset of sub-zero
        if (member(f, Variant::strict) && evaluated(f, Variant::weak) && !member(f, Variant::weak))
            fail("strict without weak in family " + std::string(family_name(f)));
        if (member(f, Variant::weak) && evaluated(f, Variant::sub_zero) && !member(f, Variant::sub_zero))
            fail("weak without sub-zero in family " + std::string(family_name(f)));
        // determinant clauses of strict and almost conflict
        if (member(f, Variant::strict) && evaluated(f, Variant::almost) && member(f, Variant::almost))
            fail("strict and almost overlap in family " + std::string(family_name(f)));
    }

    // minor-sign families imply their sum counterparts, variant for variant
    const std::pair<Family, Family> lifts[] = {
        {Family::P, Family::Q}, {Family::N, Family::R}, {Family::PN, Family::QR}};
    for (auto [from, to] : lifts)
        for (Variant v : {Variant::strict, Variant::almost, Variant::weak, Variant::sub_zero})
            if (evaluated(from, v) && member(from, v) && !member(to, v))
                fail(MatrixClass{from, v}.name() + " without " + MatrixClass{to, v}.name());

    if (evaluated(Family::P, Variant::strict) && member(Family::P, Variant::strict) &&
        member(Family::N, Variant::strict))
        fail("p and n together");
    if (member(Family::Q, Variant::strict) && member(Family::R, Variant::strict)) fail("q and r together");
}

}  // namespace minorsign
