#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "minorsign/minors.hpp"

namespace minorsign {

// The six families: P/N/PN constrain every individual principal minor,
// Q/R/QR constrain only the sums E_k.
enum class Family { P, N, PN, Q, R, QR };

enum class Variant { strict, almost, weak, sub_zero };

struct MatrixClass {
    Family family;
    Variant variant;

    bool minor_based() const { return family == Family::P || family == Family::N || family == Family::PN; }

    std::string name() const;  // "p", "almost-p", "weak-p", "p0", ..., "qr0"
    static std::optional<MatrixClass> from_name(std::string_view name);

    friend bool operator==(const MatrixClass& a, const MatrixClass& b) {
        return a.family == b.family && a.variant == b.variant;
    }
    friend bool operator<(const MatrixClass& a, const MatrixClass& b) {
        if (a.family != b.family) return a.family < b.family;
        return a.variant < b.variant;
    }
};

// Canonical order: families P, N, PN, Q, R, QR; within each family
// strict, almost, weak, sub-zero.
const std::array<MatrixClass, 24>& all_classes();

std::ostream& operator<<(std::ostream& os, const MatrixClass& c);

// Subset of {-1, 0, +1}.
struct SignSet {
    std::uint8_t bits = 0;  // bit 0: -1, bit 1: 0, bit 2: +1

    static SignSet exactly(Sign s) { return SignSet{bit(s)}; }
    static SignSet or_zero(Sign s) { return SignSet{static_cast<std::uint8_t>(bit(s) | bit(Sign::zero))}; }

    bool contains(Sign s) const { return bits & bit(s); }
    std::vector<Sign> members() const;
    std::string str() const;

    friend bool operator==(const SignSet& a, const SignSet& b) { return a.bits == b.bits; }

private:
    static std::uint8_t bit(Sign s) { return static_cast<std::uint8_t>(1u << (sign_int(s) + 1)); }
};

// Declarative form of a class definition at dimension n: the allowed sign
// set per cardinality k = 1..n, applied to each individual k x k minor
// (P/N/PN) or to the sum E_k (Q/R/QR). The determinant clause of the
// almost/weak variants lands at k = n.
//
// Every one of the 24 definitions is the same rewrite of a family base
// pattern b(k) (P,Q: +1; N,R: -1; PN,QR: (-1)^(k-1)):
//   strict    every k:  exactly b(k)
//   almost    k < n: exactly b(k),   k = n: exactly -b(n)
//   weak      k < n: b(k) or 0,      k = n: exactly b(n)
//   sub-zero  every k:  b(k) or 0
struct SignRequirement {
    bool individual_minors = false;
    bool has_det_clause = false;        // almost/weak carry an explicit determinant clause
    std::vector<SignSet> per_k;         // per_k[k-1] for k = 1..n

    const SignSet& at(int k) const { return per_k.at(static_cast<size_t>(k - 1)); }
};

SignRequirement required_signs(MatrixClass c, int n);

// First violation found when testing a matrix against a class: cardinalities
// are scanned ascending, lexicographically within a cardinality, so the
// witness is reproducible.
struct Evidence {
    enum class Kind { minor, minor_sum, determinant };

    Kind kind;
    std::optional<IndexSet> index_set;  // minor / determinant kinds
    int cardinality = 0;
    Sign found = Sign::zero;
    SignSet required;

    std::string describe() const;
};

struct MembershipResult {
    bool member = false;
    std::optional<Evidence> violation;
};

struct ClassifyOptions {
    int cap = default_minor_cap;
};

// Membership plus evidence for every class. Minor-based families are left
// unevaluated (not failed) when n exceeds the cap; sum-based families have
// no cap.
struct ClassSet {
    std::set<MatrixClass> members;
    std::map<MatrixClass, Evidence> evidence;  // one entry per evaluated non-member
    std::set<MatrixClass> not_evaluated;

    bool is_member(MatrixClass c) const { return members.count(c) > 0; }
    bool evaluated(MatrixClass c) const { return not_evaluated.count(c) == 0; }
};

// Single-class test; stops at the first violation. Throws capacity_error if
// c is minor-based and n exceeds the cap.
MembershipResult is_class(const Matrix& a, MatrixClass c, const ClassifyOptions& options = {});

ClassSet classify(const Matrix& a, const ClassifyOptions& options = {});

// classify() against precomputed data (sums always, table when available);
// used by callers that already paid for them.
ClassSet classify_with(const Matrix& a, const std::vector<Rational>& sums, const MinorTable* table,
                       const ClassifyOptions& options = {});

// Structural facts every ClassSet must satisfy: the strict/weak/sub-zero
// chains, the P->Q / N->R / PN->QR inclusions, and the sign-forced
// exclusions. A violation is an implementation bug, reported loudly.
void validate_class_set(const ClassSet& set);

}  // namespace minorsign
