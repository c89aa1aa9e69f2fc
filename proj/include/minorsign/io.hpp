#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "minorsign/generate.hpp"
#include "minorsign/spectra.hpp"

namespace minorsign {

using Json = nlohmann::ordered_json;

// On-disk matrix form. Entries may be JSON integers, JSON floats (converted
// exactly as binary dyadics), or strings: "p/q" or a decimal (converted
// exactly as a scaled integer). expected_classes, when present, asserts
// membership in every listed class.
struct MatrixDocument {
    int n = 0;
    std::vector<std::vector<Rational>> entries;
    std::optional<std::string> name;
    std::optional<std::vector<MatrixClass>> expected_classes;

    Matrix to_matrix() const;
    static MatrixDocument from_matrix(const Matrix& m);
};

enum class DocumentFormat { auto_detect, json, csv };

// Throws parse_error with 1-based line/column on malformed input. CSV cells
// are integers or decimals; JSON is the object form above.
MatrixDocument read_matrix_document(const std::string& text, DocumentFormat format = DocumentFormat::auto_detect);

Json matrix_document_to_json(const MatrixDocument& doc);

// --- reports ---------------------------------------------------------------
//
// All reports are ordered JSON with rationals as canonical "p/q" strings, so
// a rerun on the same input is byte-identical.

inline constexpr const char* report_schema = "minorsign/1";

struct ClassifyRun {
    ClassSet classes;
    std::vector<Rational> sums;
    std::optional<MinorTable> table;  // present when n is within the cap
};

ClassifyRun run_classify(const Matrix& m, const ClassifyOptions& options);

Json classify_report(const MatrixDocument& doc, const ClassifyRun& run, int cap);
Json verify_report(const MatrixDocument& doc, const ConsistencyReport& report, int cap);

// Expected classes the matrix does not belong to (empty when all hold).
std::vector<MatrixClass> expected_missing(const MatrixDocument& doc, const ClassSet& classes);

std::string pretty_classify(const MatrixDocument& doc, const ClassifyRun& run, int cap);
std::string pretty_verify(const MatrixDocument& doc, const ConsistencyReport& report, int cap);

// The prediction table rendered from prediction_rows() with symbolic n.
std::string render_prediction_table();

}  // namespace minorsign
