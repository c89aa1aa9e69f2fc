#include "minorsign/io.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace minorsign {

Matrix MatrixDocument::to_matrix() const { return Matrix::from_rows(entries); }

MatrixDocument MatrixDocument::from_matrix(const Matrix& m) {
    MatrixDocument doc;
    doc.n = m.n();
    doc.entries.resize(static_cast<size_t>(m.n()));
    for (int i = 0; i < m.n(); ++i) {
        auto& row = doc.entries[static_cast<size_t>(i)];
        row.reserve(static_cast<size_t>(m.n()));
        for (int j = 0; j < m.n(); ++j) row.push_back(m.at(i, j));
    }
    return doc;
}

namespace {

// Byte offset -> 1-based line/column, for parse diagnostics.
std::pair<int, int> line_col(const std::string& text, size_t offset) {
    int line = 1, col = 1;
    for (size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Rational entry_from_json(const Json& cell, int line_hint) {
    if (cell.is_number_integer()) return Rational(static_cast<long>(cell.get<long long>()));
    if (cell.is_number_float()) return Rational::from_double(cell.get<double>());
    if (cell.is_string()) {
        auto parsed = Rational::parse(cell.get<std::string>());
        if (parsed) return *parsed;
        throw parse_error("cannot parse matrix entry \"" + cell.get<std::string>() + "\"", line_hint, 1);
    }
    throw parse_error("matrix entry must be a number or a string", line_hint, 1);
}

MatrixDocument read_json_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw parse_error(std::string("invalid JSON: ") + e.what(), line, col);
    }
    if (!j.is_object()) throw parse_error("matrix document must be a JSON object", 1, 1);
    if (!j.contains("entries") || !j["entries"].is_array())
        throw parse_error("matrix document needs an \"entries\" array", 1, 1);

    MatrixDocument doc;
    const Json& rows = j["entries"];
    int n = static_cast<int>(rows.size());
    if (n < 1) throw parse_error("matrix must have at least one row", 1, 1);
    if (j.contains("n")) {
        if (!j["n"].is_number_integer()) throw parse_error("\"n\" must be an integer", 1, 1);
        if (j["n"].get<int>() != n)
            throw parse_error("\"n\" does not match the number of rows", 1, 1);
    }
    doc.n = n;
    doc.entries.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Json& row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw parse_error("matrix is not square: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(row.is_array() ? row.size() : 0) + " entries, expected " +
                                  std::to_string(n),
                              i + 1, 1);
        for (const Json& cell : row) doc.entries[static_cast<size_t>(i)].push_back(entry_from_json(cell, i + 1));
    }
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw parse_error("\"name\" must be a string", 1, 1);
        doc.name = j["name"].get<std::string>();
    }
    if (j.contains("expected_classes")) {
        if (!j["expected_classes"].is_array()) throw parse_error("\"expected_classes\" must be an array", 1, 1);
        std::vector<MatrixClass> expected;
        for (const Json& cell : j["expected_classes"]) {
            if (!cell.is_string()) throw parse_error("class names must be strings", 1, 1);
            auto c = MatrixClass::from_name(cell.get<std::string>());
            if (!c) throw parse_error("unknown class name \"" + cell.get<std::string>() + "\"", 1, 1);
            expected.push_back(*c);
        }
        doc.expected_classes = std::move(expected);
    }
    return doc;
}

MatrixDocument read_csv_document(const std::string& text) {
    MatrixDocument doc;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Rational> row;
        std::istringstream cells(line);
        std::string cell;
        int col = 1;
        while (std::getline(cells, cell, ',')) {
            if (cell.find('/') != std::string::npos)
                throw parse_error("CSV accepts integers and decimals only", line_no, col);
            auto parsed = Rational::parse(cell);
            if (!parsed) throw parse_error("cannot parse CSV cell \"" + cell + "\"", line_no, col);
            row.push_back(*parsed);
            ++col;
        }
        doc.entries.push_back(std::move(row));
    }
    doc.n = static_cast<int>(doc.entries.size());
    if (doc.n < 1) throw parse_error("empty CSV matrix", 1, 1);
    for (size_t i = 0; i < doc.entries.size(); ++i)
        if (static_cast<int>(doc.entries[i].size()) != doc.n)
            throw parse_error("matrix is not square: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(doc.entries[i].size()) + " cells, expected " +
                                  std::to_string(doc.n),
                              static_cast<int>(i + 1), 1);
    return doc;
}

}  // namespace

MatrixDocument read_matrix_document(const std::string& text, DocumentFormat format) {
    if (format == DocumentFormat::auto_detect) {
        size_t first = text.find_first_not_of(" \t\r\n");
        format = (first != std::string::npos && text[first] == '{') ? DocumentFormat::json : DocumentFormat::csv;
    }
    return format == DocumentFormat::json ? read_json_document(text) : read_csv_document(text);
}

namespace {

Json entries_json(const MatrixDocument& doc) {
    Json rows = Json::array();
    for (const auto& row : doc.entries) {
        Json cells = Json::array();
        for (const Rational& x : row) cells.push_back(x.str());
        rows.push_back(std::move(cells));
    }
    return rows;
}

Json evidence_json(const Evidence& e) {
    Json out;
    switch (e.kind) {
        case Evidence::Kind::minor: out["kind"] = "minor"; break;
        case Evidence::Kind::minor_sum: out["kind"] = "minor-sum"; break;
        case Evidence::Kind::determinant: out["kind"] = "determinant"; break;
    }
    if (e.index_set) out["index_set"] = e.index_set->indices;
    out["cardinality"] = e.cardinality;
    out["found"] = std::string(sign_name(e.found));
    Json req = Json::array();
    for (Sign s : e.required.members()) req.push_back(std::string(sign_name(s)));
    out["required"] = std::move(req);
    return out;
}

Json class_section(const ClassSet& classes) {
    Json out;
    Json members = Json::array();
    for (const MatrixClass& c : all_classes())
        if (classes.is_member(c)) members.push_back(c.name());
    out["members"] = std::move(members);
    Json skipped = Json::array();
    for (const MatrixClass& c : all_classes())
        if (!classes.evaluated(c)) skipped.push_back(c.name());
    out["not_evaluated"] = std::move(skipped);
    Json rejections;
    for (const MatrixClass& c : all_classes()) {
        auto it = classes.evidence.find(c);
        if (it != classes.evidence.end()) rejections[c.name()] = evidence_json(it->second);
    }
    out["rejections"] = rejections.is_null() ? Json::object() : rejections;
    return out;
}

void append_expectation(Json& report, const MatrixDocument& doc, const ClassSet& classes) {
    if (!doc.expected_classes) return;
    Json expected = Json::array();
    for (const MatrixClass& c : *doc.expected_classes) expected.push_back(c.name());
    report["expected_classes"] = std::move(expected);
    Json missing = Json::array();
    for (const MatrixClass& c : expected_missing(doc, classes)) missing.push_back(c.name());
    report["expected_missing"] = std::move(missing);
}

Json header_json(const MatrixDocument& doc, const char* command, int cap, bool symmetric) {
    Json report;
    report["schema"] = report_schema;
    report["command"] = command;
    if (doc.name) report["name"] = *doc.name;
    report["n"] = doc.n;
    report["symmetric"] = symmetric;
    report["cap"] = cap;
    report["entries"] = entries_json(doc);
    return report;
}

Json sums_json(const std::vector<Rational>& sums) {
    Json out = Json::array();
    for (const Rational& e : sums) out.push_back(e.str());
    return out;
}

}  // namespace

ClassifyRun run_classify(const Matrix& m, const ClassifyOptions& options) {
    ClassifyRun run;
    if (m.n() <= options.cap) {
        run.table = all_principal_minors(m, options.cap);
        run.sums = run.table->sums;
    } else {
        run.sums = minor_sums(m);
    }
    run.classes = classify_with(m, run.sums, run.table ? &*run.table : nullptr, options);
    return run;
}

std::vector<MatrixClass> expected_missing(const MatrixDocument& doc, const ClassSet& classes) {
    std::vector<MatrixClass> missing;
    if (!doc.expected_classes) return missing;
    for (const MatrixClass& c : *doc.expected_classes)
        if (!classes.is_member(c)) missing.push_back(c);
    return missing;
}

Json classify_report(const MatrixDocument& doc, const ClassifyRun& run, int cap) {
    Matrix m = doc.to_matrix();
    Json report = header_json(doc, "classify", cap, m.symmetric());
    report["classes"] = class_section(run.classes);
    if (run.table) {
        Json minors = Json::array();
        for (const auto& [idx, value] : run.table->entries) {
            Json row;
            row["index_set"] = idx.indices;
            row["value"] = value.str();
            minors.push_back(std::move(row));
        }
        report["principal_minors"] = std::move(minors);
    }
    report["minor_sums"] = sums_json(run.sums);
    append_expectation(report, doc, run.classes);
    return report;
}

Json verify_report(const MatrixDocument& doc, const ConsistencyReport& r, int cap) {
    Json report = header_json(doc, "verify", cap, r.symmetric);
    report["classes"] = class_section(r.classes);
    report["minor_sums"] = sums_json(r.char_poly.minor_sums());
    Json coeffs = Json::array();
    for (const Rational& a : r.char_poly.coeffs) coeffs.push_back(a.str());
    report["char_poly"] = std::move(coeffs);
    report["var_pos"] = r.var_pos;
    report["var_neg"] = r.var_neg;
    report["root_counts"] = Json{{"pos", r.roots.pos}, {"neg", r.roots.neg}, {"zero", r.roots.zero},
                                 {"nonreal", r.roots.nonreal}};
    Json predictions = Json::array();
    for (const ClassCheck& check : r.checks) {
        Json p;
        p["class"] = check.cls.name();
        Json outcomes = Json::array();
        for (const Outcome& o : check.prediction.allowed) outcomes.push_back(o.str(r.n));
        p["outcomes"] = std::move(outcomes);
        p["verified"] = check.verified;
        predictions.push_back(std::move(p));
    }
    report["predictions"] = std::move(predictions);
    report["consistent"] = r.consistent;
    append_expectation(report, doc, r.classes);
    return report;
}

namespace {

std::string matrix_block(const MatrixDocument& doc) {
    // column-aligned entries
    size_t width = 0;
    for (const auto& row : doc.entries)
        for (const Rational& x : row) width = std::max(width, x.str().size());
    std::ostringstream os;
    for (const auto& row : doc.entries) {
        os << " ";
        for (const Rational& x : row) {
            std::string s = x.str();
            os << " " << std::string(width - s.size(), ' ') << s;
        }
        os << "\n";
    }
    return os.str();
}

std::string class_lines(const ClassSet& classes) {
    std::ostringstream os;
    os << "classes:";
    bool any = false;
    for (const MatrixClass& c : all_classes())
        if (classes.is_member(c)) {
            os << " " << c.name();
            any = true;
        }
    if (!any) os << " (none)";
    os << "\n";
    if (!classes.not_evaluated.empty()) {
        os << "not evaluated (over cap):";
        for (const MatrixClass& c : classes.not_evaluated) os << " " << c.name();
        os << "\n";
    }
    return os.str();
}

std::string sums_line(const std::vector<Rational>& sums) {
    std::ostringstream os;
    os << "minor sums:";
    for (size_t k = 0; k < sums.size(); ++k) os << " E_" << (k + 1) << "=" << sums[k].str();
    os << "\n";
    return os.str();
}

std::string header_line(const MatrixDocument& doc, bool symmetric) {
    std::ostringstream os;
    os << "matrix " << doc.n << "x" << doc.n << (symmetric ? " (symmetric)" : "");
    if (doc.name) os << "  \"" << *doc.name << "\"";
    os << "\n";
    return os.str();
}

std::string expectation_lines(const MatrixDocument& doc, const ClassSet& classes) {
    if (!doc.expected_classes) return "";
    std::ostringstream os;
    os << "expected:";
    for (const MatrixClass& c : *doc.expected_classes) os << " " << c.name();
    os << "\n";
    auto missing = expected_missing(doc, classes);
    if (missing.empty()) {
        os << "expectation holds\n";
    } else {
        os << "MISSING:";
        for (const MatrixClass& c : missing) os << " " << c.name();
        os << "\n";
    }
    return os.str();
}

std::string format_char_poly(const CharPoly& cp) {
    std::ostringstream os;
    int n = cp.degree();
    bool first = true;
    for (int k = 0; k <= n; ++k) {
        const Rational& a = cp.a(k);
        if (a.is_zero()) continue;
        int d = n - k;
        if (!first)
            os << (a.sign() == Sign::negative ? " - " : " + ");
        else if (a.sign() == Sign::negative)
            os << "-";
        Rational mag = a.abs();
        if (d == 0 || mag != Rational(1)) os << mag.str();
        if (d > 0) {
            os << "x";
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

std::string pretty_classify(const MatrixDocument& doc, const ClassifyRun& run, int cap) {
    std::ostringstream os;
    os << header_line(doc, doc.to_matrix().symmetric());
    os << matrix_block(doc);
    os << "cap: " << cap << "\n";
    os << class_lines(run.classes);
    os << sums_line(run.sums);
    if (run.table) os << "principal minors: " << run.table->entries.size() << " computed\n";
    os << expectation_lines(doc, run.classes);
    return os.str();
}

std::string pretty_verify(const MatrixDocument& doc, const ConsistencyReport& r, int cap) {
    std::ostringstream os;
    os << header_line(doc, r.symmetric);
    os << matrix_block(doc);
    os << "cap: " << cap << "\n";
    os << class_lines(r.classes);
    os << sums_line(r.char_poly.minor_sums());
    os << "char poly: " << format_char_poly(r.char_poly) << "\n";
    os << "Var(C(x)) = " << r.var_pos << ", Var(C(-x)) = " << r.var_neg << "\n";
    os << "real eigenvalues: " << r.roots.pos << " positive, " << r.roots.neg << " negative, " << r.roots.zero
       << " zero, " << r.roots.nonreal << " non-real\n";
    if (!r.checks.empty()) {
        os << "predictions:\n";
        for (const ClassCheck& check : r.checks) {
            os << "  " << check.cls.name() << ": ";
            for (size_t i = 0; i < check.prediction.allowed.size(); ++i)
                os << (i ? ", or " : "") << check.prediction.allowed[i].str(r.n);
            os << (check.verified ? "  [ok]" : "  [VIOLATED]") << "\n";
        }
    }
    os << "consistent: " << (r.consistent ? "yes" : "NO") << "\n";
    os << expectation_lines(doc, r.classes);
    return os.str();
}

std::string render_prediction_table() {
    std::vector<std::array<std::string, 3>> cells;
    cells.push_back({"type of matrix", "general case", "symmetric case"});
    for (const PredictionRow& row : prediction_rows()) {
        std::array<std::string, 3> line;
        for (size_t i = 0; i < row.classes.size(); ++i) line[0] += (i ? " or " : "") + row.classes[i].name();
        for (size_t i = 0; i < row.general.size(); ++i) line[1] += (i ? ", or " : "") + row.general[i].str();
        for (size_t i = 0; i < row.symmetric.size(); ++i) line[2] += (i ? ", or " : "") + row.symmetric[i].str();
        cells.push_back(std::move(line));
    }
    std::array<size_t, 3> width{0, 0, 0};
    for (const auto& line : cells)
        for (size_t i = 0; i < 3; ++i) width[i] = std::max(width[i], line[i].size());
    std::ostringstream os;
    for (size_t r = 0; r < cells.size(); ++r) {
        for (size_t i = 0; i < 3; ++i) {
            os << cells[r][i] << std::string(width[i] - cells[r][i].size(), ' ');
            os << (i + 1 < 3 ? " | " : "\n");
        }
        if (r == 0) {
            for (size_t i = 0; i < 3; ++i)
                os << std::string(width[i], '-') << (i + 1 < 3 ? "-+-" : "\n");
        }
    }
    return os.str();
}

Json matrix_document_to_json(const MatrixDocument& doc) {
    Json out;
    out["n"] = doc.n;
    out["entries"] = entries_json(doc);
    if (doc.name) out["name"] = *doc.name;
    if (doc.expected_classes) {
        Json expected = Json::array();
        for (const MatrixClass& c : *doc.expected_classes) expected.push_back(c.name());
        out["expected_classes"] = std::move(expected);
    }
    return out;
}

}  // namespace minorsign
