#include "eqlines/json_io.hpp"

#include <fstream>
#include <sstream>

#include "eqlines/errors.hpp"

namespace eqlines {

namespace {

std::string solution_v_text(const Solution& sol) {
    if (sol.v) return sol.v->to_string();
    return "(" + sol.a.to_string() + ")+(" + sol.b.to_string() + ")*i";
}

Backend backend_field(const ordered_json& j) {
    if (!j.contains("backend") || !j["backend"].is_string())
        throw FormatError("missing or invalid 'backend' field");
    return backend_from_name(j["backend"].get<std::string>());
}

}  // namespace

ordered_json matrix_to_json(const Matrix& m) {
    ordered_json j;
    j["backend"] = backend_name(m.backend());
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Matrix matrix_from_json(const ordered_json& j) {
    Backend backend = backend_field(j);
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw FormatError("matrix document needs 'rows', 'cols' and 'entries'");
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != rows)
        throw FormatError("'entries' must hold one array per row");
    std::vector<Scalar> flat;
    flat.reserve(rows * cols);
    for (const auto& row : entries) {
        if (!row.is_array() || row.size() != cols) throw FormatError("row length does not match 'cols'");
        for (const auto& cell : row) {
            if (!cell.is_string()) throw FormatError("matrix entries must be strings");
            flat.push_back(parse_scalar(cell.get<std::string>(), backend));
        }
    }
    return Matrix(rows, cols, backend, std::move(flat));
}

ordered_json lineset_to_json(const LineSet& lines) {
    ordered_json j;
    j["dim"] = lines.dim;
    j["backend"] = backend_name(lines.backend);
    ordered_json vectors = ordered_json::array();
    for (const auto& lv : lines.vectors) {
        ordered_json v;
        v["set"] = lv.prov.set_index;
        v["row"] = lv.prov.row_index;
        ordered_json entries = ordered_json::array();
        for (const auto& e : lv.vec.entries()) entries.push_back(e.to_string());
        v["entries"] = std::move(entries);
        vectors.push_back(std::move(v));
    }
    j["vectors"] = std::move(vectors);
    return j;
}

LineSet lineset_from_json(const ordered_json& j) {
    if (!j.contains("dim") || !j.contains("vectors"))
        throw FormatError("line-set document needs 'dim' and 'vectors'");
    Backend backend = backend_field(j);
    const unsigned dim = j["dim"].get<unsigned>();
    if (dim == 0) throw FormatError("'dim' must be positive");
    LineSet out{dim, backend, {}};
    for (const auto& v : j["vectors"]) {
        if (!v.contains("set") || !v.contains("row") || !v.contains("entries"))
            throw FormatError("each vector needs 'set', 'row' and 'entries'");
        Provenance prov{v["set"].get<unsigned>(), v["row"].get<unsigned>()};
        if (prov.set_index >= dim || prov.row_index >= dim)
            throw FormatError("vector provenance out of range");
        const auto& entries = v["entries"];
        if (!entries.is_array() || entries.size() != dim)
            throw FormatError("vector entry count does not match 'dim'");
        std::vector<Scalar> parsed;
        parsed.reserve(dim);
        for (const auto& cell : entries) parsed.push_back(parse_scalar(cell.get<std::string>(), backend));
        out.vectors.push_back(LineVector{prov, Vector(backend, std::move(parsed))});
    }
    return out;
}

ordered_json report_to_json(const EquiangularityReport& report) {
    ordered_json j;
    j["verdict"] = report.verdict;
    j["distinct_lines"] = report.distinct_lines;
    j["common_magnitude_squared"] =
        report.common_magnitude_squared ? ordered_json(report.common_magnitude_squared->to_string())
                                        : ordered_json(nullptr);
    j["sic_ratio"] = report.sic_ratio ? ordered_json(report.sic_ratio->to_string()) : ordered_json(nullptr);
    ordered_json violations = ordered_json::array();
    for (const auto& v : report.violations) {
        ordered_json item;
        item["first"] = v.first;
        item["second"] = v.second;
        item["magnitude_squared"] = v.magnitude_squared.to_string();
        violations.push_back(std::move(item));
    }
    j["violations"] = std::move(violations);
    return j;
}

ordered_json witness_to_json(const EquivalenceWitness& w) {
    ordered_json j;
    ordered_json left = ordered_json::array();
    for (const auto& p : w.left_phases) left.push_back(p.to_string());
    j["left_phases"] = std::move(left);
    j["row_perm"] = w.row_perm;
    j["col_perm"] = w.col_perm;
    ordered_json right = ordered_json::array();
    for (const auto& p : w.right_phases) right.push_back(p.to_string());
    j["right_phases"] = std::move(right);
    return j;
}

ordered_json mu_set_to_json(const MuSet& mu) {
    ordered_json j;
    ordered_json values = ordered_json::array();
    for (const auto& v : mu.values) values.push_back(v.to_string());
    j["values"] = std::move(values);
    return j;
}

ordered_json solution_set_to_json(const SolutionSet& sols) {
    ordered_json j;
    j["order"] = sols.order;
    ordered_json values = ordered_json::array();
    for (const auto& sol : sols.values) {
        ordered_json item;
        item["v"] = solution_v_text(sol);
        item["a"] = sol.a.to_string();
        item["b"] = sol.b.to_string();
        item["signs"] = sol.signs;
        values.push_back(std::move(item));
    }
    j["solutions"] = std::move(values);
    j["certificate"] = sols.certificate ? ordered_json(certificate_name(*sols.certificate))
                                        : ordered_json(nullptr);
    return j;
}

std::string dump_json(const ordered_json& j) { return j.dump() + "\n"; }

ordered_json parse_json_text(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << content;
}

}  // namespace eqlines
