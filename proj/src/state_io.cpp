#include "fef/state_io.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace fef {

namespace {

using nlohmann::json;

int read_dim(const json& doc, const char* field) {
    if (!doc.contains(field)) {
        throw ParseError(std::string("state file: missing field '") + field +
                         "'");
    }
    const json& value = doc.at(field);
    if (!value.is_number_integer()) {
        throw ParseError(std::string("state file: field '") + field +
                         "' must be an integer");
    }
    return value.get<int>();
}

}  // namespace

StateFile read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open state file: " + path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("state file: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("state file: top level must be an object");
    }

    StateFile out;
    out.dim_a = read_dim(doc, "dim_a");
    out.dim_b = read_dim(doc, "dim_b");

    if (!doc.contains("matrix")) {
        throw ParseError("state file: missing field 'matrix'");
    }
    const json& rows = doc.at("matrix");
    if (!rows.is_array()) {
        throw ParseError("state file: field 'matrix' must be an array");
    }
    const size_t n = rows.size();
    out.matrix = ComplexMatrix(n, n);
    for (size_t i = 0; i < n; ++i) {
        const json& row = rows.at(i);
        if (!row.is_array() || row.size() != n) {
            throw ParseError("state file: matrix row " + std::to_string(i) +
                             " must be an array of " + std::to_string(n) +
                             " entries");
        }
        for (size_t j = 0; j < n; ++j) {
            const json& entry = row.at(j);
            if (!entry.is_array() || entry.size() != 2 ||
                !entry.at(0).is_number() || !entry.at(1).is_number()) {
                throw ParseError("state file: matrix entry (" +
                                 std::to_string(i) + "," + std::to_string(j) +
                                 ") must be a [re, im] pair of numbers");
            }
            out.matrix(i, j) =
                Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
        }
    }
    return out;
}

DensityMatrix load_state(const std::string& path) {
    const StateFile file = read_state_file(path);
    return validate_state(file.matrix, file.dim_a, file.dim_b);
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < rho.matrix.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < rho.matrix.cols(); ++j) {
            row.push_back({rho.matrix(i, j).real(), rho.matrix(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    const json doc = {
        {"dim_a", rho.dim_a}, {"dim_b", rho.dim_b}, {"matrix", std::move(rows)}};

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            throw IoError("cannot write state file: " + tmp);
        }
        out << doc.dump(1) << "\n";
        if (!out) {
            throw IoError("write failed: " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot move state file into place: " + path + ": " +
                      ec.message());
    }
}

}  // namespace fef
