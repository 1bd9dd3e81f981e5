#pragma once

// Matrix JSON: {"shape":[r,c], "re":[row-major], "im":[row-major]}, with "im"
// omitted when every imaginary part is zero. nlohmann::json serializes
// doubles with shortest-round-trip formatting, so emitted matrices re-parse
// to bit-identical values.

#include <fstream>
#include <string>

#include <json.hpp>

#include "kreinalg/matrix.hpp"

namespace krein {

inline nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json j;
    j["shape"] = {m.rows(), m.cols()};
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    bool has_im = false;
    for (std::size_t k = 0; k < m.size(); ++k) {
        re.push_back(m[k].real());
        im.push_back(m[k].imag());
        has_im = has_im || m[k].imag() != 0.0;
    }
    j["re"] = std::move(re);
    if (has_im) j["im"] = std::move(im);
    return j;
}

inline Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("re"))
        throw InputError("matrix JSON needs \"shape\" and \"re\" fields");
    const auto& shape = j["shape"];
    if (!shape.is_array() || shape.size() != 2 || !shape[0].is_number_unsigned() ||
        !shape[1].is_number_unsigned())
        throw InputError("matrix \"shape\" must be [rows, cols] with nonnegative integers");
    const std::size_t rows = shape[0].get<std::size_t>();
    const std::size_t cols = shape[1].get<std::size_t>();

    const auto& re = j["re"];
    if (!re.is_array() || re.size() != rows * cols)
        throw InputError("matrix \"re\" must hold rows*cols numbers");
    std::vector<cplx> entries(rows * cols);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (!re[k].is_number()) throw InputError("matrix \"re\" entries must be numbers");
        entries[k] = cplx{re[k].get<double>(), 0.0};
    }
    if (j.contains("im")) {
        const auto& im = j["im"];
        if (!im.is_array() || im.size() != rows * cols)
            throw InputError("matrix \"im\" must hold rows*cols numbers");
        for (std::size_t k = 0; k < entries.size(); ++k) {
            if (!im[k].is_number()) throw InputError("matrix \"im\" entries must be numbers");
            entries[k] = cplx{entries[k].real(), im[k].get<double>()};
        }
    }
    try {
        return Matrix(rows, cols, std::move(entries));
    } catch (const Error& e) {
        throw InputError(std::string("matrix JSON rejected: ") + e.what());
    }
}

inline Matrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open matrix file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

inline void save_matrix(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write matrix file: " + path);
    out << matrix_to_json(m).dump(2) << "\n";
}

}  // namespace krein
