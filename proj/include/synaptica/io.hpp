#ifndef SYNAPTICA_IO_HPP
#define SYNAPTICA_IO_HPP

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "synaptica/core.hpp"

namespace synaptica {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSymmetricError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element file schema:
///   {"model":"matrix", "dim":n, "data":[n*n reals, row-major]}
///   {"model":"setfn", "universe":n, "field":[[point indices]...],
///    "values":[n reals]}
inline Element element_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("model") || !j["model"].is_string())
        throw ParseError("element: missing model tag");
    const std::string model = j["model"].get<std::string>();

    if (model == "matrix") {
        if (!j.contains("dim") || !j.contains("data"))
            throw ParseError("matrix element: need dim and data");
        const auto dim = j["dim"].get<std::size_t>();
        std::vector<double> data;
        for (const auto& v : j["data"]) data.push_back(v.get<double>());
        if (dim < 1 || data.size() != dim * dim)
            throw ParseError("matrix element: data length != dim^2");
        Matrix m(dim, std::move(data));
        if (!m.is_symmetric(tol::sym() * (1.0 + m.max_abs())))
            throw NotSymmetricError("matrix element: not symmetric");
        return Element::matrix(std::move(m));
    }
    if (model == "setfn") {
        if (!j.contains("universe") || !j.contains("field") || !j.contains("values"))
            throw ParseError("setfn element: need universe, field, values");
        const auto n = j["universe"].get<std::size_t>();
        if (n < 1 || n > 64) throw ParseError("setfn element: universe in [1,64]");
        std::vector<std::uint64_t> members;
        for (const auto& subset : j["field"]) {
            std::uint64_t mask = 0;
            for (const auto& x : subset) {
                const auto i = x.get<std::size_t>();
                if (i >= n) throw ParseError("setfn element: point outside universe");
                mask |= std::uint64_t{1} << i;
            }
            members.push_back(mask);
        }
        // Accept a generating family; close it so hand-written files work.
        FieldPtr field = field_generate(n, members);
        std::vector<double> values;
        for (const auto& v : j["values"]) values.push_back(v.get<double>());
        if (values.size() != n)
            throw ParseError("setfn element: value count != universe size");
        try {
            return Element::setfn(std::move(field), std::move(values));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("setfn element: ") + e.what());
        }
    }
    throw ParseError("element: unknown model '" + model + "'");
}

inline Json element_to_json(const Element& a) {
    Json j;
    if (a.is_matrix()) {
        const Matrix& m = a.as_matrix();
        j["model"] = "matrix";
        j["dim"] = m.dim();
        j["data"] = m.entries();
    } else {
        const SetFn& f = a.as_setfn();
        j["model"] = "setfn";
        j["universe"] = f.field->universe_size();
        Json members = Json::array();
        for (std::uint64_t mask : f.field->members()) {
            Json subset = Json::array();
            for (std::size_t x = 0; x < f.field->universe_size(); ++x)
                if (mask & (std::uint64_t{1} << x)) subset.push_back(x);
            members.push_back(subset);
        }
        j["field"] = members;
        j["values"] = f.values;
    }
    return j;
}

inline Element load_element_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return element_from_json(j);
}

} // namespace synaptica

#endif
