#include "opalg/json_io.hpp"

#include <cmath>
#include <fstream>

namespace opalg {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw Error("expected a complex value as a [re, im] pair");
    }
    const Complex z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error("complex entries must be finite");
    }
    return z;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

Index positive_index(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer() || v.get<Index>() < 1) {
        throw Error(std::string("field '") + key + "' must be a positive integer");
    }
    return v.get<Index>();
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
    Json data = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) data.push_back(complex_to_json(m(i, j)));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
    const Index rows = positive_index(j, "rows");
    const Index cols = positive_index(j, "cols");
    const Json& data = field(j, "data");
    if (!data.is_array() || static_cast<Index>(data.size()) != rows * cols) {
        throw Error("matrix data length must equal rows * cols");
    }
    ComplexMatrix m(rows, cols);
    Index k = 0;
    for (Index i = 0; i < rows; ++i) {
        for (Index c = 0; c < cols; ++c) m(i, c) = complex_from_json(data[static_cast<size_t>(k++)]);
    }
    return m;
}

Json sequence_to_json(const SequenceFunction& f) {
    Json samples = Json::array();
    for (const Complex& z : f.samples) samples.push_back(complex_to_json(z));
    Json out{{"depth", f.depth()}, {"samples", std::move(samples)}};
    out["limit"] = f.limit ? complex_to_json(*f.limit) : Json(nullptr);
    return out;
}

SequenceFunction sequence_from_json(const Json& j) {
    const Index depth = positive_index(j, "depth");
    const Json& samples = field(j, "samples");
    if (!samples.is_array() || static_cast<Index>(samples.size()) != depth) {
        throw Error("sequence samples length must equal depth");
    }
    std::vector<Complex> values;
    values.reserve(static_cast<size_t>(depth));
    for (const Json& s : samples) values.push_back(complex_from_json(s));
    std::optional<Complex> limit;
    if (j.contains("limit") && !j.at("limit").is_null()) limit = complex_from_json(j.at("limit"));
    return SequenceFunction(std::move(values), limit);
}

Json element_to_json(const BimoduleElement& e) {
    Json parts = Json::array();
    for (const ComplexMatrix& p : e.parts) parts.push_back(matrix_to_json(p));
    return Json{{"dim", e.dim}, {"arity", e.arity}, {"parts", std::move(parts)}};
}

BimoduleElement element_from_json(const Json& j) {
    const Index dim = positive_index(j, "dim");
    const Index arity = positive_index(j, "arity");
    const Json& parts = field(j, "parts");
    if (!parts.is_array() || static_cast<Index>(parts.size()) != arity) {
        throw Error("element parts length must equal arity");
    }
    std::vector<ComplexMatrix> mats;
    mats.reserve(static_cast<size_t>(arity));
    for (const Json& p : parts) mats.push_back(matrix_from_json(p));
    BimoduleElement out(std::move(mats));
    if (out.dim != dim) throw Error("element parts do not match the declared dim");
    return out;
}

Json coefficients_to_json(const CoefficientTuple& ts) {
    Json coeffs = Json::array();
    for (const ComplexMatrix& t : ts.coefficients) coeffs.push_back(matrix_to_json(t));
    return Json{{"dim", ts.dim}, {"coefficients", std::move(coeffs)}};
}

CoefficientTuple coefficients_from_json(const Json& j) {
    const Index dim = positive_index(j, "dim");
    const Json& coeffs = field(j, "coefficients");
    if (!coeffs.is_array() || coeffs.empty()) {
        throw Error("coefficient list must be a nonempty array");
    }
    std::vector<ComplexMatrix> mats;
    mats.reserve(coeffs.size());
    for (const Json& t : coeffs) mats.push_back(matrix_from_json(t));
    CoefficientTuple out(std::move(mats));
    if (out.dim != dim) throw Error("coefficients do not match the declared dim");
    return out;
}

std::string operand_ref_to_string(const OperandRef& ref) {
    return (ref.kind == OperandRef::Kind::Input ? "in:" : "step:") + std::to_string(ref.index);
}

OperandRef operand_ref_from_string(const std::string& s) {
    const auto parse_index = [&](size_t offset) {
        try {
            return static_cast<Index>(std::stoll(s.substr(offset)));
        } catch (const std::exception&) {
            throw Error("malformed operand reference '" + s + "'");
        }
    };
    if (s.rfind("in:", 0) == 0) return OperandRef::input(parse_index(3));
    if (s.rfind("step:", 0) == 0) return OperandRef::step(parse_index(5));
    throw Error("operand reference must start with 'in:' or 'step:'");
}

Json program_to_json(const SegmentProgram& prog) {
    Json steps = Json::array();
    for (const SegmentStep& step : prog.steps) {
        steps.push_back(Json{{"left", operand_ref_to_string(step.left)},
                             {"right", operand_ref_to_string(step.right)},
                             {"t1", matrix_to_json(step.t1)},
                             {"t2", matrix_to_json(step.t2)}});
    }
    return Json{{"steps", std::move(steps)}, {"output", operand_ref_to_string(prog.output)}};
}

SegmentProgram program_from_json(const Json& j) {
    const Json& steps = field(j, "steps");
    if (!steps.is_array()) throw Error("program steps must be an array");
    SegmentProgram prog;
    for (const Json& s : steps) {
        SegmentStep step;
        step.left = operand_ref_from_string(field(s, "left").get<std::string>());
        step.right = operand_ref_from_string(field(s, "right").get<std::string>());
        step.t1 = matrix_from_json(field(s, "t1"));
        step.t2 = matrix_from_json(field(s, "t2"));
        prog.steps.push_back(std::move(step));
    }
    prog.output = operand_ref_from_string(field(j, "output").get<std::string>());
    return prog;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open file '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

}  // namespace opalg
