#include "arrcrit/io.hpp"

#include "arrcrit/error.hpp"

#include <fstream>

namespace arrcrit::io {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("'" + path + "' is not valid JSON: " + e.what());
    }
}

Field parse_field(const json& doc) {
    if (doc.is_null()) return Field::rational();
    if (!doc.is_object() || !doc.contains("type")) throw Error("field must be an object with a \"type\"");
    const auto type = doc.at("type").get<std::string>();
    if (type == "rational") return Field::rational();
    if (type != "extension") throw Error("unknown field type '" + type + "'");
    if (!doc.contains("min_poly") || !doc.at("min_poly").is_array()) throw Error("extension field needs \"min_poly\"");
    std::vector<mpq_class> m;
    for (const auto& c : doc.at("min_poly")) {
        if (c.is_number_integer()) m.emplace_back(c.get<long>());
        else if (c.is_string()) m.push_back(parse_rational(c.get<std::string>()));
        else throw Error("minimal polynomial coefficients must be rationals");
    }
    return Field::extension(std::move(m));
}

json field_to_json(Field f) {
    if (f.is_rational()) return json{{"type", "rational"}};
    json m = json::array();
    for (const auto& c : f.min_poly()) m.push_back(Scalar(c).str());
    return json{{"type", "extension"}, {"min_poly", m}};
}

Arrangement parse_arrangement(const json& doc) {
    if (!doc.is_object() || !doc.contains("forms")) throw Error("arrangement document needs \"forms\"");
    const Field field = parse_field(doc.contains("field") ? doc.at("field") : json());
    const auto& forms = doc.at("forms");
    if (!forms.is_array()) throw Error("\"forms\" must be an array of rows");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& r : forms) rows.push_back(parse_scalar_vector(r, field));
    return Arrangement(field, std::move(rows));
}

json arrangement_to_json(const Arrangement& arr) {
    json forms = json::array();
    for (const auto& f : arr.forms()) forms.push_back(scalars_to_json(f));
    return json{{"field", field_to_json(arr.field())}, {"forms", forms}};
}

long parse_integer(const json& v) {
    if (v.is_number_integer()) return v.get<long>();
    if (v.is_string()) {
        const auto q = parse_rational(v.get<std::string>());
        if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw Error("expected an integer, got '" + v.get<std::string>() + "'");
        return q.get_num().get_si();
    }
    throw Error("expected an integer");
}

Scalar parse_scalar_value(const json& v, Field field) {
    if (v.is_number_integer()) return Scalar(field, {mpq_class(v.get<long>())});
    if (v.is_string()) return parse_scalar(v.get<std::string>(), field);
    throw Error("expected a scalar (integer or string)");
}

std::vector<Scalar> parse_scalar_vector(const json& v, Field field) {
    if (!v.is_array()) throw Error("expected an array of scalars");
    std::vector<Scalar> out;
    for (const auto& x : v) out.push_back(parse_scalar_value(x, field));
    return out;
}

json scalars_to_json(const std::vector<Scalar>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(s.str());
    return a;
}

WeightBasis parse_weights(const json& doc, int size) {
    if (!doc.is_object() || !doc.contains("rows") || !doc.at("rows").is_array())
        throw Error("weights document needs \"rows\"");
    std::vector<WeightVector> rows;
    for (const auto& r : doc.at("rows")) {
        if (!r.is_array()) throw Error("weight rows must be arrays");
        WeightVector w;
        for (const auto& x : r) w.push_back(parse_integer(x));
        rows.push_back(std::move(w));
    }
    return WeightBasis(size, std::move(rows));
}

json weights_to_json(const WeightBasis& w) { return json{{"rows", w.rows()}}; }

Multinet parse_multinet(const json& doc, int size) {
    if (!doc.is_object() || !doc.contains("blocks") || !doc.at("blocks").is_array())
        throw Error("multinet document needs \"blocks\"");
    Multinet net;
    for (const auto& b : doc.at("blocks")) {
        IndexSet idx;
        for (const auto& i : b) idx.push_back(static_cast<int>(parse_integer(i)));
        net.blocks.push_back(std::move(idx));
    }
    net.mult.assign(size, 1);
    if (doc.contains("mult")) {
        const auto& m = doc.at("mult");
        if (!m.is_object()) throw Error("\"mult\" must map hyperplane indices to multiplicities");
        for (const auto& [key, value] : m.items()) {
            const long i = parse_integer(json(key));
            if (i < 0 || i >= size) throw Error("multiplicity index " + key + " out of range");
            net.mult[i] = parse_integer(value);
        }
    }
    return net;
}

ProjectivePoint parse_point(const json& doc, Field field) {
    const json& c = doc.is_object() && doc.contains("coords") ? doc.at("coords") : doc;
    return ProjectivePoint::make(parse_scalar_vector(c, field));
}

json indices_to_json(const IndexSet& s) { return json(s); }

json flats_to_json(const std::vector<Flat>& flats) {
    json a = json::array();
    for (const auto& f : flats) a.push_back(f.members);
    return a;
}

json os_element_to_json(const OSElement& e) {
    json terms = json::array();
    for (const auto& [m, c] : e.coords) terms.push_back(json{{"monomial", to_indices(m)}, {"coeff", c.str()}});
    return json{{"degree", e.degree}, {"terms", terms}};
}

json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json{{"exponent", e}, {"coeff", c.str()}});
    return json{{"text", p.str()}, {"terms", terms}};
}

json equation_to_json(const CriticalEquation& eq) {
    json terms = json::array();
    for (const auto& t : eq.terms)
        terms.push_back(json{{"sign", t.sign}, {"minor", t.minor.str()}, {"hyperplane", t.index}});
    return json{{"subset", eq.subset}, {"terms", terms}};
}

} // namespace arrcrit::io
