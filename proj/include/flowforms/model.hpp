#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flowforms/calculus.hpp"

namespace flowforms {

// Finite presentation of a flow: generators of the form span, the structure
// data of d on generators, the contraction values of the field X, plus
// optional external topological input (Betti numbers) for models whose span
// does not compute the full de Rham cohomology.
struct FormModel {
    std::string name;
    std::string kind;
    FieldPtr field;
    std::vector<std::string> generator_names;
    GeneratorCalculus calc;
    std::optional<std::vector<long>> betti;
    bool computes_de_rham = false;
    std::optional<long> genus;
    std::vector<std::string> notes;

    int dimension() const { return static_cast<int>(generator_names.size()); }

    std::size_t nvars() const { return field ? field->nvars() : 0; }

    void check_degree(int k) const {
        if (k < 0 || k > dimension()) throw DegreeError("degree out of range for model " + name);
    }

    // Load-time validation: d^2 = 0 on generators, well-formed betti data.
    void validate() const {
        calc.validate_d_squared(generator_names);
        if (betti && betti->size() != generator_names.size() + 1)
            throw ValidationError("betti data must have length n+1 in model " + name);
    }
};

inline FormModel model_from_json(const nlohmann::json& j) {
    FormModel m;
    m.name = j.value("name", "custom");
    m.kind = j.value("kind", "custom-from-file");
    std::vector<std::string> symbols;
    if (j.contains("symbols"))
        for (const auto& s : j.at("symbols")) symbols.push_back(s.get<std::string>());
    m.field = make_field(symbols);
    if (!j.contains("generators")) throw ParseError("model file: missing 'generators'");
    for (const auto& g : j.at("generators")) m.generator_names.push_back(g.get<std::string>());
    const std::size_t n = m.generator_names.size();
    if (n == 0 || n > kMaxGenerators) throw ParseError("model file: generator count out of range");

    auto gen_index = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < n; ++i)
            if (m.generator_names[i] == name) return i;
        throw ParseError("model file: unknown generator '" + name + "'");
    };

    std::vector<FormElement> d_values(n, FormElement::zero(m.field));
    if (j.contains("d")) {
        for (const auto& [gname, terms] : j.at("d").items()) {
            std::size_t gi = gen_index(gname);
            FormElement val = FormElement::zero(m.field);
            for (const auto& term : terms) {
                if (!term.is_array() || term.size() != 2 || !term.at(1).is_array() ||
                    term.at(1).size() != 2)
                    throw ParseError("model file: d-term must be [coeff, [gen, gen]] for generator '" +
                                     gname + "'");
                Scalar c = Scalar::parse(term.at(0).get<std::string>(), *m.field);
                std::size_t a = gen_index(term.at(1).at(0).get<std::string>());
                std::size_t b = gen_index(term.at(1).at(1).get<std::string>());
                val = val + wedge(FormElement::generator(m.field, a),
                                  FormElement::generator(m.field, b)) *
                                c;
            }
            d_values[gi] = val;
        }
    }
    std::vector<Scalar> iX_values(n, Scalar(m.field->nvars()));
    if (j.contains("iX"))
        for (const auto& [gname, coeff] : j.at("iX").items())
            iX_values[gen_index(gname)] = Scalar::parse(coeff.get<std::string>(), *m.field);

    m.calc = GeneratorCalculus(m.field, std::move(d_values), std::move(iX_values));
    if (j.contains("betti")) {
        std::vector<long> b;
        for (const auto& x : j.at("betti")) b.push_back(x.get<long>());
        m.betti = b;
    }
    if (j.contains("genus")) m.genus = j.at("genus").get<long>();
    m.computes_de_rham = j.value("computes_de_rham", false);
    m.validate();
    return m;
}

inline FormModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("model file is not valid JSON: ") + e.what());
    }
    return model_from_json(j);
}

inline nlohmann::json model_to_json(const FormModel& m) {
    nlohmann::json j;
    j["name"] = m.name;
    j["kind"] = m.kind;
    j["generators"] = m.generator_names;
    if (m.field && !m.field->symbols.empty()) j["symbols"] = m.field->symbols;
    nlohmann::json d = nlohmann::json::object();
    for (std::size_t i = 0; i < m.generator_names.size(); ++i) {
        const auto& val = m.calc.d_values()[i];
        if (val.is_zero()) continue;
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [mask, coeff] : val.terms()) {
            auto idx = mask_indices(mask);
            terms.push_back({coeff.to_string(m.field->symbols),
                             {m.generator_names[idx[0]], m.generator_names[idx[1]]}});
        }
        d[m.generator_names[i]] = terms;
    }
    j["d"] = d;
    nlohmann::json ix = nlohmann::json::object();
    for (std::size_t i = 0; i < m.generator_names.size(); ++i)
        if (!m.calc.iX_values()[i].is_zero())
            ix[m.generator_names[i]] = m.calc.iX_values()[i].to_string(m.field->symbols);
    j["iX"] = ix;
    if (m.betti) j["betti"] = *m.betti;
    if (m.genus) j["genus"] = *m.genus;
    j["computes_de_rham"] = m.computes_de_rham;
    return j;
}

}  // namespace flowforms
