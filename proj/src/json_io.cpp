#include "umbra/json_io.hpp"

#include <stdexcept>

namespace umbra {

json to_json(const Rational& r) { return r.str(); }

json to_json(const Poly1& p) {
    json arr = json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(p.coeff(k).str());
    return arr;
}

json to_json(const Poly2& p) {
    json arr = json::array();
    for (const auto& [key, c] : p.terms())
        arr.push_back({{"i", key.first}, {"j", key.second}, {"c", c.str()}});
    return arr;
}

json to_json(const PolySeq& p) {
    json polys = json::array();
    for (const auto& poly : p.polys()) polys.push_back(to_json(poly));
    return {{"trunc", p.trunc()}, {"polys", polys}};
}

json to_json(const EndoOp& op) {
    json columns = json::array();
    for (int n = 0; n <= op.trunc(); ++n) {
        json col = json::array();
        for (int r = 0; r <= op.trunc(); ++r) col.push_back(op.image(n).coeff(r).str());
        columns.push_back(col);
    }
    return {{"trunc", op.trunc()}, {"columns", columns}};
}

json to_json(const BivarOp& op) {
    json images = json::array();
    for (int n = 0; n <= op.trunc(); ++n) images.push_back(to_json(op.image(n)));
    return {{"trunc", op.trunc()}, {"images", images}};
}

json to_json(const ShefferData& data) {
    return {{"trunc", data.basic.trunc()}, {"Q", to_json(data.Q)},     {"basic", to_json(data.basic)},
            {"P", to_json(data.P)},        {"G", to_json(data.G)},     {"F", to_json(data.F)}};
}

json to_json(const VerifyReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"degree", v.degree}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    return {{"ok", report.ok},
            {"checked_from", report.checked_lo},
            {"checked_to", report.checked_hi},
            {"violations", violations},
            {"note", report.note}};
}

json to_json(const CauchyWitness& witness) {
    return {{"u", to_json(witness.u)},
            {"residual", to_json(witness.residual)},
            {"initial_gap", to_json(witness.initial_gap)}};
}

json to_json(const Partition& la) {
    json arr = json::array();
    for (int p : la.parts()) arr.push_back(p);
    return arr;
}

json to_json(const SymF& f) {
    json arr = json::array();
    for (const auto& [la, c] : f.coeffs())
        arr.push_back({{"parts", to_json(la)}, {"c", c.str()}});
    return arr;
}

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational: expected a string");
    return Rational::parse(j.get<std::string>());
}

Poly1 poly1_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("poly: expected an array");
    std::vector<Rational> cs;
    for (const auto& item : j) cs.push_back(rational_from_json(item));
    return Poly1(std::move(cs));
}

Poly2 poly2_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("poly2: expected an array");
    Poly2 p;
    for (const auto& item : j)
        p.add_term(item.at("i").get<int>(), item.at("j").get<int>(),
                   rational_from_json(item.at("c")));
    return p;
}

PolySeq polyseq_from_json(const json& j) {
    const int trunc = j.at("trunc").get<int>();
    std::vector<Poly1> polys;
    for (const auto& item : j.at("polys")) polys.push_back(poly1_from_json(item));
    return PolySeq(trunc, std::move(polys));
}

EndoOp endo_from_json(const json& j) {
    const int trunc = j.at("trunc").get<int>();
    std::vector<Poly1> images;
    for (const auto& col : j.at("columns")) images.push_back(poly1_from_json(col));
    if (images.size() != static_cast<size_t>(trunc + 1))
        throw std::invalid_argument("operator: expected trunc+1 columns");
    return EndoOp(trunc, std::move(images));
}

BivarOp bivar_from_json(const json& j) {
    const int trunc = j.at("trunc").get<int>();
    std::vector<Poly2> images;
    for (const auto& img : j.at("images")) images.push_back(poly2_from_json(img));
    if (images.size() != static_cast<size_t>(trunc + 1))
        throw std::invalid_argument("operator: expected trunc+1 images");
    return BivarOp(trunc, std::move(images));
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected an array");
    std::vector<int> parts;
    for (const auto& item : j) parts.push_back(item.get<int>());
    return Partition(std::move(parts));
}

SymF symf_from_json(const json& j, int trunc) {
    SymF f(trunc);
    for (const auto& item : j)
        f.add_term(partition_from_json(item.at("parts")), rational_from_json(item.at("c")));
    return f;
}

}  // namespace umbra
