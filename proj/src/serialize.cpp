#include "tabinv/serialize.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace tabinv {

using nlohmann::json;

json to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json filling_to_json(const Filling& f) {
    return json{{"shape", f.shape().parts}, {"rows", f.rows()}};
}

Filling filling_from_json(const json& j) {
    Filling f(j.at("rows").get<std::vector<std::vector<int>>>());
    if (j.contains("shape") && f.shape().parts != j.at("shape").get<std::vector<int>>())
        throw std::invalid_argument("filling json: declared shape does not match rows");
    return f;
}

json inversion_pair_to_json(const InversionPair& p, const Filling& f) {
    return json{{"col", p.column},
                {"smaller", {{"row", p.smaller.row}, {"col", p.smaller.col}}},
                {"larger", {{"row", p.larger.row}, {"col", p.larger.col}}},
                {"values", {f.at(p.smaller), f.at(p.larger)}}};
}

json qpoly_to_json(const QPolynomial& p) {
    json coeffs = json::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(to_json(p.coeff(k)));
    if (p.is_zero()) coeffs.push_back(0);
    return json{{"coeffs", coeffs}};
}

json histogram_to_json(const InversionHistogram& h, const Shape& shape,
                       const Content& content) {
    json counts = json::object();
    for (const auto& [k, c] : h.counts) counts[std::to_string(k)] = to_json(c);
    return json{{"lambda", shape.parts}, {"mu", content.counts}, {"counts", counts}};
}

std::string histogram_to_csv(const InversionHistogram& h) {
    std::ostringstream out;
    out << "k,count\n";
    for (const auto& [k, c] : h.counts) out << k << "," << c.get_str() << "\n";
    return out.str();
}

std::string path_to_text(const DyckPath& p) {
    std::ostringstream out;
    for (int t = 0; t < p.length(); ++t) out << (t ? "," : "") << p.steps[t];
    return out.str();
}

json return_table_to_json(const std::map<ReturnProfile, mpz_class>& table,
                          const Shape& shape) {
    json profiles = json::array();
    for (const auto& [profile, count] : table)
        profiles.push_back(json{{"k", profile.k}, {"count", to_json(count)}});
    return json{{"lambda", shape.parts}, {"profiles", profiles}};
}

}  // namespace tabinv
