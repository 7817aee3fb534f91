#include "chromaconf/json_io.hpp"

#include <nlohmann/json.hpp>

#include "chromaconf/errors.hpp"

namespace chromaconf {

using nlohmann::json;

json polynomial_to_json(const IntPolynomial& p, const std::string& variable) {
    json coeffs = json::array();
    if (p.is_zero()) {
        coeffs.push_back("0");
    } else {
        for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
    }
    return json{{"variable", variable}, {"coefficients", coeffs}};
}

IntPolynomial polynomial_from_json(const json& j) {
    try {
        std::vector<Int> coeffs;
        for (const auto& c : j.at("coefficients"))
            coeffs.push_back(c.is_string() ? Int(c.get<std::string>()) : Int(c.get<long long>()));
        return IntPolynomial(std::move(coeffs));
    } catch (const std::exception& e) {
        throw ParseError(std::string("polynomial JSON: ") + e.what());
    }
}

json poincare_to_json(const PoincareSeries& series) {
    json x_coeffs = json::array();
    for (int d = 0; d <= series.base().degree(); ++d)
        x_coeffs.push_back(series.base().coefficient(d).str());
    json betti = json::object();
    for (long long degree : series.t_degrees())
        betti[std::to_string(degree)] = series.betti(degree).str();
    return json{{"N", series.euclidean_dim()},
                {"x_coefficients", x_coeffs},
                {"t_degrees", series.t_degrees()},
                {"betti", betti}};
}

PoincareSeries poincare_from_json(const json& j) {
    try {
        std::vector<Int> coeffs;
        for (const auto& c : j.at("x_coefficients"))
            coeffs.push_back(c.is_string() ? Int(c.get<std::string>()) : Int(c.get<long long>()));
        return PoincareSeries(IntPolynomial(std::move(coeffs)), j.at("N").get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("series JSON: ") + e.what());
    }
}

json forest_to_json(const Forest& f) {
    json edges = json::array();
    for (const auto& [i, j] : f.edges) edges.push_back({i, j});
    return edges;
}

json forests_to_json(const std::vector<Forest>& fs) {
    json out = json::array();
    for (const auto& f : fs) out.push_back(forest_to_json(f));
    return out;
}

json lattice_to_json(const BondLattice& lattice) {
    json elements = json::array();
    for (int x = 0; x < lattice.size(); ++x) elements.push_back(lattice.element(x).to_string());
    json covers = json::array();
    for (const auto& [lower, upper] : lattice.cover_pairs()) covers.push_back({lower, upper});
    json counts = json::object();
    auto by_length = lattice.counts_by_length();
    for (size_t k = 1; k < by_length.size(); ++k)
        counts[std::to_string(k)] = by_length[k];
    return json{{"vertex_count", lattice.graph().vertex_count()},
                {"elements", elements},
                {"covers", covers},
                {"counts_by_length", counts}};
}

json betti_vector_to_json(const BettiVector& b) {
    // values()[0] is the rank in dimension -1
    return json(b.values());
}

json complex_to_json(const SimplicialComplex& c) {
    json facets = json::array();
    for (const auto& facet : c.facets()) facets.push_back(facet);
    return json{{"dimension", c.dimension()}, {"facets", facets}};
}

} // namespace chromaconf
