#ifndef CHROMACONF_JSON_IO_HPP
#define CHROMACONF_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "chromaconf/bond_lattice.hpp"
#include "chromaconf/forests.hpp"
#include "chromaconf/poincare.hpp"
#include "chromaconf/polynomial.hpp"
#include "chromaconf/simplicial.hpp"

// JSON renderings of the library types. Arbitrary-precision integers are
// rendered as decimal strings so no consumer silently truncates them.

namespace chromaconf {

nlohmann::json polynomial_to_json(const IntPolynomial& p, const std::string& variable);
IntPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json poincare_to_json(const PoincareSeries& series);
PoincareSeries poincare_from_json(const nlohmann::json& j);

nlohmann::json forest_to_json(const Forest& f);
nlohmann::json forests_to_json(const std::vector<Forest>& fs);

nlohmann::json lattice_to_json(const BondLattice& lattice);

nlohmann::json betti_vector_to_json(const BettiVector& b);
nlohmann::json complex_to_json(const SimplicialComplex& c);

} // namespace chromaconf

#endif
