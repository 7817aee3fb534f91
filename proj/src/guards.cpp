#include "chromaconf/guards.hpp"

#include <cstdlib>
#include <sstream>

#include "chromaconf/errors.hpp"

namespace chromaconf {

Guards Guards::defaults() {
    Guards g;
    if (const char* env = std::getenv("CHROMACONF_GUARDS"); env && *env)
        g.parse_into(env);
    return g;
}

void Guards::parse_into(const std::string& spec) {
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InvalidArgument("guard override '" + item + "' is not key=value");
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        long long n = 0;
        try {
            size_t used = 0;
            n = std::stoll(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw InvalidArgument("guard override '" + key + "' needs an integer, got '" + value + "'");
        }
        if (n < 0) throw InvalidArgument("guard override '" + key + "' must be nonnegative");
        if (key == "edges") {
            forest_max_edges = static_cast<int>(n);
            orientation_max_edges = static_cast<int>(n);
        } else if (key == "vertices") {
            lattice_max_vertices = static_cast<int>(n);
        } else if (key == "oracle-vertices") {
            oracle_max_vertices = static_cast<int>(n);
        } else if (key == "lambda") {
            oracle_max_lambda = n;
        } else if (key == "gm") {
            gm_max_vertices = static_cast<int>(n);
        } else if (key == "faces") {
            complex_max_faces = n;
        } else {
            throw InvalidArgument("unknown guard key '" + key +
                                  "' (expected edges, vertices, oracle-vertices, lambda, gm, faces)");
        }
    }
}

} // namespace chromaconf
