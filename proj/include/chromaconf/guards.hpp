#ifndef CHROMACONF_GUARDS_HPP
#define CHROMACONF_GUARDS_HPP

#include <string>

namespace chromaconf {

/// Resource guards for the brute-force oracles and enumerations.
///
/// Every exhaustive computation in the library checks one of these limits
/// and throws GuardExceeded instead of hanging. Defaults can be overridden
/// through the CHROMACONF_GUARDS environment variable (comma-separated
/// key=value pairs, see parse_into) or per-call.
struct Guards {
    int forest_max_edges = 24;          // spanning-forest enumeration
    int orientation_max_edges = 24;     // acyclic-orientation oracle
    int oracle_max_vertices = 12;       // proper-coloring oracle
    long long oracle_max_lambda = 16;   // proper-coloring oracle
    int lattice_max_vertices = 10;      // bond-lattice construction
    int gm_max_vertices = 6;            // interval-homology route
    long long complex_max_faces = 2000000; // order-complex face budget

    /// Library defaults with CHROMACONF_GUARDS (if set) applied on top.
    static Guards defaults();

    /// Apply overrides from a spec string such as
    /// "edges=28,vertices=11,lambda=20,oracle-vertices=13,gm=6,faces=500000".
    /// Unknown keys or non-numeric values raise InvalidArgument.
    void parse_into(const std::string& spec);
};

} // namespace chromaconf

#endif
