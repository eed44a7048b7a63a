#ifndef CANON_EHRHART_HPP
#define CANON_EHRHART_HPP

#include "canon/ratpoly.hpp"
#include "canon/rootloc.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace canon {

using LatticePoint = std::vector<std::int64_t>;

/// Full-dimensional lattice polytope given by its vertices. Construction
/// validates that every listed point is a distinct, genuine vertex.
class LatticePolytope {
public:
    LatticePolytope(int dim, std::vector<LatticePoint> vertices);

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] const std::vector<LatticePoint>& vertices() const { return vertices_; }

private:
    int dim_;
    std::vector<LatticePoint> vertices_;
};

struct Facet {
    LatticePoint normal;  // primitive, outward
    std::int64_t offset;  // normal . x <= offset on the polytope

    friend bool operator==(const Facet&, const Facet&) = default;
    friend auto operator<=>(const Facet&, const Facet&) = default;
};

struct FacetRep {
    std::vector<Facet> facets;  // sorted
};

/// Largest number of d-subsets facet enumeration will visit.
inline constexpr std::uint64_t kMaxFacetSubsets = 10'000'000;

/// Brute-force V-to-H conversion over all d-subsets of vertices. Throws
/// InputError for degenerate input, non-vertices, or more than
/// kMaxFacetSubsets subsets.
FacetRep facet_representation(int dim, const std::vector<LatticePoint>& points);
FacetRep facet_representation(const LatticePolytope& p);

/// |tP cap Z^d| by scanning the integer bounding box of tP.
std::uint64_t count_points(const LatticePolytope& p, const FacetRep& rep, std::int64_t t);
/// Lattice points strictly inside tP.
std::uint64_t count_interior_points(const LatticePolytope& p, const FacetRep& rep, std::int64_t t);

struct EhrhartResult {
    Polynomial polynomial;  // L(t)
    std::vector<std::pair<std::int64_t, std::uint64_t>> counts;  // interpolation + verification nodes
    RootReport at_half;
    bool cl = false;
};

/// Interpolates through t = 0..d and verifies at t = d+1, d+2; a mismatch
/// throws ConsistencyError.
EhrhartResult ehrhart_polynomial(const LatticePolytope& p);
EhrhartResult ehrhart_polynomial(const LatticePolytope& p, const FacetRep& rep);

bool is_reflexive(const LatticePolytope& p);
bool is_reflexive(const FacetRep& rep);
/// Every facet is a simplex whose d vertices form a lattice basis.
bool is_smooth_fan_polytope(const LatticePolytope& p);
bool is_smooth_fan_polytope(const LatticePolytope& p, const FacetRep& rep);
/// Only lattice points are the origin and the vertices.
bool is_terminal(const LatticePolytope& p, const FacetRep& rep);

enum class ConjectureProbe { SmoothFano, TerminalGorenstein3, None };
std::string probe_name(ConjectureProbe probe);

struct ConjectureReport {
    bool reflexive = false;
    bool smooth = false;
    bool terminal = false;
    ConjectureProbe probe = ConjectureProbe::None;
    EhrhartResult ehrhart;
};

ConjectureReport conjecture_verdict(const LatticePolytope& p);

struct NamedPolytope {
    std::string name;
    LatticePolytope polytope;
};

/// {"dim": d, "vertices": [[...], ...]}
LatticePolytope parse_polytope(const std::string& json_text);
LatticePolytope load_polytope(const std::filesystem::path& path);
/// Accepts a single polytope object or a catalog list of
/// {"name", "dim", "vertices"} objects.
std::vector<NamedPolytope> parse_catalog(const std::string& json_text);
std::vector<NamedPolytope> load_polytope_file(const std::filesystem::path& path);

/// Built-in catalogs: smooth-dim1, smooth-dim2, smooth-dim3.
std::vector<NamedPolytope> load_catalog(const std::string& name);
std::vector<std::string> catalog_names();

} // namespace canon

#endif
