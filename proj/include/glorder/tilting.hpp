#ifndef GLORDER_TILTING_HPP
#define GLORDER_TILTING_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "glorder/glring.hpp"
#include "glorder/lgroup.hpp"
#include "glorder/projcohom.hpp"

namespace glorder {

// The tilting bundle as its list of twist summands; build_tilting fills the
// full interval [0, d*c], tests may construct custom summand lists.
struct TiltingDatum {
    GLType type;
    std::vector<LElement> summands;
};

TiltingDatum build_tilting(const GLType& t);

struct CartanMatrix {
    std::vector<LElement> summands;
    std::vector<std::vector<long long>> entries; // (x, y) -> dim Hom(P(x), P(y))

    long long total() const;
};

CartanMatrix cartan(const TiltingDatum& T);

struct RigidityReport {
    bool ok = true;           // every Ext^i with i > 0 vanishes
    bool ell_in_range = true; // every pairwise twist lies in [-d, d]
    long long ell_min = 0;
    long long ell_max = 0;
    std::size_t pairs_checked = 0;

    struct Witness {
        int from, to;  // summand indices
        long long ell; // twist of the difference
        int degree;    // cohomological degree i > 0
        long long dim; // nonzero Ext dimension found
    };
    std::vector<Witness> violations;
};

// Sweeps all ordered summand pairs; certifies vanishing of positive-degree
// self-extensions and the [-d, d] twist window.
RigidityReport rigidity_report(const TiltingDatum& T);

// End(T) with Hom components realized as graded pieces of the ring:
// the basis of Hom(P(x), P(y)) is monomial_basis(y - x) and composition is
// ring multiplication.
struct EndoAlgebra {
    GLType type;
    std::vector<LElement> summands;
    std::vector<std::vector<std::vector<ReducedMonomial>>> bases; // [from][to]

    long long dim(int from, int to) const { return static_cast<long long>(bases[from][to].size()); }
    long long total_dim() const;

    // (x -> y, basis index u) composed with (y -> z, basis index v), as an
    // element of R_{z-x}.
    RingElement compose(int x, int y, int u, int z, int v) const;
    // The same product expanded in the basis of the (x, z) component.
    std::vector<Rational> compose_coeffs(int x, int y, int u, int z, int v) const;
};

EndoAlgebra endo_algebra(const TiltingDatum& T);

// Expansion of a homogeneous element in the monomial basis of its component;
// throws if a term falls outside the given basis.
std::vector<Rational> expand_in_basis(const RingElement& f, const std::vector<ReducedMonomial>& basis);

struct Arrow {
    int from, to; // vertex indices
    int gen;      // 0-based generator index
};

struct PathTerm {
    Rational coef;
    std::vector<int> gens; // arrows applied left to right, 0-based generators
};

struct Relation {
    int at; // source vertex index
    std::vector<PathTerm> terms;
};

struct QuiverPresentation {
    std::vector<LElement> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    std::vector<int> pivot; // 0-based indices of the chosen basis of forms
};

// Vertices are the summands, arrows are the x_i steps that stay inside the
// interval. Relations: commutativity squares wherever all four corners are
// vertices, and for every non-pivot index the power relation
// x_i^{p_i} = sum_j mu_{ij} x_j^{p_j} at every vertex where all paths stay
// inside. Throws arrow_insufficient_error when n <= d.
QuiverPresentation quiver_presentation(const TiltingDatum& T,
                                       const std::optional<std::vector<int>>& pivot_override = std::nullopt);

struct GenerationReport {
    bool ok = true;
    std::size_t pairs_checked = 0;

    struct Deficit {
        int from, to;
        long long span_dim;
        long long hom_dim;
    };
    std::vector<Deficit> deficits;
};

// For every ordered pair, compares the span of arrow-path composites with the
// full Hom dimension and reports any deficit.
GenerationReport arrow_generation_check(const TiltingDatum& T);

} // namespace glorder

#endif
