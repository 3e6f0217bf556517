#ifndef CTEXTILE_TEXTILE_HPP
#define CTEXTILE_TEXTILE_HPP

#include <string>
#include <vector>

#include "ctextile/csds.hpp"

namespace ctextile {

// A unit tile. Horizontal edges carry symbols of the first (row) system,
// vertical edges symbols of the second (column) system; the owning system's
// specification sends (top,right) to (left,bottom).
struct Tile {
    Symbol top;
    Symbol right;
    Symbol left;
    Symbol bottom;

    bool operator==(const Tile& rhs) const = default;
};

// Rectangular block of tiles. Coordinates follow the plane convention:
// i increases rightward, j increases upward; grid index (x,y) with
// 0 <= x < width, 0 <= y < height sits at position (origin_i + x,
// origin_j + y), so grid row y = 0 is the bottom row.
struct Patch {
    int width = 0;
    int height = 0;
    long long origin_i = 0;
    long long origin_j = 0;
    std::vector<int> tiles; // tile indices, row-major: tiles[y * width + x]

    int tile_at(int x, int y) const { return tiles[static_cast<size_t>(y) * width + x]; }
    bool operator==(const Patch& rhs) const = default;
};

// Tile sequence read down-right: entry m sits at (origin_i + m, origin_j - m).
struct DiagonalWord {
    long long origin_i = 0;
    long long origin_j = 0;
    std::vector<int> tiles;

    bool operator==(const DiagonalWord& rhs) const = default;
};

struct AnalysisReport {
    bool nonempty = false;
    bool irreducible = false;
    bool forms_square = false;
};

// Two symbolic dynamical systems on the same algebra, intertwined by a
// specification: for every pair (top,right) in the domain, the composite
// "top then right" equals the composite "left then bottom" of its image.
// Immutable after construction; all queries are pure.
class TextileSystem {
public:
    // Verifies that kappa's domain is exactly the set of pairs (x,y) with
    // nonzero composite "row-x then column-y", its codomain exactly the
    // reversed-order analogue, and that the commutation identity holds for
    // every pair. Throws domain_mismatch / commutation_failure otherwise.
    static TextileSystem build(CsdsSystem rho, CsdsSystem eta, Specification kappa);

    // Builds the edge-distinct systems of two commuting nonnegative integer
    // matrices and selects the `which`-th enumerated specification.
    static TextileSystem from_commuting_matrices(const std::vector<std::vector<long long>>& a,
                                                 const std::vector<std::vector<long long>>& b,
                                                 long long which);
    // Same, but validates an explicitly supplied specification instead.
    static TextileSystem from_commuting_matrices(const std::vector<std::vector<long long>>& a,
                                                 const std::vector<std::vector<long long>>& b,
                                                 const Specification& kappa);

    int dimension() const { return rho_.dimension(); }
    const CsdsSystem& rho() const { return rho_; }
    const CsdsSystem& eta() const { return eta_; }
    const Specification& kappa() const { return kappa_; }
    const std::vector<Tile>& tiles() const { return tiles_; }
    const BoolMatrix& tile_composite(int tile_idx) const {
        return composites_[static_cast<size_t>(tile_idx)];
    }
    // Index of the tile with the given (top,right) pair; -1 if absent.
    int tile_by_top_right(const Symbol& top, const Symbol& right) const;
    int tile_by_left_bottom(const Symbol& left, const Symbol& bottom) const;

    bool is_paved(const Patch& p) const;

    // Requires is_paved. True iff every sub-rectangle's boundary composite
    // (left-column edges top-down, then bottom-row edges left-right) is
    // nonzero.
    bool patch_admissible(const Patch& p) const;

    // Composite of a diagonal tile word, first tile acting first.
    BoolMatrix diagonal_composite(const DiagonalWord& d) const;

    // Unique fill-in around the diagonal: the tile up-right of an L-shape is
    // recovered from its (left,bottom) edges through the inverse
    // specification, the tile down-left from its (top,right) edges through
    // the specification. Returns the maximal square patch whose cells stay
    // within Chebyshev distance `radius` of the diagonal: the full square on
    // the diagonal's bounding box when 2*radius + 1 >= length, else the
    // centered sub-square of side 2*radius + 1.
    Patch propagate_from_diagonal(const DiagonalWord& d, int radius) const;

    // Anti-diagonal of a patch, top-left to bottom-right (requires a square
    // patch so the extraction is total).
    DiagonalWord extract_antidiagonal(const Patch& p) const;

    // System over the tile alphabet whose endomorphisms are the tile
    // composites; tiles are named by their (top,right) pair symbol.
    CsdsSystem delta_system() const;

    AnalysisReport analyze() const;

    // Per-letter occurrence counts of the row system: entry (i,j) counts the
    // symbols x with bits(x)(i,j) = 1. Feeds the K-theory pair formulas.
    std::vector<std::vector<long long>> lambda_matrix_rho() const;
    std::vector<std::vector<long long>> lambda_matrix_eta() const;

    std::string render_ascii(const Patch& p) const;
    std::string render_svg(const Patch& p) const;

private:
    TextileSystem(CsdsSystem rho, CsdsSystem eta, Specification kappa, std::vector<Tile> tiles,
                  std::vector<BoolMatrix> composites);

    CsdsSystem rho_;
    CsdsSystem eta_;
    Specification kappa_;
    std::vector<Tile> tiles_;
    std::vector<BoolMatrix> composites_;
    std::map<SymbolPair, int> by_top_right_;
    std::map<SymbolPair, int> by_left_bottom_;
};

} // namespace ctextile

#endif
