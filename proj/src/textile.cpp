#include "ctextile/textile.hpp"

#include <algorithm>
#include <sstream>

namespace ctextile {

namespace {

std::string pair_text(const SymbolPair& p) { return "(" + p.first + "," + p.second + ")"; }

std::vector<SymbolPair> nonzero_pairs(const CsdsSystem& first, const CsdsSystem& second) {
    std::vector<SymbolPair> out;
    for (int x = 0; x < first.alphabet().size(); ++x)
        for (int y = 0; y < second.alphabet().size(); ++y)
            if (!(first.bits(x) * second.bits(y)).is_zero())
                out.push_back({first.alphabet().at(x), second.alphabet().at(y)});
    return out;
}

} // namespace

TextileSystem::TextileSystem(CsdsSystem rho, CsdsSystem eta, Specification kappa,
                             std::vector<Tile> tiles, std::vector<BoolMatrix> composites)
    : rho_(std::move(rho)), eta_(std::move(eta)), kappa_(std::move(kappa)),
      tiles_(std::move(tiles)), composites_(std::move(composites)) {
    for (int t = 0; t < static_cast<int>(tiles_.size()); ++t) {
        const Tile& w = tiles_[static_cast<size_t>(t)];
        by_top_right_[{w.top, w.right}] = t;
        by_left_bottom_[{w.left, w.bottom}] = t;
    }
}

TextileSystem TextileSystem::build(CsdsSystem rho, CsdsSystem eta, Specification kappa) {
    if (rho.dimension() != eta.dimension())
        fail(errc::size_mismatch, "systems live on algebras of different dimension");

    std::vector<SymbolPair> sigma_re = nonzero_pairs(rho, eta);
    std::vector<SymbolPair> sigma_er = nonzero_pairs(eta, rho);

    std::vector<SymbolPair> dom = kappa.domain(), cod = kappa.codomain();
    std::sort(dom.begin(), dom.end());
    std::sort(cod.begin(), cod.end());
    std::vector<SymbolPair> want_dom = sigma_re, want_cod = sigma_er;
    std::sort(want_dom.begin(), want_dom.end());
    std::sort(want_cod.begin(), want_cod.end());
    if (dom != want_dom) {
        for (const SymbolPair& p : want_dom)
            if (!kappa.has(p))
                fail(errc::domain_mismatch, "pair " + pair_text(p) + " has nonzero composite but no image");
        for (const SymbolPair& p : dom)
            if (!std::binary_search(want_dom.begin(), want_dom.end(), p))
                fail(errc::domain_mismatch, "pair " + pair_text(p) + " has zero composite but is mapped");
    }
    if (cod != want_cod) {
        for (const SymbolPair& p : want_cod)
            if (!kappa.has_inverse(p))
                fail(errc::domain_mismatch, "pair " + pair_text(p) + " has nonzero composite but no preimage");
        for (const SymbolPair& p : cod)
            if (!std::binary_search(want_cod.begin(), want_cod.end(), p))
                fail(errc::domain_mismatch, "pair " + pair_text(p) + " has zero composite but is hit");
    }

    // Tiles in the canonical order of their (top,right) pairs.
    std::vector<Tile> tiles;
    std::vector<BoolMatrix> composites;
    for (const SymbolPair& p : sigma_re) {
        const SymbolPair& q = kappa.apply(p);
        BoolMatrix lhs = rho.bits(p.first) * eta.bits(p.second);
        BoolMatrix rhs = eta.bits(q.first) * rho.bits(q.second);
        if (lhs != rhs)
            fail(errc::commutation_failure,
                 "composites of " + pair_text(p) + " and " + pair_text(q) + " differ");
        tiles.push_back({p.first, p.second, q.first, q.second});
        composites.push_back(std::move(lhs));
    }
    return TextileSystem(std::move(rho), std::move(eta), std::move(kappa), std::move(tiles),
                         std::move(composites));
}

namespace {

void check_commuting(const std::vector<std::vector<long long>>& a,
                     const std::vector<std::vector<long long>>& b) {
    const size_t n = a.size();
    if (b.size() != n) fail(errc::size_mismatch, "matrices have different sizes");
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            long long ab = 0, ba = 0;
            for (size_t j = 0; j < n; ++j) {
                ab += a[i][j] * b[j][k];
                ba += b[i][j] * a[j][k];
            }
            if (ab != ba) {
                std::ostringstream os;
                os << "AB(" << i + 1 << "," << k + 1 << ") = " << ab << " but BA(" << i + 1 << ","
                   << k + 1 << ") = " << ba;
                fail(errc::not_commuting, os.str());
            }
        }
}

} // namespace

TextileSystem TextileSystem::from_commuting_matrices(
    const std::vector<std::vector<long long>>& a, const std::vector<std::vector<long long>>& b,
    long long which) {
    if (which < 0) fail(errc::invalid_argument, "specification index must be nonnegative");
    check_commuting(a, b);
    SymbolicMatrix ma = from_integer_matrix(a, "a");
    SymbolicMatrix mb = from_integer_matrix(b, "b");
    std::vector<Specification> specs = find_specifications(ma, mb, which + 1);
    if (static_cast<long long>(specs.size()) <= which)
        fail(errc::no_specification, "only " + std::to_string(specs.size()) +
                                         " specification(s) exist, index " + std::to_string(which) +
                                         " requested");
    return build(CsdsSystem::from_symbolic_matrix(ma), CsdsSystem::from_symbolic_matrix(mb),
                 specs[static_cast<size_t>(which)]);
}

TextileSystem TextileSystem::from_commuting_matrices(
    const std::vector<std::vector<long long>>& a, const std::vector<std::vector<long long>>& b,
    const Specification& kappa) {
    check_commuting(a, b);
    SymbolicMatrix ma = from_integer_matrix(a, "a");
    SymbolicMatrix mb = from_integer_matrix(b, "b");
    return build(CsdsSystem::from_symbolic_matrix(ma), CsdsSystem::from_symbolic_matrix(mb), kappa);
}

int TextileSystem::tile_by_top_right(const Symbol& top, const Symbol& right) const {
    auto it = by_top_right_.find({top, right});
    return it == by_top_right_.end() ? -1 : it->second;
}

int TextileSystem::tile_by_left_bottom(const Symbol& left, const Symbol& bottom) const {
    auto it = by_left_bottom_.find({left, bottom});
    return it == by_left_bottom_.end() ? -1 : it->second;
}

namespace {

void check_patch(const Patch& p, int tile_count) {
    if (p.width <= 0 || p.height <= 0) fail(errc::invalid_argument, "patch must be nonempty");
    if (p.tiles.size() != static_cast<size_t>(p.width) * static_cast<size_t>(p.height))
        fail(errc::invalid_argument, "patch grid size disagrees with width*height");
    for (int t : p.tiles)
        if (t < 0 || t >= tile_count) fail(errc::invalid_argument, "patch tile index out of range");
}

} // namespace

bool TextileSystem::is_paved(const Patch& p) const {
    check_patch(p, static_cast<int>(tiles_.size()));
    for (int y = 0; y < p.height; ++y)
        for (int x = 0; x < p.width; ++x) {
            const Tile& here = tiles_[static_cast<size_t>(p.tile_at(x, y))];
            if (x + 1 < p.width) {
                const Tile& rightnb = tiles_[static_cast<size_t>(p.tile_at(x + 1, y))];
                if (here.right != rightnb.left) return false;
            }
            if (y + 1 < p.height) {
                const Tile& above = tiles_[static_cast<size_t>(p.tile_at(x, y + 1))];
                if (here.top != above.bottom) return false;
            }
        }
    return true;
}

bool TextileSystem::patch_admissible(const Patch& p) const {
    if (!is_paved(p)) fail(errc::not_paved, "patch is not paved");
    // Boundary composite of the sub-rectangle [x0..x1] x [y0..y1]: left-column
    // edges from the top cell down, then bottom-row edges left to right.
    for (int x0 = 0; x0 < p.width; ++x0)
        for (int y1 = 0; y1 < p.height; ++y1) {
            BoolMatrix eta_part = BoolMatrix::identity(dimension());
            for (int y0 = y1; y0 >= 0; --y0) {
                const Tile& corner = tiles_[static_cast<size_t>(p.tile_at(x0, y0))];
                eta_part = eta_part * eta_.bits(corner.left);
                BoolMatrix prod = eta_part;
                for (int x1 = x0; x1 < p.width; ++x1) {
                    const Tile& base = tiles_[static_cast<size_t>(p.tile_at(x1, y0))];
                    prod = prod * rho_.bits(base.bottom);
                    if (prod.is_zero()) return false;
                }
            }
        }
    return true;
}

BoolMatrix TextileSystem::diagonal_composite(const DiagonalWord& d) const {
    BoolMatrix acc = BoolMatrix::identity(dimension());
    for (int t : d.tiles) {
        if (t < 0 || t >= static_cast<int>(tiles_.size()))
            fail(errc::invalid_argument, "diagonal tile index out of range");
        acc = acc * composites_[static_cast<size_t>(t)];
        if (acc.is_zero()) break;
    }
    return acc;
}

Patch TextileSystem::propagate_from_diagonal(const DiagonalWord& d, int radius) const {
    const int k = static_cast<int>(d.tiles.size());
    if (k == 0) fail(errc::invalid_argument, "diagonal word must be nonempty");
    if (radius < 0) fail(errc::invalid_argument, "radius must be nonnegative");
    if (diagonal_composite(d).is_zero())
        fail(errc::inadmissible_diagonal, "diagonal tile word has zero composite");

    const int side = std::min<long long>(k, 2LL * radius + 1);
    const int off = (k - side) / 2;

    Patch p;
    p.width = p.height = side;
    p.origin_i = d.origin_i + off;
    p.origin_j = d.origin_j - off - (side - 1);
    p.tiles.assign(static_cast<size_t>(side) * side, -1);
    auto at = [&](int x, int y) -> int& { return p.tiles[static_cast<size_t>(y) * side + x]; };
    auto position = [&](int x, int y) {
        return std::make_pair(p.origin_i + x, p.origin_j + y);
    };
    for (int m = 0; m < side; ++m) at(m, side - 1 - m) = d.tiles[static_cast<size_t>(off + m)];

    for (int layer = 1; layer < side; ++layer) {
        // Upper-right band: cell has its left and below neighbors filled.
        for (int m = 0; m + layer < side; ++m) {
            const int x = m + layer, y = side - 1 - m;
            const Tile& leftnb = tiles_[static_cast<size_t>(at(x - 1, y))];
            const Tile& below = tiles_[static_cast<size_t>(at(x, y - 1))];
            int t = tile_by_left_bottom(leftnb.right, below.top);
            if (t < 0) {
                auto [pi, pj] = position(x, y);
                fail(errc::incompatible, "no tile with left=" + leftnb.right + " bottom=" +
                                             below.top + " at (" + std::to_string(pi) + "," +
                                             std::to_string(pj) + ")");
            }
            at(x, y) = t;
        }
        // Lower-left band: cell has its above and right neighbors filled.
        for (int m = 0; m + layer < side; ++m) {
            const int x = m, y = side - 1 - m - layer;
            const Tile& above = tiles_[static_cast<size_t>(at(x, y + 1))];
            const Tile& rightnb = tiles_[static_cast<size_t>(at(x + 1, y))];
            int t = tile_by_top_right(above.bottom, rightnb.left);
            if (t < 0) {
                auto [pi, pj] = position(x, y);
                fail(errc::incompatible, "no tile with top=" + above.bottom + " right=" +
                                             rightnb.left + " at (" + std::to_string(pi) + "," +
                                             std::to_string(pj) + ")");
            }
            at(x, y) = t;
        }
    }
    return p;
}

DiagonalWord TextileSystem::extract_antidiagonal(const Patch& p) const {
    check_patch(p, static_cast<int>(tiles_.size()));
    if (p.width != p.height)
        fail(errc::invalid_argument, "anti-diagonal extraction requires a square patch");
    DiagonalWord d;
    d.origin_i = p.origin_i;
    d.origin_j = p.origin_j + p.height - 1;
    for (int m = 0; m < p.width; ++m) d.tiles.push_back(p.tile_at(m, p.height - 1 - m));
    return d;
}

CsdsSystem TextileSystem::delta_system() const {
    std::vector<Symbol> names;
    for (const Tile& w : tiles_) names.push_back(pair_symbol(w.top, w.right));
    CsdsSystem sys(dimension(), Alphabet(std::move(names)), composites_);
    if (!sys.essential() || !sys.faithful())
        fail(errc::internal_invariant, "tile system is not essential and faithful");
    return sys;
}

namespace {

bool has_cycle(const BoolMatrix& adj) {
    const int n = adj.size();
    std::vector<int> color(static_cast<size_t>(n), 0); // 0 new, 1 active, 2 done
    auto dfs = [&](auto&& self, int v) -> bool {
        color[static_cast<size_t>(v)] = 1;
        for (int w = 0; w < n; ++w) {
            if (!adj.get(v, w)) continue;
            if (color[static_cast<size_t>(w)] == 1) return true;
            if (color[static_cast<size_t>(w)] == 0 && self(self, w)) return true;
        }
        color[static_cast<size_t>(v)] = 2;
        return false;
    };
    for (int v = 0; v < n; ++v)
        if (color[static_cast<size_t>(v)] == 0 && dfs(dfs, v)) return true;
    return false;
}

bool strongly_connected(const BoolMatrix& adj) {
    const int n = adj.size();
    BoolMatrix reach = adj | BoolMatrix::identity(n);
    for (int mid = 0; mid < n; ++mid)
        for (int i = 0; i < n; ++i)
            if (reach.get(i, mid))
                for (int j = 0; j < n; ++j)
                    if (reach.get(mid, j)) reach.set(i, j, true);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!reach.get(i, j)) return false;
    return true;
}

// Atom partition of the coordinate set generated by the unit-image supports
// of a system: coordinates are equivalent when they lie in exactly the same
// supports. Returned as a canonical set of sorted blocks.
std::vector<std::vector<int>> support_partition(const CsdsSystem& s) {
    const int n = s.dimension();
    std::map<std::vector<char>, std::vector<int>> classes;
    for (int j = 0; j < n; ++j) {
        std::vector<char> sig;
        for (int x = 0; x < s.alphabet().size(); ++x) {
            bool in_support = false;
            for (int i = 0; i < n && !in_support; ++i) in_support = s.bits(x).get(i, j);
            sig.push_back(in_support ? 1 : 0);
        }
        classes[sig].push_back(j);
    }
    std::vector<std::vector<int>> blocks;
    for (auto& [sig, block] : classes) blocks.push_back(block);
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

} // namespace

AnalysisReport TextileSystem::analyze() const {
    AnalysisReport rep;
    const int n = dimension();

    BoolMatrix delta_union(n);
    for (const BoolMatrix& c : composites_) delta_union = delta_union | c;
    rep.nonempty = has_cycle(delta_union);

    BoolMatrix rho_union(n), eta_union(n);
    for (int x = 0; x < rho_.alphabet().size(); ++x) rho_union = rho_union | rho_.bits(x);
    for (int a = 0; a < eta_.alphabet().size(); ++a) eta_union = eta_union | eta_.bits(a);
    rep.irreducible = strongly_connected(rho_union * eta_union);

    rep.forms_square = support_partition(rho_) == support_partition(eta_);
    return rep;
}

namespace {

std::vector<std::vector<long long>> letter_counts(const CsdsSystem& s) {
    const int n = s.dimension();
    std::vector<std::vector<long long>> out(static_cast<size_t>(n),
                                            std::vector<long long>(static_cast<size_t>(n), 0));
    for (int x = 0; x < s.alphabet().size(); ++x)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (s.bits(x).get(i, j)) ++out[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return out;
}

std::string pad_center(const std::string& s, size_t width) {
    if (s.size() >= width) return s;
    size_t left = (width - s.size()) / 2;
    size_t right = width - s.size() - left;
    return std::string(left, ' ') + s + std::string(right, ' ');
}

} // namespace

std::vector<std::vector<long long>> TextileSystem::lambda_matrix_rho() const {
    return letter_counts(rho_);
}

std::vector<std::vector<long long>> TextileSystem::lambda_matrix_eta() const {
    return letter_counts(eta_);
}

std::string TextileSystem::render_ascii(const Patch& p) const {
    check_patch(p, static_cast<int>(tiles_.size()));
    size_t horiz = 1, vert = 1;
    for (int t : p.tiles) {
        const Tile& w = tiles_[static_cast<size_t>(t)];
        horiz = std::max({horiz, w.top.size(), w.bottom.size()});
        vert = std::max({vert, w.left.size(), w.right.size()});
    }
    const size_t inner = std::max(horiz, 2 * vert + 1);
    std::string out;
    for (int y = p.height - 1; y >= 0; --y) {
        std::string l1, l2, l3;
        for (int x = 0; x < p.width; ++x) {
            if (x) {
                l1 += " ";
                l2 += " ";
                l3 += " ";
            }
            const Tile& w = tiles_[static_cast<size_t>(p.tile_at(x, y))];
            l1 += "⌜" + pad_center(w.top, inner) + "⌝";
            std::string mid = w.left;
            const size_t dots = inner - w.left.size() - w.right.size();
            mid += std::string((dots - 1) / 2, ' ') + "·" + std::string(dots / 2, ' ');
            mid += w.right;
            l2 += " " + mid + " ";
            l3 += "⌞" + pad_center(w.bottom, inner) + "⌟";
        }
        out += l1 + "\n" + l2 + "\n" + l3 + "\n";
    }
    return out;
}

std::string TextileSystem::render_svg(const Patch& p) const {
    check_patch(p, static_cast<int>(tiles_.size()));
    const int cell = 120, margin = 10;
    const int w_px = 2 * margin + cell * p.width;
    const int h_px = 2 * margin + cell * p.height;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_px << "\" height=\"" << h_px
       << "\" viewBox=\"0 0 " << w_px << " " << h_px << "\">\n";
    for (int y = p.height - 1; y >= 0; --y)
        for (int x = 0; x < p.width; ++x) {
            const Tile& t = tiles_[static_cast<size_t>(p.tile_at(x, y))];
            const int px = margin + cell * x;
            const int py = margin + cell * (p.height - 1 - y);
            os << "  <rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell
               << "\" height=\"" << cell
               << "\" style=\"fill:none;stroke:black;stroke-width:1\"/>\n";
            const char* style = "font-family:monospace;font-size:12px";
            os << "  <text x=\"" << px + cell / 2 << "\" y=\"" << py + 16
               << "\" text-anchor=\"middle\" style=\"" << style << "\">" << t.top << "</text>\n";
            os << "  <text x=\"" << px + cell - 4 << "\" y=\"" << py + cell / 2
               << "\" text-anchor=\"end\" style=\"" << style << "\">" << t.right << "</text>\n";
            os << "  <text x=\"" << px + 4 << "\" y=\"" << py + cell / 2
               << "\" text-anchor=\"start\" style=\"" << style << "\">" << t.left << "</text>\n";
            os << "  <text x=\"" << px + cell / 2 << "\" y=\"" << py + cell - 6
               << "\" text-anchor=\"middle\" style=\"" << style << "\">" << t.bottom
               << "</text>\n";
        }
    os << "</svg>\n";
    return os.str();
}

} // namespace ctextile
