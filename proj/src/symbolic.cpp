#include "ctextile/symbolic.hpp"

#include <algorithm>
#include <sstream>

namespace ctextile {

const char* errc_name(errc c) {
    switch (c) {
        case errc::zero_row_or_column: return "ZeroRowOrColumn";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::domain_gap: return "DomainGap";
        case errc::not_edge_distinct: return "NotEdgeDistinct";
        case errc::invalid_matrix: return "InvalidMatrix";
        case errc::unknown_symbol: return "UnknownSymbol";
        case errc::domain_mismatch: return "DomainMismatch";
        case errc::commutation_failure: return "CommutationFailure";
        case errc::not_commuting: return "NotCommuting";
        case errc::no_specification: return "NoSpecification";
        case errc::not_paved: return "NotPaved";
        case errc::incompatible: return "Incompatible";
        case errc::inadmissible_diagonal: return "InadmissibleDiagonal";
        case errc::internal_invariant: return "InternalInvariant";
        case errc::not_square: return "NotSquare";
        case errc::parse_error: return "ParseError";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

bool is_atomic_symbol(const Symbol& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
        if (c == '+' || c == '=' || c == ',' || c == '(' || c == ')') return false;
    }
    return true;
}

bool is_valid_symbol(const Symbol& s) {
    if (is_atomic_symbol(s)) return true;
    auto p = split_pair_symbol(s);
    return p && is_valid_symbol(p->first) && is_valid_symbol(p->second);
}

Symbol pair_symbol(const Symbol& a, const Symbol& b) { return "(" + a + "," + b + ")"; }

std::optional<std::pair<Symbol, Symbol>> split_pair_symbol(const Symbol& s) {
    if (s.size() < 5 || s.front() != '(' || s.back() != ')') return std::nullopt;
    int depth = 0;
    for (size_t k = 1; k + 1 < s.size(); ++k) {
        if (s[k] == '(') ++depth;
        else if (s[k] == ')') { if (--depth < 0) return std::nullopt; }
        else if (s[k] == ',' && depth == 0) {
            Symbol a = s.substr(1, k - 1);
            Symbol b = s.substr(k + 1, s.size() - k - 2);
            if (a.empty() || b.empty()) return std::nullopt;
            return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
        const Symbol& s = symbols_[static_cast<size_t>(i)];
        if (!is_valid_symbol(s)) fail(errc::invalid_argument, "bad symbol token '" + s + "'");
        if (!index_.emplace(s, i).second)
            fail(errc::invalid_argument, "duplicate symbol '" + s + "' in alphabet");
    }
}

int Alphabet::index_of(const Symbol& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) fail(errc::unknown_symbol, "symbol '" + s + "' not in alphabet");
    return it->second;
}

SymbolicMatrix::SymbolicMatrix(int n, Alphabet alphabet,
                               std::vector<std::vector<std::vector<int>>> cells)
    : n_(n), alphabet_(std::move(alphabet)), cells_(std::move(cells)) {
    if (n <= 0) fail(errc::invalid_argument, "matrix size must be positive");
    if (cells_.size() != static_cast<size_t>(n))
        fail(errc::invalid_argument, "cell grid has wrong number of rows");
    std::vector<char> seen(static_cast<size_t>(alphabet_.size()), 0);
    for (auto& row : cells_) {
        if (row.size() != static_cast<size_t>(n))
            fail(errc::invalid_argument, "cell grid has wrong number of columns");
        for (auto& cell : row) {
            std::sort(cell.begin(), cell.end());
            for (int idx : cell) {
                if (idx < 0 || idx >= alphabet_.size())
                    fail(errc::invalid_argument, "cell symbol index out of range");
                seen[static_cast<size_t>(idx)] = 1;
            }
        }
    }
    for (int i = 0; i < alphabet_.size(); ++i)
        if (!seen[static_cast<size_t>(i)])
            fail(errc::invalid_argument,
                 "orphan symbol '" + alphabet_.at(i) + "' occurs in no entry");
}

SymbolicMatrix SymbolicMatrix::from_cells(
    int n, const Alphabet& alphabet,
    const std::vector<std::vector<std::vector<Symbol>>>& cells) {
    std::vector<std::vector<std::vector<int>>> idx_cells(
        static_cast<size_t>(n), std::vector<std::vector<int>>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const Symbol& s : cells[static_cast<size_t>(i)][static_cast<size_t>(j)])
                idx_cells[static_cast<size_t>(i)][static_cast<size_t>(j)].push_back(
                    alphabet.index_of(s));
    return SymbolicMatrix(n, alphabet, std::move(idx_cells));
}

std::vector<Symbol> SymbolicMatrix::cell_symbols(int i, int j) const {
    std::vector<Symbol> out;
    for (int idx : cell(i, j)) out.push_back(alphabet_.at(idx));
    return out;
}

bool SymbolicMatrix::operator==(const SymbolicMatrix& rhs) const {
    if (n_ != rhs.n_ || alphabet_.symbols() != rhs.alphabet_.symbols()) return false;
    return cells_ == rhs.cells_;
}

BitTensor::BitTensor(int n, Alphabet alphabet, std::vector<BoolMatrix> bits)
    : n_(n), alphabet_(std::move(alphabet)), bits_(std::move(bits)) {
    if (bits_.size() != static_cast<size_t>(alphabet_.size()))
        fail(errc::invalid_argument, "bit tensor size disagrees with alphabet");
    for (const auto& b : bits_)
        if (b.size() != n) fail(errc::size_mismatch, "bit matrix size disagrees with n");
}

BitTensor BitTensor::of(const SymbolicMatrix& m) {
    std::vector<BoolMatrix> bits(static_cast<size_t>(m.alphabet().size()), BoolMatrix(m.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            for (int idx : m.cell(i, j)) bits[static_cast<size_t>(idx)].set(i, j, true);
    return BitTensor(m.size(), m.alphabet(), std::move(bits));
}

Specification::Specification(std::vector<std::pair<SymbolPair, SymbolPair>> entries)
    : entries_(std::move(entries)) {
    for (const auto& [src, dst] : entries_) {
        if (!forward_.emplace(src, dst).second)
            fail(errc::invalid_argument, "specification maps (" + src.first + "," + src.second +
                                             ") twice");
        if (!inverse_.emplace(dst, src).second)
            fail(errc::invalid_argument, "specification is not injective at (" + dst.first + "," +
                                             dst.second + ")");
    }
}

const SymbolPair& Specification::apply(const SymbolPair& p) const {
    auto it = forward_.find(p);
    if (it == forward_.end())
        fail(errc::domain_gap, "pair (" + p.first + "," + p.second + ") has no image");
    return it->second;
}

const SymbolPair& Specification::invert(const SymbolPair& q) const {
    auto it = inverse_.find(q);
    if (it == inverse_.end())
        fail(errc::domain_gap, "pair (" + q.first + "," + q.second + ") has no preimage");
    return it->second;
}

std::vector<SymbolPair> Specification::domain() const {
    std::vector<SymbolPair> out;
    for (const auto& e : entries_) out.push_back(e.first);
    return out;
}

std::vector<SymbolPair> Specification::codomain() const {
    std::vector<SymbolPair> out;
    for (const auto& e : entries_) out.push_back(e.second);
    return out;
}

ValidityReport validate(const SymbolicMatrix& m) {
    ValidityReport rep;
    rep.essential = true;
    rep.left_resolving = true;
    const int n = m.size();
    for (int i = 0; i < n; ++i) {
        bool any = false;
        for (int j = 0; j < n; ++j) any = any || !m.cell(i, j).empty();
        if (!any) {
            rep.essential = false;
            rep.offending.push_back({Violation::Kind::zero_row, i + 1, -1, {}});
        }
    }
    for (int j = 0; j < n; ++j) {
        bool any = false;
        for (int i = 0; i < n; ++i) any = any || !m.cell(i, j).empty();
        if (!any) {
            rep.essential = false;
            rep.offending.push_back({Violation::Kind::zero_column, -1, j + 1, {}});
        }
    }
    // Per column: a symbol may occur in one row only, and once in that cell.
    for (int j = 0; j < n; ++j) {
        std::map<int, int> first_row; // symbol index -> first row seen
        for (int i = 0; i < n; ++i) {
            int prev = -1;
            for (int idx : m.cell(i, j)) {
                if (idx == prev) {
                    rep.left_resolving = false;
                    rep.offending.push_back(
                        {Violation::Kind::left_resolving, i + 1, j + 1, m.alphabet().at(idx)});
                    prev = idx;
                    continue;
                }
                prev = idx;
                auto [it, inserted] = first_row.emplace(idx, i);
                if (!inserted && it->second != i) {
                    rep.left_resolving = false;
                    rep.offending.push_back(
                        {Violation::Kind::left_resolving, i + 1, j + 1, m.alphabet().at(idx)});
                }
            }
        }
    }
    return rep;
}

SymbolicMatrix from_integer_matrix(const std::vector<std::vector<long long>>& a,
                                   const std::string& prefix) {
    const int n = static_cast<int>(a.size());
    if (n == 0) fail(errc::invalid_argument, "empty matrix");
    if (!is_atomic_symbol(prefix)) fail(errc::invalid_argument, "bad symbol prefix");
    for (const auto& row : a) {
        if (row.size() != static_cast<size_t>(n)) fail(errc::size_mismatch, "matrix not square");
        for (long long v : row)
            if (v < 0) fail(errc::invalid_argument, "negative entry");
    }
    for (int i = 0; i < n; ++i) {
        long long row_sum = 0, col_sum = 0;
        for (int j = 0; j < n; ++j) {
            row_sum += a[static_cast<size_t>(i)][static_cast<size_t>(j)];
            col_sum += a[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
        if (row_sum == 0)
            fail(errc::zero_row_or_column, "row " + std::to_string(i + 1) + " is zero");
        if (col_sum == 0)
            fail(errc::zero_row_or_column, "column " + std::to_string(i + 1) + " is zero");
    }
    std::vector<Symbol> symbols;
    std::vector<std::vector<std::vector<Symbol>>> cells(
        static_cast<size_t>(n), std::vector<std::vector<Symbol>>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (long long k = 1; k <= a[static_cast<size_t>(i)][static_cast<size_t>(j)]; ++k) {
                Symbol s = prefix + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" +
                           std::to_string(k);
                symbols.push_back(s);
                cells[static_cast<size_t>(i)][static_cast<size_t>(j)].push_back(s);
            }
    return SymbolicMatrix::from_cells(n, Alphabet(std::move(symbols)), cells);
}

SymbolicMatrix multiply(const SymbolicMatrix& m, const SymbolicMatrix& n) {
    if (m.size() != n.size()) fail(errc::size_mismatch, "factors have different sizes");
    const int sz = m.size();
    // Pair (x,y) keyed by (index in m, index in n): canonical ordering.
    std::map<std::pair<int, int>, int> pair_index;
    std::vector<Symbol> pair_symbols;
    std::vector<std::vector<std::vector<std::pair<int, int>>>> raw(
        static_cast<size_t>(sz),
        std::vector<std::vector<std::pair<int, int>>>(static_cast<size_t>(sz)));
    for (int i = 0; i < sz; ++i)
        for (int k = 0; k < sz; ++k)
            for (int j = 0; j < sz; ++j)
                for (int x : m.cell(i, j))
                    for (int y : n.cell(j, k)) {
                        raw[static_cast<size_t>(i)][static_cast<size_t>(k)].emplace_back(x, y);
                        pair_index.emplace(std::make_pair(x, y), 0);
                    }
    int next = 0;
    for (auto& [key, idx] : pair_index) {
        idx = next++;
        pair_symbols.push_back(pair_symbol(m.alphabet().at(key.first), n.alphabet().at(key.second)));
    }
    std::vector<std::vector<std::vector<int>>> cells(
        static_cast<size_t>(sz), std::vector<std::vector<int>>(static_cast<size_t>(sz)));
    for (int i = 0; i < sz; ++i)
        for (int k = 0; k < sz; ++k)
            for (const auto& pr : raw[static_cast<size_t>(i)][static_cast<size_t>(k)])
                cells[static_cast<size_t>(i)][static_cast<size_t>(k)].push_back(pair_index.at(pr));
    return SymbolicMatrix(sz, Alphabet(std::move(pair_symbols)), std::move(cells));
}

namespace {

SymbolPair pair_of_symbol(const Symbol& s) {
    auto p = split_pair_symbol(s);
    if (!p) fail(errc::domain_gap, "symbol '" + s + "' is not a pair symbol");
    return *p;
}

} // namespace

bool check_specification(const SymbolicMatrix& mn, const SymbolicMatrix& nm,
                         const Specification& kappa) {
    if (mn.size() != nm.size()) fail(errc::size_mismatch, "matrices have different sizes");
    for (const Symbol& s : mn.alphabet().symbols()) {
        if (!kappa.has(pair_of_symbol(s)))
            fail(errc::domain_gap, "symbol '" + s + "' has no image under the specification");
    }
    for (int i = 0; i < mn.size(); ++i)
        for (int j = 0; j < mn.size(); ++j) {
            std::vector<Symbol> mapped;
            for (int idx : mn.cell(i, j)) {
                const SymbolPair& q = kappa.apply(pair_of_symbol(mn.alphabet().at(idx)));
                mapped.push_back(pair_symbol(q.first, q.second));
            }
            std::vector<Symbol> want = nm.cell_symbols(i, j);
            std::sort(mapped.begin(), mapped.end());
            std::sort(want.begin(), want.end());
            if (mapped != want) return false;
        }
    return true;
}

bool is_edge_distinct(const SymbolicMatrix& m) {
    std::vector<int> count(static_cast<size_t>(m.alphabet().size()), 0);
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            for (int idx : m.cell(i, j)) ++count[static_cast<size_t>(idx)];
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

namespace {

struct CellMatch {
    std::vector<SymbolPair> sources; // sorted canonically
    std::vector<SymbolPair> targets; // sorted canonically
    std::vector<int> perm;           // current assignment: sources[t] -> targets[perm[t]]
};

void require_edge_distinct(const SymbolicMatrix& m, const char* which) {
    if (!is_edge_distinct(m))
        fail(errc::not_edge_distinct,
             std::string("matrix ") + which + " has a symbol occurring in two cells");
}

std::vector<CellMatch> cell_matchings(const SymbolicMatrix& p, const SymbolicMatrix& q,
                                      bool& feasible) {
    feasible = true;
    std::vector<CellMatch> cells;
    for (int i = 0; i < p.size(); ++i)
        for (int k = 0; k < p.size(); ++k) {
            const auto& pc = p.cell(i, k);
            const auto& qc = q.cell(i, k);
            if (pc.size() != qc.size()) {
                feasible = false;
                return cells;
            }
            if (pc.empty()) continue;
            CellMatch cm;
            for (int idx : pc) cm.sources.push_back(pair_of_symbol(p.alphabet().at(idx)));
            for (int idx : qc) cm.targets.push_back(pair_of_symbol(q.alphabet().at(idx)));
            cm.perm.resize(pc.size());
            for (size_t t = 0; t < cm.perm.size(); ++t) cm.perm[t] = static_cast<int>(t);
            cells.push_back(std::move(cm));
        }
    return cells;
}

} // namespace

std::vector<Specification> find_specifications(const SymbolicMatrix& m, const SymbolicMatrix& n,
                                               long long limit) {
    if (m.size() != n.size()) fail(errc::size_mismatch, "matrices have different sizes");
    if (limit <= 0) fail(errc::invalid_argument, "limit must be positive");
    require_edge_distinct(m, "M");
    require_edge_distinct(n, "N");
    SymbolicMatrix p = multiply(m, n);
    SymbolicMatrix q = multiply(n, m);
    bool feasible = true;
    std::vector<CellMatch> cells = cell_matchings(p, q, feasible);
    if (!feasible) return {};

    std::vector<Specification> out;
    while (static_cast<long long>(out.size()) < limit) {
        std::vector<std::pair<SymbolPair, SymbolPair>> entries;
        for (const CellMatch& cm : cells)
            for (size_t t = 0; t < cm.sources.size(); ++t)
                entries.emplace_back(cm.sources[t], cm.targets[static_cast<size_t>(cm.perm[t])]);
        out.emplace_back(std::move(entries));
        // Odometer step: advance the last cell's permutation, carrying left.
        int c = static_cast<int>(cells.size()) - 1;
        while (c >= 0 && !std::next_permutation(cells[static_cast<size_t>(c)].perm.begin(),
                                                cells[static_cast<size_t>(c)].perm.end()))
            --c;
        if (c < 0) break;
    }
    return out;
}

long long count_specifications(const SymbolicMatrix& m, const SymbolicMatrix& n, long long cap) {
    if (m.size() != n.size()) fail(errc::size_mismatch, "matrices have different sizes");
    require_edge_distinct(m, "M");
    require_edge_distinct(n, "N");
    SymbolicMatrix p = multiply(m, n);
    SymbolicMatrix q = multiply(n, m);
    long long total = 1;
    for (int i = 0; i < p.size(); ++i)
        for (int k = 0; k < p.size(); ++k) {
            size_t a = p.cell(i, k).size(), b = q.cell(i, k).size();
            if (a != b) return 0;
            for (size_t t = 2; t <= a; ++t) {
                total *= static_cast<long long>(t);
                if (total >= cap) return cap;
            }
        }
    return total;
}

} // namespace ctextile
