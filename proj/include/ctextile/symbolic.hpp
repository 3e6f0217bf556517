#ifndef CTEXTILE_SYMBOLIC_HPP
#define CTEXTILE_SYMBOLIC_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctextile/bool_matrix.hpp"
#include "ctextile/error.hpp"

namespace ctextile {

// A symbol is a nonempty token. Atomic symbols may not contain whitespace,
// '+', '=', ',', '(' or ')'; symbols of a product matrix are rendered
// "(left,right)" and parse back unambiguously because atomic tokens are
// comma- and paren-free.
using Symbol = std::string;

bool is_atomic_symbol(const Symbol& s);
bool is_valid_symbol(const Symbol& s); // atomic or a well-formed pair rendering

Symbol pair_symbol(const Symbol& a, const Symbol& b);
// Splits "(a,b)" at the top-level comma; nullopt for atomic symbols.
std::optional<std::pair<Symbol, Symbol>> split_pair_symbol(const Symbol& s);

// Ordered set of symbols; the list order is the canonical iteration and
// serialization order everywhere in the library.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Symbol> symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    const Symbol& at(int idx) const { return symbols_[static_cast<size_t>(idx)]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    bool contains(const Symbol& s) const { return index_.count(s) != 0; }
    int index_of(const Symbol& s) const; // throws unknown_symbol

private:
    std::vector<Symbol> symbols_;
    std::map<Symbol, int> index_;
};

struct Violation {
    enum class Kind { zero_row, zero_column, left_resolving };
    Kind kind;
    int row = -1;    // 1-based; -1 when not applicable
    int col = -1;    // 1-based; -1 when not applicable
    Symbol symbol;   // empty when not applicable
};

struct ValidityReport {
    bool essential = false;
    bool left_resolving = false;
    std::vector<Violation> offending;
};

// Square matrix whose entries are finite multisets of symbols (formal sums).
// Cells store alphabet indices sorted ascending; repetition encodes
// multiplicity and an empty cell is the zero entry.
class SymbolicMatrix {
public:
    SymbolicMatrix(int n, Alphabet alphabet,
                   std::vector<std::vector<std::vector<int>>> cells);

    // Cell contents given as symbol tokens (any order, repeats allowed).
    static SymbolicMatrix from_cells(int n, const Alphabet& alphabet,
                                     const std::vector<std::vector<std::vector<Symbol>>>& cells);

    int size() const { return n_; }
    const Alphabet& alphabet() const { return alphabet_; }
    // 0-based access; sorted symbol indices with multiplicity.
    const std::vector<int>& cell(int i, int j) const { return cells_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    std::vector<Symbol> cell_symbols(int i, int j) const;

    bool operator==(const SymbolicMatrix& rhs) const;

private:
    int n_;
    Alphabet alphabet_;
    std::vector<std::vector<std::vector<int>>> cells_;
};

// Per-symbol 0-1 occurrence matrices: bits(alpha)(i,j) = 1 exactly when
// alpha occurs in entry (i,j), multiplicity collapsed.
class BitTensor {
public:
    BitTensor(int n, Alphabet alphabet, std::vector<BoolMatrix> bits);
    static BitTensor of(const SymbolicMatrix& m);

    int size() const { return n_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const BoolMatrix& bits(int symbol_idx) const { return bits_[static_cast<size_t>(symbol_idx)]; }
    const BoolMatrix& bits(const Symbol& s) const { return bits_[static_cast<size_t>(alphabet_.index_of(s))]; }

private:
    int n_;
    Alphabet alphabet_;
    std::vector<BoolMatrix> bits_;
};

using SymbolPair = std::pair<Symbol, Symbol>;

// A bijection between two explicitly stored sets of ordered symbol pairs.
class Specification {
public:
    // Entries are kept in the given order, which is the canonical print and
    // iteration order. Rejects non-bijections.
    explicit Specification(std::vector<std::pair<SymbolPair, SymbolPair>> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    const std::vector<std::pair<SymbolPair, SymbolPair>>& entries() const { return entries_; }

    bool has(const SymbolPair& p) const { return forward_.count(p) != 0; }
    bool has_inverse(const SymbolPair& q) const { return inverse_.count(q) != 0; }
    const SymbolPair& apply(const SymbolPair& p) const;   // throws domain_gap
    const SymbolPair& invert(const SymbolPair& q) const;  // throws domain_gap

    std::vector<SymbolPair> domain() const;
    std::vector<SymbolPair> codomain() const;

private:
    std::vector<std::pair<SymbolPair, SymbolPair>> entries_;
    std::map<SymbolPair, SymbolPair> forward_;
    std::map<SymbolPair, SymbolPair> inverse_;
};

ValidityReport validate(const SymbolicMatrix& m);

// Edge-distinct symbolic matrix of the directed graph with A(i,j) edges from
// vertex i to vertex j; symbol names are "<prefix><i>_<j>_<k>" (1-based).
SymbolicMatrix from_integer_matrix(const std::vector<std::vector<long long>>& a,
                                   const std::string& prefix);

// Formal product: entry (i,k) collects the pair symbols (x,y) over all j with
// x in M(i,j) and y in N(j,k); the result alphabet is exactly the set of
// pairs occurring, ordered by (index of x in M, index of y in N).
SymbolicMatrix multiply(const SymbolicMatrix& m, const SymbolicMatrix& n);

// True iff replacing every symbol s of `mn` by kappa(s) yields `nm`, entry by
// entry as multisets.
bool check_specification(const SymbolicMatrix& mn, const SymbolicMatrix& nm,
                         const Specification& kappa);

bool is_edge_distinct(const SymbolicMatrix& m);

// Enumerates specifications between multiply(m,n) and multiply(n,m) for
// edge-distinct m, n. Every pair symbol lives in exactly one cell, so the
// search is the independent product of per-cell bijections; cells are visited
// in row-major order and per-cell matchings in lexicographic order of the
// canonical pair ordering, with the later cells varying fastest. Returns up
// to `limit` specifications; empty when some cell sizes disagree.
std::vector<Specification> find_specifications(const SymbolicMatrix& m,
                                               const SymbolicMatrix& n,
                                               long long limit);

// Total number of specifications as a product of per-cell factorials, capped
// at `cap` to keep the computation cheap.
long long count_specifications(const SymbolicMatrix& m, const SymbolicMatrix& n,
                               long long cap);

} // namespace ctextile

#endif
