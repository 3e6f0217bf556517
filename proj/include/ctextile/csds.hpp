#ifndef CTEXTILE_CSDS_HPP
#define CTEXTILE_CSDS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <tuple>
#include <vector>

#include "ctextile/symbolic.hpp"

namespace ctextile {

// Word over a system's alphabet, stored as alphabet indices. The empty word
// is allowed and composes to the identity.
using Word = std::vector<int>;

// Symbolic dynamical system over the diagonal algebra of dimension n: one
// endomorphism per symbol, encoded by a 0-1 matrix with bits(s)(i,j) = 1 when
// the s-endomorphism maps the i-th minimal projection onto one dominating the
// j-th. Values are immutable; all queries are pure.
class CsdsSystem {
public:
    CsdsSystem(int n, Alphabet alphabet, std::vector<BoolMatrix> bits);

    // Requires an essential, left-resolving matrix; throws invalid_matrix
    // otherwise (the report is rendered into the message).
    static CsdsSystem from_symbolic_matrix(const SymbolicMatrix& m);

    int dimension() const { return n_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const BoolMatrix& bits(int symbol_idx) const { return bits_[static_cast<size_t>(symbol_idx)]; }
    const BoolMatrix& bits(const Symbol& s) const { return bits(alphabet_.index_of(s)); }
    bool essential() const { return essential_; }
    bool faithful() const { return faithful_; }

    // Composite of the word with the first letter acting first:
    // bits(w[0]) * bits(w[1]) * ... as boolean matrices. Empty word gives the
    // identity. The word is admissible iff the result is nonzero.
    BoolMatrix compose(const Word& w) const;
    BoolMatrix compose_symbols(const std::vector<Symbol>& w) const;
    bool admissible(const Word& w) const { return !compose(w).is_zero(); }

    // All admissible words of length k in lexicographic (alphabet) order.
    std::vector<Word> language(int k) const;
    // Count of admissible words of length k without materializing the list.
    boost::multiprecision::cpp_int language_count(int k) const;

    std::string word_string(const Word& w) const;

private:
    int n_;
    Alphabet alphabet_;
    std::vector<BoolMatrix> bits_;
    bool essential_;
    bool faithful_;
};

// Tensor pair: lifts two systems to the product algebra of dimension n1*n2,
// the first acting on the left factor and the second on the right, together
// with the flip specification (x,y) -> (y,x) on the full product pair set.
std::tuple<CsdsSystem, CsdsSystem, Specification> tensor_pair(const CsdsSystem& s_rho,
                                                              const CsdsSystem& s_eta);

} // namespace ctextile

#endif
