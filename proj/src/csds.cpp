#include "ctextile/csds.hpp"

#include <map>
#include <sstream>

namespace ctextile {

CsdsSystem::CsdsSystem(int n, Alphabet alphabet, std::vector<BoolMatrix> bits)
    : n_(n), alphabet_(std::move(alphabet)), bits_(std::move(bits)) {
    if (n <= 0) fail(errc::invalid_argument, "dimension must be positive");
    if (bits_.size() != static_cast<size_t>(alphabet_.size()))
        fail(errc::invalid_argument, "one bit matrix per symbol required");
    for (const auto& b : bits_)
        if (b.size() != n) fail(errc::size_mismatch, "bit matrix size disagrees with dimension");
    // essential: every endomorphism nonzero and the images of the unit cover
    // every coordinate; faithful: every coordinate is moved somewhere.
    essential_ = true;
    for (const auto& b : bits_)
        if (b.is_zero()) essential_ = false;
    for (int j = 0; j < n_ && essential_; ++j) {
        bool hit = false;
        for (const auto& b : bits_)
            for (int i = 0; i < n_ && !hit; ++i) hit = b.get(i, j);
        if (!hit) essential_ = false;
    }
    faithful_ = true;
    for (int i = 0; i < n_ && faithful_; ++i) {
        bool hit = false;
        for (const auto& b : bits_)
            for (int j = 0; j < n_ && !hit; ++j) hit = b.get(i, j);
        if (!hit) faithful_ = false;
    }
}

CsdsSystem CsdsSystem::from_symbolic_matrix(const SymbolicMatrix& m) {
    ValidityReport rep = validate(m);
    if (!rep.essential || !rep.left_resolving) {
        std::ostringstream os;
        os << "matrix is" << (rep.essential ? "" : " not essential")
           << (rep.left_resolving ? "" : " not left-resolving") << " ("
           << rep.offending.size() << " violation(s))";
        fail(errc::invalid_matrix, os.str());
    }
    BitTensor t = BitTensor::of(m);
    std::vector<BoolMatrix> bits;
    for (int s = 0; s < t.alphabet().size(); ++s) bits.push_back(t.bits(s));
    return CsdsSystem(m.size(), m.alphabet(), std::move(bits));
}

BoolMatrix CsdsSystem::compose(const Word& w) const {
    BoolMatrix acc = BoolMatrix::identity(n_);
    for (int idx : w) {
        if (idx < 0 || idx >= alphabet_.size())
            fail(errc::unknown_symbol, "word symbol index out of range");
        acc = acc * bits_[static_cast<size_t>(idx)];
        if (acc.is_zero()) break;
    }
    return acc;
}

BoolMatrix CsdsSystem::compose_symbols(const std::vector<Symbol>& w) const {
    Word word;
    for (const Symbol& s : w) word.push_back(alphabet_.index_of(s));
    return compose(word);
}

std::vector<Word> CsdsSystem::language(int k) const {
    if (k < 0) fail(errc::invalid_argument, "word length must be nonnegative");
    std::vector<Word> out;
    Word w;
    // DFS in alphabet order; a zero prefix composite kills all extensions.
    auto rec = [&](auto&& self, const BoolMatrix& acc) -> void {
        if (static_cast<int>(w.size()) == k) {
            out.push_back(w);
            return;
        }
        for (int s = 0; s < alphabet_.size(); ++s) {
            BoolMatrix next = acc * bits_[static_cast<size_t>(s)];
            if (next.is_zero()) continue;
            w.push_back(s);
            self(self, next);
            w.pop_back();
        }
    };
    rec(rec, BoolMatrix::identity(n_));
    return out;
}

boost::multiprecision::cpp_int CsdsSystem::language_count(int k) const {
    if (k < 0) fail(errc::invalid_argument, "word length must be nonnegative");
    using boost::multiprecision::cpp_int;
    // Words with equal prefix composites extend identically, so count
    // per composite class instead of per word.
    std::map<BoolMatrix, cpp_int> classes;
    classes[BoolMatrix::identity(n_)] = 1;
    for (int step = 0; step < k; ++step) {
        std::map<BoolMatrix, cpp_int> next;
        for (const auto& [mat, cnt] : classes)
            for (int s = 0; s < alphabet_.size(); ++s) {
                BoolMatrix prod = mat * bits_[static_cast<size_t>(s)];
                if (!prod.is_zero()) next[prod] += cnt;
            }
        classes = std::move(next);
    }
    cpp_int total = 0;
    for (const auto& [mat, cnt] : classes) total += cnt;
    return total;
}

std::string CsdsSystem::word_string(const Word& w) const {
    std::string out;
    for (size_t t = 0; t < w.size(); ++t) {
        if (t) out += ".";
        out += alphabet_.at(w[t]);
    }
    return out;
}

std::tuple<CsdsSystem, CsdsSystem, Specification> tensor_pair(const CsdsSystem& s_rho,
                                                              const CsdsSystem& s_eta) {
    const int n1 = s_rho.dimension(), n2 = s_eta.dimension();
    const BoolMatrix id1 = BoolMatrix::identity(n1), id2 = BoolMatrix::identity(n2);
    std::vector<BoolMatrix> rho_bits, eta_bits;
    for (int s = 0; s < s_rho.alphabet().size(); ++s) rho_bits.push_back(s_rho.bits(s).kron(id2));
    for (int s = 0; s < s_eta.alphabet().size(); ++s) eta_bits.push_back(id1.kron(s_eta.bits(s)));
    CsdsSystem lifted_rho(n1 * n2, s_rho.alphabet(), std::move(rho_bits));
    CsdsSystem lifted_eta(n1 * n2, s_eta.alphabet(), std::move(eta_bits));
    std::vector<std::pair<SymbolPair, SymbolPair>> flip;
    for (const Symbol& x : s_rho.alphabet().symbols())
        for (const Symbol& y : s_eta.alphabet().symbols())
            flip.push_back({{x, y}, {y, x}});
    return {std::move(lifted_rho), std::move(lifted_eta), Specification(std::move(flip))};
}

} // namespace ctextile
