#include <doctest.h>

#include <set>

#include "ctextile/abelian.hpp"
#include "ctextile/csds.hpp"

using namespace ctextile;

namespace {

CsdsSystem fibonacci_system() {
    SymbolicMatrix m = SymbolicMatrix::from_cells(2, Alphabet({"a", "b", "c"}),
                                                  {{{"a"}, {"b"}}, {{"c"}, {}}});
    return CsdsSystem::from_symbolic_matrix(m);
}

BoolMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    BoolMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            m.set(i, j, rows[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0);
    return m;
}

} // namespace

TEST_CASE("from_symbolic_matrix reads off the edge placement") {
    CsdsSystem s = fibonacci_system();
    CHECK(s.dimension() == 2);
    CHECK(s.bits("a") == from_rows({{1, 0}, {0, 0}}));
    CHECK(s.bits("b") == from_rows({{0, 1}, {0, 0}}));
    CHECK(s.bits("c") == from_rows({{0, 0}, {1, 0}}));
    CHECK(s.essential());
    CHECK(s.faithful());
}

TEST_CASE("single loop gives the one-dimensional unital system") {
    SymbolicMatrix m = SymbolicMatrix::from_cells(1, Alphabet({"a"}), {{{"a"}}});
    CsdsSystem s = CsdsSystem::from_symbolic_matrix(m);
    CHECK(s.dimension() == 1);
    CHECK(s.bits("a") == from_rows({{1}}));
    CHECK(s.essential());
    CHECK(s.faithful());
}

TEST_CASE("from_symbolic_matrix rejects non-essential matrices") {
    SymbolicMatrix m = SymbolicMatrix::from_cells(2, Alphabet({"a"}), {{{"a"}, {}}, {{}, {}}});
    CHECK_THROWS_AS(CsdsSystem::from_symbolic_matrix(m), Error);
}

TEST_CASE("empty word composes to the identity") {
    CsdsSystem s = fibonacci_system();
    CHECK(s.compose({}) == BoolMatrix::identity(2));
    CHECK(s.admissible({}));
}

TEST_CASE("bb is inadmissible in the Fibonacci system") {
    CsdsSystem s = fibonacci_system();
    CHECK(s.compose_symbols({"b", "b"}).is_zero());
    CHECK_FALSE(s.admissible({1, 1}));
    CHECK(s.admissible({1, 2})); // bc: 1 -> 2 -> 1
}

TEST_CASE("language enumerates admissible words lexicographically") {
    CsdsSystem s = fibonacci_system();
    CHECK(s.language(0) == std::vector<Word>{{}});
    std::vector<std::string> words;
    for (const Word& w : s.language(2)) words.push_back(s.word_string(w));
    CHECK(words == std::vector<std::string>{"a.a", "a.b", "b.c", "c.a", "c.b"});
}

TEST_CASE("language size follows the transfer matrix counts") {
    std::vector<std::vector<long long>> a = {{1, 2}, {1, 0}};
    CsdsSystem s = CsdsSystem::from_symbolic_matrix(from_integer_matrix(a, "e"));
    IntMatrix t = IntMatrix::from_rows(a);
    for (int k = 0; k <= 8; ++k) {
        IntMatrix p = t.pow(k);
        bigint expect = 0;
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < p.cols(); ++j) expect += p.at(i, j);
        CHECK(bigint(s.language(k).size()) == expect);
        CHECK(s.language_count(k) == expect);
    }
}

TEST_CASE("compose is multiplicative over word splits") {
    CsdsSystem s = fibonacci_system();
    for (const Word& w : s.language(4))
        for (size_t cut = 0; cut <= w.size(); ++cut) {
            Word u(w.begin(), w.begin() + static_cast<long>(cut));
            Word v(w.begin() + static_cast<long>(cut), w.end());
            CHECK(s.compose(w) == s.compose(u) * s.compose(v));
        }
}

TEST_CASE("every prefix of an admissible word is admissible") {
    CsdsSystem s = fibonacci_system();
    for (int k = 1; k <= 6; ++k) {
        std::set<Word> shorter;
        for (const Word& w : s.language(k - 1)) shorter.insert(w);
        for (const Word& w : s.language(k)) {
            Word prefix(w.begin(), w.end() - 1);
            CHECK(shorter.count(prefix) == 1);
        }
    }
}

TEST_CASE("unknown symbols are rejected") {
    CsdsSystem s = fibonacci_system();
    CHECK_THROWS_AS(s.compose({7}), Error);
    CHECK_THROWS_AS(s.compose_symbols({"nope"}), Error);
}

TEST_CASE("tensor_pair of two single loops") {
    SymbolicMatrix m = SymbolicMatrix::from_cells(1, Alphabet({"a"}), {{{"a"}}});
    SymbolicMatrix n = SymbolicMatrix::from_cells(1, Alphabet({"x"}), {{{"x"}}});
    auto [rho, eta, kappa] = tensor_pair(CsdsSystem::from_symbolic_matrix(m),
                                         CsdsSystem::from_symbolic_matrix(n));
    CHECK(rho.dimension() == 1);
    CHECK(eta.dimension() == 1);
    CHECK(kappa.size() == 1);
    CHECK(kappa.apply({"a", "x"}) == SymbolPair{"x", "a"});
}

TEST_CASE("tensor_pair against a single loop keeps the first factor's bits") {
    CsdsSystem fib = fibonacci_system();
    SymbolicMatrix loop = SymbolicMatrix::from_cells(1, Alphabet({"z"}), {{{"z"}}});
    auto [rho, eta, kappa] = tensor_pair(fib, CsdsSystem::from_symbolic_matrix(loop));
    CHECK(rho.dimension() == 2);
    for (int s = 0; s < fib.alphabet().size(); ++s) CHECK(rho.bits(s) == fib.bits(s));
    CHECK(eta.bits("z") == BoolMatrix::identity(2));
}

TEST_CASE("tensor_pair preserves essential and faithful") {
    CsdsSystem fib = fibonacci_system();
    auto [rho, eta, kappa] = tensor_pair(fib, fib);
    CHECK(rho.dimension() == 4);
    CHECK(rho.essential());
    CHECK(rho.faithful());
    CHECK(eta.essential());
    CHECK(eta.faithful());
    CHECK(kappa.size() == 9);
}
