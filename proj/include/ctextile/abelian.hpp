#ifndef CTEXTILE_ABELIAN_HPP
#define CTEXTILE_ABELIAN_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ctextile/error.hpp"

namespace ctextile {

using bigint = boost::multiprecision::cpp_int;

// Dense matrix over the integers with arbitrary-precision entries. This
// module never touches floating point.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) fail(errc::invalid_argument, "negative matrix shape");
    }
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const bigint& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    bigint& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix transpose() const;
    IntMatrix pow(int k) const; // square matrices
    bool is_zero() const;

    // Exact determinant by fraction-free (Bareiss) elimination.
    bigint determinant() const;

    static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);
    IntMatrix columns(const std::vector<int>& idx) const;
    IntMatrix top_rows(int k) const;

    bool operator==(const IntMatrix& rhs) const = default;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<bigint> e_;
};

// D = U * A * V with unimodular U, V; D rectangular-diagonal with
// nonnegative entries in a divisibility chain. Uinv and Vinv round-trip the
// transforming factors exactly.
struct SnfResult {
    IntMatrix u, d, v;
    IntMatrix uinv, vinv;
    std::vector<bigint> diagonal() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

// Canonical form of a finitely generated abelian group: free rank and the
// invariant-factor chain (each factor >= 2, each dividing the next).
struct FgAbelianGroup {
    int rank = 0;
    std::vector<bigint> torsion;

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const FgAbelianGroup& rhs) const = default;

    // "0" | "Z" | "Z^r" | "Z/d" joined by " + ", free part first.
    std::string to_string() const;
    static FgAbelianGroup parse(const std::string& text);
};

struct ExtensionReport {
    FgAbelianGroup sub;
    FgAbelianGroup quot;
    enum class Split { yes, unknown } split = Split::unknown;
    std::optional<FgAbelianGroup> total;
};

// The quotient of the target free group by the column span of `a`.
FgAbelianGroup cokernel(const IntMatrix& a);

// Columns form a basis of the integer kernel {x : Ax = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

// Canonical basis of the column span of `a` as a sublattice of the target.
IntMatrix lattice_basis(const IntMatrix& a);

FgAbelianGroup k0_of_pair(const IntMatrix& a, const IntMatrix& b);
ExtensionReport k1_of_pair(const IntMatrix& a, const IntMatrix& b);

struct KGroups {
    FgAbelianGroup k0;
    ExtensionReport k1;
};

class TextileSystem; // textile.hpp

// K-groups of the algebra of a square-forming system, through the
// per-letter occurrence matrices of its two subsystems.
KGroups k_groups_textile(const TextileSystem& sys);

// Brute-force structure of {k mod m : n*k = 0 mod m}, detected from element
// orders; independent of the Smith-normal-form path.
FgAbelianGroup cyclic_subgroup_oracle(long long n, long long m);

} // namespace ctextile

#endif
