#include "ctextile/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ctextile/textile.hpp"

namespace ctextile {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (rows[static_cast<size_t>(i)].size() != static_cast<size_t>(c))
            fail(errc::invalid_argument, "ragged rows");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) fail(errc::size_mismatch, "product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const bigint& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(errc::size_mismatch, "difference shape mismatch");
    IntMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) - rhs.at(i, j);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntMatrix IntMatrix::pow(int k) const {
    if (rows_ != cols_) fail(errc::invalid_argument, "power of non-square matrix");
    if (k < 0) fail(errc::invalid_argument, "negative power");
    IntMatrix acc = identity(rows_);
    for (int t = 0; t < k; ++t) acc = acc * *this;
    return acc;
}

bool IntMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const bigint& v) { return v == 0; });
}

bigint IntMatrix::determinant() const {
    if (rows_ != cols_) fail(errc::invalid_argument, "determinant of non-square matrix");
    const int n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    bigint prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

IntMatrix IntMatrix::hconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) fail(errc::size_mismatch, "hconcat row mismatch");
    IntMatrix out(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) out.at(i, a.cols_ + j) = b.at(i, j);
    }
    return out;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.cols_) fail(errc::size_mismatch, "vconcat column mismatch");
    IntMatrix out(a.rows_ + b.rows_, a.cols_);
    for (int j = 0; j < a.cols_; ++j) {
        for (int i = 0; i < a.rows_; ++i) out.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows_; ++i) out.at(a.rows_ + i, j) = b.at(i, j);
    }
    return out;
}

IntMatrix IntMatrix::columns(const std::vector<int>& idx) const {
    IntMatrix out(rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < out.cols_; ++j) {
        int src = idx[static_cast<size_t>(j)];
        if (src < 0 || src >= cols_) fail(errc::invalid_argument, "column index out of range");
        for (int i = 0; i < rows_; ++i) out.at(i, j) = at(i, src);
    }
    return out;
}

IntMatrix IntMatrix::top_rows(int k) const {
    if (k < 0 || k > rows_) fail(errc::invalid_argument, "row count out of range");
    IntMatrix out(k, cols_);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

std::vector<bigint> SnfResult::diagonal() const {
    std::vector<bigint> out;
    for (int i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d.at(i, i));
    return out;
}

SnfResult smith_normal_form(const IntMatrix& a) {
    const int r = a.rows(), c = a.cols();
    SnfResult res;
    res.d = a;
    res.u = IntMatrix::identity(r);
    res.uinv = IntMatrix::identity(r);
    res.v = IntMatrix::identity(c);
    res.vinv = IntMatrix::identity(c);
    IntMatrix& d = res.d;

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int t = 0; t < c; ++t) std::swap(d.at(i, t), d.at(j, t));
        for (int t = 0; t < r; ++t) std::swap(res.u.at(i, t), res.u.at(j, t));
        for (int t = 0; t < r; ++t) std::swap(res.uinv.at(t, i), res.uinv.at(t, j));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int t = 0; t < r; ++t) std::swap(d.at(t, i), d.at(t, j));
        for (int t = 0; t < c; ++t) std::swap(res.v.at(t, i), res.v.at(t, j));
        for (int t = 0; t < c; ++t) std::swap(res.vinv.at(i, t), res.vinv.at(j, t));
    };
    // row[i] += f * row[j]
    auto add_row = [&](int i, int j, const bigint& f) {
        if (f == 0) return;
        for (int t = 0; t < c; ++t) d.at(i, t) += f * d.at(j, t);
        for (int t = 0; t < r; ++t) res.u.at(i, t) += f * res.u.at(j, t);
        for (int t = 0; t < r; ++t) res.uinv.at(t, j) -= f * res.uinv.at(t, i);
    };
    // col[i] += f * col[j]
    auto add_col = [&](int i, int j, const bigint& f) {
        if (f == 0) return;
        for (int t = 0; t < r; ++t) d.at(t, i) += f * d.at(t, j);
        for (int t = 0; t < c; ++t) res.v.at(t, i) += f * res.v.at(t, j);
        for (int t = 0; t < c; ++t) res.vinv.at(j, t) -= f * res.vinv.at(i, t);
    };
    auto negate_row = [&](int i) {
        for (int t = 0; t < c; ++t) d.at(i, t) = -d.at(i, t);
        for (int t = 0; t < r; ++t) res.u.at(i, t) = -res.u.at(i, t);
        for (int t = 0; t < r; ++t) res.uinv.at(t, i) = -res.uinv.at(t, i);
    };

    const int steps = std::min(r, c);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Minimal-absolute-value nonzero pivot, smallest (row, col) first.
            int pi = -1, pj = -1;
            bigint best = 0;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    if (d.at(i, j) == 0) continue;
                    bigint v = abs(d.at(i, j));
                    if (pi < 0 || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break; // remaining block is zero
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (d.at(i, t) == 0) continue;
                add_row(i, t, -(d.at(i, t) / d.at(t, t)));
                if (d.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                if (d.at(t, j) == 0) continue;
                add_col(j, t, -(d.at(t, j) / d.at(t, t)));
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Fold a non-divisible remainder into the pivot row and retry so
            // the divisibility chain holds.
            bool divides_all = true;
            for (int i = t + 1; i < r && divides_all; ++i)
                for (int j = t + 1; j < c && divides_all; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        add_row(t, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (d.at(t, t) < 0) negate_row(t);
    }
    return res;
}

namespace {

FgAbelianGroup group_from_diagonal(int target_rank, const std::vector<bigint>& diag) {
    FgAbelianGroup g;
    int nonzero = 0;
    for (const bigint& v : diag) {
        if (v == 0) continue;
        ++nonzero;
        if (v >= 2) g.torsion.push_back(v);
    }
    g.rank = target_rank - nonzero;
    return g;
}

} // namespace

FgAbelianGroup cokernel(const IntMatrix& a) {
    return group_from_diagonal(a.rows(), smith_normal_form(a).diagonal());
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SnfResult snf = smith_normal_form(a);
    std::vector<bigint> diag = snf.diagonal();
    int s = 0;
    for (const bigint& v : diag)
        if (v != 0) ++s;
    std::vector<int> idx;
    for (int j = s; j < a.cols(); ++j) idx.push_back(j);
    return snf.v.columns(idx);
}

IntMatrix lattice_basis(const IntMatrix& a) {
    SnfResult snf = smith_normal_form(a);
    std::vector<bigint> diag = snf.diagonal();
    int s = 0;
    for (const bigint& v : diag)
        if (v != 0) ++s;
    IntMatrix basis(a.rows(), s);
    // Column span of a equals uinv applied to the span of d_i * e_i.
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < a.rows(); ++i)
            basis.at(i, j) = snf.uinv.at(i, j) * diag[static_cast<size_t>(j)];
    return basis;
}

namespace {

// Solves basis * x = rhs exactly, column by column; every rhs column must lie
// in the column span (the callers guarantee it; violations are internal bugs).
IntMatrix solve_in_span(const IntMatrix& basis, const IntMatrix& rhs) {
    SnfResult snf = smith_normal_form(basis);
    std::vector<bigint> diag = snf.diagonal();
    int s = 0;
    for (const bigint& v : diag)
        if (v != 0) ++s;
    IntMatrix w = snf.u * rhs;
    IntMatrix z(basis.cols(), rhs.cols());
    for (int j = 0; j < rhs.cols(); ++j) {
        for (int i = 0; i < basis.rows(); ++i) {
            if (i < s) {
                if (w.at(i, j) % diag[static_cast<size_t>(i)] != 0)
                    fail(errc::internal_invariant, "vector not in lattice span");
                if (i < basis.cols()) z.at(i, j) = w.at(i, j) / diag[static_cast<size_t>(i)];
            } else if (w.at(i, j) != 0) {
                fail(errc::internal_invariant, "vector not in lattice span");
            }
        }
    }
    return snf.v * z;
}

void require_commuting_pair(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        fail(errc::invalid_argument, "pair must be square");
    if (a.rows() != b.rows()) fail(errc::size_mismatch, "pair must have equal size");
    IntMatrix ab = a * b, ba = b * a;
    if (!(ab == ba)) {
        for (int i = 0; i < ab.rows(); ++i)
            for (int j = 0; j < ab.cols(); ++j)
                if (ab.at(i, j) != ba.at(i, j)) {
                    std::ostringstream os;
                    os << "AB(" << i + 1 << "," << j + 1 << ") = " << ab.at(i, j) << " but BA("
                       << i + 1 << "," << j + 1 << ") = " << ba.at(i, j);
                    fail(errc::not_commuting, os.str());
                }
    }
}

} // namespace

FgAbelianGroup k0_of_pair(const IntMatrix& a, const IntMatrix& b) {
    require_commuting_pair(a, b);
    const int n = a.rows();
    IntMatrix ia = IntMatrix::identity(n) - a;
    IntMatrix ib = IntMatrix::identity(n) - b;
    FgAbelianGroup quotient = cokernel(IntMatrix::hconcat(ia, ib));
    int ker_rank = kernel_basis(IntMatrix::vconcat(ia, ib)).cols();
    // The kernel term is free, so the extension splits and the direct sum is
    // the genuine K0 group.
    quotient.rank += ker_rank;
    return quotient;
}

ExtensionReport k1_of_pair(const IntMatrix& a, const IntMatrix& b) {
    require_commuting_pair(a, b);
    const int n = a.rows();
    IntMatrix ia = IntMatrix::identity(n) - a;
    IntMatrix ib = IntMatrix::identity(n) - b;

    ExtensionReport rep;

    // sub: Ker(1-B) modulo (1-A) Ker(1-B), in kernel coordinates. The kernel
    // lattice is saturated and (1-A) preserves it because the pair commutes.
    IntMatrix kb = kernel_basis(ib);
    if (kb.cols() == 0) {
        rep.sub = FgAbelianGroup{};
    } else {
        IntMatrix c = solve_in_span(kb, ia * kb);
        rep.sub = cokernel(c);
    }

    // quot: kernel of the endomorphism induced by (1-A) on Z^n/(1-B)Z^n,
    // realized as the lattice quotient {x : (1-A)x in (1-B)Z^n} / (1-B)Z^n.
    IntMatrix neg_ib(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) neg_ib.at(i, j) = -ib.at(i, j);
    IntMatrix stacked_kernel = kernel_basis(IntMatrix::hconcat(ia, neg_ib));
    IntMatrix preimage = lattice_basis(stacked_kernel.top_rows(n));
    IntMatrix lattice = lattice_basis(ib);
    if (preimage.cols() == 0) {
        rep.quot = FgAbelianGroup{};
    } else {
        IntMatrix x = solve_in_span(preimage, lattice);
        rep.quot = group_from_diagonal(preimage.cols(), smith_normal_form(x).diagonal());
    }

    if (rep.quot.torsion.empty() || rep.sub.is_trivial() || rep.quot.is_trivial()) {
        rep.split = ExtensionReport::Split::yes;
        FgAbelianGroup total;
        total.rank = rep.sub.rank + rep.quot.rank;
        total.torsion = rep.sub.torsion;
        total.torsion.insert(total.torsion.end(), rep.quot.torsion.begin(),
                             rep.quot.torsion.end());
        rep.total = std::move(total);
    } else {
        rep.split = ExtensionReport::Split::unknown;
    }
    return rep;
}

KGroups k_groups_textile(const TextileSystem& sys) {
    if (!sys.analyze().forms_square)
        fail(errc::not_square, "the two unit-image subalgebras differ");
    IntMatrix l_rho = IntMatrix::from_rows(sys.lambda_matrix_rho());
    IntMatrix l_eta = IntMatrix::from_rows(sys.lambda_matrix_eta());
    return {k0_of_pair(l_rho, l_eta), k1_of_pair(l_rho, l_eta)};
}

FgAbelianGroup cyclic_subgroup_oracle(long long n, long long m) {
    if (n < 1 || m < 1) fail(errc::invalid_argument, "n and m must be positive");
    std::vector<long long> elements;
    for (long long k = 0; k < m; ++k)
        if ((n * k) % m == 0) elements.push_back(k);
    const long long size = static_cast<long long>(elements.size());
    long long max_order = 1;
    for (long long k : elements) {
        long long order = m / std::gcd(k, m); // additive order in Z/m; gcd(0,m)=m
        max_order = std::max(max_order, order);
    }
    if (max_order != size)
        fail(errc::internal_invariant, "subgroup of a cyclic group must be cyclic");
    FgAbelianGroup g;
    if (size >= 2) g.torsion.push_back(size);
    return g;
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::vector<std::string> parts;
    if (rank == 1) parts.push_back("Z");
    else if (rank >= 2) parts.push_back("Z^" + std::to_string(rank));
    for (const bigint& d : torsion) parts.push_back("Z/" + d.str());
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " + ";
        out += parts[i];
    }
    return out;
}

FgAbelianGroup FgAbelianGroup::parse(const std::string& text) {
    FgAbelianGroup g;
    if (text == "0") return g;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find(" + ", pos);
        std::string part = text.substr(pos, end == std::string::npos ? end : end - pos);
        if (part == "Z") {
            g.rank += 1;
        } else if (part.rfind("Z^", 0) == 0) {
            int r = 0;
            try {
                r = std::stoi(part.substr(2));
            } catch (...) {
                fail(errc::parse_error, "bad group term '" + part + "'");
            }
            if (r < 1) fail(errc::parse_error, "bad free rank in '" + part + "'");
            g.rank += r;
        } else if (part.rfind("Z/", 0) == 0) {
            bigint d;
            try {
                d = bigint(part.substr(2));
            } catch (...) {
                fail(errc::parse_error, "bad group term '" + part + "'");
            }
            if (d < 2) fail(errc::parse_error, "invariant factor must be >= 2 in '" + part + "'");
            g.torsion.push_back(d);
        } else {
            fail(errc::parse_error, "bad group term '" + part + "'");
        }
        pos = end == std::string::npos ? text.size() : end + 3;
    }
    for (size_t i = 1; i < g.torsion.size(); ++i)
        if (g.torsion[i] % g.torsion[i - 1] != 0)
            fail(errc::parse_error, "invariant factors must form a divisibility chain");
    return g;
}

} // namespace ctextile
