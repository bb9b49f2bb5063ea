#include "abelcd/gf.hpp"

#include "abelcd/errors.hpp"
#include "abelcd/numbers.hpp"

#include <algorithm>
#include <string>

namespace abelcd {

namespace {

constexpr int kMaxFieldSize = 64;

using Poly = std::vector<int>; // coefficients mod p, low degree first

int poly_degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// Remainder of a modulo b over GF(p); b must be monic.
Poly poly_mod(Poly a, const Poly& b, std::int64_t p) {
    const int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        const int lead = a[static_cast<std::size_t>(da)];
        if (lead == 0) continue;
        for (int i = 0; i <= db; ++i) {
            int& c = a[static_cast<std::size_t>(da - db + i)];
            c = static_cast<int>(((c - static_cast<std::int64_t>(lead) * b[static_cast<std::size_t>(i)]) % p + p) % p);
        }
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<int>((c[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
    return c;
}

// Digits of value in base p, length n, low digit first.
Poly digits(std::int64_t value, std::int64_t p, int n) {
    Poly d(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        d[static_cast<std::size_t>(i)] = static_cast<int>(value % p);
        value /= p;
    }
    return d;
}

std::int64_t undigits(const Poly& d, std::int64_t p) {
    std::int64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

bool is_irreducible(const Poly& candidate, std::int64_t p) {
    const int deg = poly_degree(candidate);
    if (deg <= 0) return false;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        const std::int64_t count = checked_pow(p, d);
        for (std::int64_t tail = 0; tail < count; ++tail) {
            Poly div = digits(tail, p, d + 1);
            div[static_cast<std::size_t>(d)] = 1;
            if (poly_degree(poly_mod(candidate, div, p)) < 0) return false;
        }
    }
    return true;
}

} // namespace

FieldDescriptor build_field(std::int64_t p, int degree) {
    if (!is_prime(p)) throw domain_error("build_field: p = " + std::to_string(p) + " is not prime");
    if (degree < 1) throw domain_error("build_field: degree must be >= 1");
    const std::int64_t size = checked_pow(p, degree);
    if (size > kMaxFieldSize)
        throw capacity_error("build_field: field size " + std::to_string(size) + " exceeds the supported bound " +
                             std::to_string(kMaxFieldSize));

    FieldDescriptor f;
    f.p = p;
    f.degree = degree;
    f.size = static_cast<int>(size);

    for (std::int64_t tail = 0;; ++tail) {
        if (tail >= size)
            throw internal_error("build_field: no irreducible modulus found");
        Poly candidate = digits(tail, p, degree + 1);
        candidate[static_cast<std::size_t>(degree)] = 1;
        if (is_irreducible(candidate, p)) {
            f.modulus = candidate;
            break;
        }
    }

    const auto n = static_cast<std::size_t>(f.size);
    f.add_table.assign(n * n, 0);
    f.mul_table.assign(n * n, 0);
    f.neg_table.assign(n, 0);
    f.inv_table.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        Poly pa = digits(static_cast<std::int64_t>(a), p, degree);
        for (int i = 0; i < degree; ++i) {
            int c = pa[static_cast<std::size_t>(i)];
            pa[static_cast<std::size_t>(i)] = c == 0 ? 0 : static_cast<int>(p) - c;
        }
        f.neg_table[a] = static_cast<Elem>(undigits(pa, p));
    }
    for (std::size_t a = 0; a < n; ++a) {
        Poly pa = digits(static_cast<std::int64_t>(a), p, degree);
        for (std::size_t b = 0; b < n; ++b) {
            Poly pb = digits(static_cast<std::int64_t>(b), p, degree);
            Poly sum(static_cast<std::size_t>(degree), 0);
            for (int i = 0; i < degree; ++i)
                sum[static_cast<std::size_t>(i)] =
                    static_cast<int>((pa[static_cast<std::size_t>(i)] + pb[static_cast<std::size_t>(i)]) % p);
            f.add_table[a * n + b] = static_cast<Elem>(undigits(sum, p));
            Poly prod = poly_mod(poly_mul(pa, pb, p), f.modulus, p);
            prod.resize(static_cast<std::size_t>(degree), 0);
            f.mul_table[a * n + b] = static_cast<Elem>(undigits(prod, p));
        }
    }
    for (std::size_t a = 1; a < n; ++a) {
        bool found = false;
        for (std::size_t b = 1; b < n; ++b) {
            if (f.mul_table[a * n + b] == 1) {
                f.inv_table[a] = static_cast<Elem>(b);
                found = true;
                break;
            }
        }
        if (!found) throw internal_error("build_field: modulus is not irreducible");
    }
    return f;
}

Elem FieldDescriptor::inv(Elem a) const {
    if (a == 0) throw domain_error("field inverse of zero");
    return inv_table[a];
}

Elem FieldDescriptor::pow(Elem a, std::int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    Elem r = 1;
    Elem base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<int> FieldDescriptor::coeffs(Elem a) const {
    return digits(a, p, degree);
}

Elem frobenius_conjugate(const FieldDescriptor& f, Elem x, int nu) {
    if (nu < 1 || f.degree != 2 * nu)
        throw domain_error("frobenius_conjugate: field degree " + std::to_string(f.degree) +
                           " does not equal 2 * nu");
    return f.pow(x, checked_pow(f.p, nu));
}

RrefResult rref(const FieldDescriptor& f, const GFMatrix& m) {
    RrefResult res;
    res.matrix = m;
    GFMatrix& a = res.matrix;
    int pivot_row = 0;
    for (int col = 0; col < a.cols && pivot_row < a.rows; ++col) {
        int sel = -1;
        for (int r = pivot_row; r < a.rows; ++r) {
            if (a.at(r, col) != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pivot_row)
            for (int c = 0; c < a.cols; ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
        const Elem scale = f.inv(a.at(pivot_row, col));
        for (int c = 0; c < a.cols; ++c) a.at(pivot_row, c) = f.mul(a.at(pivot_row, c), scale);
        for (int r = 0; r < a.rows; ++r) {
            if (r == pivot_row) continue;
            const Elem factor = a.at(r, col);
            if (factor == 0) continue;
            for (int c = 0; c < a.cols; ++c)
                a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(pivot_row, c)));
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

GFMatrix row_space_basis(const FieldDescriptor& f, const GFMatrix& m) {
    RrefResult r = rref(f, m);
    GFMatrix basis(r.rank, m.cols);
    std::copy(r.matrix.data.begin(),
              r.matrix.data.begin() + static_cast<std::ptrdiff_t>(r.rank) * m.cols,
              basis.data.begin());
    return basis;
}

GFMatrix null_space(const FieldDescriptor& f, const GFMatrix& m) {
    RrefResult r = rref(f, m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    GFMatrix basis(m.cols - r.rank, m.cols);
    int row = 0;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        basis.at(row, free_col) = 1;
        for (int i = 0; i < r.rank; ++i)
            basis.at(row, r.pivot_cols[static_cast<std::size_t>(i)]) =
                f.neg(r.matrix.at(i, free_col));
        ++row;
    }

    for (int i = 0; i < basis.rows; ++i) {
        std::vector<Elem> v(basis.data.begin() + static_cast<std::ptrdiff_t>(i) * basis.cols,
                            basis.data.begin() + static_cast<std::ptrdiff_t>(i + 1) * basis.cols);
        for (Elem x : mat_vec(f, m, v))
            if (x != 0) throw internal_error("null_space: returned row fails verification");
    }
    return basis;
}

GFMatrix vstack(const GFMatrix& a, const GFMatrix& b) {
    if (a.cols != b.cols && a.rows != 0 && b.rows != 0)
        throw domain_error("vstack: column count mismatch");
    const int cols = a.rows != 0 ? a.cols : b.cols;
    GFMatrix out(a.rows + b.rows, cols);
    std::copy(a.data.begin(), a.data.end(), out.data.begin());
    std::copy(b.data.begin(), b.data.end(), out.data.begin() + static_cast<std::ptrdiff_t>(a.rows) * cols);
    return out;
}

int stacked_rank(const FieldDescriptor& f, const GFMatrix& a, const GFMatrix& b) {
    if (a.cols != b.cols)
        throw domain_error("stacked_rank: column count mismatch (" + std::to_string(a.cols) +
                           " vs " + std::to_string(b.cols) + ")");
    return rref(f, vstack(a, b)).rank;
}

std::vector<Elem> mat_vec(const FieldDescriptor& f, const GFMatrix& m,
                          const std::vector<Elem>& v) {
    if (static_cast<int>(v.size()) != m.cols)
        throw domain_error("mat_vec: dimension mismatch");
    std::vector<Elem> out(static_cast<std::size_t>(m.rows), 0);
    for (int r = 0; r < m.rows; ++r) {
        Elem acc = 0;
        for (int c = 0; c < m.cols; ++c) acc = f.add(acc, f.mul(m.at(r, c), v[static_cast<std::size_t>(c)]));
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

} // namespace abelcd
