#pragma once

#include <cstdint>
#include <vector>

namespace abelcd {

/// A field element is the integer whose base-p digits are the residue
/// polynomial's coefficients, low degree first.
using Elem = std::uint16_t;

/// GF(p^degree) with full operation tables. Supports field sizes up to 64;
/// larger fields are outside the exhaustive-verification scale and are
/// refused at construction.
struct FieldDescriptor {
    std::int64_t p = 2;
    int degree = 1;
    int size = 2;
    std::vector<int> modulus; // monic, length degree + 1, low degree first

    Elem add(Elem a, Elem b) const { return add_table[static_cast<std::size_t>(a) * size + b]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const { return mul_table[static_cast<std::size_t>(a) * size + b]; }
    Elem neg(Elem a) const { return neg_table[a]; }
    Elem inv(Elem a) const; // throws on zero
    Elem pow(Elem a, std::int64_t e) const;

    /// Coefficients of the residue polynomial, low degree first.
    std::vector<int> coeffs(Elem a) const;

    std::vector<Elem> add_table, mul_table, neg_table, inv_table;
};

/// Builds GF(p^degree) over the lexicographically smallest monic
/// irreducible modulus of that degree (non-leading coefficients compared
/// low-to-high as base-p digits). Deterministic across runs.
FieldDescriptor build_field(std::int64_t p, int degree);

/// x -> x^(p^nu); requires degree = 2 * nu. Involutive, fixes exactly the
/// subfield of size p^nu.
Elem frobenius_conjugate(const FieldDescriptor& f, Elem x, int nu);

/// Dense row-major matrix over one field.
struct GFMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Elem> data;

    GFMatrix() = default;
    GFMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

    Elem& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    Elem at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    friend bool operator==(const GFMatrix& a, const GFMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
};

struct RrefResult {
    GFMatrix matrix;
    int rank = 0;
    std::vector<int> pivot_cols;
};

/// Reduced row echelon form: leading ones, zeros above and below pivots.
RrefResult rref(const FieldDescriptor& f, const GFMatrix& m);

/// rref with zero rows dropped: the canonical basis of the row space.
GFMatrix row_space_basis(const FieldDescriptor& f, const GFMatrix& m);

/// Basis of {v : m v^T = 0} as matrix rows (cols(m) - rank(m) of them).
/// Every returned row is checked against m.
GFMatrix null_space(const FieldDescriptor& f, const GFMatrix& m);

/// Rank of the vertical stack; requires matching column counts.
int stacked_rank(const FieldDescriptor& f, const GFMatrix& a, const GFMatrix& b);

GFMatrix vstack(const GFMatrix& a, const GFMatrix& b);

std::vector<Elem> mat_vec(const FieldDescriptor& f, const GFMatrix& m,
                          const std::vector<Elem>& v);

} // namespace abelcd
