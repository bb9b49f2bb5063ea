#pragma once

#include "abelcd/cyclotomic.hpp"
#include "abelcd/gf.hpp"
#include "abelcd/group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace abelcd {

inline constexpr int kDefaultCapacityLog2 = 20;

/// F_q[G], exactly represented: elements are coordinate vectors indexed by
/// the group elements (lexicographic order), multiplication is the
/// group-indexed convolution (u v)_h = sum_g u_g v_{h-g}.
struct GroupAlgebra {
    AbelianGroup group;
    FieldDescriptor field;
    int dim = 0;            // |G|
    int capacity_log2 = kDefaultCapacityLog2;

    std::vector<Elem> zero() const { return std::vector<Elem>(static_cast<std::size_t>(dim), 0); }
    std::vector<Elem> unit(int g) const; // Y^g
    std::vector<Elem> multiply(const std::vector<Elem>& u, const std::vector<Elem>& v) const;
    std::vector<Elem> shift(const std::vector<Elem>& v, int g) const; // Y^g * v

    std::vector<std::int32_t> sub_index; // [h * dim + g] -> index of h - g
};

/// Refuses with a capacity_error when |F|^|G| exceeds 2^capacity_log2.
/// The defining relations Y^g Y^h = Y^{g+h} are verified on construction.
GroupAlgebra build_algebra(const AbelianGroup& g, const FieldDescriptor& f,
                           int capacity_log2 = kDefaultCapacityLog2);

/// An ideal, canonically stored as the reduced row echelon basis of its
/// underlying linear code. Two ideals are equal exactly when their bases
/// are entrywise equal.
struct IdealCode {
    GFMatrix basis; // rref, zero rows dropped
    int dim = 0;

    friend bool operator==(const IdealCode& a, const IdealCode& b) {
        return a.dim == b.dim && a.basis == b.basis;
    }
    friend bool operator<(const IdealCode& a, const IdealCode& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.basis.data < b.basis.data;
    }
};

IdealCode zero_ideal(const GroupAlgebra& alg);
IdealCode whole_algebra(const GroupAlgebra& alg);

/// Kernel of the coefficient-sum map; dimension |G| - 1.
IdealCode augmentation_ideal(const GroupAlgebra& alg);

/// Smallest ideal containing v: the row space of {Y^g v : g in G}.
IdealCode ideal_generated_by(const GroupAlgebra& alg, const std::vector<Elem>& v);

/// True when the row space is closed under every generator shift.
bool is_ideal(const GroupAlgebra& alg, const GFMatrix& basis);

/// All ideals, sorted by (dimension, basis lex). Seeds every cyclic ideal
/// and closes the set under sums with the seeds; complete because every
/// ideal of a finite commutative ring is a sum of cyclic ideals of its
/// members.
std::vector<IdealCode> enumerate_ideals(const GroupAlgebra& alg);

/// Minimal nonzero ideals; requires gcd(|G|, char) = 1.
std::vector<IdealCode> minimal_ideals(const GroupAlgebra& alg);

/// Euclidean: null space of the basis. Hermitian: null space of the
/// entrywise-conjugated basis; requires field degree 2 * nu. The result is
/// checked to be an ideal of complementary dimension.
IdealCode dual_code(const GroupAlgebra& alg, const IdealCode& code, Variant variant, int nu);

/// C is complementary dual exactly when C + C-dual spans everything.
bool is_lcd(const GroupAlgebra& alg, const IdealCode& code, Variant variant, int nu);

/// True when some enumerated ideal complements C.
bool is_direct_summand(const GroupAlgebra& alg, const IdealCode& code,
                       const std::vector<IdealCode>& all_ideals);

/// Smallest e with M^e = 0 for the augmentation ideal M; requires a cyclic
/// p-group over matching characteristic.
std::int64_t nilpotency_index(const GroupAlgebra& alg);

/// Exhaustive ideal census of one group algebra against the closed-form
/// count.
struct VerificationReport {
    AbelianGroup group;
    std::int64_t p = 2;
    int nu = 1;
    Variant variant = Variant::euclidean;
    std::int64_t field_size = 2;
    std::int64_t ideal_total = 0;
    std::int64_t lcd_total = 0;
    std::int64_t summand_total = 0;
    std::int64_t r_one = 0;
    std::int64_t r_two = 0;
    std::string formula_lcd;
    bool agreement = false;
    std::vector<IdealCode> witnesses; // LCD ideals, kept only on disagreement
};

VerificationReport verify_counts(const AbelianGroup& g, std::int64_t p, int nu, Variant variant,
                                 int capacity_log2 = kDefaultCapacityLog2);

} // namespace abelcd
