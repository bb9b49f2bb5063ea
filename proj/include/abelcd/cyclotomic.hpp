#pragma once

#include "abelcd/group.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace abelcd {

enum class Variant { euclidean, hermitian };

const char* variant_name(Variant v);

/// Fixes the alphabet field F_{p^nu} and the inner product. The orbit
/// multiplier is p^nu for the Euclidean pairing and p^{2nu} for the
/// Hermitian pairing (whose conjugation is x -> x^{p^nu}).
struct DualityContext {
    std::int64_t p = 2;
    int nu = 1;
    Variant variant = Variant::euclidean;

    std::int64_t multiplier() const;     // p^nu or p^{2nu}
    std::int64_t conjugation_power() const; // p^nu
};

DualityContext make_context(std::int64_t p, int nu, Variant variant);

enum class ClassType { type_one, type_two, type_one_h, type_two_h, untyped };

const char* class_type_name(ClassType t);

/// Orbit of one group element under multiplication by the context's
/// multiplier q. Members are sorted lexicographically and the
/// representative is the lexicographic minimum.
struct CyclotomicClass {
    GroupElement representative;
    std::vector<GroupElement> members;
    std::int64_t size = 0;
    ClassType type = ClassType::untyped;
};

/// A complete typed class partition together with the type counts.
/// r_one counts self-paired classes, r_two counts partner pairs, so the
/// class total is r_one + 2 * r_two. pairing maps the index of every
/// non-self-paired class to its partner's index (a fixed-point-free
/// involution).
struct TypedPartition {
    std::vector<CyclotomicClass> classes;
    std::int64_t r_one = 0;
    std::int64_t r_two = 0;
    std::map<std::size_t, std::size_t> pairing;
};

/// Orbit {q^i * a}; requires gcd(q, |A|) = 1.
CyclotomicClass cyclotomic_class(const AbelianGroup& a_group, std::int64_t q,
                                 const GroupElement& a);

/// All orbits, sorted by (representative order, representative lex).
std::vector<CyclotomicClass> class_partition(const AbelianGroup& a_group, std::int64_t q);

/// 1 iff d divides p^{nu*i} + 1 for some i >= 1. Requires gcd(d, p) = 1.
bool chi(std::int64_t d, std::int64_t p, int nu);

/// 1 iff d divides p^{nu*i} + 1 for some odd i >= 1. Requires gcd(d, p) = 1.
bool lambda_fn(std::int64_t d, std::int64_t p, int nu);

/// Partition under q = p^nu; a class is self-paired exactly when it
/// contains the negative of its representative. Every tag is cross-checked
/// against the chi criterion on the representative order; a mismatch
/// raises internal_error.
TypedPartition classify_euclidean(const AbelianGroup& a_group, std::int64_t p, int nu);

/// Partition under q = p^{2nu}; a class is self-paired exactly when it
/// contains -p^nu times its representative. Cross-checked against the
/// lambda criterion.
TypedPartition classify_hermitian(const AbelianGroup& a_group, std::int64_t p, int nu);

TypedPartition classify(const AbelianGroup& a_group, const DualityContext& ctx);

struct RCounts {
    std::int64_t r_one = 0;
    std::int64_t r_two = 0;
};

/// Closed-form counts from the divisor sum over the group exponent:
///   r_one = sum chi(d) * N(d) / ord_d(q),
///   r_two = (1/2) sum (1 - chi(d)) * N(d) / ord_d(q),
/// with chi replaced by lambda for the Hermitian variant. The orbit size
/// denominator is ord_d(q) for the variant's multiplier q in both sums;
/// every division is checked for exactness.
RCounts r_counts_formula(const AbelianGroup& a_group, std::int64_t p, int nu, Variant variant);

/// Specialized counts for A = (Z_{2^k})^s with p odd.
RCounts r_counts_2group_euclidean(std::int64_t p, int nu, int k, int s);

/// Specialized counts for A = (Z_{q^k})^s with q an odd prime, q != p.
RCounts r_counts_qgroup_euclidean(std::int64_t p, int nu, std::int64_t q, int k, int s);

/// Hermitian analog for A = (Z_{2^k})^s with p odd.
RCounts r_counts_2group_hermitian(std::int64_t p, int nu, int k, int s);

/// Hermitian analog for A = (Z_{q^k})^s; the uniform class type on the
/// nonzero elements is decided from an element of order q.
RCounts r_counts_qgroup_hermitian(std::int64_t p, int nu, std::int64_t q, int k, int s);

} // namespace abelcd
