#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace abelcd {

/// A finite abelian group given as a product of cyclic factors
/// Z_{m_1} x ... x Z_{m_s}, each m_i >= 2. The empty factor list is the
/// trivial group. Factors are kept exactly as given; no normal-form
/// canonicalization happens outside abelian_groups_of_order.
struct AbelianGroup {
    std::vector<std::int64_t> factors;

    bool trivial() const { return factors.empty(); }
    std::size_t rank() const { return factors.size(); }
    std::int64_t order() const;
    std::int64_t exponent() const;
};

bool operator==(const AbelianGroup& a, const AbelianGroup& b);

/// Element as a coordinate tuple (c_1,...,c_s), 0 <= c_i < m_i.
using GroupElement = std::vector<std::int64_t>;

/// Grammar: "1" for the trivial group, otherwise a comma-separated list
/// of integers >= 2. Surrounding spaces are ignored.
AbelianGroup parse_group_spec(std::string_view text);

/// Inverse of parse_group_spec: "1" or "m1,m2,...".
std::string format_group_spec(const AbelianGroup& g);

GroupElement zero_element(const AbelianGroup& g);
bool is_valid_element(const AbelianGroup& g, const GroupElement& a);

GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement negate(const AbelianGroup& g, const GroupElement& a);

/// k * a componentwise, k >= 0.
GroupElement scalar_mul(const AbelianGroup& g, std::int64_t k, const GroupElement& a);

/// Additive order: smallest d >= 1 with d * a = 0.
std::int64_t element_order(const AbelianGroup& g, const GroupElement& a);

/// Splits G = A x P with p not dividing |A| and P the Sylow p-subgroup.
/// Factor order is preserved; trivial parts come back with empty factor
/// lists.
std::pair<AbelianGroup, AbelianGroup> sylow_split(const AbelianGroup& g, std::int64_t p);

/// Number of elements of exact order d, by Mobius inversion over the
/// divisor lattice: sum over e | d of mu(d/e) * prod_i gcd(e, m_i).
std::int64_t count_elements_of_order(const AbelianGroup& g, std::int64_t d);

/// One representative per isomorphism class of abelian groups of order n.
/// Layout: primary decomposition with primes descending, prime-power
/// factors descending within a prime. Enumeration lists the finest
/// partition (all parts 1) first for each prime, matching the published
/// table layout; the last prime's partition varies fastest.
std::vector<AbelianGroup> abelian_groups_of_order(std::int64_t n);

/// Elements in lexicographic coordinate order; index 0 is the zero element.
GroupElement element_at(const AbelianGroup& g, std::int64_t index);
std::int64_t element_index(const AbelianGroup& g, const GroupElement& a);

} // namespace abelcd
