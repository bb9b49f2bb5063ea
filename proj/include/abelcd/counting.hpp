#pragma once

#include "abelcd/cyclotomic.hpp"
#include "abelcd/group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace abelcd {

/// Complementary-dual code count for one group algebra. The count is
/// 2^(r_one + r_two) and is carried as a decimal string since the
/// exponent grows with the group. The report depends only on the part of
/// the group coprime to p.
struct CountReport {
    AbelianGroup group;
    std::int64_t p = 2;
    int nu = 1;
    Variant variant = Variant::euclidean;
    AbelianGroup prime_to_p_part;
    AbelianGroup sylow_part;
    std::int64_t r_one = 0;
    std::int64_t r_two = 0;
    std::string lcd_count;
};

/// Counts the complementary dual abelian codes in F_q[G], q = p^nu
/// (Euclidean) or p^{2nu} (Hermitian). G may have p-torsion; the Sylow
/// p-part is split off and does not affect the count.
CountReport count_lcd(const AbelianGroup& g, std::int64_t p, int nu, Variant variant);

/// Cyclic-group specialization of count_lcd with the totient-based
/// exponent; the p-part of n is stripped first. The result is checked
/// against the general path.
CountReport count_cyclic_lcd(std::int64_t n, std::int64_t p, int nu, Variant variant);

/// Ideal count of the chain ring F_{p^nu}[Z_{p^k}]: p^k + 1.
std::int64_t chain_ring_ideal_count(std::int64_t p, int k);

struct TableRow {
    std::int64_t order = 0;
    std::string group_spec;
    std::int64_t r = 0;        // r_one + r_two
    std::string lcd_count;     // 2^r
};

/// One row per abelian group of each order n <= max_order. With odd_only
/// set, restricts to odd n > 1 (the published sweep). Rows follow the
/// deterministic group enumeration order.
std::vector<TableRow> generate_table(std::int64_t p, int nu, Variant variant,
                                     std::int64_t max_order, bool odd_only);

/// Tab-separated rows: order, group spec, r (and the count with
/// with_counts set).
std::string format_table(const std::vector<TableRow>& rows, bool with_counts);

} // namespace abelcd
