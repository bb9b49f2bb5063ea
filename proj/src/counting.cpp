#include "abelcd/counting.hpp"

#include "abelcd/errors.hpp"
#include "abelcd/numbers.hpp"

#include <string>

namespace abelcd {

CountReport count_lcd(const AbelianGroup& g, std::int64_t p, int nu, Variant variant) {
    if (!is_prime(p)) throw domain_error("count_lcd: p = " + std::to_string(p) + " is not prime");
    if (nu < 1) throw domain_error("count_lcd: nu must be >= 1");

    CountReport report;
    report.group = g;
    report.p = p;
    report.nu = nu;
    report.variant = variant;
    auto [a_part, sylow] = sylow_split(g, p);
    report.prime_to_p_part = a_part;
    report.sylow_part = sylow;

    RCounts r = r_counts_formula(a_part, p, nu, variant);
    report.r_one = r.r_one;
    report.r_two = r.r_two;
    report.lcd_count = pow2_decimal(static_cast<std::uint64_t>(r.r_one + r.r_two));
    return report;
}

CountReport count_cyclic_lcd(std::int64_t n, std::int64_t p, int nu, Variant variant) {
    if (n < 1) throw domain_error("count_cyclic_lcd: length must be >= 1");
    if (!is_prime(p)) throw domain_error("count_cyclic_lcd: p is not prime");
    if (nu < 1) throw domain_error("count_cyclic_lcd: nu must be >= 1");

    std::int64_t coprime_len = n;
    while (coprime_len % p == 0) coprime_len /= p;

    // Totient route: every divisor d of the coprime length contributes
    // Phi(d) elements of order d.
    const bool hermitian = variant == Variant::hermitian;
    RCounts totient;
    for (std::int64_t d : divisors(coprime_len)) {
        const std::int64_t ord =
            multiplicative_order(mod_pow(p, hermitian ? 2 * nu : nu, d), d);
        const std::int64_t classes = euler_phi(d) / ord;
        if (euler_phi(d) % ord != 0)
            throw internal_error("count_cyclic_lcd: inexact class count for d = " +
                                 std::to_string(d));
        const bool self_paired = hermitian ? lambda_fn(d, p, nu) : chi(d, p, nu);
        if (self_paired) {
            totient.r_one += classes;
        } else {
            if (classes % 2 != 0)
                throw internal_error("count_cyclic_lcd: odd partnered-class count for d = " +
                                     std::to_string(d));
            totient.r_two += classes / 2;
        }
    }

    AbelianGroup given = n == 1 ? AbelianGroup{} : AbelianGroup{{n}};
    CountReport report = count_lcd(given, p, nu, variant);
    if (report.r_one != totient.r_one || report.r_two != totient.r_two)
        throw internal_error("count_cyclic_lcd: totient route disagrees with the general path "
                             "for n = " + std::to_string(n));
    return report;
}

std::int64_t chain_ring_ideal_count(std::int64_t p, int k) {
    if (!is_prime(p)) throw domain_error("chain_ring_ideal_count: p is not prime");
    if (k < 0) throw domain_error("chain_ring_ideal_count: k must be >= 0");
    return checked_pow(p, k) + 1;
}

std::vector<TableRow> generate_table(std::int64_t p, int nu, Variant variant,
                                     std::int64_t max_order, bool odd_only) {
    if (max_order < 1) throw domain_error("generate_table: max order must be >= 1");
    std::vector<TableRow> rows;
    for (std::int64_t n = 1; n <= max_order; ++n) {
        if (odd_only && (n == 1 || n % 2 == 0)) continue;
        for (const AbelianGroup& g : abelian_groups_of_order(n)) {
            CountReport report = count_lcd(g, p, nu, variant);
            rows.push_back(TableRow{n, format_group_spec(g), report.r_one + report.r_two,
                                    report.lcd_count});
        }
    }
    return rows;
}

std::string format_table(const std::vector<TableRow>& rows, bool with_counts) {
    std::string out;
    for (const TableRow& row : rows) {
        out += std::to_string(row.order);
        out += '\t';
        out += row.group_spec;
        out += '\t';
        out += std::to_string(row.r);
        if (with_counts) {
            out += '\t';
            out += row.lcd_count;
        }
        out += '\n';
    }
    return out;
}

} // namespace abelcd
