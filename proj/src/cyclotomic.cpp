#include "abelcd/cyclotomic.hpp"

#include "abelcd/errors.hpp"
#include "abelcd/numbers.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace abelcd {

const char* variant_name(Variant v) {
    return v == Variant::euclidean ? "euclidean" : "hermitian";
}

const char* class_type_name(ClassType t) {
    switch (t) {
        case ClassType::type_one: return "I";
        case ClassType::type_two: return "II";
        case ClassType::type_one_h: return "I'";
        case ClassType::type_two_h: return "II'";
        default: return "untyped";
    }
}

std::int64_t DualityContext::multiplier() const {
    return checked_pow(p, variant == Variant::euclidean ? nu : 2 * nu);
}

std::int64_t DualityContext::conjugation_power() const {
    return checked_pow(p, nu);
}

DualityContext make_context(std::int64_t p, int nu, Variant variant) {
    if (!is_prime(p)) throw domain_error("duality context: p = " + std::to_string(p) + " is not prime");
    if (nu < 1) throw domain_error("duality context: nu must be >= 1");
    return DualityContext{p, nu, variant};
}

namespace {

void require_coprime_multiplier(const AbelianGroup& a_group, std::int64_t q) {
    if (std::gcd(q, a_group.order()) != 1)
        throw domain_error("cyclotomic classes need gcd(q, |A|) = 1; got q = " +
                           std::to_string(q) + ", |A| = " + std::to_string(a_group.order()));
}

std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
    if (den == 0 || num % den != 0)
        throw internal_error(std::string(what) + ": inexact division " + std::to_string(num) +
                             "/" + std::to_string(den));
    return num / den;
}

} // namespace

CyclotomicClass cyclotomic_class(const AbelianGroup& a_group, std::int64_t q,
                                 const GroupElement& a) {
    require_coprime_multiplier(a_group, q);
    if (!is_valid_element(a_group, a))
        throw domain_error("cyclotomic_class: element not in group");

    CyclotomicClass cls;
    GroupElement cur = a;
    do {
        cls.members.push_back(cur);
        cur = scalar_mul(a_group, q, cur);
    } while (cur != a);
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    cls.size = static_cast<std::int64_t>(cls.members.size());
    return cls;
}

std::vector<CyclotomicClass> class_partition(const AbelianGroup& a_group, std::int64_t q) {
    require_coprime_multiplier(a_group, q);
    const std::int64_t n = a_group.order();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<CyclotomicClass> classes;
    for (std::int64_t i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        CyclotomicClass cls = cyclotomic_class(a_group, q, element_at(a_group, i));
        for (const GroupElement& m : cls.members)
            seen[static_cast<std::size_t>(element_index(a_group, m))] = true;
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [&](const CyclotomicClass& x, const CyclotomicClass& y) {
                  std::int64_t ox = element_order(a_group, x.representative);
                  std::int64_t oy = element_order(a_group, y.representative);
                  if (ox != oy) return ox < oy;
                  return x.representative < y.representative;
              });
    return classes;
}

bool chi(std::int64_t d, std::int64_t p, int nu) {
    if (d < 1) throw domain_error("chi: d must be >= 1");
    if (d > 1 && d % p == 0) throw domain_error("chi: p divides d");
    const std::int64_t q = mod_pow(p, nu, d);
    const std::int64_t cycle = multiplicative_order(q, d);
    // Residues of q^i mod d repeat with period `cycle`.
    std::int64_t x = 1 % d;
    for (std::int64_t i = 1; i <= cycle; ++i) {
        x = x * q % d;
        if ((x + 1) % d == 0) return true;
    }
    return false;
}

bool lambda_fn(std::int64_t d, std::int64_t p, int nu) {
    if (d < 1) throw domain_error("lambda_fn: d must be >= 1");
    if (d > 1 && d % p == 0) throw domain_error("lambda_fn: p divides d");
    const std::int64_t q = mod_pow(p, nu, d);
    const std::int64_t cycle = multiplicative_order(q, d);
    // Two cycles cover both parities of the exponent.
    std::int64_t x = 1 % d;
    for (std::int64_t i = 1; i <= 2 * cycle; ++i) {
        x = x * q % d;
        if (i % 2 == 1 && (x + 1) % d == 0) return true;
    }
    return false;
}

namespace {

TypedPartition classify_impl(const AbelianGroup& a_group, std::int64_t p, int nu,
                             Variant variant) {
    if (!is_prime(p)) throw domain_error("classify: p = " + std::to_string(p) + " is not prime");
    if (nu < 1) throw domain_error("classify: nu must be >= 1");
    if (a_group.order() % p == 0)
        throw domain_error("classify: p divides |A| = " + std::to_string(a_group.order()));

    const DualityContext ctx{p, nu, variant};
    const std::int64_t q = ctx.multiplier();
    const std::int64_t twist = variant == Variant::hermitian ? ctx.conjugation_power() : 1;
    const bool hermitian = variant == Variant::hermitian;

    TypedPartition part;
    part.classes = class_partition(a_group, q);

    // element index -> class index
    std::vector<std::size_t> class_of(static_cast<std::size_t>(a_group.order()));
    for (std::size_t c = 0; c < part.classes.size(); ++c)
        for (const GroupElement& m : part.classes[c].members)
            class_of[static_cast<std::size_t>(element_index(a_group, m))] = c;

    for (std::size_t c = 0; c < part.classes.size(); ++c) {
        CyclotomicClass& cls = part.classes[c];
        GroupElement target = negate(a_group, scalar_mul(a_group, twist, cls.representative));
        std::size_t partner = class_of[static_cast<std::size_t>(element_index(a_group, target))];

        const std::int64_t rep_order = element_order(a_group, cls.representative);
        const bool self_paired_by_criterion =
            hermitian ? lambda_fn(rep_order, p, nu) : chi(rep_order, p, nu);

        if (partner == c) {
            cls.type = hermitian ? ClassType::type_one_h : ClassType::type_one;
            ++part.r_one;
            if (!self_paired_by_criterion)
                throw internal_error("classify: class of order " + std::to_string(rep_order) +
                                     " is self-paired but the divisor criterion says otherwise");
        } else {
            cls.type = hermitian ? ClassType::type_two_h : ClassType::type_two;
            part.pairing[c] = partner;
            if (self_paired_by_criterion)
                throw internal_error("classify: class of order " + std::to_string(rep_order) +
                                     " is not self-paired but the divisor criterion says it is");
            if (part.classes[partner].size != cls.size)
                throw internal_error("classify: paired classes differ in size");
        }
    }

    for (const auto& [c, partner] : part.pairing) {
        auto back = part.pairing.find(partner);
        if (back == part.pairing.end() || back->second != c || partner == c)
            throw internal_error("classify: pairing is not a fixed-point-free involution");
    }
    if (part.pairing.size() % 2 != 0)
        throw internal_error("classify: odd number of partnered classes");
    part.r_two = static_cast<std::int64_t>(part.pairing.size() / 2);
    return part;
}

} // namespace

TypedPartition classify_euclidean(const AbelianGroup& a_group, std::int64_t p, int nu) {
    return classify_impl(a_group, p, nu, Variant::euclidean);
}

TypedPartition classify_hermitian(const AbelianGroup& a_group, std::int64_t p, int nu) {
    return classify_impl(a_group, p, nu, Variant::hermitian);
}

TypedPartition classify(const AbelianGroup& a_group, const DualityContext& ctx) {
    return classify_impl(a_group, ctx.p, ctx.nu, ctx.variant);
}

RCounts r_counts_formula(const AbelianGroup& a_group, std::int64_t p, int nu, Variant variant) {
    if (!is_prime(p)) throw domain_error("r_counts_formula: p is not prime");
    if (nu < 1) throw domain_error("r_counts_formula: nu must be >= 1");
    if (a_group.order() % p == 0)
        throw domain_error("r_counts_formula: p divides |A|");

    const bool hermitian = variant == Variant::hermitian;
    const std::int64_t big_n = a_group.exponent();

    RCounts r;
    for (std::int64_t d : divisors(big_n)) {
        const std::int64_t n_d = count_elements_of_order(a_group, d);
        const std::int64_t ord =
            multiplicative_order(mod_pow(p, hermitian ? 2 * nu : nu, d), d);
        const std::int64_t class_count = exact_div(n_d, ord, "r_counts_formula");
        const bool self_paired = hermitian ? lambda_fn(d, p, nu) : chi(d, p, nu);
        if (self_paired) {
            r.r_one += class_count;
        } else {
            if (class_count % 2 != 0)
                throw internal_error("r_counts_formula: odd partnered-class count for d = " +
                                     std::to_string(d));
            r.r_two += class_count / 2;
        }
    }
    return r;
}

namespace {

// Largest r with 0 <= r <= k and 2^r dividing p^nu + 1.
int two_adic_bound(std::int64_t p, int nu, int k) {
    std::int64_t v = checked_pow(p, nu) + 1;
    int r = 0;
    while (r < k && v % 2 == 0) {
        v /= 2;
        ++r;
    }
    return r;
}

void require_two_group_args(std::int64_t p, int nu, int k, int s) {
    if (!is_prime(p) || p == 2)
        throw domain_error("two-group counts need an odd prime p");
    if (nu < 1 || k < 1 || s < 1)
        throw domain_error("two-group counts need nu, k, s >= 1");
}

void require_q_group_args(std::int64_t p, int nu, std::int64_t q, int k, int s) {
    if (!is_prime(p)) throw domain_error("q-group counts: p is not prime");
    if (!is_prime(q) || q == 2) throw domain_error("q-group counts: q must be an odd prime");
    if (q == p) throw domain_error("q-group counts: q must differ from p");
    if (nu < 1 || k < 1 || s < 1)
        throw domain_error("q-group counts need nu, k, s >= 1");
}

} // namespace

RCounts r_counts_2group_euclidean(std::int64_t p, int nu, int k, int s) {
    require_two_group_args(p, nu, k, s);
    const int r_bound = two_adic_bound(p, nu, k); // >= 1 since p is odd
    RCounts r;
    const std::int64_t top = checked_pow(2, static_cast<std::int64_t>(r_bound) * s);
    const std::int64_t base = checked_pow(2, s);
    r.r_one = base + exact_div(top - base, 2, "r_counts_2group_euclidean");
    for (int i = r_bound + 1; i <= k; ++i) {
        const std::int64_t layer = checked_pow(2, static_cast<std::int64_t>(i) * s) -
                                   checked_pow(2, static_cast<std::int64_t>(i - 1) * s);
        const std::int64_t ord = multiplicative_order(mod_pow(p, nu, checked_pow(2, i)),
                                                      checked_pow(2, i));
        r.r_two += exact_div(layer, 2 * ord, "r_counts_2group_euclidean");
    }
    return r;
}

RCounts r_counts_qgroup_euclidean(std::int64_t p, int nu, std::int64_t q, int k, int s) {
    require_q_group_args(p, nu, q, k, s);
    const bool all_self_paired = multiplicative_order(mod_pow(p, nu, q), q) % 2 == 0;
    RCounts r;
    r.r_one = 1;
    for (int i = 1; i <= k; ++i) {
        const std::int64_t qi = checked_pow(q, i);
        const std::int64_t layer = checked_pow(q, static_cast<std::int64_t>(i) * s) -
                                   checked_pow(q, static_cast<std::int64_t>(i - 1) * s);
        const std::int64_t ord = multiplicative_order(mod_pow(p, nu, qi), qi);
        if (all_self_paired)
            r.r_one += exact_div(layer, ord, "r_counts_qgroup_euclidean");
        else
            r.r_two += exact_div(layer, 2 * ord, "r_counts_qgroup_euclidean");
    }
    return r;
}

RCounts r_counts_2group_hermitian(std::int64_t p, int nu, int k, int s) {
    require_two_group_args(p, nu, k, s);
    const int gamma = two_adic_bound(p, nu, k);
    RCounts r;
    r.r_one = checked_pow(2, static_cast<std::int64_t>(gamma) * s);
    for (int i = gamma + 1; i <= k; ++i) {
        const std::int64_t layer = checked_pow(2, static_cast<std::int64_t>(i) * s) -
                                   checked_pow(2, static_cast<std::int64_t>(i - 1) * s);
        const std::int64_t ord = multiplicative_order(mod_pow(p, 2 * nu, checked_pow(2, i)),
                                                      checked_pow(2, i));
        r.r_two += exact_div(layer, 2 * ord, "r_counts_2group_hermitian");
    }
    return r;
}

RCounts r_counts_qgroup_hermitian(std::int64_t p, int nu, std::int64_t q, int k, int s) {
    require_q_group_args(p, nu, q, k, s);
    // The class type is uniform on the nonzero elements; decide it from an
    // element of order q.
    const bool all_self_paired = lambda_fn(q, p, nu);
    RCounts r;
    r.r_one = 1;
    for (int i = 1; i <= k; ++i) {
        const std::int64_t qi = checked_pow(q, i);
        const std::int64_t layer = checked_pow(q, static_cast<std::int64_t>(i) * s) -
                                   checked_pow(q, static_cast<std::int64_t>(i - 1) * s);
        const std::int64_t ord = multiplicative_order(mod_pow(p, 2 * nu, qi), qi);
        if (all_self_paired)
            r.r_one += exact_div(layer, ord, "r_counts_qgroup_hermitian");
        else
            r.r_two += exact_div(layer, 2 * ord, "r_counts_qgroup_hermitian");
    }
    return r;
}

} // namespace abelcd
