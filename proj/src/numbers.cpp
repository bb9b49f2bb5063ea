#include "abelcd/numbers.hpp"

#include "abelcd/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace abelcd {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::int64_t f = 5; f * f <= n; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw domain_error("factorize: argument must be positive, got " + std::to_string(n));
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(std::int64_t n) {
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t phi = 1;
    for (auto [p, e] : factorize(n)) {
        std::int64_t pk = 1;
        for (int i = 1; i < e; ++i) pk *= p;
        phi *= pk * (p - 1);
    }
    return phi;
}

std::int64_t multiplicative_order(std::int64_t b, std::int64_t m) {
    if (m < 1) throw domain_error("multiplicative_order: modulus must be >= 1");
    if (m == 1) return 1;
    b %= m;
    if (b < 0) b += m;
    if (std::gcd(b, m) != 1)
        throw domain_error("multiplicative_order: base " + std::to_string(b) +
                           " not coprime to modulus " + std::to_string(m));
    std::int64_t x = b % m;
    std::int64_t t = 1;
    while (x != 1) {
        x = x * b % m;
        ++t;
        if (t > m) throw internal_error("multiplicative_order: no cycle found");
    }
    return t;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m) {
    if (m < 1) throw domain_error("mod_pow: modulus must be >= 1");
    b %= m;
    if (b < 0) b += m;
    std::int64_t r = 1 % m;
    while (e > 0) {
        if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % m);
        b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % m);
        e >>= 1;
    }
    return r;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
    if (exp < 0) throw domain_error("checked_pow: negative exponent");
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::int64_t>::max() / std::abs(base))
            throw domain_error("checked_pow: overflow computing " + std::to_string(base) + "^" +
                               std::to_string(exp));
        r *= base;
    }
    return r;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(n - part, part, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> integer_partitions(int n) {
    if (n < 0) throw domain_error("integer_partitions: negative argument");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n == 0 ? 1 : n, cur, out);
    // The recursion emits largest-first; callers want the all-ones
    // partition first, matching the published group ordering.
    std::reverse(out.begin(), out.end());
    return out;
}

std::string pow2_decimal(std::uint64_t e) {
    // 2^e as base-10^9 limbs, little endian.
    std::vector<std::uint32_t> limbs{1};
    constexpr std::uint32_t kBase = 1000000000;
    for (std::uint64_t i = 0; i < e; ++i) {
        std::uint32_t carry = 0;
        for (auto& limb : limbs) {
            std::uint64_t v = 2ull * limb + carry;
            limb = static_cast<std::uint32_t>(v % kBase);
            carry = static_cast<std::uint32_t>(v / kBase);
        }
        if (carry) limbs.push_back(carry);
    }
    std::string s = std::to_string(limbs.back());
    for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
        std::string part = std::to_string(*it);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

} // namespace abelcd
