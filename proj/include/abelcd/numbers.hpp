#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace abelcd {

bool is_prime(std::int64_t n);

/// Prime factorization with ascending primes, n >= 1.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// All positive divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

int mobius(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Smallest t >= 1 with b^t = 1 (mod m); requires gcd(b, m) = 1.
/// Returns 1 for m = 1.
std::int64_t multiplicative_order(std::int64_t b, std::int64_t m);

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m);

/// base^exp with an overflow check; throws domain_error when the result
/// does not fit in a signed 64-bit integer.
std::int64_t checked_pow(std::int64_t base, std::int64_t exp);

/// Partitions of n into weakly decreasing parts, listed with the
/// all-ones partition first and the single-part partition last.
std::vector<std::vector<int>> integer_partitions(int n);

/// Decimal representation of 2^e.
std::string pow2_decimal(std::uint64_t e);

} // namespace abelcd
