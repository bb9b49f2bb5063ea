#include "abelcd/group.hpp"

#include "abelcd/errors.hpp"
#include "abelcd/numbers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace abelcd {

std::int64_t AbelianGroup::order() const {
    std::int64_t n = 1;
    for (std::int64_t m : factors) {
        if (n > std::numeric_limits<std::int64_t>::max() / m)
            throw domain_error("group order overflows 64 bits");
        n *= m;
    }
    return n;
}

std::int64_t AbelianGroup::exponent() const {
    std::int64_t e = 1;
    for (std::int64_t m : factors) e = std::lcm(e, m);
    return e;
}

bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors == b.factors;
}

AbelianGroup parse_group_spec(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "1") return AbelianGroup{};
    if (text.empty()) throw domain_error("group spec: empty string");

    AbelianGroup g;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : comma - pos));
        std::string name(tok);
        if (tok.empty() || tok.size() > 18 ||
            !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw domain_error("group spec: malformed token '" + name + "'");
        std::int64_t m = std::stoll(name);
        if (m < 2) throw domain_error("group spec: factor '" + name + "' must be >= 2");
        g.factors.push_back(m);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == text.size()) throw domain_error("group spec: trailing comma");
    }
    return g;
}

std::string format_group_spec(const AbelianGroup& g) {
    if (g.trivial()) return "1";
    std::string s;
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(g.factors[i]);
    }
    return s;
}

GroupElement zero_element(const AbelianGroup& g) {
    return GroupElement(g.factors.size(), 0);
}

bool is_valid_element(const AbelianGroup& g, const GroupElement& a) {
    if (a.size() != g.factors.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= g.factors[i]) return false;
    return true;
}

namespace {

void require_element(const AbelianGroup& g, const GroupElement& a, const char* op) {
    if (!is_valid_element(g, a))
        throw domain_error(std::string(op) + ": coordinate out of range for group " +
                           format_group_spec(g));
}

} // namespace

GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    require_element(g, a, "add");
    require_element(g, b, "add");
    GroupElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % g.factors[i];
    return c;
}

GroupElement negate(const AbelianGroup& g, const GroupElement& a) {
    require_element(g, a, "negate");
    GroupElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] == 0 ? 0 : g.factors[i] - a[i];
    return c;
}

GroupElement scalar_mul(const AbelianGroup& g, std::int64_t k, const GroupElement& a) {
    if (k < 0) throw domain_error("scalar_mul: scalar must be >= 0");
    require_element(g, a, "scalar_mul");
    GroupElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t m = g.factors[i];
        c[i] = static_cast<std::int64_t>(static_cast<__int128>(k % m) * a[i] % m);
    }
    return c;
}

std::int64_t element_order(const AbelianGroup& g, const GroupElement& a) {
    require_element(g, a, "element_order");
    std::int64_t d = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::lcm(d, g.factors[i] / std::gcd(g.factors[i], a[i]));
    return d;
}

std::pair<AbelianGroup, AbelianGroup> sylow_split(const AbelianGroup& g, std::int64_t p) {
    if (!is_prime(p)) throw domain_error("sylow_split: " + std::to_string(p) + " is not prime");
    AbelianGroup a, sylow;
    for (std::int64_t m : g.factors) {
        std::int64_t pt = 1;
        while (m % p == 0) {
            m /= p;
            pt *= p;
        }
        if (m > 1) a.factors.push_back(m);
        if (pt > 1) sylow.factors.push_back(pt);
    }
    return {a, sylow};
}

std::int64_t count_elements_of_order(const AbelianGroup& g, std::int64_t d) {
    if (d < 1) throw domain_error("count_elements_of_order: order must be >= 1");
    if (g.exponent() % d != 0) return 0;
    std::int64_t total = 0;
    for (std::int64_t e : divisors(d)) {
        int mu = mobius(d / e);
        if (mu == 0) continue;
        std::int64_t dividing = 1; // elements whose order divides e
        for (std::int64_t m : g.factors) dividing *= std::gcd(e, m);
        total += mu * dividing;
    }
    return total;
}

std::vector<AbelianGroup> abelian_groups_of_order(std::int64_t n) {
    if (n < 1) throw domain_error("abelian_groups_of_order: order must be >= 1");
    if (n == 1) return {AbelianGroup{}};

    auto primes = factorize(n);
    std::reverse(primes.begin(), primes.end()); // descending primes
    std::vector<std::vector<std::vector<int>>> choices;
    for (auto [p, e] : primes) {
        (void)p;
        choices.push_back(integer_partitions(e));
    }

    std::vector<AbelianGroup> out;
    std::vector<std::size_t> idx(primes.size(), 0);
    while (true) {
        AbelianGroup g;
        for (std::size_t i = 0; i < primes.size(); ++i)
            for (int part : choices[i][idx[i]])
                g.factors.push_back(checked_pow(primes[i].first, part));
        out.push_back(std::move(g));

        // odometer, last prime fastest
        std::size_t i = primes.size();
        while (i > 0) {
            --i;
            if (++idx[i] < choices[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
    }
}

GroupElement element_at(const AbelianGroup& g, std::int64_t index) {
    if (index < 0 || index >= g.order())
        throw domain_error("element_at: index out of range");
    GroupElement a(g.factors.size());
    for (std::size_t i = g.factors.size(); i-- > 0;) {
        a[i] = index % g.factors[i];
        index /= g.factors[i];
    }
    return a;
}

std::int64_t element_index(const AbelianGroup& g, const GroupElement& a) {
    require_element(g, a, "element_index");
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < a.size(); ++i) idx = idx * g.factors[i] + a[i];
    return idx;
}

} // namespace abelcd
