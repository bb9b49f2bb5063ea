#include "abelcd/algebra.hpp"

#include "abelcd/counting.hpp"
#include "abelcd/errors.hpp"
#include "abelcd/numbers.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace abelcd {

std::vector<Elem> GroupAlgebra::unit(int g) const {
    auto v = zero();
    v[static_cast<std::size_t>(g)] = 1;
    return v;
}

std::vector<Elem> GroupAlgebra::multiply(const std::vector<Elem>& u,
                                         const std::vector<Elem>& v) const {
    std::vector<Elem> out(static_cast<std::size_t>(dim), 0);
    for (int g = 0; g < dim; ++g) {
        const Elem ug = u[static_cast<std::size_t>(g)];
        if (ug == 0) continue;
        for (int h = 0; h < dim; ++h) {
            const Elem vh = v[static_cast<std::size_t>(sub_index[static_cast<std::size_t>(h) * dim + g])];
            if (vh == 0) continue;
            Elem& slot = out[static_cast<std::size_t>(h)];
            slot = field.add(slot, field.mul(ug, vh));
        }
    }
    return out;
}

std::vector<Elem> GroupAlgebra::shift(const std::vector<Elem>& v, int g) const {
    std::vector<Elem> out(static_cast<std::size_t>(dim));
    for (int h = 0; h < dim; ++h)
        out[static_cast<std::size_t>(h)] =
            v[static_cast<std::size_t>(sub_index[static_cast<std::size_t>(h) * dim + g])];
    return out;
}

GroupAlgebra build_algebra(const AbelianGroup& g, const FieldDescriptor& f, int capacity_log2) {
    if (capacity_log2 < 1 || capacity_log2 > 40)
        throw domain_error("build_algebra: capacity bound must be in [1, 40]");
    const std::int64_t n = g.order();

    unsigned __int128 states = 1;
    const unsigned __int128 limit = static_cast<unsigned __int128>(1) << capacity_log2;
    for (std::int64_t i = 0; i < n; ++i) {
        states *= static_cast<unsigned>(f.size);
        if (states > limit)
            throw capacity_error("build_algebra: |F|^|G| = " + std::to_string(f.size) + "^" +
                                 std::to_string(n) + " exceeds 2^" + std::to_string(capacity_log2));
    }

    GroupAlgebra alg;
    alg.group = g;
    alg.field = f;
    alg.dim = static_cast<int>(n);
    alg.capacity_log2 = capacity_log2;
    alg.sub_index.resize(static_cast<std::size_t>(n) * n);
    for (std::int64_t h = 0; h < n; ++h) {
        const GroupElement eh = element_at(g, h);
        for (std::int64_t gi = 0; gi < n; ++gi) {
            const GroupElement diff = add(g, eh, negate(g, element_at(g, gi)));
            alg.sub_index[static_cast<std::size_t>(h) * n + gi] =
                static_cast<std::int32_t>(element_index(g, diff));
        }
    }

    // Defining relations on the monomial basis.
    for (int a = 0; a < alg.dim; ++a) {
        for (int b = 0; b < alg.dim; ++b) {
            const GroupElement sum =
                add(g, element_at(g, a), element_at(g, b));
            if (alg.multiply(alg.unit(a), alg.unit(b)) !=
                alg.unit(static_cast<int>(element_index(g, sum))))
                throw internal_error("build_algebra: convolution violates Y^a Y^b = Y^{a+b}");
        }
    }
    return alg;
}

IdealCode zero_ideal(const GroupAlgebra& alg) {
    return IdealCode{GFMatrix(0, alg.dim), 0};
}

IdealCode whole_algebra(const GroupAlgebra& alg) {
    GFMatrix id(alg.dim, alg.dim);
    for (int i = 0; i < alg.dim; ++i) id.at(i, i) = 1;
    return IdealCode{std::move(id), alg.dim};
}

namespace {

IdealCode make_ideal(const GroupAlgebra& alg, const GFMatrix& rows) {
    GFMatrix basis = row_space_basis(alg.field, rows);
    const int dim = basis.rows;
    return IdealCode{std::move(basis), dim};
}

// Reduces v in place against an rref basis; leaves the residue.
void reduce_against(const FieldDescriptor& f, const GFMatrix& basis, std::vector<Elem>& v) {
    for (int r = 0; r < basis.rows; ++r) {
        int pivot = -1;
        for (int c = 0; c < basis.cols; ++c) {
            if (basis.at(r, c) != 0) {
                pivot = c;
                break;
            }
        }
        if (pivot < 0) continue;
        const Elem factor = v[static_cast<std::size_t>(pivot)];
        if (factor == 0) continue;
        for (int c = pivot; c < basis.cols; ++c)
            v[static_cast<std::size_t>(c)] = f.sub(v[static_cast<std::size_t>(c)],
                                                   f.mul(factor, basis.at(r, c)));
    }
}

bool row_space_contains(const FieldDescriptor& f, const GFMatrix& basis,
                        const std::vector<Elem>& row) {
    std::vector<Elem> v = row;
    reduce_against(f, basis, v);
    return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

bool ideal_contains(const GroupAlgebra& alg, const IdealCode& big, const IdealCode& small) {
    if (small.dim > big.dim) return false;
    for (int r = 0; r < small.basis.rows; ++r) {
        std::vector<Elem> row(small.basis.data.begin() + static_cast<std::ptrdiff_t>(r) * small.basis.cols,
                              small.basis.data.begin() + static_cast<std::ptrdiff_t>(r + 1) * small.basis.cols);
        if (!row_space_contains(alg.field, big.basis, row)) return false;
    }
    return true;
}

std::vector<Elem> basis_row(const GFMatrix& m, int r) {
    return std::vector<Elem>(m.data.begin() + static_cast<std::ptrdiff_t>(r) * m.cols,
                             m.data.begin() + static_cast<std::ptrdiff_t>(r + 1) * m.cols);
}

std::uint64_t vector_rank(const GroupAlgebra& alg, const std::vector<Elem>& v) {
    std::uint64_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;)
        idx = idx * static_cast<std::uint64_t>(alg.field.size) + v[i];
    return idx;
}

std::vector<Elem> vector_unrank(const GroupAlgebra& alg, std::uint64_t idx) {
    std::vector<Elem> v(static_cast<std::size_t>(alg.dim));
    for (int i = 0; i < alg.dim; ++i) {
        v[static_cast<std::size_t>(i)] = static_cast<Elem>(idx % alg.field.size);
        idx /= static_cast<std::uint64_t>(alg.field.size);
    }
    return v;
}

} // namespace

IdealCode augmentation_ideal(const GroupAlgebra& alg) {
    GFMatrix ones(1, alg.dim);
    for (int c = 0; c < alg.dim; ++c) ones.at(0, c) = 1;
    return make_ideal(alg, null_space(alg.field, ones));
}

IdealCode ideal_generated_by(const GroupAlgebra& alg, const std::vector<Elem>& v) {
    if (static_cast<int>(v.size()) != alg.dim)
        throw domain_error("ideal_generated_by: wrong vector length");
    GFMatrix rows(alg.dim, alg.dim);
    for (int g = 0; g < alg.dim; ++g) {
        const std::vector<Elem> shifted = alg.shift(v, g);
        std::copy(shifted.begin(), shifted.end(),
                  rows.data.begin() + static_cast<std::ptrdiff_t>(g) * alg.dim);
    }
    return make_ideal(alg, rows);
}

bool is_ideal(const GroupAlgebra& alg, const GFMatrix& basis) {
    for (int r = 0; r < basis.rows; ++r) {
        const std::vector<Elem> row = basis_row(basis, r);
        for (std::size_t gen = 0; gen < alg.group.rank(); ++gen) {
            GroupElement one = zero_element(alg.group);
            one[gen] = 1;
            const int g = static_cast<int>(element_index(alg.group, one));
            if (!row_space_contains(alg.field, basis, alg.shift(row, g))) return false;
        }
    }
    return true;
}

std::vector<IdealCode> enumerate_ideals(const GroupAlgebra& alg) {
    const std::uint64_t total = [&] {
        std::uint64_t t = 1;
        for (int i = 0; i < alg.dim; ++i) t *= static_cast<std::uint64_t>(alg.field.size);
        return t;
    }();

    std::vector<bool> covered(total, false);
    covered[0] = true;
    std::set<IdealCode> found;
    found.insert(zero_ideal(alg));

    // Cyclic seeds; vectors in one {scalar * Y^g v} orbit generate the same
    // ideal and are skipped.
    std::vector<IdealCode> seeds;
    for (std::uint64_t vi = 1; vi < total; ++vi) {
        if (covered[vi]) continue;
        const std::vector<Elem> v = vector_unrank(alg, vi);
        for (int g = 0; g < alg.dim; ++g) {
            std::vector<Elem> w = alg.shift(v, g);
            for (Elem c = 1; c < alg.field.size; ++c) {
                std::vector<Elem> scaled(w.size());
                for (std::size_t i = 0; i < w.size(); ++i) scaled[i] = alg.field.mul(w[i], c);
                covered[vector_rank(alg, scaled)] = true;
            }
        }
        IdealCode cyclic = ideal_generated_by(alg, v);
        if (found.insert(cyclic).second) seeds.push_back(std::move(cyclic));
    }

    // Close under sums with the cyclic seeds; every ideal is a sum of
    // cyclic ideals, so single-seed additions reach all of them.
    std::vector<IdealCode> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
        const IdealCode cur = std::move(frontier.back());
        frontier.pop_back();
        for (const IdealCode& seed : seeds) {
            if (ideal_contains(alg, cur, seed)) continue;
            IdealCode sum = make_ideal(alg, vstack(cur.basis, seed.basis));
            if (found.insert(sum).second) frontier.push_back(std::move(sum));
        }
    }

    return std::vector<IdealCode>(found.begin(), found.end());
}

std::vector<IdealCode> minimal_ideals(const GroupAlgebra& alg) {
    if (std::gcd(alg.group.order(), alg.field.p) != 1)
        throw domain_error("minimal_ideals: algebra is not semisimple (characteristic divides "
                           "the group order)");
    const std::vector<IdealCode> all = enumerate_ideals(alg);
    std::vector<IdealCode> minimal;
    for (const IdealCode& cand : all) {
        if (cand.dim == 0) continue;
        bool is_min = true;
        for (const IdealCode& other : all) {
            if (other.dim == 0 || other.dim >= cand.dim) continue;
            if (ideal_contains(alg, cand, other)) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(cand);
    }
    return minimal;
}

IdealCode dual_code(const GroupAlgebra& alg, const IdealCode& code, Variant variant, int nu) {
    GFMatrix m = code.basis;
    if (m.rows == 0) m = GFMatrix(0, alg.dim);
    if (variant == Variant::hermitian) {
        if (nu < 1 || alg.field.degree != 2 * nu)
            throw domain_error("dual_code: Hermitian duality needs field degree 2 * nu");
        for (Elem& x : m.data) x = frobenius_conjugate(alg.field, x, nu);
    }
    IdealCode dual = make_ideal(alg, null_space(alg.field, m));
    if (dual.dim != alg.dim - code.dim)
        throw internal_error("dual_code: dimensions are not complementary");
    if (!is_ideal(alg, dual.basis))
        throw internal_error("dual_code: dual of an ideal failed the ideal closure check");
    return dual;
}

bool is_lcd(const GroupAlgebra& alg, const IdealCode& code, Variant variant, int nu) {
    const IdealCode dual = dual_code(alg, code, variant, nu);
    return stacked_rank(alg.field, code.basis, dual.basis) == alg.dim;
}

bool is_direct_summand(const GroupAlgebra& alg, const IdealCode& code,
                       const std::vector<IdealCode>& all_ideals) {
    for (const IdealCode& other : all_ideals) {
        if (code.dim + other.dim != alg.dim) continue;
        if (stacked_rank(alg.field, code.basis, other.basis) == alg.dim) return true;
    }
    return false;
}

namespace {

IdealCode product_ideal(const GroupAlgebra& alg, const IdealCode& a, const IdealCode& b) {
    if (a.dim == 0 || b.dim == 0) return zero_ideal(alg);
    GFMatrix rows(a.dim * b.dim, alg.dim);
    int r = 0;
    for (int i = 0; i < a.dim; ++i) {
        const std::vector<Elem> ai = basis_row(a.basis, i);
        for (int j = 0; j < b.dim; ++j) {
            const std::vector<Elem> prod = alg.multiply(ai, basis_row(b.basis, j));
            std::copy(prod.begin(), prod.end(),
                      rows.data.begin() + static_cast<std::ptrdiff_t>(r) * alg.dim);
            ++r;
        }
    }
    return make_ideal(alg, rows);
}

} // namespace

std::int64_t nilpotency_index(const GroupAlgebra& alg) {
    const AbelianGroup& g = alg.group;
    const std::int64_t n = g.order();
    bool cyclic_p_power = g.rank() == 1 && n > 1;
    if (cyclic_p_power) {
        std::int64_t m = n;
        while (m % alg.field.p == 0) m /= alg.field.p;
        cyclic_p_power = m == 1;
    }
    if (!cyclic_p_power)
        throw domain_error("nilpotency_index: needs a nontrivial cyclic p-group over "
                           "characteristic p");

    const IdealCode radical = augmentation_ideal(alg);
    IdealCode power = radical;
    std::int64_t e = 1;
    while (power.dim > 0) {
        power = product_ideal(alg, radical, power);
        ++e;
    }
    return e;
}

VerificationReport verify_counts(const AbelianGroup& g, std::int64_t p, int nu, Variant variant,
                                 int capacity_log2) {
    const FieldDescriptor field =
        build_field(p, variant == Variant::hermitian ? 2 * nu : nu);
    const GroupAlgebra alg = build_algebra(g, field, capacity_log2);
    const std::vector<IdealCode> ideals = enumerate_ideals(alg);

    VerificationReport report;
    report.group = g;
    report.p = p;
    report.nu = nu;
    report.variant = variant;
    report.field_size = field.size;
    report.ideal_total = static_cast<std::int64_t>(ideals.size());

    std::vector<IdealCode> lcd_ideals;
    for (const IdealCode& code : ideals) {
        if (is_lcd(alg, code, variant, nu)) lcd_ideals.push_back(code);
        if (is_direct_summand(alg, code, ideals)) ++report.summand_total;
    }
    report.lcd_total = static_cast<std::int64_t>(lcd_ideals.size());

    const CountReport formula = count_lcd(g, p, nu, variant);
    report.r_one = formula.r_one;
    report.r_two = formula.r_two;
    report.formula_lcd = formula.lcd_count;
    report.agreement = std::to_string(report.lcd_total) == report.formula_lcd;
    if (!report.agreement) report.witnesses = std::move(lcd_ideals);
    return report;
}

} // namespace abelcd
