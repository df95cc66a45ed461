#include "int_vector.hpp"

#include <algorithm>
#include <cstdlib>

namespace cyclex::detail {

IntVector to_primitive(const SparseVector& v)
{
    IntVector out;
    if (v.empty())
        return out;
    Integer common = 1;
    for (const auto& e : v.entries())
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), e.value.get_den_mpz_t());
    out.reserve(v.nnz());
    for (const auto& e : v.entries()) {
        Integer scaled = common / e.value.get_den();
        scaled *= e.value.get_num();
        out.push_back({static_cast<std::uint32_t>(e.index), std::move(scaled)});
    }
    make_primitive(out);
    return out;
}

void make_primitive(IntVector& v)
{
    if (v.empty())
        return;
    Integer g = abs(v.front().value);
    for (std::size_t i = 1; i < v.size() && g != 1; ++i)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].value.get_mpz_t());
    const bool negate = sgn(v.front().value) < 0;
    if (g == 1 && !negate)
        return;
    for (auto& e : v) {
        if (g != 1)
            mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
        if (negate)
            mpz_neg(e.value.get_mpz_t(), e.value.get_mpz_t());
    }
}

long find_index(const IntVector& v, std::uint32_t index)
{
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const IntEntry& e, std::uint32_t i) { return e.index < i; });
    if (it != v.end() && it->index == index)
        return static_cast<long>(it - v.begin());
    return -1;
}

IntVector eliminate(const IntVector& v, const IntVector& p, std::uint32_t index)
{
    const Integer& vc = v[find_index(v, index)].value;
    const Integer& pc = p[find_index(p, index)].value;
    Integer g;
    mpz_gcd(g.get_mpz_t(), vc.get_mpz_t(), pc.get_mpz_t());
    Integer a = pc / g; // multiplies v
    Integer b = vc / g; // multiplies p
    const bool a_is_one = a == 1;

    IntVector out;
    out.reserve(v.size() + p.size());
    auto x = v.begin();
    auto y = p.begin();
    Integer tmp;
    while (x != v.end() || y != p.end()) {
        if (y == p.end() || (x != v.end() && x->index < y->index)) {
            if (a_is_one)
                out.push_back({x->index, x->value});
            else
                out.push_back({x->index, a * x->value});
            ++x;
        } else if (x == v.end() || y->index < x->index) {
            out.push_back({y->index, -(b * y->value)});
            ++y;
        } else {
            if (x->index != index) {
                tmp = a * x->value;
                mpz_submul(tmp.get_mpz_t(), b.get_mpz_t(), y->value.get_mpz_t());
                if (sgn(tmp) != 0)
                    out.push_back({x->index, tmp});
            }
            ++x;
            ++y;
        }
    }
    make_primitive(out);
    return out;
}

} // namespace cyclex::detail
