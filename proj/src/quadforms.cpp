#include "binform/quadforms.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace binform {

namespace {

template <class T>
basic_quad_form<T> act_impl(int_mat const & m, basic_quad_form<T> const & q, auto conv)
{
    T const a1 = conv(m.a), a2 = conv(m.b), a3 = conv(m.c), a4 = conv(m.d);
    return {T(q.a * a1 * a1 + q.b * a1 * a3 + q.c * a3 * a3),
            T(2 * (q.a * a1 * a2 + q.c * a3 * a4) + q.b * (a1 * a4 + a2 * a3)),
            T(q.a * a2 * a2 + q.b * a2 * a4 + q.c * a4 * a4)};
}

} // namespace

std::string to_string(quad_form const & q)
{
    return "[" + q.a.get_str() + ", " + q.b.get_str() + ", " + q.c.get_str() + "]";
}

std::string to_string(real_quad_form const & q)
{
    return "[" + std::to_string(q.a) + ", " + std::to_string(q.b) + ", " + std::to_string(q.c) + "]";
}

quad_form act(int_mat const & m, quad_form const & q)
{
    return act_impl(m, q, [](integer const & x) { return rational(x); });
}

real_quad_form act(int_mat const & m, real_quad_form const & q)
{
    return act_impl(m, q, [](integer const & x) { return x.get_d(); });
}

h2_point zero_map(quad_form const & q)
{
    if (!q.is_positive_definite())
        throw not_positive_definite(to_string(q));
    double a = q.a.get_d();
    double d = rational(-q.discriminant()).get_d();
    return {rational(-q.b / (2 * q.a)).get_d(), std::sqrt(d) / (2 * a)};
}

h2_point zero_map(real_quad_form const & q)
{
    if (!q.is_positive_definite())
        throw not_positive_definite(to_string(q));
    return {-q.b / (2 * q.a), std::sqrt(-q.discriminant()) / (2 * q.a)};
}

reduced_check is_reduced(quad_form const & q)
{
    if (!q.is_positive_definite())
        throw not_positive_definite(to_string(q));
    rational ab = abs(q.b);
    bool reduced = ab <= q.a && q.a <= q.c;
    bool boundary = ab == q.a || q.a == q.c;
    return {reduced, reduced && boundary};
}

quad_reduction reduce(quad_form const & q)
{
    if (!q.is_positive_definite())
        throw not_positive_definite(to_string(q));

    quad_form cur = q;
    int_mat acc = int_mat::identity();
    int steps = 0;
    std::size_t guard = 64 + 2 * std::max({bit_length(q.a.get_num()) + bit_length(q.a.get_den()),
                                       bit_length(q.b.get_num()) + bit_length(q.b.get_den()),
                                       bit_length(q.c.get_num()) + bit_length(q.c.get_den())});
    for (std::size_t round = 0;; ++round) {
        if (round > guard)
            throw non_termination("quadratic reduction guard exceeded");
        if (abs(cur.b) > cur.a) {
            integer delta = round_half_toward_zero(rational(-cur.b / (2 * cur.a)));
            int_mat tm = gen::T(delta);
            cur = act(tm, cur);
            acc = acc * tm;
        }
        if (cur.c < cur.a) {
            cur = act(gen::S(), cur);
            acc = acc * gen::S();
            ++steps;
            continue;
        }
        if (abs(cur.b) <= cur.a)
            break;
    }
    // boundary normalization to b >= 0
    if (cur.b < 0 && -cur.b == cur.a) {
        cur = act(gen::T(), cur);
        acc = acc * gen::T();
    } else if (cur.b < 0 && cur.a == cur.c) {
        cur = act(gen::S(), cur);
        acc = acc * gen::S();
    }
    return {cur, acc, steps};
}

rational height(quad_form const & q)
{
    return std::max({abs(q.a), abs(q.b), abs(q.c)});
}

rational class_height(quad_form const & q)
{
    return reduce(q).form.c;
}

std::vector<quad_form> reduced_class_list::minimal_height_forms() const
{
    std::vector<quad_form> out;
    if (forms.empty())
        return out;
    rational best = forms.front().c;
    for (auto const & f : forms)
        best = std::min(best, f.c);
    for (auto const & f : forms)
        if (f.c == best)
            out.push_back(f);
    return out;
}

reduced_class_list enumerate_reduced(integer const & disc, form_filter filter)
{
    if (disc >= 0)
        throw invalid_discriminant("quadratic enumeration needs disc < 0, got " + disc.get_str());

    reduced_class_list out;
    out.discriminant = disc;
    integer const D = -disc;
    // 3 b^2 <= D
    for (integer b = 0; 3 * b * b <= D; ++b) {
        integer num = b * b + D;
        if (num % 4 != 0)
            continue;
        integer ac = num / 4;
        integer a = b == 0 ? integer(1) : b;
        for (; a * a <= ac; ++a) {
            if (ac % a != 0)
                continue;
            integer c = ac / a;
            bool boundary = b == a || a == c;
            for (int sign : {1, -1}) {
                if (sign == -1 && (b == 0 || boundary))
                    continue;
                integer bb = sign * b;
                if (filter == form_filter::primitive) {
                    integer g;
                    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
                    if (g != 1)
                        continue;
                }
                out.forms.push_back({rational(a), rational(bb), rational(c)});
            }
        }
    }
    std::sort(out.forms.begin(), out.forms.end(), [](quad_form const & x, quad_form const & y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    out.count = out.forms.size();
    return out;
}

} // namespace binform
