#include <doctest.h>

#include <random>
#include <set>

#include "cubiclass/bqf.hpp"
#include "cubiclass/orders.hpp"
#include "cubiclass/sieve.hpp"

using namespace cubiclass;

TEST_CASE("ring_from_disc splits off the conductor")
{
    quad_ring r = ring_from_disc(-44);
    CHECK(r.D0 == -11);
    CHECK(r.f == 2);
    CHECK(r.eps == 0);
    r = ring_from_disc(-11);
    CHECK(r.D0 == -11);
    CHECK(r.f == 1);
    CHECK(r.eps == 1);
    r = ring_from_disc(-12);
    CHECK(r.D0 == -3);
    CHECK(r.f == 2);
    CHECK_THROWS_AS(ring_from_disc(-2), domain_error);
    CHECK_THROWS_AS(ring_from_disc(0), domain_error);
}

TEST_CASE("maximality of discriminants")
{
    CHECK(is_maximal_disc(-11));
    CHECK_FALSE(is_maximal_disc(-44));
    CHECK(is_maximal_disc(40));
    CHECK(is_maximal_disc(-3));
    CHECK_FALSE(is_maximal_disc(-12));
    /* agreement with the conductor on a range */
    for (i64 D = -300; D <= 300; ++D) {
        if (!is_valid_disc(D))
            continue;
        CHECK(is_maximal_disc(D) == (ring_from_disc(D).f == 1));
    }
}

TEST_CASE("reduced definite forms match classical class numbers")
{
    CHECK(reduced_definite_forms(-23).size() == 3);
    CHECK(reduced_definite_forms(-44).size() == 3);
    CHECK(reduced_definite_forms(-4).size() == 1);
    auto h23 = reduced_definite_forms(-23);
    CHECK(std::set<bqf>(h23.begin(), h23.end())
          == std::set<bqf>{{1, 1, 6}, {2, 1, 3}, {2, -1, 3}});
}

TEST_CASE("composition group laws, definite case")
{
    std::mt19937_64 rng(7);
    for (i64 D : {i64(-23), i64(-44), i64(-71), i64(-231), i64(-1032)}) {
        auto forms = reduced_definite_forms(D);
        bqf one = reduce_definite(principal_bqf(D));
        std::uniform_int_distribution<size_t> pick(0, forms.size() - 1);
        for (int i = 0; i < 40; ++i) {
            bqf f = forms[pick(rng)], g = forms[pick(rng)], h = forms[pick(rng)];
            /* identity, inverses, commutativity, associativity */
            CHECK(reduce_definite(compose_raw(one, f)) == f);
            CHECK(reduce_definite(compose_raw(f, f.inverse())) == one);
            bqf fg = reduce_definite(compose_raw(f, g));
            bqf gf = reduce_definite(compose_raw(g, f));
            CHECK(fg == gf);
            bqf fg_h = reduce_definite(compose_raw(fg, h));
            bqf f_gh = reduce_definite(compose_raw(f, reduce_definite(compose_raw(g, h))));
            CHECK(fg_h == f_gh);
        }
    }
}

TEST_CASE("3-torsion counts, imaginary")
{
    CHECK(cl3_count(-23) == 3);
    CHECK(cl3_count(-44) == 3);
    CHECK(cl3_count(-4) == 1);
    CHECK(cl3_count(-3) == 1);
    CHECK(cl3_count(-3299) == 9); /* 3-rank 2 */
}

TEST_CASE("3-torsion counts, real (narrow class group via cycles)")
{
    CHECK(cl3_count(229) == 3);
    CHECK(cl3_count(5) == 1);
    CHECK(cl3_count(40) == 1);
    CHECK(cl3_count(316) == 3);
    CHECK(cl3_count(321) == 3);
}

TEST_CASE("cycle tables are sane")
{
    cycle_table t = build_cycle_table(229);
    CHECK(t.n_cycles == 3);
    /* every reduced form's rho-orbit has even length and stays reduced */
    for (const bqf& f : t.forms) {
        CHECK(is_reduced_indefinite(f, t.sqrt_floor));
        bqf g = rho_step(f, t.D, t.sqrt_floor);
        CHECK(is_reduced_indefinite(g, t.sqrt_floor));
        CHECK(g.disc() == 229);
    }
    cycle_table t5 = build_cycle_table(5);
    CHECK(t5.n_cycles == 1);
    CHECK(t5.forms.size() == 2);
}

TEST_CASE("ideal group 3-torsion oracle")
{
    CHECK(ideal3_count(-23) == 1);
    CHECK(ideal3_count(-44) == 3);
    CHECK(ideal3_count(-99) == 1);
    CHECK(ideal3_count(-12) == 3);
}

TEST_CASE("ideal oracle is trivial at maximal discriminants")
{
    for (i64 D = -500; D <= 500; ++D) {
        if (!is_valid_disc(D) || is_square(D))
            continue;
        if (is_maximal_disc(D))
            CHECK(ideal3_count(D) == 1);
    }
}

TEST_CASE("torsion counts are powers of 3")
{
    auto pow3 = [](i64 n) {
        while (n % 3 == 0)
            n /= 3;
        return n == 1;
    };
    for (i64 D = -400; D <= 400; ++D) {
        if (!is_valid_disc(D) || is_square(D))
            continue;
        CHECK(pow3(cl3_count(D)));
        CHECK(pow3(ideal3_count(D)));
    }
}

TEST_CASE("ideal oracle is multiplicative over coprime conductors")
{
    struct probe { i64 D0; i64 f1; i64 f2; };
    for (auto [D0, f1, f2] : {probe{-11, 2, 3}, probe{-11, 2, 5}, probe{-3, 2, 5},
                              probe{-4, 3, 7}, probe{5, 2, 3}, probe{13, 2, 9}}) {
        i64 both = ideal3_count(D0 * f1 * f1 * f2 * f2);
        i64 left = ideal3_count(D0 * f1 * f1);
        i64 right = ideal3_count(D0 * f2 * f2);
        CHECK(both == left * right);
    }
}

TEST_CASE("unit corrections and sigma")
{
    CHECK(u3_correction(-12) == 3);
    CHECK(u3_correction(-3) == 1);
    CHECK(u3_correction(-44) == 1);
    CHECK(unit_cube_index(-44) == 1);
    CHECK(unit_cube_index(-3) == 3);
    CHECK(unit_cube_index(40) == 3);
    CHECK(sigma_factor(-44) == 1);
    CHECK(sigma_factor(229) == 3);
    CHECK(sigma_factor(-3) == 3);
}

TEST_CASE("kronecker symbol")
{
    CHECK(kronecker(-11, 2) == -1); /* -11 = 5 mod 8: 2 inert in Q(sqrt(-11)) */
    CHECK(kronecker(-11, 3) == 1);
    CHECK(kronecker(-3, 2) == -1);
    CHECK(kronecker(5, 5) == 0);
    CHECK(kronecker(12, 35) == kronecker(12, 5) * kronecker(12, 7));
    /* quadratic reciprocity spot check against direct squares mod p */
    for (i64 p : {i64(3), i64(5), i64(7), i64(11), i64(13)}) {
        for (i64 a = 1; a < p; ++a) {
            bool sq = false;
            for (i64 x = 0; x < p; ++x)
                if ((x * x - a) % p == 0)
                    sq = true;
            CHECK(kronecker(a, p) == (sq ? 1 : -1));
        }
    }
}

TEST_CASE("factor sieve")
{
    factor_sieve sv(10000);
    CHECK(sv.is_prime(9973));
    CHECK_FALSE(sv.is_prime(9991)); /* 97 * 103 */
    CHECK(sv.moebius(30) == -1);
    CHECK(sv.moebius(12) == 0);
    CHECK(sv.square_part(9900) == 30); /* 9900 = 2^2 3^2 5^2 11 */
    CHECK(sv.is_squarefree(9894)); /* 2*3*17*97 */
}
