#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <scrollcert/certificate.hpp>
#include <scrollcert/solver.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace scrollcert;

namespace {

void check_all_verify(const std::vector<BalancedCertificate>& certs) {
    for (const BalancedCertificate& c : certs) {
        VerifyResult v = verify_certificate(c);
        CAPTURE(c.strategy);
        CAPTURE(c.degree);
        if (!v.ok)
            for (const std::string& p : v.problems) MESSAGE(p);
        CHECK(v.ok);
    }
}

bool has_flag(const BalancedCertificate& c, const std::string& f) {
    return std::find(c.flags.begin(), c.flags.end(), f) != c.flags.end();
}

}  // namespace

TEST_SUITE("curve_stats") {
    TEST_CASE("normal bundle numerology") {
        CurveNormalStats s = curve_normal_stats(2, 1, 3);
        CHECK(s.deg_n == 6);
        CHECK(s.rk_n == 3);
        CHECK(s.max_rulings == 3);
        CHECK(s.rk_n_printed == 7);
        CHECK(expected_degree(3, 1, 3) == 2);
        CHECK_THROWS_WITH(curve_normal_stats(0, 1, 3),
                          "curve stats need e >= 1 and 0 <= k < n");
    }

    TEST_CASE("minimal scroll slopes") {
        ScrollSlope three = minimal_scroll_slope(3);
        CHECK(three.slope == Rational(6, 3));
        CHECK(three.floor == 2);
        CHECK(three.rulings == 3);
        ScrollSlope five = minimal_scroll_slope(5);
        CHECK(five.floor == 3);
        CHECK(five.rulings == 4);
        ScrollSlope six = minimal_scroll_slope(6);
        CHECK(six.floor == 3);
        CHECK(six.rulings == 4);
        for (long long n = 3; n <= 51; ++n) {
            ScrollSlope s = minimal_scroll_slope(n);
            CHECK(s.slope == Rational(n * n - 3, 2 * n - 3));
            CHECK(s.floor == (n % 2 == 1 ? (n + 1) / 2 : n / 2));
            CHECK(s.rulings == (n % 2 == 1 ? (n + 3) / 2 : n / 2 + 1));
        }
    }
}

TEST_SUITE("solver_k1") {
    TEST_CASE("odd ambient, default box") {
        SearchBounds b;
        std::vector<BalancedCertificate> certs = solve_k1_odd(7, b);
        REQUIRE(certs.size() == 25);
        const long long first[5][3] = {
            {3, 4, 2}, {4, 6, 3}, {6, 9, 4}, {8, 12, 6}, {9, 14, 7}};
        for (int i = 0; i < 5; ++i) {
            CHECK(certs[i].e == std::vector<long long>{first[i][0], first[i][1]});
            CHECK(certs[i].e_plus == first[i][2]);
            CHECK(certs[i].degree ==
                  first[i][0] + first[i][1] + 5 * first[i][2]);
            CHECK(certs[i].strategy == "k1-odd");
        }
        check_all_verify(certs);
        // (31, 48, 24) satisfies the divisibility pattern 24 | e1, 4 | e+
        bool found = false;
        for (const BalancedCertificate& c : certs)
            if (c.e == std::vector<long long>{31, 48} && c.e_plus == 24) {
                found = true;
                CHECK(has_flag(c, "divisibility_family"));
            } else {
                CHECK_FALSE(has_flag(c, "divisibility_family"));
            }
        CHECK(found);
    }

    TEST_CASE("odd ambient, wide box") {
        SearchBounds wide;
        wide.max_e0 = 200;
        wide.max_e1 = 400;
        wide.max_eplus = 400;
        CHECK(solve_k1_odd(7, wide).size() == 135);
        CHECK_THROWS_WITH(solve_k1_odd(6, wide), "k1-odd requires odd n >= 5");
    }

    TEST_CASE("n divisible by four") {
        SearchBounds b;
        b.max_e0 = 9;
        b.max_eplus = 10;
        std::vector<BalancedCertificate> certs = solve_k1_div4(8, b);
        const long long expect[8][2] = {{2, 1}, {3, 1}, {4, 2}, {5, 3},
                                        {6, 4}, {7, 5}, {8, 6}, {9, 6}};
        REQUIRE(certs.size() == 8);
        for (int i = 0; i < 8; ++i) {
            CHECK(certs[i].e == std::vector<long long>{expect[i][0]});
            CHECK(certs[i].e_plus == expect[i][1]);
            CHECK(certs[i].strategy == "k1-div4");
            REQUIRE(certs[i].sub);
            CHECK(certs[i].sub->k == 1);
            CHECK(certs[i].sub->n == 3);
            CHECK(certs[i].sub->degree == expect[i][0]);
            CHECK(has_flag(certs[i], "eplus_parametrization_unverified"));
        }
        check_all_verify(certs);
        CHECK_THROWS_WITH(solve_k1_div4(10, b),
                          "k1-div4 requires n = 4*n1 >= 8");
    }

    TEST_CASE("n congruent two mod four") {
        SearchBounds b;
        b.max_e0 = 6;
        b.max_e1 = 11;
        b.max_eplus = 8;
        std::vector<BalancedCertificate> certs = solve_k1_div4plus2(10, b);
        REQUIRE(certs.size() == 4);
        struct Row { const char* reading; long long e0, e1, ep; };
        const Row rows[4] = {{"", 2, 3, 2},
                             {"", 4, 7, 5},
                             {"display", 5, 9, 6},
                             {"text", 6, 11, 8}};
        for (int i = 0; i < 4; ++i) {
            CHECK(certs[i].reading == rows[i].reading);
            CHECK(certs[i].e == std::vector<long long>{rows[i].e0, rows[i].e1});
            CHECK(certs[i].e_plus == rows[i].ep);
            CHECK(certs[i].degree == rows[i].e0 + rows[i].e1 + 8 * rows[i].ep);
        }
        check_all_verify(certs);
        CHECK_THROWS_WITH(solve_k1_div4plus2(8, b),
                          "k1-div4plus2 requires n = 4*n1+2 >= 10");
    }
}

TEST_SUITE("solver_partition") {
    TEST_CASE("partition enumeration by codimension") {
        std::vector<SchubertPartition> ps = partitions_with_codim(2, 11, 3, 200);
        REQUIRE(ps.size() == 3);
        CHECK(ps[0].a == std::vector<long long>{3, 0, 0});
        CHECK(ps[1].a == std::vector<long long>{2, 1, 0});
        CHECK(ps[2].a == std::vector<long long>{1, 1, 1});
        CHECK(partitions_with_codim(2, 11, 3, 2).size() == 2);
        CHECK(partitions_with_codim(1, 4, 4, 10).size() == 2);  // (3,1), (2,2)
    }

    TEST_CASE("point-base chain on G(1,4)") {
        SchubertPartition p{1, 4, {3, 1}};
        SearchBounds b;
        b.max_e1 = 5;
        std::vector<BalancedCertificate> certs = solve_pb(1, 4, p, b);
        REQUIRE(certs.size() == 5);
        for (long long i = 1; i <= 5; ++i) {
            const BalancedCertificate& c = certs[static_cast<size_t>(i - 1)];
            CHECK(c.e == std::vector<long long>{0, i});
            CHECK(c.e_plus == 2 * i - 1);
            CHECK(c.degree == 5 * i - 2);
            CHECK(c.strategy == "p+b");
            CHECK(has_flag(c, "s0_omitted"));
        }
        check_all_verify(certs);
    }

    TEST_CASE("wrong codimension is rejected") {
        SearchBounds b;
        CHECK_THROWS_WITH(solve_pb(2, 11, SchubertPartition{2, 11, {1, 0, 0}}, b),
                          "partition does not match R+1");
        CHECK_THROWS_WITH(solve_pb(2, 11, SchubertPartition{3, 8, {2, 2, 2, 0}}, b),
                          "partition belongs to a different Grassmannian");
        CHECK_THROWS_WITH(solve_pb(2, 4, SchubertPartition{2, 4, {1, 1, 1}}, b),
                          "p+b requires 1 <= k and 2k+1 <= n");
    }

    TEST_CASE("slope gap leaves G(2,11) empty") {
        SearchBounds b;
        CHECK(solve_pb(2, 11, SchubertPartition{2, 11, {3, 0, 0}}, b).empty());
    }

    TEST_CASE("integral matching fails on G(1,4)") {
        SearchBounds b;
        CHECK(solve_bp(1, 4, SchubertPartition{1, 4, {3, 1}}, b).empty());
        CHECK(solve_bp(1, 4, SchubertPartition{1, 4, {2, 2}}, b).empty());
    }
}

TEST_SUITE("solver_families") {
    TEST_CASE("odd Grassmannian ladder") {
        std::vector<BalancedCertificate> certs = oddg_certificate(2, 4);
        REQUIRE(certs.size() == 4);
        for (size_t i = 0; i < certs.size(); ++i) {
            const BalancedCertificate& c = certs[i];
            CHECK(c.k == 2);
            CHECK(c.n == 5);
            CHECK(c.strategy == "oddG");
            CHECK(c.r == static_cast<long long>(i + 1));
            CHECK(c.degree == 2 * static_cast<long long>(i + 1) + 1);
            CHECK(c.normal_type == std::vector<long long>{1, 1, 1, 1, 0});
            REQUIRE(c.family);
            CHECK(c.family->base == 3);
            CHECK(c.family->step == 2);
        }
        check_all_verify(certs);
        CHECK_THROWS_WITH(oddg_certificate(0, 3), "oddG requires k >= 1");
        CHECK_THROWS_WITH(oddg_certificate(2, 0), "oddG requires r_max >= 1");
    }

    TEST_CASE("family truncation is caught") {
        BalancedCertificate c = oddg_certificate(2, 4).back();
        REQUIRE(c.family);
        c.family->r_max = 2;  // r = 4 no longer covered
        CHECK_FALSE(verify_certificate(c).ok);
    }

    TEST_CASE("beta family instances") {
        SearchBounds b;
        std::vector<BalancedCertificate> g38 = beta_family_solver(3, 8, 3, b);
        REQUIRE(g38.size() == 1);
        CHECK(g38[0].e == std::vector<long long>{7, 3});
        CHECK(g38[0].degree == 5);
        REQUIRE(g38[0].family);
        CHECK(g38[0].family->base == 5);
        CHECK(g38[0].family->step == 10);
        std::vector<BalancedCertificate> g15 = beta_family_solver(1, 5, 3, b);
        REQUIRE(g15.size() == 1);
        CHECK(g15[0].e == std::vector<long long>{3, 5});
        CHECK(g15[0].degree == 4);
        REQUIRE(g15[0].family);
        CHECK(g15[0].family->base == 4);
        CHECK(g15[0].family->step == 8);
        check_all_verify(g38);
        check_all_verify(g15);
        CHECK_THROWS_WITH(beta_family_solver(3, 8, 1, b),
                          "beta-family requires beta >= 2");
        CHECK_THROWS_WITH(beta_family_solver(2, 4, 2, b),
                          "beta-family parameters out of range");
    }

    TEST_CASE("alpha beta search") {
        SearchBounds b;
        b.max_e0 = 10;
        b.max_eplus = 20;
        std::vector<BalancedCertificate> hit =
            alphabeta_search(1, 4, SimpleCycle{0, 2}, b);
        CHECK_FALSE(hit.empty());
        check_all_verify(hit);
        for (const BalancedCertificate& c : hit) {
            CHECK(c.strategy == "alphabeta");
            CHECK(c.partition == std::vector<long long>{2, 2});
            CHECK(c.degree == c.e[0] + c.e_plus);
        }
        // the kernel bound e+ >= 2 e0 excludes every floor match here
        CHECK(alphabeta_search(1, 4, SimpleCycle{1, 1}, b).empty());
        CHECK_THROWS_WITH(alphabeta_search(1, 4, SimpleCycle{1, 2}, b),
                          "partition does not match R+1");
    }
}

TEST_SUITE("certify_context") {
    TEST_CASE("odd Grassmannian degrees resolve directly") {
        CertifyContext ctx;
        auto c = ctx.certify(1, 3, 5);
        REQUIRE(c);
        CHECK(c->strategy == "oddG");
        CHECK(c->degree == 5);
        CHECK(c->r == 4);
        CHECK(verify_certificate(*c).ok);
        auto d = ctx.certify(2, 5, 7);
        REQUIRE(d);
        CHECK(d->r == 3);
        CHECK(verify_certificate(*d).ok);
    }

    TEST_CASE("unreachable degrees return null") {
        CertifyContext ctx;
        CHECK(ctx.certify(1, 3, 1) == nullptr);
        CHECK(ctx.certify(1, 2, 3) == nullptr);
        CHECK(ctx.certify(0, 4, 3) == nullptr);
    }

    TEST_CASE("memoization returns the same certificate object") {
        CertifyContext ctx;
        auto a = ctx.certify(1, 3, 3);
        auto b = ctx.certify(1, 3, 3);
        CHECK(a.get() == b.get());
    }

    TEST_CASE("dual side delegates") {
        CertifyContext ctx;
        auto c = ctx.certify(3, 5, 11);  // dualizes to G(1, 5)
        auto d = ctx.certify(1, 5, 11);
        REQUIRE(c);
        REQUIRE(d);
        CHECK(c->k == d->k);
        CHECK(c->n == d->n);
        CHECK(c->degree == 11);
        CHECK(verify_certificate(*c).ok);
    }
}
