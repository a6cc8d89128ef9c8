#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <scrollcert/kernel_predictors.hpp>
#include <scrollcert/oracle.hpp>
#include <scrollcert/prime_field.hpp>

#include <stdexcept>
#include <vector>

using namespace scrollcert;

namespace {

FieldConfig small_field() {
    FieldConfig cfg;
    cfg.prime = 1'048'583;
    cfg.seed = 42;
    cfg.trials = 2;
    return cfg;
}

GenericMapProblem line_problem(std::vector<long long> src, long long ell) {
    GenericMapProblem p;
    p.source = SplittingType(std::move(src));
    p.target = LineTarget{ell};
    return p;
}

GenericMapProblem torsion_problem(std::vector<long long> src, long long m) {
    GenericMapProblem p;
    p.source = SplittingType(std::move(src));
    p.target = TorsionTarget{m};
    return p;
}

}  // namespace

TEST_SUITE("prime_field") {
    TEST_CASE("construction guards") {
        CHECK_THROWS_WITH(PrimeField(1), "field characteristic out of range");
        CHECK_THROWS_WITH(PrimeField(std::int64_t{1} << 31),
                          "field characteristic out of range");
        CHECK_THROWS_WITH(PrimeField(91), "field characteristic must be prime");
        CHECK_NOTHROW(PrimeField(2));
        CHECK_NOTHROW(PrimeField(1'048'583));
    }

    TEST_CASE("arithmetic") {
        PrimeField f(101);
        CHECK(f.reduce(-1) == 100);
        CHECK(f.add(70, 50) == 19);
        CHECK(f.sub(3, 5) == 99);
        CHECK(f.mul(20, 20) == 97);
        CHECK(f.neg(0) == 0);
        CHECK(f.neg(1) == 100);
        CHECK(f.pow(2, 100) == 1);  // Fermat
        for (std::int64_t a = 1; a < 101; ++a)
            CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK_THROWS_WITH(f.inv(0), "inverse of zero in F_p");
    }

    TEST_CASE("primality scan") {
        CHECK(is_prime_u64(2));
        CHECK(is_prime_u64(1'048'583));
        CHECK_FALSE(is_prime_u64(1));
        CHECK_FALSE(is_prime_u64(1'048'581));
    }
}

TEST_SUITE("oracle") {
    TEST_CASE("problem validation") {
        CHECK_THROWS_WITH(
            line_problem({}, 3).validate(),
            "line target requires a nonempty source and ell >= max degree");
        CHECK_THROWS_AS(line_problem({2, 1}, 1).validate(), std::domain_error);
        CHECK_THROWS_WITH(torsion_problem({2, 1}, -1).validate(),
                          "torsion target requires m >= 0");
        CHECK_NOTHROW(line_problem({2, 1}, 2).validate());
        CHECK_NOTHROW(torsion_problem({}, 0).validate());
    }

    TEST_CASE("expected kernel invariants") {
        GenericMapProblem lp = line_problem({2, 1}, 3);
        CHECK(lp.expected_kernel_rank() == 1);
        CHECK(lp.expected_kernel_degree() == 0);
        GenericMapProblem tp = torsion_problem({2, 1}, 2);
        CHECK(tp.expected_kernel_rank() == 2);
        CHECK(tp.expected_kernel_degree() == 1);
    }

    TEST_CASE("section dimension") {
        CHECK(section_dim(-2) == 0);
        CHECK(section_dim(-1) == 0);
        CHECK(section_dim(0) == 1);
        CHECK(section_dim(3) == 4);
    }

    TEST_CASE("oracle matches torsion predictor") {
        FieldConfig cfg = small_field();
        const std::vector<std::pair<std::vector<long long>, long long>> cases =
            {{{3, 1, 1}, 2}, {{2, 2}, 1}, {{4, 0}, 3}, {{2, 1}, 0}, {{1}, 4}};
        for (const auto& [src, m] : cases) {
            GenericMapProblem p = torsion_problem(src, m);
            SplittingType got = oracle_kernel_type(p, cfg);
            CHECK(got == predict_kernel_torsion(SplittingType(src), m));
            CHECK(got.rank() == p.expected_kernel_rank());
            CHECK(got.degree() == p.expected_kernel_degree());
        }
    }

    TEST_CASE("oracle matches line predictor") {
        FieldConfig cfg = small_field();
        const std::vector<std::pair<std::vector<long long>, long long>> cases =
            {{{2, 2, 2}, 2}, {{2, 1, 1}, 3}, {{1, 1, 0, 0}, 1}, {{3, 2}, 5}};
        for (const auto& [src, ell] : cases) {
            GenericMapProblem p = line_problem(src, ell);
            SplittingType got = oracle_kernel_type(p, cfg);
            CHECK(got == predict_kernel_line(SplittingType(src), ell));
        }
    }

    TEST_CASE("plus trivial beyond the certified window") {
        // b below the threshold: the predictor delegates, the oracle still
        // finds a balanced kernel for this instance
        CHECK(predict_kernel_plus_trivial(SplittingType({3, 3}), 3, 5) ==
              PlusTrivialClaim::oracle_required);
        GenericMapProblem p = plus_trivial_problem(SplittingType({3, 3}), 3, 5);
        CHECK(p.source.degrees() ==
              std::vector<long long>{0, 0, 0, -3, -3});
        SplittingType k = oracle_kernel_type(p, small_field());
        CHECK(k.degrees() == std::vector<long long>{-2, -3, -3, -3});
        CHECK(k.balanced());
    }

    TEST_CASE("plus trivial inside the certified window") {
        CHECK(predict_kernel_plus_trivial(SplittingType({1, 1}), 2, 1) ==
              PlusTrivialClaim::certified_balanced);
        GenericMapProblem p = plus_trivial_problem(SplittingType({1, 1}), 2, 1);
        SplittingType k = oracle_kernel_type(p, small_field());
        CHECK(k.balanced());
        CHECK(k.rank() == p.expected_kernel_rank());
    }

    TEST_CASE("exact rational backend agrees with F_p") {
        FieldConfig fp = small_field();
        FieldConfig exact = fp;
        exact.exact_rationals = true;
        exact.trials = 1;
        const GenericMapProblem probs[] = {
            torsion_problem({2, 1}, 2),
            line_problem({2, 2}, 2),
            line_problem({2, 1, 1}, 3),
        };
        for (const GenericMapProblem& p : probs)
            CHECK(oracle_kernel_type(p, exact) == oracle_kernel_type(p, fp));
    }

    TEST_CASE("deterministic under a fixed seed") {
        GenericMapProblem p = torsion_problem({3, 1, 1}, 4);
        FieldConfig a = small_field();
        FieldConfig b = small_field();
        CHECK(oracle_kernel_type(p, a) == oracle_kernel_type(p, b));
        b.seed = 12345;
        CHECK(oracle_kernel_type(p, a) == oracle_kernel_type(p, b));
    }

    TEST_CASE("configuration guards") {
        GenericMapProblem p = torsion_problem({2, 1}, 1);
        FieldConfig cfg = small_field();
        cfg.trials = 0;
        CHECK_THROWS_WITH(oracle_kernel_type(p, cfg),
                          "at least one trial is required");
        FieldConfig tiny;
        tiny.prime = 5;
        tiny.trials = 1;
        CHECK_THROWS_WITH(oracle_kernel_type(torsion_problem({3, 3}, 6), tiny),
                          "torsion length must be smaller than the field size");
        FieldConfig bad = small_field();
        bad.prime = 91;
        CHECK_THROWS_WITH(oracle_kernel_type(p, bad),
                          "field characteristic must be prime");
    }

    TEST_CASE("recommended prime floor") {
        GenericMapProblem small = torsion_problem({1, 0}, 1);
        GenericMapProblem large = line_problem({4, 4, 4, 4, 4}, 12);
        CHECK(recommended_prime_floor(small) > 0);
        CHECK(recommended_prime_floor(small) <= recommended_prime_floor(large));
        // the default prime covers every problem in the default suite box
        CHECK(recommended_prime_floor(large) <= 1'048'583);
    }

    TEST_CASE("splitting type enumeration") {
        std::vector<SplittingType> two = enumerate_splitting_types(2, 0, 2);
        REQUIRE(two.size() == 6);
        CHECK(two.front().degrees() == std::vector<long long>{2, 2});
        CHECK(two.back().degrees() == std::vector<long long>{0, 0});
        for (std::size_t i = 1; i < two.size(); ++i)
            CHECK(two[i].degrees() < two[i - 1].degrees());
        CHECK(enumerate_splitting_types(1, -1, 3).size() == 5);
    }

    TEST_CASE("lemma suite on a small box") {
        SuiteBounds b;
        b.max_rank = 2;
        b.degree_lo = 0;
        b.degree_hi = 2;
        b.m_max = 3;
        b.ell_max = 4;
        b.a_max = 2;
        b.b_max = 4;
        FieldConfig cfg;
        cfg.seed = 7;
        cfg.trials = 1;
        SuiteReport rep = verify_lemma_suite(b, cfg);
        CHECK(rep.ok());
        CHECK(rep.checks_run > 0);
        CHECK(rep.prime == cfg.prime);
        CHECK(rep.seed == cfg.seed);
        CHECK(rep.trials == 1);
        CHECK_FALSE(rep.p_below_recommended);
    }

    TEST_CASE("suite flags small primes") {
        SuiteBounds b;
        b.max_rank = 1;
        b.degree_lo = 0;
        b.degree_hi = 1;
        b.m_max = 1;
        b.ell_max = 2;
        b.a_max = 1;
        b.b_max = 1;
        // worst problem in this box has recommended floor 2*(2+1+1)^2 = 32
        FieldConfig cfg;
        cfg.prime = 13;
        cfg.trials = 1;
        SuiteReport rep = verify_lemma_suite(b, cfg);
        CHECK(rep.p_below_recommended);
    }
}
