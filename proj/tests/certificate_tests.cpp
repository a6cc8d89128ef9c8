#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <scrollcert/certificate.hpp>
#include <scrollcert/solver.hpp>

#include <string>
#include <vector>

using namespace scrollcert;

namespace {

BalancedCertificate sample_oddg() { return oddg_certificate(2, 3)[1]; }

BalancedCertificate sample_pb() {
    SearchBounds b;
    b.max_e1 = 2;
    return solve_pb(1, 4, SchubertPartition{1, 4, {3, 1}}, b).front();
}

BalancedCertificate sample_div4() {
    SearchBounds b;
    b.max_e0 = 5;
    b.max_eplus = 10;
    return solve_k1_div4(8, b).front();
}

std::vector<BalancedCertificate> sample_div4plus2() {
    SearchBounds b;
    b.max_e0 = 6;
    b.max_e1 = 11;
    b.max_eplus = 8;
    return solve_k1_div4plus2(10, b);
}

void expect_reject(BalancedCertificate c, const std::string& label) {
    VerifyResult v = verify_certificate(c);
    CAPTURE(label);
    CHECK_FALSE(v.ok);
    CHECK_FALSE(v.problems.empty());
}

}  // namespace

TEST_SUITE("certificate_json") {
    TEST_CASE("round trip is byte stable") {
        std::vector<BalancedCertificate> certs;
        certs.push_back(sample_oddg());
        certs.push_back(sample_pb());
        certs.push_back(sample_div4());
        for (const BalancedCertificate& c : sample_div4plus2()) certs.push_back(c);
        SearchBounds b;
        certs.push_back(solve_k1_odd(7, b).front());
        certs.push_back(beta_family_solver(3, 8, 3, b).front());
        certs.push_back(alphabeta_search(1, 4, SimpleCycle{0, 2}, b).front());
        for (const BalancedCertificate& c : certs) {
            REQUIRE(verify_certificate(c).ok);
            nlohmann::ordered_json j = certificate_to_json(c);
            BalancedCertificate back = certificate_from_json(j);
            CHECK(verify_certificate(back).ok);
            CHECK(certificate_to_json(back).dump(2) == j.dump(2));
        }
    }

    TEST_CASE("json carries the chained certificate") {
        nlohmann::ordered_json j = certificate_to_json(sample_div4());
        CHECK(j.contains("sub"));
        CHECK(j["sub"]["strategy"] == "oddG");
        CHECK(j["k"] == 1);
        CHECK(j["n"] == 8);
        CHECK(j["slopes"].is_object());
        CHECK(j["conditions"].is_array());
        CHECK(j.contains("flags"));
    }

    TEST_CASE("malformed json is rejected") {
        CHECK_THROWS(certificate_from_json(nlohmann::ordered_json::object()));
    }

    TEST_CASE("canonical sort is a strict weak order on families") {
        std::vector<BalancedCertificate> certs = oddg_certificate(1, 4);
        CHECK(certificate_less(certs[0], certs[1]));
        CHECK_FALSE(certificate_less(certs[1], certs[0]));
        CHECK_FALSE(certificate_less(certs[0], certs[0]));
        std::vector<BalancedCertificate> shuffled = {certs[3], certs[0],
                                                     certs[2], certs[1]};
        canonical_sort(shuffled);
        for (size_t i = 0; i < 4; ++i) CHECK(shuffled[i].r == certs[i].r);
    }
}

TEST_SUITE("certificate_verify") {
    TEST_CASE("default certificate is rejected") {
        CHECK_FALSE(verify_certificate(BalancedCertificate{}).ok);
    }

    TEST_CASE("negative twists are rejected") {
        BalancedCertificate c = sample_oddg();
        c.e_plus = -1;
        expect_reject(c, "negative e_plus");
        BalancedCertificate d = sample_oddg();
        d.e = {-2};
        expect_reject(d, "negative e");
    }

    TEST_CASE("tampered oddG fields are rejected") {
        const BalancedCertificate base = sample_oddg();
        REQUIRE(verify_certificate(base).ok);

        BalancedCertificate c = base;
        c.degree += 2;
        expect_reject(c, "degree");

        c = base;
        c.r.reset();
        expect_reject(c, "missing r");

        c = base;
        c.normal_type.push_back(5);
        expect_reject(c, "normal type");

        c = base;
        c.conditions.pop_back();
        expect_reject(c, "dropped condition");

        c = base;
        c.conditions[0].holds = false;
        expect_reject(c, "holds flag");

        c = base;
        c.conditions[0].lhs = "17";
        expect_reject(c, "condition lhs");

        c = base;
        c.conditions[0].relation = "ge";
        expect_reject(c, "condition relation");

        c = base;
        c.slopes[0].second = "3";
        expect_reject(c, "slope value");

        c = base;
        c.flags.push_back("unexpected");
        expect_reject(c, "extra flag");

        c = base;
        c.family.reset();
        expect_reject(c, "missing family");

        c = base;
        c.family->r_max = -1;
        expect_reject(c, "negative family cap");

        c = base;
        c.family->base += 1;
        expect_reject(c, "family base");

        c = base;
        c.e_plus = 2;
        expect_reject(c, "e_plus gate");

        c = base;
        c.strategy = "mystery";
        expect_reject(c, "unknown strategy");

        c = base;
        c.k = 3;  // n stays 5, so the ambient is no longer odd-matching
        expect_reject(c, "wrong ambient");
    }

    TEST_CASE("tampered chain certificates are rejected") {
        const BalancedCertificate base = sample_div4();
        REQUIRE(verify_certificate(base).ok);

        BalancedCertificate c = base;
        c.sub.reset();
        expect_reject(c, "missing sub");

        c = base;
        c.sub = std::make_shared<BalancedCertificate>(*base.sub);
        c.sub->degree += 1;
        expect_reject(c, "sub degree");

        c = base;
        c.flags.clear();
        expect_reject(c, "cleared flags");
    }

    TEST_CASE("tampered partition data is rejected") {
        const BalancedCertificate base = sample_pb();
        REQUIRE(verify_certificate(base).ok);

        BalancedCertificate c = base;
        c.e_plus_bound = "0";
        expect_reject(c, "kernel bound");

        c = base;
        c.deg_n += 1;
        expect_reject(c, "normal degree");

        c = base;
        c.rk_n = 0;
        expect_reject(c, "normal rank");

        c = base;
        c.partition.pop_back();
        expect_reject(c, "truncated partition");
    }

    TEST_CASE("reading tags are cross-checked") {
        std::vector<BalancedCertificate> certs = sample_div4plus2();
        REQUIRE(certs.size() == 4);
        REQUIRE(certs[0].reading == "");
        REQUIRE(certs[2].reading == "display");

        BalancedCertificate c = certs[0];
        c.reading = "display";
        expect_reject(c, "display tag on agreeing readings");

        c = certs[2];
        c.reading = "";
        expect_reject(c, "untagged diverging readings");

        c = certs[2];
        c.reading = "text";
        expect_reject(c, "text tag where display matches");

        c = certs[2];
        c.reading = "bogus";
        expect_reject(c, "unknown reading tag");
    }

    TEST_CASE("tampered cycle data is rejected") {
        SearchBounds b;
        const BalancedCertificate base =
            alphabeta_search(1, 4, SimpleCycle{0, 2}, b).front();
        REQUIRE(verify_certificate(base).ok);

        BalancedCertificate c = base;
        c.cycle.reset();
        expect_reject(c, "missing cycle");

        c = base;
        c.cycle = SimpleCycle{1, 1};
        expect_reject(c, "cycle partition mismatch");
    }

    TEST_CASE("tampered beta family is rejected") {
        SearchBounds b;
        const BalancedCertificate base = beta_family_solver(3, 8, 3, b).front();
        REQUIRE(verify_certificate(base).ok);

        BalancedCertificate c = base;
        REQUIRE(c.family);
        c.family->step = 9;
        expect_reject(c, "family step");

        c = base;
        c.e = {7, 4};
        expect_reject(c, "twist vector");
    }
}
