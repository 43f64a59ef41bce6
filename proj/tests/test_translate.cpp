#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "hyperpi/catalog.hpp"
#include "hyperpi/error.hpp"
#include "hyperpi/translate.hpp"
#include "oracles.hpp"

using namespace hyperpi;

TEST_CASE("mu constants evaluate to certified radicals") {
    MuConstant mu{Rational(49, 9), Integer(3)};
    BigReal v = mu_to_real(mu, 192);
    CHECK((v * v).contains(Rational(2401, 27)));
    CHECK(v.definitely_positive());

    MuConstant plain{Rational(-5, 7), Integer(1)};
    BigReal w = mu_to_real(plain, 64);
    CHECK(w.contains(Rational(-5, 7)));
    CHECK(w.verified_decimals() >= 15); // only rounding error, no radical

    CHECK_THROWS_AS(mu_to_real(MuConstant{Rational(1), Integer(0)}, 64),
                    NumericalError);
}

TEST_CASE("digit-to-precision mapping leaves slack") {
    CHECK(digits_to_prec(10) >= 10 * 3.32);
    CHECK(digits_to_prec(50) >= 50 * 3.32);
    CHECK(digits_to_prec(50) > digits_to_prec(10));
    // Enough slack that the printed digits are all certified.
    CHECK(digits_to_prec(30) >= digits_to_prec(1) + 29 * 3);
}

TEST_CASE("every builtin identity verifies at 25 digits") {
    for (const RamanujanIdentity& id : builtin_catalog().identities) {
        CAPTURE(id.name);
        VerifyReport rep = verify_identity(id, 25);
        CHECK(rep.passed);
        CHECK(rep.residual_bound <= pow10_inv(25));
        CHECK(rep.verified_digits >= 25);
        CHECK(rep.lhs.contains_zero() == false);
    }
}

TEST_CASE("a wrong constant is disproved, not excused") {
    RamanujanIdentity wrong = *builtin_catalog().find_identity("bauer");
    wrong.mu.q = Rational(3); // claim 3/pi instead of 2/pi
    VerifyReport rep = verify_identity(wrong, 10);
    CHECK(!rep.passed);
    // The enclosures are tight enough that the residual excludes zero; this
    // is a disproof, and more digits would not change it.
    Rational gap = abs(rep.lhs.mid_rational() - rep.rhs.mid_rational());
    CHECK(gap > rep.lhs.rad_rational() + rep.rhs.rad_rational());
}

TEST_CASE("translation reproduces the classical forty-term identity") {
    const Catalog& cat = builtin_catalog();
    const RamanujanIdentity& bauer = *cat.find_identity("bauer");
    const AlgebraicTransformation& t = *cat.find_transformation("eq6");
    CHECK_NOTHROW(check_compatibility(bauer, t));

    TranslationResult res = translate_identity(bauer, t, 40);
    CHECK(res.identity.name == "bauer.via.eq6");
    CHECK(res.identity.spec == t.source);
    CHECK(res.identity.a == 3);
    CHECK(res.identity.b == 40);
    REQUIRE(std::holds_alternative<Rational>(res.identity.x0));
    CHECK(std::get<Rational>(res.identity.x0) == Rational(1, 2401));
    CHECK(res.identity.mu.q == Rational(49, 9));
    CHECK(res.identity.mu.d == 3);
    CHECK(res.identity.field_disc == 2);

    CHECK(res.reverify.passed);
    CHECK(res.reverify.residual_bound <= pow10_inv(40));
    CHECK(!res.notes.empty());

    // The normalization factor is 7 sqrt(6) / 4.
    BigReal s = scale_rational(res.scale, Rational(4, 7));
    CHECK((s * s).contains(Rational(6)));

    // Raw chain-rule enclosures straddle the recognized exact values.
    CHECK((res.a_hat * scale_rational(res.scale, Rational(1, 3)))
              .contains(Rational(1)));
    CHECK(res.y0.contains(Rational(1, 2401)));
}

TEST_CASE("translated identities are catalog-grade") {
    const Catalog& cat = builtin_catalog();
    TranslationResult res = translate_identity(
        *cat.find_identity("bauer"), *cat.find_transformation("eq6"), 30);
    Catalog out;
    out.identities.push_back(res.identity);
    Catalog back = catalog_parse(catalog_serialize(out));
    REQUIRE(back.identities.size() == 1);
    VerifyReport rep = verify_identity(back.identities[0], 30);
    CHECK(rep.passed);
}

TEST_CASE("field tags gate translation") {
    const Catalog& cat = builtin_catalog();
    const AlgebraicTransformation& t = *cat.find_transformation("eq6");
    for (const char* name : {"sixn4pi", "chudnovsky"}) {
        const RamanujanIdentity& id = *cat.find_identity(name);
        CHECK_THROWS_AS(check_compatibility(id, t), VerificationError);
        try {
            check_compatibility(id, t);
        } catch (const VerificationError& e) {
            std::string msg = e.what();
            CHECK(msg.find(id.name) != std::string::npos);
            CHECK(msg.find(t.name) != std::string::npos);
            CHECK(msg.find(id.field_disc.get_str()) != std::string::npos);
        }
        CHECK_THROWS_AS(translate_identity(id, t, 20), VerificationError);
    }
}

TEST_CASE("series shape and base point gate translation") {
    const Catalog& cat = builtin_catalog();
    const AlgebraicTransformation& t = *cat.find_transformation("eq6");

    RamanujanIdentity wrong_spec = *cat.find_identity("chudnovsky");
    wrong_spec.field_disc = 2; // slip past the tag check
    CHECK_THROWS_AS(check_compatibility(wrong_spec, t), VerificationError);

    RamanujanIdentity wrong_x0 = *cat.find_identity("bauer");
    wrong_x0.x0 = Rational(-2);
    CHECK_THROWS_AS(check_compatibility(wrong_x0, t), VerificationError);
}

TEST_CASE("radical abscissas are compatible but not translatable") {
    // x0 written as the radical expression 1 - 2 still passes compatibility
    // (it encloses -1), but the chain rule needs the exact rational form.
    const Catalog& cat = builtin_catalog();
    const AlgebraicTransformation& t = *cat.find_transformation("eq6");
    RamanujanIdentity id = *cat.find_identity("bauer");
    id.x0 = radical_parse("-(1,2)");
    CHECK_NOTHROW(check_compatibility(id, t));
    CHECK_THROWS_AS(translate_identity(id, t, 20), NumericalError);
}

TEST_CASE("verification handles radical abscissas") {
    // A synthetic restatement of the bauer sum with x0 = 1 - 2 as a radical:
    // the evaluation route switches to balls but the verdict is unchanged.
    RamanujanIdentity id = *builtin_catalog().find_identity("bauer");
    id.x0 = radical_parse("-(1,2)");
    VerifyReport rep = verify_identity(id, 20);
    CHECK(rep.passed);
    CHECK(rep.accelerated);
}
