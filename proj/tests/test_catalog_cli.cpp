#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperpi/catalog.hpp"
#include "hyperpi/cli.hpp"
#include "hyperpi/error.hpp"

using namespace hyperpi;

namespace {

struct CliRun {
    int rc;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int rc = cli_dispatch(std::move(args), out, err);
    return {rc, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (line.rfind(prefix, 0) == 0) return true;
    return false;
}

// Count significant digits in the value token of a "key = 1.234..." line.
int sig_digits(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.rfind(key, 0) != 0) continue;
        std::string v = line.substr(key.size());
        int n = 0;
        bool counting = false;
        for (char ch : v) {
            if (ch < '0' || ch > '9') continue;
            if (ch != '0') counting = true; // skip leading zeros
            if (counting) ++n;
        }
        return n;
    }
    return -1;
}

std::string write_temp(const std::string& stem, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / stem;
    std::ofstream(path) << text;
    return path.string();
}

const char* kFastCatalog =
    "[identity fast]\n"
    "upper = 1/4, 1/2, 3/4\n"
    "lower = 1, 1\n"
    "a = 3\n"
    "b = 40\n"
    "x0 = 1/2401\n"
    "mu_q = 49/9\n"
    "mu_d = 3\n"
    "field = 2\n";

} // namespace

TEST_CASE("the builtin catalog round-trips through its own text form") {
    const Catalog& cat = builtin_catalog();
    std::string text = catalog_serialize(cat);
    CHECK(text.size() > 1000);
    Catalog back = catalog_parse(text);
    CHECK(catalog_serialize(back) == text);
    CHECK(back.identities.size() == cat.identities.size());
    CHECK(back.transformations.size() == cat.transformations.size());
    CHECK_NOTHROW(catalog_verify(back));
}

TEST_CASE("catalog lookups distinguish kinds") {
    const Catalog& cat = builtin_catalog();
    CHECK(cat.find_identity("bauer") != nullptr);
    CHECK(cat.find_identity("eq6") == nullptr);
    CHECK(cat.find_transformation("eq6") != nullptr);
    CHECK(cat.find_transformation("bauer") == nullptr);
    CHECK(cat.find_identity("nosuch") == nullptr);
}

TEST_CASE("parse errors carry line numbers") {
    std::string base = kFastCatalog;

    // Value errors point at the offending line and echo the bad token.
    std::string bad = base;
    bad.replace(bad.find("mu_q = 49/9"), 11, "mu_q = nine");
    try {
        catalog_parse(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.rfind("line 7", 0) == 0);
        CHECK(msg.find("malformed rational 'nine'") != std::string::npos);
    }

    // x0 admits radical expressions, so garbage fails in that grammar.
    std::string badx = base;
    badx.replace(badx.find("x0 = 1/2401"), 11, "x0 = noise ");
    try {
        catalog_parse(badx);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.rfind("line 6", 0) == 0);
        CHECK(msg.find("radical expression") != std::string::npos);
    }

    // Repeated keys are rejected where the repeat happens.
    try {
        catalog_parse(base + "a = 4\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 10") != std::string::npos);
        CHECK(msg.find("duplicate key 'a'") != std::string::npos);
    }

    // A key before any section header has nowhere to go.
    CHECK_THROWS_WITH_AS(catalog_parse("a = 1\n"),
                         "line 1, col 1: key outside of any section",
                         ParseError);

    // Missing keys are reported against the section header.
    std::string incomplete = base;
    incomplete.erase(incomplete.find("mu_d = 3\n"), 9);
    try {
        catalog_parse(incomplete);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.rfind("line 1", 0) == 0);
        CHECK(msg.find("missing key 'mu_d'") != std::string::npos);
    }

    CHECK_THROWS_AS(catalog_parse(base + "\n[identity fast]\n"), ParseError);
}

TEST_CASE("catalog verification names the failing entry") {
    std::string lie = kFastCatalog;
    lie.replace(lie.find("fast"), 4, "bent");
    lie.replace(lie.find("b = 40"), 6, "b = 41");
    Catalog cat = catalog_parse(lie);
    try {
        catalog_verify(cat);
        FAIL("expected a verification error");
    } catch (const VerificationError& e) {
        CHECK(std::string(e.what()).find("'bent'") != std::string::npos);
    }
}

TEST_CASE("cli: eval prints an enclosure") {
    CliRun r = run_cli({"eval", "ramanujan42", "--digits", "15"});
    CHECK(r.rc == 0);
    CHECK(has_line(r.out, "value = 3.0016795417408678"));
    CHECK(has_line(r.out, "radius <= "));
    CHECK(has_line(r.out, "terms = "));
    CHECK(sig_digits(r.out, "value = ") == 15 + 12);
}

TEST_CASE("cli: verify prints both sides and a verdict") {
    CliRun r = run_cli({"verify", "ramanujan42", "--digits", "5"});
    CHECK(r.rc == 0);
    CHECK(has_line(r.out, "lhs = 3.0016795417408678"));
    CHECK(has_line(r.out, "rhs = 3.0016795417408678"));
    CHECK(has_line(r.out, "residual <= "));
    CHECK(has_line(r.out, "verified_digits = "));
    CHECK(has_line(r.out, "PASS"));
    CHECK(sig_digits(r.out, "lhs = ") == 5 + 12);

    CliRun all = run_cli({"verify", "--all", "--digits", "10"});
    CHECK(all.rc == 0);
    for (const char* name : {"bauer", "ramanujan42", "sixn4pi", "chudnovsky"})
        CHECK(all.out.find(std::string("== ") + name + " ==") !=
              std::string::npos);

    CliRun both = run_cli({"verify", "bauer", "--all"});
    CHECK(both.rc == 2);
}

TEST_CASE("cli: translate emits the derived identity and re-verifies") {
    CliRun r = run_cli({"translate", "bauer", "--via", "eq6", "--digits", "25"});
    CHECK(r.rc == 0);
    CHECK(has_line(r.out, "translated identity: bauer.via.eq6"));
    CHECK(has_line(r.out, "a = 3"));
    CHECK(has_line(r.out, "b = 40"));
    CHECK(has_line(r.out, "x0 = 1/2401"));
    CHECK(has_line(r.out, "mu = 49/9 * sqrt(3)"));
    CHECK(has_line(r.out, "field = 2"));
    CHECK(has_line(r.out, "re-verification at 25 digits:"));
    CHECK(has_line(r.out, "PASS"));
}

TEST_CASE("cli: incompatible tags are refused with exit 1") {
    CliRun r = run_cli({"translate", "sixn4pi", "--via", "eq6"});
    CHECK(r.rc == 1);
    CHECK(r.err.find("field discriminant 3") != std::string::npos);
    CHECK(r.err.find("anchored at 2") != std::string::npos);
}

TEST_CASE("cli: check-transform reports each layer") {
    CliRun r = run_cli({"check-transform", "eq6", "--order", "8"});
    CHECK(r.rc == 0);
    CHECK(has_line(r.out, "series identity holds through order 8"));
    CHECK(has_line(r.out, "parametrization matches both branches"));
    CHECK(has_line(r.out,
                   "parametrization satisfies both curve polynomials"));
    CHECK(has_line(r.out, "PASS"));
}

TEST_CASE("cli: list and show cover both entry kinds") {
    CliRun r = run_cli({"list"});
    CHECK(r.rc == 0);
    CHECK(has_line(r.out, "identity bauer: "));
    CHECK(has_line(r.out, "transformation eq6: "));

    CliRun s = run_cli({"show", "eq6"});
    CHECK(s.rc == 0);
    CHECK(has_line(s.out, "[transformation eq6]"));
    CHECK(has_line(s.out, "p0 = "));

    CliRun i = run_cli({"show", "chudnovsky"});
    CHECK(i.rc == 0);
    CHECK(has_line(i.out, "x0 = -1/151931373056000"));
}

TEST_CASE("cli: usage problems exit 2") {
    CHECK(run_cli({}).rc == 2);
    CHECK(run_cli({"frobnicate"}).rc == 2);
    CHECK(run_cli({"eval", "nosuch"}).rc == 2);
    CHECK(run_cli({"eval", "bauer", "--digits", "-3"}).rc == 2);
    CHECK(run_cli({"translate", "bauer"}).rc == 2); // --via is required
    CHECK(run_cli({"--catalog", "/no/such/file.cat", "list"}).rc == 2);
    CliRun help = run_cli({"--help"});
    CHECK(help.rc == 0);
    CHECK(help.out.find("hyperpi") != std::string::npos);
}

TEST_CASE("cli: a user catalog replaces the builtin one") {
    std::string path = write_temp("hyperpi_user.cat", kFastCatalog);

    CliRun r = run_cli({"--catalog", path, "list"});
    CHECK(r.rc == 0);
    CHECK(has_line(r.out, "identity fast: "));
    CHECK(!has_line(r.out, "identity bauer: "));

    CliRun v = run_cli({"--catalog", path, "verify", "fast", "--digits", "20"});
    CHECK(v.rc == 0);
    CHECK(has_line(v.out, "PASS"));

    // The environment variable is the fallback spelling of the same choice.
    setenv("HYPERPI_CATALOG", path.c_str(), 1);
    CliRun e = run_cli({"list"});
    unsetenv("HYPERPI_CATALOG");
    CHECK(e.rc == 0);
    CHECK(has_line(e.out, "identity fast: "));
    CHECK(!has_line(e.out, "identity bauer: "));

    // An explicit flag outranks the environment.
    std::string other = write_temp("hyperpi_other.cat", kFastCatalog);
    setenv("HYPERPI_CATALOG", "/no/such/file.cat", 1);
    CliRun f = run_cli({"--catalog", other, "list"});
    unsetenv("HYPERPI_CATALOG");
    CHECK(f.rc == 0);
    CHECK(has_line(f.out, "identity fast: "));

    std::filesystem::remove(path);
    std::filesystem::remove(other);
}

TEST_CASE("cli: user catalogs are verified before use") {
    // A catalog that parses but whose identity is numerically false.
    std::string lie = kFastCatalog;
    lie.replace(lie.find("b = 40"), 6, "b = 41");
    std::string path = write_temp("hyperpi_lie.cat", lie);
    CliRun r = run_cli({"--catalog", path, "list"});
    CHECK(r.rc == 1);
    CHECK(r.err.find("'fast'") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("cli: numerical refusals exit 3") {
    // A formally well-typed entry whose series diverges at its own x0.
    std::string runaway =
        "[identity runaway]\n"
        "upper = 1/2, 1/2, 1/2\n"
        "lower = 1, 1\n"
        "a = 1\n"
        "b = 4\n"
        "x0 = 3/2\n"
        "mu_q = 2\n"
        "mu_d = 1\n"
        "field = 2\n";
    std::string path = write_temp("hyperpi_div.cat", runaway);
    CliRun r = run_cli({"--catalog", path, "list"});
    CHECK(r.rc == 3);
    CHECK(!r.err.empty());
    std::filesystem::remove(path);
}
