#include "hyperpi/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "hyperpi/catalog.hpp"
#include "hyperpi/error.hpp"

namespace hyperpi {

namespace {

std::string join(const std::vector<Rational>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_str(v[i]);
    }
    return out;
}

std::string spec_str(const HypergeometricSpec& s) {
    return "(" + join(s.upper) + " ; " + join(s.lower) + ")";
}

std::string mu_str(const MuConstant& mu) {
    if (mu.d == 1) return rat_str(mu.q);
    return rat_str(mu.q) + " * sqrt(" + mu.d.get_str() + ")";
}

std::string x0_str(const RamanujanIdentity& id) {
    if (const Rational* r = std::get_if<Rational>(&id.x0)) return rat_str(*r);
    return std::get<RadicalExpr>(id.x0).to_string();
}

std::string bound_str(const Rational& b) {
    if (b == 0) return "0";
    return BigReal(b, 64).to_string(3);
}

void print_identity(const RamanujanIdentity& id, std::ostream& out) {
    out << "spec = " << spec_str(id.spec) << "\n";
    out << "a = " << rat_str(id.a) << "\n";
    out << "b = " << rat_str(id.b) << "\n";
    out << "x0 = " << x0_str(id) << "\n";
    out << "mu = " << mu_str(id.mu) << "\n";
    out << "field = " << id.field_disc.get_str() << "\n";
}

void print_verify(const VerifyReport& rep, long digits, std::ostream& out) {
    long nd = std::clamp(rep.verified_digits, 1L, digits + 12);
    out << "lhs = " << rep.lhs.to_string(static_cast<int>(nd)) << "\n";
    out << "rhs = " << rep.rhs.to_string(static_cast<int>(nd)) << "\n";
    out << "residual <= " << bound_str(rep.residual_bound) << "\n";
    out << "verified_digits = " << rep.verified_digits << "\n";
    out << (rep.passed ? "PASS" : "FAIL") << "\n";
}

const RamanujanIdentity& need_identity(const Catalog& cat,
                                       const std::string& name) {
    const RamanujanIdentity* id = cat.find_identity(name);
    if (!id)
        throw ParseError("no identity named '" + name + "' in the catalog");
    return *id;
}

const AlgebraicTransformation& need_transformation(const Catalog& cat,
                                                   const std::string& name) {
    const AlgebraicTransformation* t = cat.find_transformation(name);
    if (!t)
        throw ParseError("no transformation named '" + name +
                         "' in the catalog");
    return *t;
}

} // namespace

int cli_dispatch(std::vector<std::string> args, std::ostream& out,
                 std::ostream& err) {
    CLI::App app{"rigorous evaluation and translation of hypergeometric "
                 "series identities for 1/pi",
                 "hyperpi"};
    app.require_subcommand(1);

    std::string catalog_path;
    app.add_option("--catalog", catalog_path,
                   "catalog file replacing the builtin catalog")
        ->envname("HYPERPI_CATALOG");

    std::string ev_name;
    long ev_digits = 30;
    long ev_prec = 0;
    CLI::App* eval = app.add_subcommand(
        "eval", "evaluate the weighted sum of a catalog identity");
    eval->add_option("name", ev_name, "identity name")->required();
    eval->add_option("--digits", ev_digits, "decimal digits to aim for")
        ->check(CLI::PositiveNumber);
    eval->add_option("--prec", ev_prec,
                     "working precision in bits (overrides --digits)")
        ->check(CLI::PositiveNumber);

    std::string vf_name;
    long vf_digits = 30;
    bool vf_all = false;
    CLI::App* verify = app.add_subcommand(
        "verify", "check a catalog identity against pi to a digit target");
    verify->add_option("name", vf_name, "identity name");
    verify->add_option("--digits", vf_digits, "digits the residual must clear")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--all", vf_all, "verify every identity in the catalog");

    std::string tr_name, tr_via;
    long tr_digits = 40;
    CLI::App* translate = app.add_subcommand(
        "translate",
        "pull an identity through an algebraic transformation");
    translate->add_option("name", tr_name, "identity to translate")
        ->required();
    translate->add_option("--via", tr_via, "transformation to pull through")
        ->required();
    translate
        ->add_option("--digits", tr_digits,
                     "digit target for the re-verification")
        ->check(CLI::PositiveNumber);

    std::string ck_name;
    long ck_order = 12;
    CLI::App* check = app.add_subcommand(
        "check-transform", "verify a transformation's series identity and "
                           "parametrization");
    check->add_option("name", ck_name, "transformation name")->required();
    check->add_option("--order", ck_order, "series order to check through")
        ->check(CLI::PositiveNumber);

    CLI::App* list =
        app.add_subcommand("list", "list the catalog's entries");

    std::string sh_name;
    CLI::App* show =
        app.add_subcommand("show", "print one catalog entry in catalog form");
    show->add_option("name", sh_name, "identity or transformation name")
        ->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        Catalog cat = catalog_path.empty() ? builtin_catalog()
                                           : catalog_load_file(catalog_path);

        if (eval->parsed()) {
            const RamanujanIdentity& id = need_identity(cat, ev_name);
            mpfr_prec_t prec = ev_prec > 0 ? static_cast<mpfr_prec_t>(ev_prec)
                                           : digits_to_prec(ev_digits);
            EvalReport rep;
            if (const Rational* rx = std::get_if<Rational>(&id.x0))
                rep = hyper_evaluate_weighted(id.spec, id.a, id.b, *rx, prec);
            else
                rep = hyper_evaluate_weighted(
                    id.spec, id.a, id.b,
                    radical_eval(std::get<RadicalExpr>(id.x0), prec + 16),
                    prec);
            long nd = rep.value.verified_decimals();
            if (ev_prec == 0) nd = std::min(nd, ev_digits + 12);
            nd = std::max(nd, 1L);
            out << "value = " << rep.value.to_string(static_cast<int>(nd))
                << "\n";
            out << "radius <= " << rep.value.radius_string() << "\n";
            out << "terms = " << rep.terms << "\n";
            if (rep.accelerated)
                out << "accelerated tail (heuristic bound)\n";
            return 0;
        }

        if (verify->parsed()) {
            if (vf_all != vf_name.empty())
                throw ParseError(
                    "verify needs an identity name or --all, not both");
            bool all_passed = true;
            if (vf_all) {
                for (const RamanujanIdentity& id : cat.identities) {
                    out << "== " << id.name << " ==\n";
                    VerifyReport rep = verify_identity(id, vf_digits);
                    print_verify(rep, vf_digits, out);
                    all_passed = all_passed && rep.passed;
                }
            } else {
                VerifyReport rep =
                    verify_identity(need_identity(cat, vf_name), vf_digits);
                print_verify(rep, vf_digits, out);
                all_passed = rep.passed;
            }
            return all_passed ? 0 : 1;
        }

        if (translate->parsed()) {
            const RamanujanIdentity& id = need_identity(cat, tr_name);
            const AlgebraicTransformation& t =
                need_transformation(cat, tr_via);
            check_compatibility(id, t);
            TranslationResult res = translate_identity(id, t, tr_digits);
            out << "translated identity: " << res.identity.name << "\n";
            print_identity(res.identity, out);
            for (const std::string& n : res.notes) out << "note: " << n << "\n";
            out << "re-verification at " << tr_digits << " digits:\n";
            print_verify(res.reverify, tr_digits, out);
            return res.reverify.passed ? 0 : 1;
        }

        if (check->parsed()) {
            const AlgebraicTransformation& t =
                need_transformation(cat, ck_name);
            if (!verify_series_identity(t, static_cast<int>(ck_order)))
                throw VerificationError(
                    "transformation '" + t.name +
                    "' does not satisfy its series identity through order " +
                    std::to_string(ck_order));
            out << "series identity holds through order " << ck_order << "\n";
            if (t.param) {
                if (!verify_param_consistency(t, static_cast<int>(ck_order)))
                    throw VerificationError(
                        "parametrization of '" + t.name +
                        "' does not match its curves through order " +
                        std::to_string(ck_order));
                out << "parametrization matches both branches through order "
                    << ck_order << "\n";
                RationalFunction sy =
                    bipoly_substitute(t.curve_y, t.param->x, t.param->y);
                RationalFunction sr =
                    bipoly_substitute(t.curve_r, t.param->x, t.param->r);
                if (!sy.num.is_zero() || !sr.num.is_zero())
                    throw VerificationError(
                        "parametrization of '" + t.name +
                        "' does not satisfy the curve polynomials");
                out << "parametrization satisfies both curve polynomials "
                       "identically\n";
            }
            out << "PASS\n";
            return 0;
        }

        if (list->parsed()) {
            for (const RamanujanIdentity& id : cat.identities)
                out << "identity " << id.name << ": " << spec_str(id.spec)
                    << " at x0 = " << x0_str(id) << ", mu = " << mu_str(id.mu)
                    << ", field " << id.field_disc.get_str() << "\n";
            for (const AlgebraicTransformation& t : cat.transformations)
                out << "transformation " << t.name << ": "
                    << spec_str(t.target) << " => " << spec_str(t.source)
                    << ", field " << t.field_disc.get_str() << "\n";
            return 0;
        }

        if (show->parsed()) {
            Catalog one;
            if (const RamanujanIdentity* id = cat.find_identity(sh_name))
                one.identities.push_back(*id);
            else if (const AlgebraicTransformation* t =
                         cat.find_transformation(sh_name))
                one.transformations.push_back(*t);
            else
                throw ParseError("no entry named '" + sh_name +
                                 "' in the catalog");
            out << catalog_serialize(one);
            return 0;
        }
    } catch (const VerificationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

} // namespace hyperpi
