#include "hyperpi/catalog.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "hyperpi/error.hpp"

namespace hyperpi {

const RamanujanIdentity* Catalog::find_identity(std::string_view name) const {
    for (const auto& id : identities)
        if (id.name == name) return &id;
    return nullptr;
}

const AlgebraicTransformation*
Catalog::find_transformation(std::string_view name) const {
    for (const auto& t : transformations)
        if (t.name == name) return &t;
    return nullptr;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace((unsigned char)s.front()))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace((unsigned char)s.back()))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

Rational parse_rational(std::string_view s, long line) {
    auto r = rat_try_parse(trim(s));
    if (!r)
        throw ParseError("malformed rational '" + std::string(trim(s)) + "'",
                         line);
    return *r;
}

Integer parse_integer(std::string_view s, long line) {
    Rational r = parse_rational(s, line);
    if (r.get_den() != 1)
        throw ParseError("expected an integer, got '" +
                             std::string(trim(s)) + "'",
                         line);
    return r.get_num();
}

std::vector<Rational> parse_rational_list(std::string_view s, long line) {
    std::vector<Rational> out;
    for (std::string_view part : split(s, ','))
        out.push_back(parse_rational(part, line));
    return out;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit((unsigned char)c)) return false;
    return true;
}

// c*x^i*w^j + c*x^i*w^j + ...
BiPoly parse_bipoly(std::string_view s, long line) {
    BiPoly P;
    for (std::string_view term : split(s, '+')) {
        term = trim(term);
        size_t px = term.find("*x^");
        if (px == std::string_view::npos)
            throw ParseError("curve term '" + std::string(term) +
                                 "' is not of the form c*x^i*w^j",
                             line);
        Rational c = parse_rational(term.substr(0, px), line);
        std::string_view rest = term.substr(px + 3);
        size_t pw = rest.find("*w^");
        if (pw == std::string_view::npos || !all_digits(rest.substr(0, pw)) ||
            !all_digits(rest.substr(pw + 3)))
            throw ParseError("curve term '" + std::string(term) +
                                 "' is not of the form c*x^i*w^j",
                             line);
        int i = std::stoi(std::string(rest.substr(0, pw)));
        int j = std::stoi(std::string(rest.substr(pw + 3)));
        if (c != 0) P.add_term(i, j, c);
    }
    return P;
}

// c*p^i + c*p^i + ...  (zero coefficients may be omitted)
Poly parse_param_poly(std::string_view s, long line) {
    std::vector<Rational> coeffs;
    for (std::string_view term : split(s, '+')) {
        term = trim(term);
        size_t pp = term.find("*p^");
        if (pp == std::string_view::npos || !all_digits(term.substr(pp + 3)))
            throw ParseError("parametrization term '" + std::string(term) +
                                 "' is not of the form c*p^i",
                             line);
        Rational c = parse_rational(term.substr(0, pp), line);
        size_t i = std::stoul(std::string(term.substr(pp + 3)));
        if (coeffs.size() <= i) coeffs.resize(i + 1, Rational(0));
        coeffs[i] += c;
    }
    return Poly(std::move(coeffs));
}

// ( poly in p ) / ( poly in p )
RationalFunction parse_ratfunc(std::string_view s, long line) {
    s = trim(s);
    if (s.empty() || s.front() != '(')
        throw ParseError("parametrization must look like ( ... ) / ( ... )",
                         line);
    size_t close = s.find(')');
    if (close == std::string_view::npos)
        throw ParseError("unterminated '(' in parametrization", line);
    Poly num = parse_param_poly(s.substr(1, close - 1), line);
    std::string_view rest = trim(s.substr(close + 1));
    if (rest.empty() || rest.front() != '/')
        throw ParseError("parametrization must look like ( ... ) / ( ... )",
                         line);
    rest = trim(rest.substr(1));
    if (rest.empty() || rest.front() != '(' || rest.back() != ')')
        throw ParseError("parametrization must look like ( ... ) / ( ... )",
                         line);
    Poly den = parse_param_poly(rest.substr(1, rest.size() - 2), line);
    return RationalFunction(num, den);
}

TruncatedSeries parse_seed(std::string_view s, long line) {
    std::vector<Rational> c = parse_rational_list(s, line);
    if (c.empty())
        throw ParseError("seed needs at least one coefficient", line);
    int order = (int)c.size() - 1;
    return TruncatedSeries(std::move(c), order);
}

RadicalExpr parse_radical_at(std::string_view s, long line) {
    try {
        return radical_parse(trim(s));
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line);
    }
}

struct RawSection {
    std::string kind, name;
    long line = 0; // header line
    std::map<std::string, std::pair<std::string, long>> entries;
};

const std::pair<std::string, long>& need(const RawSection& sec,
                                         const std::string& key) {
    auto it = sec.entries.find(key);
    if (it == sec.entries.end())
        throw ParseError("section '" + sec.name + "' is missing key '" + key +
                             "'",
                         sec.line);
    return it->second;
}

HypergeometricSpec build_spec(const RawSection& sec, const std::string& ukey,
                              const std::string& lkey) {
    const auto& [uval, uline] = need(sec, ukey);
    const auto& [lval, lline] = need(sec, lkey);
    HypergeometricSpec spec;
    spec.upper = parse_rational_list(uval, uline);
    spec.lower = parse_rational_list(lval, lline);
    try {
        hyper_validate(spec);
    } catch (const ParseError& e) {
        throw ParseError(std::string("section '") + sec.name + "': " +
                             e.what(),
                         uline);
    }
    return spec;
}

RamanujanIdentity build_identity(const RawSection& sec) {
    static const char* known[] = {"upper", "lower", "a",    "b",
                                  "x0",    "mu_q",  "mu_d", "field"};
    for (const auto& [key, val] : sec.entries) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok)
            throw ParseError("unknown identity key '" + key + "'",
                             val.second);
    }
    RamanujanIdentity id;
    id.name = sec.name;
    id.spec = build_spec(sec, "upper", "lower");
    id.a = parse_rational(need(sec, "a").first, need(sec, "a").second);
    id.b = parse_rational(need(sec, "b").first, need(sec, "b").second);
    {
        const auto& [val, line] = need(sec, "x0");
        if (auto r = rat_try_parse(trim(val)))
            id.x0 = *r;
        else
            id.x0 = parse_radical_at(val, line);
    }
    id.mu.q =
        parse_rational(need(sec, "mu_q").first, need(sec, "mu_q").second);
    id.mu.d = parse_integer(need(sec, "mu_d").first, need(sec, "mu_d").second);
    if (id.mu.d <= 0)
        throw ParseError("mu_d must be positive", need(sec, "mu_d").second);
    id.field_disc =
        parse_integer(need(sec, "field").first, need(sec, "field").second);
    return id;
}

AlgebraicTransformation build_transformation(const RawSection& sec) {
    static const char* known[] = {"source_upper", "source_lower",
                                  "target_upper", "target_lower",
                                  "field",        "curve_y",
                                  "curve_r",      "seed_y",
                                  "seed_r",       "param_x",
                                  "param_y",      "param_r",
                                  "p0"};
    for (const auto& [key, val] : sec.entries) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok)
            throw ParseError("unknown transformation key '" + key + "'",
                             val.second);
    }
    AlgebraicTransformation t;
    t.name = sec.name;
    t.source = build_spec(sec, "source_upper", "source_lower");
    t.target = build_spec(sec, "target_upper", "target_lower");
    t.field_disc =
        parse_integer(need(sec, "field").first, need(sec, "field").second);
    t.curve_y =
        parse_bipoly(need(sec, "curve_y").first, need(sec, "curve_y").second);
    t.curve_r =
        parse_bipoly(need(sec, "curve_r").first, need(sec, "curve_r").second);
    t.seed_y =
        parse_seed(need(sec, "seed_y").first, need(sec, "seed_y").second);
    t.seed_r =
        parse_seed(need(sec, "seed_r").first, need(sec, "seed_r").second);

    int have = 0;
    for (const char* k : {"param_x", "param_y", "param_r", "p0"})
        have += sec.entries.count(k);
    if (have == 4) {
        RationalParametrization pr;
        pr.x = parse_ratfunc(need(sec, "param_x").first,
                             need(sec, "param_x").second);
        pr.y = parse_ratfunc(need(sec, "param_y").first,
                             need(sec, "param_y").second);
        pr.r = parse_ratfunc(need(sec, "param_r").first,
                             need(sec, "param_r").second);
        t.param = pr;
        t.p0 = parse_radical_at(need(sec, "p0").first,
                                need(sec, "p0").second);
    } else if (have != 0) {
        throw ParseError("section '" + sec.name +
                             "' has an incomplete parametrization (needs all "
                             "of param_x, param_y, param_r, p0)",
                         sec.line);
    }
    return t;
}

} // namespace

Catalog catalog_parse(std::string_view text) {
    Catalog cat;
    std::vector<RawSection> sections;
    RawSection* cur = nullptr;

    long lineno = 0;
    for (std::string_view raw : split(text, '\n')) {
        ++lineno;
        std::string_view line = raw;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("unterminated section header", lineno, 1);
            std::string_view inner = trim(line.substr(1, line.size() - 2));
            size_t sp = inner.find(' ');
            if (sp == std::string_view::npos)
                throw ParseError(
                    "section header needs a kind and a name", lineno, 2);
            std::string kind(trim(inner.substr(0, sp)));
            std::string name(trim(inner.substr(sp + 1)));
            if (kind != "identity" && kind != "transformation")
                throw ParseError("unknown section kind '" + kind + "'",
                                 lineno, 2);
            if (name.empty() ||
                name.find_first_of(" \t[]=") != std::string::npos)
                throw ParseError("malformed section name", lineno, 2);
            for (const RawSection& s : sections)
                if (s.name == name)
                    throw ParseError("duplicate section name '" + name + "'",
                                     lineno, 2);
            sections.push_back(RawSection{kind, name, lineno, {}});
            cur = &sections.back();
            continue;
        }

        size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected 'key = value'", lineno, 1);
        if (!cur)
            throw ParseError("key outside of any section", lineno, 1);
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty())
            throw ParseError("empty key", lineno, 1);
        if (cur->entries.count(key))
            throw ParseError("duplicate key '" + key + "' in section '" +
                                 cur->name + "'",
                             lineno, 1);
        cur->entries.emplace(key, std::make_pair(value, lineno));
    }

    for (const RawSection& sec : sections) {
        if (sec.kind == "identity")
            cat.identities.push_back(build_identity(sec));
        else
            cat.transformations.push_back(build_transformation(sec));
    }
    return cat;
}

namespace {

std::string join_rationals(const std::vector<Rational>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_str(v[i]);
    }
    return out;
}

std::string bipoly_str(const BiPoly& P) {
    std::string out;
    for (const auto& [k, c] : P.t) {
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        out += rat_str(c) + "*x^" + std::to_string(k.first) + "*w^" +
               std::to_string(k.second);
    }
    if (out.empty()) out = "0*x^0*w^0";
    return out;
}

std::string param_poly_str(const Poly& f) {
    std::string out;
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) == 0 && f.degree() > 0) continue;
        if (!out.empty()) out += " + ";
        out += rat_str(f.coeff(i)) + "*p^" + std::to_string(i);
    }
    if (out.empty()) out = "0*p^0";
    return out;
}

std::string ratfunc_str(const RationalFunction& f) {
    return "( " + param_poly_str(f.num) + " ) / ( " + param_poly_str(f.den) +
           " )";
}

std::string seed_str(const TruncatedSeries& s) {
    std::string out;
    for (int i = 0; i <= s.order; ++i) {
        if (i) out += ", ";
        out += rat_str(s[i]);
    }
    return out;
}

} // namespace

std::string catalog_serialize(const Catalog& c) {
    std::ostringstream os;
    bool first = true;
    for (const RamanujanIdentity& id : c.identities) {
        if (!first) os << "\n";
        first = false;
        os << "[identity " << id.name << "]\n";
        os << "upper = " << join_rationals(id.spec.upper) << "\n";
        os << "lower = " << join_rationals(id.spec.lower) << "\n";
        os << "a = " << rat_str(id.a) << "\n";
        os << "b = " << rat_str(id.b) << "\n";
        if (const Rational* r = std::get_if<Rational>(&id.x0))
            os << "x0 = " << rat_str(*r) << "\n";
        else
            os << "x0 = " << std::get<RadicalExpr>(id.x0).to_string() << "\n";
        os << "mu_q = " << rat_str(id.mu.q) << "\n";
        os << "mu_d = " << id.mu.d.get_str() << "\n";
        os << "field = " << id.field_disc.get_str() << "\n";
    }
    for (const AlgebraicTransformation& t : c.transformations) {
        if (!first) os << "\n";
        first = false;
        os << "[transformation " << t.name << "]\n";
        os << "source_upper = " << join_rationals(t.source.upper) << "\n";
        os << "source_lower = " << join_rationals(t.source.lower) << "\n";
        os << "target_upper = " << join_rationals(t.target.upper) << "\n";
        os << "target_lower = " << join_rationals(t.target.lower) << "\n";
        os << "field = " << t.field_disc.get_str() << "\n";
        os << "curve_y = " << bipoly_str(t.curve_y) << "\n";
        os << "curve_r = " << bipoly_str(t.curve_r) << "\n";
        os << "seed_y = " << seed_str(t.seed_y) << "\n";
        os << "seed_r = " << seed_str(t.seed_r) << "\n";
        if (t.param) {
            os << "param_x = " << ratfunc_str(t.param->x) << "\n";
            os << "param_y = " << ratfunc_str(t.param->y) << "\n";
            os << "param_r = " << ratfunc_str(t.param->r) << "\n";
        }
        if (t.p0) os << "p0 = " << t.p0->to_string() << "\n";
    }
    return os.str();
}

void catalog_verify(const Catalog& c) {
    for (const RamanujanIdentity& id : c.identities) {
        VerifyReport rep = verify_identity(id, 20);
        if (!rep.passed)
            throw VerificationError("catalog identity '" + id.name +
                                    "' failed its 20-digit verification");
    }
    for (const AlgebraicTransformation& t : c.transformations) {
        if (!verify_series_identity(t, 12))
            throw VerificationError(
                "catalog transformation '" + t.name +
                "' does not satisfy its series identity through order 12");
    }
}

Catalog catalog_load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open catalog file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    Catalog c = catalog_parse(buf.str());
    catalog_verify(c);
    return c;
}

const Catalog& builtin_catalog() {
    static const Catalog cat = [] {
        Catalog c = catalog_parse(builtin_catalog_text());
        catalog_verify(c);
        return c;
    }();
    return cat;
}

} // namespace hyperpi
