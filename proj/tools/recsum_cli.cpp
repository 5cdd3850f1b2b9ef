// recsum: command-line front end for the sum-proportionality library.
//
// Subcommands:
//   trick     run one concrete instance: terms, sum, S_n = A * x_m, verdict
//   verify    certify an identity family (exactly where possible)
//   discover  exhaustive exact search for identities at given (a, b, n)
//   table     the b = 1 catalogue: p, rho, a, and the (m, A) formulas
//   minpoly   minimal polynomial of a = rho - 1/rho (closed form vs oracle)
//   roots     root data for r^{p+1} - r^p - r - 1
//   polys     members of the T~/U~/F/L polynomial families
//
// Exit codes: 0 success, 1 verification failed, 2 usage error.
// All output is deterministic; --json emits a machine-readable document
// with schema {"schema_version":"1","command":...,"inputs":...,"results":...}.
// Potentially large integers and exact rationals always appear as decimal
// strings in JSON; structural indices (n, m, p, q, degrees) are numbers.

#include <recsum/algebraic.hpp>
#include <recsum/families.hpp>
#include <recsum/identities.hpp>
#include <recsum/matrix.hpp>
#include <recsum/polynomial.hpp>
#include <recsum/sequences.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace recsum;

namespace {

// ---------- formatting helpers ----------

std::string int_str(const ExactInt& z) { return z.str(); }

std::string rat_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string fmt(double v, const char* spec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

// "c0*x0 + c1*x1" with tidy signs, for constant coefficients.
std::string combo_str(const Rational& c0, const Rational& c1) {
    std::string out = rat_str(c0) + "*x0";
    if (c1 < 0) return out + " - " + rat_str(Rational(-c1)) + "*x1";
    return out + " + " + rat_str(c1) + "*x1";
}

// "(p0)*x0 + (p1)*x1" for polynomial coefficients.
std::string combo_str(const SymbolicPair& s, const std::string& var) {
    return "(" + s.coeff_x0.str(var) + ")*x0 + (" + s.coeff_x1.str(var) + ")*x1";
}

json coeff_array(const UniPoly& p) {
    json arr = json::array();
    for (const Rational& c : p.coefficients()) arr.push_back(rat_str(c));
    return arr;
}

json make_doc(const std::string& command) {
    json doc;
    doc["schema_version"] = "1";
    doc["command"] = command;
    doc["inputs"] = json::object();
    doc["results"] = json::object();
    return doc;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

[[noreturn]] void usage_error(const std::string& msg) {
    throw CLI::ValidationError("recsum", msg);
}

// ---------- exact input parsing ----------

bool valid_int_token(const std::string& s) {
    std::size_t i = (s.size() > 0 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

ExactInt parse_exact_int(const std::string& s, const std::string& what) {
    if (!valid_int_token(s)) usage_error(what + ": expected an integer, got '" + s + "'");
    return ExactInt(s);
}

Rational parse_rational(const std::string& s, const std::string& what) {
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_exact_int(s, what));
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int_token(num) || !valid_int_token(den))
        usage_error(what + ": expected INT or INT/INT, got '" + s + "'");
    ExactInt d(den);
    if (d == 0) usage_error(what + ": zero denominator in '" + s + "'");
    return make_rational(ExactInt(num), d);
}

// ---------- trick ----------

struct TrickOpts {
    std::string x0, x1, a = "1", b = "1";
    int n = 0;
    bool as_json = false;
};

int cmd_trick(const TrickOpts& o) {
    const ExactInt x0 = parse_exact_int(o.x0, "--x0");
    const ExactInt x1 = parse_exact_int(o.x1, "--x1");
    const ExactInt a = parse_exact_int(o.a, "--a");
    const ExactInt b = parse_exact_int(o.b, "--b");
    if (o.n < 1) usage_error("--n must be positive");

    long long m = 0;
    ExactInt big_a;
    std::string route;
    if (b == -1) {
        if (o.n % 2 == 0)
            usage_error("for b=-1 the identity requires odd n");
        const auto id = cheb_identity<ExactInt>(o.n, a);
        m = id.m;
        big_a = id.A;
        route = "cheb";
    } else if (b == 1 && a == 1) {
        if (o.n % 4 != 2)
            usage_error("for a=1, b=1 the identity requires n == 2 (mod 4)");
        const auto id = fibo_identity(o.n);
        m = id.m;
        big_a = id.A;
        route = "fibo";
    } else if (b == 1 && a == -1) {
        if (o.n % 4 != 2 || o.n < 6)
            usage_error("for a=-1, b=1 the identity requires n == 2 (mod 4) and n >= 6");
        const auto id = neg_fibo_identity(o.n);
        m = id.m;
        big_a = id.A;
        route = "negfibo";
    } else if (b == 1 && a == 2) {
        if (o.n % 4 != 0 || o.n < 4)
            usage_error("for a=2, b=1 the identity requires n == 0 (mod 4) and n >= 4");
        m = o.n / 2;
        const Recurrence<ExactInt> u{2, 1, 0, 1};
        big_a = 2 * term(u, m);
        route = "pell";
    } else {
        usage_error("no built-in identity for a=" + int_str(a) + ", b=" + int_str(b) +
                    "; supported: (a, 1) with a in {1, -1, 2}, or any integer a with b=-1");
    }

    const Recurrence<ExactInt> run{a, b, x0, x1};
    const std::vector<ExactInt> xs = terms(run, o.n);
    const ExactInt sum = prefix_sum(run, o.n);
    const ExactInt xm = term(run, m);
    const ExactInt predicted = big_a * xm;
    const bool ok = (sum == predicted);
    const std::string verdict = ok ? "VERIFIED" : "FAILED";

    if (o.as_json) {
        json doc = make_doc("trick");
        doc["inputs"] = {{"x0", int_str(x0)}, {"x1", int_str(x1)}, {"n", o.n},
                         {"a", int_str(a)},   {"b", int_str(b)}};
        json& r = doc["results"];
        r["route"] = route;
        json arr = json::array();
        for (const ExactInt& t : xs) arr.push_back(int_str(t));
        r["terms"] = arr;
        r["sum"] = int_str(sum);
        r["m"] = m;
        r["A"] = int_str(big_a);
        r["x_m"] = int_str(xm);
        r["predicted"] = int_str(predicted);
        r["verdict"] = verdict;
        emit(doc);
    } else {
        std::cout << "rule: x[t+1] = " << int_str(a) << "*x[t] + " << int_str(b)
                  << "*x[t-1]   (route: " << route << ")\n";
        std::cout << "terms (n=" << o.n << "):";
        for (const ExactInt& t : xs) std::cout << ' ' << int_str(t);
        std::cout << "\n";
        std::cout << "S_" << o.n << " = " << int_str(sum) << "\n";
        std::cout << "identity: S_n = A * x_m with m = " << m << ", A = " << int_str(big_a)
                  << "\n";
        std::cout << "x_" << m << " = " << int_str(xm) << "\n";
        std::cout << "A * x_" << m << " = " << int_str(predicted) << "\n";
        std::cout << "verdict: " << verdict << "\n";
    }
    return ok ? 0 : 1;
}

// ---------- verify ----------

struct VerifyOpts {
    std::string family;
    int n = 0;
    std::string a;  // cheb only
    int p = 0;      // fibpoly only
    bool has_a = false, has_p = false, as_json = false;
};

int verify_integer_family(const VerifyOpts& o, bool negated) {
    const long long aa = negated ? -1 : 1;
    ProportionalityIdentity<ExactInt> id =
        negated ? neg_fibo_identity(o.n) : fibo_identity(o.n);
    const bool ok = verify_identity<ExactInt>(ExactInt(aa), ExactInt(1), o.n, id.m, id.A);

    const SymbolicPair s = symbolic_prefix_sum(UniPoly(aa), UniPoly(1), o.n);
    const SymbolicPair t = symbolic_term(UniPoly(aa), UniPoly(1), id.m);
    const std::string verdict = ok ? "VERIFIED" : "FAILED";

    if (o.as_json) {
        json doc = make_doc("verify");
        doc["inputs"] = {{"family", o.family}, {"n", o.n}};
        json& r = doc["results"];
        r["a"] = std::to_string(aa);
        r["b"] = "1";
        r["m"] = id.m;
        r["A"] = int_str(id.A);
        r["sum"] = {{"x0", rat_str(s.coeff_x0[0])}, {"x1", rat_str(s.coeff_x1[0])}};
        r["target"] = {{"x0", rat_str(t.coeff_x0[0])}, {"x1", rat_str(t.coeff_x1[0])}};
        r["verdict"] = verdict;
        emit(doc);
    } else {
        std::cout << "family: " << o.family << " (a=" << aa << ", b=1)\n";
        std::cout << "n = " << o.n << ", m = " << id.m << ", A = " << int_str(id.A) << "\n";
        std::cout << "S_" << o.n << " = " << combo_str(s.coeff_x0[0], s.coeff_x1[0]) << "\n";
        std::cout << "x_" << id.m << " = " << combo_str(t.coeff_x0[0], t.coeff_x1[0]) << "\n";
        std::cout << "verdict: " << verdict << " (exact, all initial values)\n";
    }
    return ok ? 0 : 1;
}

int verify_cheb(const VerifyOpts& o) {
    if (o.n % 2 == 0) usage_error("--family cheb requires odd n");
    const UniPoly var = UniPoly::variable();
    const UniPoly a_explicit = cheb_identity_explicit_A(o.n);

    if (!o.has_a) {
        // Fully symbolic: coefficients live in Z[a].
        const auto id = cheb_identity<UniPoly>(o.n, var);
        const bool explicit_ok = (id.A == a_explicit);
        const bool ok =
            explicit_ok && verify_identity<UniPoly>(var, UniPoly(-1), o.n, id.m, id.A);
        const SymbolicPair s = symbolic_prefix_sum(var, UniPoly(-1), o.n);
        const SymbolicPair t = symbolic_term(var, UniPoly(-1), id.m);
        const std::string verdict = ok ? "VERIFIED" : "FAILED";

        if (o.as_json) {
            json doc = make_doc("verify");
            doc["inputs"] = {{"family", o.family}, {"n", o.n}};
            json& r = doc["results"];
            r["b"] = "-1";
            r["m"] = id.m;
            r["A"] = id.A.str("a");
            r["A_coefficients"] = coeff_array(id.A);
            r["explicit_A_agrees"] = explicit_ok;
            r["sum"] = {{"x0", coeff_array(s.coeff_x0)}, {"x1", coeff_array(s.coeff_x1)}};
            r["target"] = {{"x0", coeff_array(t.coeff_x0)}, {"x1", coeff_array(t.coeff_x1)}};
            r["verdict"] = verdict;
            emit(doc);
        } else {
            std::cout << "family: cheb (b=-1, a symbolic)\n";
            std::cout << "n = " << o.n << ", m = " << id.m << "\n";
            std::cout << "A = " << id.A.str("a") << "\n";
            std::cout << "explicit binomial form of A agrees: " << (explicit_ok ? "yes" : "NO")
                      << "\n";
            std::cout << "S_" << o.n << " = " << combo_str(s, "a") << "\n";
            std::cout << "A*x_" << id.m << " = "
                      << combo_str(SymbolicPair{id.A * t.coeff_x0, id.A * t.coeff_x1}, "a")
                      << "\n";
            std::cout << "verdict: " << verdict << " (exact polynomial identity)\n";
        }
        return ok ? 0 : 1;
    }

    const Rational a = parse_rational(o.a, "--a");
    const auto id = cheb_identity<Rational>(o.n, a);
    const bool explicit_ok = (a_explicit.eval(a) == id.A);
    const bool ok =
        explicit_ok && verify_identity<Rational>(a, Rational(-1), o.n, id.m, id.A);
    const std::string verdict = ok ? "VERIFIED" : "FAILED";

    if (o.as_json) {
        json doc = make_doc("verify");
        doc["inputs"] = {{"family", o.family}, {"n", o.n}, {"a", rat_str(a)}};
        json& r = doc["results"];
        r["b"] = "-1";
        r["m"] = id.m;
        r["A"] = rat_str(id.A);
        r["explicit_A_agrees"] = explicit_ok;
        r["verdict"] = verdict;
        emit(doc);
    } else {
        std::cout << "family: cheb (b=-1, a = " << rat_str(a) << ")\n";
        std::cout << "n = " << o.n << ", m = " << id.m << ", A = " << rat_str(id.A) << "\n";
        std::cout << "explicit binomial form of A agrees: " << (explicit_ok ? "yes" : "NO")
                  << "\n";
        std::cout << "verdict: " << verdict << " (exact, all initial values)\n";
    }
    return ok ? 0 : 1;
}

int verify_fibpoly(const VerifyOpts& o) {
    if (!o.has_p) usage_error("--family fibpoly requires --p");
    const RootResult root = find_rho(o.p);
    const FibPolyIdentity id = fibpoly_identity(o.p, o.n, root.rho);

    const double rel = 1e-8;
    const auto close = [rel](double x, double y) {
        return std::abs(x - y) <= rel * std::max(1.0, std::max(std::abs(x), std::abs(y)));
    };
    const bool ways_agree =
        close(id.A_usum, id.A_product) && close(id.A_usum, id.A_polyform);
    const bool basis_ok =
        verify_identity_float(id.a, 1.0, 1.0, 0.0, o.n, id.m, id.A_usum, rel) &&
        verify_identity_float(id.a, 1.0, 0.0, 1.0, o.n, id.m, id.A_usum, rel);
    const bool ok = ways_agree && basis_ok;
    const std::string verdict = ok ? "VERIFIED" : "FAILED";

    if (o.as_json) {
        json doc = make_doc("verify");
        doc["inputs"] = {{"family", o.family}, {"n", o.n}, {"p", o.p}};
        json& r = doc["results"];
        r["rho"] = id.rho;
        r["a"] = id.a;
        r["m"] = id.m;
        r["A_usum"] = id.A_usum;
        r["A_product"] = id.A_product;
        r["A_polyform"] = id.A_polyform;
        r["ways_agree"] = ways_agree;
        r["basis_check"] = basis_ok;
        r["verdict"] = verdict;
        emit(doc);
    } else {
        std::cout << "family: fibpoly (b=1, p=" << o.p << ")\n";
        std::cout << "rho = " << fmt(id.rho, "%.15g") << ", a = rho - 1/rho = "
                  << fmt(id.a, "%.15g") << "\n";
        std::cout << "n = " << o.n << ", m = " << id.m << "\n";
        std::cout << "A (u-sum)          = " << fmt(id.A_usum, "%.15g") << "\n";
        std::cout << "A (u*v product)    = " << fmt(id.A_product, "%.15g") << "\n";
        std::cout << "A (poly families)  = " << fmt(id.A_polyform, "%.15g") << "\n";
        std::cout << "three forms agree (rel 1e-8): " << (ways_agree ? "yes" : "NO") << "\n";
        std::cout << "basis check S_n = A*x_m (rel 1e-8): " << (basis_ok ? "yes" : "NO")
                  << "\n";
        std::cout << "verdict: " << verdict << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_verify(const VerifyOpts& o) {
    if (o.n < 1) usage_error("--n must be positive");
    if (o.has_a && o.family != "cheb") usage_error("--a is only valid with --family cheb");
    if (o.has_p && o.family != "fibpoly")
        usage_error("--p is only valid with --family fibpoly");

    if (o.family == "fibo") {
        if (o.n % 4 != 2) usage_error("--family fibo requires n == 2 (mod 4)");
        return verify_integer_family(o, false);
    }
    if (o.family == "negfibo") {
        if (o.n % 4 != 2 || o.n < 6)
            usage_error("--family negfibo requires n == 2 (mod 4) and n >= 6");
        return verify_integer_family(o, true);
    }
    if (o.family == "cheb") return verify_cheb(o);
    if (o.family == "fibpoly") return verify_fibpoly(o);
    usage_error("unknown family '" + o.family + "' (expected fibo|negfibo|cheb|fibpoly)");
}

// ---------- discover ----------

struct DiscoverOpts {
    std::string a, b;
    int n = 0;
    long long m_max = 0;
    bool as_json = false;
};

int cmd_discover(const DiscoverOpts& o) {
    const Rational a = parse_rational(o.a, "--a");
    const Rational b = parse_rational(o.b, "--b");
    if (o.n < 1) usage_error("--n must be positive");
    if (o.m_max < 0) usage_error("--m-max must be nonnegative");

    const DiscoveryReport rep = discover(a, b, o.n, o.m_max);

    if (o.as_json) {
        json doc = make_doc("discover");
        doc["inputs"] = {{"a", rat_str(a)}, {"b", rat_str(b)}, {"n", o.n},
                         {"m_max", o.m_max}};
        json& r = doc["results"];
        r["exact"] = rep.exact;
        json hits = json::array();
        for (const DiscoveryHit& h : rep.hits)
            hits.push_back({{"m", h.m}, {"A", rat_str(h.A)},
                            {"unconstrained", h.unconstrained}});
        r["hits"] = hits;
        r["hit_count"] = rep.hits.size();
        emit(doc);
    } else {
        std::cout << "search: a=" << rat_str(a) << " b=" << rat_str(b) << " n=" << o.n
                  << " m_max=" << o.m_max << " (exact rational arithmetic)\n";
        if (rep.hits.empty()) {
            std::cout << "no proportionality identity found\n";
        } else {
            for (const DiscoveryHit& h : rep.hits) {
                if (h.unconstrained)
                    std::cout << "hit: m=" << h.m
                              << " A unconstrained (x_m = 0 for all initial values, S_n = 0)\n";
                else
                    std::cout << "hit: m=" << h.m << " A=" << rat_str(h.A) << "\n";
            }
        }
    }
    return 0;
}

// ---------- table ----------

struct TableOpts {
    int p_max = 0;
    bool as_json = false;
};

std::string table_m_formula(int p) {
    if (p == 1) return "n/2";
    return "n/2+" + std::to_string((p - 1) / 2);
}

std::string table_a_formula(int p) {
    const int half = (p - 1) / 2;
    const bool lucas_prefactor = (p % 4 == 1);  // pairs with u(n/2)
    const UniPoly pre = family_by_recurrence(
        lucas_prefactor ? PolyKind::LucasPoly : PolyKind::FibPoly, half);
    const std::string tail = lucas_prefactor ? "u(n/2)" : "v(n/2)";
    if (pre == UniPoly(1)) return tail;
    if (pre.degree() == 0) return rat_str(pre[0]) + "*" + tail;
    return "(" + pre.str("a") + ")*" + tail;
}

int cmd_table(const TableOpts& o) {
    if (o.p_max < 1 || o.p_max % 2 == 0) usage_error("--p-max must be odd and positive");
    if (o.p_max > 99) usage_error("--p-max must be at most 99");

    if (o.as_json) {
        json doc = make_doc("table");
        doc["inputs"] = {{"p_max", o.p_max}};
        json rows = json::array();
        for (int p = 1; p <= o.p_max; p += 2) {
            const RootResult root = find_rho(p);
            rows.push_back({{"p", p}, {"rho", root.rho}, {"a", root.a},
                            {"m_formula", table_m_formula(p)},
                            {"A_formula", table_a_formula(p)}});
        }
        doc["results"]["rows"] = rows;
        emit(doc);
    } else {
        std::printf("%3s  %7s  %7s  %-8s  %s\n", "p", "rho", "a", "m", "A");
        for (int p = 1; p <= o.p_max; p += 2) {
            const RootResult root = find_rho(p);
            std::printf("%3d  %7.3f  %7.3f  %-8s  %s\n", p, root.rho, root.a,
                        table_m_formula(p).c_str(), table_a_formula(p).c_str());
        }
    }
    return 0;
}

// ---------- minpoly ----------

struct MinPolyOpts {
    int p = 0;
    std::string mode = "both";
    bool as_json = false;
};

int cmd_minpoly(const MinPolyOpts& o) {
    if (o.p % 2 == 0) usage_error("--p must be odd");
    if (o.p < 3) usage_error("--p must be at least 3 (p=1 gives the rational a=2)");
    if (o.mode != "closed" && o.mode != "oracle" && o.mode != "both")
        usage_error("--mode must be closed, oracle, or both");

    const bool want_closed = (o.mode != "oracle");
    const bool want_oracle = (o.mode != "closed");
    MinPoly closed{}, oracle{};
    if (want_closed) closed = minpoly_closed(o.p);
    if (want_oracle) oracle = minpoly_oracle(o.p);
    const MinPoly& any = want_closed ? closed : oracle;
    const std::string case_name = (any.kind == MinPolyCase::Plus) ? "plus" : "minus";

    bool match = true;
    double residual = 0.0, a_val = 0.0;
    if (want_closed && want_oracle) {
        match = (closed.poly == oracle.poly);
        const RootResult root = find_rho(o.p);
        a_val = root.a;
        residual = std::abs(any.poly.eval(a_val));
    }

    if (o.as_json) {
        json doc = make_doc("minpoly");
        doc["inputs"] = {{"p", o.p}, {"mode", o.mode}};
        json& r = doc["results"];
        r["q"] = any.q;
        r["case"] = case_name;
        r["degree"] = any.poly.degree();
        if (want_closed)
            r["closed"] = {{"display", closed.poly.str("a")},
                           {"coefficients", coeff_array(closed.poly)}};
        if (want_oracle)
            r["oracle"] = {{"display", oracle.poly.str("a")},
                           {"coefficients", coeff_array(oracle.poly)}};
        if (want_closed && want_oracle) {
            r["match"] = match;
            r["a"] = a_val;
            r["residual"] = residual;
        }
        emit(doc);
    } else {
        std::cout << "p = " << o.p << " (q = " << any.q << ", case " << case_name
                  << ", degree " << any.poly.degree() << ")\n";
        if (want_closed) std::cout << "closed: " << closed.poly.str("a") << "\n";
        if (want_oracle) std::cout << "oracle: " << oracle.poly.str("a") << "\n";
        if (want_closed && want_oracle) {
            std::cout << "match: " << (match ? "yes" : "NO") << "\n";
            std::cout << "residual |P(a)| = " << fmt(residual, "%.3g") << " at a = "
                      << fmt(a_val, "%.15g") << "\n";
        }
    }
    return match ? 0 : 1;
}

// ---------- roots ----------

struct RootsOpts {
    int p = 0;
    bool as_json = false;
};

int cmd_roots(const RootsOpts& o) {
    if (o.p < 1 || o.p % 2 == 0) usage_error("--p must be odd and positive");
    const RootResult root = find_rho(o.p);
    const std::vector<double> all = root_count_scan(o.p);
    const bool two = (all.size() == 2);
    const bool mirror = two && std::abs(all[0] + 1.0 / root.rho) <= 1e-9;

    if (o.as_json) {
        json doc = make_doc("roots");
        doc["inputs"] = {{"p", o.p}};
        json& r = doc["results"];
        r["rho"] = root.rho;
        r["a"] = root.a;
        r["residual"] = root.residual;
        json arr = json::array();
        for (double x : all) arr.push_back(x);
        r["real_roots_in_scan"] = arr;
        r["root_count"] = all.size();
        r["second_root_is_minus_inverse"] = mirror;
        emit(doc);
    } else {
        std::cout << "p = " << o.p << "\n";
        std::cout << "rho = " << fmt(root.rho, "%.15g") << "\n";
        std::cout << "a = rho - 1/rho = " << fmt(root.a, "%.15g") << "\n";
        std::cout << "residual |f(rho)| = " << fmt(root.residual, "%.3g") << "\n";
        std::cout << "real roots in [-3, 3]: " << all.size() << " (";
        for (std::size_t i = 0; i < all.size(); ++i)
            std::cout << (i ? ", " : "") << fmt(all[i], "%.9f");
        std::cout << ")\n";
        std::cout << "second real root equals -1/rho: " << (mirror ? "yes" : "NO") << "\n";
    }
    return (two && mirror) ? 0 : 1;
}

// ---------- polys ----------

struct PolysOpts {
    std::string kind;
    int n = -1;
    bool as_json = false;
};

int cmd_polys(const PolysOpts& o) {
    PolyKind kind;
    std::string long_name, symbol;
    if (o.kind == "T") { kind = PolyKind::ChebTildeT; long_name = "ChebTildeT"; symbol = "T~"; }
    else if (o.kind == "U") { kind = PolyKind::ChebTildeU; long_name = "ChebTildeU"; symbol = "U~"; }
    else if (o.kind == "F") { kind = PolyKind::FibPoly; long_name = "FibPoly"; symbol = "F"; }
    else if (o.kind == "L") { kind = PolyKind::LucasPoly; long_name = "LucasPoly"; symbol = "L"; }
    else usage_error("--kind must be one of T, U, F, L");
    if (o.n < 0) usage_error("--n must be nonnegative");

    const UniPoly poly = family_by_recurrence(kind, o.n);
    const bool has_explicit = (kind != PolyKind::ChebTildeT);
    bool explicit_agrees = false;
    if (has_explicit) explicit_agrees = (family_explicit(kind, o.n) == poly);

    if (o.as_json) {
        json doc = make_doc("polys");
        doc["inputs"] = {{"kind", o.kind}, {"n", o.n}};
        json& r = doc["results"];
        r["family"] = long_name;
        r["degree"] = poly.degree();
        r["display"] = poly.str("x");
        r["coefficients"] = coeff_array(poly);
        if (has_explicit) r["explicit_agrees"] = explicit_agrees;
        else r["explicit_agrees"] = nullptr;
        emit(doc);
    } else {
        std::cout << "family: " << long_name << "\n";
        std::cout << symbol << "_" << o.n << "(x) = " << poly.str("x") << "\n";
        std::cout << "degree: " << poly.degree() << "\n";
        if (has_explicit)
            std::cout << "explicit expansion agrees: " << (explicit_agrees ? "yes" : "NO")
                      << "\n";
        else
            std::cout << "explicit expansion: not available for this family\n";
    }
    if (has_explicit && !explicit_agrees) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sum-proportionality identities for second-order linear recurrences"};
    app.require_subcommand(1);

    TrickOpts trick;
    CLI::App* c_trick = app.add_subcommand(
        "trick", "run one concrete instance and check S_n = A * x_m");
    c_trick->add_option("--x0", trick.x0, "first initial term (integer)")->required();
    c_trick->add_option("--x1", trick.x1, "second initial term (integer)")->required();
    c_trick->add_option("--n", trick.n, "number of terms summed")->required();
    c_trick->add_option("--a", trick.a, "recurrence coefficient a (default 1)");
    c_trick->add_option("--b", trick.b, "recurrence coefficient b (default 1)");
    c_trick->add_flag("--json", trick.as_json, "emit JSON");

    VerifyOpts verify;
    CLI::App* c_verify = app.add_subcommand("verify", "certify an identity family");
    c_verify->add_option("--family", verify.family, "fibo|negfibo|cheb|fibpoly")->required();
    c_verify->add_option("--n", verify.n, "number of terms summed")->required();
    CLI::Option* opt_a =
        c_verify->add_option("--a", verify.a, "rational a (cheb only; symbolic if omitted)");
    CLI::Option* opt_p = c_verify->add_option("--p", verify.p, "odd p (fibpoly only)");
    c_verify->add_flag("--json", verify.as_json, "emit JSON");

    DiscoverOpts discover_o;
    CLI::App* c_discover =
        app.add_subcommand("discover", "exact search for S_n = A * x_m identities");
    c_discover->add_option("--a", discover_o.a, "rational a (INT or INT/INT)")->required();
    c_discover->add_option("--b", discover_o.b, "rational b (INT or INT/INT)")->required();
    c_discover->add_option("--n", discover_o.n, "number of terms summed")->required();
    c_discover->add_option("--m-max", discover_o.m_max, "largest m to scan")->required();
    c_discover->add_flag("--json", discover_o.as_json, "emit JSON");

    TableOpts table;
    CLI::App* c_table =
        app.add_subcommand("table", "catalogue of b=1 identities for odd p");
    c_table->add_option("--p-max", table.p_max, "largest (odd) p to list")->required();
    c_table->add_flag("--json", table.as_json, "emit JSON");

    MinPolyOpts minpoly;
    CLI::App* c_minpoly =
        app.add_subcommand("minpoly", "minimal polynomial of a = rho - 1/rho");
    c_minpoly->add_option("--p", minpoly.p, "odd p >= 3")->required();
    c_minpoly->add_option("--mode", minpoly.mode, "closed|oracle|both (default both)");
    c_minpoly->add_flag("--json", minpoly.as_json, "emit JSON");

    RootsOpts roots;
    CLI::App* c_roots =
        app.add_subcommand("roots", "root data for r^{p+1} - r^p - r - 1");
    c_roots->add_option("--p", roots.p, "odd p")->required();
    c_roots->add_flag("--json", roots.as_json, "emit JSON");

    PolysOpts polys;
    CLI::App* c_polys = app.add_subcommand("polys", "polynomial family members");
    c_polys->add_option("--kind", polys.kind, "T|U|F|L")->required();
    c_polys->add_option("--n", polys.n, "index within the family")->required();
    c_polys->add_flag("--json", polys.as_json, "emit JSON");

    try {
        app.parse(argc, argv);

        verify.has_a = (opt_a->count() > 0);
        verify.has_p = (opt_p->count() > 0);

        if (app.got_subcommand(c_trick)) return cmd_trick(trick);
        if (app.got_subcommand(c_verify)) return cmd_verify(verify);
        if (app.got_subcommand(c_discover)) return cmd_discover(discover_o);
        if (app.got_subcommand(c_table)) return cmd_table(table);
        if (app.got_subcommand(c_minpoly)) return cmd_minpoly(minpoly);
        if (app.got_subcommand(c_roots)) return cmd_roots(roots);
        if (app.got_subcommand(c_polys)) return cmd_polys(polys);
        return 2;  // unreachable with require_subcommand(1)
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
