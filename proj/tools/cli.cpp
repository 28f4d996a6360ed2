#include "cli.hpp"

#include "qbounds/additive_code.hpp"
#include "qbounds/asymptotics.hpp"
#include "qbounds/bounds.hpp"
#include "qbounds/errors.hpp"
#include "qbounds/selftest.hpp"
#include "qbounds/standard_form.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#ifndef QBOUNDS_FIXTURE_DIR
#define QBOUNDS_FIXTURE_DIR "fixtures"
#endif

namespace qbounds::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";
constexpr unsigned kMaxTableLength = 30;

struct Common {
    std::string format;
    bool meta = false;
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format) {
    c.format = default_format;
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--meta", c.meta, "add provenance headers");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string joined(const std::vector<std::string>& args) {
    std::string s;
    for (std::size_t i = 1; i < args.size(); ++i) s += (i > 1 ? " " : "") + args[i];
    return s;
}

void csv_meta(std::ostream& out, const Common& c, const std::vector<std::string>& args) {
    if (!c.meta) return;
    out << "# qbounds " << kVersion << "\n# command: " << joined(args) << "\n";
}

void json_meta(Json& j, const Common& c, const std::vector<std::string>& args) {
    if (!c.meta) return;
    j["meta"] = {{"tool", "qbounds"}, {"version", kVersion}, {"command", joined(args)}};
}

template <class T>
Json integers(const std::vector<T>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

std::string spaced(const std::vector<Integer>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
    return s;
}

std::string fixed(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10f", v);
    return buf;
}

Json verdict_json(const BoundVerdict& v) {
    Json j;
    j["bound"] = to_string(v.name);
    j["applicable"] = v.applicable;
    j["value_on_2nK"] = v.value_on_2nK ? Json(to_string(*v.value_on_2nK)) : Json(nullptr);
    j["K_max"] = v.value_on_2nK ? Json(to_string(Rational(*v.value_on_2nK / pow2(v.n)))) : Json(nullptr);
    j["k_max"] = v.k_max ? Json(*v.k_max) : Json(nullptr);
    j["passes"] = v.passes ? Json(*v.passes) : Json(nullptr);
    j["reason"] = v.reason;
    Json details = Json::object();
    for (const auto& [key, value] : v.details) details[key] = value;
    j["details"] = details;
    return j;
}

std::string opt_string(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

// --- check -----------------------------------------------------------------

struct CheckArgs {
    Common common;
    unsigned n = 0;
    std::optional<unsigned> k;
    std::string K;
    unsigned d = 0;
    std::optional<unsigned> k0, k1;
    std::vector<std::string> bounds;
};

int cmd_check(const CheckArgs& a, const std::vector<std::string>& args, std::ostream& out) {
    if (a.n < 1) throw ParameterError("n must be at least 1");
    if (a.d < 1 || a.d > a.n) throw ParameterError("need 1 <= d <= n");
    if (!a.k && a.K.empty()) throw ParameterError("one of --k or --K is required");
    if (a.k0.has_value() != a.k1.has_value()) throw ParameterError("--k0 and --k1 go together");
    Rational K = a.k ? pow2(*a.k) : parse_rational(a.K);
    if (K <= 0) throw ParameterError("K must be positive");
    if (a.k && *a.k > a.n) throw ParameterError("need k <= n");

    std::optional<unsigned> k = a.k;
    if (!k) {
        std::int64_t e = floor_log2(K);
        if (e >= 0 && pow2(e) == K) k = static_cast<unsigned>(e);
    }

    std::vector<std::string> names = a.bounds;
    const bool explicit_list = !names.empty();
    if (!explicit_list) {
        names = {"singleton", "hamming", "levenshtein", "lp"};
        if (a.k0) names.push_back("prop2");
    }

    std::vector<BoundVerdict> verdicts;
    for (const auto& name : names) {
        BoundName b = parse_bound_name(name);
        BoundVerdict v;
        switch (b) {
            case BoundName::singleton: v = singleton_bound(a.n, a.d); break;
            case BoundName::hamming: v = hamming_bound(a.n, a.d); break;
            case BoundName::levenshtein: v = levenshtein_bound(a.n, a.d); break;
            case BoundName::lp:
                if (a.n > kMaxLpLength && !explicit_list) {
                    v.name = b;
                    v.n = a.n;
                    v.d = a.d;
                    v.applicable = false;
                    v.reason = "n exceeds the LP size cap";
                } else {
                    v = lp_bound(a.n, a.d);
                    v.passes = lp_feasible(a.n, K, a.d).feasible;
                }
                break;
            case BoundName::prop2:
                if (!a.k0) throw ParameterError("prop2 needs --k0 and --k1");
                if (!k) throw ParameterError("prop2 needs K to be a power of two");
                v = prop2_check(a.n, *k, *a.k0, *a.k1, a.d);
                break;
            default: throw ParameterError("bound '" + name + "' is not available in check");
        }
        if (v.value_on_2nK && !v.passes) v.passes = v.admits(K);
        verdicts.push_back(std::move(v));
    }

    const BoundVerdict* strongest = nullptr;
    bool all_pass = true;
    for (const auto& v : verdicts) {
        if (v.passes && !*v.passes) all_pass = false;
        if (v.value_on_2nK && (!strongest || *v.value_on_2nK < *strongest->value_on_2nK)) strongest = &v;
    }

    if (a.common.format == "csv") {
        csv_meta(out, a.common, args);
        out << "bound,applicable,value_on_2nK,K_max,k_max,passes,reason\n";
        for (const auto& v : verdicts) {
            out << to_string(v.name) << ',' << (v.applicable ? "true" : "false") << ','
                << (v.value_on_2nK ? to_string(*v.value_on_2nK) : "") << ','
                << (v.value_on_2nK ? to_string(Rational(*v.value_on_2nK / pow2(a.n))) : "") << ','
                << (v.k_max ? std::to_string(*v.k_max) : "") << ',' << opt_string(v.passes) << ','
                << csv_field(v.reason) << "\n";
        }
        return kOk;
    }

    Json j;
    json_meta(j, a.common, args);
    j["n"] = a.n;
    j["k"] = k ? Json(*k) : Json(nullptr);
    j["K"] = to_string(K);
    j["d"] = a.d;
    Json vs = Json::array();
    for (const auto& v : verdicts) vs.push_back(verdict_json(v));
    j["verdicts"] = vs;
    if (strongest) {
        j["strongest"] = {{"bound", to_string(strongest->name)},
                          {"value_on_2nK", to_string(*strongest->value_on_2nK)},
                          {"k_max", *strongest->k_max}};
    } else {
        j["strongest"] = nullptr;
    }
    j["passes_all"] = all_pass;
    out << j.dump(2) << "\n";
    return kOk;
}

// --- table -----------------------------------------------------------------

struct TableArgs {
    Common common;
    unsigned n_max = 0;
    std::optional<unsigned> d_max;
    std::vector<std::string> bounds;
};

int cmd_table(const TableArgs& a, const std::vector<std::string>& args, std::ostream& out) {
    std::vector<BoundName> bounds;
    for (const auto& s : a.bounds)
        if (!s.empty()) bounds.push_back(parse_bound_name(s));
    if (bounds.empty()) throw ParameterError("--bounds must name at least one bound");
    for (auto b : bounds)
        if (b != BoundName::singleton && b != BoundName::hamming && b != BoundName::levenshtein && b != BoundName::lp)
            throw ParameterError("table supports singleton, hamming, levenshtein and lp");
    if (a.n_max < 1) throw ParameterError("--n-max must be at least 1");
    if (a.n_max > kMaxTableLength)
        throw CapacityError("--n-max exceeds " + std::to_string(kMaxTableLength) + " for polynomial bounds");
    for (auto b : bounds)
        if (b == BoundName::lp && a.n_max > kMaxLpLength)
            throw CapacityError("--n-max exceeds " + std::to_string(kMaxLpLength) + " when lp is requested");
    const unsigned d_max = a.d_max.value_or(a.n_max);

    struct Row {
        unsigned n, d;
        std::vector<std::optional<std::int64_t>> cells;
    };
    std::vector<Row> rows;
    for (unsigned n = 1; n <= a.n_max; ++n)
        for (unsigned d = 1; d <= std::min(n, d_max); ++d) {
            Row row{n, d, {}};
            for (auto b : bounds) {
                BoundVerdict v;
                switch (b) {
                    case BoundName::singleton: v = singleton_bound(n, d); break;
                    case BoundName::hamming: v = hamming_bound(n, d); break;
                    case BoundName::levenshtein: v = levenshtein_bound(n, d); break;
                    default: v = lp_bound(n, d); break;
                }
                if (v.k_max)
                    row.cells.push_back(std::max<std::int64_t>(0, *v.k_max));
                else
                    row.cells.push_back(std::nullopt);
            }
            rows.push_back(std::move(row));
        }

    if (a.common.format == "json") {
        Json j;
        json_meta(j, a.common, args);
        Json names = Json::array();
        for (auto b : bounds) names.push_back(to_string(b));
        j["bounds"] = names;
        Json rs = Json::array();
        for (const auto& r : rows) {
            Json cells = Json::array();
            for (const auto& c : r.cells) cells.push_back(c ? Json(*c) : Json(nullptr));
            rs.push_back({{"n", r.n}, {"d", r.d}, {"k_max", cells}});
        }
        j["rows"] = rs;
        out << j.dump(2) << "\n";
        return kOk;
    }
    csv_meta(out, a.common, args);
    out << "n,d";
    for (auto b : bounds) out << ',' << to_string(b);
    out << "\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.d;
        for (const auto& c : r.cells) out << ',' << (c ? std::to_string(*c) : "-");
        out << "\n";
    }
    return kOk;
}

// --- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
    Common common;
    std::string file;
};

std::string gf4_row(Word v, unsigned n) {
    std::string s;
    for (unsigned i = 0; i < n; ++i) s += gf4_char(symplectic::symbol(v, i));
    return s;
}

std::string bits(Word v, unsigned length) {
    std::string s;
    for (unsigned i = 0; i < length; ++i) s += (v >> i & 1) ? '1' : '0';
    return s;
}

int cmd_analyze(const AnalyzeArgs& a, const std::vector<std::string>& args, std::ostream& out) {
    std::ifstream in(a.file);
    if (!in) throw ParameterError("cannot open " + a.file);
    std::stringstream ss;
    ss << in.rdbuf();
    AdditiveCode C = parse_code(ss.str());
    QuantumParams p = quantum_distance(C);
    EnumeratorPair e = enumerators(C);
    StandardForm sf = standard_form(C);
    auto targets = realize_reduction_targets(C);
    auto s_code = binary_s_code(C);

    if (a.common.format == "csv") {
        csv_meta(out, a.common, args);
        out << "field,value\n";
        out << "n," << p.n << "\nk," << p.k << "\nK," << to_string(p.K) << "\nd," << p.d << "\n";
        out << "degenerate," << (p.degenerate ? "true" : "false") << "\n";
        out << "zero_dimension_convention," << (p.zero_dimension_convention ? "true" : "false") << "\n";
        out << "k0," << sf.gf4.k0 << "\nk1," << sf.gf4.k1 << "\n";
        out << "A," << spaced(e.A) << "\nB," << spaced(e.B) << "\n";
        out << "identity_verified,true\n";
        for (const auto& t : targets)
            out << "target," << csv_field(t.describe() + " d=" + std::to_string(*t.min_distance)) << "\n";
        if (s_code)
            out << "s_code," << s_code->code.length << " " << s_code->code.generators.size() << " "
                << s_code->min_distance << "\n";
        return kOk;
    }

    Json j;
    json_meta(j, a.common, args);
    j["n"] = p.n;
    j["k"] = p.k;
    j["K"] = to_string(p.K);
    j["d"] = p.d;
    j["degenerate"] = p.degenerate;
    j["zero_dimension_convention"] = p.zero_dimension_convention;
    j["k0"] = sf.gf4.k0;
    j["k1"] = sf.gf4.k1;
    j["A"] = integers(e.A);
    j["B"] = integers(e.B);
    j["identity"] = {{"scale", to_string(Rational(pow2(p.n) * Rational(p.K)))}, {"verified", true}};
    Json form;
    form["permutation"] = sf.gf4.permutation;
    Json rows = Json::array();
    for (Word r : sf.gf4.rows) rows.push_back(gf4_row(r, p.n));
    form["rows"] = rows;
    if (sf.binary) form["binary"] = {{"s", sf.binary->s}, {"k", sf.binary->k}, {"r", sf.binary->r}};
    j["standard_form"] = form;
    Json ts = Json::array();
    for (const auto& t : targets) {
        ts.push_back({{"kind", to_string(t.kind)},
                      {"restricted_length", t.restricted_length},
                      {"length", t.length},
                      {"dimension", t.dimension},
                      {"realized_dimension", *t.realized_dimension},
                      {"min_distance", *t.min_distance},
                      {"bounds_quantum_d", *t.min_distance >= p.d},
                      {"description", t.describe()}});
    }
    j["reduction_targets"] = ts;
    if (s_code) {
        Json gens = Json::array();
        for (Word g : s_code->code.generators) gens.push_back(bits(g, s_code->code.length));
        j["s_code"] = {{"length", s_code->code.length},
                       {"dimension", s_code->code.generators.size()},
                       {"min_distance", s_code->min_distance},
                       {"generators", gens}};
    } else {
        j["s_code"] = nullptr;
    }
    out << j.dump(2) << "\n";
    return kOk;
}

// --- lp --------------------------------------------------------------------

struct LpArgs {
    Common common;
    unsigned n = 0;
    std::string K;
    unsigned d = 0;
};

int cmd_lp(const LpArgs& a, const std::vector<std::string>& args, std::ostream& out) {
    Rational K = parse_rational(a.K);
    LpVerdict v = lp_feasible(a.n, K, a.d);
    LpMaximum m = lp_maximum(a.n, a.d);
    const Rational S = pow2(a.n) * K;

    Json j;
    json_meta(j, a.common, args);
    j["n"] = a.n;
    j["K"] = to_string(K);
    j["d"] = a.d;
    j["scale"] = to_string(S);
    j["feasible"] = v.feasible;
    j["critical_K"] = m.max_2nK ? Json(to_string(Rational(*m.max_2nK / pow2(a.n)))) : Json(nullptr);
    if (v.feasible) {
        auto A = macwilliams_transform(std::span<const Rational>(v.witness), a.n, 4, S);
        j["witness"] = {{"B", integers(v.witness)}, {"A", integers(A)}};
    } else {
        const auto& c = *v.certificate;
        auto P = krawtchouk_table(a.n);
        std::vector<Rational> values;
        for (unsigned i = 0; i <= a.n; ++i) {
            Rational s = 0;
            for (unsigned t = 0; t <= a.n; ++t) s += c.coeffs[t] * Rational(P[t][i]);
            values.push_back(s);
        }
        j["certificate"] = {{"coeffs", integers(c.coeffs)},
                            {"f_values", integers(values)},
                            {"scale_times_c0", to_string(Rational(S * c.coeffs[0]))}};
    }

    if (a.common.format == "csv") {
        csv_meta(out, a.common, args);
        out << "field,value\n";
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() == "meta") continue;
            if (it->is_object()) {
                for (auto jt = it->begin(); jt != it->end(); ++jt) {
                    std::string v;
                    for (const auto& x : *jt) v += (v.empty() ? "" : " ") + x.get<std::string>();
                    out << it.key() << '.' << jt.key() << ',' << v << "\n";
                }
            } else {
                out << it.key() << ',' << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
            }
        }
        return kOk;
    }
    out << j.dump(2) << "\n";
    return kOk;
}

// --- curves ----------------------------------------------------------------

struct CurvesArgs {
    Common common;
    std::string id;
    std::string kappa1 = "0";
    unsigned samples = 200;
    std::string classical;
    bool halved_mu = false;
};

double parse_real(const std::string& s) {
    if (s.find('/') != std::string::npos) return parse_rational(s).get_d();
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(s, &used);
    } catch (const std::logic_error&) {
        throw ParameterError("malformed number '" + s + "'");
    }
    if (used != s.size()) throw ParameterError("malformed number '" + s + "'");
    return v;
}

int cmd_curves(const CurvesArgs& a, const std::vector<std::string>& args, std::ostream& out) {
    CurveId id = parse_curve_id(a.id);
    CurveOptions o;
    o.samples = a.samples;
    o.kappa1 = parse_real(a.kappa1);
    o.halved_mu = a.halved_mu;
    if (!a.classical.empty()) {
        std::ifstream in(a.classical);
        if (!in) throw ParameterError("cannot open " + a.classical);
        o.classical = ClassicalBound::from_csv(in, a.classical);
    }
    Curve c = make_curve(id, o);

    if (a.common.format == "json") {
        Json j;
        json_meta(j, a.common, args);
        j["curve"] = to_string(c.id);
        j["notes"] = c.notes;
        j["terminal"] = {{"delta", c.terminal.delta}, {"rate", c.terminal.rate}};
        Json pts = Json::array();
        for (const auto& p : c.points) pts.push_back({p.delta, p.rate});
        j["points"] = pts;
        out << j.dump(2) << "\n";
        return kOk;
    }
    csv_meta(out, a.common, args);
    out << "# curve: " << to_string(c.id) << "\n";
    for (const auto& note : c.notes) out << "# " << note << "\n";
    out << "delta,rate\n";
    for (const auto& p : c.points) out << fixed(p.delta) << ',' << fixed(p.rate) << "\n";
    return kOk;
}

// --- selftest --------------------------------------------------------------

struct SelftestArgs {
    std::string fixtures = QBOUNDS_FIXTURE_DIR;
    std::uint64_t seed = 20240601;
};

int cmd_selftest(const SelftestArgs& a, std::ostream& out) {
    SelftestReport r = run_selftest(a.fixtures, a.seed);
    out << r.format();
    return r.ok() ? kOk : kSelftestFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact bounds on quantum code parameters"};
    app.name(args.empty() ? "qbounds" : args[0]);
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    CheckArgs check;
    auto* sc = app.add_subcommand("check", "evaluate every applicable bound for (n, K, d)");
    sc->add_option("--n", check.n, "code length")->required();
    auto* ko = sc->add_option("--k", check.k, "log2 of the code dimension");
    auto* Ko = sc->add_option("--K", check.K, "code dimension, integer or p/q");
    ko->excludes(Ko);
    sc->add_option("--d", check.d, "minimum distance")->required();
    sc->add_option("--k0", check.k0, "GF(4) pivots of the standard form");
    sc->add_option("--k1", check.k1, "single-symbol pivots of the standard form");
    sc->add_option("--bounds", check.bounds, "comma-separated bound names")->delimiter(',');
    add_common(sc, check.common, "json");

    TableArgs table;
    auto* st = app.add_subcommand("table", "k_max per (n, d) for a list of bounds");
    st->add_option("--n-max", table.n_max, "largest n")->required();
    st->add_option("--d-max", table.d_max, "largest d");
    st->add_option("--bounds", table.bounds, "comma-separated bound names")->delimiter(',')->required();
    add_common(st, table.common, "csv");

    AnalyzeArgs analyze;
    auto* sa = app.add_subcommand("analyze", "parameters, enumerators and reductions of a stabilizer code");
    sa->add_option("file", analyze.file, "code file")->required();
    add_common(sa, analyze.common, "json");

    LpArgs lp;
    auto* sl = app.add_subcommand("lp", "exact LP feasibility for a pure ((n, K, d)) code");
    sl->add_option("--n", lp.n, "code length")->required();
    sl->add_option("--K", lp.K, "code dimension, integer or p/q")->required();
    sl->add_option("--d", lp.d, "minimum distance")->required();
    add_common(sl, lp.common, "json");

    CurvesArgs curves;
    auto* sv = app.add_subcommand("curves", "asymptotic rate-distance curve data");
    sv->add_option("--id", curves.id, "A, B, C, D, E, hamming-degenerate or fig2")->required();
    sv->add_option("--kappa1", curves.kappa1, "k1/n for fig2");
    sv->add_option("--samples", curves.samples, "number of samples");
    sv->add_option("--classical-bound", curves.classical, "CSV file with header delta,rate");
    sv->add_flag("--halved-mu", curves.halved_mu, "hamming-degenerate with mu = delta/(2(1+rate))");
    add_common(sv, curves.common, "csv");

    SelftestArgs selftest;
    auto* ss = app.add_subcommand("selftest", "run the invariant suite");
    ss->add_option("--fixtures", selftest.fixtures, "fixture directory with manifest.json");
    ss->add_option("--seed", selftest.seed, "random seed");

    std::vector<char*> argv;
    std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"qbounds"} : args;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (sc->parsed()) return cmd_check(check, storage, out);
        if (st->parsed()) return cmd_table(table, storage, out);
        if (sa->parsed()) return cmd_analyze(analyze, storage, out);
        if (sl->parsed()) return cmd_lp(lp, storage, out);
        if (sv->parsed()) return cmd_curves(curves, storage, out);
        if (ss->parsed()) return cmd_selftest(selftest, out);
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return kCapacity;
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return kSelftestFailed;
    } catch (const SolverError& e) {
        err << "solver error: " << e.what() << "\n";
        return kSelftestFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace qbounds::cli
