#include "qbounds/selftest.hpp"

#include "qbounds/additive_code.hpp"
#include "qbounds/bounds.hpp"
#include "qbounds/errors.hpp"
#include "qbounds/krawtchouk.hpp"
#include "qbounds/standard_form.hpp"

#include <json.hpp>

#include <bit>
#include <fstream>
#include <random>
#include <sstream>

namespace qbounds {

namespace {

constexpr std::size_t kMaxListedFailures = 5;

class Recorder {
public:
    explicit Recorder(std::string name) { check_.name = std::move(name); }

    void expect(bool ok, const std::string& what) {
        if (ok) {
            ++check_.passed;
            return;
        }
        ++check_.failed;
        if (check_.failures.size() < kMaxListedFailures) check_.failures.push_back(what);
    }

    void tally(std::uint64_t passed, std::uint64_t failed, const std::string& what) {
        check_.passed += passed;
        check_.failed += failed;
        if (failed && check_.failures.size() < kMaxListedFailures) check_.failures.push_back(what);
    }

    /// Runs fn, turning any library error into a failure.
    template <class Fn>
    void guard(const std::string& what, Fn&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            expect(false, what + ": " + e.what());
        }
    }

    SelftestCheck done() { return std::move(check_); }

private:
    SelftestCheck check_;
};

SelftestCheck orthogonality() {
    Recorder r("krawtchouk orthogonality n<=10");
    for (unsigned n = 0; n <= 10; ++n) {
        auto P = krawtchouk_table(n);
        for (unsigned a = 0; a <= n; ++a)
            for (unsigned b = 0; b <= n; ++b) {
                Integer s = 0;
                for (unsigned x = 0; x <= n; ++x) s += ipow(3, x) * binomial(n, x) * P[a][x] * P[b][x];
                Integer expect = a == b ? ipow(4, n) * ipow(3, a) * binomial(n, a) : Integer(0);
                r.expect(s == expect, "n=" + std::to_string(n) + " r=" + std::to_string(a) + " s=" + std::to_string(b));
            }
    }
    return r.done();
}

SelftestCheck column_sums() {
    Recorder r("krawtchouk column sums");
    for (unsigned n = 0; n <= 12; ++n) {
        auto P = krawtchouk_table(n);
        for (unsigned i = 0; i <= n; ++i) {
            Integer s = 0;
            for (unsigned t = 0; t <= n; ++t) s += P[t][i];
            r.expect(s == (i == 0 ? ipow(4, n) : Integer(0)), "n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
    }
    return r.done();
}

SelftestCheck involution(std::mt19937_64& rng) {
    Recorder r("transform involution");
    for (int trial = 0; trial < 200; ++trial) {
        unsigned n = 1 + static_cast<unsigned>(rng() % 10);
        std::vector<Rational> B(n + 1);
        for (auto& b : B) b = Rational(static_cast<long>(rng() % 1000));
        Rational scale = make_rational(static_cast<long>(1 + rng() % 500), static_cast<long>(1 + rng() % 7));
        auto A = macwilliams_transform(std::span<const Rational>(B), n, 4, scale);
        auto back = macwilliams_transform(std::span<const Rational>(A), n, 4, Rational(ipow(4, n)) / scale);
        r.expect(back == B, "trial " + std::to_string(trial));
    }
    return r.done();
}

SelftestCheck expansion_roundtrip(std::mt19937_64& rng) {
    Recorder r("krawtchouk expansion round trip");
    for (int trial = 0; trial < 100; ++trial) {
        unsigned n = static_cast<unsigned>(rng() % 11);
        std::vector<Rational> c(n + 1);
        for (auto& v : c) v = make_rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(1 + rng() % 9));
        ExactPolynomial f(c, n);
        r.expect(krawtchouk_synthesize(krawtchouk_expand(f)) == f, "trial " + std::to_string(trial));
    }
    return r.done();
}

std::vector<unsigned> as_uints(const std::vector<Integer>& v) {
    std::vector<unsigned> out;
    for (const auto& x : v) out.push_back(static_cast<unsigned>(x.get_ui()));
    return out;
}

void check_code_structure(Recorder& r, const AdditiveCode& C, const std::string& label) {
    r.guard(label + " structure", [&] {
        AdditiveCode dual = symplectic_dual(C);
        r.expect(symplectic_dual(dual).same_span(C), label + " biduality");
        r.expect(dual.rank() == 2 * C.n() - C.rank(), label + " dual rank");
        StandardForm sf = standard_form(C);
        r.expect(sf.gf4.reassemble().same_span(C), label + " gf4 standard form round trip");
        r.expect(2 * sf.gf4.k0 + sf.gf4.k1 == C.rank(), label + " type rank");
        if (sf.binary) r.expect(sf.binary->reassemble().same_span(C), label + " binary standard form round trip");
    });
}

void check_reductions(Recorder& r, const AdditiveCode& C, unsigned d, const std::string& label) {
    if (C.rank() == C.n()) return;
    r.guard(label + " reductions", [&] {
        for (const auto& t : realize_reduction_targets(C))
            r.expect(*t.min_distance >= d, label + " target " + t.describe());
        auto s = binary_s_code(C);
        r.expect(s && s->min_distance >= d, label + " S code");
    });
}

void check_bounds_admit(Recorder& r, const QuantumParams& p, const std::string& label) {
    if (p.k == 0 || p.d < 1) return;
    Rational K(p.K);
    r.guard(label + " bounds", [&] {
        for (const auto& v : {singleton_bound(p.n, p.d), hamming_bound(p.n, p.d), levenshtein_bound(p.n, p.d)}) {
            auto ok = v.admits(K);
            r.expect(!ok || *ok, label + " excluded by " + to_string(v.name));
        }
        if (!p.degenerate && p.n <= 10) {
            auto lp = lp_feasible(p.n, K, p.d);
            r.expect(lp.feasible, label + " excluded by lp");
        }
    });
}

SelftestCheck fixtures(const std::filesystem::path& dir) {
    Recorder r("fixture corpus");
    nlohmann::json manifest;
    try {
        std::ifstream in(dir / "manifest.json");
        if (!in) throw Error("cannot open " + (dir / "manifest.json").string());
        manifest = nlohmann::json::parse(in);
    } catch (const std::exception& e) {
        r.expect(false, std::string("manifest: ") + e.what());
        return r.done();
    }
    for (const auto& entry : manifest.at("fixtures")) {
        const std::string file = entry.at("file");
        r.guard(file, [&] {
            std::ifstream in(dir / file);
            if (!in) throw Error("cannot open fixture");
            std::stringstream ss;
            ss << in.rdbuf();
            AdditiveCode C = parse_code(ss.str());
            QuantumParams p = quantum_distance(C);
            EnumeratorPair e = enumerators(C);
            r.expect(p.n == entry.at("n").get<unsigned>(), file + " n");
            r.expect(p.k == entry.at("k").get<unsigned>(), file + " k");
            r.expect(p.d == entry.at("d").get<unsigned>(), file + " d");
            r.expect(p.degenerate == entry.at("degenerate").get<bool>(), file + " degenerate");
            r.expect(as_uints(e.A) == entry.at("A").get<std::vector<unsigned>>(), file + " A");
            r.expect(as_uints(e.B) == entry.at("B").get<std::vector<unsigned>>(), file + " B");
            if (entry.contains("k0")) {
                auto sf = gf4_standard_form(C);
                r.expect(sf.k0 == entry.at("k0").get<unsigned>() && sf.k1 == entry.at("k1").get<unsigned>(),
                         file + " type");
            }
            check_code_structure(r, C, file);
            check_reductions(r, C, p.d, file);
            check_bounds_admit(r, p, file);
        });
    }
    return r.done();
}

SelftestCheck random_codes(std::mt19937_64& rng) {
    Recorder r("random self-orthogonal codes");
    for (int trial = 0; trial < 60; ++trial) {
        unsigned n = 2 + static_cast<unsigned>(rng() % 6);
        unsigned rank = static_cast<unsigned>(rng() % (n + 1));
        AdditiveCode C = random_self_orthogonal_code(n, rank, rng);
        const std::string label = "trial " + std::to_string(trial);
        r.guard(label, [&] {
            EnumeratorPair e = enumerators(C);  // verifies the transform identity
            r.expect(e.A[0] == 1 && e.B[0] == 1, label + " enumerator normalisation");
            check_code_structure(r, C, label);
            if (rank == n) return;
            QuantumParams p = quantum_distance(C);
            check_reductions(r, C, p.d, label);
            check_bounds_admit(r, p, label);
        });
    }
    return r.done();
}

SelftestCheck closed_forms() {
    Recorder r("singleton and hamming closed forms n<=12");
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned d = 1; d <= n; ++d) {
            const std::string label = "n=" + std::to_string(n) + " d=" + std::to_string(d);
            r.guard(label, [&] {
                r.expect(*singleton_bound(n, d).value_on_2nK == Rational(ipow(4, n - d + 1)), label + " singleton");
                auto f = hamming_polynomial(n, d);
                if (d % 2 == 1)
                    for (unsigned i = d; i <= n; ++i) r.expect(f(Rational(i)) == 0, label + " hamming zero");
                r.expect(hamming_bound(n, d).value_on_2nK.has_value(), label + " hamming");
            });
        }
    return r.done();
}

SelftestCheck lp_dominance() {
    Recorder r("lp dominance n<=8");
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned d = 1; d <= n; ++d) {
            const std::string label = "n=" + std::to_string(n) + " d=" + std::to_string(d);
            r.guard(label, [&] {
                auto lp = lp_maximum(n, d);
                if (!lp.max_2nK) {
                    r.expect(true, label);
                    return;
                }
                r.expect(lp_witness_valid(n, *lp.max_2nK / pow2(n), d, lp.witness), label + " witness");
                for (const auto& v : {singleton_bound(n, d), hamming_bound(n, d), levenshtein_bound(n, d)})
                    if (v.value_on_2nK) r.expect(*lp.max_2nK <= *v.value_on_2nK, label + " vs " + to_string(v.name));
            });
        }
    return r.done();
}

SelftestCheck mixed_packing() {
    Recorder r("mixed sphere packing, total length <= 4, l <= 2");
    auto [codes, violations] = mixed_packing_sweep(4, 2);
    r.expect(codes > 0, "no codes enumerated");
    r.tally(codes - violations, violations, std::to_string(violations) + " codes exceed the packing bound");
    return r.done();
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> mixed_packing_sweep(unsigned max_total, unsigned max_restricted) {
    std::uint64_t codes = 0, violations = 0;
    for (unsigned total = 1; total <= max_total; ++total)
        for (unsigned l = 0; l <= std::min(max_restricted, total); ++l) {
            // Bits 0..l-1: restricted coordinates. Then two bits per free coordinate.
            const unsigned N = 2 * total - l;
            auto weight = [&](Word v) {
                int w = std::popcount(v & ((Word{1} << l) - 1));
                for (unsigned c = 0; c < total - l; ++c) w += (v >> (l + 2 * c) & 3u) ? 1 : 0;
                return static_cast<unsigned>(w);
            };
            for (unsigned rank = 1; rank <= N; ++rank) {
                Integer cap = ipow(2, N - rank);
                for (Word pivots = 0; pivots < (Word{1} << N); ++pivots) {
                    if (static_cast<unsigned>(std::popcount(pivots)) != rank) continue;
                    // Free slots: (row, column) with column after the row's pivot and not a pivot.
                    std::vector<unsigned> pivot_cols;
                    for (unsigned c = 0; c < N; ++c)
                        if (pivots >> c & 1) pivot_cols.push_back(c);
                    std::vector<std::pair<unsigned, unsigned>> slots;
                    for (unsigned i = 0; i < rank; ++i)
                        for (unsigned c = pivot_cols[i] + 1; c < N; ++c)
                            if (!(pivots >> c & 1)) slots.emplace_back(i, c);
                    for (Word fill = 0; fill < (Word{1} << slots.size()); ++fill) {
                        std::vector<Word> rows(rank);
                        for (unsigned i = 0; i < rank; ++i) rows[i] = Word{1} << pivot_cols[i];
                        for (std::size_t s = 0; s < slots.size(); ++s)
                            if (fill >> s & 1) rows[slots[s].first] |= Word{1} << slots[s].second;
                        unsigned d = N + 1;
                        gf2::for_each_in_span(rows, [&](Word w) {
                            if (w) d = std::min(d, weight(w));
                        });
                        ++codes;
                        if (mixed_ball(l, total, (d - 1) / 2) > cap) ++violations;
                    }
                }
            }
        }
    return {codes, violations};
}

bool SelftestReport::ok() const {
    for (const auto& c : checks)
        if (c.failed) return false;
    return true;
}

std::string SelftestReport::format() const {
    std::ostringstream out;
    std::uint64_t passed = 0, failed = 0;
    for (const auto& c : checks) {
        out << (c.failed ? "FAIL " : "PASS ") << c.name << ": " << c.passed << " passed, " << c.failed << " failed\n";
        for (const auto& f : c.failures) out << "    " << f << "\n";
        passed += c.passed;
        failed += c.failed;
    }
    out << (failed ? "selftest FAILED" : "selftest passed") << ": " << passed << " checks passed, " << failed
        << " failed\n";
    return out.str();
}

SelftestReport run_selftest(const std::filesystem::path& fixture_dir, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SelftestReport report;
    report.checks.push_back(orthogonality());
    report.checks.push_back(column_sums());
    report.checks.push_back(involution(rng));
    report.checks.push_back(expansion_roundtrip(rng));
    report.checks.push_back(fixtures(fixture_dir));
    report.checks.push_back(random_codes(rng));
    report.checks.push_back(closed_forms());
    report.checks.push_back(lp_dominance());
    report.checks.push_back(mixed_packing());
    return report;
}

}  // namespace qbounds
