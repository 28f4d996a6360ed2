#include "qbounds/asymptotics.hpp"

#include "qbounds/errors.hpp"

#include <cmath>
#include <cstdio>

namespace qbounds {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void require_samples(unsigned samples) {
    if (samples < 2) throw ParameterError("samples must be at least 2");
}

/// One reduction constraint lhs(l) <= R(arg(l, delta)) with l > lambda_min
/// (or l >= lambda_min when not strict).
struct Reduction {
    std::function<double(double)> lhs;
    std::function<double(double, double)> arg;
    std::function<double(double)> rate;
    double lambda_min = 0;
    bool strict = false;

    bool feasible(double l, double delta) const {
        if (l < lambda_min || (strict && l <= lambda_min)) return false;
        return lhs(l) <= rate(arg(l, delta));
    }

    std::optional<double> largest(double delta, double tol, unsigned grid) const {
        for (unsigned i = grid + 1; i-- > 0;) {
            double l = static_cast<double>(i) / grid;
            if (!feasible(l, delta)) continue;
            if (i == grid) return 1.0;
            double lo = l, hi = static_cast<double>(i + 1) / grid;
            while (hi - lo > tol) {
                double mid = 0.5 * (lo + hi);
                (feasible(mid, delta) ? lo : hi) = mid;
            }
            return lo;
        }
        return std::nullopt;
    }

    /// sup of delta at which lambda just above lambda_min stays feasible.
    double terminal(double tol) const {
        const double threshold = lhs(lambda_min);
        auto open = [&](double delta) { return rate(arg(lambda_min, delta)) > threshold; };
        if (!open(0.0)) return 0.0;
        if (open(1.0)) return 1.0;
        double lo = 0, hi = 1;
        while (hi - lo > tol) {
            double mid = 0.5 * (lo + hi);
            (open(mid) ? lo : hi) = mid;
        }
        return lo;
    }

    Curve sweep(CurveId id, unsigned samples, double tol, unsigned grid) const {
        require_samples(samples);
        Curve c;
        c.id = id;
        const double end = terminal(tol);
        for (unsigned j = 0; j + 1 < samples; ++j) {
            double delta = end * j / (samples - 1);
            if (auto l = largest(delta, tol, grid)) c.points.push_back({delta, *l});
        }
        c.terminal = {end, lambda_min};
        c.points.push_back(c.terminal);
        return c;
    }
};

double hamming_rate(double mu) {
    if (mu >= 0.75) return 0.0;
    double h = entropy_q(mu, 4);
    return (1 - h) / (1 + h);
}

Reduction hamming_reduction(bool halved_mu) {
    Reduction r;
    r.lhs = [](double l) { return l; };
    double factor = halved_mu ? 2.0 : 1.0;
    r.arg = [factor](double l, double delta) { return delta / (factor * (1 + l)); };
    r.rate = hamming_rate;
    return r;
}

}  // namespace

double entropy_q(double x, unsigned q) {
    if (!(x >= 0 && x <= 1)) throw DomainError("entropy argument outside [0, 1]");
    if (q < 2) throw ParameterError("alphabet size must be at least 2");
    const double lq = std::log(static_cast<double>(q));
    double h = 0;
    if (x > 0) h -= x * std::log(x) / lq;
    if (x < 1) h -= (1 - x) * std::log(1 - x) / lq;
    if (x > 0) h += x * std::log(static_cast<double>(q - 1)) / lq;
    return h;
}

double gamma_q(double x, unsigned q) {
    if (!(x >= 0 && x <= 1)) throw DomainError("gamma argument outside [0, 1]");
    if (q < 2) throw ParameterError("alphabet size must be at least 2");
    const double qq = q;
    double g = (qq - 1 - (qq - 2) * x - 2 * std::sqrt((qq - 1) * x * (1 - x))) / qq;
    return g < 0 ? 0 : g;
}

double solve_monotone(const std::function<double(double)>& fn, double target, double lo, double hi, double tol) {
    if (!(lo <= hi)) throw SolverError("empty bracket");
    double flo = fn(lo) - target;
    double fhi = fn(hi) - target;
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0)) throw SolverError("target is not bracketed");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double fm = fn(mid) - target;
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

ClassicalBound ClassicalBound::first_lp(unsigned q) {
    if (q < 2) throw ParameterError("alphabet size must be at least 2");
    const double edge = static_cast<double>(q - 1) / q;
    return ClassicalBound("first-lp-q" + std::to_string(q), true, [q, edge](double delta) {
        if (delta < 0) throw DomainError("negative relative distance");
        if (delta >= edge) return 0.0;
        return entropy_q(gamma_q(delta, q), q);
    });
}

ClassicalBound ClassicalBound::from_csv(std::istream& in, const std::string& name) {
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    std::vector<std::pair<double, double>> pts;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            if (line != "delta,rate") throw ParseError(lineno, "expected header 'delta,rate'");
            header = true;
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError(lineno, "expected two comma-separated values");
        double d, r;
        try {
            std::size_t used = 0;
            std::string a = line.substr(0, comma), b = line.substr(comma + 1);
            d = std::stod(a, &used);
            if (used != a.size()) throw std::invalid_argument(a);
            r = std::stod(b, &used);
            if (used != b.size()) throw std::invalid_argument(b);
        } catch (const std::logic_error&) {
            throw ParseError(lineno, "malformed number");
        }
        if (!pts.empty() && d <= pts.back().first) throw ParseError(lineno, "delta must be strictly increasing");
        if (!pts.empty() && r > pts.back().second) throw ParseError(lineno, "rate must be nonincreasing");
        if (r < 0 || d < 0) throw ParseError(lineno, "values must be nonnegative");
        pts.emplace_back(d, r);
    }
    if (!header) throw ParseError(lineno, "missing header 'delta,rate'");
    if (pts.empty()) throw ParseError(lineno, "no data rows");
    return ClassicalBound(name, false, [pts](double delta) {
        if (delta <= pts.front().first) return pts.front().second;
        if (delta > pts.back().first) return 0.0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (delta > pts[i].first) continue;
            auto [d0, r0] = pts[i - 1];
            auto [d1, r1] = pts[i];
            return r0 + (r1 - r0) * (delta - d0) / (d1 - d0);
        }
        return pts.back().second;
    });
}

std::string to_string(CurveId id) {
    switch (id) {
        case CurveId::A_nondeg_stabilizer: return "A_nondeg_stabilizer";
        case CurveId::B_nondeg_general: return "B_nondeg_general";
        case CurveId::C_external_reference: return "C_external_reference";
        case CurveId::D_binary_complementary: return "D_binary_complementary";
        case CurveId::E_gf4_complementary: return "E_gf4_complementary";
        case CurveId::hamming_degenerate: return "hamming_degenerate";
        case CurveId::fig2_family: return "fig2_family";
    }
    return "unknown";
}

CurveId parse_curve_id(const std::string& text) {
    static const std::pair<const char*, CurveId> shorts[] = {
        {"A", CurveId::A_nondeg_stabilizer},    {"B", CurveId::B_nondeg_general},
        {"C", CurveId::C_external_reference},   {"D", CurveId::D_binary_complementary},
        {"E", CurveId::E_gf4_complementary},    {"hamming-degenerate", CurveId::hamming_degenerate},
        {"fig2", CurveId::fig2_family},
    };
    for (auto [s, id] : shorts)
        if (text == s || text == to_string(id)) return id;
    throw ParameterError("unknown curve id '" + text + "'");
}

Curve curve_nondeg_general(unsigned samples) {
    require_samples(samples);
    auto h4 = [](double x) { return entropy_q(x, 4); };
    const double x_end = solve_monotone(h4, 0.5, 0.0, 0.75);
    Curve c;
    c.id = CurveId::B_nondeg_general;
    for (unsigned j = 0; j + 1 < samples; ++j) {
        double x = 0.75 - (0.75 - x_end) * j / (samples - 1);
        c.points.push_back({gamma_q(x, 4), std::max(0.0, 2 * h4(x) - 1)});
    }
    c.terminal = {gamma_q(x_end, 4), 0.0};
    c.points.push_back(c.terminal);
    c.notes.push_back("parametrisation: delta = gamma_4(x), rate = max(0, 2 H_4(x) - 1)");
    c.notes.push_back("terminal delta " + fmt(c.terminal.delta) + " at H_4(x) = 1/2, x = " + fmt(x_end));
    return c;
}

Curve curve_stabilizer(CurveId id, const ClassicalBound& classical, double kappa1, unsigned samples, double tol,
                       unsigned lambda_grid) {
    Reduction r;
    r.rate = [&classical](double delta) { return classical(delta); };
    std::vector<std::string> notes;
    switch (id) {
        case CurveId::A_nondeg_stabilizer:
            r.lhs = [](double l) { return (1 + l) / 2; };
            r.arg = [](double, double delta) { return delta; };
            notes.push_back("constraint: (1+rate)/2 <= R4(delta)");
            break;
        case CurveId::D_binary_complementary:
            r.lhs = [](double l) { return 2 * l / (1 + l); };
            r.arg = [](double l, double delta) { return delta / (1 + l); };
            notes.push_back("constraint: 2 rate/(1+rate) <= R2(delta/(1+rate))");
            break;
        case CurveId::E_gf4_complementary:
            r.lhs = [](double l) { return 2 * l / (1 + l); };
            r.arg = [](double l, double delta) { return 2 * delta / (1 + l); };
            notes.push_back("constraint: 2 rate/(1+rate) <= R4(2 delta/(1+rate))");
            break;
        case CurveId::fig2_family:
            if (!(kappa1 >= 0 && kappa1 <= 1)) throw ParameterError("kappa1 must lie in [0, 1]");
            r.lhs = [kappa1](double l) { return (2 * l - kappa1) / (1 + l - kappa1); };
            r.arg = [kappa1](double l, double delta) { return 2 * delta / (1 + l - kappa1); };
            r.lambda_min = kappa1 / 2;
            r.strict = kappa1 > 0;
            notes.push_back("constraint: (2 rate - k1)/(1 + rate - k1) <= R4(2 delta/(1 + rate - k1)), k1 < 2 rate");
            notes.push_back("kappa1 = " + fmt(kappa1));
            break;
        default:
            throw ParameterError("curve " + to_string(id) + " is not a stabilizer reduction curve");
    }
    Curve c = r.sweep(id, samples, tol, lambda_grid);
    notes.push_back("classical bound: " + classical.name() +
                    (classical.stand_in() ? " (built-in stand-in)" : " (user supplied)"));
    if (id == CurveId::A_nondeg_stabilizer && classical.stand_in())
        notes.push_back("with the first-LP stand-in this curve coincides with B; a stronger quaternary bound "
                        "would be needed for the 0.308 endpoint");
    if (id == CurveId::D_binary_complementary && classical.stand_in())
        notes.push_back("stand-in for the second MRRW binary bound, which is not provided");
    notes.push_back("terminal delta " + fmt(c.terminal.delta) + " at rate " + fmt(c.terminal.rate));
    c.notes = std::move(notes);
    return c;
}

double hamming_degenerate_rate(double delta, bool halved_mu, double tol) {
    if (!(delta >= 0 && delta <= 1)) throw DomainError("relative distance outside [0, 1]");
    auto l = hamming_reduction(halved_mu).largest(delta, tol, 1000);
    return l ? *l : 0.0;
}

Curve curve_hamming_degenerate(unsigned samples, bool halved_mu, double tol, unsigned lambda_grid) {
    Curve c = hamming_reduction(halved_mu).sweep(CurveId::hamming_degenerate, samples, tol, lambda_grid);
    c.notes.push_back(halved_mu ? "mu = delta/(2(1+rate))" : "mu = delta/(1+rate)");
    c.notes.push_back("constraint: rate <= (1 - H_4(mu))/(1 + H_4(mu))");
    c.notes.push_back("terminal delta " + fmt(c.terminal.delta) + " at rate " + fmt(c.terminal.rate));
    return c;
}

Curve make_curve(CurveId id, const CurveOptions& o) {
    switch (id) {
        case CurveId::B_nondeg_general: return curve_nondeg_general(o.samples);
        case CurveId::hamming_degenerate:
            return curve_hamming_degenerate(o.samples, o.halved_mu, o.tol, o.lambda_grid);
        case CurveId::C_external_reference: {
            if (!o.classical) throw ParameterError("curve C needs a classical bound file");
            require_samples(o.samples);
            Curve c;
            c.id = id;
            for (unsigned j = 0; j < o.samples; ++j) {
                double delta = static_cast<double>(j) / (o.samples - 1);
                c.points.push_back({delta, (*o.classical)(delta)});
            }
            c.terminal = c.points.back();
            c.notes.push_back("classical bound: " + o.classical->name() + " (user supplied)");
            return c;
        }
        case CurveId::D_binary_complementary:
            return curve_stabilizer(id, o.classical ? *o.classical : ClassicalBound::first_lp(2), o.kappa1,
                                    o.samples, o.tol, o.lambda_grid);
        default:
            return curve_stabilizer(id, o.classical ? *o.classical : ClassicalBound::first_lp(4), o.kappa1,
                                    o.samples, o.tol, o.lambda_grid);
    }
}

}  // namespace qbounds
