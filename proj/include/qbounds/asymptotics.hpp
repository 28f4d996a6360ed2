#pragma once

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace qbounds {

/// q-ary entropy with H_q(0) = 0 and H_q(1) = log_q(q-1). DomainError outside [0, 1].
double entropy_q(double x, unsigned q);
/// (q - 1 - (q-2) x - 2 sqrt((q-1) x (1-x))) / q. DomainError outside [0, 1].
double gamma_q(double x, unsigned q);

/// Bisection for fn(x) = target on [lo, hi] down to an interval of width tol.
/// Throws SolverError unless fn(lo) - target and fn(hi) - target differ in sign
/// (or one of them is zero).
double solve_monotone(const std::function<double(double)>& fn, double target, double lo, double hi,
                      double tol = 1e-9);

/// Nonincreasing classical rate bound R(delta); zero past the data.
class ClassicalBound {
public:
    /// R(delta) = H_q(gamma_q(delta)) below (q-1)/q and 0 from there on.
    static ClassicalBound first_lp(unsigned q);
    /// CSV with header "delta,rate", strictly increasing delta and
    /// nonincreasing rate; linear interpolation in between, the first rate
    /// before the first point and 0 after the last. Throws ParseError.
    static ClassicalBound from_csv(std::istream& in, const std::string& name);

    double operator()(double delta) const { return fn_(delta); }
    const std::string& name() const { return name_; }
    bool stand_in() const { return stand_in_; }

private:
    ClassicalBound(std::string name, bool stand_in, std::function<double(double)> fn)
        : name_(std::move(name)), stand_in_(stand_in), fn_(std::move(fn)) {}
    std::string name_;
    bool stand_in_;
    std::function<double(double)> fn_;
};

enum class CurveId {
    A_nondeg_stabilizer,
    B_nondeg_general,
    C_external_reference,
    D_binary_complementary,
    E_gf4_complementary,
    hamming_degenerate,
    fig2_family,
};

std::string to_string(CurveId id);
/// Accepts the short ids A, B, C, D, E, hamming-degenerate, fig2 and the full enum names.
CurveId parse_curve_id(const std::string& text);

struct CurvePoint {
    double delta = 0;
    double rate = 0;
};

struct Curve {
    CurveId id = CurveId::B_nondeg_general;
    /// Ordered by increasing delta; the last point is the terminal point.
    std::vector<CurvePoint> points;
    CurvePoint terminal;
    /// Human-readable notes on stand-ins and conventions.
    std::vector<std::string> notes;
};

struct CurveOptions {
    unsigned samples = 200;
    double kappa1 = 0;
    /// Replaces the built-in first-LP bound of the curve's alphabet.
    std::optional<ClassicalBound> classical;
    /// hamming_degenerate only: mu = delta / (2 (1 + lambda)) instead of delta / (1 + lambda).
    bool halved_mu = false;
    double tol = 1e-9;
    /// Resolution of the coarse scan over lambda before bisection.
    unsigned lambda_grid = 1000;
};

/// Parametric sweep x in [x0, 3/4] with H_4(x0) = 1/2:
/// delta = gamma_4(x), lambda = max(0, 2 H_4(x) - 1).
Curve curve_nondeg_general(unsigned samples);

/// Curves A, D, E and fig2: for each delta the largest lambda meeting
///   A:    (1+l)/2            <= R4(delta)
///   D:    2l/(1+l)           <= R2(delta/(1+l))
///   E:    2l/(1+l)           <= R4(2 delta/(1+l))
///   fig2: (2l-k)/(1+l-k)     <= R4(2 delta/(1+l-k)),  k < 2l
Curve curve_stabilizer(CurveId id, const ClassicalBound& classical, double kappa1, unsigned samples,
                       double tol = 1e-9, unsigned lambda_grid = 1000);

/// lambda <= (1 - H_4(mu)) / (1 + H_4(mu)) with mu = delta / (1 + lambda).
Curve curve_hamming_degenerate(unsigned samples, bool halved_mu = false, double tol = 1e-9,
                               unsigned lambda_grid = 1000);

/// Largest lambda at a single delta on the degenerate Hamming curve.
double hamming_degenerate_rate(double delta, bool halved_mu = false, double tol = 1e-9);

/// Dispatches on id; C echoes the supplied classical bound and requires one.
Curve make_curve(CurveId id, const CurveOptions& options);

}  // namespace qbounds
