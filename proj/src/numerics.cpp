#include "lifgap/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "lifgap/constants.hpp"

namespace lifgap {
namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
constexpr int kGK = 8;  // nonnegative nodes
constexpr double kNodes[kGK] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWeights[kGK] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
// Gauss-7 weights matched to nodes 1, 3, 5, 7 above.
constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b,
           std::size_t& evals) {
    const double h = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double kron = 0.0, gauss = 0.0;
    for (int i = 0; i < kGK; ++i) {
        const double dx = h * kNodes[i];
        double fsum;
        if (i == kGK - 1) {
            fsum = f(mid);
            evals += 1;
        } else {
            fsum = f(mid - dx) + f(mid + dx);
            evals += 2;
        }
        kron += kWeights[i] * fsum;
        if (i % 2 == 1) gauss += kGaussW[i / 2] * fsum;
    }
    kron *= h;
    gauss *= h;
    double err = std::abs(kron - gauss);
    // QUADPACK-style sharpening for already-converged panels
    if (err > 0.0 && err < 1.0) err = std::min(err, std::pow(200.0 * err, 1.5));
    if (!std::isfinite(kron)) err = std::numeric_limits<double>::infinity();
    return {a, b, kron, err};
}

}  // namespace

QuadResult integrate_interval(const std::function<double(double)>& f, double a,
                              double b, const QuadratureSpec& spec) {
    QuadResult res;
    if (!(b > a)) return res;

    std::vector<double> edges;
    edges.push_back(a);
    for (double bp : spec.breakpoints)
        if (bp > a && bp < b) edges.push_back(bp);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Panel> heap;
    double total = 0.0, toterr = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p = gk15(f, edges[i], edges[i + 1], res.evaluations);
        total += p.value;
        toterr += p.error;
        heap.push(p);
    }

    const double width_floor =
        64.0 * std::numeric_limits<double>::epsilon() *
        (std::abs(a) + std::abs(b) + 1e-300);
    int splits = 0;
    double stuck_error = 0.0;
    while (toterr > std::max(spec.rel_tol * std::abs(total), spec.abs_floor) &&
           !heap.empty()) {
        if (splits >= spec.max_subdiv) {
            res.converged = false;
            break;
        }
        Panel worst = heap.top();
        heap.pop();
        if (worst.b - worst.a < width_floor || worst.error == 0.0) {
            // cannot be refined further; park its error
            stuck_error += worst.error;
            toterr -= worst.error;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gk15(f, worst.a, mid, res.evaluations);
        Panel right = gk15(f, mid, worst.b, res.evaluations);
        total += left.value + right.value - worst.value;
        toterr += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++splits;
    }
    toterr += stuck_error;
    res.value = total;
    res.error = toterr;
    if (toterr > std::max(spec.rel_tol * std::abs(total), spec.abs_floor))
        res.converged = false;
    return res;
}

QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   const QuadratureSpec& spec) {
    const double s = spec.decay_scale > 0 ? spec.decay_scale : 1.0;
    QuadratureSpec mapped = spec;
    mapped.breakpoints.clear();
    for (double bp : spec.breakpoints)
        if (bp > 0) mapped.breakpoints.push_back(bp / (bp + s));
    auto g = [&f, s](double u) {
        if (u >= 1.0 - 1e-13) return 0.0;
        const double om = 1.0 - u;
        const double y = s * u / om;
        const double jac = s / (om * om);
        const double v = f(y);
        return v == 0.0 ? 0.0 : v * jac;
    };
    return integrate_interval(g, 0.0, 1.0, mapped);
}

ComplexQuadResult integrate_semi_infinite_complex(
    const std::function<std::complex<double>(double)>& f,
    const QuadratureSpec& spec) {
    QuadResult re = integrate_semi_infinite(
        [&f](double y) { return f(y).real(); }, spec);
    QuadResult im = integrate_semi_infinite(
        [&f](double y) { return f(y).imag(); }, spec);
    ComplexQuadResult out;
    out.value = {re.value, im.value};
    out.error = re.error + im.error;
    out.converged = re.converged && im.converged;
    return out;
}

SumResult matsubara_sum(const std::function<double(std::size_t)>& term,
                        const SumSpec& spec) {
    SumResult res;
    double sum = 0.5 * term(0);
    double prev = 0.0;
    int good = 0;
    std::size_t l = 1;
    for (; l <= spec.max_terms; ++l) {
        const double t = term(l);
        sum += t;
        if (l >= 3) {
            double tail;
            if (t == 0.0 && prev == 0.0) {
                tail = 0.0;
            } else if (prev != 0.0 && std::abs(t) < std::abs(prev)) {
                const double r = std::abs(t) / std::abs(prev);
                tail = std::abs(t) * r / (1.0 - r);
            } else {
                tail = std::numeric_limits<double>::infinity();
            }
            if (tail <= spec.rel_tol * std::abs(sum)) {
                if (++good >= 2) {
                    ++l;
                    break;
                }
            } else {
                good = 0;
            }
        }
        prev = t;
    }
    res.value = sum;
    res.terms = l;
    res.converged = l <= spec.max_terms;
    return res;
}

double abel_plana_correction(
    const std::function<std::complex<double>(std::complex<double>)>& phi,
    double kappa, const QuadratureSpec& spec) {
    QuadratureSpec s = spec;
    s.decay_scale = 1.0 / (2.0 * consts::pi);
    auto g = [&phi, kappa](double t) {
        if (t <= 0.0) return 0.0;
        const std::complex<double> z(0.0, kappa * t);
        const double denom = std::expm1(2.0 * consts::pi * t);
        return -2.0 * phi(z).imag() / denom;
    };
    return integrate_semi_infinite(g, s).value;
}

DerivResult ddT(const std::function<double(double)>& f, double T, double h0) {
    double h = h0 > 0.0 ? h0 : std::max(1e-3 * T, 0.01);
    if (T - 2.0 * h <= 0.0)
        throw std::domain_error("ddT: temperature too small for the stencil");
    const double d1 = (f(T + h) - f(T - h)) / (2.0 * h);
    const double h2 = 0.5 * h;
    const double d2 = (f(T + h2) - f(T - h2)) / (2.0 * h2);
    DerivResult r;
    r.value = (4.0 * d2 - d1) / 3.0;
    r.error = std::abs(d2 - d1) / 3.0;
    return r;
}

namespace {

// Li_n(e^-u) expansions about u = 0 (integer n = 2, 3); zeta(negative even)
// terms vanish.
double li2_log_branch(double u) {
    const double pi2_6 = consts::pi * consts::pi / 6.0;
    const double lu = std::log(u);
    double v = pi2_6 - u * (1.0 - lu) - u * u / 4.0;
    const double u2 = u * u;
    double up = u2 * u;  // u^3
    v += up / 72.0;
    up *= u2;  // u^5
    v -= up / 14400.0;
    up *= u2;  // u^7
    v += up / 1270080.0;
    up *= u2;  // u^9
    v -= up / 87091200.0;
    return v;
}

}  // namespace

double polylog(int n, double x) {
    if (n != 2 && n != 3)
        throw std::invalid_argument("polylog: order must be 2 or 3");
    if (x < 0.0 || x > 1.0)
        throw std::domain_error("polylog: argument must lie in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x < 0.55) {
        // direct series
        double sum = 0.0, xp = x;
        for (int k = 1; k < 200; ++k) {
            const double t = xp / (n == 2 ? double(k) * k : double(k) * k * k);
            sum += t;
            if (t < 1e-17 * sum) break;
            xp *= x;
        }
        return sum;
    }
    const double u = -std::log(x);
    if (n == 2) return li2_log_branch(u);
    // Li3(e^-u) = zeta3 - pi^2 u/6 + u^2 (3/2 - ln u)/2 + u^3/12 - u^4/288
    //             + u^6/86400 - u^8/10160640 + ...
    const double pi2_6 = consts::pi * consts::pi / 6.0;
    const double u2 = u * u;
    double v = consts::zeta3 - pi2_6 * u + u2 * (1.5 - std::log(u)) / 2.0;
    v += u2 * u / 12.0;
    v -= u2 * u2 / 288.0;
    v += u2 * u2 * u2 / 86400.0;
    v -= u2 * u2 * u2 * u2 / 10160640.0;
    return v;
}

}  // namespace lifgap
