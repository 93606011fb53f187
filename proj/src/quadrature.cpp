#include "drivedamp/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "drivedamp/errors.hpp"

namespace drivedamp::quad {

namespace {

// QUADPACK qk21 nodes and weights; odd indices of kXgk are the Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment qk21(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resk = kWgk[10] * fc;
    double resg = 0.0;
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    return {a, b, resk * half, std::abs((resk - resg) * half)};
}

}  // namespace

Result gauss_kronrod(const Integrand& f, double a, double b, const Options& opt) {
    if (!(std::isfinite(a) && std::isfinite(b))) {
        throw Error(ErrorCode::domain, "gauss_kronrod: interval bounds must be finite");
    }
    Result res;
    if (a == b) {
        res.converged = true;
        return res;
    }

    std::priority_queue<Segment> heap;
    Segment first = qk21(f, a, b);
    double total = first.value;
    double error = first.error;
    heap.push(first);

    while (true) {
        const double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
        if (error <= target) {
            res.converged = true;
            break;
        }
        if (heap.size() >= opt.max_intervals) break;

        Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) break;
        heap.pop();
        Segment left = qk21(f, worst.a, mid);
        Segment right = qk21(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Final sum over segments, smallest first.
    res.value = 0.0;
    res.error = 0.0;
    res.intervals = heap.size();
    std::vector<Segment> segs;
    segs.reserve(heap.size());
    while (!heap.empty()) {
        segs.push_back(heap.top());
        heap.pop();
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) {
        return std::abs(x.value) < std::abs(y.value);
    });
    for (const auto& s : segs) {
        res.value += s.value;
        res.error += s.error;
    }
    return res;
}

Result gauss_kronrod_semi_infinite(const Integrand& f, double a, const Options& opt) {
    const auto g = [&](double t) {
        const double u = 1.0 - t;
        return f(a + t / u) / (u * u);
    };
    return gauss_kronrod(g, 0.0, 1.0, opt);
}

Result principal_value_semi_infinite(const Integrand& f, double pole, double a,
                                     const Options& opt) {
    if (!(pole > a)) {
        throw Error(ErrorCode::domain, "principal_value: pole must lie above the lower bound");
    }
    const double fp = f(pole);
    const auto subtracted = [&](double x) { return (f(x) - fp) / (x - pole); };
    const double upper = 2.0 * pole - a;

    const Result left = gauss_kronrod(subtracted, a, pole, opt);
    const Result right = gauss_kronrod(subtracted, pole, upper, opt);
    const Result tail =
        gauss_kronrod_semi_infinite([&](double x) { return f(x) / (x - pole); }, upper, opt);

    Result res;
    res.value = left.value + right.value + tail.value;
    res.error = left.error + right.error + tail.error;
    res.intervals = left.intervals + right.intervals + tail.intervals;
    res.converged = left.converged && right.converged && tail.converged;
    return res;
}

}  // namespace drivedamp::quad
