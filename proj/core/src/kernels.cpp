#include "roughheston/kernels.hpp"

#include "roughheston/errors.hpp"
#include "roughheston/mittag_leffler.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace roughheston {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.5 && alpha <= 1.0)) throw DomainError("alpha must lie in (1/2, 1]");
}

// 1 - E_{a,1}(-x) without cancellation for small x.
double one_minus_ml1(double a, double x) {
    if (x > 1.0) return 1.0 - mittag_leffler(a, 1.0, -x);
    long double sum = 0.0L;
    long double power = 1.0L;
    for (int k = 1; k < 200; ++k) {
        power *= -x;
        const long double term = -power / std::tgamma(static_cast<long double>(a) * k + 1.0L);
        sum += term;
        if (std::fabs(term) < 1e-20L * std::fabs(sum)) break;
    }
    return static_cast<double>(sum);
}

template <class F>
std::array<double, 4> gauss_moments(F&& kappa, double h, std::size_t m) {
    using gl = boost::math::quadrature::gauss<double, 10>;
    const auto& nodes = gl::abscissa();
    const auto& weights = gl::weights();
    std::array<double, 4> out{};
    auto accumulate = [&](double node, double weight) {
        const double x = 0.5 * (1.0 + node);
        const double v = 0.5 * weight * kappa(h * (static_cast<double>(m) + 1.0 - x));
        double xp = 1.0;
        for (int j = 0; j < 4; ++j) {
            out[j] += v * xp;
            xp *= x;
        }
    };
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        accumulate(nodes[i], weights[i]);
        if (nodes[i] != 0.0) accumulate(-nodes[i], weights[i]);
    }
    for (double& v : out) v *= h;
    return out;
}

}  // namespace

double kappa_alpha(double alpha, double t) {
    check_alpha(alpha);
    if (alpha == 1.0) return 1.0;
    if (!(t > 0.0)) throw DomainError("kappa_alpha needs t > 0 for alpha < 1");
    return std::pow(t, alpha - 1.0) / std::tgamma(alpha);
}

double cumulative_K(double alpha, double t) {
    check_alpha(alpha);
    if (!(t >= 0.0)) throw DomainError("cumulative_K needs t >= 0");
    if (alpha == 1.0) return t;
    return std::pow(t, alpha) / std::tgamma(alpha + 1.0);
}

double fixed_point_T_alpha(double alpha) {
    check_alpha(alpha);
    if (alpha == 1.0) return 1.0;
    return std::pow(std::tgamma(alpha + 1.0), 1.0 / (alpha - 1.0));
}

double resolvent(const ModelParams& p, double t) {
    if (!(t > 0.0)) throw DomainError("resolvent needs t > 0");
    const double a = p.alpha();
    const double lam = p.lambda();
    if (a == 1.0) return lam * std::exp(-lam * t);
    return lam * std::pow(t, a - 1.0) * mittag_leffler(a, a, -lam * std::pow(t, a));
}

double cumulative_L(const ModelParams& p, double t) {
    if (!(t >= 0.0)) throw DomainError("cumulative_L needs t >= 0");
    const double lam = p.lambda();
    if (p.alpha() == 1.0) return -std::expm1(-lam * t) / lam;
    return one_minus_ml1(p.alpha(), lam * std::pow(t, p.alpha())) / lam;
}

double fixed_point_T_alpha_lambda(const ModelParams& p) {
    if (p.alpha() == 1.0) throw DomainError("L(t) < t for all t > 0 when alpha = 1: no positive fixed point");
    auto f = [&](double t) { return cumulative_L(p, t) - t; };
    const double hi = 1.0 / p.lambda();  // L < 1/lambda everywhere
    double lo = 1e-3 * std::min(hi, fixed_point_T_alpha(p.alpha()));
    while (f(lo) <= 0.0) {
        lo *= 1e-3;
        if (lo < 1e-300) throw BracketError("fixed_point_T_alpha_lambda: could not bracket");
    }
    std::uintmax_t iters = 200;
    const auto [a, b] = boost::math::tools::toms748_solve(
        f, lo, hi, f(lo), f(hi), [](double x, double y) { return std::fabs(x - y) < 1e-13; }, iters);
    return 0.5 * (a + b);
}

Kernel Kernel::power_law(double alpha) {
    check_alpha(alpha);
    return Kernel(PowerLaw{alpha});
}

Kernel Kernel::scaled_resolvent(double alpha, double lambda) {
    check_alpha(alpha);
    if (!(lambda > 0.0)) throw DomainError("scaled resolvent needs lambda > 0");
    return Kernel(ScaledResolvent{alpha, lambda});
}

Kernel Kernel::tabulated(std::vector<double> t, std::vector<double> k) {
    if (t.empty() || t.size() != k.size()) throw ValidationError("tabulated kernel needs matching, non-empty columns");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!std::isfinite(t[i]) || !std::isfinite(k[i])) throw ValidationError("tabulated kernel: non-finite entry");
        if (!(t[i] > (i == 0 ? 0.0 : t[i - 1]))) throw ValidationError("tabulated kernel: t must be positive and strictly increasing");
        if (!(k[i] > 0.0)) throw ValidationError("tabulated kernel: values must be positive");
        if (i > 0 && k[i] > k[i - 1]) throw ValidationError("tabulated kernel: values must be nonincreasing");
    }
    std::vector<double> prefix(t.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        acc += k[i] * (t[i] - (i == 0 ? 0.0 : t[i - 1]));
        prefix[i] = acc;
    }
    return Kernel(Tabulated{std::move(t), std::move(k), std::move(prefix)});
}

double Kernel::operator()(double t) const {
    return std::visit(
        [t](const auto& k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, PowerLaw>) {
                return kappa_alpha(k.alpha, t);
            } else if constexpr (std::is_same_v<T, ScaledResolvent>) {
                if (!(t > 0.0)) throw DomainError("kernel evaluation needs t > 0");
                if (k.alpha == 1.0) return std::exp(-k.lambda * t);
                return std::pow(t, k.alpha - 1.0) * mittag_leffler(k.alpha, k.alpha, -k.lambda * std::pow(t, k.alpha));
            } else {
                if (!(t > 0.0)) throw DomainError("kernel evaluation needs t > 0");
                const auto it = std::lower_bound(k.t.begin(), k.t.end(), t);
                return it == k.t.end() ? k.k.back() : k.k[static_cast<std::size_t>(it - k.t.begin())];
            }
        },
        impl_);
}

double Kernel::cumulative(double t) const {
    if (!(t >= 0.0)) throw DomainError("kernel cumulative needs t >= 0");
    return std::visit(
        [t](const auto& k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, PowerLaw>) {
                return cumulative_K(k.alpha, t);
            } else if constexpr (std::is_same_v<T, ScaledResolvent>) {
                if (k.alpha == 1.0) return -std::expm1(-k.lambda * t) / k.lambda;
                return one_minus_ml1(k.alpha, k.lambda * std::pow(t, k.alpha)) / k.lambda;
            } else {
                const auto i = static_cast<std::size_t>(std::lower_bound(k.t.begin(), k.t.end(), t) - k.t.begin());
                if (i == k.t.size()) return k.prefix.back() + k.k.back() * (t - k.t.back());
                const double left = i == 0 ? 0.0 : k.t[i - 1];
                const double base = i == 0 ? 0.0 : k.prefix[i - 1];
                return base + k.k[i] * (t - left);
            }
        },
        impl_);
}

Kernel::Kind Kernel::kind() const noexcept {
    switch (impl_.index()) {
        case 0: return Kind::power_law;
        case 1: return Kind::scaled_resolvent;
        default: return Kind::tabulated;
    }
}

std::string Kernel::tag() const {
    std::ostringstream os;
    os.precision(12);
    std::visit(
        [&os](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, PowerLaw>)
                os << "power-law(alpha=" << k.alpha << ")";
            else if constexpr (std::is_same_v<T, ScaledResolvent>)
                os << "scaled-resolvent(alpha=" << k.alpha << ",lambda=" << k.lambda << ")";
            else
                os << "tabulated(n=" << k.t.size() << ")";
        },
        impl_);
    return os.str();
}

std::array<double, 4> Kernel::interval_moments(double h, std::size_t m) const {
    if (!(h > 0.0)) throw DomainError("interval_moments needs h > 0");
    if (const auto* k = std::get_if<Tabulated>(&impl_)) {
        // piecewise constant: integrate c * ((b - tau)/h)^j exactly on each piece
        const double a = h * static_cast<double>(m);
        const double b = a + h;
        std::array<double, 4> out{};
        double left = 0.0;
        for (std::size_t i = 0; i <= k->t.size() && left < b; ++i) {
            const double right = i < k->t.size() ? k->t[i] : b;
            const double c = i < k->t.size() ? k->k[i] : k->k.back();
            const double p = std::max(left, a);
            const double q = std::min(right, b);
            if (q > p) {
                const double xp = (b - p) / h;
                const double xq = (b - q) / h;
                double pp = xp;
                double pq = xq;
                for (int j = 0; j < 4; ++j) {
                    out[j] += c * h * (pp - pq) / (j + 1);
                    pp *= xp;
                    pq *= xq;
                }
            }
            left = right;
        }
        return out;
    }
    if (m > 0) return gauss_moments([this](double tau) { return (*this)(tau); }, h, m);
    // First interval: int_0^h kappa(tau)(1 - tau/h)^j dtau in closed form.
    std::array<double, 4> out{};
    double factorial = 1.0;
    if (const auto* k = std::get_if<PowerLaw>(&impl_)) {
        const double ha = std::pow(h, k->alpha);
        for (int j = 0; j < 4; ++j) {
            if (j > 0) factorial *= j;
            out[j] = ha * factorial / std::tgamma(k->alpha + j + 1.0);
        }
        return out;
    }
    const auto& k = std::get<ScaledResolvent>(impl_);
    const double ha = std::pow(h, k.alpha);
    for (int j = 0; j < 4; ++j) {
        if (j > 0) factorial *= j;
        out[j] = ha * factorial * mittag_leffler(k.alpha, k.alpha + j + 1.0, -k.lambda * ha);
    }
    return out;
}

Kernel load_tabulated_kernel(std::istream& in) {
    std::vector<double> t;
    std::vector<double> k;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        ls >> std::ws;
        if (ls.eof()) continue;
        double a = 0.0;
        double b = 0.0;
        std::string rest;
        if (!(ls >> a >> b) || (ls >> rest)) throw ValidationError("kernel file line " + std::to_string(line_no) + ": expected two numbers");
        t.push_back(a);
        k.push_back(b);
    }
    return Kernel::tabulated(std::move(t), std::move(k));
}

Kernel load_tabulated_kernel(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open kernel file: " + path);
    return load_tabulated_kernel(in);
}

}  // namespace roughheston
