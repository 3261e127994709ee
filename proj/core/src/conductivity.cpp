#include "structsums/conductivity.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace structsums {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    const __int128 w = static_cast<__int128>(a) * b;
    if (w > INT64_MAX || w < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(w);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    const __int128 w = static_cast<__int128>(a) + b;
    if (w > INT64_MAX || w < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(w);
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}

RhoPoly RhoPoly::monomial(Rational c, int rho_power) {
    RhoPoly p;
    p.add(c, rho_power);
    return p;
}

void RhoPoly::add(const Rational& c, int rho_power) {
    if (c.is_zero()) return;
    auto it = terms_.find(rho_power);
    if (it == terms_.end()) {
        terms_.emplace(rho_power, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

double RhoPoly::eval(double rho) const {
    double acc = 0.0;
    for (const auto& [k, c] : terms_) acc += c.to_double() * std::pow(rho, k);
    return acc;
}

RhoPoly RhoPoly::times_rho() const {
    RhoPoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k + 1, c);
    return out;
}

RhoPoly RhoPoly::scaled(const Rational& c) const {
    RhoPoly out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

std::string RhoPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        if (k > 0) s += "*rho^" + std::to_string(k);
    }
    return s;
}

std::string SymbolicBq::str() const {
    std::string s = "pi^" + std::to_string(pi_power) + " * (";
    bool first = true;
    for (const auto& [order, poly] : terms) {
        if (!first) s += " + ";
        first = false;
        s += "(" + poly.str() + ")*" + order.name();
    }
    s += ")";
    return s;
}

namespace {

SymbolicBq make_seed(int q) {
    SymbolicBq b;
    b.q = q;
    b.pi_power = -q;
    switch (q) {
    case 0: b.terms.emplace(MultiOrder{}, RhoPoly::monomial(Rational(1), 0)); break;
    case 1:
        b.terms.emplace(MultiOrder{{2}}, RhoPoly::monomial(Rational(1), 1));
        break;
    case 2:
        b.terms.emplace(MultiOrder{{2, 2}}, RhoPoly::monomial(Rational(1), 2));
        break;
    default: throw std::logic_error("make_seed: only q <= 2");
    }
    return b;
}

SymbolicBq apply_beta(const SymbolicBq& prev) {
    SymbolicBq next;
    next.q = prev.q + 1;
    next.pi_power = prev.pi_power - 1;
    for (const auto& [order, poly] : prev.terms) {
        const auto& p = order.values();
        if (p.size() < 2)
            throw std::logic_error("beta rule needs multi-orders of length >= 2");
        // rho * e_{2,p1,...,pn}
        std::vector<int> prepended;
        prepended.reserve(p.size() + 1);
        prepended.push_back(2);
        prepended.insert(prepended.end(), p.begin(), p.end());
        // -(p2/(p1-1)) * e_{p1+1,p2+1,p3,...,pn}
        std::vector<int> bumped = p;
        ++bumped[0];
        ++bumped[1];
        const Rational factor = Rational(-p[1], p[0] - 1);

        auto accumulate = [&next](MultiOrder key, const RhoPoly& add) {
            auto [it, inserted] = next.terms.emplace(std::move(key), add);
            if (!inserted)
                for (const auto& [k, c] : add.terms()) it->second.add(c, k);
        };
        accumulate(MultiOrder(std::move(prepended)), poly.times_rho());
        accumulate(MultiOrder(std::move(bumped)), poly.scaled(factor));
    }
    return next;
}

} // namespace

const SymbolicBq& build_Bq(int q) {
    if (q < 0) throw std::invalid_argument("build_Bq: q must be >= 0");
    static std::mutex mutex;
    // deque: growing the memo table must not invalidate returned references
    static std::deque<SymbolicBq> table;
    std::lock_guard<std::mutex> lock(mutex);
    if (table.empty())
        for (int i = 0; i <= 2; ++i) table.push_back(make_seed(i));
    while (static_cast<int>(table.size()) <= q) table.push_back(apply_beta(table.back()));
    return table[static_cast<std::size_t>(q)];
}

cplx eval_Bq(const SymbolicBq& bq, double rho, const DiskConfiguration& config,
             const EisensteinEvaluator& ev, SumCache& cache) {
    const double pi_factor = std::pow(std::numbers::pi, bq.pi_power);
    cplx acc = 0.0;
    for (const auto& [order, poly] : bq.terms) {
        const MultiOrder canon = order.canonical();
        cplx value = eval_sum(config, canon, ev, cache);
        if (!(canon == order)) value = mirror_value(value, canon);
        acc += poly.eval(rho) * value;
    }
    return pi_factor * acc;
}

ConductivityResult effective_conductivity(const DiskConfiguration& config, double lambda_f,
                                          int q_max, const EisensteinEvaluator& ev,
                                          SumCache& cache) {
    if (!(lambda_f > 0.0))
        throw std::domain_error("effective_conductivity: lambda_f must be positive");
    if (q_max < 0) throw std::invalid_argument("effective_conductivity: q_max must be >= 0");

    ConductivityResult out;
    out.rho = (lambda_f - 1.0) / (lambda_f + 1.0);
    const double nu = config.concentration();

    cplx series = 0.0;
    double nu_pow = 1.0;
    for (int q = 0; q <= q_max; ++q) {
        const cplx bq = eval_Bq(build_Bq(q), out.rho, config, ev, cache);
        out.bq_values.push_back(bq);
        series += bq * nu_pow;
        nu_pow *= nu;
        out.partial.push_back(1.0 + 2.0 * out.rho * nu * series.real());
    }
    out.lambda = out.partial.back();
    out.imag_residual = std::abs(2.0 * out.rho * nu * series.imag());
    return out;
}

} // namespace structsums
