#pragma once

#include "structsums/structural_sums.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace structsums {

/// Exact rational with 64-bit numerator/denominator (the recurrence only ever
/// multiplies small integers; overflow throws).
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    double to_double() const { return double(num_) / double(den_); }
    std::string str() const;

    Rational operator-() const { return Rational(-num_, den_); }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Polynomial in the contrast parameter rho with rational coefficients,
/// stored sparsely as rho-power -> coefficient.
class RhoPoly {
public:
    RhoPoly() = default;
    static RhoPoly monomial(Rational c, int rho_power);

    void add(const Rational& c, int rho_power);
    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    double eval(double rho) const;
    RhoPoly times_rho() const;
    RhoPoly scaled(const Rational& c) const;
    std::string str() const;

private:
    std::map<int, Rational> terms_;
};

/// Symbolic coefficient B_q of the conductivity series: a linear combination
/// of structural sums of order exactly q, each multiplied by a rho-polynomial,
/// with the common factor pi^(-q). B_0 is the constant 1 (empty multi-order).
///
/// Seeds: B_0 = 1, B_1 = pi^-1 rho e_2, B_2 = pi^-2 rho^2 e_{2,2}; for q >= 3
/// every sum of B_{q-1} is rewritten by
///   e_{p1,...,pn} -> rho e_{2,p1,...,pn} - (p2/(p1-1)) e_{p1+1,p2+1,p3,...,pn}
/// and one pi^-1 is prepended.
struct SymbolicBq {
    int q = 0;
    int pi_power = 0; // the coefficient carries pi^(pi_power)
    std::map<MultiOrder, RhoPoly> terms;

    std::string str() const;
};

/// Build B_q (memoized internally; thread-safe).
const SymbolicBq& build_Bq(int q);

/// Numeric value of B_q on a configuration: structural sums are evaluated for
/// the canonical mirror representative and the mirror derived via the mirror
/// relation.
cplx eval_Bq(const SymbolicBq& bq, double rho, const DiskConfiguration& config,
             const EisensteinEvaluator& ev, SumCache& cache);

struct ConductivityResult {
    double lambda = 0.0;          // 1 + 2 rho nu sum_q Re(B_q) nu^q
    double imag_residual = 0.0;   // |Im| of the accumulated series
    double rho = 0.0;
    std::vector<double> partial;  // partial[q] = lambda truncated at order q
    std::vector<cplx> bq_values;  // numeric B_0..B_qmax
};

/// Effective conductivity of the composite modeled by the configuration,
/// truncated at q_max. lambda_f is the inclusion conductivity (matrix
/// normalized to 1); lambda_f <= 0 is a domain error.
ConductivityResult effective_conductivity(const DiskConfiguration& config, double lambda_f,
                                          int q_max, const EisensteinEvaluator& ev,
                                          SumCache& cache);

} // namespace structsums
