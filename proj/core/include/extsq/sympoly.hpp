#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "extsq/monomial.hpp"

namespace extsq {

/// Sparse multivariate polynomial in the Satake variables a1..an over
/// arbitrary-precision integers.
///
/// Terms are kept sorted in ascending lexicographic order of the exponent
/// tuple, with no zero coefficients, so equal polynomials are structurally
/// identical and serialization is deterministic.
class SymPoly {
public:
    struct Term {
        Monomial mono;
        mpz_class coeff;

        friend bool operator==(const Term&, const Term&) = default;
    };

    explicit SymPoly(std::size_t nvars);

    static SymPoly zero(std::size_t nvars) { return SymPoly(nvars); }
    static SymPoly one(std::size_t nvars);
    static SymPoly constant(std::size_t nvars, mpz_class value);
    static SymPoly from_monomial(Monomial mono, mpz_class coeff = 1);
    /// a_{var+1} as a polynomial.
    static SymPoly variable(std::size_t nvars, std::size_t var);
    /// Takes ownership of an unsorted, possibly duplicated term list.
    static SymPoly from_raw_terms(std::size_t nvars,
                                  std::vector<std::pair<Monomial::Key, mpz_class>> raw);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    /// Null when the monomial is absent.
    const mpz_class* coefficient(const Monomial& mono) const;
    std::uint32_t degree() const;

    /// Image under the rewrite a^v -> a^{v - min(v)*(1,..,1)}; fixed point of itself.
    SymPoly quotient_normalized() const;
    bool is_quotient_normal() const;

    std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

    /// Canonical text: ascending monomials, every term carries an explicit sign.
    std::string to_string() const;

    SymPoly& operator+=(const SymPoly& other);
    SymPoly& operator-=(const SymPoly& other);
    friend SymPoly operator+(const SymPoly& p, const SymPoly& q);
    friend SymPoly operator-(const SymPoly& p, const SymPoly& q);
    friend SymPoly operator-(const SymPoly& p);
    friend SymPoly operator*(const SymPoly& p, const SymPoly& q);
    friend SymPoly operator*(const SymPoly& p, const mpz_class& c);

    friend bool operator==(const SymPoly& p, const SymPoly& q) {
        return p.nvars_ == q.nvars_ && p.terms_ == q.terms_;
    }

private:
    std::size_t nvars_;
    std::vector<Term> terms_;
};

/// Distributive product, quotient-normalized on request.
SymPoly mul(const SymPoly& p, const SymPoly& q, bool normalize);

}  // namespace extsq
