#include "extsq/sympoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace extsq {

namespace {

struct KeyHash {
    std::size_t operator()(Monomial::Key k) const {
        std::uint64_t lo = static_cast<std::uint64_t>(k);
        std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
        return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
};

using Accumulator = std::unordered_map<Monomial::Key, mpz_class, KeyHash>;

void require_same_nvars(const SymPoly& p, const SymPoly& q, const char* op) {
    if (p.nvars() != q.nvars())
        throw std::invalid_argument(std::string(op) + ": mismatched variable counts");
}

}  // namespace

SymPoly::SymPoly(std::size_t nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > Monomial::max_vars)
        throw std::invalid_argument("SymPoly: variable count must be in 1.." +
                                    std::to_string(Monomial::max_vars));
}

SymPoly SymPoly::one(std::size_t nvars) { return constant(nvars, 1); }

SymPoly SymPoly::constant(std::size_t nvars, mpz_class value) {
    SymPoly p(nvars);
    if (value != 0) p.terms_.push_back({Monomial(nvars), std::move(value)});
    return p;
}

SymPoly SymPoly::from_monomial(Monomial mono, mpz_class coeff) {
    SymPoly p(mono.nvars());
    if (coeff != 0) p.terms_.push_back({std::move(mono), std::move(coeff)});
    return p;
}

SymPoly SymPoly::variable(std::size_t nvars, std::size_t var) {
    return from_monomial(Monomial::unit(nvars, var));
}

SymPoly SymPoly::from_raw_terms(std::size_t nvars,
                                std::vector<std::pair<Monomial::Key, mpz_class>> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SymPoly p(nvars);
    p.terms_.reserve(raw.size());
    for (auto& [key, coeff] : raw) {
        if (!p.terms_.empty() && p.terms_.back().mono.key() == key) {
            p.terms_.back().coeff += coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (coeff != 0) {
            p.terms_.push_back({Monomial::from_key(nvars, key), std::move(coeff)});
        }
    }
    return p;
}

bool SymPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_constant() && terms_[0].coeff == 1;
}

const mpz_class* SymPoly::coefficient(const Monomial& mono) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mono.key(),
                               [](const Term& t, Monomial::Key k) { return t.mono.key() < k; });
    if (it == terms_.end() || it->mono.key() != mono.key()) return nullptr;
    return &it->coeff;
}

std::uint32_t SymPoly::degree() const {
    std::uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

SymPoly SymPoly::quotient_normalized() const {
    if (is_quotient_normal()) return *this;
    std::vector<std::pair<Monomial::Key, mpz_class>> raw;
    raw.reserve(terms_.size());
    for (const Term& t : terms_) raw.emplace_back(t.mono.normalized().key(), t.coeff);
    return from_raw_terms(nvars_, std::move(raw));
}

bool SymPoly::is_quotient_normal() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.mono.is_normal(); });
}

std::complex<double> SymPoly::evaluate(std::span<const std::complex<double>> point) const {
    if (point.size() != nvars_)
        throw std::invalid_argument("SymPoly::evaluate: point has wrong dimension");
    std::complex<double> total = 0.0;
    for (const Term& t : terms_) {
        std::complex<double> value = t.coeff.get_d();
        for (std::size_t i = 0; i < nvars_; ++i) {
            std::uint32_t e = t.mono.exponent(i);
            for (std::uint32_t j = 0; j < e; ++j) value *= point[i];
        }
        total += value;
    }
    return total;
}

std::string SymPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const Term& t : terms_) {
        if (!out.empty()) out += ' ';
        out += (t.coeff < 0) ? '-' : '+';
        mpz_class mag = abs(t.coeff);
        if (t.mono.is_constant()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += t.mono.to_string();
        }
    }
    return out;
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
    *this = *this + other;
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
    *this = *this - other;
    return *this;
}

SymPoly operator+(const SymPoly& p, const SymPoly& q) {
    require_same_nvars(p, q, "poly add");
    SymPoly out(p.nvars_);
    out.terms_.reserve(p.terms_.size() + q.terms_.size());
    auto a = p.terms_.begin(), b = q.terms_.begin();
    while (a != p.terms_.end() && b != q.terms_.end()) {
        if (a->mono.key() < b->mono.key()) {
            out.terms_.push_back(*a++);
        } else if (b->mono.key() < a->mono.key()) {
            out.terms_.push_back(*b++);
        } else {
            mpz_class c = a->coeff + b->coeff;
            if (c != 0) out.terms_.push_back({a->mono, std::move(c)});
            ++a, ++b;
        }
    }
    out.terms_.insert(out.terms_.end(), a, p.terms_.end());
    out.terms_.insert(out.terms_.end(), b, q.terms_.end());
    return out;
}

SymPoly operator-(const SymPoly& p) {
    SymPoly out = p;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

SymPoly operator-(const SymPoly& p, const SymPoly& q) { return p + (-q); }

SymPoly operator*(const SymPoly& p, const SymPoly& q) { return mul(p, q, false); }

SymPoly operator*(const SymPoly& p, const mpz_class& c) {
    if (c == 0) return SymPoly::zero(p.nvars());
    SymPoly out = p;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

SymPoly mul(const SymPoly& p, const SymPoly& q, bool normalize) {
    require_same_nvars(p, q, "poly mul");
    const std::size_t nvars = p.nvars();
    if (p.is_zero() || q.is_zero()) return SymPoly::zero(nvars);

    Accumulator acc;
    acc.reserve(p.term_count() + q.term_count());
    for (const auto& a : p.terms()) {
        for (const auto& b : q.terms()) {
            Monomial::Key key = Monomial::checked_key_product(a.mono.key(), b.mono.key(), nvars);
            mpz_class& slot = acc[key];
            mpz_addmul(slot.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
        }
    }
    std::vector<std::pair<Monomial::Key, mpz_class>> raw;
    raw.reserve(acc.size());
    for (auto& [key, coeff] : acc) raw.emplace_back(key, std::move(coeff));
    SymPoly out = SymPoly::from_raw_terms(nvars, std::move(raw));
    return normalize ? out.quotient_normalized() : out;
}

}  // namespace extsq
