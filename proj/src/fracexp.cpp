#include "char1/fracexp.hpp"

#include <algorithm>
#include <sstream>

#include "char1/errors.hpp"
#include "char1/numtheory.hpp"

namespace char1 {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("exponent numerator overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("exponent numerator overflow");
    return r;
}

std::int64_t scale(int p, int k) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r = checked_mul(r, p);
    return r;
}

}  // namespace

FracExpPoly::FracExpPoly(int p, int denom_exp) : p_(p), d_(denom_exp) {
    if (!nt::is_prime(p)) throw DomainError("FracExpPoly: p must be prime");
    if (denom_exp < 0 || denom_exp > 40) throw DomainError("FracExpPoly: denominator exponent out of range");
}

FracExpPoly FracExpPoly::constant(int p, const mpz_class& c) { return monomial(p, c, 0, 0); }

FracExpPoly FracExpPoly::monomial(int p, const mpz_class& c, std::int64_t num, int denom_exp) {
    if (num < 0) throw DomainError("FracExpPoly: negative exponent");
    FracExpPoly r(p, denom_exp);
    r.add_term(num, c);
    return r;
}

void FracExpPoly::add_term(std::int64_t e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class FracExpPoly::coefficient(std::int64_t num, std::int64_t den) const {
    if (den < 1) throw DomainError("coefficient: bad denominator");
    // bring num/den over p^d
    int k = 0;
    std::int64_t dd = den;
    while (dd % p_ == 0) dd /= p_, ++k;
    if (dd != 1) throw DomainError("coefficient: denominator is not a power of p");
    if (k > d_) {
        std::int64_t excess = scale(p_, k - d_);
        if (num % excess != 0) return 0;
        num /= excess;
    } else {
        num = checked_mul(num, scale(p_, d_ - k));
    }
    auto it = terms_.find(num);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

FracExpPoly FracExpPoly::with_denom_exp(int d) const {
    if (d < d_) throw DomainError("with_denom_exp: cannot lower the denominator");
    FracExpPoly r(p_, d);
    const std::int64_t f = scale(p_, d - d_);
    for (auto& [e, c] : terms_) r.terms_.emplace(checked_mul(e, f), c);
    return r;
}

FracExpPoly FracExpPoly::normalized() const {
    int d = d_;
    FracExpPoly r = *this;
    while (d > 0 && std::all_of(r.terms_.begin(), r.terms_.end(), [&](auto& t) { return t.first % p_ == 0; })) {
        FracExpPoly s(p_, d - 1);
        for (auto& [e, c] : r.terms_) s.terms_.emplace(e / p_, c);
        r = std::move(s);
        --d;
    }
    return r;
}

FracExpPoly FracExpPoly::operator+(const FracExpPoly& o) const {
    if (o.p_ != p_) throw DomainError("FracExpPoly: mismatched p");
    const int d = std::max(d_, o.d_);
    FracExpPoly r = with_denom_exp(d);
    for (auto& [e, c] : o.with_denom_exp(d).terms_) r.add_term(e, c);
    return r;
}

FracExpPoly FracExpPoly::operator-(const FracExpPoly& o) const { return *this + o * mpz_class(-1); }

FracExpPoly FracExpPoly::operator*(const FracExpPoly& o) const {
    if (o.p_ != p_) throw DomainError("FracExpPoly: mismatched p");
    const int d = std::max(d_, o.d_);
    const FracExpPoly a = with_denom_exp(d), b = o.with_denom_exp(d);
    FracExpPoly r(p_, d);
    mpz_class t;
    for (auto& [e1, c1] : a.terms_)
        for (auto& [e2, c2] : b.terms_) {
            t = c1 * c2;
            r.add_term(checked_add(e1, e2), t);
        }
    return r;
}

FracExpPoly FracExpPoly::operator*(const mpz_class& c) const {
    FracExpPoly r(p_, d_);
    if (c == 0) return r;
    for (auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

FracExpPoly FracExpPoly::pow(std::uint64_t k) const {
    FracExpPoly r = constant(p_, 1).with_denom_exp(d_), b = *this;
    for (; k > 0; k >>= 1) {
        if (k & 1) r = r * b;
        if (k > 1) b = b * b;
    }
    return r;
}

FracExpPoly FracExpPoly::mod_p() const {
    FracExpPoly r(p_, d_);
    mpz_class m;
    for (auto& [e, c] : terms_) {
        mpz_fdiv_r_ui(m.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p_));
        r.add_term(e, m);
    }
    return r;
}

FracExpPoly FracExpPoly::div_exact(const mpz_class& c) const {
    if (c == 0) throw DomainError("div_exact: division by zero");
    FracExpPoly r(p_, d_);
    for (auto& [e, v] : terms_) {
        if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t()))
            throw InternalError("div_exact: coefficient " + v.get_str() + " not divisible by " + c.get_str());
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
        r.terms_.emplace(e, q);
    }
    return r;
}

FracExpPoly FracExpPoly::root_exponents(int k) const {
    if (k < 0) throw DomainError("root_exponents: negative k");
    FracExpPoly r(p_, d_ + k);
    r.terms_ = terms_;
    return r.normalized();
}

FracExpPoly FracExpPoly::frobenius_exponents() const {
    if (d_ > 0) {
        FracExpPoly r(p_, d_ - 1);
        r.terms_ = terms_;
        return r.normalized();
    }
    FracExpPoly r(p_, 0);
    for (auto& [e, c] : terms_) r.terms_.emplace(checked_mul(e, p_), c);
    return r;
}

bool FracExpPoly::operator==(const FracExpPoly& o) const {
    if (o.p_ != p_) return false;
    const int d = std::max(d_, o.d_);
    return with_denom_exp(d).terms_ == o.with_denom_exp(d).terms_;
}

std::string FracExpPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    const FracExpPoly n = normalized();
    const std::int64_t den = scale(p_, n.d_);
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : n.terms_) {
        if (!first) out << (c < 0 ? "-" : "+");
        else if (c < 0) out << "-";
        first = false;
        mpz_class a = abs(c);
        if (e == 0) {
            out << a.get_str();
            continue;
        }
        if (a != 1) out << a.get_str() << "*";
        out << var;
        const std::int64_t g = nt::gcd(e, den);
        if (e / g != 1 || den / g != 1) {
            out << "^";
            if (den / g == 1) out << e / g;
            else out << "(" << e / g << "/" << den / g << ")";
        }
    }
    return out.str();
}

}  // namespace char1
