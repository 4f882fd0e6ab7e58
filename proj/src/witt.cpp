#include "char1/witt.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "char1/errors.hpp"
#include "char1/numtheory.hpp"

namespace char1 {

namespace {

std::uint64_t upow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

void check_same(const WittVec& a, const WittVec& b) {
    if (a.p != b.p) throw DomainError("witt: mismatched primes");
    if (a.length() != b.length()) throw DomainError("witt: mismatched lengths");
}

// Largest k with p^k | den, and whether den is exactly p^k.
std::pair<int, bool> p_valuation(std::int64_t den, int p) {
    int k = 0;
    while (den % p == 0) den /= p, ++k;
    return {k, den == 1};
}

std::pair<std::int64_t, int> reduced_exponent(Rational e, int p) {
    if (e.den <= 0 || e.num < 0) throw DomainError("exponent must be a non-negative rational");
    const std::int64_t g = nt::gcd(e.num, e.den);
    const std::int64_t num = e.num / g, den = e.den / g;
    auto [k, exact] = p_valuation(den, p);
    if (!exact) throw DomainError("exponent denominator is not a power of p");
    if (k > 20) throw DomainError("exponent denominator too large");
    return {num, k};
}

}  // namespace

WittVec witt_zero(int p, std::size_t length) {
    if (length == 0) throw DomainError("witt: length must be positive");
    return WittVec{p, std::vector<FracExpPoly>(length, FracExpPoly(p))};
}

std::vector<FracExpPoly> ghost(const WittVec& a) {
    const int p = a.p;
    std::vector<FracExpPoly> gh;
    for (std::size_t i = 0; i < a.length(); ++i) {
        FracExpPoly g(p);
        mpz_class pj = 1;
        for (std::size_t j = 0; j <= i; ++j, pj *= p)
            g += a.components[j].pow(upow(static_cast<std::uint64_t>(p), static_cast<int>(i - j))) * pj;
        gh.push_back(std::move(g));
    }
    return gh;
}

WittVec from_ghost(int p, const std::vector<FracExpPoly>& gh) {
    WittVec a{p, {}};
    for (std::size_t i = 0; i < gh.size(); ++i) {
        FracExpPoly rest = gh[i];
        mpz_class pj = 1;
        for (std::size_t j = 0; j < i; ++j, pj *= p)
            rest = rest - a.components[j].pow(upow(static_cast<std::uint64_t>(p), static_cast<int>(i - j))) * pj;
        a.components.push_back(rest.div_exact(pj));
    }
    return a;
}

WittVec witt_add(const WittVec& a, const WittVec& b) {
    check_same(a, b);
    auto ga = ghost(a), gb = ghost(b);
    for (std::size_t i = 0; i < ga.size(); ++i) ga[i] += gb[i];
    return from_ghost(a.p, ga);
}

WittVec witt_mul(const WittVec& a, const WittVec& b) {
    check_same(a, b);
    auto ga = ghost(a), gb = ghost(b);
    for (std::size_t i = 0; i < ga.size(); ++i) ga[i] = ga[i] * gb[i];
    return from_ghost(a.p, ga);
}

WittVec teichmuller(const FracExpPoly& monomial, std::size_t length) {
    if (!monomial.is_monomial()) throw DomainError("teichmuller: input is not a monomial");
    WittVec v = witt_zero(monomial.p(), length);
    v.components[0] = monomial;
    return v;
}

int WCoeffTable::w(int n, std::int64_t k) const {
    auto it = entries.find({n, k});
    return it == entries.end() ? 0 : it->second;
}

WCoeffTable witt_coeffs(int p, int N) {
    if (p != 2 && p != 3 && p != 5 && p != 7) throw DomainError("witt_coeffs: p must be 2, 3, 5 or 7");
    if (N < 1 || N > 3) throw DomainError("witt_coeffs: N must be in 1..3");
    const auto len = static_cast<std::size_t>(N) + 1;
    auto sum = witt_add(teichmuller(FracExpPoly::monomial(p, 1, 1), len),
                        teichmuller(FracExpPoly::constant(p, 1), len));
    if (!(sum.components[0] == FracExpPoly::monomial(p, 1, 1) + FracExpPoly::constant(p, 1)))
        throw InternalError("witt_coeffs: s_0 differs from x + 1");
    WCoeffTable t{p, N, {}};
    for (int n = 1; n <= N; ++n) {
        const auto red = sum.components[static_cast<std::size_t>(n)].mod_p();
        if (red.denom_exp() != 0) throw InternalError("witt_coeffs: fractional exponent in component");
        const auto pn = static_cast<std::int64_t>(upow(static_cast<std::uint64_t>(p), n));
        for (auto& [e, c] : red.terms()) {
            if (e <= 0 || e >= pn)
                throw InternalError("witt_coeffs: unexpected exponent " + std::to_string(e) + " in component " +
                                    std::to_string(n));
            t.entries[{n, e}] = static_cast<int>(c.get_si());
        }
    }
    return t;
}

FpSeries wp_map(const WCoeffTable& table, Rational alpha) {
    if (alpha.den <= 0) throw DomainError("wp_map: bad denominator");
    if (alpha.num < 0 || alpha.num > alpha.den) throw DomainError("wp_map: alpha outside [0, 1]");
    FpSeries out(static_cast<std::size_t>(table.N) + 1, 0);
    if (alpha.num == 0 || alpha.num == alpha.den) {
        out[0] = 1;
        return out;
    }
    auto [a, m] = reduced_exponent(alpha, table.p);
    if (m > table.N) throw DomainError("wp_map: denominator exceeds p^N");
    // a / p^m = (a p^(n-m)) / p^n for n >= m
    for (int n = m; n <= table.N; ++n)
        out[static_cast<std::size_t>(n)] =
            table.w(n, a * static_cast<std::int64_t>(upow(static_cast<std::uint64_t>(table.p), n - m)));
    return out;
}

std::string format_series(const FpSeries& s) {
    std::ostringstream out;
    bool any = false;
    for (std::size_t n = 0; n < s.size(); ++n) {
        if (s[n] == 0) continue;
        if (any) out << '+';
        any = true;
        if (n == 0) {
            out << s[n];
            continue;
        }
        if (s[n] != 1) out << s[n];
        out << 'T';
        if (n > 1) out << '^' << n;
    }
    return any ? out.str() : "0";
}

FpSeries parse_series(const std::string& text) {
    FpSeries out;
    auto put = [&](std::size_t n, int c) {
        if (out.size() <= n) out.resize(n + 1, 0);
        out[n] += c;
    };
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw ValidationError("parse_series: empty");
    std::stringstream ss(t);
    std::string term;
    while (std::getline(ss, term, '+')) {
        if (term.empty()) throw ValidationError("parse_series: empty term in '" + text + "'");
        std::size_t pos = 0;
        int c = 1;
        bool has_digits = std::isdigit(static_cast<unsigned char>(term[0])) != 0;
        if (has_digits) c = std::stoi(term, &pos);
        if (pos == term.size()) {
            put(0, c);
            continue;
        }
        if (term[pos] != 'T') throw ValidationError("parse_series: bad term '" + term + "'");
        ++pos;
        std::size_t n = 1;
        if (pos < term.size()) {
            if (term[pos] != '^') throw ValidationError("parse_series: bad term '" + term + "'");
            std::size_t used = 0;
            n = static_cast<std::size_t>(std::stoul(term.substr(pos + 1), &used));
            if (pos + 1 + used != term.size()) throw ValidationError("parse_series: bad term '" + term + "'");
        }
        put(n, c);
    }
    return out;
}

std::vector<std::pair<Rational, FpSeries>> witt_table_rows(const WCoeffTable& table) {
    const auto pn = static_cast<std::int64_t>(upow(static_cast<std::uint64_t>(table.p), table.N));
    std::vector<std::pair<Rational, FpSeries>> rows;
    for (std::int64_t k = 1; k <= pn; ++k) {
        const std::int64_t g = nt::gcd(k, pn);
        Rational a{k / g, pn / g};
        rows.emplace_back(a, wp_map(table, a));
    }
    return rows;
}

void write_witt_table_csv(const WCoeffTable& table, std::ostream& out) {
    out << "alpha_num,alpha_den,series\n";
    for (auto& [a, s] : witt_table_rows(table)) out << a.num << ',' << a.den << ',' << format_series(s) << '\n';
}

DeformedSum deformed_add(const Monomial& x, const Monomial& y, const WCoeffTable& table) {
    const int p = table.p;
    auto [xn, xk] = reduced_exponent(x.exponent, p);
    auto [yn, yk] = reduced_exponent(y.exponent, p);
    const int D = std::max(xk, yk);
    const auto up = [&](std::int64_t num, int k) {
        return num * static_cast<std::int64_t>(upow(static_cast<std::uint64_t>(p), D - k));
    };
    const std::int64_t xe = up(xn, xk), ye = up(yn, yk);  // numerators over p^D
    const std::int64_t c1 = nt::mod(x.coeff, p), c2 = nt::mod(y.coeff, p);

    DeformedSum out;
    out.push_back((FracExpPoly::monomial(p, c1, xe, D) + FracExpPoly::monomial(p, c2, ye, D)).mod_p());
    for (int n = 1; n <= table.N; ++n) {
        const auto pn = static_cast<std::int64_t>(upow(static_cast<std::uint64_t>(p), n));
        FracExpPoly term(p, D + n);
        for (std::int64_t k = 1; k < pn; ++k) {
            const int w = table.w(n, k);
            if (w == 0) continue;
            // x^(k/p^n) y^(1-k/p^n), with c^(1/p^n) = c in F_p
            const auto c = static_cast<std::int64_t>(w) * static_cast<std::int64_t>(nt::pow_mod(static_cast<std::uint64_t>(c1), static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(p))) % p *
                           static_cast<std::int64_t>(nt::pow_mod(static_cast<std::uint64_t>(c2), static_cast<std::uint64_t>(pn - k), static_cast<std::uint64_t>(p))) % p;
            term += FracExpPoly::monomial(p, c, k * xe + (pn - k) * ye, D + n);
        }
        out.push_back(term.mod_p().normalized());
    }
    return out;
}

DeformedSum deformed_add_oracle(const Monomial& x, const Monomial& y, int p, int N) {
    if (!nt::is_prime(p)) throw DomainError("deformed_add_oracle: p must be prime");
    if (N < 0 || N > 3) throw DomainError("deformed_add_oracle: N must be in 0..3");
    auto [xn, xk] = reduced_exponent(x.exponent, p);
    auto [yn, yk] = reduced_exponent(y.exponent, p);
    const auto len = static_cast<std::size_t>(N) + 1;
    const auto xm = FracExpPoly::monomial(p, nt::mod(x.coeff, p), xn, xk);
    const auto ym = FracExpPoly::monomial(p, nt::mod(y.coeff, p), yn, yk);
    // a zero coefficient is the zero Witt vector, not a monomial
    const WittVec tx = xm.is_zero() ? witt_zero(p, len) : teichmuller(xm, len);
    const WittVec ty = ym.is_zero() ? witt_zero(p, len) : teichmuller(ym, len);
    const WittVec sum = witt_add(tx, ty);
    DeformedSum out;
    for (std::size_t n = 0; n < len; ++n) out.push_back(sum.components[n].mod_p().root_exponents(static_cast<int>(n)));
    return out;
}

}  // namespace char1
