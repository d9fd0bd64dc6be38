#include "indexlab/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "indexlab/errors.hpp"

namespace indexlab {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, unsigned degree)
{
    std::vector<Integer> v(degree + 1, Integer(0));
    v[degree] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::operator()(const Integer& x) const
{
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

Integer IntPoly::content() const { return gcd_all(coeffs_); }

IntPoly IntPoly::primitive_part() const
{
    if (is_zero()) return {};
    Integer c = content();
    if (leading() < 0) c = -c;
    return divided_exactly(c);
}

IntPoly IntPoly::shifted(const Integer& c) const
{
    // Horner in the ring Z[x]: result = (...(a_n)(x+c) + a_{n-1})(x+c) + ...
    IntPoly acc;
    const IntPoly lin({c, Integer(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a)
{
    std::vector<Integer> r(a.coeffs_);
    for (auto& c : r) c = -c;
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(r));
}

IntPoly operator*(const Integer& c, const IntPoly& a)
{
    std::vector<Integer> r(a.coeffs_);
    for (auto& x : r) x *= c;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::divided_exactly(const Integer& c) const
{
    std::vector<Integer> r(coeffs_);
    for (auto& x : r) {
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
            throw Error(ErrorKind::InvalidInput, "inexact polynomial division by " + c.get_str());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return IntPoly(std::move(r));
}

std::string IntPoly::to_string(std::string_view var) const
{
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic)
{
    if (!monic.is_monic()) throw Error(ErrorKind::InvalidInput, "divisor must be monic");
    std::vector<Integer> rem(a.coeffs());
    const int db = monic.degree();
    if (a.degree() < db) return {IntPoly{}, a};
    std::vector<Integer> quo(static_cast<std::size_t>(a.degree() - db + 1), Integer(0));
    for (int i = a.degree(); i >= db; --i) {
        Integer q = rem[static_cast<std::size_t>(i)];
        if (q == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * monic.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "pseudo-division by zero");
    const int db = b.degree();
    if (a.degree() < db) return a;
    std::vector<Integer> r(a.coeffs());
    const Integer& lb = b.leading();
    int delta = a.degree() - db + 1;
    for (int i = a.degree(); i >= db; --i) {
        Integer t = r[static_cast<std::size_t>(i)];
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
        r.pop_back();
        --delta;
    }
    // Remaining multiplier so that the total factor is lc(b)^(deg a - deg b + 1).
    Integer f = ipow(lb, static_cast<unsigned long>(delta));
    for (auto& c : r) c *= f;
    return IntPoly(std::move(r));
}

Integer poly_resultant(const IntPoly& f, const IntPoly& g)
{
    if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::InvalidInput, "resultant of the zero polynomial");
    if (f.degree() == 0) return ipow(f.leading(), static_cast<unsigned long>(g.degree()));
    if (g.degree() == 0) return ipow(g.leading(), static_cast<unsigned long>(f.degree()));

    IntPoly a = f, b = g;
    Integer s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -1;
    }
    const Integer ca = a.content(), cb = b.content();
    a = a.divided_exactly(ca);
    b = b.divided_exactly(cb);
    const Integer t = ipow(ca, static_cast<unsigned long>(b.degree())) * ipow(cb, static_cast<unsigned long>(a.degree()));
    Integer gg = 1, h = 1;
    while (true) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) return 0;
        a = std::move(b);
        b = r.divided_exactly(gg * ipow(h, static_cast<unsigned long>(delta)));
        gg = a.leading();
        // h <- g^delta / h^(delta-1)
        if (delta == 0) {
            // h^1 * g^0 = h
        } else {
            Integer num = ipow(gg, static_cast<unsigned long>(delta));
            Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.degree() == 0) break;
    }
    const int da = a.degree();
    Integer num = ipow(b.leading(), static_cast<unsigned long>(da));
    Integer den = ipow(h, static_cast<unsigned long>(da - 1));
    Integer hh;
    mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s * t * hh;
}

Integer poly_discriminant(const IntPoly& f)
{
    const int n = f.degree();
    if (n < 1) throw Error(ErrorKind::InvalidDegree, "discriminant needs degree >= 1");
    Integer r = poly_resultant(f, f.derivative());
    Integer d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    if ((n * (n - 1) / 2) % 2 == 1) d = -d;
    return d;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    IntPoly parse()
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '[') return parse_list();
        return parse_expression();
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw Error(ErrorKind::ParseError, why + " in '" + std::string(text_) + "' at offset " + std::to_string(pos_));
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    std::string digits()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Integer signed_integer()
    {
        skip_ws();
        bool neg = false;
        if (peek('-') || peek('+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        std::string d = digits();
        if (d.empty()) fail("expected integer");
        Integer v(d);
        return neg ? Integer(-v) : v;
    }

    IntPoly parse_list()
    {
        ++pos_;  // '['
        std::vector<Integer> coeffs;
        if (peek(']')) {
            ++pos_;
        } else {
            while (true) {
                coeffs.push_back(signed_integer());
                if (peek(',')) {
                    ++pos_;
                    continue;
                }
                if (peek(']')) {
                    ++pos_;
                    break;
                }
                fail("expected ',' or ']'");
            }
        }
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters");
        return IntPoly(std::move(coeffs));
    }

    IntPoly parse_expression()
    {
        std::vector<Integer> coeffs;
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == text_.size()) {
                if (first) fail("empty polynomial");
                break;
            }
            bool neg = false;
            if (peek('+') || peek('-')) {
                neg = text_[pos_] == '-';
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Integer c = 1;
            unsigned deg = 0;
            bool have_coeff = false;
            std::string d = digits();
            if (!d.empty()) {
                c = Integer(d);
                have_coeff = true;
                if (peek('*')) {
                    ++pos_;
                    skip_ws();
                    if (!(pos_ < text_.size() && text_[pos_] == 'x')) fail("expected 'x' after '*'");
                }
            }
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == 'x') {
                ++pos_;
                deg = 1;
                if (peek('^')) {
                    ++pos_;
                    std::string e = digits();
                    if (e.empty()) fail("expected exponent");
                    if (e.size() > 3) fail("exponent too large");
                    deg = static_cast<unsigned>(std::stoul(e));
                }
            } else if (!have_coeff) {
                fail("expected term");
            }
            if (coeffs.size() <= deg) coeffs.resize(deg + 1, Integer(0));
            coeffs[deg] += neg ? Integer(-c) : c;
        }
        return IntPoly(std::move(coeffs));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace indexlab
