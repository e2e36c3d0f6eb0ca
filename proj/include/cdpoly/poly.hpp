#ifndef CDPOLY_POLY_HPP
#define CDPOLY_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

/// "num/den" (or just "num" for integers).
inline std::string rational_to_string(const Rational& r)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts "a", "-a", "a/b".
inline Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    if (text.empty() || slash == 0 || slash + 1 == text.size())
        throw std::invalid_argument("not a rational number: '" + text + "'");
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

namespace detail {

// Appends one signed term to a rendering in progress.
template <class Coef>
void append_term(std::string& out, const Coef& c, const std::string& monomial)
{
    const bool negative = c < 0;
    Coef mag = negative ? Coef(-c) : c;
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (monomial.empty()) {
        if constexpr (std::is_same_v<Coef, Rational>) out += rational_to_string(mag);
        else out += mag.str();
    } else if (mag != 1) {
        if constexpr (std::is_same_v<Coef, Rational>) out += rational_to_string(mag);
        else out += mag.str();
        out += monomial;
    } else {
        out += monomial;
    }
}

inline std::string power(const char* var, int k)
{
    if (k == 0) return "";
    if (k == 1) return var;
    return std::string(var) + "^" + std::to_string(k);
}

}  // namespace detail

/// Dense univariate polynomial with big-integer coefficients; coefficient k
/// multiplies x^k. No trailing zeros are ever stored.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
    UniPoly(std::initializer_list<long long> coeffs)
    {
        c_.reserve(coeffs.size());
        for (long long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static UniPoly constant(BigInt c) { return UniPoly(std::vector<BigInt>{std::move(c)}); }
    static UniPoly one() { return constant(1); }
    /// c * x^k
    static UniPoly monomial(BigInt c, int k)
    {
        std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
        v[k] = std::move(c);
        return UniPoly(std::move(v));
    }

    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt coefficient(int k) const
    {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : BigInt(0);
    }
    const BigInt& leading() const
    {
        if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    UniPoly& operator+=(const UniPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a)
    {
        for (auto& v : a.c_) v = -v;
        return a;
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(out));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend UniPoly operator*(UniPoly a, const BigInt& s)
    {
        if (s == 0) return {};
        for (auto& v : a.c_) v *= s;
        return a;
    }
    friend UniPoly operator*(const BigInt& s, UniPoly a) { return std::move(a) * s; }

    /// p * x^k
    UniPoly shifted(int k) const
    {
        if (is_zero() || k == 0) return *this;
        std::vector<BigInt> v(static_cast<std::size_t>(k), BigInt(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return UniPoly(std::move(v));
    }

    UniPoly derivative() const
    {
        if (c_.size() <= 1) return {};
        std::vector<BigInt> v(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<long long>(k);
        return UniPoly(std::move(v));
    }

    /// Horner evaluation.
    Rational evaluate(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }
    BigInt evaluate(const BigInt& x) const
    {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    bool operator==(const UniPoly&) const = default;

    /// Ascending exponents: "1 + 4x + 3x^2 + x^3", "-1 + x^2", "0".
    std::string to_string() const
    {
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) detail::append_term(out, c_[k], detail::power("x", static_cast<int>(k)));
        return out.empty() ? "0" : out;
    }

private:
    void normalize()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

inline UniPoly pow(const UniPoly& p, int k)
{
    UniPoly out = UniPoly::one();
    for (int i = 0; i < k; ++i) out *= p;
    return out;
}

/// Sparse polynomial in x and y: (i, j) -> coefficient of x^i y^j.
/// Zero coefficients are never stored.
class BiPoly {
public:
    using Exponents = std::pair<int, int>;
    using Terms = std::map<Exponents, BigInt>;

    BiPoly() = default;

    static BiPoly monomial(BigInt c, int i, int j)
    {
        BiPoly p;
        if (c != 0) p.t_.emplace(Exponents{i, j}, std::move(c));
        return p;
    }

    /// x^i y^j - x^j y^i
    static BiPoly antisymmetric(int i, int j)
    {
        BiPoly p = monomial(1, i, j);
        p.add_term(i == j ? Exponents{i, j} : Exponents{j, i}, BigInt(-1));
        return p;
    }

    static BiPoly embed_x(const UniPoly& p)
    {
        BiPoly out;
        for (int k = 0; k <= p.degree(); ++k)
            if (p.coeffs()[k] != 0) out.t_.emplace(Exponents{k, 0}, p.coeffs()[k]);
        return out;
    }
    static BiPoly embed_y(const UniPoly& p)
    {
        BiPoly out;
        for (int k = 0; k <= p.degree(); ++k)
            if (p.coeffs()[k] != 0) out.t_.emplace(Exponents{0, k}, p.coeffs()[k]);
        return out;
    }
    /// p(x) * q(y)
    static BiPoly outer(const UniPoly& p, const UniPoly& q)
    {
        BiPoly out;
        for (int i = 0; i <= p.degree(); ++i) {
            if (p.coeffs()[i] == 0) continue;
            for (int j = 0; j <= q.degree(); ++j)
                if (q.coeffs()[j] != 0) out.t_.emplace_hint(out.t_.end(), Exponents{i, j}, p.coeffs()[i] * q.coeffs()[j]);
        }
        return out;
    }

    bool is_zero() const { return t_.empty(); }
    const Terms& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }

    BigInt coefficient(int i, int j) const
    {
        auto it = t_.find({i, j});
        return it == t_.end() ? BigInt(0) : it->second;
    }

    void add_term(const Exponents& e, const BigInt& c)
    {
        if (c == 0) return;
        auto [it, inserted] = t_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    BiPoly& operator+=(const BiPoly& o)
    {
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o)
    {
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(BiPoly a)
    {
        for (auto& [e, c] : a.t_) c = -c;
        return a;
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b)
    {
        BiPoly out;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        return out;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    friend BiPoly operator*(BiPoly a, const BigInt& s)
    {
        if (s == 0) return {};
        for (auto& [e, c] : a.t_) c *= s;
        return a;
    }

    /// p(x, y) -> p(y, x)
    BiPoly swap_vars() const
    {
        BiPoly out;
        for (const auto& [e, c] : t_) out.t_.emplace(Exponents{e.second, e.first}, c);
        return out;
    }

    bool operator==(const BiPoly&) const = default;

    /// Terms ordered lexicographically by (i, j): "x - y", "1 + 2xy^3".
    std::string to_string() const
    {
        std::string out;
        for (const auto& [e, c] : t_) detail::append_term(out, c, detail::power("x", e.first) + detail::power("y", e.second));
        return out.empty() ? "0" : out;
    }

private:
    Terms t_;
};

/// Dense univariate polynomial over exact rationals (Sturm sequence support).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    explicit RatPoly(const UniPoly& p)
    {
        c_.reserve(p.coeffs().size());
        for (const auto& v : p.coeffs()) c_.emplace_back(v);
    }

    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const
    {
        if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend RatPoly operator-(RatPoly a)
    {
        for (auto& v : a.c_) v = -v;
        return a;
    }
    friend RatPoly operator-(RatPoly a, const RatPoly& b)
    {
        if (b.c_.size() > a.c_.size()) a.c_.resize(b.c_.size());
        for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[i] -= b.c_[i];
        a.normalize();
        return a;
    }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return RatPoly(std::move(out));
    }

    RatPoly derivative() const
    {
        if (c_.size() <= 1) return {};
        std::vector<Rational> v(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<long long>(k);
        return RatPoly(std::move(v));
    }

    RatPoly monic() const
    {
        if (is_zero()) return {};
        RatPoly out = *this;
        Rational lc = leading();
        for (auto& v : out.c_) v /= lc;
        return out;
    }

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const
    {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<Rational> r = c_;
        if (degree() < d.degree()) return {RatPoly(), *this};
        std::vector<Rational> q(static_cast<std::size_t>(degree() - d.degree() + 1));
        const Rational& lc = d.leading();
        for (int k = degree() - d.degree(); k >= 0; --k) {
            Rational f = r[k + d.degree()] / lc;
            if (f == 0) continue;
            q[k] = f;
            for (int i = 0; i <= d.degree(); ++i) r[k + i] -= f * d.c_[i];
        }
        return {RatPoly(std::move(q)), RatPoly(std::move(r))};
    }

    Rational evaluate(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    bool operator==(const RatPoly&) const = default;

    std::string to_string() const
    {
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) detail::append_term(out, c_[k], detail::power("x", static_cast<int>(k)));
        return out.empty() ? "0" : out;
    }

private:
    void normalize()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Monic gcd by Euclidean remainders. gcd(0, 0) is rejected.
inline RatPoly gcd(RatPoly a, RatPoly b)
{
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    while (!b.is_zero()) {
        RatPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace cdpoly

#endif  // CDPOLY_POLY_HPP
