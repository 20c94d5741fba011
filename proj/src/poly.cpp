#include "cyclo/poly.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cyclo {

namespace {

using Span = std::span<const BigInt>;

void schoolbook_addmul(Span a, Span b, BigInt* out) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
}

// Adds a*b into out (out must hold a.size()+b.size()-1 entries).
void mul_addinto(Span a, Span b, BigInt* out) {
    if (a.size() < b.size()) std::swap(a, b);
    if (b.empty()) return;
    if (b.size() < kKaratsubaThreshold) {
        schoolbook_addmul(a, b, out);
        return;
    }
    const std::size_t h = (a.size() + 1) / 2;
    if (b.size() <= h) {
        mul_addinto(a.subspan(0, h), b, out);
        mul_addinto(a.subspan(h), b, out + h);
        return;
    }
    const Span a0 = a.subspan(0, h), a1 = a.subspan(h);
    const Span b0 = b.subspan(0, h), b1 = b.subspan(h);

    std::vector<BigInt> z0(a0.size() + b0.size() - 1);
    std::vector<BigInt> z2(a1.size() + b1.size() - 1);
    mul_addinto(a0, b0, z0.data());
    mul_addinto(a1, b1, z2.data());

    const std::size_t sa = std::max(a0.size(), a1.size());
    const std::size_t sb = std::max(b0.size(), b1.size());
    std::vector<BigInt> s1(sa), s2(sb);
    for (std::size_t i = 0; i < a0.size(); ++i) s1[i] = a0[i];
    for (std::size_t i = 0; i < a1.size(); ++i) s1[i] += a1[i];
    for (std::size_t i = 0; i < b0.size(); ++i) s2[i] = b0[i];
    for (std::size_t i = 0; i < b1.size(); ++i) s2[i] += b1[i];

    std::vector<BigInt> zm(sa + sb - 1);
    mul_addinto(s1, s2, zm.data());
    for (std::size_t i = 0; i < z0.size(); ++i) zm[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) zm[i] -= z2[i];

    for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
    for (std::size_t i = 0; i < zm.size(); ++i) out[h + i] += zm[i];
    for (std::size_t i = 0; i < z2.size(); ++i) out[2 * h + i] += z2[i];
}

} // namespace

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

IntPoly IntPoly::from_coeffs(std::vector<BigInt> coeffs) {
    IntPoly f;
    f.c_ = std::move(coeffs);
    f.normalize();
    return f;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::x_pow_minus_one(std::uint64_t n) {
    if (n == 0) throw DomainError("x_pow_minus_one: n must be >= 1");
    std::vector<BigInt> c(n + 1);
    c[0] = -1;
    c[n] = 1;
    return from_coeffs(std::move(c));
}

BigInt IntPoly::height() const {
    BigInt h = 0;
    for (const BigInt& v : c_)
        if (mpz_cmpabs(v.get_mpz_t(), h.get_mpz_t()) > 0) h = abs(v);
    return h;
}

IntPoly IntPoly::inflate(std::uint64_t m) const {
    if (m == 0) throw DomainError("inflate: m must be >= 1");
    if (m == 1 || is_zero()) return *this;
    std::vector<BigInt> c((c_.size() - 1) * m + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * m] = c_[i];
    return from_coeffs(std::move(c));
}

IntPoly mul(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return IntPoly::zero();
    std::vector<BigInt> out(f.c_.size() + g.c_.size() - 1);
    mul_addinto(f.c_, g.c_, out.data());
    return IntPoly::from_coeffs(std::move(out));
}

IntPoly IntPoly::exact_div(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw ContractError("exact_div: divisor is zero");
    if (f.is_zero()) return zero();

    // Strip a common power of x so the divisor has a nonzero constant term.
    std::size_t k = 0;
    while (g.c_[k] == 0) ++k;
    for (std::size_t i = 0; i < k; ++i)
        if (f.c_.size() <= i || f.c_[i] != 0)
            throw IntegrityError("exact_div: dividend lacks the divisor's power of x");

    const std::size_t fl = f.c_.size() - k, gl = g.c_.size() - k;
    if (fl < gl) throw IntegrityError("exact_div: deg f < deg g");

    std::vector<BigInt> r(f.c_.begin() + static_cast<long>(k), f.c_.end());
    std::size_t len = fl;
    polybuf::div_in_place(r, len, std::span<const BigInt>(g.c_).subspan(k));
    r.resize(len);
    return from_coeffs(std::move(r));
}

std::string IntPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const BigInt& v : c_) arr.push_back(v.get_str());
    return arr.dump();
}

IntPoly IntPoly::from_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("IntPoly::from_json: ") + e.what());
    }
    if (!arr.is_array()) throw DomainError("IntPoly::from_json: expected a JSON array");
    std::vector<BigInt> c;
    c.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_string()) throw DomainError("IntPoly::from_json: coefficients must be decimal strings");
        try {
            c.emplace_back(v.get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
            throw DomainError("IntPoly::from_json: bad decimal string");
        }
    }
    return from_coeffs(std::move(c));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const BigInt& v = c_[i];
        if (v == 0) continue;
        const bool neg = v < 0;
        BigInt a = abs(v);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace polybuf {

void mul_in_place(std::vector<BigInt>& buf, std::size_t& len, std::span<const BigInt> g) {
    if (g.empty()) throw ContractError("mul_in_place: zero factor");
    if (len == 0) return;
    const std::size_t newlen = len + g.size() - 1;
    if (buf.size() < newlen) buf.resize(newlen);
    // Descending target index; every read buf[t-j] with j>=1 is below t and
    // still holds the original coefficient, and buf[t] itself is read before
    // being overwritten.
    static thread_local BigInt acc;
    for (std::size_t t = newlen; t-- > 0;) {
        const std::size_t jlo = t >= len ? t - (len - 1) : 0;
        const std::size_t jhi = std::min(g.size() - 1, t);
        acc = 0;
        for (std::size_t j = jlo; j <= jhi; ++j) {
            if (g[j] == 0) continue;
            mpz_addmul(acc.get_mpz_t(), buf[t - j].get_mpz_t(), g[j].get_mpz_t());
        }
        mpz_swap(buf[t].get_mpz_t(), acc.get_mpz_t());
    }
    len = newlen;
}

void div_in_place(std::vector<BigInt>& buf, std::size_t& len, std::span<const BigInt> g) {
    if (g.empty()) throw ContractError("div_in_place: zero divisor");
    if (g[0] == 0) throw ContractError("div_in_place: divisor has zero constant term");
    if (len == 0) return;
    if (len < g.size()) throw IntegrityError("div_in_place: deg f < deg g");
    const std::size_t qlen = len - g.size() + 1;
    const BigInt& g0 = g[0];
    const bool unit = g0 == 1 || g0 == -1;
    for (std::size_t i = 0; i < qlen; ++i) {
        BigInt& qi = buf[i]; // r_i becomes q_i in place
        if (qi == 0) continue;
        if (unit) {
            if (g0 == -1) mpz_neg(qi.get_mpz_t(), qi.get_mpz_t());
        } else {
            if (!mpz_divisible_p(qi.get_mpz_t(), g0.get_mpz_t()))
                throw IntegrityError("div_in_place: non-integral quotient step");
            mpz_divexact(qi.get_mpz_t(), qi.get_mpz_t(), g0.get_mpz_t());
        }
        for (std::size_t j = 1; j < g.size(); ++j) {
            if (g[j] == 0) continue;
            mpz_submul(buf[i + j].get_mpz_t(), qi.get_mpz_t(), g[j].get_mpz_t());
        }
    }
    for (std::size_t i = qlen; i < len; ++i) {
        if (buf[i] != 0) throw IntegrityError("div_in_place: nonzero remainder");
    }
    len = qlen;
}

const BigInt* max_abs(const std::vector<BigInt>& buf, std::size_t len, BigInt& scratch) {
    scratch = 0;
    const BigInt* best = &scratch;
    for (std::size_t i = 0; i < len; ++i)
        if (mpz_cmpabs(buf[i].get_mpz_t(), best->get_mpz_t()) > 0) best = &buf[i];
    return best;
}

} // namespace polybuf

} // namespace cyclo
