#include "pcdg/factored.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcdg {

namespace {

using u128 = unsigned __int128;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) { return uint64_t(u128(a) * b % m); }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u128 checked_mul(u128 a, u128 b) {
    if (a != 0 && b > ~u128(0) / a) throw std::overflow_error("128-bit overflow");
    return a * b;
}

u128 checked_pow(uint64_t base, int exp) {
    u128 r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) d >>= 1, ++r;
    // this witness set is deterministic for all n < 2^64
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FactoredInt FactoredInt::prime(uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    FactoredInt f;
    f.factors_[p] = 1;
    return f;
}

FactoredInt FactoredInt::from_factors(const std::map<uint64_t, int>& factors) {
    FactoredInt f;
    for (auto [p, e] : factors) {
        if (!is_prime_u64(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
        if (e < 1) throw std::invalid_argument("exponent must be positive");
        f.factors_[p] = e;
    }
    return f;
}

FactoredInt FactoredInt::factor_small(uint64_t n) {
    if (n == 0) throw std::invalid_argument("cannot factor 0");
    FactoredInt f;
    for (uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f.factors_[p];
            n /= p;
        }
    if (n > 1) ++f.factors_[n];
    return f;
}

bool FactoredInt::divisible_by(const FactoredInt& d) const {
    for (auto [p, e] : d.factors_) {
        auto it = factors_.find(p);
        if (it == factors_.end() || it->second < e) return false;
    }
    return true;
}

FactoredInt FactoredInt::times(const FactoredInt& o) const {
    FactoredInt f = *this;
    for (auto [p, e] : o.factors_) f.factors_[p] += e;
    return f;
}

FactoredInt FactoredInt::times_power(uint64_t p, int exp) const {
    if (exp == 0) return *this;
    if (!is_prime_u64(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    FactoredInt f = *this;
    f.factors_[p] += exp;
    return f;
}

FactoredInt FactoredInt::divide_exact(const FactoredInt& d) const {
    if (!divisible_by(d))
        throw std::invalid_argument(to_string() + " is not divisible by " + d.to_string());
    FactoredInt f = *this;
    for (auto [p, e] : d.factors_) {
        f.factors_[p] -= e;
        if (f.factors_[p] == 0) f.factors_.erase(p);
    }
    return f;
}

unsigned __int128 FactoredInt::value() const {
    u128 v = 1;
    for (auto [p, e] : factors_)
        for (int i = 0; i < e; ++i) v = checked_mul(v, p);
    return v;
}

std::string FactoredInt::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (auto [p, e] : factors_) {
        if (!s.empty()) s += "*";
        s += std::to_string(p);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

DegreeSet::DegreeSet(std::vector<FactoredInt> degrees) : degrees_(std::move(degrees)) {
    degrees_.push_back(FactoredInt::one());
    std::sort(degrees_.begin(), degrees_.end());
    degrees_.erase(std::unique(degrees_.begin(), degrees_.end()), degrees_.end());
}

bool DegreeSet::contains(const FactoredInt& d) const {
    return std::binary_search(degrees_.begin(), degrees_.end(), d);
}

bool verify_factored_value(const FactoredInt& f, uint64_t base, int exp, uint64_t divisor) {
    u128 target = checked_pow(base, exp) - 1;
    if (divisor == 0 || target % divisor != 0)
        throw std::invalid_argument("divisor does not divide " + std::to_string(base) + "^" +
                                    std::to_string(exp) + " - 1");
    return f.value() == target / divisor;
}

bool cyclotomic_coprimality(uint64_t p, uint64_t q, uint64_t r) {
    if (!is_prime_u64(p) || !is_prime_u64(q) || !is_prime_u64(r))
        throw std::invalid_argument("p, q, r must all be prime");
    if (q >= r) throw std::invalid_argument("need q < r");
    u128 pq = checked_pow(p, int(q)) - 1;
    u128 pr = checked_pow(p, int(r)) - 1;
    u128 pqr = checked_pow(p, int(q * r)) - 1;
    u128 phi_q = pq / (p - 1);
    u128 phi_r = pr / (p - 1);
    // Phi_qr(p) = (p^qr - 1)(p - 1) / ((p^q - 1)(p^r - 1)) for distinct primes q,r
    u128 num = checked_mul(pqr, p - 1);
    u128 den = checked_mul(pq, pr);
    if (num % den != 0)
        throw std::logic_error("cyclotomic quotient not integral for p=" + std::to_string(p));
    u128 phi_qr = num / den;
    auto gcd128 = [](u128 a, u128 b) {
        while (b) {
            u128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    return gcd128(phi_q, phi_r) == 1 && gcd128(phi_q, phi_qr) == 1 && gcd128(phi_r, phi_qr) == 1;
}

}  // namespace pcdg
