#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pcdg {

bool is_prime_u64(uint64_t n);  // deterministic Miller-Rabin

// positive integer as prime -> exponent map; 1 is the empty map.
// Every key is verified prime on construction.
class FactoredInt {
public:
    FactoredInt() = default;  // 1
    static FactoredInt one() { return {}; }
    static FactoredInt prime(uint64_t p);
    static FactoredInt from_factors(const std::map<uint64_t, int>& factors);
    static FactoredInt factor_small(uint64_t n);  // trial division, n <= 10^12

    const std::map<uint64_t, int>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    bool divisible_by(const FactoredInt& d) const;

    FactoredInt times(const FactoredInt& o) const;
    FactoredInt times_power(uint64_t p, int exp) const;
    FactoredInt divide_exact(const FactoredInt& d) const;  // throws if not divisible

    unsigned __int128 value() const;  // throws on 128-bit overflow
    std::string to_string() const;    // "3*23^15*292561*74912328481"; "1"

    friend bool operator==(const FactoredInt&, const FactoredInt&) = default;
    friend auto operator<=>(const FactoredInt&, const FactoredInt&) = default;

private:
    std::map<uint64_t, int> factors_;
};

// character degree set; always contains 1
class DegreeSet {
public:
    DegreeSet() { degrees_.push_back(FactoredInt::one()); }
    explicit DegreeSet(std::vector<FactoredInt> degrees);

    const std::vector<FactoredInt>& degrees() const { return degrees_; }
    bool contains(const FactoredInt& d) const;
    size_t size() const { return degrees_.size(); }

    friend bool operator==(const DegreeSet&, const DegreeSet&) = default;

private:
    std::vector<FactoredInt> degrees_;  // sorted, unique
};

// exact check that f expands to (base^exp - 1) / divisor
bool verify_factored_value(const FactoredInt& f, uint64_t base, int exp, uint64_t divisor);

// Phi_q(p), Phi_r(p), Phi_qr(p) pairwise coprime; requires p,q,r prime, q < r
bool cyclotomic_coprimality(uint64_t p, uint64_t q, uint64_t r);

}  // namespace pcdg
