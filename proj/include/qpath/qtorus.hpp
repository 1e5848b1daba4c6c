#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qpath {

// Generators are the inner vertices of one SE-graph, numbered 0..n-1 in the
// canonical order (x ascending, y descending).
using GeneratorId = std::int32_t;

// Antisymmetric table lambda(u,v) in {-1,0,+1} encoding u*v = q^lambda(u,v) * v*u.
class CommutationTable {
public:
    explicit CommutationTable(int num_generators);

    int num_generators() const { return n_; }
    int lambda(GeneratorId u, GeneratorId v) const;
    void set_lambda(GeneratorId u, GeneratorId v, int value);

private:
    void check(GeneratorId g) const;

    int n_;
    std::vector<std::int8_t> lambda_;
};

// Sparse Laurent polynomial in q with integer coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly q_power(std::int64_t k, std::int64_t coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<std::int64_t, std::int64_t>>& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b, a; }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly negated() const;
    LaurentPoly shifted(std::int64_t k) const;  // multiply by q^k

    // If *this == other * q^k for some k, return k.
    std::optional<std::int64_t> shift_from(const LaurentPoly& other) const;

    bool operator==(const LaurentPoly&) const = default;
    std::string str() const;

private:
    // (exponent, coefficient), sorted by exponent, no zero coefficients
    std::vector<std::pair<std::int64_t, std::int64_t>> terms_;
};

// Sorted by generator id, zero exponents absent.
using ExponentVec = std::vector<std::pair<GeneratorId, std::int32_t>>;

struct QMonomial {
    std::int64_t qexp = 0;
    ExponentVec exps;
    bool operator==(const QMonomial&) const = default;
};

using Word = std::vector<std::pair<GeneratorId, std::int32_t>>;

// Sort a product of generator powers into canonical order, collecting the q
// exponent produced by the transpositions. Throws on foreign generator ids.
QMonomial normalize_word(const Word& word, const CommutationTable& table);

// Element of the Laurent algebra: sum of exponent vectors with LaurentPoly
// coefficients, all kept in canonical form.
class QElement {
public:
    QElement() = default;
    static QElement zero() { return {}; }
    static QElement one();
    static QElement from_monomial(const QMonomial& m);
    static QElement generator(GeneratorId g, std::int32_t exp = 1);

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<ExponentVec, LaurentPoly>& terms() const { return terms_; }

    void add_term(const ExponentVec& key, const LaurentPoly& coeff);

    QElement q_shifted(std::int64_t k) const;

    QElement& operator+=(const QElement& rhs);
    friend QElement operator+(QElement a, const QElement& b) { return a += b, a; }
    friend QElement operator-(const QElement& a, const QElement& b);
    QElement negated() const;
    bool operator==(const QElement&) const = default;

private:
    std::map<ExponentVec, LaurentPoly> terms_;
};

QElement mul(const QElement& a, const QElement& b, const CommutationTable& table);
QElement scalar_q_pow(const QElement& a, std::int64_t k);

// k with a == q^k * b, if such k exists. Throws if b is zero.
std::optional<std::int64_t> q_ratio(const QElement& a, const QElement& b);

// Canonical text form, e.g. "q^2*v3^1*v7^-1 + v4^1". Terms in lexicographic
// exponent-vector order, q-powers of one coefficient ascending.
std::string to_string(const QElement& e, const std::vector<std::string>& generator_names);

}  // namespace qpath
