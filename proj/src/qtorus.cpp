#include "qpath/qtorus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qpath {

CommutationTable::CommutationTable(int num_generators) : n_(num_generators) {
    if (n_ < 0) throw std::invalid_argument("negative generator count");
    lambda_.assign(static_cast<std::size_t>(n_) * n_, 0);
}

void CommutationTable::check(GeneratorId g) const {
    if (g < 0 || g >= n_) throw std::out_of_range("foreign generator id");
}

int CommutationTable::lambda(GeneratorId u, GeneratorId v) const {
    check(u);
    check(v);
    return lambda_[static_cast<std::size_t>(u) * n_ + v];
}

void CommutationTable::set_lambda(GeneratorId u, GeneratorId v, int value) {
    check(u);
    check(v);
    if (value < -1 || value > 1) throw std::invalid_argument("lambda out of {-1,0,1}");
    if (u == v && value != 0) throw std::invalid_argument("lambda(u,u) must be 0");
    lambda_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::int8_t>(value);
    lambda_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::int8_t>(-value);
}

LaurentPoly LaurentPoly::q_power(std::int64_t k, std::int64_t coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace_back(k, coeff);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    std::vector<std::pair<std::int64_t, std::int64_t>> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < rhs.terms_.size()) {
        if (j == rhs.terms_.size() || (i < terms_.size() && terms_[i].first < rhs.terms_[j].first)) {
            merged.push_back(terms_[i++]);
        } else if (i == terms_.size() || rhs.terms_[j].first < terms_[i].first) {
            merged.push_back(rhs.terms_[j++]);
        } else {
            std::int64_t c = terms_[i].second + rhs.terms_[j].second;
            if (c != 0) merged.emplace_back(terms_[i].first, c);
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + b.negated();
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out += LaurentPoly::q_power(ea + eb, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::negated() const {
    LaurentPoly out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
    LaurentPoly out = *this;
    for (auto& t : out.terms_) t.first += k;
    return out;
}

std::optional<std::int64_t> LaurentPoly::shift_from(const LaurentPoly& other) const {
    if (other.is_zero()) throw std::invalid_argument("shift_from: zero reference");
    if (terms_.size() != other.terms_.size() || terms_.empty()) return std::nullopt;
    std::int64_t k = terms_[0].first - other.terms_[0].first;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].second != other.terms_[i].second) return std::nullopt;
        if (terms_[i].first - other.terms_[i].first != k) return std::nullopt;
    }
    return k;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "q^" << e;
        }
    }
    return os.str();
}

QMonomial normalize_word(const Word& word, const CommutationTable& table) {
    QMonomial out;
    // q exponent from sorting: every inverted pair contributes
    // a_i * a_j * lambda(g_i, g_j), independent of the swap schedule.
    for (std::size_t i = 0; i < word.size(); ++i) {
        for (std::size_t j = i + 1; j < word.size(); ++j) {
            if (word[i].first > word[j].first) {
                out.qexp += static_cast<std::int64_t>(word[i].second) * word[j].second *
                            table.lambda(word[i].first, word[j].first);
            }
        }
    }
    std::map<GeneratorId, std::int64_t> exps;
    for (const auto& [g, a] : word) {
        if (g < 0 || g >= table.num_generators()) throw std::out_of_range("foreign generator id");
        exps[g] += a;
    }
    for (const auto& [g, a] : exps)
        if (a != 0) out.exps.emplace_back(g, static_cast<std::int32_t>(a));
    return out;
}

QElement QElement::one() {
    QElement e;
    e.terms_[{}] = LaurentPoly::q_power(0);
    return e;
}

QElement QElement::from_monomial(const QMonomial& m) {
    QElement e;
    e.terms_[m.exps] = LaurentPoly::q_power(m.qexp);
    return e;
}

QElement QElement::generator(GeneratorId g, std::int32_t exp) {
    QMonomial m;
    if (exp != 0) m.exps.emplace_back(g, exp);
    return from_monomial(m);
}

void QElement::add_term(const ExponentVec& key, const LaurentPoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QElement QElement::q_shifted(std::int64_t k) const {
    QElement out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, c.shifted(k));
    return out;
}

QElement& QElement::operator+=(const QElement& rhs) {
    for (const auto& [key, c] : rhs.terms_) add_term(key, c);
    return *this;
}

QElement operator-(const QElement& a, const QElement& b) {
    QElement out = a;
    out += b.negated();
    return out;
}

QElement QElement::negated() const {
    QElement out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, c.negated());
    return out;
}

QElement mul(const QElement& a, const QElement& b, const CommutationTable& table) {
    QElement out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            Word w;
            w.reserve(ka.size() + kb.size());
            w.insert(w.end(), ka.begin(), ka.end());
            w.insert(w.end(), kb.begin(), kb.end());
            QMonomial m = normalize_word(w, table);
            out.add_term(m.exps, (ca * cb).shifted(m.qexp));
        }
    }
    return out;
}

QElement scalar_q_pow(const QElement& a, std::int64_t k) { return a.q_shifted(k); }

std::optional<std::int64_t> q_ratio(const QElement& a, const QElement& b) {
    if (b.is_zero()) throw std::invalid_argument("q_ratio: zero denominator");
    if (a.is_zero()) return std::nullopt;
    if (a.num_terms() != b.num_terms()) return std::nullopt;
    std::optional<std::int64_t> k;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return std::nullopt;
        auto s = ia->second.shift_from(ib->second);
        if (!s) return std::nullopt;
        if (k && *k != *s) return std::nullopt;
        k = s;
    }
    return k;
}

std::string to_string(const QElement& e, const std::vector<std::string>& generator_names) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& [key, coeff] : e.terms()) {
        for (const auto& [qe, c] : coeff.terms()) {
            if (!first_term) os << " + ";
            first_term = false;
            bool wrote = false;
            if (c != 1) {
                os << c;
                wrote = true;
            }
            if (qe != 0) {
                if (wrote) os << "*";
                os << "q^" << qe;
                wrote = true;
            }
            for (const auto& [g, a] : key) {
                if (wrote) os << "*";
                const std::string name = (g >= 0 && static_cast<std::size_t>(g) < generator_names.size())
                                             ? generator_names[g]
                                             : "v" + std::to_string(g);
                os << name << "^" << a;
                wrote = true;
            }
            if (!wrote) os << "1";
        }
    }
    return os.str();
}

}  // namespace qpath
