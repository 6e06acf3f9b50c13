#pragma once

// Sparse homogeneous expansions indexed by partitions.

#include "schurpos/partition.hpp"

#include <gmpxx.h>

#include <functional>
#include <map>
#include <vector>

namespace schurpos {

using Integer = mpz_class;
using Rational = mpq_class;

/// num / den in canonical form.
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

class NonIntegralResult : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Map Partition -> coefficient with no stored zeros and a common degree.
/// Terms iterate in descending lexicographic order of their partitions.
template <typename Coeff>
class SparseExpansion {
public:
    using Terms = std::map<Partition, Coeff, std::greater<>>;

    SparseExpansion() = default;
    explicit SparseExpansion(std::int64_t degree) : degree_(degree) {}

    /// The single basis element indexed by lambda, with coefficient 1.
    static SparseExpansion basis(const Partition& lambda) {
        SparseExpansion f(lambda.size());
        f.add(lambda, Coeff(1));
        return f;
    }

    std::int64_t degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    Coeff coeff(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    std::vector<Partition> support() const {
        std::vector<Partition> out;
        out.reserve(terms_.size());
        for (const auto& [p, c] : terms_) out.push_back(p);
        return out;
    }

    void add(const Partition& lambda, const Coeff& c) {
        if (c == 0) return;
        if (lambda.size() != degree_) {
            throw SizeMismatch("term " + lambda.to_string() + " does not have degree " + std::to_string(degree_));
        }
        auto [it, inserted] = terms_.try_emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparseExpansion& operator+=(const SparseExpansion& other) {
        if (other.is_zero()) return *this;
        if (is_zero()) degree_ = other.degree_;
        for (const auto& [p, c] : other.terms_) add(p, c);
        return *this;
    }

    SparseExpansion& operator*=(const Coeff& scalar) {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [p, c] : terms_) c *= scalar;
        return *this;
    }

    friend bool operator==(const SparseExpansion& a, const SparseExpansion& b) {
        if (a.terms_ != b.terms_) return false;
        return a.is_zero() || a.degree_ == b.degree_;
    }

private:
    std::int64_t degree_ = 0;
    Terms terms_;
};

/// f = sum over lambda of <s_lambda, f> s_lambda.
using SchurExpansion = SparseExpansion<Integer>;

/// Coefficients on the power-sum basis p_rho.
using PowerSumExpansion = SparseExpansion<Rational>;

}  // namespace schurpos
