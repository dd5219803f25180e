#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ormod/error.hpp"

namespace ormod {

/// An ordered set of distinct variable names with positive integer weights.
/// Weight 1 gives plain polynomial degree; the graded subring of the models
/// uses weights 8, 10 and 40.
class VarSpace {
public:
    VarSpace(std::vector<std::string> names, std::vector<std::int64_t> weights)
        : names_(std::move(names)), weights_(std::move(weights)) {
        if (names_.size() != weights_.size())
            fail(Errc::InvalidArgument, "variable/weight count mismatch");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) fail(Errc::InvalidArgument, "empty variable name");
            if (weights_[i] < 1) fail(Errc::InvalidArgument, "variable weight must be >= 1");
            auto [it, fresh] = index_.emplace(names_[i], i);
            (void)it;
            if (!fresh) fail(Errc::InvalidArgument, "duplicate variable name '" + names_[i] + "'");
        }
    }

    static std::shared_ptr<const VarSpace> weight_one(std::vector<std::string> names) {
        std::vector<std::int64_t> w(names.size(), 1);
        return std::make_shared<const VarSpace>(std::move(names), std::move(w));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::int64_t weight(std::size_t i) const { return weights_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    friend bool operator==(const VarSpace& a, const VarSpace& b) {
        return a.names_ == b.names_ && a.weights_ == b.weights_;
    }
    friend bool operator!=(const VarSpace& a, const VarSpace& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
    std::vector<std::int64_t> weights_;
    std::map<std::string, std::size_t> index_;
};

using VarSpacePtr = std::shared_ptr<const VarSpace>;

inline bool same_space(const VarSpacePtr& a, const VarSpacePtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Exponent vector aligned with a VarSpace.
struct Monomial {
    std::vector<std::int32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t n) : exps(n, 0) {}
    explicit Monomial(std::vector<std::int32_t> e) : exps(std::move(e)) {}

    std::int64_t total() const {
        return std::accumulate(exps.begin(), exps.end(), std::int64_t{0});
    }

    std::int64_t weighted(const VarSpace& vs) const {
        std::int64_t d = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) d += vs.weight(i) * exps[i];
        return d;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

/// Graded-lexicographic order: total exponent sum first, then the exponent
/// vector itself (earlier variables more significant).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::int64_t ta = a.total(), tb = b.total();
        if (ta != tb) return ta < tb;
        return a.exps < b.exps;
    }
};

}  // namespace ormod
