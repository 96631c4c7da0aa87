#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mfw/errors.hpp"

namespace mfw {

// Monomial orderings. Both refine the reverse-lexicographic tie-break; they
// differ in how total degree ranks: under the local ordering the leading
// term of a polynomial is the one of LOWEST total degree.
enum class Ordering {
    GlobalDegRevLex,
    LocalNegDegRevLex,
};

inline std::string ordering_name(Ordering o) {
    return o == Ordering::GlobalDegRevLex ? "global-degrevlex" : "local-negdegrevlex";
}

inline std::optional<Ordering> ordering_from_name(std::string_view s) {
    if (s == "global-degrevlex" || s == "global") return Ordering::GlobalDegRevLex;
    if (s == "local-negdegrevlex" || s == "local") return Ordering::LocalNegDegRevLex;
    return std::nullopt;
}

inline bool valid_var_name(std::string_view s) {
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
    if (!alpha(s[0])) return false;
    for (char c : s.substr(1))
        if (!alnum(c)) return false;
    return true;
}

// The ambient polynomial ring: named variables plus a monomial ordering.
// Immutable; polynomials hold shared_ptr references to one of these.
class RingSpec {
public:
    RingSpec(std::vector<std::string> vars, Ordering ord) : vars_(std::move(vars)), ord_(ord) {
        if (vars_.empty()) throw PreconditionError("ring needs at least one variable");
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (!valid_var_name(vars_[i]))
                throw PreconditionError("invalid variable name '" + vars_[i] + "'");
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw PreconditionError("duplicate variable name '" + vars_[i] + "'");
        }
    }

    static std::shared_ptr<const RingSpec> make(std::vector<std::string> vars,
                                                Ordering ord = Ordering::GlobalDegRevLex) {
        return std::make_shared<const RingSpec>(std::move(vars), ord);
    }

    std::size_t nvars() const { return vars_.size(); }
    const std::string& var(std::size_t i) const { return vars_[i]; }
    const std::vector<std::string>& vars() const { return vars_; }
    Ordering ordering() const { return ord_; }

    std::optional<std::size_t> var_index(std::string_view name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }

    // Same variables in the same order under a different ordering.
    std::shared_ptr<const RingSpec> with_ordering(Ordering ord) const {
        return make(vars_, ord);
    }

    bool operator==(const RingSpec& other) const {
        return vars_ == other.vars_ && ord_ == other.ord_;
    }

private:
    std::vector<std::string> vars_;
    Ordering ord_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Exponent vector; length always equals the ring's variable count.
using Monomial = std::vector<std::uint32_t>;

inline int total_degree(const Monomial& m) {
    long d = 0;
    for (auto e : m) d += e;
    return static_cast<int>(d);
}

// Strict total order. Returns <0 if a precedes b (a is "smaller", i.e.
// further from the leading position), 0 if equal, >0 otherwise.
inline int mono_cmp(const Monomial& a, const Monomial& b, Ordering ord) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) {
        int deg = da < db ? -1 : 1;
        return ord == Ordering::GlobalDegRevLex ? deg : -deg;
    }
    // revlex tie-break: compare the last differing exponent, larger loses
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Requires a | b.
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Monomial mono_one(std::size_t n) { return Monomial(n, 0); }

// Comparator usable as a std::map key order: "less" = further from leading.
struct MonoLess {
    Ordering ord = Ordering::GlobalDegRevLex;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_cmp(a, b, ord) < 0;
    }
};

}  // namespace mfw
