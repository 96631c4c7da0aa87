#pragma once

#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "mfw/rational.hpp"
#include "mfw/ring.hpp"

namespace mfw {

// Sparse exact-rational multivariate polynomial. Terms are kept in a map
// ordered by the ring's monomial ordering; no zero coefficients are stored,
// so equality of term maps is equality of polynomials.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, MonoLess>;

    explicit Poly(RingPtr ring) : ring_(std::move(ring)), terms_(MonoLess{ring_->ordering()}) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }

    static Poly constant(RingPtr ring, const Rat& c) {
        Poly p(std::move(ring));
        if (c != 0) p.terms_.emplace(mono_one(p.ring_->nvars()), c);
        return p;
    }

    static Poly term(RingPtr ring, Monomial m, const Rat& c) {
        Poly p(std::move(ring));
        if (m.size() != p.ring_->nvars()) throw PreconditionError("monomial length mismatch");
        if (c != 0) p.terms_.emplace(std::move(m), c);
        return p;
    }

    static Poly variable(RingPtr ring, std::size_t idx, std::uint32_t exp = 1) {
        Monomial m = mono_one(ring->nvars());
        if (idx >= m.size()) throw PreconditionError("variable index out of range");
        m[idx] = exp;
        return term(std::move(ring), std::move(m), rat(1));
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    // The constant term (0 if absent).
    Rat constant_term() const {
        auto it = terms_.find(mono_one(ring_->nvars()));
        return it == terms_.end() ? Rat(0) : it->second;
    }

    // Max total degree over all terms; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
        return d;
    }

    // Min total degree over all terms; -1 for the zero polynomial.
    int order() const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int t = total_degree(m);
            if (d < 0 || t < d) d = t;
        }
        return d;
    }

    // Leading term under the ring ordering (largest in the order).
    const std::pair<const Monomial, Rat>& leading() const {
        if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    Rat coefficient_of(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly& operator+=(const Poly& other) {
        check_ring(other);
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    Poly& operator-=(const Poly& other) {
        check_ring(other);
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }

    Poly& operator*=(const Poly& other) { return *this = *this * other; }

    Poly& operator*=(const Rat& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= s;
        }
        return *this;
    }

    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }

    // Multiply by a single term c*x^m (the hot path in basis reductions).
    Poly times_term(const Monomial& m, const Rat& c) const {
        Poly r(ring_);
        if (c == 0) return r;
        for (const auto& [mm, cc] : terms_) r.terms_.emplace(mono_mul(mm, m), cc * c);
        return r;
    }

    Poly pow(std::uint64_t e) const {
        Poly base = *this;
        Poly acc = Poly::constant(ring_, rat(1));
        while (e > 0) {
            if (e & 1) acc *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return acc;
    }

    // Formal partial derivative in variable `var`.
    Poly derivative(std::size_t var) const {
        if (var >= ring_->nvars()) throw PreconditionError("variable index out of range");
        Poly r(ring_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Monomial mm = m;
            Rat cc = c * rat(static_cast<long>(m[var]));
            mm[var] -= 1;
            r.add_term(mm, cc);
        }
        return r;
    }

    // Ring homomorphism sending variable i to images[i].
    Poly substitute(const std::vector<Poly>& images) const {
        if (images.size() != ring_->nvars())
            throw PreconditionError("substitute expects one image per variable");
        for (const auto& g : images) check_ring(g);
        // cache variable powers
        std::vector<std::vector<Poly>> pows(images.size());
        auto power_of = [&](std::size_t i, std::uint32_t e) -> const Poly& {
            auto& tab = pows[i];
            if (tab.empty()) tab.push_back(Poly::constant(ring_, rat(1)));
            while (tab.size() <= e) tab.push_back(tab.back() * images[i]);
            return tab[e];
        };
        Poly r(ring_);
        for (const auto& [m, c] : terms_) {
            Poly t = Poly::constant(ring_, c);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0) t *= power_of(i, m[i]);
            r += t;
        }
        return r;
    }

    // Same polynomial viewed in the ring with the other ordering.
    Poly with_ordering(Ordering ord) const {
        if (ring_->ordering() == ord) return *this;
        Poly r(ring_->with_ordering(ord));
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c);
        return r;
    }

    Poly in_ring(const RingPtr& ring) const {
        if (!same_ring(ring_, ring)) throw RingMismatchError();
        Poly r(ring);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c);
        return r;
    }

    // Drop all terms of total degree >= bound.
    Poly truncated(int bound) const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_)
            if (total_degree(m) < bound) r.terms_.emplace(m, c);
        return r;
    }

    // Homogeneous component of total degree d.
    Poly homogeneous_part(int d) const {
        Poly r(ring_);
        for (const auto& [m, c] : terms_)
            if (total_degree(m) == d) r.terms_.emplace(m, c);
        return r;
    }

    bool operator==(const Poly& other) const {
        return same_ring(ring_, other.ring_) && terms_ == other.terms_;
    }
    bool operator!=(const Poly& other) const { return !(*this == other); }

    // Canonical printer: terms ordered leading-first, '*' explicit, exponents
    // as `x^3`, non-integer coefficients as `p/q`. Round-trips through the
    // expression parser.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rat a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool wrote_coeff = false;
            if (a != 1 || total_degree(m) == 0) {
                os << rat_to_string(a);
                wrote_coeff = true;
            }
            bool wrote_var = false;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (wrote_coeff || wrote_var) os << "*";
                os << ring_->var(i);
                if (m[i] > 1) os << "^" << m[i];
                wrote_var = true;
            }
        }
        return os.str();
    }

private:
    void check_ring(const Poly& other) const {
        if (!same_ring(ring_, other.ring_)) throw RingMismatchError();
    }

    RingPtr ring_;
    TermMap terms_;
};

}  // namespace mfw
