#pragma once

#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "mfw/poly.hpp"

namespace mfw {

// Explicit computation budgets. Exceeding one raises BudgetExceededError;
// the engine never silently truncates an answer.
struct Budget {
    int max_degree = 40;
    long max_pair_reductions = 100000;
};

// A standard (Groebner) basis of an ideal together with exact cofactor
// certificates over the original generators:
//     std_basis[i] == sum_j certs[i][j] * generators[j]
// The identity is exact under both orderings; units never enter at the
// basis level (they appear only when reducing arbitrary inputs).
struct IdealBasis {
    RingPtr ring;
    std::vector<Poly> generators;
    std::vector<Poly> std_basis;
    bool with_certificates = false;
    std::vector<std::vector<Poly>> certs;

    Ordering ordering() const { return ring->ordering(); }
};

namespace detail {

inline int ecart(const Poly& p) { return p.degree() - total_degree(p.leading().first); }

// Tracked polynomial for reductions: unit * input == sum_j cof[j] * reducer[j] + p,
// where `unit` has nonzero constant term (and equals 1 under global orderings).
struct TrackedNF {
    Poly p;
    Poly unit;
    std::vector<Poly> cof;
};

inline TrackedNF make_tracked(const Poly& f, std::size_t nred, bool track) {
    TrackedNF t{f, Poly::constant(f.ring(), rat(1)), {}};
    if (track) t.cof.assign(nred, Poly(f.ring()));
    return t;
}

// Full normal form under a global ordering: no term of the result is
// divisible by any reducer's leading monomial.
inline TrackedNF reduce_global(const Poly& f, const std::vector<Poly>& reducers, bool track,
                               long* steps, const Budget& budget) {
    TrackedNF t = make_tracked(f, reducers.size(), track);
    Poly rem(f.ring());
    Poly& h = t.p;
    while (!h.is_zero()) {
        const auto& [lm, lc] = h.leading();
        bool reduced = false;
        for (std::size_t i = 0; i < reducers.size(); ++i) {
            const auto& [glm, glc] = reducers[i].leading();
            if (!mono_divides(glm, lm)) continue;
            if (++*steps > budget.max_pair_reductions)
                throw BudgetExceededError("reduction step budget exceeded");
            Monomial q = mono_div(lm, glm);
            Rat c = lc / glc;
            h -= reducers[i].times_term(q, c);
            if (track) t.cof[i].add_term(q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            Poly lead = Poly::term(h.ring(), lm, lc);
            h -= lead;
        }
    }
    t.p = std::move(rem);
    return t;
}

// Mora weak normal form (local orderings). The result's leading monomial is
// not divisible by any reducer's leading monomial; membership in the ideal
// is decided by whether the result vanishes.
inline TrackedNF reduce_mora(const Poly& f, const std::vector<Poly>& reducers, bool track,
                             long* steps, const Budget& budget) {
    TrackedNF t = make_tracked(f, reducers.size(), track);
    std::vector<TrackedNF> stored;
    while (!t.p.is_zero()) {
        const auto& [lm, lc] = t.p.leading();
        // candidate with minimal ecart; base reducers win ties, then index
        int best_ecart = -1;
        std::size_t best = 0;
        bool best_is_stored = false, found = false;
        for (std::size_t i = 0; i < reducers.size(); ++i) {
            if (!mono_divides(reducers[i].leading().first, lm)) continue;
            int e = ecart(reducers[i]);
            if (!found || e < best_ecart) {
                found = true;
                best_ecart = e;
                best = i;
                best_is_stored = false;
            }
        }
        for (std::size_t i = 0; i < stored.size(); ++i) {
            if (!mono_divides(stored[i].p.leading().first, lm)) continue;
            int e = ecart(stored[i].p);
            if (!found || e < best_ecart) {
                found = true;
                best_ecart = e;
                best = i;
                best_is_stored = true;
            }
        }
        if (!found) return t;
        if (++*steps > budget.max_pair_reductions)
            throw BudgetExceededError("reduction step budget exceeded");
        if (best_ecart > ecart(t.p)) stored.push_back(t);
        if (!best_is_stored) {
            const Poly& g = reducers[best];
            Monomial q = mono_div(lm, g.leading().first);
            Rat c = lc / g.leading().second;
            t.p -= g.times_term(q, c);
            if (track) t.cof[best].add_term(q, c);
        } else {
            const TrackedNF& s = stored[best];
            Monomial q = mono_div(lm, s.p.leading().first);
            Rat c = lc / s.p.leading().second;
            t.p -= s.p.times_term(q, c);
            t.unit -= s.unit.times_term(q, c);
            if (track)
                for (std::size_t j = 0; j < t.cof.size(); ++j)
                    t.cof[j] -= s.cof[j].times_term(q, c);
        }
    }
    return t;
}

inline TrackedNF reduce_any(const Poly& f, const std::vector<Poly>& reducers, Ordering ord,
                            bool track, long* steps, const Budget& budget) {
    return ord == Ordering::GlobalDegRevLex ? reduce_global(f, reducers, track, steps, budget)
                                            : reduce_mora(f, reducers, track, steps, budget);
}

}  // namespace detail

// Buchberger's algorithm (global ordering) / Mora's tangent-cone algorithm
// (local ordering). Pair selection follows the normal strategy: smallest
// leading-term lcm first, ties by pair index. After completion every S-pair
// of the returned basis is verified to reduce to zero.
inline IdealBasis std_basis(const std::vector<Poly>& gens, RingPtr ring,
                            bool with_certificates = false, const Budget& budget = {}) {
    if (gens.empty()) throw PreconditionError("std_basis needs at least one generator");
    for (const auto& g : gens) {
        if (g.is_zero()) throw PreconditionError("std_basis: zero generator");
        if (!same_ring(g.ring(), ring)) throw RingMismatchError();
    }
    Ordering ord = ring->ordering();
    long steps = 0;

    struct Elem {
        Poly p;
        std::vector<Poly> cert;  // over original generators
    };
    std::vector<Elem> elems;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<Poly> cert;
        if (with_certificates) {
            cert.assign(gens.size(), Poly(ring));
            cert[i] = Poly::constant(ring, rat(1));
        }
        elems.push_back({gens[i].in_ring(ring), std::move(cert)});
    }

    auto polys = [&]() {
        std::vector<Poly> ps;
        ps.reserve(elems.size());
        for (const auto& e : elems) ps.push_back(e.p);
        return ps;
    };

    auto spoly = [&](const Elem& a, const Elem& b) {
        const auto& [lma, lca] = a.p.leading();
        const auto& [lmb, lcb] = b.p.leading();
        Monomial l = mono_lcm(lma, lmb);
        Poly p = a.p.times_term(mono_div(l, lma), rat(1) / lca) -
                 b.p.times_term(mono_div(l, lmb), rat(1) / lcb);
        std::vector<Poly> cert;
        if (with_certificates) {
            cert.reserve(a.cert.size());
            for (std::size_t j = 0; j < a.cert.size(); ++j)
                cert.push_back(a.cert[j].times_term(mono_div(l, lma), rat(1) / lca) -
                               b.cert[j].times_term(mono_div(l, lmb), rat(1) / lcb));
        }
        return Elem{std::move(p), std::move(cert)};
    };

    // pair queue keyed by (lcm, i, j); MonoLess gives the normal strategy
    struct PairKey {
        Monomial lcm;
        std::size_t i, j;
    };
    struct PairLess {
        Ordering ord;
        bool operator()(const PairKey& a, const PairKey& b) const {
            int c = mono_cmp(a.lcm, b.lcm, ord);
            if (c != 0) return c < 0;
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        }
    };
    std::set<PairKey, PairLess> queue{PairLess{ord}};
    auto push_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i)
            queue.insert({mono_lcm(elems[i].p.leading().first, elems[k].p.leading().first), i, k});
    };
    for (std::size_t k = 1; k < elems.size(); ++k) push_pairs(k);

    long pair_count = 0;
    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        if (++pair_count > budget.max_pair_reductions)
            throw BudgetExceededError("S-pair budget exceeded");
        const auto& lmi = elems[pk.i].p.leading().first;
        const auto& lmj = elems[pk.j].p.leading().first;
        if (pk.lcm == mono_mul(lmi, lmj)) continue;  // product criterion
        Elem sp = spoly(elems[pk.i], elems[pk.j]);
        if (sp.p.is_zero()) continue;
        auto nf = detail::reduce_any(sp.p, polys(), ord, with_certificates, &steps, budget);
        if (nf.p.is_zero()) continue;
        if (nf.p.degree() > budget.max_degree)
            throw BudgetExceededError("degree budget exceeded in basis completion");
        std::vector<Poly> cert;
        if (with_certificates) {
            // nf.unit * sp == sum_i nf.cof[i] * elems[i].p + nf.p, and sp is an
            // exact combination of the generators, so nf.p is one as well.
            cert.assign(gens.size(), Poly(ring));
            for (std::size_t j = 0; j < gens.size(); ++j) {
                cert[j] = nf.unit * sp.cert[j];
                for (std::size_t i = 0; i < elems.size(); ++i)
                    if (!nf.cof[i].is_zero()) cert[j] -= nf.cof[i] * elems[i].cert[j];
            }
        }
        elems.push_back({std::move(nf.p), std::move(cert)});
        push_pairs(elems.size() - 1);
    }

    // head interreduction: drop elements whose leading monomial is divisible
    // by another surviving element's (earlier index wins on equality)
    std::vector<bool> keep(elems.size(), true);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t j = 0; j < elems.size(); ++j) {
            if (i == j || !keep[j]) continue;
            const auto& li = elems[i].p.leading().first;
            const auto& lj = elems[j].p.leading().first;
            if (mono_divides(lj, li) && (li != lj || j < i)) {
                keep[i] = false;
                break;
            }
        }
    }
    std::vector<Elem> reduced;
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (keep[i]) reduced.push_back(std::move(elems[i]));
    elems = std::move(reduced);

    if (ord == Ordering::GlobalDegRevLex) {
        // tail interreduction (exact certificates carried through)
        for (std::size_t i = 0; i < elems.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t j = 0; j < elems.size(); ++j)
                if (j != i) others.push_back(elems[j].p);
            auto nf = detail::reduce_global(elems[i].p, others, with_certificates, &steps, budget);
            if (nf.p == elems[i].p) continue;
            if (with_certificates) {
                std::vector<Poly> cert(gens.size(), Poly(ring));
                for (std::size_t g = 0; g < gens.size(); ++g) {
                    cert[g] = elems[i].cert[g];
                    std::size_t oi = 0;
                    for (std::size_t j = 0; j < elems.size(); ++j) {
                        if (j == i) continue;
                        if (!nf.cof[oi].is_zero()) cert[g] -= nf.cof[oi] * elems[j].cert[g];
                        ++oi;
                    }
                }
                elems[i].cert = std::move(cert);
            }
            elems[i].p = std::move(nf.p);
        }
    }

    // completion self-check: every S-pair reduces to zero
    {
        auto ps = polys();
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = i + 1; j < elems.size(); ++j) {
                Elem sp = spoly(elems[i], elems[j]);
                if (sp.p.is_zero()) continue;
                auto nf = detail::reduce_any(sp.p, ps, ord, false, &steps, budget);
                if (!nf.p.is_zero())
                    throw InternalError("standard basis completion check failed");
            }
    }

    IdealBasis b;
    b.ring = std::move(ring);
    b.generators = gens;
    b.with_certificates = with_certificates;
    for (auto& e : elems) {
        b.std_basis.push_back(std::move(e.p));
        if (with_certificates) b.certs.push_back(std::move(e.cert));
    }

    if (with_certificates) {
        // replay: every certificate re-multiplies to its basis element
        for (std::size_t i = 0; i < b.std_basis.size(); ++i) {
            Poly acc(b.ring);
            for (std::size_t j = 0; j < gens.size(); ++j) acc += b.certs[i][j] * b.generators[j];
            if (acc != b.std_basis[i]) throw InternalError("certificate replay failed");
        }
    }
    return b;
}

// Standard monomials: those not divisible by any leading monomial of the
// basis. Returns nullopt when the quotient is infinite dimensional (for some
// variable no pure power appears in the leading-term ideal).
inline std::optional<std::vector<Monomial>> quotient_basis(const IdealBasis& basis) {
    std::size_t n = basis.ring->nvars();
    std::vector<Monomial> lms;
    for (const auto& p : basis.std_basis) lms.push_back(p.leading().first);

    std::vector<std::uint32_t> bound(n, 0);
    std::vector<bool> bounded(n, false);
    for (const auto& lm : lms) {
        int support = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (lm[i] == 0) continue;
            if (support >= 0) {
                pure = false;
                break;
            }
            support = static_cast<int>(i);
        }
        if (!pure) continue;
        if (support < 0) return std::vector<Monomial>{};  // unit ideal
        auto s = static_cast<std::size_t>(support);
        if (!bounded[s] || lm[s] < bound[s]) bound[s] = lm[s];
        bounded[s] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!bounded[i]) return std::nullopt;

    std::vector<Monomial> out;
    Monomial m = mono_one(n);
    while (true) {
        bool standard = true;
        for (const auto& lm : lms)
            if (mono_divides(lm, m)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(m);
        // odometer over the box [0, bound_i)
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (m[i] + 1 < bound[i]) {
                ++m[i];
                break;
            }
            m[i] = 0;
        }
        if (i == n) break;
    }
    std::sort(out.begin(), out.end(), MonoLess{Ordering::GlobalDegRevLex});
    return out;
}

namespace detail {

// Full normal form in a zero-dimensional local quotient: all monomials of
// degree >= trunc_degree lie in the ideal, so reduction may truncate there.
// trunc_degree must be (max standard-monomial degree) + 1.
inline Poly reduce_truncated(const Poly& f, const std::vector<Poly>& reducers, int trunc_degree,
                             long* steps, const Budget& budget) {
    Poly h = f.truncated(trunc_degree);
    Poly rem(f.ring());
    while (!h.is_zero()) {
        const auto& [lm, lc] = h.leading();
        bool reduced = false;
        for (const auto& g : reducers) {
            const auto& [glm, glc] = g.leading();
            if (!mono_divides(glm, lm)) continue;
            if (++*steps > budget.max_pair_reductions)
                throw BudgetExceededError("reduction step budget exceeded");
            h -= g.times_term(mono_div(lm, glm), lc / glc);
            h = h.truncated(trunc_degree);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            h -= Poly::term(h.ring(), lm, lc);
        }
    }
    return rem;
}

}  // namespace detail

// Canonical normal form: no term of the result is divisible by any leading
// monomial of the basis. Under the local ordering this requires the quotient
// to be finite dimensional (tail reduction truncates inside the ideal);
// otherwise successive Mora reductions are attempted within the budget.
inline Poly normal_form(const Poly& f, const IdealBasis& basis, const Budget& budget = {}) {
    long steps = 0;
    Poly g = f.in_ring(basis.ring);
    if (basis.ordering() == Ordering::GlobalDegRevLex)
        return detail::reduce_global(g, basis.std_basis, false, &steps, budget).p;
    if (auto qb = quotient_basis(basis)) {
        int maxdeg = 0;
        for (const auto& m : *qb) maxdeg = std::max(maxdeg, total_degree(m));
        return detail::reduce_truncated(g, basis.std_basis, maxdeg + 1, &steps, budget);
    }
    // infinite-dimensional local quotient: peel weak normal forms off the tail
    Poly rem(basis.ring);
    Poly h = g;
    while (!h.is_zero()) {
        auto nf = detail::reduce_mora(h, basis.std_basis, false, &steps, budget);
        if (nf.p.is_zero()) break;
        const auto& [lm, lc] = nf.p.leading();
        if (total_degree(lm) > budget.max_degree)
            throw BudgetExceededError("normal form degree budget exceeded");
        rem.add_term(lm, lc);
        h = nf.p - Poly::term(h.ring(), lm, lc);
    }
    return rem;
}

struct Cofactors {
    std::vector<Poly> cofactors;  // f == sum_j cofactors[j] * generators[j]
};

// Exact cofactor lift of f over the original generators. Returns nullopt if
// f is not a member. Under the local ordering an exact polynomial identity
// only exists when the Mora unit is a constant; otherwise
// CertificateUnavailableError is thrown.
inline std::optional<Cofactors> lift_certificate(const Poly& f, const IdealBasis& basis,
                                                 const Budget& budget = {}) {
    if (!basis.with_certificates)
        throw PreconditionError("basis was computed without certificates");
    long steps = 0;
    Poly g = f.in_ring(basis.ring);
    auto nf = detail::reduce_any(g, basis.std_basis, basis.ordering(), true, &steps, budget);
    if (!nf.p.is_zero()) return std::nullopt;
    Rat u(1);
    if (basis.ordering() == Ordering::LocalNegDegRevLex) {
        if (!nf.unit.is_constant())
            throw CertificateUnavailableError(
                "local-ordering certificate has a non-constant unit");
        u = nf.unit.constant_term();
    }
    std::vector<Poly> cof(basis.generators.size(), Poly(basis.ring));
    for (std::size_t i = 0; i < basis.std_basis.size(); ++i) {
        if (nf.cof[i].is_zero()) continue;
        for (std::size_t j = 0; j < basis.generators.size(); ++j)
            cof[j] += nf.cof[i] * basis.certs[i][j];
    }
    Poly check(basis.ring);
    for (std::size_t j = 0; j < cof.size(); ++j) {
        cof[j] *= rat(1) / u;
        check += cof[j] * basis.generators[j];
    }
    if (check != g) throw InternalError("lifted certificate failed replay");
    return Cofactors{std::move(cof)};
}

// Text serialization of a basis: canonical polynomial strings.
inline std::vector<std::string> basis_strings(const IdealBasis& b) {
    std::vector<std::string> out;
    out.reserve(b.std_basis.size());
    for (const auto& p : b.std_basis) out.push_back(p.to_string());
    return out;
}

}  // namespace mfw
