#include "hypertoric/ring.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace hypertoric {

namespace {

int grevlex_cmp(const Expo& a, const Expo& b, std::size_t lo, std::size_t hi) {
    std::int64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: the monomial whose rightmost difference is negative wins.
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] == b[i]) continue;
        return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::cmp(const Expo& a, const Expo& b) const {
    if (elim > 0) {
        int c = grevlex_cmp(a, b, 0, elim);
        if (c != 0) return c;
    }
    return grevlex_cmp(a, b, elim, a.size());
}

Poly Poly::monomial(std::size_t nvars, const Expo& e, const Rat& c) {
    Poly p(nvars);
    p.add_term(e, c);
    return p;
}

Poly Poly::constant(std::size_t nvars, const Rat& c) {
    return monomial(nvars, Expo(nvars, 0), c);
}

void Poly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    if (e.size() != nvars_) throw Error("exponent arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Expo e = e1;
            for (std::size_t i = 0; i < nvars_; ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::shifted(const Expo& e) const {
    Poly r(nvars_);
    for (const auto& [e1, c] : terms_) {
        Expo e2 = e1;
        for (std::size_t i = 0; i < nvars_; ++i) e2[i] += e[i];
        r.terms_.emplace(e2, c);
    }
    return r;
}

bool Poly::has_negative_exponent() const {
    for (const auto& [e, c] : terms_)
        for (auto x : e)
            if (x < 0) return true;
    return false;
}

const Expo& Poly::leading_monomial(const MonomialOrder& ord) const {
    if (terms_.empty()) throw Error("leading monomial of zero");
    const Expo* best = nullptr;
    for (const auto& [e, c] : terms_)
        if (!best || ord.greater(e, *best)) best = &e;
    return *best;
}

const Rat& Poly::coeff(const Expo& e) const {
    static const Rat zero(0);
    auto it = terms_.find(e);
    return it == terms_.end() ? zero : it->second;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += it->second.get_str();
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (it->first[i] == 0) continue;
            s += "*";
            s += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
            if (it->first[i] != 1) s += "^" + std::to_string(it->first[i]);
        }
    }
    return s;
}

namespace {

std::size_t g_pair_limit = 2000000;

bool divides(const Expo& a, const Expo& b) {  // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expo lcm_expo(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Expo sub_expo(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool coprime(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

Poly reduce_full(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& ord) {
    Poly h = f, r(f.nvars());
    while (!h.is_zero()) {
        Expo lm = h.leading_monomial(ord);
        Rat lc = h.coeff(lm);
        bool reduced = false;
        for (const Poly& g : basis) {
            const Expo& glm = g.leading_monomial(ord);
            if (!divides(glm, lm)) continue;
            Rat factor = lc / g.coeff(glm);
            h = h - g.shifted(sub_expo(lm, glm)).scaled(factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            r.add_term(lm, lc);
            h.add_term(lm, -lc);
        }
    }
    return r;
}

Poly make_monic(const Poly& f, const MonomialOrder& ord) {
    return f.scaled(1 / f.coeff(f.leading_monomial(ord)));
}

}  // namespace

std::size_t groebner_pair_limit() { return g_pair_limit; }
void set_groebner_pair_limit(std::size_t limit) { g_pair_limit = limit; }

GroebnerBasis groebner(std::vector<Poly> input, MonomialOrder order) {
    std::size_t nvars = 0;
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (input[i].has_negative_exponent()) throw Error("groebner needs polynomial input");
        if (i > 0 && input[i].nvars() != nvars) throw Error("groebner: mixed arities");
        nvars = input[i].nvars();
    }
    std::vector<Poly> g;
    for (auto& f : input)
        if (!f.is_zero()) g.push_back(make_monic(f, order));
    std::sort(g.begin(), g.end(), [&](const Poly& a, const Poly& b) {
        return order.cmp(a.leading_monomial(order), b.leading_monomial(order)) < 0;
    });

    // Pair queue keyed by (lcm degree, i, j) for a deterministic normal
    // selection strategy.
    struct Pair {
        std::int64_t deg;
        std::size_t i, j;
        bool operator<(const Pair& o) const {
            return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j);
        }
    };
    std::set<Pair> pairs;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Expo l = lcm_expo(g[i].leading_monomial(order), g[j].leading_monomial(order));
            std::int64_t deg = 0;
            for (auto e : l) deg += e;
            pairs.insert({deg, i, j});
        }
    };
    for (std::size_t j = 0; j < g.size(); ++j) push_pairs(j);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > g_pair_limit)
            throw ResourceLimit("groebner pair limit exceeded");
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        const Expo &li = g[p.i].leading_monomial(order), &lj = g[p.j].leading_monomial(order);
        if (coprime(li, lj)) continue;  // Buchberger's first criterion
        Expo l = lcm_expo(li, lj);
        Poly s = g[p.i].shifted(sub_expo(l, li)) - g[p.j].shifted(sub_expo(l, lj));
        Poly r = reduce_full(s, g, order);
        if (r.is_zero()) continue;
        g.push_back(make_monic(r, order));
        push_pairs(g.size() - 1);
    }

    // Interreduce to the unique reduced basis.
    std::vector<Poly> reduced;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Expo& lm = g[i].leading_monomial(order);
        bool redundant = false;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            const Expo& lj = g[j].leading_monomial(order);
            if (divides(lj, lm) && !(lj == lm && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) reduced.push_back(g[i]);
    }
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = make_monic(reduce_full(reduced[i], others, order), order);
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return order.cmp(a.leading_monomial(order), b.leading_monomial(order)) < 0;
    });
    GroebnerBasis gb;
    gb.gens = std::move(reduced);
    gb.order = order;
    gb.nvars = nvars;
    return gb;
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
    if (f.has_negative_exponent()) throw Error("normal_form needs polynomial input");
    return reduce_full(f, gb.gens, gb.order);
}

bool ideal_membership(const Poly& f, const GroebnerBasis& gb) {
    return normal_form(f, gb).is_zero();
}

std::vector<Poly> saturate_by_monomial(const std::vector<Poly>& gens, const Expo& mono) {
    std::size_t n = mono.size();
    // Prepend the inverse variable y: (I + <1 - y*mono>) eliminate y.
    auto lift = [&](const Poly& f) {
        Poly r(n + 1);
        for (const auto& [e, c] : f.terms()) {
            Expo e2(n + 1, 0);
            for (std::size_t i = 0; i < n; ++i) e2[i + 1] = e[i];
            r.add_term(e2, c);
        }
        return r;
    };
    std::vector<Poly> lifted;
    for (const auto& f : gens) lifted.push_back(lift(f));
    Poly rel = Poly::one(n + 1);
    Expo ym(n + 1, 0);
    ym[0] = 1;
    for (std::size_t i = 0; i < n; ++i) ym[i + 1] = mono[i];
    rel.add_term(ym, Rat(-1));  // 1 - y * mono
    lifted.push_back(rel);
    GroebnerBasis gb = groebner(std::move(lifted), MonomialOrder{1});
    std::vector<Poly> out;
    for (const auto& f : gb.gens) {
        bool has_y = false;
        for (const auto& [e, c] : f.terms())
            if (e[0] > 0) has_y = true;
        if (has_y) continue;
        Poly p(n);
        for (const auto& [e, c] : f.terms()) p.add_term(Expo(e.begin() + 1, e.end()), c);
        out.push_back(std::move(p));
    }
    if (out.empty()) out.push_back(Poly(n));  // zero ideal
    return out;
}

QuotientBasis quotient_staircase(const GroebnerBasis& gb) {
    QuotientBasis out;
    std::size_t n = gb.nvars;
    std::vector<Expo> lms;
    for (const auto& f : gb.gens)
        if (!f.is_zero()) lms.push_back(f.leading_monomial(gb.order));
    for (const auto& lm : lms) {
        bool unit = true;
        for (auto e : lm) unit = unit && e == 0;
        if (unit) {  // ideal is the whole ring
            out.finite = true;
            return out;
        }
    }
    // Finite iff each variable has a pure-power leading monomial.
    std::vector<std::int64_t> cap(n, -1);
    for (const auto& lm : lms) {
        int support = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (lm[i] == 0) continue;
            if (support >= 0) pure = false;
            support = int(i);
        }
        if (pure && support >= 0)
            cap[support] = cap[support] < 0 ? lm[support] : std::min(cap[support], lm[support]);
    }
    if (n > 0)
        for (std::size_t i = 0; i < n; ++i)
            if (cap[i] < 0) return out;  // infinite
    out.finite = true;
    Expo cur(n, 0);
    std::vector<Expo> found;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            for (const auto& lm : lms)
                if (divides(lm, cur)) return;
            found.push_back(cur);
            return;
        }
        for (cur[i] = 0; cur[i] < cap[i]; ++cur[i]) rec(i + 1);
        cur[i] = 0;
    };
    rec(0);
    std::sort(found.begin(), found.end(),
              [&](const Expo& a, const Expo& b) { return gb.order.cmp(a, b) < 0; });
    out.monomials = std::move(found);
    return out;
}

Poly clear_denominators(const Poly& laurent) {
    if (laurent.is_zero()) return laurent;
    std::size_t n = laurent.nvars();
    Expo shift(n, 0);
    for (const auto& [e, c] : laurent.terms())
        for (std::size_t i = 0; i < n; ++i) shift[i] = std::min(shift[i], e[i]);
    for (auto& s : shift) s = -s;
    return laurent.shifted(shift);
}

LaurentQuotient laurent_quotient_basis(std::size_t nvars, const std::vector<Poly>& laurent_gens) {
    std::size_t n = nvars;
    for (const auto& f : laurent_gens)
        if (f.nvars() != n) throw Error("laurent_quotient_basis: arity mismatch");
    std::vector<Poly> cleared;
    for (const auto& f : laurent_gens)
        if (!f.is_zero()) cleared.push_back(clear_denominators(f));
    Expo all_vars(n, 1);
    std::vector<Poly> sat =
        cleared.empty() ? std::vector<Poly>{Poly(n)} : saturate_by_monomial(cleared, all_vars);
    LaurentQuotient out;
    out.gb = groebner(std::move(sat), MonomialOrder{});
    QuotientBasis q = quotient_staircase(out.gb);
    out.finite = q.finite;
    out.monomials = std::move(q.monomials);
    return out;
}

bool laurent_ideal_membership(const Poly& f, const std::vector<Poly>& laurent_gens) {
    if (f.is_zero()) return true;
    std::size_t n = std::max(f.nvars(), std::size_t(0));
    for (const auto& g : laurent_gens) n = std::max(n, g.nvars());
    std::vector<Poly> cleared;
    for (const auto& g : laurent_gens)
        if (!g.is_zero()) cleared.push_back(clear_denominators(g));
    if (cleared.empty()) return false;
    Expo all_vars(n, 1);
    GroebnerBasis gb = groebner(saturate_by_monomial(cleared, all_vars), MonomialOrder{});
    return ideal_membership(clear_denominators(f), gb);
}

}  // namespace hypertoric
