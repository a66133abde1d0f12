#include "frobspec/constructors.hpp"

#include "frobspec/errors.hpp"
#include "frobspec/numtheory.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace frobspec {
namespace {

// ---------- spec text cursor ----------

class Cursor {
public:
    explicit Cursor(const std::string& text) : t_(text) {}

    std::size_t pos() const noexcept { return i_; }
    bool at_end() const noexcept { return i_ >= t_.size(); }
    char peek() const noexcept { return at_end() ? '\0' : t_[i_]; }
    void skip(std::size_t n) noexcept { i_ += n; }

    void ws() noexcept {
        while (i_ < t_.size() &&
               (t_[i_] == ' ' || t_[i_] == '\t' || t_[i_] == '\r' || t_[i_] == '\n'))
            ++i_;
    }

    bool lit(std::string_view s) {
        ws();
        if (t_.compare(i_, s.size(), s) == 0) {
            i_ += s.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view s) {
        if (!lit(s))
            throw ParseError(i_, "expected '" + std::string(s) + "'");
    }

    std::uint64_t num() {
        ws();
        std::size_t j = i_;
        std::uint64_t v = 0;
        while (j < t_.size() && std::isdigit(static_cast<unsigned char>(t_[j]))) {
            std::uint64_t d = static_cast<std::uint64_t>(t_[j] - '0');
            if (v > (UINT64_MAX - d) / 10)
                throw ParseError(i_, "number too large");
            v = v * 10 + d;
            ++j;
        }
        if (j == i_)
            throw ParseError(i_, "expected a number");
        i_ = j;
        return v;
    }

private:
    const std::string& t_;
    std::size_t i_ = 0;
};

std::vector<std::uint64_t> args(Cursor& p, int k) {
    p.expect("(");
    std::vector<std::uint64_t> out{p.num()};
    for (int i = 1; i < k; ++i) {
        p.expect(",");
        out.push_back(p.num());
    }
    p.expect(")");
    return out;
}

// Consecutive disjoint cycles extend the generator being built; a cycle that
// overlaps it starts the next one.
std::vector<Permutation> parse_cycle_list(Cursor& p, std::size_t deg) {
    std::vector<Permutation> gens;
    std::vector<std::vector<std::uint32_t>> cur;
    std::vector<bool> cur_support(deg, false);

    auto flush = [&] {
        gens.push_back(Permutation::from_cycles(deg, cur));
        cur.clear();
        cur_support.assign(deg, false);
    };

    while (true) {
        p.ws();
        if (p.at_end() || p.peek() != '(') break;
        std::size_t pos = p.pos();
        p.expect("(");
        std::vector<std::uint64_t> pts;
        while (true) {
            p.ws();
            if (p.peek() == ')') {
                p.skip(1);
                break;
            }
            pts.push_back(p.num());
        }
        auto sorted = pts;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError(pos, "repeated point in cycle");
        for (std::uint64_t a : pts)
            if (a >= deg)
                throw ParseError(pos, "point " + std::to_string(a) +
                                          " out of range for degree " + std::to_string(deg));
        bool overlaps = std::any_of(pts.begin(), pts.end(),
                                    [&](std::uint64_t a) { return cur_support[a]; });
        if (!cur.empty() && overlaps) flush();
        std::vector<std::uint32_t> cyc(pts.begin(), pts.end());
        for (std::uint32_t a : cyc) cur_support[a] = true;
        cur.push_back(std::move(cyc));
    }
    if (!cur.empty()) flush();
    return gens;
}

Term parse_term(Cursor& p) {
    p.ws();
    std::size_t pos = p.pos();
    Term t;
    if (p.lit("perm")) {
        p.expect(":");
        std::uint64_t deg = p.num();
        if (deg < 1) throw ParseError(pos, "perm degree must be >= 1");
        if (deg > kMaxDegree) throw ParseError(pos, "perm degree too large");
        p.expect(":");
        t.kind = TermKind::Perm;
        t.degree = static_cast<std::size_t>(deg);
        t.gens = parse_cycle_list(p, t.degree);
        return t;
    }
    if (p.lit("SDP")) {
        auto a = args(p, 3);
        if (a[0] < 1 || a[1] < 1)
            throw ParseError(pos, "SDP(n,m,k) requires n >= 1 and m >= 1");
        std::uint64_t kr = a[0] > 1 ? a[2] % a[0] : 0;
        if (std::gcd(kr, a[0]) != 1 || powmod(a[2], a[1], a[0]) != 1 % a[0])
            throw ParseError(pos, "SDP(n,m,k): invalid action, needs gcd(k,n)=1 and k^m = 1 mod n");
        t.kind = TermKind::SDP;
        t.n = a[0];
        t.m = a[1];
        t.k = a[2];
        return t;
    }
    if (p.lit("SD")) {
        auto a = args(p, 1);
        if (a[0] < 4) throw ParseError(pos, "SD(m) requires m >= 4");
        t.kind = TermKind::SD;
        t.m = a[0];
        return t;
    }
    if (p.lit("Q8")) {
        t.kind = TermKind::Q8;
        return t;
    }
    if (p.lit("Q")) {
        auto a = args(p, 1);
        if (a[0] < 3) throw ParseError(pos, "Q(m) requires m >= 3");
        t.kind = TermKind::Q;
        t.m = a[0];
        return t;
    }
    if (p.lit("AB")) {
        auto a = args(p, 2);
        if (a[0] < 2) throw ParseError(pos, "AB(q,m) requires q >= 2");
        if (a[1] < 2) throw ParseError(pos, "AB(q,m) requires m >= 2");
        t.kind = TermKind::AB;
        t.q = a[0];
        t.m = a[1];
        return t;
    }
    if (p.lit("C")) {
        auto a = args(p, 1);
        if (a[0] < 1) throw ParseError(pos, "C(n) requires n >= 1");
        t.kind = TermKind::C;
        t.n = a[0];
        return t;
    }
    if (p.lit("D")) {
        auto a = args(p, 1);
        if (a[0] < 3) throw ParseError(pos, "D(m) requires m >= 3");
        t.kind = TermKind::D;
        t.m = a[0];
        return t;
    }
    if (p.lit("M")) {
        auto a = args(p, 2);
        if (a[0] < 2) throw ParseError(pos, "M(q,m) requires q >= 2");
        if (a[0] == 2 && a[1] < 4) throw ParseError(pos, "M(2,m) requires m >= 4");
        if (a[0] % 2 == 0 && a[0] != 2)
            throw ParseError(pos, "M(q,m) requires q = 2 or odd q");
        if (a[0] % 2 == 1 && a[1] < 3)
            throw ParseError(pos, "M(q,m) with odd q requires m >= 3");
        t.kind = TermKind::M;
        t.q = a[0];
        t.m = a[1];
        return t;
    }
    if (p.lit("B")) {
        auto a = args(p, 1);
        if (a[0] < 1) throw ParseError(pos, "B(m) requires m >= 1");
        t.kind = TermKind::B;
        t.m = a[0];
        return t;
    }
    throw ParseError(pos, "expected a group term");
}

// ---------- spec size pre-check ----------

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b, std::uint64_t lim) {
    if (b != 0 && a > lim / b) return lim + 1;
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e, std::uint64_t lim) {
    if (base <= 1) return base;
    std::uint64_t r = 1;
    while (e--) {
        r = sat_mul(r, base, lim);
        if (r > lim) return r;
    }
    return r;
}

std::uint64_t term_denoted_order(const Term& t, std::uint64_t lim) {
    switch (t.kind) {
        case TermKind::C: return t.n;
        case TermKind::AB:
        case TermKind::M: return sat_pow(t.q, t.m, lim);
        case TermKind::D:
        case TermKind::SD:
        case TermKind::Q: return sat_pow(2, t.m, lim);
        case TermKind::Q8: return 8;
        case TermKind::B: return sat_mul(3, sat_pow(2, t.m, lim), lim);
        case TermKind::SDP: return sat_mul(t.n, t.m, lim);
        case TermKind::Perm: return 1; // closure discovers it, under the cap
    }
    throw InternalError("unhandled term kind");
}

void check_degree(std::uint64_t deg) {
    if (deg > kMaxDegree)
        throw DomainError("permutation degree too large");
}

std::vector<std::uint32_t> range_cycle(std::uint64_t n) {
    std::vector<std::uint32_t> cyc(static_cast<std::size_t>(n));
    std::iota(cyc.begin(), cyc.end(), 0u);
    return cyc;
}

} // namespace

std::vector<Term> parse_spec(const std::string& text) {
    Cursor p(text);
    std::vector<Term> terms{parse_term(p)};
    while (true) {
        p.ws();
        if (p.at_end()) break;
        if (!p.lit("x"))
            throw ParseError(p.pos(), "expected 'x' or end of spec");
        terms.push_back(parse_term(p));
    }
    return terms;
}

PermRep cyclic_rep(std::uint64_t n) {
    if (n < 1) throw DomainError("cyclic group order must be >= 1");
    if (n == 1) return {1, {}};
    check_degree(n);
    std::size_t deg = static_cast<std::size_t>(n);
    return {deg, {Permutation::from_cycles(deg, {range_cycle(n)})}};
}

PermRep sdp_rep(std::uint64_t n, std::uint64_t m, std::uint64_t k) {
    if (n < 1 || m < 1) throw DomainError("sdp requires n >= 1 and m >= 1");
    std::uint64_t kr = k % n;
    if (std::gcd(kr, n) != 1) throw DomainError("sdp action: k must be a unit mod n");
    if (powmod(kr, m, n) != 1 % n) throw DomainError("sdp action: k^m must be 1 mod n");
    check_degree(n + m);
    std::size_t deg = static_cast<std::size_t>(n + m);
    PermRep rep;
    rep.degree = deg;
    if (n > 1)
        rep.gens.push_back(Permutation::from_cycles(deg, {range_cycle(n)}));
    if (m > 1) {
        std::vector<std::uint32_t> img(deg);
        std::iota(img.begin(), img.end(), 0u);
        for (std::uint64_t i = 0; i < n; ++i)
            img[i] = static_cast<std::uint32_t>(kr * i % n);
        for (std::uint64_t j = 0; j < m; ++j)
            img[n + j] = static_cast<std::uint32_t>(n + (j + 1) % m);
        rep.gens.push_back(Permutation::from_images(std::move(img)));
    }
    return rep;
}

PermRep dicyclic_rep(std::uint64_t big_n) {
    if (big_n < 4 || big_n % 2 != 0)
        throw DomainError("dicyclic requires even N >= 4");
    check_degree(2 * big_n);
    const std::uint64_t N = big_n, half = N / 2;
    // Left-regular action; element (i, j) sits at index i + j*N.
    auto mul = [N, half](std::uint64_t x, std::uint64_t y) -> std::uint64_t {
        std::uint64_t i1 = x % N, j1 = x / N, i2 = y % N, j2 = y / N;
        if (j1 == 0) return (i1 + i2) % N + j2 * N;
        if (j2 == 0) return (i1 + N - i2) % N + N;
        return (i1 + N - i2 + half) % N;
    };
    std::size_t deg = static_cast<std::size_t>(2 * N);
    std::vector<std::uint32_t> ga(deg), gb(deg);
    for (std::size_t x = 0; x < deg; ++x) {
        ga[x] = static_cast<std::uint32_t>(mul(1, x));
        gb[x] = static_cast<std::uint32_t>(mul(N, x));
    }
    PermRep rep;
    rep.degree = deg;
    rep.gens.push_back(Permutation::from_images(std::move(ga)));
    rep.gens.push_back(Permutation::from_images(std::move(gb)));
    return rep;
}

PermRep direct_product(const PermRep& a, const PermRep& b) {
    check_degree(static_cast<std::uint64_t>(a.degree) + b.degree);
    std::size_t deg = a.degree + b.degree;
    PermRep rep;
    rep.degree = deg;
    for (const auto& g : a.gens) {
        std::vector<std::uint32_t> img(deg);
        for (std::size_t i = 0; i < a.degree; ++i) img[i] = g[i];
        std::iota(img.begin() + a.degree, img.end(), static_cast<std::uint32_t>(a.degree));
        rep.gens.push_back(Permutation::raw(std::move(img)));
    }
    for (const auto& g : b.gens) {
        std::vector<std::uint32_t> img(deg);
        std::iota(img.begin(), img.begin() + a.degree, 0u);
        for (std::size_t i = 0; i < b.degree; ++i)
            img[a.degree + i] = static_cast<std::uint32_t>(a.degree + g[i]);
        rep.gens.push_back(Permutation::raw(std::move(img)));
    }
    return rep;
}

PermRep term_rep(const Term& t) {
    switch (t.kind) {
        case TermKind::C:
            return cyclic_rep(t.n);
        case TermKind::AB:
            if (t.q < 2 || t.m < 2) throw DomainError("AB(q,m) requires q >= 2 and m >= 2");
            return direct_product(cyclic_rep(ipow(t.q, static_cast<std::uint32_t>(t.m - 1))),
                                  cyclic_rep(t.q));
        case TermKind::D: {
            if (t.m < 3) throw DomainError("D(m) requires m >= 3");
            std::uint64_t h = ipow(2, static_cast<std::uint32_t>(t.m - 1));
            return sdp_rep(h, 2, h - 1);
        }
        case TermKind::SD: {
            if (t.m < 4) throw DomainError("SD(m) requires m >= 4");
            std::uint64_t h = ipow(2, static_cast<std::uint32_t>(t.m - 1));
            return sdp_rep(h, 2, ipow(2, static_cast<std::uint32_t>(t.m - 2)) - 1);
        }
        case TermKind::M: {
            bool ok = (t.q == 2 && t.m >= 4) || (t.q % 2 == 1 && t.q >= 3 && t.m >= 3);
            if (!ok) throw DomainError("M(q,m) needs q = 2, m >= 4 or odd q, m >= 3");
            std::uint64_t h = ipow(t.q, static_cast<std::uint32_t>(t.m - 1));
            return sdp_rep(h, t.q, 1 + ipow(t.q, static_cast<std::uint32_t>(t.m - 2)));
        }
        case TermKind::Q:
            if (t.m < 3) throw DomainError("Q(m) requires m >= 3");
            return dicyclic_rep(ipow(2, static_cast<std::uint32_t>(t.m - 1)));
        case TermKind::Q8:
            return dicyclic_rep(4);
        case TermKind::B:
            if (t.m < 1) throw DomainError("B(m) requires m >= 1");
            return sdp_rep(3, ipow(2, static_cast<std::uint32_t>(t.m)), 2);
        case TermKind::SDP:
            return sdp_rep(t.n, t.m, t.k);
        case TermKind::Perm:
            if (t.degree < 1) throw DomainError("perm degree must be >= 1");
            return {t.degree, t.gens};
    }
    throw InternalError("unhandled term kind");
}

PermRep spec_rep(const std::vector<Term>& terms) {
    if (terms.empty()) throw DomainError("spec needs at least one term");
    PermRep rep = term_rep(terms.front());
    for (std::size_t i = 1; i < terms.size(); ++i)
        rep = direct_product(rep, term_rep(terms[i]));
    return rep;
}

FiniteGroup build(const std::vector<Term>& terms, std::size_t cap) {
    std::uint64_t lim = std::min<std::uint64_t>(cap, UINT64_MAX - 1);
    std::uint64_t denoted = 1;
    bool exact = true;
    for (const Term& t : terms) {
        denoted = sat_mul(denoted, term_denoted_order(t, lim), lim);
        if (t.kind == TermKind::Perm) exact = false;
    }
    if (denoted > lim)
        throw OrderCapError(cap, static_cast<std::size_t>(denoted));
    PermRep rep = spec_rep(terms);
    FiniteGroup g = FiniteGroup::generate(rep.degree, rep.gens, cap);
    if (exact && g.order() != denoted)
        throw InternalError("constructed group has order " + std::to_string(g.order()) +
                            ", expected " + std::to_string(denoted));
    return g;
}

FiniteGroup build_spec(const std::string& text, std::size_t cap) {
    return build(parse_spec(text), cap);
}

std::string render_perm_spec(std::size_t degree, const std::vector<Permutation>& gens) {
    std::vector<Permutation> use;
    for (const auto& g : gens) {
        if (g.degree() != degree)
            throw DomainError("generator degree does not match the stated degree");
        if (!g.is_identity()) use.push_back(g);
    }

    auto support = [degree](const Permutation& g) {
        std::vector<bool> s(degree, false);
        for (std::size_t i = 0; i < degree; ++i)
            if (g[i] != i) s[i] = true;
        return s;
    };
    auto disjoint = [degree](const std::vector<bool>& a, const std::vector<bool>& b) {
        for (std::size_t i = 0; i < degree; ++i)
            if (a[i] && b[i]) return false;
        return true;
    };

    std::string text = "perm:" + std::to_string(degree) + ":";
    std::vector<Permutation> out_gens;
    std::vector<bool> prev;
    for (const auto& g : use) {
        std::vector<bool> sup = support(g);
        if (!out_gens.empty() && disjoint(prev, sup)) {
            // The grammar would merge two disjoint generators; splice in their
            // product so every boundary overlaps.
            Permutation bridge = compose(out_gens.back(), g);
            text += cycle_string(bridge);
            out_gens.push_back(std::move(bridge));
        }
        text += cycle_string(g);
        out_gens.push_back(g);
        prev = std::move(sup);
    }

    std::vector<Term> back = parse_spec(text);
    if (back.size() != 1 || back[0].kind != TermKind::Perm ||
        back[0].degree != degree || back[0].gens != out_gens)
        throw InternalError("rendered perm spec does not parse back to its generators");
    return text;
}

std::string dihedral_spec(std::uint64_t n) {
    if (n < 3) throw DomainError("dihedral_spec requires n >= 3");
    return "SDP(" + std::to_string(n) + ",2," + std::to_string(n - 1) + ")";
}

} // namespace frobspec
