#include "wtrunc/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wtrunc {

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_ints(std::initializer_list<long long> cs) {
    std::vector<Rat> v;
    v.reserve(cs.size());
    for (long long x : cs) v.emplace_back(x);
    return UPoly(std::move(v));
}

const Rat& UPoly::leading() const {
    if (c_.empty()) throw std::domain_error("UPoly::leading: zero polynomial");
    return c_.back();
}

const Rat& UPoly::trailing() const {
    if (c_.empty()) throw std::domain_error("UPoly::trailing: zero polynomial");
    for (const auto& x : c_)
        if (!x.is_zero()) return x;
    return c_.back();  // unreachable
}

UPoly UPoly::operator-() const {
    UPoly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(v));
}

UPoly operator*(const Rat& s, const UPoly& p) {
    if (s.is_zero()) return UPoly();
    UPoly out = p;
    for (auto& x : out.c_) x *= s;
    return out;
}

Rat UPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = Rat(static_cast<long long>(i)) * c_[i];
    return UPoly(std::move(v));
}

UPoly UPoly::shifted(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rat> v(c_.size() + k, Rat(0));
    std::copy(c_.begin(), c_.end(), v.begin() + k);
    return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UPoly::divmod: division by zero");
    UPoly rem = *this;
    if (rem.degree() < d.degree()) return {UPoly(), rem};
    std::vector<Rat> q(static_cast<std::size_t>(rem.degree() - d.degree()) + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        std::size_t k = static_cast<std::size_t>(rem.degree() - d.degree());
        Rat f = rem.leading() / d.leading();
        q[k] = f;
        UPoly sub = f * d.shifted(static_cast<unsigned>(k));
        rem = rem - sub;
    }
    return {UPoly(std::move(q)), rem};
}

UPoly UPoly::exact_div(const UPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("UPoly::exact_div: not divisible");
    return q;
}

Rat UPoly::content() const {
    if (c_.empty()) return Rat(0);
    Int gn(0), ld(1);
    for (const auto& x : c_) {
        gn = boost::multiprecision::gcd(gn, x.num() < 0 ? Int(-x.num()) : x.num());
        ld = ld / boost::multiprecision::gcd(ld, x.den()) * x.den();
    }
    return Rat(gn, ld);
}

UPoly UPoly::primitive() const {
    if (c_.empty()) return UPoly();
    Rat ct = content();
    UPoly out = ct.inverse() * *this;
    if (out.leading().sign() < 0) out = -out;
    return out;
}

std::vector<Int> UPoly::int_coeffs() const {
    std::vector<Int> v;
    v.reserve(c_.size());
    for (const auto& x : c_) {
        if (!x.is_integer()) throw std::domain_error("UPoly::int_coeffs: non-integer coefficient");
        v.push_back(x.num());
    }
    return v;
}

namespace {

// Positive-scale normalization: divide by |content| only, keeping the sign
// pattern intact (Sturm chains may only be scaled by positive constants).
UPoly positive_scale(const UPoly& p) {
    if (p.is_zero()) return p;
    Rat ct = p.content();  // > 0 by construction
    return ct.inverse() * p;
}

// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a  mod  b,
// together with the sign of the multiplier.
std::pair<UPoly, int> pseudo_rem(const UPoly& a, const UPoly& b) {
    int delta = a.degree() - b.degree();
    if (delta < 0) return {a, 1};
    Rat m = b.leading().pow(static_cast<unsigned>(delta) + 1);
    UPoly rem = m * a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        std::size_t k = static_cast<std::size_t>(rem.degree() - b.degree());
        Rat f = rem.leading() / b.leading();
        rem = rem - f * b.shifted(static_cast<unsigned>(k));
    }
    return {rem, m.sign()};
}

}  // namespace

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a.is_zero() ? UPoly() : a.primitive();
    UPoly y = b.is_zero() ? UPoly() : b.primitive();
    if (x.is_zero()) return y.is_zero() ? UPoly() : y.leading().inverse() * y;
    if (y.is_zero()) return x.leading().inverse() * x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        auto [r, sgn] = pseudo_rem(x, y);
        (void)sgn;
        x = y;
        y = r.is_zero() ? UPoly() : r.primitive();
    }
    return x.leading().inverse() * x;  // monic
}

UPoly UPoly::squarefree_part() const {
    if (is_zero()) return UPoly();
    if (degree() == 0) return UPoly::constant(Rat(1));
    UPoly g = gcd(*this, derivative());
    UPoly sf = exact_div(g);
    return sf.primitive();
}

std::vector<UPoly> sturm_chain(const UPoly& squarefree) {
    std::vector<UPoly> chain;
    if (squarefree.is_zero()) return chain;
    chain.push_back(positive_scale(squarefree));
    UPoly d = squarefree.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(positive_scale(d));
    while (true) {
        const UPoly& s1 = chain[chain.size() - 2];
        const UPoly& s2 = chain[chain.size() - 1];
        auto [pr, msign] = pseudo_rem(s1, s2);
        if (pr.is_zero()) break;
        // true remainder = pr / m; the next chain element is -remainder up to
        // a positive factor, so flip pr exactly when m > 0.
        UPoly next = (msign > 0) ? -pr : pr;
        chain.push_back(positive_scale(next));
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int variations_at(const std::vector<UPoly>& chain, const Rat& x) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(p.eval(x).sign());
    return variations(s);
}

int variations_at_inf(const std::vector<UPoly>& chain, int dir) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) {
        if (p.is_zero()) {
            s.push_back(0);
            continue;
        }
        int lead = p.leading().sign();
        if (dir < 0 && (p.degree() % 2 == 1)) lead = -lead;
        s.push_back(lead);
    }
    return variations(s);
}

}  // namespace

int sturm_count(const std::vector<UPoly>& chain, const Rat& a, const Rat& b) {
    return variations_at(chain, a) - variations_at(chain, b);
}

int sturm_count_all(const std::vector<UPoly>& chain) {
    return variations_at_inf(chain, -1) - variations_at_inf(chain, +1);
}

Rat root_bound(const UPoly& p) {
    if (p.is_zero() || p.degree() == 0) return Rat(1);
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat a = (p[static_cast<std::size_t>(i)] / p.leading()).abs();
        if (a > m) m = a;
    }
    return m + Rat(1);
}

namespace {

void isolate_rec(const std::vector<UPoly>& chain, const UPoly& p, const Rat& lo,
                 const Rat& hi, int count, std::vector<RootInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({lo, hi});
        return;
    }
    Rat mid = (lo + hi) / Rat(2);
    if (p.eval(mid).is_zero()) {
        // mid is an exact (rational) root; carve a private interval around it.
        Rat w = (hi - lo) / Rat(4);
        while (true) {
            Rat a = mid - w, b = mid + w;
            if (!p.eval(a).is_zero() && !p.eval(b).is_zero() &&
                sturm_count(chain, a, b) == 1) {
                isolate_rec(chain, p, lo, a, sturm_count(chain, lo, a), out);
                out.push_back({a, b});
                isolate_rec(chain, p, b, hi, sturm_count(chain, b, hi), out);
                return;
            }
            w = w / Rat(2);
        }
    }
    int left = sturm_count(chain, lo, mid);
    isolate_rec(chain, p, lo, mid, left, out);
    isolate_rec(chain, p, mid, hi, count - left, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UPoly& squarefree) {
    std::vector<RootInterval> out;
    if (squarefree.is_zero() || squarefree.degree() <= 0) return out;
    auto chain = sturm_chain(squarefree);
    int total = sturm_count_all(chain);
    if (total == 0) return out;
    Rat bound = root_bound(squarefree);
    // Endpoints strictly outside the Cauchy disc are never roots.
    isolate_rec(chain, squarefree, -bound, bound, sturm_count(chain, -bound, bound), out);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

Rat simplest_rational_in(const Rat& lo, const Rat& hi) {
    if (hi < lo) throw std::invalid_argument("simplest_rational_in: empty interval");
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rat(0);
    if (hi.sign() < 0) return -simplest_rational_in(-hi, -lo);
    // 0 < lo <= hi
    Int fl = lo.num() / lo.den();  // floor for positive lo
    Rat f(fl);
    if (f == lo) return lo;
    if (Rat(fl + 1) <= hi) return Rat(fl + 1);
    Rat r = simplest_rational_in((hi - f).inverse(), (lo - f).inverse());
    return f + r.inverse();
}

std::string UPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        Rat a = c_[i];
        if (!first) {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (i == 0 || a != Rat(1)) os << a.str();
        if (i > 0) {
            if (a != Rat(1)) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace wtrunc
