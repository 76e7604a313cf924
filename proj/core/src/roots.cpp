#include "wtrunc/roots.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wtrunc {

namespace {

constexpr unsigned kTrialLimit = 1000000;     // trial-division bound
constexpr std::size_t kCandidateCap = 400000; // divisor-pair enumeration cap

const std::vector<unsigned>& small_primes() {
    static const std::vector<unsigned> primes = [] {
        std::vector<bool> sieve(kTrialLimit + 1, true);
        std::vector<unsigned> ps;
        for (unsigned i = 2; i <= kTrialLimit; ++i) {
            if (!sieve[i]) continue;
            ps.push_back(i);
            for (unsigned long long j = 1ULL * i * i; j <= kTrialLimit; j += i)
                sieve[static_cast<std::size_t>(j)] = false;
        }
        return ps;
    }();
    return primes;
}

// Trial-division factorization; returns false when a cofactor > 1 remains.
bool factorize(Int n, std::map<Int, int>& out) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (unsigned p : small_primes()) {
        if (n == 1) break;
        if (Int(p) * p > n) break;
        while (n % p == 0) {
            out[Int(p)] += 1;
            n /= p;
        }
    }
    if (n == 1) return true;
    if (n <= Int(kTrialLimit) * kTrialLimit) {  // remaining cofactor is prime
        out[n] += 1;
        return true;
    }
    return false;
}

std::vector<Int> divisors(const std::map<Int, int>& f, std::size_t cap) {
    std::vector<Int> ds{Int(1)};
    for (const auto& [p, e] : f) {
        std::size_t base = ds.size();
        Int pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                ds.push_back(ds[i] * pk);
                if (ds.size() > cap) return {};
            }
        }
    }
    return ds;
}

// p(a/b) == 0 tested as the integer identity sum c_i a^i b^(n-i) == 0.
bool is_root(const std::vector<Int>& c, const Int& a, const Int& b) {
    Int acc(0);
    Int bpow(1);
    std::vector<Int> apow(c.size());
    apow[0] = 1;
    for (std::size_t i = 1; i < c.size(); ++i) apow[i] = apow[i - 1] * a;
    for (std::size_t i = c.size(); i-- > 0;) {
        acc += c[i] * apow[i] * bpow;
        bpow *= b;
    }
    return acc == 0;
}

// Complete rational-root set of a squarefree primitive integer polynomial.
std::vector<Rat> rational_roots_squarefree(const UPoly& sf) {
    std::vector<Rat> roots;
    if (sf.degree() <= 0) return roots;
    if (sf.degree() == 1) {
        roots.push_back(-sf[0] / sf[1]);
        return roots;
    }
    std::vector<Int> c = sf.int_coeffs();
    const Int& lc = c.back();
    const Int& tc = c.front();  // nonzero: x | p handled by the caller

    std::map<Int, int> flc, ftc;
    bool ok = factorize(lc, flc) && factorize(tc, ftc);
    std::vector<Int> dl, dt;
    if (ok) {
        dl = divisors(flc, kCandidateCap);
        dt = divisors(ftc, kCandidateCap);
        if (dl.empty() || dt.empty() || dl.size() * dt.size() > kCandidateCap) ok = false;
    }
    if (ok) {
        for (const Int& b : dl)
            for (const Int& a : dt) {
                if (boost::multiprecision::gcd(a, b) != 1) continue;
                if (is_root(c, a, b)) roots.emplace_back(a, b);
                if (is_root(c, -a, b)) roots.emplace_back(-a, b);
            }
    } else {
        // Factoring resisted: isolate real roots and reconstruct the unique
        // denominator-bounded rational each interval could contain.
        Rat bound_gap = Rat(1, 2) / Rat(lc * lc < 0 ? Int(-(lc * lc)) : Int(lc * lc));
        for (const auto& iv : isolate_real_roots(sf)) {
            Rat lo = iv.lo, hi = iv.hi;
            int slo = sf.eval(lo).sign();
            while (hi - lo >= bound_gap) {
                Rat mid = (lo + hi) / Rat(2);
                Rat v = sf.eval(mid);
                if (v.is_zero()) {
                    roots.push_back(mid);
                    break;
                }
                if (v.sign() == slo)
                    lo = mid;
                else
                    hi = mid;
            }
            if (hi - lo < bound_gap) {
                Rat cand = simplest_rational_in(lo, hi);
                if (sf.eval(cand).is_zero()) roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

std::vector<Rat> rational_roots_of(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("identically zero");
    UPoly work = p.primitive();
    std::vector<Rat> roots;
    // split off x^t
    std::size_t t = 0;
    while (t < work.coeffs().size() && work[t].is_zero()) ++t;
    if (t > 0) {
        roots.emplace_back(0);
        std::vector<Rat> shifted(work.coeffs().begin() + static_cast<long>(t),
                                 work.coeffs().end());
        work = UPoly(std::move(shifted));
    }
    auto rs = rational_roots_squarefree(work.squarefree_part());
    roots.insert(roots.end(), rs.begin(), rs.end());
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

RootReport find_roots(const UPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("identically zero");
    RootReport rep;
    UPoly residual = p.primitive();
    for (const Rat& r : rational_roots_of(p)) {
        UPoly lin({-r, Rat(1)});
        int mult = 0;
        while (true) {
            auto [q, rem] = residual.divmod(lin);
            if (!rem.is_zero()) break;
            residual = q;
            ++mult;
        }
        rep.rational_roots.emplace_back(r, mult);
    }
    rep.residual = residual.is_zero() ? residual : residual.primitive();
    if (rep.residual.degree() > 0)
        rep.real_root_intervals = isolate_real_roots(rep.residual.squarefree_part());
    return rep;
}

RootReport find_roots(const MPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("identically zero");
    std::string var;
    for (const auto& v : p.vars())
        if (p.depends_on(v)) {
            if (!var.empty())
                throw std::invalid_argument("find_roots: polynomial is not univariate");
            var = v;
        }
    auto cs = p.coeffs_in(var.empty() ? (p.vars().empty() ? "x" : p.vars()[0]) : var);
    std::vector<Rat> dense(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].is_constant())
            throw std::invalid_argument("find_roots: polynomial is not univariate");
        dense[i] = cs[i].constant_value();
    }
    return find_roots(UPoly(std::move(dense)));
}

}  // namespace wtrunc
