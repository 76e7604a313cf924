#include "wtrunc/quotient_ring.hpp"

#include <stdexcept>

namespace wtrunc {

namespace {

UPoly reduce(const UPoly& a, const UPoly& phi) { return a.divmod(phi).second; }

BiPoly reduce(const BiPoly& p, const UPoly& phi) {
    BiPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = reduce(p[i], phi);
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

// Extended Euclid: inverse of a mod phi; caller guarantees gcd(a, phi) = 1.
UPoly mod_inverse(const UPoly& a, const UPoly& phi) {
    UPoly r0 = phi, r1 = reduce(a, phi);
    UPoly t0, t1 = UPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UPoly tn = t0 - q * t1;
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = tn;
    }
    if (r0.degree() != 0) throw std::logic_error("mod_inverse: element not invertible");
    return reduce(r0.leading().inverse() * t0, phi);
}

BiPoly scale(const BiPoly& p, const UPoly& f, const UPoly& phi) {
    BiPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = reduce(p[i] * f, phi);
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

// Remainder of a by monic (in t) divisor b, coefficients mod phi.
BiPoly rem_by_monic(BiPoly a, const BiPoly& b, const UPoly& phi) {
    while (a.size() >= b.size()) {
        UPoly lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = reduce(a[i + shift] - lead * b[i], phi);
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        if (a.size() < b.size()) break;
    }
    return a;
}

// Quotient of a by monic divisor b (exact division), coefficients mod phi.
BiPoly div_by_monic(BiPoly a, const BiPoly& b, const UPoly& phi) {
    if (a.size() < b.size()) {
        if (!a.empty()) throw std::logic_error("div_by_monic: not divisible");
        return {};
    }
    BiPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size()) {
        UPoly lead = a.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = reduce(a[i + shift] - lead * b[i], phi);
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    if (!a.empty()) throw std::logic_error("div_by_monic: not divisible");
    return q;
}

struct Task {
    UPoly phi;
    BiPoly A, B;
};

// Core Euclid loop with splitting; calls sink(branch) with a monic gcd.
template <typename Sink>
void gcd_rec(Task task, Sink& sink) {
    while (true) {
        task.A = reduce(task.A, task.phi);
        task.B = reduce(task.B, task.phi);
        if (bipoly_degree(task.A) < bipoly_degree(task.B)) std::swap(task.A, task.B);
        if (task.B.empty()) break;
        UPoly lead = task.B.back();
        UPoly g = UPoly::gcd(lead, task.phi);
        if (g.degree() == 0) {
            BiPoly Bm = scale(task.B, mod_inverse(lead, task.phi), task.phi);
            BiPoly R = rem_by_monic(task.A, Bm, task.phi);
            task.A = std::move(Bm);
            task.B = std::move(R);
        } else if (g.degree() == task.phi.degree()) {
            task.B.pop_back();  // leading coefficient is zero on this branch
        } else {
            gcd_rec({g, task.A, task.B}, sink);
            gcd_rec({task.phi.exact_div(g), task.A, task.B}, sink);
            return;
        }
    }
    // gcd is A; normalize monic (splitting again if its lead is a zero divisor)
    if (task.A.empty()) {
        sink(QuotientBranch{task.phi, {}});
        return;
    }
    UPoly lead = task.A.back();
    UPoly g = UPoly::gcd(lead, task.phi);
    if (g.degree() == 0) {
        sink(QuotientBranch{task.phi, scale(task.A, mod_inverse(lead, task.phi), task.phi)});
    } else if (g.degree() == task.phi.degree()) {
        BiPoly A2 = task.A;
        A2.pop_back();
        gcd_rec({task.phi, std::move(A2), {}}, sink);
    } else {
        gcd_rec({g, task.A, {}}, sink);
        gcd_rec({task.phi.exact_div(g), task.A, {}}, sink);
    }
}

}  // namespace

int bipoly_degree(const BiPoly& p) { return static_cast<int>(p.size()) - 1; }

std::vector<QuotientBranch> quotient_gcd(const BiPoly& A, const BiPoly& B, const UPoly& phi) {
    if (phi.degree() < 1) throw std::invalid_argument("quotient_gcd: trivial modulus");
    UPoly m = phi.leading().inverse() * phi;
    std::vector<QuotientBranch> out;
    auto sink = [&out](QuotientBranch b) { out.push_back(std::move(b)); };
    gcd_rec<decltype(sink)>({m, A, B}, sink);
    return out;
}

std::vector<QuotientBranch> strip_common_factors(const BiPoly& value, const BiPoly& divisor,
                                                 const UPoly& phi) {
    std::vector<QuotientBranch> done;
    std::vector<QuotientBranch> work{{phi.leading().inverse() * phi, reduce(value, phi)}};
    while (!work.empty()) {
        QuotientBranch cur = std::move(work.back());
        work.pop_back();
        if (bipoly_degree(cur.value) <= 0) {
            done.push_back(std::move(cur));
            continue;
        }
        bool progressed = false;
        for (auto& sub : quotient_gcd(cur.value, divisor, cur.modulus)) {
            BiPoly v = reduce(cur.value, sub.modulus);
            if (bipoly_degree(sub.value) >= 1) {
                v = div_by_monic(std::move(v), sub.value, sub.modulus);
                work.push_back({sub.modulus, std::move(v)});
                progressed = true;
            } else {
                done.push_back({sub.modulus, std::move(v)});
            }
        }
        (void)progressed;
    }
    return done;
}

}  // namespace wtrunc
