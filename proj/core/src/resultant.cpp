#include "wtrunc/resultant.hpp"

#include <stdexcept>
#include <vector>

namespace wtrunc {

namespace {

using MVec = std::vector<MPoly>;  // dense in the eliminated variable, ascending

void trim(MVec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

int deg(const MVec& v) { return static_cast<int>(v.size()) - 1; }

// R = lc(B)^(deg A - deg B + 1) * A  mod  B  (pseudo-remainder).
MVec prem(const MVec& A, const MVec& B) {
    int delta = deg(A) - deg(B);
    MPoly m = B.back().pow(static_cast<unsigned>(delta) + 1);
    MVec R(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) R[i] = m * A[i];
    trim(R);
    while (deg(R) >= deg(B)) {
        std::size_t k = static_cast<std::size_t>(deg(R) - deg(B));
        MPoly f = R.back().exact_div(B.back());
        for (std::size_t i = 0; i < B.size(); ++i) R[i + k] -= f * B[i];
        R.pop_back();
        trim(R);
        if (R.empty()) break;
    }
    return R;
}

}  // namespace

MPoly resultant(const MPoly& p, const MPoly& q, const std::string& var) {
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("resultant: zero input polynomial");
    MVec A_ = p.coeffs_in(var);
    MVec B_ = q.coeffs_in(var);
    trim(A_);
    trim(B_);
    if (deg(A_) == 0 && deg(B_) == 0)
        throw std::invalid_argument("no elimination variable");

    int sign = 1;
    if (deg(A_) < deg(B_)) {
        if ((deg(A_) % 2) && (deg(B_) % 2)) sign = -sign;
        std::swap(A_, B_);
    }
    if (deg(B_) == 0) {
        // Res(A, b0) = b0^deg(A)
        MPoly r = B_[0].pow(static_cast<unsigned>(deg(A_)));
        return sign < 0 ? -r : r;
    }

    MPoly g(Rat(1)), h(Rat(1));
    while (true) {
        int da = deg(A_), db = deg(B_);
        int delta = da - db;
        if ((da % 2) && (db % 2)) sign = -sign;
        MVec R = prem(A_, B_);
        A_ = std::move(B_);
        // B = R / (g * h^delta), exact in the coefficient ring
        MPoly divisor = g * h.pow(static_cast<unsigned>(delta));
        MVec Bn(R.size());
        for (std::size_t i = 0; i < R.size(); ++i) Bn[i] = R[i].exact_div(divisor);
        B_ = std::move(Bn);
        trim(B_);
        g = A_.back();
        if (delta >= 1) {
            // h = g^delta / h^(delta-1)
            MPoly numr = g.pow(static_cast<unsigned>(delta));
            h = (delta == 1) ? numr : numr.exact_div(h.pow(static_cast<unsigned>(delta - 1)));
        }
        if (B_.empty()) return MPoly();  // common factor in var: resultant 0
        if (deg(B_) == 0) break;
    }

    int da = deg(A_);
    MPoly r = B_[0].pow(static_cast<unsigned>(da));
    if (da >= 1) r = r.exact_div(h.pow(static_cast<unsigned>(da - 1)));
    return sign < 0 ? -r : r;
}

}  // namespace wtrunc
