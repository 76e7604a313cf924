#include "wtrunc/ratfunc.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wtrunc {

RatFunc::RatFunc(std::string var, UPoly num, UPoly den)
    : var_(std::move(var)), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = UPoly::constant(Rat(1));
        return;
    }
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    // scale so den is integer, content 1, positive leading coefficient
    Rat f = den_.content();
    if (den_.leading().sign() < 0) f = -f;
    Rat inv = f.inverse();
    num_ = inv * num_;
    den_ = inv * den_;
}

MPoly RatFunc::num_mpoly() const {
    MPoly out;
    for (std::size_t i = 0; i < num_.coeffs().size(); ++i)
        out += MPoly::monomial(num_[i], var_, static_cast<unsigned>(i));
    return out;
}

MPoly RatFunc::den_mpoly() const {
    MPoly out;
    for (std::size_t i = 0; i < den_.coeffs().size(); ++i)
        out += MPoly::monomial(den_[i], var_, static_cast<unsigned>(i));
    return out;
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RatFunc::eval at a pole: " + var_ + "=" + x.str());
    return num_.eval(x) / d;
}

std::string RatFunc::str() const {
    std::ostringstream os;
    os << "(" << num_.str(var_) << ") / (" << den_.str(var_) << ")";
    return os.str();
}

namespace {

// Fraction-free (Bareiss) elimination to row echelon form; returns pivot
// column per pivot row.  Rows are integer vectors.
std::vector<int> bareiss_echelon(std::vector<std::vector<Int>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    Int prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

// Nullspace basis of the echelon system (one vector per free column).
std::vector<std::vector<Rat>> nullspace(const std::vector<std::vector<Int>>& ech,
                                        const std::vector<int>& pivots,
                                        std::size_t cols) {
    std::set<int> pivset(pivots.begin(), pivots.end());
    std::vector<std::vector<Rat>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (pivset.count(static_cast<int>(fc))) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = Rat(1);
        for (std::size_t pi = pivots.size(); pi-- > 0;) {
            std::size_t row = pi;
            int pc = pivots[pi];
            Rat acc(0);
            for (std::size_t j = static_cast<std::size_t>(pc) + 1; j < cols; ++j)
                if (!v[j].is_zero()) acc += Rat(ech[row][j]) * v[j];
            v[static_cast<std::size_t>(pc)] = -acc / Rat(ech[row][static_cast<std::size_t>(pc)]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

RatFunc interpolate_ratfunc(const std::vector<std::pair<Rat, Rat>>& points,
                            int num_deg, int den_deg, const std::string& var) {
    if (num_deg < 0 || den_deg < 0)
        throw InterpolationError(InterpolationError::Kind::bad_input, "negative degree bound");
    std::size_t need = static_cast<std::size_t>(num_deg + den_deg + 2);
    if (points.size() < need)
        throw InterpolationError(InterpolationError::Kind::bad_input,
                                 "need at least " + std::to_string(need) + " points, got " +
                                     std::to_string(points.size()));
    {
        std::set<Rat> seen;
        for (const auto& [x, y] : points)
            if (!seen.insert(x).second)
                throw InterpolationError(InterpolationError::Kind::bad_input,
                                         "duplicate abscissa " + x.str());
    }

    std::size_t an = static_cast<std::size_t>(num_deg) + 1;
    std::size_t bn = static_cast<std::size_t>(den_deg) + 1;
    std::size_t cols = an + bn;
    std::vector<std::vector<Int>> m;
    m.reserve(points.size());
    for (const auto& [x, y] : points) {
        std::vector<Rat> row(cols);
        Rat xp(1);
        for (std::size_t j = 0; j < an; ++j) {
            row[j] = xp;
            xp *= x;
        }
        xp = Rat(1);
        for (std::size_t j = 0; j < bn; ++j) {
            row[an + j] = -(y * xp);
            xp *= x;
        }
        Int lcm(1);
        for (const auto& e : row)
            lcm = lcm / boost::multiprecision::gcd(lcm, e.den()) * e.den();
        std::vector<Int> irow(cols);
        for (std::size_t j = 0; j < cols; ++j) irow[j] = row[j].num() * (lcm / row[j].den());
        m.push_back(std::move(irow));
    }

    auto pivots = bareiss_echelon(m);
    auto basis = nullspace(m, pivots, cols);
    if (basis.empty())
        throw InterpolationError(InterpolationError::Kind::inconsistent_data, "inconsistent data");

    bool any_den = false;
    std::vector<RatFunc> verified;
    for (const auto& v : basis) {
        UPoly num(std::vector<Rat>(v.begin(), v.begin() + static_cast<long>(an)));
        UPoly den(std::vector<Rat>(v.begin() + static_cast<long>(an), v.end()));
        if (den.is_zero()) continue;
        any_den = true;
        RatFunc f(var, num, den);
        bool ok = true;
        for (const auto& [x, y] : points) {
            if (!f.defined_at(x) || f.eval(x) != y) {
                ok = false;
                break;
            }
        }
        if (ok) verified.push_back(std::move(f));
    }
    if (!any_den)
        throw InterpolationError(InterpolationError::Kind::inconsistent_data, "inconsistent data");
    if (verified.empty())
        throw InterpolationError(InterpolationError::Kind::degree_bounds_too_small,
                                 "degree bounds too small");
    // Nullspace dimension > 1: prefer the minimal denominator degree, then
    // minimal numerator degree (reduction makes the true solution minimal).
    auto best = std::min_element(verified.begin(), verified.end(),
                                 [](const RatFunc& a, const RatFunc& b) {
                                     if (a.den().degree() != b.den().degree())
                                         return a.den().degree() < b.den().degree();
                                     return a.num().degree() < b.num().degree();
                                 });
    return *best;
}

}  // namespace wtrunc
