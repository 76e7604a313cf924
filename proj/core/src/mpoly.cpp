#include "wtrunc/mpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace wtrunc {

namespace {

// Exponent remap table: position of each old variable in the new list.
std::vector<std::size_t> remap_table(const std::vector<std::string>& from,
                                     const std::vector<std::string>& to) {
    std::vector<std::size_t> idx(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        auto it = std::lower_bound(to.begin(), to.end(), from[i]);
        idx[i] = static_cast<std::size_t>(it - to.begin());
    }
    return idx;
}

std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

MPoly::MPoly(const Rat& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MPoly MPoly::variable(const std::string& name) {
    MPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rat(1));
    return p;
}

MPoly MPoly::monomial(const Rat& c, const std::string& name, unsigned e) {
    if (c.is_zero()) return MPoly();
    if (e == 0) return MPoly(c);
    MPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{e}, c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rat MPoly::constant_value() const {
    Exponents zero(vars_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (unsigned x : e) s += static_cast<int>(x);
        d = std::max(d, s);
    }
    return d;
}

int MPoly::degree_in(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return terms_.empty() ? -1 : 0;
    std::size_t pos = static_cast<std::size_t>(it - vars_.begin());
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[pos]));
    return d;
}

bool MPoly::depends_on(const std::string& var) const { return degree_in(var) > 0; }

MPoly MPoly::with_vars(const std::vector<std::string>& vars) const {
    MPoly out;
    out.vars_ = vars;
    auto idx = remap_table(vars_, vars);
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[idx[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

void MPoly::insert_term(const Exponents& e, const Rat& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.vars_ == b.vars_) {
        MPoly out = a;
        for (const auto& [e, c] : b.terms_) out.insert_term(e, c);
        return out;
    }
    auto vars = merged_vars(a.vars_, b.vars_);
    return a.with_vars(vars) + b.with_vars(vars);
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.vars_ != b.vars_) {
        auto vars = merged_vars(a.vars_, b.vars_);
        return a.with_vars(vars) * b.with_vars(vars);
    }
    MPoly out;
    out.vars_ = a.vars_;
    MPoly::Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.insert_term(e, ca * cb);
        }
    return out;
}

MPoly operator*(const Rat& c, const MPoly& p) {
    if (c.is_zero()) return MPoly();
    MPoly out = p;
    for (auto& [e, v] : out.terms_) v *= c;
    return out;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly acc(Rat(1));
    MPoly base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto vars = merged_vars(a.vars_, b.vars_);
    return a.with_vars(vars).terms_ == b.with_vars(vars).terms_;
}

MPoly MPoly::subst(const std::string& var, const Rat& value) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return *this;
    std::size_t pos = static_cast<std::size_t>(it - vars_.begin());
    MPoly out;
    out.vars_ = vars_;
    out.vars_.erase(out.vars_.begin() + static_cast<long>(pos));
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != pos) ne.push_back(e[i]);
        out.insert_term(ne, c * value.pow(e[pos]));
    }
    return out;
}

MPoly MPoly::subst(const std::string& var, const MPoly& value) const {
    auto cs = coeffs_in(var);
    MPoly out;
    // Horner from the top coefficient down.
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) out = out * value + *it;
    return out;
}

Rat MPoly::eval(const std::map<std::string, Rat>& point) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end())
                throw std::invalid_argument("MPoly::eval: unassigned variable " + vars_[i]);
            t *= it->second.pow(e[i]);
        }
        acc += t;
    }
    return acc;
}

std::vector<MPoly> MPoly::coeffs_in(const std::string& var) const {
    int d = degree_in(var);
    if (is_zero()) return {};
    std::vector<MPoly> out(static_cast<std::size_t>(std::max(d, 0)) + 1);
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    bool present = it != vars_.end() && *it == var;
    if (!present) {
        out[0] = *this;
        return out;
    }
    std::size_t pos = static_cast<std::size_t>(it - vars_.begin());
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<long>(pos));
    for (auto& o : out) o.vars_ = rest;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != pos) ne.push_back(e[i]);
        out[e[pos]].insert_term(ne, c);
    }
    return out;
}

MPoly MPoly::from_coeffs(const std::string& var, const std::vector<MPoly>& coeffs) {
    MPoly out;
    MPoly v = MPoly::variable(var);
    for (std::size_t i = coeffs.size(); i-- > 0;) out = out * v + coeffs[i];
    return out;
}

MPoly MPoly::leading_coeff_in(const std::string& var) const {
    auto cs = coeffs_in(var);
    if (cs.empty()) return MPoly();
    return cs.back();
}

MPoly MPoly::derivative(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return MPoly();
    std::size_t pos = static_cast<std::size_t>(it - vars_.begin());
    MPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[pos] == 0) continue;
        Exponents ne = e;
        ne[pos] -= 1;
        out.insert_term(ne, c * Rat(static_cast<long long>(e[pos])));
    }
    out.prune();
    return out;
}

MPoly MPoly::exact_div(const MPoly& d) const {
    if (d.is_zero()) throw std::domain_error("MPoly::exact_div: division by zero");
    if (is_zero()) return MPoly();
    auto vars = merged_vars(vars_, d.vars_);
    MPoly rem = with_vars(vars);
    MPoly div = d.with_vars(vars);
    MPoly quot;
    quot.vars_ = vars;
    // lex division: the map is lex-ordered, so rbegin() is the leading term.
    const auto& dlead = *div.terms_.rbegin();
    while (!rem.terms_.empty()) {
        const auto& rlead = *rem.terms_.rbegin();
        Exponents q(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (rlead.first[i] < dlead.first[i])
                throw std::domain_error("MPoly::exact_div: not divisible");
            q[i] = rlead.first[i] - dlead.first[i];
        }
        Rat qc = rlead.second / dlead.second;
        MPoly mono;
        mono.vars_ = vars;
        mono.terms_.emplace(q, qc);
        quot.insert_term(q, qc);
        rem -= mono * div;
    }
    return quot;
}

Rat MPoly::content() const {
    if (terms_.empty()) return Rat(0);
    // gcd of numerators over lcm of denominators
    Int gn(0), ld(1);
    for (const auto& [e, c] : terms_) {
        gn = boost::multiprecision::gcd(gn, c.num() < 0 ? Int(-c.num()) : c.num());
        ld = ld / boost::multiprecision::gcd(ld, c.den()) * c.den();
    }
    return Rat(gn, ld);
}

MPoly MPoly::primitive_part() const {
    if (terms_.empty()) return MPoly();
    Rat c = content();
    MPoly out = Rat(1) / c * *this;
    if (out.terms_.rbegin()->second.sign() < 0) out = -out;
    return out;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (!first) {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool anyvar = std::any_of(e.begin(), e.end(), [](unsigned x) { return x != 0; });
        if (!anyvar || a != Rat(1)) os << a.str();
        bool printed = !anyvar || a != Rat(1);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

}  // namespace wtrunc
