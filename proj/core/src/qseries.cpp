#include "wtrunc/qseries.hpp"

#include <sstream>

namespace wtrunc::chars {

QSeries QSeries::truncated(int new_trunc) const {
    if (new_trunc > truncation())
        throw std::invalid_argument("QSeries::truncated: cannot extend");
    QSeries out(new_trunc);
    for (int w = 0; w <= new_trunc; ++w) out.at(w) = (*this)[w];
    return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("QSeries: truncation mismatch");
    QSeries out(a.truncation());
    for (int w = 0; w <= a.truncation(); ++w) out.at(w) = a[w] + b[w];
    return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("QSeries: truncation mismatch");
    QSeries out(a.truncation());
    for (int i = 0; i <= a.truncation(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= a.truncation(); ++j) out.at(i + j) += a[i] * b[j];
    }
    return out;
}

void QSeries::mul_inv_one_minus(int m) {
    for (int w = m; w <= truncation(); ++w) at(w) += (*this)[w - m];
}

void QSeries::mul_inv_one_plus(int m) {
    for (int w = m; w <= truncation(); ++w) at(w) -= (*this)[w - m];
}

void QSeries::divide_exact(std::int64_t d) {
    for (auto& x : c_) {
        if (x % d != 0) throw std::logic_error("QSeries::divide_exact: not divisible");
        x /= d;
    }
}

std::string QSeries::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

std::optional<int> first_discrepancy(const QSeries& a, const QSeries& b) {
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("first_discrepancy: truncation mismatch");
    for (int w = 0; w <= a.truncation(); ++w)
        if (a[w] != b[w]) return w;
    return std::nullopt;
}

}  // namespace wtrunc::chars
