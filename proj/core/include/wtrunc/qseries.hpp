#ifndef WTRUNC_QSERIES_HPP
#define WTRUNC_QSERIES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wtrunc::chars {

/// Truncated integer power series in the grading variable q, coefficients for
/// weights 0..truncation().
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(int truncation) : c_(static_cast<std::size_t>(truncation) + 1, 0) {}
    QSeries(std::vector<std::int64_t> coeffs)
        : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("QSeries: empty coefficient list");
    }

    int truncation() const { return static_cast<int>(c_.size()) - 1; }
    std::int64_t operator[](int w) const { return c_[static_cast<std::size_t>(w)]; }
    std::int64_t& at(int w) { return c_[static_cast<std::size_t>(w)]; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    static QSeries one(int truncation) {
        QSeries s(truncation);
        s.at(0) = 1;
        return s;
    }

    QSeries truncated(int new_trunc) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);  // truncated product
    friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    /// In-place multiplication by 1 / (1 - q^m).
    void mul_inv_one_minus(int m);
    /// In-place multiplication by 1 / (1 + q^m).
    void mul_inv_one_plus(int m);
    /// Exact division by an integer; throws on a non-divisible coefficient.
    void divide_exact(std::int64_t d);

    std::string str() const;

private:
    std::vector<std::int64_t> c_{1};
};

/// Smallest weight where the two series differ, or nullopt within the shared
/// truncation.  Throws std::invalid_argument on mismatched truncations.
std::optional<int> first_discrepancy(const QSeries& a, const QSeries& b);

}  // namespace wtrunc::chars

#endif
