#include "wtrunc/characters.hpp"

#include "wtrunc/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wtrunc::chars {

GeneratorProfile GeneratorProfile::explicit_weights(std::vector<int> ws) {
    for (int w : ws)
        if (w <= 0) throw std::invalid_argument("GeneratorProfile: weights must be positive");
    std::sort(ws.begin(), ws.end());
    return GeneratorProfile{false, std::move(ws)};
}

GeneratorProfile GeneratorProfile::all_even_from_2() { return GeneratorProfile{true, {}}; }

QSeries free_character(const GeneratorProfile& profile, int N) {
    if (N < 0) throw std::invalid_argument("free_character: negative truncation");
    QSeries s = QSeries::one(N);
    for (int m = 1; m <= N; ++m) {
        int e;
        if (profile.all_even) {
            e = (m >= 2) ? m / 2 : 0;  // generators of even weight 2..m
        } else {
            e = static_cast<int>(std::upper_bound(profile.weights.begin(),
                                                  profile.weights.end(), m) -
                                 profile.weights.begin());
        }
        for (int i = 0; i < e; ++i) s.mul_inv_one_minus(m);
    }
    return s;
}

namespace {

// Laurent table: bucket per q-weight, each mapping torus exponent vectors to
// integer coefficients.
using Bucket = std::map<std::vector<int>, std::int64_t>;
using Table = std::vector<Bucket>;

std::size_t table_size(const Table& t) {
    std::size_t s = 0;
    for (const auto& b : t) s += b.size();
    return s;
}

void check_budget(const Table& t, std::size_t budget) {
    if (table_size(t) > budget)
        throw ResourceError("character term budget exceeded (" + std::to_string(budget) +
                            " Laurent terms); raise WTRUNC_TERM_BUDGET to override");
}

int abs_sum(const std::vector<int>& e) {
    int s = 0;
    for (int x : e) s += x < 0 ? -x : x;
    return s;
}

// Multiply by (1 - z^shift); pure z-shift, no q-weight.
Table mul_root_factor(const Table& t, const std::vector<int>& shift, int N) {
    Table out(t.size());
    for (std::size_t w = 0; w < t.size(); ++w) {
        for (const auto& [e, c] : t[w]) {
            out[w][e] += c;
            std::vector<int> e2(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) e2[i] = e[i] + shift[i];
            if (abs_sum(e2) <= N - static_cast<int>(w)) out[w][e2] -= c;
        }
        for (auto it = out[w].begin(); it != out[w].end();)
            it = (it->second == 0) ? out[w].erase(it) : std::next(it);
    }
    return out;
}

// In-place multiplication by 1/(1 - sign * z^shift q^d): ascending-weight wave.
void mul_inv_geometric(Table& t, const std::vector<int>& shift, int d, int sign, int N,
                       std::size_t budget) {
    for (int w = d; w <= N; ++w) {
        const Bucket& src = t[static_cast<std::size_t>(w - d)];
        Bucket& dst = t[static_cast<std::size_t>(w)];
        for (const auto& [e, c] : src) {
            if (c == 0) continue;
            std::vector<int> e2(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) e2[i] = e[i] + shift[i];
            if (abs_sum(e2) > N - w) continue;
            dst[e2] += sign * c;
        }
    }
    check_budget(t, budget);
}

// Fock-space factors for one torus coordinate pair {z_i, z_i^-1}.
void mul_boson_pair(Table& t, std::size_t rank, std::size_t i, int N, std::size_t budget) {
    std::vector<int> plus(rank, 0), minus(rank, 0);
    plus[i] = 1;
    minus[i] = -1;
    for (int d = 1; d <= N; ++d) {
        mul_inv_geometric(t, plus, d, +1, N, budget);
        mul_inv_geometric(t, minus, d, +1, N, budget);
    }
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Weyl-integral of the Fock character over one group component: torus of the
// given rank, root system density, optional fixed eigenvalue pair {+1, -1}.
QSeries component_integral(std::size_t rank, const std::vector<std::vector<int>>& roots,
                           bool fixed_pair, std::int64_t weyl_order, int N,
                           std::size_t budget) {
    Table t(static_cast<std::size_t>(N) + 1);
    t[0][std::vector<int>(rank, 0)] = 1;
    for (const auto& alpha : roots) {
        t = mul_root_factor(t, alpha, N);
        check_budget(t, budget);
    }
    for (std::size_t i = 0; i < rank; ++i) mul_boson_pair(t, rank, i, N, budget);
    if (fixed_pair) {
        std::vector<int> zero(rank, 0);
        for (int d = 1; d <= N; ++d) {
            mul_inv_geometric(t, zero, d, +1, N, budget);  // eigenvalue +1
            mul_inv_geometric(t, zero, d, -1, N, budget);  // eigenvalue -1
        }
    }
    QSeries out(N);
    std::vector<int> zero(rank, 0);
    for (int w = 0; w <= N; ++w) {
        auto it = t[static_cast<std::size_t>(w)].find(zero);
        out.at(w) = (it == t[static_cast<std::size_t>(w)].end()) ? 0 : it->second;
    }
    out.divide_exact(weyl_order);
    return out;
}

std::vector<std::vector<int>> type_d_roots(std::size_t rank) {
    std::vector<std::vector<int>> roots;
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    std::vector<int> a(rank, 0);
                    a[i] = si;
                    a[j] = sj;
                    roots.push_back(std::move(a));
                }
    return roots;
}

std::vector<std::vector<int>> type_c_roots(std::size_t rank) {
    auto roots = type_d_roots(rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (int s : {2, -2}) {
            std::vector<int> a(rank, 0);
            a[i] = s;
            roots.push_back(std::move(a));
        }
    return roots;
}

}  // namespace

std::size_t default_term_budget() { return 5000000; }

QSeries orbifold_character(int n, int N, std::size_t term_budget) {
    if (n < 1) throw std::invalid_argument("orbifold_character: n must be >= 1");
    if (N < 0) throw std::invalid_argument("orbifold_character: negative truncation");
    std::size_t budget = term_budget ? term_budget : default_term_budget();

    std::size_t rank = static_cast<std::size_t>(n);
    // identity component: SO(2n), |W| = 2^(n-1) n!
    QSeries so = component_integral(rank, type_d_roots(rank), false,
                                    (std::int64_t(1) << (n - 1)) * factorial(n), N, budget);
    // reflection component: torus of rank n-1 with eigenvalue pair {+1, -1},
    // density of type C_{n-1}, |W| = 2^(n-1) (n-1)!
    QSeries om = component_integral(rank - 1, type_c_roots(rank - 1), true,
                                    (std::int64_t(1) << (n - 1)) * factorial(n - 1), N, budget);
    QSeries avg = so + om;
    avg.divide_exact(2);
    return avg;
}

namespace {

// ---- brute-force oracle -------------------------------------------------
//
// Monomials in the boson modes b_{color,-j} of total mode weight d, as sorted
// multisets of items (j, color).

struct Item {
    int j, color;
};

using Monomial = std::vector<int>;  // sorted item ids, with repetition

void enumerate_monomials(int remaining, int max_item, int n_items,
                         const std::vector<Item>& items, Monomial& cur,
                         std::vector<Monomial>& out, std::size_t guard) {
    if (remaining == 0) {
        out.push_back(cur);
        if (out.size() > guard)
            throw ResourceError("brute_force_dim basis guard exceeded (" +
                                std::to_string(guard) + " monomials)");
        return;
    }
    for (int id = std::min(max_item, n_items - 1); id >= 0; --id) {
        if (items[static_cast<std::size_t>(id)].j > remaining) continue;
        cur.push_back(id);
        enumerate_monomials(remaining - items[static_cast<std::size_t>(id)].j, id, n_items,
                            items, cur, out, guard);
        cur.pop_back();
    }
}

// Sparse exact rank over Q.
int sparse_rank(std::vector<std::map<int, Rat>>& rows) {
    int rank = 0;
    std::vector<bool> active(rows.size(), true);
    // column -> candidate pivot rows discovered lazily
    std::map<int, std::vector<std::size_t>> by_col;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) by_col[c].push_back(r);

    for (auto& [col, cands] : by_col) {
        // pick the sparsest active row with a nonzero entry in col
        std::size_t pivot = rows.size();
        std::size_t best = SIZE_MAX;
        for (std::size_t r : cands) {
            if (!active[r]) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end() || it->second.is_zero()) continue;
            if (rows[r].size() < best) {
                best = rows[r].size();
                pivot = r;
            }
        }
        if (pivot == rows.size()) continue;
        ++rank;
        active[pivot] = false;
        Rat pv = rows[pivot][col];
        for (std::size_t r : cands) {
            if (!active[r]) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end() || it->second.is_zero()) continue;
            Rat f = it->second / pv;
            for (const auto& [c2, v2] : rows[pivot]) {
                Rat& slot = rows[r][c2];
                slot -= f * v2;
                if (slot.is_zero()) rows[r].erase(c2);
                else if (c2 > col) by_col[c2].push_back(r);
            }
        }
    }
    return rank;
}

}  // namespace

int brute_force_dim(int n, int d, std::size_t basis_guard) {
    if (n < 1) throw std::invalid_argument("brute_force_dim: n must be >= 1");
    if (d < 0) throw std::invalid_argument("brute_force_dim: negative weight");
    if (d == 0) return 1;
    std::size_t guard = basis_guard ? basis_guard : 100000;
    int colors = 2 * n;

    std::vector<Item> items;
    for (int j = 1; j <= d; ++j)
        for (int c = 0; c < colors; ++c) items.push_back({j, c});

    std::vector<Monomial> all;
    Monomial cur;
    enumerate_monomials(d, static_cast<int>(items.size()) - 1, static_cast<int>(items.size()),
                        items, cur, all, guard);
    std::sort(all.begin(), all.end());

    // reflection negates color 0: invariants live in the even subspace
    auto color0_degree = [&](const Monomial& m) {
        int deg = 0;
        for (int id : m)
            if (items[static_cast<std::size_t>(id)].color == 0) ++deg;
        return deg;
    };
    std::vector<Monomial> even;
    for (const auto& m : all)
        if (color0_degree(m) % 2 == 0) even.push_back(m);

    std::map<Monomial, int> col_of;
    for (std::size_t i = 0; i < even.size(); ++i) col_of[even[i]] = static_cast<int>(i);

    // rows of the stacked rotation-generator matrix, keyed by (generator,
    // target monomial)
    std::map<std::pair<int, Monomial>, std::map<int, Rat>> rows_map;
    int gen_idx = 0;
    for (int a = 0; a < colors; ++a) {
        for (int b = a + 1; b < colors; ++b, ++gen_idx) {
            // X e_b = e_a, X e_a = -e_b, as a derivation on monomials
            for (std::size_t ci = 0; ci < even.size(); ++ci) {
                const Monomial& mon = even[ci];
                // distinct item ids with multiplicities
                std::map<int, int> mult;
                for (int id : mon) ++mult[id];
                for (const auto& [id, cnt] : mult) {
                    const Item& it = items[static_cast<std::size_t>(id)];
                    int to_color = -1, sign = 0;
                    if (it.color == b) {
                        to_color = a;
                        sign = +1;
                    } else if (it.color == a) {
                        to_color = b;
                        sign = -1;
                    } else {
                        continue;
                    }
                    int to_id = (it.j - 1) * colors + to_color;
                    Monomial target = mon;
                    auto pos = std::find(target.begin(), target.end(), id);
                    *pos = to_id;
                    std::sort(target.begin(), target.end());
                    rows_map[{gen_idx, target}][static_cast<int>(ci)] +=
                        Rat(static_cast<long long>(sign) * cnt);
                }
            }
        }
    }

    std::vector<std::map<int, Rat>> rows;
    rows.reserve(rows_map.size());
    for (auto& [key, row] : rows_map) {
        for (auto it = row.begin(); it != row.end();)
            it = it->second.is_zero() ? row.erase(it) : std::next(it);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    int rank = sparse_rank(rows);
    return static_cast<int>(even.size()) - rank;
}

std::optional<int> minimal_even_profile(const QSeries& target) {
    int N = target.truncation();
    std::vector<int> ws;
    for (int top = 0; 2 * top <= N + 1; ++top) {
        ws.clear();
        for (int w = 2; w <= 2 * top; w += 2) ws.push_back(w);
        if (free_character(GeneratorProfile::explicit_weights(ws), N) == target) return top;
    }
    return std::nullopt;
}

}  // namespace wtrunc::chars
