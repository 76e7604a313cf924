#ifndef WTRUNC_CHARACTERS_HPP
#define WTRUNC_CHARACTERS_HPP

#include "wtrunc/qseries.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace wtrunc::chars {

/// Strong-generator weight profile: an explicit list, or one generator in
/// every even weight >= 2.
struct GeneratorProfile {
    static GeneratorProfile explicit_weights(std::vector<int> ws);
    static GeneratorProfile all_even_from_2();

    bool all_even = false;
    std::vector<int> weights;  // sorted, positive (ignored when all_even)
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Vacuum character of the free algebra on the profile: each generator of
/// weight w contributes one mode in every weight >= w, so the character is
/// prod_{w in profile} prod_{j>=0} (1 - q^{w+j})^{-1}, truncated at N.
QSeries free_character(const GeneratorProfile& profile, int N);

/// Graded dimension of the orthogonal-group invariants in the Fock space of
/// 2n bosons: Sym(sum_{d>=1} V q^d) with V the 2n-dimensional standard
/// representation, computed by Weyl integration over both components of the
/// group as exact constant-term extraction, truncated at N.
/// term_budget guards the intermediate Laurent table (0 = default).
QSeries orbifold_character(int n, int N, std::size_t term_budget = 0);

std::size_t default_term_budget();

/// Independent oracle: dimension of the invariant subspace in weight d by
/// exact linear algebra on the monomial basis (kernel of the infinitesimal
/// rotations restricted to the reflection-even subspace).
/// basis_guard caps the monomial count (0 = default, about 1e5).
int brute_force_dim(int n, int d, std::size_t basis_guard = 0);

/// Smallest N such that free_character({2,4,...,2N}, limit) matches `target`
/// through the target truncation, if any (evidence helper).
std::optional<int> minimal_even_profile(const QSeries& target);

}  // namespace wtrunc::chars

#endif
