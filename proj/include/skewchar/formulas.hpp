#pragma once

#include <optional>
#include <string>

#include "skewchar/laurent.hpp"
#include "skewchar/partition.hpp"
#include "skewchar/symfunc.hpp"

namespace skewchar {

enum class Method { TABLEAUX, DUAL_JT, JT, GIAMBELLI, LGV_PATHS };

std::string method_name(Method m);  // "tableaux", "dual-jt", "jt", "giambelli", "lgv"
Method parse_method(const std::string& s);

// Throws PreconditionError naming the violated inequality, e.g.
// "l(lambda) <= n+m fails: 5 > 4". GL requires containment and l(lambda) <= n.
void check_character_preconditions(Family family, const Partition& lam, const Partition& mu, int n,
                                   int m);

// det(e_{l'_i - m'_j - i + j} -+ e_{l'_i + m'_j - i - j - 2m + k}) over the doubled
// alphabet (k = 0, 1, 2 for sp, so, o). The o-determinant is halved when m = l(mu).
// GL uses the plain n-letter alphabet and no correction term.
LaurentPoly dual_jacobi_trudi(Family family, const Partition& lam, const Partition& mu, int n, int m,
                              int N);

// The h-determinant form; GL is the classical det(h_{l_i - m_j - i + j}).
LaurentPoly jacobi_trudi(Family family, const Partition& lam, const Partition& mu, int n, int m,
                         int N);

// How the hook, row and column entries of the Giambelli determinant are computed.
enum class BlockSource { DUAL_JT, TABLEAUX };

// (-1)^q det [[X_{(a_i|b_j)}, X_{(a_i)/(g_j)}], [X_{(1^{b_j+1})/(1^{d_i+1})}, 0]].
// For GL this is the Lascoux-Pragacz determinant on the plain alphabet.
LaurentPoly giambelli(Family family, const Partition& lam, const Partition& mu, int n, int m,
                      BlockSource source = BlockSource::DUAL_JT);

// Convention for the even orthogonal path-form prefactor 1/2^[...].
enum class OPrefactor {
    M_EQUALS_LMU,            // halve when m = l(mu)
    M_EQUALS_LMU_NONZERO_M,  // halve when m = l(mu) and m != 0
};

// The path-form determinant: A->B entries are hook characters, A->C entries
// are h_{a-g}, D->B entries are e_{b-d} -+ e_{b+d-2m+k}. Returns the exact
// quotient by the selected power of 2 (NonExactDivision if it is not exact).
LaurentPoly giambelli_path_form(Family family, const Partition& lam, const Partition& mu, int n,
                                int m, OPrefactor convention = OPrefactor::M_EQUALS_LMU_NONZERO_M);

// Dispatcher. N defaults to lambda_1 (DUAL_JT; at least 1 for o) or
// l(lambda) (JT), or to lambda_1 for the columnwise lattice-path sum.
LaurentPoly character(Family family, const Partition& lam, const Partition& mu, int n, int m,
                      Method method, std::optional<int> N = std::nullopt);

// Brute-force signed sum over weakly non-intersecting columnwise families.
LaurentPoly character_by_lgv(Family family, const Partition& lam, const Partition& mu, int n, int m,
                             int N);

}  // namespace skewchar
