#pragma once

#include <string>
#include <vector>

#include "skewchar/laurent.hpp"
#include "skewchar/partition.hpp"
#include "skewchar/polymatrix.hpp"

namespace skewchar {

enum class Family { GL, SP, SO_ODD, O_EVEN };

std::string family_name(Family f);  // "schur", "sp", "so", "o"
Family parse_family(const std::string& s);

// e_r and h_r of the doubled alphabet (x1, 1/x1, ..., xn, 1/xn).
LaurentPoly elementary_pm(int r, int n);
LaurentPoly complete_pm(int r, int n);

// e_r and h_r of the plain alphabet (x1, ..., xn).
LaurentPoly elementary_plain(int r, int n);
LaurentPoly complete_plain(int r, int n);

// Bialternant value of the non-skew character at a rational point of length n.
// For SO_ODD the point holds y with x_i = y_i^2, which keeps all exponents integral;
// compare against poly_eval(p, y^2). Throws DegeneratePoint if the denominator vanishes.
mpq_class weyl_eval(Family family, const Partition& lam, const std::vector<mpq_class>& point);

// E(N,m,k;t)_{ij} = e_{i-j} + [j < m + ceil(k/2)] t e_{i+j-2m-k} over the doubled alphabet.
PolyMatrix build_E_matrix(int N, int m, int k, int t, int n);
// H(N,m,k;t)_{ij} = (-1)^{i-j} (h_{i-j} - [i > m + floor(k/2)] (-1)^k t h_{2m-i-j+k}).
PolyMatrix build_H_matrix(int N, int m, int k, int t, int n);

}  // namespace skewchar
