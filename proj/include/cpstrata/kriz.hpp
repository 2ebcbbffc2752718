#pragma once

#include <string>

#include "cpstrata/dga.hpp"

namespace cpstrata::kriz {

struct KrizParams {
    int m = 2;  // complex dimension of CP^m
    int k = 1;  // number of points
    int degree_cap = -1;  // -1: default cap (top degree of the model + 2)
};

std::string x_name(int a);
std::string g_name(int a, int b);  // normalized to a < b, e.g. "G12", "G3_11"

/// Generator table x_1..x_k (degree 2, x^{m+1} = 0), then G_ab for a < b (degree 2m-1).
/// Reversed names G_ba are registered as aliases.
gradedalg::TablePtr kriz_table(int m, int k);

/// sum_{i+j=m} x_a^i x_b^j over the given table.
gradedalg::GPolynomial diagonal_pullback(const gradedalg::TablePtr& table, int m, int a, int b);
gradedalg::GPolynomial diagonal_pullback(int m, int a, int b);

dga::DgaSpec kriz_model(const KrizParams& p);

/// Real dimension of Conf_k(CP^m): the largest degree in which cohomology can live.
int top_degree(const KrizParams& p);

}  // namespace cpstrata::kriz
