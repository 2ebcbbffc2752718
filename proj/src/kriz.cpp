#include "cpstrata/kriz.hpp"

#include <algorithm>

#include "cpstrata/error.hpp"

namespace cpstrata::kriz {

using gradedalg::GPolynomial;

std::string x_name(int a)
{
    return "x" + std::to_string(a);
}

std::string g_name(int a, int b)
{
    if (a > b)
        std::swap(a, b);
    // separator only when an index has two digits, so G1_10 and G11_0 can't collide
    const std::string sep = (a >= 10 || b >= 10) ? "_" : "";
    return "G" + std::to_string(a) + sep + std::to_string(b);
}

gradedalg::TablePtr kriz_table(int m, int k)
{
    if (m < 1)
        throw DomainError("Kriz model needs m >= 1");
    if (k < 1)
        throw DomainError("Kriz model needs k >= 1");
    std::vector<gradedalg::Generator> gens;
    for (int a = 1; a <= k; ++a)
        gens.push_back({x_name(a), 2, m + 1});
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b)
            gens.push_back({g_name(a, b), 2 * m - 1, 0});
    auto table = std::make_shared<gradedalg::GeneratorTable>(std::move(gens));
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) {
            const std::string sep = (a >= 10 || b >= 10) ? "_" : "";
            table->add_alias("G" + std::to_string(b) + sep + std::to_string(a), g_name(a, b));
        }
    return table;
}

GPolynomial diagonal_pullback(const gradedalg::TablePtr& table, int m, int a, int b)
{
    if (a == b)
        throw DomainError("diagonal pullback needs two distinct points");
    const auto xa = GPolynomial::generator(table, x_name(a));
    const auto xb = GPolynomial::generator(table, x_name(b));
    GPolynomial out(table);
    for (int i = 0; i <= m; ++i)
        out += xa.pow(i) * xb.pow(m - i);
    return out;
}

GPolynomial diagonal_pullback(int m, int a, int b)
{
    return diagonal_pullback(kriz_table(m, std::max(a, b)), m, a, b);
}

int top_degree(const KrizParams& p)
{
    return 2 * p.m * p.k;
}

dga::DgaSpec kriz_model(const KrizParams& p)
{
    auto table = kriz_table(p.m, p.k);
    const auto g = [&](int a, int b) { return GPolynomial::generator(table, g_name(a, b)); };
    const auto x = [&](int a) { return GPolynomial::generator(table, x_name(a)); };

    std::vector<GPolynomial> relations;
    for (int a = 1; a <= p.k; ++a)
        for (int b = a + 1; b <= p.k; ++b)
            for (int i = 1; i <= p.m; ++i)
                relations.push_back((x(a).pow(i) - x(b).pow(i)) * g(a, b));
    for (int a = 1; a <= p.k; ++a)
        for (int b = a + 1; b <= p.k; ++b)
            for (int c = b + 1; c <= p.k; ++c)
                relations.push_back(g(a, b) * g(b, c) + g(b, c) * g(c, a) + g(c, a) * g(a, b));

    std::map<std::string, GPolynomial> d;
    for (int a = 1; a <= p.k; ++a)
        for (int b = a + 1; b <= p.k; ++b)
            d.emplace(g_name(a, b), diagonal_pullback(table, p.m, a, b));

    const int cap = p.degree_cap >= 0 ? p.degree_cap : top_degree(p) + 2;
    return dga::DgaSpec(gradedalg::PresentedAlgebra(table, std::move(relations)), d, cap);
}

}  // namespace cpstrata::kriz
