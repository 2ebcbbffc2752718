#include "cpstrata/dga.hpp"

#include <mutex>

#include "cpstrata/error.hpp"

namespace cpstrata::dga {

using gradedalg::Monomial;

struct DgaSpec::Cache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const DegreeMap>> maps;
};

DgaSpec::DgaSpec(PresentedAlgebra algebra, const std::map<std::string, GPolynomial>& differential, int degree_cap)
    : algebra_(std::move(algebra)), cap_(degree_cap), cache_(std::make_shared<Cache>())
{
    if (cap_ < 0)
        throw DomainError("degree cap must be non-negative");
    const auto& table = *algebra_.table();
    for (int i = 0; i < table.size(); ++i)
        d_.emplace_back(algebra_.table());
    std::vector<bool> seen(static_cast<std::size_t>(table.size()), false);
    for (const auto& [name, value] : differential) {
        const int i = table.index_of(name);
        if (seen[static_cast<std::size_t>(i)])
            throw ModelError("differential of '" + table[i].name + "' given twice");
        seen[static_cast<std::size_t>(i)] = true;
        if (!(*value.table() == table))
            throw DimensionError("differential of '" + name + "' is over a different generator table");
        if (!value.is_zero()) {
            auto deg = value.degree();
            if (!deg || *deg != table[i].degree + 1)
                throw ModelError("d(" + table[i].name + ") = " + gradedalg::to_string(value) +
                                 " is not homogeneous of degree " + std::to_string(table[i].degree + 1));
        }
        d_[static_cast<std::size_t>(i)] = value;
    }
}

DgaSpec DgaSpec::with_cap(int cap) const
{
    std::map<std::string, GPolynomial> dm;
    for (int i = 0; i < table()->size(); ++i)
        dm.emplace((*table())[i].name, d_[static_cast<std::size_t>(i)]);
    return DgaSpec(algebra_, dm, cap);
}

GPolynomial differential(const DgaSpec& d, const GPolynomial& p)
{
    const auto& tp = d.table();
    const auto& table = *tp;
    GPolynomial out(tp);
    for (const auto& [m, c] : p.terms()) {
        int prefix_degree = 0;
        for (int g = 0; g < table.size(); ++g) {
            const int e = m.exponents[static_cast<std::size_t>(g)];
            if (e == 0)
                continue;
            const auto& dg = d.d_generator(g);
            if (!dg.is_zero()) {
                // m = A * g^e * B  ->  (-1)^{|A|} A * (e g^{e-1} dg) * B
                Monomial a = gradedalg::unit_monomial(table), b = gradedalg::unit_monomial(table);
                Monomial mid = gradedalg::unit_monomial(table);
                for (int h = 0; h < table.size(); ++h) {
                    const int eh = m.exponents[static_cast<std::size_t>(h)];
                    if (h < g)
                        a.exponents[static_cast<std::size_t>(h)] = eh;
                    else if (h > g)
                        b.exponents[static_cast<std::size_t>(h)] = eh;
                }
                mid.exponents[static_cast<std::size_t>(g)] = e - 1;
                Rational coef = c * e;
                if (prefix_degree % 2)
                    coef = -coef;
                auto term = GPolynomial::monomial(tp, a, coef) * GPolynomial::monomial(tp, mid) * dg *
                            GPolynomial::monomial(tp, b);
                out += term;
            }
            prefix_degree += e * table[g].degree;
        }
    }
    return out;
}

std::shared_ptr<const DgaSpec::DegreeMap> DgaSpec::degree_map(int q) const
{
    {
        std::lock_guard lock(cache_->mutex);
        if (auto it = cache_->maps.find(q); it != cache_->maps.end())
            return it->second;
    }
    auto map = std::make_shared<DegreeMap>();
    auto src = algebra_.basis(q);
    auto dst = algebra_.basis(q + 1);
    for (int i = 0; i < src->quotient_dimension(); ++i) {
        auto dm = differential(*this, GPolynomial::monomial(table(), src->complement_monomial(i)));
        map->images.push_back(dst->project(dm));
    }
    map->kernel = linalg::kernel_and_image(map->images);
    std::lock_guard lock(cache_->mutex);
    return cache_->maps.emplace(q, std::move(map)).first->second;
}

CheckResult check_d_squared(const DgaSpec& d)
{
    const auto& table = *d.table();
    for (int g = 0; g < table.size(); ++g) {
        if (table[g].degree > d.degree_cap())
            continue;
        auto dd = differential(d, d.d_generator(g));
        if (!gradedalg::ideal_member(d.algebra(), dd))
            return {false, "d^2(" + table[g].name + ") = " + gradedalg::to_string(dd) + " is not zero"};
    }
    return {};
}

CheckResult check_ideal_stability(const DgaSpec& d)
{
    // d(r m) = d(r) m +- r d(m), and r d(m) is already in I; modulo I it is
    // enough to let m run over complement monomials.
    const auto& tp = d.table();
    for (const auto& r : d.algebra().relations()) {
        const int dr = *r.degree();
        if (dr > d.degree_cap())
            continue;
        auto r_img = differential(d, r);
        if (gradedalg::ideal_member(d.algebra(), r_img))
            continue;
        for (int q = 0; dr + q <= d.degree_cap(); ++q) {
            auto b = d.algebra().basis(q);
            for (int i = 0; i < b->quotient_dimension(); ++i) {
                auto rm = r * GPolynomial::monomial(tp, b->complement_monomial(i));
                auto img = differential(d, rm);
                if (!gradedalg::ideal_member(d.algebra(), img))
                    return {false, "relation '" + gradedalg::to_string(r) + "' is not preserved: d(" +
                                       gradedalg::to_string(rm) + ") = " + gradedalg::to_string(img)};
            }
        }
    }
    return {};
}

int CohomologyReport::rank(int q) const
{
    auto it = ranks.find(q);
    return it == ranks.end() ? 0 : it->second;
}

std::vector<int> CohomologyReport::rank_vector() const
{
    std::vector<int> v;
    for (int q = 0; q <= degree_cap; ++q)
        v.push_back(rank(q));
    return v;
}

long CohomologyReport::euler_characteristic() const
{
    long chi = 0;
    for (const auto& [q, r] : ranks)
        chi += (q % 2 ? -1 : 1) * static_cast<long>(r);
    return chi;
}

CohomologyReport cohomology_ranks(const DgaSpec& d)
{
    CohomologyReport rep;
    rep.degree_cap = d.degree_cap();
    auto sq = check_d_squared(d);
    if (!sq)
        throw ModelError("d^2 != 0: " + sq.detail);
    rep.d_squared_ok = true;
    auto st = check_ideal_stability(d);
    if (!st)
        throw ModelError("ideal not stable under d: " + st.detail);
    rep.ideal_stable_ok = true;

    for (int q = 0; q <= d.degree_cap(); ++q) {
        auto cur = d.degree_map(q);
        linalg::Echelon boundaries;
        if (q > 0)
            boundaries = d.degree_map(q - 1)->kernel.image;
        auto basis = d.algebra().basis(q);
        std::vector<GPolynomial> reps;
        for (const auto& z : cur->kernel.kernel) {
            const int pivot = boundaries.insert(z);
            if (pivot >= 0)
                reps.push_back(basis->from_complement(d.table(), boundaries.rows().at(pivot)));
        }
        const int prev_rank = q > 0 ? d.degree_map(q - 1)->kernel.rank : 0;
        const int r = static_cast<int>(cur->kernel.kernel.size()) - prev_rank;
        if (r != static_cast<int>(reps.size()))
            throw Error("internal: cocycle count mismatch in degree " + std::to_string(q));
        rep.ranks[q] = r;
        rep.representatives[q] = std::move(reps);
    }
    rep.top_degrees_vanish = rep.rank(rep.degree_cap) == 0 && rep.rank(rep.degree_cap - 1) == 0;
    return rep;
}

bool is_cocycle(const DgaSpec& d, const GPolynomial& p)
{
    return gradedalg::ideal_member(d.algebra(), differential(d, p));
}

bool is_coboundary(const DgaSpec& d, const GPolynomial& p)
{
    if (p.is_zero())
        return true;
    auto q = p.degree();
    if (!q)
        throw DomainError("coboundary test needs a homogeneous polynomial");
    auto coords = d.algebra().basis(*q)->project(p);
    if (coords.empty())
        return true;
    if (*q == 0)
        return false;
    return d.degree_map(*q - 1)->kernel.image.in_span(coords);
}

PresentationReport verify_presentation(const DgaSpec& d, const PresentedAlgebra& p,
                                       const std::map<std::string, GPolynomial>& gen_map)
{
    PresentationReport rep;
    const auto& src = *p.table();
    const auto fail = [&](int degree, std::string why) {
        rep.pass = false;
        rep.failed_degree = degree;
        rep.failure = std::move(why);
        return rep;
    };

    std::vector<GPolynomial> images;
    for (int i = 0; i < src.size(); ++i) {
        auto it = gen_map.find(src[i].name);
        if (it == gen_map.end())
            return fail(src[i].degree, "no image given for generator '" + src[i].name + "'");
        const auto& img = it->second;
        if (!(*img.table() == *d.table()))
            throw DimensionError("image of '" + src[i].name + "' is not over the model's generators");
        if (!img.is_zero() && img.degree() != src[i].degree)
            return fail(src[i].degree, "image of '" + src[i].name + "' has the wrong degree");
        if (!is_cocycle(d, img))
            return fail(src[i].degree, "image of '" + src[i].name + "' is not a cocycle");
        images.push_back(img);
    }

    for (const auto& r : p.relations()) {
        auto img = gradedalg::evaluate(r, d.table(), images);
        if (!is_coboundary(d, img))
            return fail(*r.degree(), "relation '" + gradedalg::to_string(r) + "' maps to " +
                                         gradedalg::to_string(img) + ", which is not zero in cohomology");
    }

    const auto h = cohomology_ranks(d);
    for (int q = 0; q <= d.degree_cap(); ++q) {
        rep.expected[q] = gradedalg::quotient_dimension(p, q);
        rep.computed[q] = h.rank(q);
    }
    for (int q = 0; q <= d.degree_cap(); ++q) {
        if (rep.expected[q] != rep.computed[q])
            return fail(q, "dimension mismatch in degree " + std::to_string(q) + ": presentation " +
                               std::to_string(rep.expected[q]) + ", cohomology " + std::to_string(rep.computed[q]));
    }

    for (int q = 0; q <= d.degree_cap(); ++q) {
        if (rep.computed[q] == 0)
            continue;
        linalg::Echelon span;
        if (q > 0)
            span = d.degree_map(q - 1)->kernel.image;
        const int base = span.rank();
        auto pb = p.basis(q);
        auto db = d.algebra().basis(q);
        for (int i = 0; i < pb->quotient_dimension(); ++i) {
            auto img = gradedalg::evaluate(GPolynomial::monomial(p.table(), pb->complement_monomial(i)), d.table(),
                                           images);
            span.insert(db->project(img));
        }
        if (span.rank() - base != rep.computed[q])
            return fail(q, "induced map is not onto in degree " + std::to_string(q));
    }

    rep.pass = true;
    return rep;
}

DgaSpec reorder_generators(const DgaSpec& d, const std::vector<int>& order, const std::vector<std::string>& new_names)
{
    const auto& old = *d.table();
    const int n = old.size();
    if (static_cast<int>(order.size()) != n)
        throw DimensionError("reordering must list every generator once");
    if (!new_names.empty() && static_cast<int>(new_names.size()) != n)
        throw DimensionError("one new name per generator expected");
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<gradedalg::Generator> gens;
    for (int i = 0; i < n; ++i) {
        const int o = order[static_cast<std::size_t>(i)];
        if (o < 0 || o >= n || used[static_cast<std::size_t>(o)])
            throw DomainError("reordering is not a permutation");
        used[static_cast<std::size_t>(o)] = true;
        auto g = old[o];
        if (!new_names.empty())
            g.name = new_names[static_cast<std::size_t>(i)];
        gens.push_back(std::move(g));
    }
    auto table = gradedalg::make_table(std::move(gens));
    std::vector<GPolynomial> images(static_cast<std::size_t>(n), GPolynomial(table));
    for (int i = 0; i < n; ++i)
        images[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = GPolynomial::generator(table, i);

    std::vector<GPolynomial> relations;
    for (const auto& r : d.algebra().relations())
        relations.push_back(gradedalg::evaluate(r, table, images));
    std::map<std::string, GPolynomial> dm;
    for (int i = 0; i < n; ++i)
        dm.emplace((*table)[i].name,
                   gradedalg::evaluate(d.d_generator(order[static_cast<std::size_t>(i)]), table, images));
    return DgaSpec(PresentedAlgebra(table, std::move(relations)), dm, d.degree_cap());
}

}  // namespace cpstrata::dga
