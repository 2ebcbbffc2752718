#include "cpstrata/feasibility.hpp"

#include <algorithm>

#include "cpstrata/error.hpp"

namespace cpstrata::feasibility {

namespace {

// Dictionary-form simplex with Bland's rule; exact, so it never cycles.
class Simplex {
public:
    Simplex(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
            const std::vector<Rational>& c)
        : m_(static_cast<int>(b.size())), n_(static_cast<int>(c.size())),
          basis_(static_cast<std::size_t>(m_)), nonbasis_(static_cast<std::size_t>(n_ + 1)),
          d_(static_cast<std::size_t>(m_ + 2), std::vector<Rational>(static_cast<std::size_t>(n_ + 2)))
    {
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j)
                at(i, j) = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            basis_[static_cast<std::size_t>(i)] = n_ + i;
            at(i, n_) = -1;
            at(i, n_ + 1) = b[static_cast<std::size_t>(i)];
        }
        for (int j = 0; j < n_; ++j) {
            nonbasis_[static_cast<std::size_t>(j)] = j;
            at(m_, j) = -c[static_cast<std::size_t>(j)];
        }
        nonbasis_[static_cast<std::size_t>(n_)] = -1;
        at(m_ + 1, n_) = 1;
    }

    LpResult solve()
    {
        LpResult res;
        int r = 0;
        for (int i = 1; i < m_; ++i)
            if (at(i, n_ + 1) < at(r, n_ + 1))
                r = i;
        if (m_ > 0 && sgn(at(r, n_ + 1)) < 0) {
            pivot(r, n_);
            if (!run(1) || sgn(at(m_ + 1, n_ + 1)) < 0) {
                res.status = LpResult::Status::Infeasible;
                return res;
            }
            for (int i = 0; i < m_; ++i) {
                if (basis_[static_cast<std::size_t>(i)] != -1)
                    continue;
                int s = -1;
                for (int j = 0; j <= n_; ++j)
                    if (sgn(at(i, j)) != 0 && (s == -1 || nb(j) < nb(s)))
                        s = j;
                if (s != -1)
                    pivot(i, s);
            }
        }
        if (!run(2)) {
            res.status = LpResult::Status::Unbounded;
            return res;
        }
        res.status = LpResult::Status::Optimal;
        res.y.assign(static_cast<std::size_t>(n_), Rational(0));
        for (int i = 0; i < m_; ++i) {
            int bi = basis_[static_cast<std::size_t>(i)];
            if (bi >= 0 && bi < n_)
                res.y[static_cast<std::size_t>(bi)] = at(i, n_ + 1);
        }
        res.value = at(m_, n_ + 1);
        return res;
    }

private:
    Rational& at(int i, int j) { return d_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    int nb(int j) const { return nonbasis_[static_cast<std::size_t>(j)]; }
    int bs(int i) const { return basis_[static_cast<std::size_t>(i)]; }

    void pivot(int r, int s)
    {
        Rational inv = 1 / at(r, s);
        for (int i = 0; i < m_ + 2; ++i) {
            if (i == r || sgn(at(i, s)) == 0)
                continue;
            Rational f = at(i, s) * inv;
            for (int j = 0; j < n_ + 2; ++j)
                if (j != s && sgn(at(r, j)) != 0)
                    at(i, j) -= at(r, j) * f;
        }
        for (int j = 0; j < n_ + 2; ++j)
            if (j != s)
                at(r, j) *= inv;
        for (int i = 0; i < m_ + 2; ++i)
            if (i != r)
                at(i, s) *= -inv;
        at(r, s) = inv;
        std::swap(basis_[static_cast<std::size_t>(r)], nonbasis_[static_cast<std::size_t>(s)]);
    }

    bool run(int phase)
    {
        const int x = phase == 1 ? m_ + 1 : m_;
        while (true) {
            int s = -1;
            for (int j = 0; j <= n_; ++j) {
                if (phase == 2 && nb(j) == -1)
                    continue;
                if (sgn(at(x, j)) < 0 && (s == -1 || nb(j) < nb(s)))
                    s = j;
            }
            if (s == -1)
                return true;
            int r = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (sgn(at(i, s)) <= 0)
                    continue;
                Rational ratio = at(i, n_ + 1) / at(i, s);
                if (r == -1 || ratio < best || (ratio == best && bs(i) < bs(r))) {
                    r = i;
                    best = ratio;
                }
            }
            if (r == -1)
                return false;
            pivot(r, s);
        }
    }

    int m_, n_;
    std::vector<int> basis_, nonbasis_;
    std::vector<std::vector<Rational>> d_;
};

bool is_strict(Relation r) { return r == Relation::Less || r == Relation::Greater; }

// Rewrites every constraint as  a.x (<|<=) b.
struct Row {
    std::vector<Rational> a;
    Rational b;
    bool strict;
};

std::vector<Row> normalized_rows(const LinearConstraintSystem& sys)
{
    std::vector<Row> rows;
    for (const auto& c : sys.constraints()) {
        auto negated = [&] {
            std::vector<Rational> a = c.coefficients;
            for (auto& v : a)
                v = -v;
            return a;
        };
        switch (c.relation) {
        case Relation::Less:
        case Relation::LessEqual:
            rows.push_back({c.coefficients, c.constant, is_strict(c.relation)});
            break;
        case Relation::Greater:
        case Relation::GreaterEqual:
            rows.push_back({negated(), -c.constant, is_strict(c.relation)});
            break;
        case Relation::Equal:
            rows.push_back({c.coefficients, c.constant, false});
            rows.push_back({negated(), -c.constant, false});
            break;
        }
    }
    return rows;
}

struct MarginSolution {
    std::vector<Rational> x;
    Rational margin;  // common slack of strict rows, capped at 1
};

// maximize t  s.t.  a.x + t <= b (strict rows),  a.x <= b (others),  t <= 1.
// x is split into nonnegative parts; t = 1 - s with s >= 0.
std::optional<MarginSolution> max_margin(const std::vector<Row>& rows, int dim, bool all_strict)
{
    const int nv = 2 * dim + 1;
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (const auto& row : rows) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(nv));
        for (int j = 0; j < dim; ++j) {
            coeffs[static_cast<std::size_t>(j)] = row.a[static_cast<std::size_t>(j)];
            coeffs[static_cast<std::size_t>(dim + j)] = -row.a[static_cast<std::size_t>(j)];
        }
        const bool strict = all_strict || row.strict;
        if (strict) {
            coeffs[static_cast<std::size_t>(2 * dim)] = -1;
            b.push_back(row.b - 1);
        } else {
            b.push_back(row.b);
        }
        a.push_back(std::move(coeffs));
    }
    std::vector<Rational> c(static_cast<std::size_t>(nv));
    c[static_cast<std::size_t>(2 * dim)] = -1;
    auto res = maximize(a, b, c);
    if (res.status != LpResult::Status::Optimal)
        return std::nullopt;
    MarginSolution sol;
    sol.x.resize(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j)
        sol.x[static_cast<std::size_t>(j)] =
            res.y[static_cast<std::size_t>(j)] - res.y[static_cast<std::size_t>(dim + j)];
    sol.margin = 1 + res.value;
    return sol;
}

bool row_holds(const Row& row, const std::vector<Rational>& x)
{
    Rational lhs;
    for (std::size_t j = 0; j < x.size(); ++j)
        lhs += row.a[j] * x[j];
    return row.strict ? lhs < row.b : lhs <= row.b;
}

Rational round_to(const Rational& v, const Integer& den)
{
    // nearest multiple of 1/den
    Rational scaled = v * den + Rational(1, 2);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Rational r(fl, den);
    r.canonicalize();
    return r;
}

std::vector<Rational> snap(const std::vector<Row>& rows, const std::vector<Rational>& x, const Rational& margin)
{
    if (sgn(margin) <= 0)
        return x;
    // Rounding every coordinate to 1/den moves a.x by at most |a|_1 / (2 den).
    Rational worst;
    for (const auto& row : rows) {
        Rational l1;
        for (const auto& v : row.a)
            l1 += abs(v);
        worst = std::max<Rational>(worst, l1);
    }
    Rational needed = worst / (2 * margin);
    Integer bound;
    mpz_cdiv_q(bound.get_mpz_t(), needed.get_num_mpz_t(), needed.get_den_mpz_t());
    bound += 1;
    const Integer scan_limit = std::min<Integer>(bound, Integer(2000));
    for (Integer den = 1; den <= scan_limit; ++den) {
        std::vector<Rational> y;
        y.reserve(x.size());
        for (const auto& v : x)
            y.push_back(round_to(v, den));
        if (std::all_of(rows.begin(), rows.end(), [&](const Row& r) { return row_holds(r, y); }))
            return y;
    }
    return x;
}

}  // namespace

LinearConstraintSystem::LinearConstraintSystem(int dimension) : dimension_(dimension)
{
    if (dimension < 0)
        throw DomainError("negative dimension");
}

void LinearConstraintSystem::add(std::vector<Rational> coefficients, Relation relation, Rational constant)
{
    add(LinearConstraint{std::move(coefficients), std::move(constant), relation});
}

void LinearConstraintSystem::add(LinearConstraint c)
{
    if (static_cast<int>(c.coefficients.size()) != dimension_)
        throw DimensionError("constraint has " + std::to_string(c.coefficients.size()) +
                             " coefficients, system dimension is " + std::to_string(dimension_));
    constraints_.push_back(std::move(c));
}

bool LinearConstraintSystem::satisfied_by(const std::vector<Rational>& x) const
{
    if (static_cast<int>(x.size()) != dimension_)
        throw DimensionError("point has wrong dimension");
    const auto rows = normalized_rows(*this);
    return std::all_of(rows.begin(), rows.end(), [&](const Row& r) { return row_holds(r, x); });
}

LpResult maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c)
{
    if (a.size() != b.size())
        throw DimensionError("LP: row count mismatch");
    for (const auto& row : a)
        if (row.size() != c.size())
            throw DimensionError("LP: column count mismatch");
    return Simplex(a, b, c).solve();
}

bool feasible(const LinearConstraintSystem& sys)
{
    if (sys.empty())
        return true;
    auto rows = normalized_rows(sys);
    auto sol = max_margin(rows, sys.dimension(), false);
    if (!sol)
        return false;
    const bool any_strict = std::any_of(rows.begin(), rows.end(), [](const Row& r) { return r.strict; });
    return !any_strict || sgn(sol->margin) > 0;
}

std::optional<std::vector<Rational>> find_point(const LinearConstraintSystem& sys)
{
    const int dim = sys.dimension();
    if (sys.empty())
        return std::vector<Rational>(static_cast<std::size_t>(dim));
    auto rows = normalized_rows(sys);
    // Prefer an interior point: rounding is then guaranteed to succeed.
    if (auto interior = max_margin(rows, dim, true); interior && sgn(interior->margin) > 0)
        return snap(rows, interior->x, interior->margin);
    auto sol = max_margin(rows, dim, false);
    if (!sol)
        return std::nullopt;
    const bool any_strict = std::any_of(rows.begin(), rows.end(), [](const Row& r) { return r.strict; });
    if (any_strict && sgn(sol->margin) <= 0)
        return std::nullopt;
    return sol->x;
}

}  // namespace cpstrata::feasibility
