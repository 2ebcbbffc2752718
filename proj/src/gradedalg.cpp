#include "cpstrata/gradedalg.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>

#include "cpstrata/error.hpp"

namespace cpstrata::gradedalg {

// ---------------------------------------------------------------------------
// generator tables

GeneratorTable::GeneratorTable(std::vector<Generator> generators) : gens_(std::move(generators))
{
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        if (g.name.empty())
            throw DomainError("generator name is empty");
        if (g.degree <= 0)
            throw DomainError("generator '" + g.name + "' must have positive degree");
        if (g.nilpotence < 0)
            throw DomainError("generator '" + g.name + "' has negative nilpotence bound");
        if (!by_name_.emplace(g.name, static_cast<int>(i)).second)
            throw DomainError("duplicate generator name '" + g.name + "'");
    }
}

void GeneratorTable::add_alias(const std::string& alias, const std::string& target)
{
    const int idx = index_of(target);
    if (by_name_.count(alias))
        throw DomainError("alias '" + alias + "' shadows a generator");
    aliases_[alias] = idx;
    by_name_.emplace(alias, idx);
}

std::optional<int> GeneratorTable::find(std::string_view name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

int GeneratorTable::index_of(std::string_view name) const
{
    if (auto i = find(name))
        return *i;
    throw ParseError("unknown generator symbol '" + std::string(name) + "'");
}

int GeneratorTable::max_exponent(int i) const
{
    if (is_odd(i))
        return 1;
    const int k = (*this)[i].nilpotence;
    return k > 0 ? k - 1 : -1;
}

TablePtr make_table(std::vector<Generator> generators)
{
    return std::make_shared<const GeneratorTable>(std::move(generators));
}

// ---------------------------------------------------------------------------
// monomials

int degree(const GeneratorTable& table, const Monomial& m)
{
    int d = 0;
    for (int i = 0; i < table.size(); ++i)
        d += m.exponents[static_cast<std::size_t>(i)] * table[i].degree;
    return d;
}

Monomial unit_monomial(const GeneratorTable& table)
{
    return Monomial{std::vector<int>(static_cast<std::size_t>(table.size()), 0)};
}

namespace {

bool within_bounds(const GeneratorTable& table, const Monomial& m)
{
    for (int i = 0; i < table.size(); ++i) {
        const int cap = table.max_exponent(i);
        if (cap >= 0 && m.exponents[static_cast<std::size_t>(i)] > cap)
            return false;
    }
    return true;
}

}  // namespace

std::optional<SignedMonomial> normal_form(const GeneratorTable& table, std::span<const int> word, int sign)
{
    std::vector<int> w(word.begin(), word.end());
    for (int g : w)
        if (g < 0 || g >= table.size())
            throw DomainError("generator index out of range");
    // bubble sort, counting odd/odd transpositions
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j + 1 < w.size() - i; ++j) {
            if (w[j] > w[j + 1]) {
                if (table.is_odd(w[j]) && table.is_odd(w[j + 1]))
                    sign = -sign;
                std::swap(w[j], w[j + 1]);
            }
        }
    }
    Monomial m = unit_monomial(table);
    for (int g : w)
        ++m.exponents[static_cast<std::size_t>(g)];
    if (!within_bounds(table, m))
        return std::nullopt;
    return SignedMonomial{sign, std::move(m)};
}

std::optional<SignedMonomial> normal_form(const GeneratorTable& table, const std::vector<std::string>& word, int sign)
{
    std::vector<int> idx;
    idx.reserve(word.size());
    for (const auto& s : word)
        idx.push_back(table.index_of(s));
    return normal_form(table, idx, sign);
}

std::optional<SignedMonomial> multiply(const GeneratorTable& table, const Monomial& a, const Monomial& b)
{
    const int n = table.size();
    SignedMonomial out{1, a};
    // Moving each odd generator of b left past the odd generators of a with a larger index.
    int odd_after = 0;  // odd generators of a with index > current
    std::vector<int> suffix_odd(static_cast<std::size_t>(n + 1), 0);
    for (int i = n - 1; i >= 0; --i)
        suffix_odd[static_cast<std::size_t>(i)] =
            suffix_odd[static_cast<std::size_t>(i + 1)] +
            (table.is_odd(i) ? a.exponents[static_cast<std::size_t>(i)] : 0);
    int swaps = 0;
    for (int i = 0; i < n; ++i) {
        const int e = b.exponents[static_cast<std::size_t>(i)];
        if (e == 0)
            continue;
        if (table.is_odd(i)) {
            odd_after = suffix_odd[static_cast<std::size_t>(i + 1)];
            swaps += e * odd_after;
        }
        out.monomial.exponents[static_cast<std::size_t>(i)] += e;
    }
    if (!within_bounds(table, out.monomial))
        return std::nullopt;
    if (swaps % 2)
        out.sign = -1;
    return out;
}

std::vector<int> word_of(const Monomial& m)
{
    std::vector<int> w;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        for (int k = 0; k < m.exponents[i]; ++k)
            w.push_back(static_cast<int>(i));
    return w;
}

// ---------------------------------------------------------------------------
// polynomials

GPolynomial::GPolynomial(TablePtr table) : table_(std::move(table))
{
    if (!table_)
        throw DomainError("polynomial needs a generator table");
}

GPolynomial GPolynomial::constant(TablePtr table, const Rational& c)
{
    GPolynomial p(std::move(table));
    p.add_term(unit_monomial(*p.table_), c);
    return p;
}

GPolynomial GPolynomial::generator(TablePtr table, std::string_view name)
{
    const int i = table->index_of(name);
    return generator(std::move(table), i);
}

GPolynomial GPolynomial::generator(TablePtr table, int index)
{
    GPolynomial p(std::move(table));
    Monomial m = unit_monomial(*p.table_);
    m.exponents.at(static_cast<std::size_t>(index)) = 1;
    p.add_term(m, 1);
    return p;
}

GPolynomial GPolynomial::monomial(TablePtr table, Monomial m, const Rational& c)
{
    GPolynomial p(std::move(table));
    p.add_term(m, c);
    return p;
}

bool GPolynomial::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    const int d = term_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return term_degree(t.first) == d; });
}

std::optional<int> GPolynomial::degree() const
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return term_degree(terms_.begin()->first);
}

void GPolynomial::add_term(const Monomial& m, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    if (static_cast<int>(m.exponents.size()) != table_->size())
        throw DimensionError("monomial does not match generator table");
    if (!within_bounds(*table_, m))
        throw DomainError("monomial is not in normal form: " + gradedalg::to_string(*table_, m));
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

void GPolynomial::check_table(const GPolynomial& o) const
{
    if (table_ != o.table_ && !(*table_ == *o.table_))
        throw DimensionError("polynomials over different generator tables");
}

GPolynomial& GPolynomial::operator+=(const GPolynomial& o)
{
    check_table(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

GPolynomial& GPolynomial::operator-=(const GPolynomial& o)
{
    check_table(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

GPolynomial& GPolynomial::operator*=(const Rational& c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

GPolynomial GPolynomial::operator-() const
{
    GPolynomial p = *this;
    return p *= -1;
}

GPolynomial operator*(const GPolynomial& a, const GPolynomial& b)
{
    a.check_table(b);
    GPolynomial out(a.table_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto prod = multiply(*a.table_, ma, mb);
            if (!prod)
                continue;
            Rational c = ca * cb;
            if (prod->sign < 0)
                c = -c;
            out.add_term(prod->monomial, c);
        }
    }
    return out;
}

GPolynomial GPolynomial::pow(int e) const
{
    if (e < 0)
        throw DomainError("negative exponent");
    GPolynomial out = constant(table_, 1);
    for (int i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

GPolynomial evaluate(const GPolynomial& p, const TablePtr& target, const std::vector<GPolynomial>& images)
{
    if (static_cast<int>(images.size()) != p.table()->size())
        throw DimensionError("substitution needs one image per generator");
    GPolynomial out(target);
    for (const auto& [m, c] : p.terms()) {
        GPolynomial t = GPolynomial::constant(target, c);
        for (int g : word_of(m))
            t = t * images[static_cast<std::size_t>(g)];
        out += t;
    }
    return out;
}

// ---------------------------------------------------------------------------
// text form

std::string to_string(const GeneratorTable& table, const Monomial& m)
{
    std::string s;
    for (int i = 0; i < table.size(); ++i) {
        const int e = m.exponents[static_cast<std::size_t>(i)];
        if (e == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += table[i].name;
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

std::string to_string(const GPolynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = sgn(c) < 0;
        const Rational mag = abs(c);
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        const std::string mon = to_string(*p.table(), m);
        if (mon.empty())
            s += cpstrata::to_string(mag);
        else if (mag == 1)
            s += mon;
        else
            s += cpstrata::to_string(mag) + "*" + mon;
    }
    return s;
}

namespace {

class PolyParser {
public:
    PolyParser(const TablePtr& table, std::string_view text) : table_(table), text_(text) {}

    GPolynomial parse()
    {
        auto p = sum();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError("cannot parse polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                         ": " + why);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    GPolynomial sum()
    {
        GPolynomial acc(table_);
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (accept('+')) {
            } else if (accept('-')) {
                sign = -1;
            } else if (!first) {
                break;
            }
            auto t = term();
            acc += sign > 0 ? t : -t;
            first = false;
        }
        return acc;
    }

    GPolynomial term()
    {
        auto acc = factor();
        while (accept('*'))
            acc = acc * factor();
        return acc;
    }

    int exponent()
    {
        if (!accept('^'))
            return 1;
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected exponent");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    GPolynomial factor()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = sum();
            if (!accept(')'))
                fail("expected ')'");
            return inner.pow(exponent());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
                ++pos_;
            return GPolynomial::constant(table_, parse_rational(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            auto name = text_.substr(start, pos_ - start);
            auto g = GPolynomial::generator(table_, table_->index_of(name));
            return g.pow(exponent());
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const TablePtr& table_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GPolynomial parse_polynomial(const TablePtr& table, std::string_view text)
{
    return PolyParser(table, text).parse();
}

// ---------------------------------------------------------------------------
// per-degree bases

std::vector<Monomial> monomials_of_degree(const GeneratorTable& table, int q)
{
    std::vector<Monomial> out;
    if (q < 0)
        return out;
    Monomial m = unit_monomial(table);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == table.size()) {
            if (remaining == 0)
                out.push_back(m);
            return;
        }
        const int d = table[i].degree;
        int cap = remaining / d;
        if (const int bound = table.max_exponent(i); bound >= 0)
            cap = std::min(cap, bound);
        for (int e = 0; e <= cap; ++e) {
            m.exponents[static_cast<std::size_t>(i)] = e;
            rec(i + 1, remaining - e * d);
        }
        m.exponents[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, q);
    std::sort(out.begin(), out.end());
    return out;
}

linalg::SparseVector DegreeBasis::to_ambient(const GPolynomial& p) const
{
    linalg::SparseVector v;
    for (const auto& [m, c] : p.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw DomainError("term " + to_string(*p.table(), m) + " is not of degree " + std::to_string(degree));
        v.emplace(it->second, c);
    }
    return v;
}

linalg::SparseVector DegreeBasis::project(const GPolynomial& p) const
{
    linalg::SparseVector out;
    for (auto& [i, c] : ideal.reduce(to_ambient(p)))
        out.emplace(complement_position.at(i), std::move(c));
    return out;
}

GPolynomial DegreeBasis::from_complement(const TablePtr& table, const linalg::SparseVector& coords) const
{
    GPolynomial p(table);
    for (const auto& [pos, c] : coords)
        p.add_term(complement_monomial(pos), c);
    return p;
}

struct PresentedAlgebra::Cache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const DegreeBasis>> bases;
};

PresentedAlgebra::PresentedAlgebra(TablePtr table, std::vector<GPolynomial> relations)
    : table_(std::move(table)), cache_(std::make_shared<Cache>())
{
    for (auto& r : relations) {
        if (r.table() != table_ && !(*r.table() == *table_))
            throw DimensionError("relation over a different generator table");
        if (!r.is_homogeneous())
            throw ModelError("relation '" + to_string(r) + "' is not homogeneous");
        if (!r.is_zero())
            relations_.push_back(std::move(r));
    }
}

std::shared_ptr<const DegreeBasis> PresentedAlgebra::basis(int q) const
{
    {
        std::lock_guard lock(cache_->mutex);
        if (auto it = cache_->bases.find(q); it != cache_->bases.end())
            return it->second;
    }
    auto b = std::make_shared<DegreeBasis>();
    b->degree = q;
    b->ambient = monomials_of_degree(*table_, q);
    for (std::size_t i = 0; i < b->ambient.size(); ++i)
        b->index.emplace(b->ambient[i], static_cast<int>(i));
    for (const auto& r : relations_) {
        const int dr = *r.degree();
        if (dr > q)
            continue;
        for (const auto& m : monomials_of_degree(*table_, q - dr)) {
            linalg::SparseVector row;
            for (const auto& [rm, c] : r.terms()) {
                auto prod = multiply(*table_, rm, m);
                if (!prod)
                    continue;
                linalg::SparseVector single{{b->index.at(prod->monomial), prod->sign > 0 ? c : Rational(-c)}};
                linalg::axpy(row, 1, single);
            }
            if (!row.empty())
                b->ideal.insert(std::move(row));
        }
    }
    for (int i = 0; i < b->ambient_dimension(); ++i) {
        if (!b->ideal.is_pivot(i)) {
            b->complement_position.emplace(i, static_cast<int>(b->complement.size()));
            b->complement.push_back(i);
        }
    }
    std::lock_guard lock(cache_->mutex);
    return cache_->bases.emplace(q, std::move(b)).first->second;
}

GPolynomial PresentedAlgebra::reduce(const GPolynomial& p) const
{
    if (p.is_zero())
        return p;
    auto d = p.degree();
    if (!d)
        throw DomainError("cannot reduce an inhomogeneous polynomial");
    auto b = basis(*d);
    return b->from_complement(table_, b->project(p));
}

std::shared_ptr<const DegreeBasis> graded_basis(const PresentedAlgebra& a, int q)
{
    return a.basis(q);
}

int quotient_dimension(const PresentedAlgebra& a, int q)
{
    return a.basis(q)->quotient_dimension();
}

bool ideal_member(const PresentedAlgebra& a, const GPolynomial& p)
{
    if (p.is_zero())
        return true;
    if (!p.is_homogeneous())
        throw DomainError("ideal membership needs a homogeneous polynomial: " + to_string(p));
    return a.reduce(p).is_zero();
}

}  // namespace cpstrata::gradedalg
