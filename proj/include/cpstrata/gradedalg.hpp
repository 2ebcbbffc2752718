#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpstrata/rational.hpp"
#include "cpstrata/sparse.hpp"

namespace cpstrata::gradedalg {

struct Generator {
    std::string name;
    int degree = 0;
    int nilpotence = 0;  // k > 0 means g^k = 0; odd generators always square to zero

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Ordered generator list; the order fixes the monomial normal form.
/// Aliases are alternative names that resolve to a generator (e.g. G21 -> G12).
class GeneratorTable {
public:
    explicit GeneratorTable(std::vector<Generator> generators);

    void add_alias(const std::string& alias, const std::string& target);

    int size() const { return static_cast<int>(gens_.size()); }
    const Generator& operator[](int i) const { return gens_[static_cast<std::size_t>(i)]; }
    const std::vector<Generator>& generators() const { return gens_; }
    const std::map<std::string, int>& aliases() const { return aliases_; }

    int index_of(std::string_view name) const;  // throws ParseError on unknown symbols
    std::optional<int> find(std::string_view name) const;

    bool is_odd(int i) const { return (*this)[i].degree % 2 != 0; }
    int max_exponent(int i) const;  // -1 when unbounded

    friend bool operator==(const GeneratorTable& a, const GeneratorTable& b) { return a.gens_ == b.gens_; }

private:
    std::vector<Generator> gens_;
    std::map<std::string, int, std::less<>> by_name_;
    std::map<std::string, int> aliases_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

TablePtr make_table(std::vector<Generator> generators);

/// Exponent vector in table order, compared lexicographically.
struct Monomial {
    std::vector<int> exponents;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;
};

int degree(const GeneratorTable& table, const Monomial& m);
Monomial unit_monomial(const GeneratorTable& table);

struct SignedMonomial {
    int sign = 1;
    Monomial monomial;
};

/// Sorts a word of generator indices into table order, flipping the sign for every
/// transposition of two odd generators. nullopt means the product vanishes.
std::optional<SignedMonomial> normal_form(const GeneratorTable& table, std::span<const int> word, int sign = 1);
std::optional<SignedMonomial> normal_form(const GeneratorTable& table, const std::vector<std::string>& word,
                                          int sign = 1);

std::optional<SignedMonomial> multiply(const GeneratorTable& table, const Monomial& a, const Monomial& b);

/// Expands a monomial back into its generator word (table order, with repetition).
std::vector<int> word_of(const Monomial& m);

class GPolynomial {
public:
    explicit GPolynomial(TablePtr table);

    static GPolynomial constant(TablePtr table, const Rational& c);
    static GPolynomial generator(TablePtr table, std::string_view name);
    static GPolynomial generator(TablePtr table, int index);
    static GPolynomial monomial(TablePtr table, Monomial m, const Rational& c = 1);

    const TablePtr& table() const { return table_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_homogeneous() const;
    std::optional<int> degree() const;  // nullopt for zero or inhomogeneous polynomials
    int term_degree(const Monomial& m) const { return gradedalg::degree(*table_, m); }

    void add_term(const Monomial& m, const Rational& c);

    GPolynomial& operator+=(const GPolynomial& o);
    GPolynomial& operator-=(const GPolynomial& o);
    GPolynomial& operator*=(const Rational& c);

    friend GPolynomial operator+(GPolynomial a, const GPolynomial& b) { return a += b; }
    friend GPolynomial operator-(GPolynomial a, const GPolynomial& b) { return a -= b; }
    friend GPolynomial operator*(GPolynomial a, const Rational& c) { return a *= c; }
    friend GPolynomial operator*(const Rational& c, GPolynomial a) { return a *= c; }
    GPolynomial operator-() const;
    friend GPolynomial operator*(const GPolynomial& a, const GPolynomial& b);

    GPolynomial pow(int e) const;

    friend bool operator==(const GPolynomial& a, const GPolynomial& b) { return a.terms_ == b.terms_; }

private:
    void check_table(const GPolynomial& o) const;

    TablePtr table_;
    std::map<Monomial, Rational> terms_;
};

/// Substitutes images[i] for generator i (images over a common target table).
GPolynomial evaluate(const GPolynomial& p, const TablePtr& target, const std::vector<GPolynomial>& images);

/// Text form, e.g. "3/2*T1^2*G12 - T2^2*G12". Factors may be parenthesized.
GPolynomial parse_polynomial(const TablePtr& table, std::string_view text);
std::string to_string(const GPolynomial& p);
std::string to_string(const GeneratorTable& table, const Monomial& m);

/// All normal-form monomials of degree q, ascending lexicographic order.
std::vector<Monomial> monomials_of_degree(const GeneratorTable& table, int q);

/// Degree-q slice of a presented algebra: ambient monomials, the ideal subspace
/// (echelon with the lexicographically latest monomial as pivot) and the
/// complement spanned by the non-pivot monomials.
struct DegreeBasis {
    int degree = 0;
    std::vector<Monomial> ambient;
    std::map<Monomial, int> index;
    linalg::Echelon ideal;
    std::vector<int> complement;           // ambient indices, ascending
    std::map<int, int> complement_position;  // ambient index -> position in complement

    int ambient_dimension() const { return static_cast<int>(ambient.size()); }
    int ideal_dimension() const { return ideal.rank(); }
    int quotient_dimension() const { return static_cast<int>(complement.size()); }

    linalg::SparseVector to_ambient(const GPolynomial& p) const;
    /// Coordinates of p modulo the ideal in the complement basis.
    linalg::SparseVector project(const GPolynomial& p) const;
    GPolynomial from_complement(const TablePtr& table, const linalg::SparseVector& coords) const;
    const Monomial& complement_monomial(int position) const
    {
        return ambient[static_cast<std::size_t>(complement[static_cast<std::size_t>(position)])];
    }
};

class PresentedAlgebra {
public:
    PresentedAlgebra(TablePtr table, std::vector<GPolynomial> relations);

    const TablePtr& table() const { return table_; }
    const std::vector<GPolynomial>& relations() const { return relations_; }

    /// Cached per degree; safe to call concurrently.
    std::shared_ptr<const DegreeBasis> basis(int q) const;

    /// Normal form of a homogeneous polynomial modulo the ideal.
    GPolynomial reduce(const GPolynomial& p) const;

private:
    struct Cache;

    TablePtr table_;
    std::vector<GPolynomial> relations_;
    std::shared_ptr<Cache> cache_;
};

std::shared_ptr<const DegreeBasis> graded_basis(const PresentedAlgebra& a, int q);
int quotient_dimension(const PresentedAlgebra& a, int q);
bool ideal_member(const PresentedAlgebra& a, const GPolynomial& p);

}  // namespace cpstrata::gradedalg
