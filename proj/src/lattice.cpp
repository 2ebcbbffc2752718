#include "cpstrata/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "cpstrata/error.hpp"

namespace cpstrata::lattice {

namespace {

void check_n(int n)
{
    if (n < 1 || n > kMaxPoints)
        throw DomainError("number of blow-ups must be in 1..8, got " + std::to_string(n));
}

void check_same_n(const H2Element& u, const H2Element& v)
{
    if (u.n() != v.n())
        throw DimensionError("H2 elements live in different lattices (n=" + std::to_string(u.n()) +
                             " vs n=" + std::to_string(v.n()) + ")");
}

// Visits every vector in [lo, hi]^n in lexicographic order.
void for_each_box_vector(int n, int lo, int hi, const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> r(static_cast<std::size_t>(n), lo);
    while (true) {
        visit(r);
        int i = n - 1;
        while (i >= 0 && r[static_cast<std::size_t>(i)] == hi) {
            r[static_cast<std::size_t>(i)] = lo;
            --i;
        }
        if (i < 0)
            return;
        ++r[static_cast<std::size_t>(i)];
    }
}

}  // namespace

H2Element::H2Element(int degree, std::vector<int> multiplicities)
    : degree_(degree), mult_(std::move(multiplicities))
{
    if (mult_.empty())
        throw DomainError("H2 element needs at least one exceptional coordinate");
}

H2Element H2Element::line(int n)
{
    return H2Element(1, std::vector<int>(static_cast<std::size_t>(n), 0));
}

H2Element H2Element::exceptional_divisor(int n, int i)
{
    if (i < 1 || i > n)
        throw DomainError("exceptional divisor index out of range");
    std::vector<int> r(static_cast<std::size_t>(n), 0);
    r[static_cast<std::size_t>(i - 1)] = -1;
    return H2Element(0, std::move(r));
}

H2Element H2Element::operator+(const H2Element& other) const
{
    check_same_n(*this, other);
    auto r = mult_;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += other.mult_[i];
    return H2Element(degree_ + other.degree_, std::move(r));
}

H2Element H2Element::operator-(const H2Element& other) const
{
    return *this + other * -1;
}

H2Element H2Element::operator*(int s) const
{
    auto r = mult_;
    for (auto& x : r)
        x *= s;
    return H2Element(degree_ * s, std::move(r));
}

Capacities::Capacities(std::vector<Rational> values) : values_(std::move(values))
{
    if (values_.empty())
        throw DomainError("capacity vector is empty");
    for (const auto& v : values_)
        if (sgn(v) <= 0)
            throw DomainError("capacities must be strictly positive, got " + cpstrata::to_string(v));
    std::sort(values_.begin(), values_.end(), std::greater<>());
}

int intersection(const H2Element& u, const H2Element& v)
{
    check_same_n(u, v);
    int s = u.degree() * v.degree();
    for (int i = 1; i <= u.n(); ++i)
        s -= u.multiplicity(i) * v.multiplicity(i);
    return s;
}

H2Element anticanonical(int n)
{
    check_n(n);
    return H2Element(3, std::vector<int>(static_cast<std::size_t>(n), 1));
}

bool is_exceptional_numerical(const H2Element& u)
{
    if (u.n() > kMaxPoints)
        return false;
    return intersection(u, u) == -1 && intersection(anticanonical(u.n()), u) == 1;
}

std::vector<H2Element> enumerate_exceptional(int n)
{
    check_n(n);
    std::vector<H2Element> out;
    for (int a = 0; a <= 6; ++a) {
        for_each_box_vector(n, -1, 3, [&](const std::vector<int>& r) {
            // Quick filters on K.E = 1 and E.E = -1 before building the element.
            int sum = 0, sq = 0;
            for (int x : r) {
                sum += x;
                sq += x * x;
            }
            if (3 * a - sum != 1 || a * a - sq != -1)
                return;
            out.emplace_back(a, r);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool matches_curve_shape(const H2Element& u)
{
    const auto r = u.multiplicities();
    auto count = [&](int v) { return static_cast<int>(std::count(r.begin(), r.end(), v)); };
    auto only = [&](std::initializer_list<int> allowed) {
        return std::all_of(r.begin(), r.end(), [&](int x) {
            return std::find(allowed.begin(), allowed.end(), x) != allowed.end();
        });
    };
    switch (u.degree()) {
    case 0:
        return count(-1) == 1 && count(0) == u.n() - 1;
    case 1:
    case 2:
        return only({0, 1});
    case 3:
        return only({0, 1, 2}) && count(2) == 1;
    case 4:
        return only({0, 1, 2}) && count(2) == 3;
    case 5:
        return only({0, 1, 2}) && count(1) == 2;
    case 6:
        return only({0, 2, 3}) && count(3) == 1;
    default:
        return false;
    }
}

std::vector<H2Element> negative_wall_classes(int n)
{
    check_n(n);
    std::vector<H2Element> out;
    for (int a = 1; a <= 6; ++a) {
        for_each_box_vector(n, 0, 3, [&](const std::vector<int>& r) {
            H2Element u(a, r);
            if (intersection(u, u) <= -2 && matches_curve_shape(u))
                out.push_back(std::move(u));
        });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rational area(const Capacities& c, const H2Element& u)
{
    if (c.n() != u.n())
        throw DimensionError("capacity vector has length " + std::to_string(c.n()) + " but class has n=" +
                             std::to_string(u.n()));
    Rational s(u.degree());
    for (int i = 1; i <= u.n(); ++i)
        s -= c[i - 1] * u.multiplicity(i);
    return s;
}

std::string to_string(const H2Element& u)
{
    std::string out;
    auto append = [&](long coef, const std::string& symbol) {
        // coef is the signed coefficient of symbol in the sum
        if (coef == 0)
            return;
        if (out.empty())
            out += coef < 0 ? "-" : "";
        else
            out += coef < 0 ? " - " : " + ";
        long mag = coef < 0 ? -coef : coef;
        if (mag != 1)
            out += std::to_string(mag);
        out += symbol;
    };
    append(u.degree(), "L");
    for (int i = 1; i <= u.n(); ++i)
        append(-u.multiplicity(i), "E" + std::to_string(i));
    return out.empty() ? "0" : out;
}

H2Element parse_h2(std::string_view text, int n)
{
    int a = 0;
    std::vector<int> r(static_cast<std::size_t>(n), 0);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& why) {
        throw ParseError("cannot parse H2 class '" + std::string(text) + "': " + why);
    };
    auto read_int = [&]() -> int {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            return -1;
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    bool first = true;
    skip_ws();
    if (text.substr(pos) == "0")
        return H2Element(0, r);
    while (true) {
        skip_ws();
        if (pos >= text.size()) {
            if (first)
                fail("empty");
            break;
        }
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        int coef = read_int();
        if (coef < 0)
            coef = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '*')
            ++pos;
        skip_ws();
        if (pos >= text.size())
            fail("missing symbol");
        if (text[pos] == 'L') {
            ++pos;
            a += sign * coef;
        } else if (text[pos] == 'E') {
            ++pos;
            int idx = read_int();
            if (idx < 1 || idx > n)
                fail("exceptional index out of range");
            r[static_cast<std::size_t>(idx - 1)] -= sign * coef;
        } else {
            fail("unexpected character");
        }
        first = false;
    }
    return H2Element(a, std::move(r));
}

}  // namespace cpstrata::lattice
