#include "cpstrata/ballmodels.hpp"

#include <sstream>

#include "cpstrata/error.hpp"
#include "cpstrata/kriz.hpp"

namespace cpstrata::ballmodels {

using gradedalg::Generator;
using gradedalg::TablePtr;

namespace {

using Factor = std::vector<std::pair<long, long>>;

const Factor kTorus{{1, 0}, {0, 1}};

std::string t_name(int i)
{
    return "T" + std::to_string(i);
}

GPolynomial gen(const TablePtr& t, const std::string& name)
{
    return GPolynomial::generator(t, name);
}

GPolynomial parse(const TablePtr& t, const std::string& text)
{
    return gradedalg::parse_polynomial(t, text);
}

// T_1..T_k, then any extra generators.
TablePtr t_table(int k, std::vector<Generator> extra)
{
    std::vector<Generator> gens;
    for (int i = 1; i <= k; ++i)
        gens.push_back({t_name(i), 2, 0});
    for (auto& g : extra)
        gens.push_back(std::move(g));
    return gradedalg::make_table(std::move(gens));
}

// T_i T_j for T's sitting in different factors.
std::vector<GPolynomial> wedge_relations(const TablePtr& t, const std::vector<Factor>& factors)
{
    std::vector<int> owner;
    for (std::size_t f = 0; f < factors.size(); ++f)
        for (std::size_t j = 0; j < factors[f].size(); ++j)
            owner.push_back(static_cast<int>(f));
    std::vector<GPolynomial> rel;
    for (std::size_t i = 0; i < owner.size(); ++i)
        for (std::size_t j = i + 1; j < owner.size(); ++j)
            if (owner[i] != owner[j])
                rel.push_back(gen(t, t_name(static_cast<int>(i) + 1)) * gen(t, t_name(static_cast<int>(j) + 1)));
    return rel;
}

// Splits the user weights for a chamber into wedge factors.
std::vector<Factor> factors_for(int n, const std::string& chamber, const CircleWeights& w)
{
    const int need = free_circle_count(n, chamber);
    std::vector<std::pair<long, long>> free = w.pairs();
    if (n == 3 && chamber == "small" && w.size() == 3) {
        // the torus part may be spelled out, but it is pinned
        if (Factor(free.begin(), free.begin() + 2) != kTorus)
            throw DomainError("the torus circles are fixed to weights (1,0),(0,1)");
        free.erase(free.begin(), free.begin() + 2);
    } else if ((n == 2 || (n == 3 && chamber == "big")) && w.size() == 2) {
        if (w.pairs() != kTorus)
            throw DomainError("the torus circles are fixed to weights (1,0),(0,1)");
        free.clear();
    }
    if (free.empty() && need > 0 && n == 4)
        free.assign(static_cast<std::size_t>(need), {1, 1});
    if (free.empty() && need > 0 && n == 3)
        free.assign(1, {1, 1});
    if (static_cast<int>(free.size()) != need)
        throw DomainError("chamber " + chamber + " for n=" + std::to_string(n) + " takes " + std::to_string(need) +
                          " circle weight(s), got " + std::to_string(w.size()));

    std::vector<Factor> factors;
    if (n == 2 || n == 3)
        factors.push_back(kTorus);
    for (const auto& p : free)
        factors.push_back({p});
    return factors;
}

CircleWeights free_weights(const std::vector<Factor>& factors)
{
    std::vector<std::pair<long, long>> p;
    for (const auto& f : factors)
        if (f.size() == 1)
            p.push_back(f.front());
    return CircleWeights(std::move(p));
}

}  // namespace

// ---------------------------------------------------------------------------

CircleWeights::CircleWeights(std::vector<std::pair<long, long>> pairs) : pairs_(std::move(pairs))
{
    for (const auto& [a, b] : pairs_)
        if (a == 0 && b == 0)
            throw DomainError("circle weight (0,0) is degenerate: a^2+ab+b^2 vanishes");
}

long CircleWeights::m(int i) const
{
    const auto& [a, b] = pairs_.at(static_cast<std::size_t>(i));
    return a * a + a * b + b * b;
}

long CircleWeights::n(int i) const
{
    const auto& [a, b] = pairs_.at(static_cast<std::size_t>(i));
    return a * a * b + a * b * b;
}

CircleWeights parse_weights(const std::string& text)
{
    std::vector<std::pair<long, long>> pairs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos)
            continue;
        auto comma = item.find(',');
        if (comma == std::string::npos)
            throw ParseError("weight pair '" + item + "' must look like a,b");
        try {
            std::size_t used = 0;
            const std::string left = item.substr(0, comma), right = item.substr(comma + 1);
            long a = std::stol(left, &used);
            if (left.find_first_not_of(" \t", used) != std::string::npos)
                throw std::invalid_argument(left);
            long b = std::stol(right, &used);
            if (right.find_first_not_of(" \t", used) != std::string::npos)
                throw std::invalid_argument(right);
            pairs.emplace_back(a, b);
        } catch (const std::logic_error&) {
            throw ParseError("weight pair '" + item + "' is not a pair of integers");
        }
    }
    return CircleWeights(std::move(pairs));
}

std::string to_string(const CircleWeights& w)
{
    std::string s;
    for (const auto& [a, b] : w.pairs()) {
        if (!s.empty())
            s += ";";
        s += std::to_string(a) + "," + std::to_string(b);
    }
    return s;
}

std::string normalize_chamber(int n, const std::string& label)
{
    auto bad = [&] {
        return UnsupportedError("no chamber '" + label + "' for n=" + std::to_string(n));
    };
    switch (n) {
    case 1:
    case 2:
        if (label == "C_unique" || label == "unique" || label.empty())
            return "C_unique";
        throw bad();
    case 3:
        if (label == "big" || label == "small")
            return label;
        throw bad();
    case 4: {
        std::string digits = label;
        if (digits.rfind("C_", 0) == 0)
            digits = digits.substr(2);
        else if (digits.rfind("C", 0) == 0)
            digits = digits.substr(1);
        if (digits.size() == 1 && digits[0] >= '0' && digits[0] <= '5')
            return "C_" + digits;
        throw bad();
    }
    default:
        throw UnsupportedError("ball models exist for n <= 4 only (n=" + std::to_string(n) + ")");
    }
}

int free_circle_count(int n, const std::string& chamber)
{
    const auto c = normalize_chamber(n, chamber);
    if (n == 3 && c == "small")
        return 1;
    if (n == 4 && c != "C_5")
        return c[2] - '0';
    return 0;
}

int default_cap(int n, const std::string& chamber)
{
    const auto c = normalize_chamber(n, chamber);
    if (n == 4)
        return 14;
    if (n == 3 && c == "small")
        return 12;
    return 10;
}

std::pair<GPolynomial, GPolynomial> sigma_pullbacks(const TablePtr& table, const std::vector<Factor>& factors)
{
    GPolynomial s2(table), s3(table);
    int idx = 1;
    for (const auto& f : factors) {
        GPolynomial t1(table), t2(table);
        for (const auto& [a, b] : f) {
            const auto ti = gen(table, t_name(idx++));
            t1 += ti * Rational(a);
            t2 += ti * Rational(b);
        }
        s2 += t1 * t1 + t2 * t2 + t1 * t2;
        s3 += t1 * t2 * t2 + t1 * t1 * t2;
    }
    return {s2, s3};
}

DgaSpec iemb_model(int n, const std::string& chamber, const CircleWeights& w, int degree_cap)
{
    const auto c = normalize_chamber(n, chamber);
    const int cap = degree_cap >= 0 ? degree_cap : default_cap(n, c);
    if (n == 4 && c == "C_5") {
        if (!w.empty())
            throw DomainError("chamber C_5 takes no circle weights");
        return kriz::kriz_model({2, 4, cap});
    }
    if (n == 1) {
        // B U(2): H = Q[c1, c2]; beta, gamma kill c1^2 - c2 and c1 c2, leaving Q[c1]/(c1^3) = H(CP^2)
        if (!w.empty())
            throw DomainError("n=1 takes no circle weights");
        auto t = gradedalg::make_table({{"c1", 2, 0}, {"c2", 4, 0}, {"beta", 3, 0}, {"gamma", 5, 0}});
        return DgaSpec(PresentedAlgebra(t, {}), {{"beta", parse(t, "c1^2 - c2")}, {"gamma", parse(t, "c1*c2")}}, cap);
    }
    if (n == 4 && c == "C_0") {
        if (!w.empty())
            throw DomainError("chamber C_0 takes no circle weights");
        auto t = gradedalg::make_table({{"beta", 3, 0}, {"gamma", 5, 0}});
        return DgaSpec(PresentedAlgebra(t, {}), {}, cap);
    }
    const auto factors = factors_for(n, c, w);
    int k = 0;
    for (const auto& f : factors)
        k += static_cast<int>(f.size());
    auto t = t_table(k, {{"beta", 3, 0}, {"gamma", 5, 0}});
    auto [s2, s3] = sigma_pullbacks(t, factors);
    return DgaSpec(PresentedAlgebra(t, wedge_relations(t, factors)), {{"beta", s2}, {"gamma", s3}}, cap);
}

PresentedAlgebra small_balls_stabilizer_algebra(Transcription tr)
{
    std::vector<Generator> gens;
    for (int i = 1; i <= 4; ++i)
        gens.push_back({"alpha" + std::to_string(i), 2, 0});
    gens.push_back({"eta1", 5, 0});
    gens.push_back({"eta2", 5, 0});
    auto t = gradedalg::make_table(std::move(gens));
    // r1(i), r2(i) for i = 3, 4, then r5; note r5 = r2(4) - r2(3)
    std::vector<std::string> text;
    for (int i : {3, 4}) {
        const auto ai = "alpha" + std::to_string(i);
        text.push_back("alpha1^2 - alpha2^2 + alpha1*" + ai + " - alpha2*" + ai);
        text.push_back("alpha2^2 - " + ai + "^2 + alpha1*alpha2 - alpha1*" + ai);
    }
    text.push_back("alpha3^2 - alpha4^2 + alpha1*alpha3 - alpha1*alpha4");
    if (tr == Transcription::SymmetricCompletion) {
        const auto a = [](int i) { return "alpha" + std::to_string(i); };
        for (int j = 1; j <= 4; ++j)
            for (int k = j + 1; k <= 4; ++k)
                for (int l = 1; l <= 4; ++l)
                    if (l != j && l != k)
                        text.push_back("(" + a(j) + " - " + a(k) + ")*(" + a(j) + " + " + a(k) + " + " + a(l) + ")");
    }
    for (int i : {1, 2})
        for (int j = 1; j <= 4; ++j)
            for (int k = j + 1; k <= 4; ++k)
                text.push_back("eta" + std::to_string(i) + "*(alpha" + std::to_string(j) + " - alpha" +
                               std::to_string(k) + ")");
    text.push_back("eta1*eta2");
    std::vector<GPolynomial> rel;
    for (const auto& s : text)
        rel.push_back(parse(t, s));
    return PresentedAlgebra(t, std::move(rel));
}

PresentedAlgebra bstab_presentation(int n, const std::string& chamber)
{
    const auto c = normalize_chamber(n, chamber);
    if (n == 1)
        return PresentedAlgebra(gradedalg::make_table({{"c1", 2, 0}, {"c2", 4, 0}}), {});
    if (n == 4 && c == "C_5")
        return small_balls_stabilizer_algebra();
    if (n == 4 && c == "C_0")
        return PresentedAlgebra(gradedalg::make_table({}), {});
    std::vector<Factor> factors;
    if (n == 2 || n == 3)
        factors.push_back(kTorus);
    for (int i = 0; i < free_circle_count(n, c); ++i)
        factors.push_back({{1, 1}});
    int k = 0;
    for (const auto& f : factors)
        k += static_cast<int>(f.size());
    auto t = t_table(k, {});
    return PresentedAlgebra(t, wedge_relations(t, factors));
}

Presentation iemb_presentation(int n, const std::string& chamber, const CircleWeights& w)
{
    const auto c = normalize_chamber(n, chamber);
    const auto model = iemb_model(n, c, w, 0);
    const auto& mt = model.table();

    if (n == 4 && c == "C_5")
        throw UnsupportedError("no closed presentation of H(Conf_4(CP^2)); compare ranks instead");
    if (n == 1) {
        auto t = gradedalg::make_table({{"c1", 2, 0}});
        return {PresentedAlgebra(t, {parse(t, "c1^3")}), {{"c1", gen(mt, "c1")}}};
    }
    if (n == 2 || (n == 3 && c == "big")) {
        auto t = t_table(2, {});
        return {PresentedAlgebra(t, {parse(t, "T1^2 + T2^2 + T1*T2"), parse(t, "T1^3")}),
                {{"T1", gen(mt, "T1")}, {"T2", gen(mt, "T2")}}};
    }
    if (n == 3) {
        const auto fw = free_weights(factors_for(n, c, w));
        const long m = fw.m(0), nn = fw.n(0);
        auto t = t_table(3, {{"eta", 7, 0}});
        std::vector<GPolynomial> rel{parse(t, "T1^2 + T2^2 + T1*T2") + parse(t, "T3^2") * Rational(m),
                                     parse(t, "T1*T3"),
                                     parse(t, "T2*T3"),
                                     parse(t, "T1^3"),
                                     parse(t, "eta*T1"),
                                     parse(t, "eta*T2")};
        auto eta_img = parse(mt, "T3*gamma") * Rational(m) - parse(mt, "T3^2*beta") * Rational(nn);
        return {PresentedAlgebra(t, std::move(rel)),
                {{"T1", gen(mt, "T1")}, {"T2", gen(mt, "T2")}, {"T3", gen(mt, "T3")}, {"eta", eta_img}}};
    }
    if (c == "C_0") {
        auto t = gradedalg::make_table({{"beta", 3, 0}, {"eta", 5, 0}});
        return {PresentedAlgebra(t, {}), {{"beta", gen(mt, "beta")}, {"eta", gen(mt, "gamma")}}};
    }

    const auto fw = free_weights(factors_for(n, c, w));
    const int r = fw.size();
    auto t = t_table(r, {{"eta", 5, 0}});
    GPolynomial quad(t);
    std::vector<GPolynomial> rel;
    for (int i = 0; i < r; ++i)
        quad += gen(t, t_name(i + 1)).pow(2) * Rational(fw.m(i));
    rel.push_back(quad);
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            rel.push_back(gen(t, t_name(i)) * gen(t, t_name(j)));

    // eta = (prod m) gamma - sum_i n_i (prod_{j != i} m_j) T_i beta
    Rational prod_m = 1;
    for (int i = 0; i < r; ++i)
        prod_m *= fw.m(i);
    GPolynomial eta = gen(mt, "gamma") * prod_m;
    for (int i = 0; i < r; ++i) {
        Rational coef = fw.n(i);
        for (int j = 0; j < r; ++j)
            if (j != i)
                coef *= fw.m(j);
        eta -= gen(mt, t_name(i + 1)) * gen(mt, "beta") * coef;
    }
    std::map<std::string, GPolynomial> gm{{"eta", eta}};
    for (int i = 1; i <= r; ++i)
        gm.emplace(t_name(i), gen(mt, t_name(i)));
    return {PresentedAlgebra(t, std::move(rel)), gm};
}

CircleWeights unit_m_weights(int r)
{
    static const std::vector<std::pair<long, long>> pool{{1, 0}, {0, 1}, {1, -1}, {-1, 0}};
    if (r < 1 || r > 4)
        throw DomainError("unit weights exist for 1..4 circles");
    return CircleWeights({pool.begin(), pool.begin() + r});
}

Presentation alpha_presentation(int r)
{
    static const std::vector<std::vector<std::string>> rows{
        {"alpha1^2"},
        {"alpha1^2 + alpha2^2", "alpha1*alpha2"},
        {"alpha1^2 + alpha2^2 + alpha3^2", "alpha1*alpha2", "alpha1*alpha3", "alpha2*alpha3"},
        {"alpha1^2 + alpha2^2 + alpha3^2 + alpha4^2", "alpha1*alpha2", "alpha1*alpha3", "alpha1*alpha4",
         "alpha2*alpha3", "alpha2*alpha4", "alpha3*alpha4"},
    };
    if (r < 1 || r > 4)
        throw DomainError("alpha presentations exist for C_1..C_4");
    std::vector<Generator> gens;
    for (int i = 1; i <= r; ++i)
        gens.push_back({"alpha" + std::to_string(i), 2, 0});
    gens.push_back({"eta", 5, 0});
    auto t = gradedalg::make_table(std::move(gens));
    std::vector<GPolynomial> rel;
    for (const auto& s : rows[static_cast<std::size_t>(r - 1)])
        rel.push_back(parse(t, s));

    // with every m_i = 1 the weighted presentation is literally this one, alpha_i = T_i
    auto weighted = iemb_presentation(4, "C_" + std::to_string(r), unit_m_weights(r));
    std::map<std::string, GPolynomial> gm{{"eta", weighted.gen_map.at("eta")}};
    for (int i = 1; i <= r; ++i)
        gm.emplace("alpha" + std::to_string(i), weighted.gen_map.at(t_name(i)));
    return {PresentedAlgebra(t, std::move(rel)), gm};
}

WeightIndependence weight_independence_check(int n, const std::string& chamber,
                                             const std::vector<CircleWeights>& weight_sets, int degree_cap)
{
    if (weight_sets.size() < 2)
        throw DomainError("weight independence needs at least two weight sets");
    WeightIndependence out;
    for (const auto& w : weight_sets)
        out.rank_tables.push_back(dga::cohomology_ranks(iemb_model(n, chamber, w, degree_cap)).rank_vector());
    out.same = true;
    for (const auto& t : out.rank_tables)
        out.same = out.same && t == out.rank_tables.front();
    return out;
}

AbIsomorphismReport ab_isomorphism_check(int degree_cap)
{
    AbIsomorphismReport rep;
    auto target = iemb_presentation(3, "small", CircleWeights({{1, 1}}));
    const auto& tt = target.algebra.table();

    auto st = gradedalg::make_table({{"alpha1", 2, 0}, {"alpha2", 2, 0}, {"alpha3", 2, 0}, {"zeta", 7, 0}});
    const std::vector<std::string> rel_text{
        "alpha1^2 + alpha2^2 + alpha1*alpha2", "alpha1^2 + alpha3^2 + alpha1*alpha3",
        "alpha2^2 + alpha3^2 + alpha2*alpha3", "alpha1^3",
        "zeta*(alpha1 - alpha2)",              "zeta*(alpha1 - alpha3)",
        "zeta*(alpha2 - alpha3)",
    };
    std::vector<GPolynomial> rel;
    for (const auto& s : rel_text)
        rel.push_back(parse(st, s));
    PresentedAlgebra source(st, rel);

    // c = sqrt((a^2+ab+b^2)/3) = 1 for (a,b) = (1,1)
    const std::vector<GPolynomial> images{parse(tt, "T1 + T3"), parse(tt, "T2 + T3"), parse(tt, "-T1 - T2 + T3"),
                                          gen(tt, "eta")};
    bool ok = true;
    for (const auto& r : rel) {
        auto img = gradedalg::evaluate(r, tt, images);
        const bool member = gradedalg::ideal_member(target.algebra, img);
        ok = ok && member;
        rep.relations.push_back({gradedalg::to_string(r), gradedalg::to_string(img), member});
    }

    rep.onto = true;
    for (int q = 0; q <= degree_cap; ++q) {
        rep.source_dims.push_back(gradedalg::quotient_dimension(source, q));
        auto tb = target.algebra.basis(q);
        rep.target_dims.push_back(tb->quotient_dimension());
        linalg::Echelon span;
        auto sb = source.basis(q);
        for (int i = 0; i < sb->quotient_dimension(); ++i)
            span.insert(tb->project(
                gradedalg::evaluate(GPolynomial::monomial(st, sb->complement_monomial(i)), tt, images)));
        rep.onto = rep.onto && span.rank() == tb->quotient_dimension();
    }
    rep.pass = ok && rep.onto && rep.source_dims == rep.target_dims;
    return rep;
}

}  // namespace cpstrata::ballmodels
