#include "cpstrata/serialize.hpp"

#include <fstream>
#include <sstream>

#include "cpstrata/error.hpp"

namespace cpstrata::serialize {

using gradedalg::GPolynomial;

json rational_json(const Rational& q)
{
    return cpstrata::to_string(q);
}

json to_json(const lattice::H2Element& e)
{
    return {{"class", lattice::to_string(e)},
            {"a", e.degree()},
            {"r", std::vector<int>(e.multiplicities().begin(), e.multiplicities().end())}};
}

json to_json(const chambers::ChamberSignature& s)
{
    json bits = json::array();
    for (const auto& [cls, bit] : s.wall_bits)
        bits.push_back({{"class", lattice::to_string(cls)}, {"positive", bit}});
    return {{"bits", s.bit_string()}, {"walls", bits}, {"positive_walls", s.true_count()}};
}

json to_json(const chambers::Chamber& c)
{
    json w = json::array();
    for (const auto& v : c.witness)
        w.push_back(rational_json(v));
    return {{"signature", to_json(c.signature)}, {"witness", w}};
}

json to_json(const ballmodels::CircleWeights& w)
{
    json out = json::array();
    for (const auto& [a, b] : w.pairs())
        out.push_back({a, b});
    return out;
}

namespace {

json generators_json(const gradedalg::GeneratorTable& t)
{
    json g = json::array();
    for (const auto& gen : t.generators())
        g.push_back({{"name", gen.name}, {"degree", gen.degree}, {"nilpotence", gen.nilpotence}});
    return g;
}

gradedalg::TablePtr table_from_json(const json& j)
{
    if (!j.contains("generators") || !j.at("generators").is_array())
        throw ParseError("presentation needs a 'generators' array");
    std::vector<gradedalg::Generator> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>(), g.value("nilpotence", 0)});
    auto table = std::make_shared<gradedalg::GeneratorTable>(std::move(gens));
    if (j.contains("aliases"))
        for (const auto& [alias, target] : j.at("aliases").items())
            table->add_alias(alias, target.get<std::string>());
    return table;
}

}  // namespace

json algebra_to_json(const gradedalg::PresentedAlgebra& a)
{
    json rel = json::array();
    for (const auto& r : a.relations())
        rel.push_back(gradedalg::to_string(r));
    json out{{"generators", generators_json(*a.table())}, {"relations", rel}};
    if (!a.table()->aliases().empty()) {
        json al = json::object();
        for (const auto& [alias, idx] : a.table()->aliases())
            al[alias] = (*a.table())[idx].name;
        out["aliases"] = al;
    }
    return out;
}

gradedalg::PresentedAlgebra algebra_from_json(const json& j)
{
    try {
        auto table = table_from_json(j);
        std::vector<GPolynomial> rel;
        const json rel_list = j.value("relations", json::array());
        for (const auto& r : rel_list)
            rel.push_back(gradedalg::parse_polynomial(table, r.get<std::string>()));
        return gradedalg::PresentedAlgebra(table, std::move(rel));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed presentation: ") + e.what());
    }
}

json dga_to_json(const dga::DgaSpec& d)
{
    json out = algebra_to_json(d.algebra());
    json diff = json::object();
    for (int i = 0; i < d.table()->size(); ++i)
        if (!d.d_generator(i).is_zero())
            diff[(*d.table())[i].name] = gradedalg::to_string(d.d_generator(i));
    out["differential"] = diff;
    out["degree_cap"] = d.degree_cap();
    return out;
}

dga::DgaSpec dga_from_json(const json& j, int cap_override)
{
    try {
        auto algebra = algebra_from_json(j);
        std::map<std::string, GPolynomial> diff;
        const json d_obj = j.value("differential", json::object());
        for (const auto& [name, text] : d_obj.items())
            diff.emplace(name, gradedalg::parse_polynomial(algebra.table(), text.get<std::string>()));
        int cap = cap_override >= 0 ? cap_override : j.value("degree_cap", -1);
        if (cap < 0)
            throw ParseError("no degree cap in the spec file and none given");
        return dga::DgaSpec(std::move(algebra), diff, cap);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed DGA spec: ") + e.what());
    }
}

json to_json(const dga::CohomologyReport& r)
{
    json ranks = json::object(), reps = json::object();
    for (const auto& [q, v] : r.ranks)
        ranks[std::to_string(q)] = v;
    for (const auto& [q, v] : r.representatives) {
        json list = json::array();
        for (const auto& p : v)
            list.push_back(gradedalg::to_string(p));
        reps[std::to_string(q)] = list;
    }
    return {{"degree_cap", r.degree_cap},
            {"ranks", ranks},
            {"rank_vector", r.rank_vector()},
            {"representatives", reps},
            {"d_squared_ok", r.d_squared_ok},
            {"ideal_stable_ok", r.ideal_stable_ok},
            {"top_degrees_vanish", r.top_degrees_vanish},
            {"euler_characteristic", r.euler_characteristic()}};
}

json to_json(const dga::PresentationReport& r)
{
    json exp = json::array(), comp = json::array();
    for (const auto& [q, v] : r.expected)
        exp.push_back(v);
    for (const auto& [q, v] : r.computed)
        comp.push_back(v);
    json out{{"pass", r.pass}, {"presentation_dims", exp}, {"cohomology_ranks", comp}};
    if (!r.pass) {
        out["failure"] = r.failure;
        out["failed_degree"] = r.failed_degree;
    }
    return out;
}

json to_json(const ballmodels::AbIsomorphismReport& r)
{
    json rel = json::array();
    for (const auto& x : r.relations)
        rel.push_back({{"relation", x.source}, {"image", x.image}, {"ideal_member", x.ideal_member}});
    return {{"pass", r.pass},
            {"relations", rel},
            {"source_dims", r.source_dims},
            {"target_dims", r.target_dims},
            {"onto", r.onto}};
}

json to_json(const confgeom::Stratum& s)
{
    return {{"stratum", s.label}, {"collinear_triples", s.collinear_triples}};
}

std::string differential_csv(const dga::DgaSpec& d, int q)
{
    auto src = d.algebra().basis(q);
    auto dst = d.algebra().basis(q + 1);
    std::ostringstream out;
    out << "# d: degree " << q << " (" << src->quotient_dimension() << " basis monomials) -> degree " << q + 1 << " ("
        << dst->quotient_dimension() << ")\n";
    for (int i = 0; i < src->quotient_dimension(); ++i)
        out << "# col " << i << " = " << gradedalg::to_string(*d.table(), src->complement_monomial(i)) << "\n";
    for (int i = 0; i < dst->quotient_dimension(); ++i)
        out << "# row " << i << " = " << gradedalg::to_string(*d.table(), dst->complement_monomial(i)) << "\n";
    out << "row,col,value\n";
    const auto map = d.degree_map(q);
    for (std::size_t col = 0; col < map->images.size(); ++col)
        for (const auto& [row, v] : map->images[col])
            out << row << "," << col << "," << cpstrata::to_string(v) << "\n";
    return out.str();
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << text;
    if (!out)
        throw Error("failed writing '" + path + "'");
}

}  // namespace cpstrata::serialize
