#include "cpstrata/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "cpstrata/confgeom.hpp"
#include "cpstrata/error.hpp"
#include "cpstrata/kriz.hpp"
#include "cpstrata/serialize.hpp"

namespace cpstrata::verify {

using ballmodels::CircleWeights;

// ---------------------------------------------------------------------------
// configuration

void RunConfig::validate() const
{
    if (degree_cap != -1 && degree_cap < 2)
        throw DomainError("degree_cap must be at least 2");
    if (format != "json" && format != "csv" && format != "text")
        throw DomainError("format must be json, csv or text");
    for (const auto& [key, w] : weights) {
        auto colon = key.find(':');
        if (colon == std::string::npos)
            throw DomainError("weights key '" + key + "' must look like n:chamber");
        const int n = std::stoi(key.substr(0, colon));
        const auto c = ballmodels::normalize_chamber(n, key.substr(colon + 1));
        if (!w.empty())
            ballmodels::iemb_model(n, c, w, 0);  // throws on a bad count
    }
}

CircleWeights RunConfig::weights_for(int n, const std::string& chamber) const
{
    auto it = weights.find(std::to_string(n) + ":" + ballmodels::normalize_chamber(n, chamber));
    return it == weights.end() ? CircleWeights{} : it->second;
}

RunConfig config_from_json(const json& j)
{
    RunConfig c;
    try {
        c.degree_cap = j.value("degree_cap", -1);
        if (j.contains("boundary_convention"))
            c.boundary = chambers::parse_boundary(j.at("boundary_convention").get<std::string>());
        c.output = j.value("output", std::string());
        c.format = j.value("format", std::string("json"));
        if (j.contains("weights")) {
            for (const auto& [key, list] : j.at("weights").items()) {
                auto colon = key.find(':');
                if (colon == std::string::npos)
                    throw DomainError("weights key '" + key + "' must look like n:chamber");
                const int n = std::stoi(key.substr(0, colon));
                const auto norm = std::to_string(n) + ":" + ballmodels::normalize_chamber(n, key.substr(colon + 1));
                std::vector<std::pair<long, long>> pairs;
                if (list.is_string()) {
                    c.weights[norm] = ballmodels::parse_weights(list.get<std::string>());
                    continue;
                }
                for (const auto& p : list)
                    pairs.emplace_back(p.at(0).get<long>(), p.at(1).get<long>());
                c.weights[norm] = CircleWeights(std::move(pairs));
            }
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed run configuration: ") + e.what());
    }
    c.validate();
    return c;
}

json config_to_json(const RunConfig& c)
{
    json w = json::object();
    for (const auto& [key, v] : c.weights)
        w[key] = serialize::to_json(v);
    return {{"degree_cap", c.degree_cap},
            {"weights", w},
            {"boundary_convention", chambers::to_string(c.boundary)},
            {"output", c.output},
            {"format", c.format}};
}

// ---------------------------------------------------------------------------
// reports

bool SuiteReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

json SuiteReport::payload() const
{
    json list = json::array();
    for (const auto& c : checks) {
        json item{{"suite", c.suite}, {"name", c.name}, {"pass", c.pass}, {"expected", c.expected},
                  {"computed", c.computed}};
        if (!c.note.empty())
            item["note"] = c.note;
        list.push_back(item);
    }
    return {{"checks", list}, {"all_pass", all_pass()}};
}

json SuiteReport::to_json() const
{
    json out = payload();
    json t = json::object();
    for (const auto& c : checks)
        t[c.suite + "/" + c.name] = c.seconds;
    out["timings"] = t;
    return out;
}

std::string SuiteReport::to_text() const
{
    std::ostringstream out;
    for (const auto& c : checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.suite << ": " << c.name;
        if (!c.pass)
            out << "\n     expected " << c.expected.dump() << "\n     computed " << c.computed.dump();
        if (!c.note.empty())
            out << "\n     note: " << c.note;
        out << "\n";
    }
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.pass; });
    out << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size() << " checks passed\n";
    return out.str();
}

std::string SuiteReport::to_csv() const
{
    const auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char ch : s)
            q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    };
    std::ostringstream out;
    out << "suite,name,pass,expected,computed,seconds\n";
    for (const auto& c : checks)
        out << quote(c.suite) << "," << quote(c.name) << "," << (c.pass ? "true" : "false") << ","
            << quote(c.expected.dump()) << "," << quote(c.computed.dump()) << "," << c.seconds << "\n";
    return out.str();
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"ab-iso", "chambers", "conf", "eq71", "eq75", "kriz", "thm13"};
    return names;
}

std::vector<std::pair<std::vector<Rational>, std::string>> four_ball_witnesses()
{
    const auto q = [](const char* s) { return parse_rational(s); };
    return {
        {{q("9/20"), q("2/5"), q("7/20"), q("3/10")}, "C_0"},
        {{q("1/2"), q("1/3"), q("1/3"), q("1/4")}, "C_1"},
        {{q("1/2"), q("2/5"), q("1/4"), q("1/5")}, "C_2"},
        {{q("2/5"), q("7/20"), q("3/10"), q("1/5")}, "C_3"},
        {{q("2/5"), q("3/10"), q("1/4"), q("1/5")}, "C_4"},
        {{q("3/10"), q("1/4"), q("1/5"), q("1/10")}, "C_5"},
    };
}

namespace {

class Runner {
public:
    Runner(std::string suite, SuiteReport& rep) : suite_(std::move(suite)), rep_(rep) {}

    // fn fills expected/computed/pass/note; exceptions become failed checks
    void check(const std::string& name, const std::function<void(CheckRecord&)>& fn)
    {
        CheckRecord c;
        c.suite = suite_;
        c.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.pass = false;
            c.note = std::string("error: ") + e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep_.checks.push_back(std::move(c));
    }

    template <class T>
    void equal(const std::string& name, const T& expected, const std::function<T()>& compute,
               const std::string& note = {})
    {
        check(name, [&](CheckRecord& c) {
            T got = compute();
            c.expected = expected;
            c.computed = got;
            c.pass = got == expected;
            c.note = note;
        });
    }

private:
    std::string suite_;
    SuiteReport& rep_;
};

std::vector<int> ranks(const dga::DgaSpec& d)
{
    return dga::cohomology_ranks(d).rank_vector();
}

std::vector<int> padded(std::vector<int> v, int cap)
{
    v.resize(static_cast<std::size_t>(cap + 1), 0);
    return v;
}

// q = 0..14 for four small balls (configuration space of four points)
const std::vector<int> kConf4Ranks{1, 0, 4, 0, 4, 2, 0, 6, 0, 4, 2, 1, 2, 0, 0};

std::vector<int> stabilizer_dims_expected(int cap)
{
    std::vector<int> v{1, 0, 4, 0};
    for (int q = 4; q <= cap; ++q)
        v.push_back(q % 2 ? 2 : 5);
    v.resize(static_cast<std::size_t>(cap + 1));
    return v;
}

// small portable integer draws
struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    long range(long lo, long hi) { return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1)); }
    Rational small_rational()
    {
        Rational r(range(-6, 6), range(1, 4));
        r.canonicalize();
        return r;
    }
};

confgeom::ProjectivePoint random_point(Rng& rng)
{
    while (true) {
        auto a = rng.small_rational(), b = rng.small_rational(), c = rng.small_rational();
        if (sgn(a) != 0 || sgn(b) != 0 || sgn(c) != 0)
            return confgeom::ProjectivePoint(a, b, c);
    }
}

confgeom::Matrix3 random_invertible(Rng& rng)
{
    while (true) {
        confgeom::Matrix3 m;
        for (auto& row : m)
            for (auto& v : row)
                v = rng.small_rational();
        if (sgn(confgeom::det3(m)) != 0)
            return m;
    }
}

bool distinct(const std::vector<confgeom::ProjectivePoint>& p)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] == p[j])
                return false;
    return true;
}

// ---------------------------------------------------------------------------

void suite_chambers(const RunConfig& cfg, SuiteReport& rep)
{
    Runner r("chambers", rep);
    r.equal<std::vector<std::string>>("wall classes for 3 balls", {"L - E1 - E2 - E3"}, [] {
        std::vector<std::string> s;
        for (const auto& w : lattice::negative_wall_classes(3))
            s.push_back(lattice::to_string(w));
        return s;
    });
    r.equal<std::size_t>("wall class count for 4 balls", 5, [] { return lattice::negative_wall_classes(4).size(); });
    r.equal<std::size_t>("wall class count for 5 balls", 16, [] { return lattice::negative_wall_classes(5).size(); });
    r.equal<std::vector<std::size_t>>("exceptional class counts n=1..8", {1, 3, 6, 10, 16, 27, 56, 240}, [] {
        std::vector<std::size_t> v;
        for (int n = 1; n <= 8; ++n)
            v.push_back(lattice::enumerate_exceptional(n).size());
        return v;
    });
    const std::string conv = chambers::to_string(cfg.boundary);
    const std::map<int, std::size_t> expected{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 33}};
    for (const auto& [n, count] : expected) {
        r.equal<std::size_t>(
            "chamber count for " + std::to_string(n) + " balls (" + conv + ")", count,
            [n = n, &cfg] { return chambers::enumerate_chambers(n, cfg.boundary).size(); });
    }
    const auto other =
        cfg.boundary == chambers::Boundary::Strict ? chambers::Boundary::Inclusive : chambers::Boundary::Strict;
    r.check("chamber count for 5 balls (" + chambers::to_string(other) + ", reported)", [&](CheckRecord& c) {
        c.computed = chambers::enumerate_chambers(5, other).size();
        c.pass = true;
        c.note = "reported alongside the main convention";
    });
    r.check("three-ball classification", [&](CheckRecord& c) {
        const std::vector<std::pair<std::vector<Rational>, std::string>> cases{
            {{Rational(1, 2), Rational(2, 5), Rational(1, 5)}, "big"},
            {{Rational(1, 3), Rational(1, 4), Rational(1, 5)}, "small"}};
        json exp = json::array(), got = json::array();
        c.pass = true;
        for (const auto& [caps, label] : cases) {
            auto l = chambers::chamber_label(lattice::Capacities(caps), cfg.boundary);
            exp.push_back(label);
            got.push_back(l);
            c.pass = c.pass && l == label;
        }
        c.expected = exp;
        c.computed = got;
    });
    r.check("four-ball classification", [&](CheckRecord& c) {
        json exp = json::array(), got = json::array();
        c.pass = true;
        for (const auto& [caps, label] : four_ball_witnesses()) {
            auto l = chambers::chamber_label(lattice::Capacities(caps), cfg.boundary);
            exp.push_back(label);
            got.push_back(l);
            c.pass = c.pass && l == label;
        }
        c.expected = exp;
        c.computed = got;
    });
}

void suite_thm13(const RunConfig& cfg, SuiteReport& rep)
{
    Runner r("thm13", rep);
    for (int k = 0; k <= 4; ++k) {
        const std::string ch = "C_" + std::to_string(k);
        r.check("four balls " + ch + ": model cohomology matches the weighted presentation", [&](CheckRecord& c) {
            const auto w = cfg.weights_for(4, ch);
            auto model = ballmodels::iemb_model(4, ch, w, cfg.cap_or(14));
            auto pres = ballmodels::iemb_presentation(4, ch, w);
            auto v = dga::verify_presentation(model, pres.algebra, pres.gen_map);
            c.pass = v.pass;
            c.expected = serialize::to_json(v)["presentation_dims"];
            c.computed = serialize::to_json(v)["cohomology_ranks"];
            c.note = v.failure;
        });
    }
    for (int k = 1; k <= 4; ++k) {
        const std::string ch = "C_" + std::to_string(k);
        r.check("four balls " + ch + ": table form with alpha_i = T_i (weights with m_i = 1)", [&](CheckRecord& c) {
            auto model = ballmodels::iemb_model(4, ch, ballmodels::unit_m_weights(k), cfg.cap_or(14));
            auto pres = ballmodels::alpha_presentation(k);
            auto v = dga::verify_presentation(model, pres.algebra, pres.gen_map);
            c.pass = v.pass;
            c.expected = serialize::to_json(v)["presentation_dims"];
            c.computed = serialize::to_json(v)["cohomology_ranks"];
            c.note = v.failure;
        });
    }
    const int cap = cfg.cap_or(14);
    r.equal<std::vector<int>>("four balls C_5: configuration space ranks", padded(kConf4Ranks, cap),
                              [&] { return ranks(ballmodels::iemb_model(4, "C_5", {}, cap)); });
    r.equal<std::vector<int>>("rank of H^2 across C_0..C_5", {0, 1, 2, 3, 4, 4}, [&] {
        std::vector<int> v;
        for (int k = 0; k <= 5; ++k) {
            const std::string ch = "C_" + std::to_string(k);
            v.push_back(dga::cohomology_ranks(ballmodels::iemb_model(4, ch, cfg.weights_for(4, ch), 4)).rank(2));
        }
        return v;
    });
    r.equal<std::vector<long>>("Euler characteristic of C_1..C_4", {0, 0, 0, 0}, [&] {
        std::vector<long> v;
        for (int k = 1; k <= 4; ++k) {
            const std::string ch = "C_" + std::to_string(k);
            v.push_back(
                dga::cohomology_ranks(ballmodels::iemb_model(4, ch, cfg.weights_for(4, ch), cfg.cap_or(14)))
                    .euler_characteristic());
        }
        return v;
    });
    for (int k = 1; k <= 4; ++k) {
        const std::string ch = "C_" + std::to_string(k);
        r.check("four balls " + ch + ": ranks do not depend on the circle weights", [&](CheckRecord& c) {
            std::vector<CircleWeights> sets{
                CircleWeights(std::vector<std::pair<long, long>>(static_cast<std::size_t>(k), {1, 1})),
                CircleWeights(std::vector<std::pair<long, long>>(static_cast<std::size_t>(k), {1, 0})),
                ballmodels::unit_m_weights(k)};
            std::vector<std::pair<long, long>> mixed{{5, 2}, {2, -1}, {3, 5}, {1, 2}};
            mixed.resize(static_cast<std::size_t>(k));
            sets.emplace_back(mixed);
            auto wi = ballmodels::weight_independence_check(4, ch, sets, cfg.cap_or(14));
            c.pass = wi.same;
            c.expected = wi.rank_tables.front();
            c.computed = wi.rank_tables;
        });
    }
}

void suite_eq71(const RunConfig& cfg, SuiteReport& rep)
{
    Runner r("eq71", rep);
    const int cap = cfg.cap_or(14);
    const auto dims = [cap](ballmodels::Transcription t) {
        auto a = ballmodels::small_balls_stabilizer_algebra(t);
        std::vector<int> v;
        for (int q = 0; q <= cap; ++q)
            v.push_back(gradedalg::quotient_dimension(a, q));
        return v;
    };
    r.equal<std::vector<int>>(
        "stabilizer algebra dimensions (literal ideal)", stabilizer_dims_expected(cap),
        [&] { return dims(ballmodels::Transcription::Literal); },
        "the listed quadrics satisfy r5 = r2(4) - r2(3), so only four are independent");
    r.equal<std::vector<int>>(
        "stabilizer algebra dimensions (symmetric completion, diagnostic)", stabilizer_dims_expected(cap),
        [&] { return dims(ballmodels::Transcription::SymmetricCompletion); },
        "ideal of all (a_j - a_k)(a_j + a_k + a_l); not the listed ideal");
}

void suite_eq75(const RunConfig& cfg, SuiteReport& rep)
{
    Runner r("eq75", rep);
    const int cap = cfg.cap_or(14);
    const auto model = kriz::kriz_model({2, 4, cap});
    r.check("d^2 = 0 and ideal stability for E(CP^2,4)", [&](CheckRecord& c) {
        auto a = dga::check_d_squared(model);
        auto b = dga::check_ideal_stability(model);
        c.expected = {true, true};
        c.computed = {a.ok, b.ok};
        c.pass = a.ok && b.ok;
        c.note = a.detail + b.detail;
    });
    r.equal<std::vector<int>>("E(CP^2,4) ranks", padded(kConf4Ranks, cap), [&] { return ranks(model); });
    r.equal<bool>("E(CP^2,4) ranks vanish in the top two capped degrees", true,
                  [&] { return dga::cohomology_ranks(model).top_degrees_vanish; });
}

void suite_ab_iso(const RunConfig& cfg, SuiteReport& rep)
{
    Runner r("ab-iso", rep);
    const auto ab = ballmodels::ab_isomorphism_check(cfg.cap_or(10));
    for (const auto& rel : ab.relations)
        r.check("image of " + rel.source + " lies in the ideal", [&](CheckRecord& c) {
            c.expected = true;
            c.computed = rel.ideal_member;
            c.pass = rel.ideal_member;
            c.note = "image " + rel.image;
        });
    r.check("graded dimensions agree", [&](CheckRecord& c) {
        c.expected = ab.source_dims;
        c.computed = ab.target_dims;
        c.pass = ab.source_dims == ab.target_dims;
    });
    r.equal<std::vector<int>>("graded dimensions of H(Conf_3(CP^2))",
                              padded({1, 0, 3, 0, 3, 0, 1, 1, 0, 1}, cfg.cap_or(10)),
                              [&] { return ab.source_dims; });
    r.equal<bool>("induced map is onto", true, [&] { return ab.onto; });
}

void suite_kriz(const RunConfig& cfg, SuiteReport& rep)
{
    Runner r("kriz", rep);
    const auto kr = [&](int m, int k) { return kriz::kriz_model({m, k, cfg.cap_or(2 * m * k + 2)}); };
    r.equal<std::vector<int>>("E(CP^2,1) ranks", padded({1, 0, 1, 0, 1}, cfg.cap_or(6)),
                              [&] { return ranks(kr(2, 1)); });
    r.equal<std::vector<int>>("E(CP^2,2) ranks", padded({1, 0, 2, 0, 2, 0, 1}, cfg.cap_or(10)),
                              [&] { return ranks(kr(2, 2)); });
    r.equal<std::vector<int>>("E(CP^1,3) ranks", padded({1, 0, 0, 1}, cfg.cap_or(8)),
                              [&] { return ranks(kr(1, 3)); });
    r.equal<std::vector<int>>("E(CP^2,3) ranks", padded({1, 0, 3, 0, 3, 0, 1, 1, 0, 1}, cfg.cap_or(14)),
                              [&] { return ranks(kr(2, 3)); });

    r.check("flag model ranks and presentation", [&](CheckRecord& c) {
        auto model = ballmodels::iemb_model(3, "big", {}, cfg.cap_or(10));
        auto pres = ballmodels::iemb_presentation(3, "big");
        auto v = dga::verify_presentation(model, pres.algebra, pres.gen_map);
        const auto got = ranks(model);
        c.expected = padded({1, 0, 2, 0, 2, 0, 1}, cfg.cap_or(10));
        c.computed = got;
        c.pass = v.pass && got == c.expected.get<std::vector<int>>();
        c.note = v.failure;
    });
    r.check("one and two balls", [&](CheckRecord& c) {
        c.expected = {padded({1, 0, 1, 0, 1}, cfg.cap_or(10)), padded({1, 0, 2, 0, 2, 0, 1}, cfg.cap_or(10))};
        c.computed = {ranks(ballmodels::iemb_model(1, "C_unique", {}, cfg.cap_or(10))),
                      ranks(ballmodels::iemb_model(2, "C_unique", {}, cfg.cap_or(10)))};
        c.pass = c.expected == c.computed;
    });
    const std::vector<std::pair<long, long>> third{{1, 0}, {1, 1}, {2, -1}, {3, 5}};
    for (const auto& w : third) {
        const CircleWeights cw({w});
        r.check("three small balls, third weight " + ballmodels::to_string(cw) + ": ranks equal E(CP^2,3)",
                [&](CheckRecord& c) {
                    const int cap = cfg.cap_or(12);
                    auto model = ballmodels::iemb_model(3, "small", cw, cap);
                    c.expected = ranks(kriz::kriz_model({2, 3, cap}));
                    c.computed = ranks(model);
                    auto pres = ballmodels::iemb_presentation(3, "small", cw);
                    auto v = dga::verify_presentation(model, pres.algebra, pres.gen_map);
                    c.pass = c.expected == c.computed && v.pass;
                    c.note = v.failure;
                });
    }
    for (int k : {3, 4}) {
        r.check("relabeling points of E(CP^2," + std::to_string(k) + ")", [&](CheckRecord& c) {
            auto base = kriz::kriz_model({2, k, cfg.cap_or(4 * k + 2)});
            const auto expected = ranks(base);
            Rng rng(static_cast<unsigned>(1000 + k));
            json got = json::array();
            c.pass = true;
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<int> sigma(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i)
                    sigma[static_cast<std::size_t>(i)] = i + 1;
                for (int i = k - 1; i > 0; --i)
                    std::swap(sigma[static_cast<std::size_t>(i)],
                              sigma[static_cast<std::size_t>(rng.range(0, i))]);
                // rename x_a -> x_sigma(a), G_ab -> G_sigma(a)sigma(b), then list in the new canonical order
                const auto& t = *base.table();
                std::vector<std::string> names;
                for (int a = 1; a <= k; ++a)
                    names.push_back(kriz::x_name(sigma[static_cast<std::size_t>(a - 1)]));
                for (int a = 1; a <= k; ++a)
                    for (int b = a + 1; b <= k; ++b)
                        names.push_back(kriz::g_name(sigma[static_cast<std::size_t>(a - 1)],
                                                     sigma[static_cast<std::size_t>(b - 1)]));
                auto canonical = kriz::kriz_table(2, k);
                std::vector<int> order;
                std::vector<std::string> new_names;
                for (const auto& g : canonical->generators()) {
                    const auto pos = std::find(names.begin(), names.end(), g.name) - names.begin();
                    order.push_back(static_cast<int>(pos));
                    new_names.push_back(g.name);
                }
                (void)t;
                auto relabeled = dga::reorder_generators(base, order, new_names);
                auto rk = ranks(relabeled);
                got.push_back(rk);
                c.pass = c.pass && rk == expected;
            }
            c.expected = expected;
            c.computed = got;
        });
    }
    r.check("d^2 = 0 and ideal stability for m <= 3, k <= 4", [&](CheckRecord& c) {
        json bad = json::array();
        for (int m = 1; m <= 3; ++m)
            for (int k = 1; k <= 4; ++k) {
                auto d = kriz::kriz_model({m, k, -1});
                auto a = dga::check_d_squared(d);
                auto b = dga::check_ideal_stability(d);
                if (!a || !b)
                    bad.push_back("E(CP^" + std::to_string(m) + "," + std::to_string(k) + "): " + a.detail +
                                  b.detail);
            }
        c.expected = json::array();
        c.computed = bad;
        c.pass = bad.empty();
    });
}

void suite_conf(const RunConfig&, SuiteReport& rep)
{
    using namespace confgeom;
    Runner r("conf", rep);
    const auto pts = [](const std::string& s) { return parse_points(s); };
    r.equal<std::vector<bool>>("collinearity examples", {true, false, true}, [&] {
        auto a = pts("1:0:0,0:1:0,1:1:0"), b = pts("1:0:0,0:1:0,0:0:1"), c = pts("1:1:1,1:2:3,1:3:5");
        return std::vector<bool>{collinear(a[0], a[1], a[2]), collinear(b[0], b[1], b[2]),
                                 collinear(c[0], c[1], c[2])};
    });
    r.equal<std::vector<std::string>>("strata examples", {"F_0", "F_123", "F_1234", "F_0", "F_123"}, [&] {
        return std::vector<std::string>{stratum(pts("1:0:0,0:1:0,0:0:1,1:1:1")).label,
                                        stratum(pts("1:0:0,0:1:0,1:1:0,0:0:1")).label,
                                        stratum(pts("0:1:0,0:0:1,0:1:1,0:1:2")).label,
                                        stratum(pts("1:0:0,0:1:0,0:0:1")).label,
                                        stratum(pts("1:0:0,0:1:0,1:1:0")).label};
    });
    r.equal<std::vector<std::string>>("cross ratio examples", {"4/3", "4/3", "4/3"}, [&] {
        return std::vector<std::string>{to_string(cross_ratio(pts("1:0:0,1:1:0,1:2:0,1:3:0"))),
                                        to_string(cross_ratio(pts("1:1:0,1:2:0,1:3:0,1:4:0"))),
                                        to_string(cross_ratio(pts("0:1:0,1:1:0,2:1:0,3:1:0")))};
    });
    r.check("strata are PGL(3)-invariant (100 random configurations)", [&](CheckRecord& c) {
        Rng rng(7);
        int ok = 0, total = 0;
        std::map<std::string, int> seen;
        while (total < 100) {
            const int n = rng.range(3, 4);
            std::vector<ProjectivePoint> p;
            // bias toward special position: put point 3 (and maybe 4) on the line through 1, 2
            for (int i = 0; i < n; ++i)
                p.push_back(random_point(rng));
            const auto on_line = [&](std::size_t slot) {
                const auto s = rng.small_rational(), t = rng.small_rational();
                std::array<Rational, 3> z;
                for (std::size_t k = 0; k < 3; ++k)
                    z[k] = s * p[0][static_cast<int>(k)] + t * p[1][static_cast<int>(k)];
                if (sgn(z[0]) != 0 || sgn(z[1]) != 0 || sgn(z[2]) != 0)
                    p[slot] = ProjectivePoint(z);
            };
            if (rng.range(0, 2) == 0) {
                on_line(2);
                if (n == 4 && rng.range(0, 1) == 0)
                    on_line(3);
            }
            if (!distinct(p))
                continue;
            ++total;
            auto m = random_invertible(rng);
            std::vector<ProjectivePoint> q;
            for (const auto& x : p)
                q.push_back(apply_pgl(m, x));
            const auto a = stratum(p), b = stratum(q);
            ++seen[a.label];
            if (a.label == b.label && a.collinear_triples == b.collinear_triples)
                ++ok;
        }
        c.expected = total;
        c.computed = ok;
        c.pass = ok == total;
        json s = json::object();
        for (const auto& [k, v] : seen)
            s[k] = v;
        c.note = "strata seen: " + s.dump();
    });
    r.check("cross ratio is PGL(3)-invariant and avoids 0, 1, inf (100 random quadruples)", [&](CheckRecord& c) {
        Rng rng(11);
        int ok = 0, total = 0;
        while (total < 100) {
            auto a = random_point(rng), b = random_point(rng);
            if (a == b)
                continue;
            std::vector<ProjectivePoint> p;
            bool degenerate = false;
            for (int i = 0; i < 4 && !degenerate; ++i) {
                const auto s = rng.small_rational(), t = rng.small_rational();
                std::array<Rational, 3> z;
                for (std::size_t k = 0; k < 3; ++k)
                    z[k] = s * a[static_cast<int>(k)] + t * b[static_cast<int>(k)];
                if (sgn(z[0]) == 0 && sgn(z[1]) == 0 && sgn(z[2]) == 0)
                    degenerate = true;
                else
                    p.emplace_back(z);
            }
            if (degenerate || !distinct(p))
                continue;
            ++total;
            auto m = random_invertible(rng);
            std::vector<ProjectivePoint> q;
            for (const auto& x : p)
                q.push_back(apply_pgl(m, x));
            const auto x = cross_ratio(p), y = cross_ratio(q);
            if (x == y && x.value && *x.value != 0 && *x.value != 1)
                ++ok;
        }
        c.expected = total;
        c.computed = ok;
        c.pass = ok == total;
    });
}

}  // namespace

SuiteReport run_verify_suite(const std::string& suite, const RunConfig& cfg)
{
    static const std::map<std::string, std::function<void(const RunConfig&, SuiteReport&)>> table{
        {"ab-iso", suite_ab_iso}, {"chambers", suite_chambers}, {"conf", suite_conf}, {"eq71", suite_eq71},
        {"eq75", suite_eq75},     {"kriz", suite_kriz},         {"thm13", suite_thm13}};
    cfg.validate();
    SuiteReport rep;
    if (suite == "all") {
        for (const auto& name : suite_names())
            table.at(name)(cfg, rep);
        return rep;
    }
    auto it = table.find(suite);
    if (it == table.end()) {
        std::string known;
        for (const auto& n : suite_names())
            known += " " + n;
        throw DomainError("unknown suite '" + suite + "' (known:" + known + " all)");
    }
    it->second(cfg, rep);
    return rep;
}

}  // namespace cpstrata::verify
