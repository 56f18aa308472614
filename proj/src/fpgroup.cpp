#include "knothom/fpgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace knothom {

Word word_concat(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

Word word_inverse(const Word& a) {
    Word out;
    out.letters.reserve(a.letters.size());
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) out.letters.push_back(-*it);
    return out;
}

Word word_pow(const Word& a, int e) {
    Word base = e >= 0 ? a : word_inverse(a);
    Word out;
    for (int j = 0; j < std::abs(e); ++j) out = word_concat(out, base);
    return out;
}

Word free_reduce(Word a) {
    std::vector<int> stack;
    for (int letter : a.letters) {
        if (!stack.empty() && stack.back() == -letter)
            stack.pop_back();
        else
            stack.push_back(letter);
    }
    a.letters = std::move(stack);
    return a;
}

int Presentation::generator_index(const std::string& g) const {
    auto it = std::find(generators.begin(), generators.end(), g);
    if (it == generators.end())
        throw std::invalid_argument("Presentation: unknown generator " + g);
    return static_cast<int>(it - generators.begin());
}

Word Presentation::letter(const std::string& g, int sign) const {
    return {{sign >= 0 ? generator_index(g) + 1 : -(generator_index(g) + 1)}};
}

Word Presentation::word_from_names(std::span<const std::string> names) const {
    Word out;
    for (const auto& n : names) {
        bool neg = !n.empty() && n[0] == '-';
        out.letters.push_back((neg ? -1 : 1) * (generator_index(neg ? n.substr(1) : n) + 1));
    }
    return out;
}

namespace {

nlohmann::json word_to_json(const Word& w, const std::vector<std::string>& gens) {
    nlohmann::json out = nlohmann::json::array();
    for (int letter : w.letters) {
        int g = (letter > 0 ? letter : -letter) - 1;
        out.push_back(letter > 0 ? gens[g] : "-" + gens[g]);
    }
    return out;
}

Word word_from_json(const nlohmann::json& j, const Presentation& p) {
    std::vector<std::string> names = j.get<std::vector<std::string>>();
    return p.word_from_names(names);
}

}  // namespace

nlohmann::json Presentation::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["generators"] = generators;
    j["relators"] = nlohmann::json::array();
    for (const auto& r : relators) j["relators"].push_back(word_to_json(r, generators));
    j["meridian"] = word_to_json(meridian, generators);
    if (longitude) j["longitude"] = word_to_json(*longitude, generators);
    for (const auto& [n, w] : factor_longitudes)
        j["factor_longitudes"][n] = word_to_json(w, generators);
    for (const auto& [n, w] : defined_words) j["defined_words"][n] = word_to_json(w, generators);
    return j;
}

Presentation Presentation::from_json(const nlohmann::json& j) {
    Presentation p;
    p.name = j.value("name", "");
    p.generators = j.at("generators").get<std::vector<std::string>>();
    for (const auto& r : j.at("relators")) p.relators.push_back(word_from_json(r, p));
    if (j.contains("meridian")) p.meridian = word_from_json(j.at("meridian"), p);
    if (j.contains("longitude")) p.longitude = word_from_json(j.at("longitude"), p);
    if (j.contains("factor_longitudes"))
        for (auto it = j.at("factor_longitudes").begin(); it != j.at("factor_longitudes").end(); ++it)
            p.factor_longitudes.emplace_back(it.key(), word_from_json(it.value(), p));
    if (j.contains("defined_words"))
        for (auto it = j.at("defined_words").begin(); it != j.at("defined_words").end(); ++it)
            p.defined_words.emplace_back(it.key(), word_from_json(it.value(), p));
    return p;
}

Presentation trefoil_presentation(TrefoilVariant variant, Chirality chirality) {
    Presentation p;
    bool right = chirality == Chirality::Right;
    switch (variant) {
        case TrefoilVariant::Abc: {
            p.name = right ? "trefoil_abc_right" : "trefoil_abc_left";
            p.generators = {"a", "b", "c"};
            auto W = [&](std::initializer_list<const char*> names) {
                std::vector<std::string> v(names.begin(), names.end());
                return p.word_from_names(v);
            };
            p.relators = {W({"a", "b", "-c", "-b"}), W({"b", "c", "-a", "-c"})};
            p.meridian = W({"a"});
            // zero-framed longitudes: (bac)a^-3 for the right trefoil,
            // (c^-1 a^-1 b^-1)a^3 for the left
            p.longitude = right ? W({"b", "a", "c", "-a", "-a", "-a"})
                                : W({"-c", "-a", "-b", "a", "a", "a"});
            Word x = W({"a", "b"});
            p.factor_longitudes.emplace_back(right ? "x^3" : "x^-3", word_pow(x, right ? 3 : -3));
            p.defined_words.emplace_back("x", x);
            p.defined_words.emplace_back("y", W({"a", "b", "c"}));
            break;
        }
        case TrefoilVariant::Ac: {
            p.name = right ? "trefoil_ac_right" : "trefoil_ac_left";
            p.generators = {"a", "c"};
            auto W = [&](std::initializer_list<const char*> names) {
                std::vector<std::string> v(names.begin(), names.end());
                return p.word_from_names(v);
            };
            p.relators = {W({"a", "c", "a", "-c", "-a", "-c"})};
            p.meridian = W({"a"});
            // b rewrites to a^-1 c a via ab = ca
            Word b = W({"-a", "c", "a"});
            Word a = W({"a"}), c = W({"c"});
            Word bac = word_concat(word_concat(b, a), c);
            p.longitude = right ? word_concat(bac, word_pow(a, -3))
                                : word_concat(word_inverse(bac), word_pow(a, 3));
            Word x = W({"c", "a"});  // x = ab = ca
            p.factor_longitudes.emplace_back(right ? "x^3" : "x^-3", word_pow(x, right ? 3 : -3));
            p.defined_words.emplace_back("x", x);
            p.defined_words.emplace_back("b", b);
            break;
        }
        case TrefoilVariant::Xy: {
            p.name = "trefoil_xy";
            p.generators = {"x", "y"};
            auto W = [&](std::initializer_list<const char*> names) {
                std::vector<std::string> v(names.begin(), names.end());
                return p.word_from_names(v);
            };
            p.relators = {W({"x", "x", "x", "-y", "-y"})};
            Word a = W({"y", "-x"});  // a = yx^-1
            p.meridian = a;
            Word x3 = W({"x", "x", "x"});
            p.longitude = right ? word_concat(x3, word_pow(a, -6))
                                : word_concat(word_inverse(x3), word_pow(a, 6));
            p.factor_longitudes.emplace_back(right ? "x^3" : "x^-3",
                                             right ? x3 : word_inverse(x3));
            p.defined_words.emplace_back("a", a);
            break;
        }
    }
    return p;
}

Presentation gn_presentation(Knot knot, int n) {
    if (n < 1) throw std::invalid_argument("gn_presentation: n must be >= 1");
    Presentation p;
    p.name = (knot == Knot::SK ? "G_" : "G_") + std::to_string(n) +
             (knot == Knot::SK ? "(SK)" : "(GK)");
    p.generators = {"a", "c", "f", "nu"};
    auto W = [&](std::initializer_list<const char*> names) {
        std::vector<std::string> v(names.begin(), names.end());
        return p.word_from_names(v);
    };
    Word x = W({"c", "a"});
    Word w = W({"f", "a"});
    Word x3 = word_pow(x, 3), w3 = word_pow(w, 3);
    Word nu = W({"nu"}), nu_inv = W({"-nu"});
    p.relators.push_back(W({"a", "c", "a", "-c", "-a", "-c"}));
    p.relators.push_back(W({"a", "f", "a", "-f", "-a", "-f"}));
    p.relators.push_back(word_concat(word_pow(nu, n), W({"-a"})));
    // SK: w^-3 nu w^3 = x^-3 nu x^3; GK: w^3 nu w^-3 = x^-3 nu x^3
    Word lhs = knot == Knot::SK
                   ? word_concat(word_concat(word_inverse(w3), nu), w3)
                   : word_concat(word_concat(w3, nu), word_inverse(w3));
    Word rhs = word_concat(word_concat(word_inverse(x3), nu), x3);
    p.relators.push_back(word_concat(lhs, word_inverse(rhs)));
    p.meridian = W({"a"});
    p.longitude = knot == Knot::SK ? word_concat(x3, word_inverse(w3)) : word_concat(x3, w3);
    p.factor_longitudes.emplace_back("x^3", x3);
    p.factor_longitudes.emplace_back("w^3", w3);
    p.defined_words.emplace_back("x", x);
    p.defined_words.emplace_back("w", w);
    return p;
}

Presentation gn_from_peripheral(const Presentation& base, int n) {
    if (n < 1) throw std::invalid_argument("gn_from_peripheral: n must be >= 1");
    if (!base.longitude)
        throw std::invalid_argument("gn_from_peripheral: base presentation carries no longitude");
    Presentation p = base;
    p.name = base.name + "_G" + std::to_string(n);
    p.generators.push_back("nu");
    Word nu{{static_cast<int>(p.generators.size())}};
    p.relators.push_back(word_concat(word_pow(nu, n), word_inverse(base.meridian)));
    Word lam = *base.longitude;
    p.relators.push_back(word_concat(word_concat(lam, nu),
                                     word_concat(word_inverse(lam), word_inverse(nu))));
    return p;
}

nlohmann::json KnotDiagram::to_json() const {
    nlohmann::json j;
    j["arcs"] = arcs;
    j["crossings"] = nlohmann::json::array();
    for (const auto& c : crossings)
        j["crossings"].push_back({{"over", c.over},
                                  {"in", c.in},
                                  {"out", c.out},
                                  {"hand", std::string(1, c.hand)}});
    return j;
}

KnotDiagram KnotDiagram::from_json(const nlohmann::json& j) {
    KnotDiagram d;
    d.arcs = j.at("arcs").get<int>();
    for (const auto& c : j.at("crossings")) {
        std::string hand = c.at("hand").get<std::string>();
        if (hand != "L" && hand != "R")
            throw std::invalid_argument("KnotDiagram: hand must be L or R");
        d.crossings.push_back({c.at("over").get<int>(), c.at("in").get<int>(),
                               c.at("out").get<int>(), hand[0]});
    }
    return d;
}

Presentation wirtinger_gn(const KnotDiagram& diagram, int n) {
    if (n < 1) throw std::invalid_argument("wirtinger_gn: n must be >= 1");
    if (diagram.arcs < 1 || diagram.crossings.empty())
        throw std::invalid_argument("wirtinger_gn: degenerate diagram");
    std::vector<int> out_count(diagram.arcs, 0);
    for (const auto& c : diagram.crossings) {
        for (int idx : {c.over, c.in, c.out})
            if (idx < 0 || idx >= diagram.arcs)
                throw std::invalid_argument("wirtinger_gn: arc index out of range");
        if (c.hand != 'L' && c.hand != 'R')
            throw std::invalid_argument("wirtinger_gn: hand must be L or R");
        out_count[c.out]++;
    }
    for (int a = 0; a < diagram.arcs; ++a)
        if (out_count[a] != 1)
            throw std::invalid_argument(
                "wirtinger_gn: each arc must be the out-arc of exactly one crossing");

    Presentation p;
    p.name = "wirtinger_G" + std::to_string(n);
    for (int a = 0; a < diagram.arcs; ++a) p.generators.push_back("x" + std::to_string(a));
    for (const auto& c : diagram.crossings) {
        Word over{{c.over + 1}}, in{{c.in + 1}}, out{{c.out + 1}};
        int e = c.hand == 'L' ? n : -n;
        Word lhs = word_concat(word_concat(word_pow(over, e), in), word_pow(over, -e));
        p.relators.push_back(word_concat(lhs, word_inverse(out)));
    }
    p.meridian = Word{{1}};
    return p;
}

KnotDiagram trefoil_diagram(Chirality chirality) {
    char hand = chirality == Chirality::Right ? 'R' : 'L';
    KnotDiagram d;
    d.arcs = 3;
    d.crossings = {{1, 0, 2, hand}, {2, 1, 0, hand}, {0, 2, 1, hand}};
    return d;
}

}  // namespace knothom
