#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace knothom {

/// Word in the generators of a presentation: signed 1-based letters,
/// +(g+1) for generator g, -(g+1) for its inverse.
struct Word {
    std::vector<int> letters;
    bool operator==(const Word&) const = default;
};

Word word_concat(const Word& a, const Word& b);
Word word_inverse(const Word& a);
Word word_pow(const Word& a, int e);
Word free_reduce(Word a);

/// Finitely presented group with distinguished peripheral words.
struct Presentation {
    std::string name;
    std::vector<std::string> generators;
    std::vector<Word> relators;
    Word meridian;
    std::optional<Word> longitude;              // composite longitude, when one is carried
    std::vector<std::pair<std::string, Word>> factor_longitudes;  // e.g. x^3 and w^3
    std::vector<std::pair<std::string, Word>> defined_words;      // rewriting notes (x = ca, ...)

    int generator_index(const std::string& g) const;
    Word letter(const std::string& g, int sign = 1) const;
    Word word_from_names(std::span<const std::string> names) const;

    nlohmann::json to_json() const;
    static Presentation from_json(const nlohmann::json& j);
};

enum class TrefoilVariant { Abc, Ac, Xy };
enum class Chirality { Left, Right };
enum class Knot { SK, GK };

/// The trefoil group in one of its three presentations, with meridian and
/// zero-framed longitude words (plus the +-6-framed x^3 variants).
Presentation trefoil_presentation(TrefoilVariant variant, Chirality chirality);

/// The four-generator presentations of G_n(SK) and G_n(GK); they differ only
/// in the final relator.
Presentation gn_presentation(Knot knot, int n);

/// Generic peripheral construction: adjoin an n-th root of the meridian
/// commuting with the longitude.
Presentation gn_from_peripheral(const Presentation& base, int n);

struct Crossing {
    int over = 0, in = 0, out = 0;
    char hand = 'R';  // 'L' or 'R'
};

struct KnotDiagram {
    int arcs = 0;
    std::vector<Crossing> crossings;

    nlohmann::json to_json() const;
    static KnotDiagram from_json(const nlohmann::json& j);
};

/// Wirtinger-type presentation of G_n from a closed diagram: one generator per
/// arc, with x_out = x_over^n x_in x_over^-n at left-handed crossings and
/// x_out = x_over^-n x_in x_over^n at right-handed ones.
Presentation wirtinger_gn(const KnotDiagram& diagram, int n);

KnotDiagram trefoil_diagram(Chirality chirality);

/// Left-to-right product of generator images along a word.
template <class G, class Elem>
Elem evaluate_word(const Word& w, std::span<const Elem> images, const G& group) {
    Elem acc = group.identity();
    for (int letter : w.letters) {
        int g = (letter > 0 ? letter : -letter) - 1;
        acc = group.mul(acc, letter > 0 ? images[g] : group.inv(images[g]));
    }
    return acc;
}

}  // namespace knothom
