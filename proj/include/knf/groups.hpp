#pragma once

#include <string>
#include <vector>

#include "knf/matcore.hpp"

namespace knf {

/// One letter of a word: generator index with a nonzero exponent.
struct WordLetter {
    int generator = 0;
    int exponent = 1;
};

/// A freely reduced word in the generators. Adjacent letters with the same
/// generator index are merged on construction; zero exponents are dropped.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<WordLetter> letters);

    const std::vector<WordLetter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    int length() const;  // sum of |exponent|
    int max_generator() const;

    Word concat(const Word& other) const;
    Word inverse() const;

    bool operator==(const Word& other) const;

private:
    std::vector<WordLetter> letters_;
};

/// Commutator word a b a^-1 b^-1 on two generator indices.
Word commutator_word(int a, int b);

struct Presentation {
    std::string name;
    int num_generators = 0;
    std::vector<Word> relators;
    bool nilpotent = false;  // declared by the source, never computed

    void check() const;  // relators reference valid generators
};

struct Representation {
    Presentation presentation;
    GroupSpec group;
    std::vector<Cmat> matrices;  // image of each generator

    int dim() const { return group.dim; }
    int num_generators() const { return static_cast<int>(matrices.size()); }
    /// Squared Frobenius norm of the whole tuple.
    double squared_norm() const;
};

Cmat word_evaluate(const Representation& rep, const Word& w);

/// max over relators of || eval(relator) - I ||_F; 0 for a free group.
double relation_residual(const Representation& rep);

/// Throws unless matrices match the presentation and group and the relators
/// hold within tol.tol_rel.
void validate(const Representation& rep, const ToleranceConfig& tol = {});

/// Built-in presentations:
///   "free:r"          free group on r generators
///   "abelian:r"       Z^r, all pairwise commutators
///   "heisenberg3"     x, y, z with [x,y]z^-1, [x,z], [y,z]
///   "z_semi_z4:2gen"  s, t with s^4 and s t s^-1 t  (order-4 twist by inversion)
///   "z_semi_z4:3gen"  as above plus redundant u with u^-1 t s
Presentation builtin_presentation(const std::string& name);

/// All freely reduced words of length <= radius, deterministic order
/// (breadth-first, generator index then sign). Radius 0 gives {empty}.
std::vector<Word> word_ball(const Presentation& p, int radius);

}  // namespace knf
