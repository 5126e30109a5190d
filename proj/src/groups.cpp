#include "knf/groups.hpp"

#include <charconv>
#include <cstdlib>
#include <unordered_map>

namespace knf {

Word::Word(std::vector<WordLetter> letters) {
    for (const WordLetter& l : letters) {
        if (l.generator < 0)
            throw ParseError("word letter has negative generator index");
        if (l.exponent == 0) continue;
        if (!letters_.empty() && letters_.back().generator == l.generator) {
            letters_.back().exponent += l.exponent;
            if (letters_.back().exponent == 0) letters_.pop_back();
        } else {
            letters_.push_back(l);
        }
    }
}

int Word::length() const {
    int n = 0;
    for (const WordLetter& l : letters_) n += std::abs(l.exponent);
    return n;
}

int Word::max_generator() const {
    int m = -1;
    for (const WordLetter& l : letters_) m = std::max(m, l.generator);
    return m;
}

Word Word::concat(const Word& other) const {
    std::vector<WordLetter> all = letters_;
    all.insert(all.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(all));
}

Word Word::inverse() const {
    std::vector<WordLetter> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        rev.push_back({it->generator, -it->exponent});
    return Word(std::move(rev));
}

bool Word::operator==(const Word& other) const {
    if (letters_.size() != other.letters_.size()) return false;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i].generator != other.letters_[i].generator ||
            letters_[i].exponent != other.letters_[i].exponent)
            return false;
    return true;
}

Word commutator_word(int a, int b) {
    return Word({{a, 1}, {b, 1}, {a, -1}, {b, -1}});
}

void Presentation::check() const {
    if (num_generators < 1)
        throw ParseError("presentation needs at least one generator");
    for (const Word& w : relators)
        if (w.max_generator() >= num_generators)
            throw ParseError("relator references an unknown generator");
}

double Representation::squared_norm() const {
    double s = 0.0;
    for (const Cmat& m : matrices) s += m.squaredNorm();
    return s;
}

Cmat word_evaluate(const Representation& rep, const Word& w) {
    const int n = rep.dim();
    Cmat acc = Cmat::Identity(n, n);
    std::unordered_map<int, Cmat> inverses;

    for (const WordLetter& l : w.letters()) {
        if (l.generator >= rep.num_generators())
            throw DimensionMismatch("word references an unknown generator");
        const Cmat* base;
        if (l.exponent > 0) {
            base = &rep.matrices[static_cast<std::size_t>(l.generator)];
        } else {
            auto it = inverses.find(l.generator);
            if (it == inverses.end()) {
                const Cmat& m = rep.matrices[static_cast<std::size_t>(l.generator)];
                Eigen::FullPivLU<Cmat> lu(m);
                if (!lu.isInvertible())
                    throw Singular("word needs the inverse of a singular generator image");
                it = inverses.emplace(l.generator, lu.inverse()).first;
            }
            base = &it->second;
        }
        for (int k = 0; k < std::abs(l.exponent); ++k) acc = acc * (*base);
    }
    return acc;
}

double relation_residual(const Representation& rep) {
    const int n = rep.dim();
    double worst = 0.0;
    for (const Word& r : rep.presentation.relators) {
        Cmat defect = word_evaluate(rep, r) - Cmat::Identity(n, n);
        worst = std::max(worst, defect.norm());
    }
    return worst;
}

void validate(const Representation& rep, const ToleranceConfig& tol) {
    rep.presentation.check();
    if (rep.num_generators() != rep.presentation.num_generators)
        throw InvalidRepresentation("matrix count differs from generator count");
    for (const Cmat& m : rep.matrices) validate_member(m, rep.group, tol);
    if (!(relation_residual(rep) <= tol.tol_rel))
        throw InvalidRepresentation("relators do not hold within tolerance");
}

namespace {

int parse_rank(const std::string& name, std::size_t colon) {
    int r = 0;
    const char* first = name.data() + colon + 1;
    const char* last = name.data() + name.size();
    auto res = std::from_chars(first, last, r);
    if (res.ec != std::errc() || res.ptr != last || r < 1 || r > 64)
        throw UnknownPresentation("bad rank in presentation name: " + name);
    return r;
}

}  // namespace

Presentation builtin_presentation(const std::string& name) {
    Presentation p;
    p.name = name;
    if (name.rfind("free:", 0) == 0) {
        p.num_generators = parse_rank(name, 4);
        p.nilpotent = false;
        return p;
    }
    if (name.rfind("abelian:", 0) == 0) {
        p.num_generators = parse_rank(name, 7);
        p.nilpotent = true;
        for (int i = 0; i < p.num_generators; ++i)
            for (int j = i + 1; j < p.num_generators; ++j)
                p.relators.push_back(commutator_word(i, j));
        return p;
    }
    if (name == "heisenberg3") {
        // x, y, z with [x,y] = z central
        p.num_generators = 3;
        p.nilpotent = true;
        p.relators.push_back(commutator_word(0, 1).concat(Word({{2, -1}})));
        p.relators.push_back(commutator_word(0, 2));
        p.relators.push_back(commutator_word(1, 2));
        return p;
    }
    if (name == "z_semi_z4:2gen" || name == "z_semi_z4:3gen") {
        // s of order 4 acting on <t> = Z by inversion
        p.nilpotent = false;
        p.relators.push_back(Word({{0, 4}}));
        p.relators.push_back(Word({{0, 1}, {1, 1}, {0, -1}, {1, 1}}));
        if (name == "z_semi_z4:2gen") {
            p.num_generators = 2;
        } else {
            p.num_generators = 3;
            p.relators.push_back(Word({{2, -1}, {1, 1}, {0, 1}}));  // u = t s
        }
        return p;
    }
    throw UnknownPresentation("unknown presentation: " + name);
}

std::vector<Word> word_ball(const Presentation& p, int radius) {
    if (radius < 0) throw BallTooLarge("negative radius");
    if (radius > 6) throw BallTooLarge("radius above 6 is not supported");

    const int r = p.num_generators;
    // count 1 + sum_{k<=radius} 2r (2r-1)^(k-1)
    double count = 1.0;
    double layer = 2.0 * r;
    for (int k = 1; k <= radius; ++k) {
        count += layer;
        layer *= (2.0 * r - 1.0);
    }
    if (count > 1e6) throw BallTooLarge("word ball would exceed 10^6 words");

    std::vector<Word> ball;
    ball.reserve(static_cast<std::size_t>(count));
    ball.emplace_back();

    // letters in deterministic order: g0, g0^-1, g1, g1^-1, ...
    std::vector<WordLetter> alphabet;
    for (int g = 0; g < r; ++g) {
        alphabet.push_back({g, 1});
        alphabet.push_back({g, -1});
    }

    std::size_t frontier_begin = 0, frontier_end = 1;
    for (int k = 1; k <= radius; ++k) {
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (const WordLetter& l : alphabet) {
                const Word& w = ball[i];
                // skip extensions that cancel the trailing letter
                if (!w.empty()) {
                    const WordLetter& last = w.letters().back();
                    if (last.generator == l.generator &&
                        ((last.exponent > 0) != (l.exponent > 0)))
                        continue;
                }
                ball.push_back(w.concat(Word({l})));
            }
        }
        frontier_begin = frontier_end;
        frontier_end = ball.size();
    }
    return ball;
}

}  // namespace knf
