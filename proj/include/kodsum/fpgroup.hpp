#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "kodsum/integer.hpp"
#include "kodsum/matrix.hpp"

namespace kodsum {

/// A syllable g^e with e != 0.
struct Syllable {
    std::size_t gen;
    Int exp;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A group word in syllable form. Construction and concatenation keep it
/// freely reduced: adjacent syllables have distinct generators.
class Word {
  public:
    Word() = default;
    Word(std::initializer_list<Syllable> syllables);
    explicit Word(std::vector<Syllable> syllables);

    static Word gen(std::size_t g, Int e = 1);

    const std::vector<Syllable>& syllables() const noexcept { return s_; }
    bool empty() const noexcept { return s_.empty(); }

    Word inverse() const;
    Word pow(Int n) const;
    Word operator*(const Word& o) const;
    Word& operator*=(const Word& o);

    /// Exponent sum of generator g.
    Int exponent_sum(std::size_t g) const;

    friend bool operator==(const Word&, const Word&) = default;

  private:
    void push(Syllable s);
    std::vector<Syllable> s_;
};

Word free_reduce(const Word& w);

/// [a, b] = a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);

/// Free abelian rank plus torsion coefficients t1 | t2 | ..., all >= 2.
struct AbelianInvariants {
    Int rank = 0;
    std::vector<Int> torsion;

    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

std::string render(const AbelianInvariants& a);

class Presentation {
  public:
    Presentation() = default;
    Presentation(std::vector<std::string> generators, std::vector<Word> relators);

    const std::vector<std::string>& generators() const noexcept { return gens_; }
    const std::vector<Word>& relators() const noexcept { return rels_; }
    std::size_t generator_count() const noexcept { return gens_.size(); }

    /// Index of the generator with this name; throws DomainError if absent.
    std::size_t index_of(const std::string& name) const;

    /// Rows are relators, columns generators.
    Matrix<Int> exponent_matrix() const;

    /// Tietze enlargement: adds a generator `name` and the relator
    /// name^-1 * definition.
    Presentation add_generator(const std::string& name, const Word& definition) const;

    /// Tietze elimination of `gen` using `relator_index`, in which gen must
    /// occur exactly once with exponent +-1. The relator is dropped and gen is
    /// replaced everywhere by the word it determines.
    Presentation eliminate(std::size_t gen, std::size_t relator_index) const;

    /// Eliminates `gen` using the first relator where it occurs once with
    /// exponent +-1. Throws DomainError if there is none.
    Presentation eliminate(std::size_t gen) const;

    /// Replaces every occurrence of gen by `replacement` (which may not
    /// mention gen). This is only an isomorphism when gen is redundant, which
    /// is the caller's obligation; use eliminate() for the checked form.
    Presentation substitute(std::size_t gen, const Word& replacement) const;

    /// Same presentation with the relators reordered by `order`.
    Presentation permute_relators(const std::vector<std::size_t>& order) const;
    /// Same group with generators renamed.
    Presentation rename(std::vector<std::string> names) const;

  private:
    std::vector<std::string> gens_;
    std::vector<Word> rels_;
};

/// Cokernel of the relator exponent matrix, via Smith normal form.
AbelianInvariants abelianize(const Presentation& p);

/// Cokernel of an integer relation matrix (rows = relations).
AbelianInvariants cokernel(const Matrix<Int>& relations);

std::string render_word(const Word& w, const std::vector<std::string>& names);
/// `<a,b | a*b*a^-1*b^-1>`; the empty word renders as 1.
std::string render(const Presentation& p);
/// Inverse of render(); generator names are identifiers.
Presentation parse_presentation(const std::string& text);

} // namespace kodsum
