#include "kodsum/fpgroup.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "kodsum/snf.hpp"

namespace kodsum {

Word::Word(std::initializer_list<Syllable> syllables) {
    for (const auto& s : syllables)
        push(s);
}

Word::Word(std::vector<Syllable> syllables) {
    for (const auto& s : syllables)
        push(s);
}

Word Word::gen(std::size_t g, Int e) {
    Word w;
    w.push({g, e});
    return w;
}

void Word::push(Syllable s) {
    if (s.exp == 0)
        return;
    if (!s_.empty() && s_.back().gen == s.gen) {
        s_.back().exp = checked_add(s_.back().exp, s.exp);
        if (s_.back().exp == 0)
            s_.pop_back();
        return;
    }
    s_.push_back(s);
}

Word Word::inverse() const {
    Word w;
    for (auto it = s_.rbegin(); it != s_.rend(); ++it)
        w.push({it->gen, -it->exp});
    return w;
}

Word Word::pow(Int n) const {
    const Word base = n < 0 ? inverse() : *this;
    Word w;
    for (Int i = 0; i < (n < 0 ? -n : n); ++i)
        w *= base;
    return w;
}

Word Word::operator*(const Word& o) const {
    Word w = *this;
    w *= o;
    return w;
}

Word& Word::operator*=(const Word& o) {
    for (const auto& s : o.s_)
        push(s);
    return *this;
}

Int Word::exponent_sum(std::size_t g) const {
    Int total = 0;
    for (const auto& s : s_)
        if (s.gen == g)
            total = checked_add(total, s.exp);
    return total;
}

Word free_reduce(const Word& w) { return Word(w.syllables()); }

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

std::string render(const AbelianInvariants& a) {
    std::vector<std::string> parts;
    if (a.rank == 1)
        parts.push_back("Z");
    else if (a.rank > 1)
        parts.push_back("Z^" + std::to_string(a.rank));
    for (Int t : a.torsion)
        parts.push_back("Z/" + std::to_string(t));
    if (parts.empty())
        return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += " + " + parts[i];
    return out;
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : gens_(std::move(generators)), rels_(std::move(relators)) {
    for (const auto& r : rels_)
        for (const auto& s : r.syllables())
            if (s.gen >= gens_.size())
                throw DomainError("relator mentions generator " + std::to_string(s.gen) + " but only " +
                                  std::to_string(gens_.size()) + " exist");
}

std::size_t Presentation::index_of(const std::string& name) const {
    auto it = std::find(gens_.begin(), gens_.end(), name);
    if (it == gens_.end())
        throw DomainError("no generator named " + name);
    return static_cast<std::size_t>(it - gens_.begin());
}

Matrix<Int> Presentation::exponent_matrix() const {
    Matrix<Int> m(rels_.size(), gens_.size());
    for (std::size_t i = 0; i < rels_.size(); ++i)
        for (const auto& s : rels_[i].syllables())
            m(i, s.gen) = checked_add(m(i, s.gen), s.exp);
    return m;
}

Presentation Presentation::add_generator(const std::string& name, const Word& definition) const {
    if (std::find(gens_.begin(), gens_.end(), name) != gens_.end())
        throw DomainError("generator " + name + " already exists");
    auto gens = gens_;
    gens.push_back(name);
    auto rels = rels_;
    rels.push_back(Word::gen(gens.size() - 1, -1) * definition);
    return {std::move(gens), std::move(rels)};
}

namespace {

Word replace_generator(const Word& w, std::size_t gen, const Word& replacement) {
    Word out;
    for (const auto& s : w.syllables())
        out *= s.gen == gen ? replacement.pow(s.exp) : Word::gen(s.gen, s.exp);
    return out;
}

// Drops generator gen from the index space (callers ensure it no longer occurs).
Presentation drop_generator(const std::vector<std::string>& gens, const std::vector<Word>& rels, std::size_t gen) {
    std::vector<std::string> g2;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (i != gen)
            g2.push_back(gens[i]);
    std::vector<Word> r2;
    for (const auto& r : rels) {
        Word w;
        for (const auto& s : r.syllables())
            w *= Word::gen(s.gen > gen ? s.gen - 1 : s.gen, s.exp);
        r2.push_back(w);
    }
    return {std::move(g2), std::move(r2)};
}

} // namespace

Presentation Presentation::substitute(std::size_t gen, const Word& replacement) const {
    if (gen >= gens_.size())
        throw DomainError("generator index out of range");
    if (std::any_of(replacement.syllables().begin(), replacement.syllables().end(),
                    [gen](const Syllable& s) { return s.gen == gen; }))
        throw DomainError("replacement for " + gens_[gen] + " mentions it");
    std::vector<Word> rels;
    for (const auto& r : rels_)
        rels.push_back(replace_generator(r, gen, replacement));
    return drop_generator(gens_, rels, gen);
}

Presentation Presentation::eliminate(std::size_t gen, std::size_t relator_index) const {
    if (gen >= gens_.size() || relator_index >= rels_.size())
        throw DomainError("index out of range");
    const auto& syl = rels_[relator_index].syllables();
    std::size_t pos = syl.size();
    for (std::size_t i = 0; i < syl.size(); ++i) {
        if (syl[i].gen != gen)
            continue;
        if (pos != syl.size() || (syl[i].exp != 1 && syl[i].exp != -1))
            throw DomainError(gens_[gen] + " is not eliminable with relator " + std::to_string(relator_index));
        pos = i;
    }
    if (pos == syl.size())
        throw DomainError(gens_[gen] + " does not occur in relator " + std::to_string(relator_index));

    // R = u g^e w = 1  =>  g = (w u)^-e  (cyclic rotation puts g first).
    Word u(std::vector<Syllable>(syl.begin(), syl.begin() + static_cast<std::ptrdiff_t>(pos)));
    Word w(std::vector<Syllable>(syl.begin() + static_cast<std::ptrdiff_t>(pos) + 1, syl.end()));
    Word value = (w * u).pow(-syl[pos].exp);

    std::vector<Word> rels;
    for (std::size_t i = 0; i < rels_.size(); ++i)
        if (i != relator_index)
            rels.push_back(replace_generator(rels_[i], gen, value));
    return drop_generator(gens_, rels, gen);
}

Presentation Presentation::eliminate(std::size_t gen) const {
    for (std::size_t i = 0; i < rels_.size(); ++i) {
        std::size_t count = 0;
        bool unit = true;
        for (const auto& s : rels_[i].syllables())
            if (s.gen == gen) {
                ++count;
                unit = unit && (s.exp == 1 || s.exp == -1);
            }
        if (count == 1 && unit)
            return eliminate(gen, i);
    }
    throw DomainError(gens_.at(gen) + " is not eliminable: no relator contains it exactly once with exponent +-1");
}

Presentation Presentation::permute_relators(const std::vector<std::size_t>& order) const {
    if (order.size() != rels_.size())
        throw DomainError("relator permutation has the wrong length");
    std::vector<Word> rels;
    for (std::size_t i : order)
        rels.push_back(rels_.at(i));
    return {gens_, std::move(rels)};
}

Presentation Presentation::rename(std::vector<std::string> names) const {
    if (names.size() != gens_.size())
        throw DomainError("rename needs one name per generator");
    return {std::move(names), rels_};
}

AbelianInvariants cokernel(const Matrix<Int>& relations) {
    AbelianInvariants out;
    const std::size_t gens = relations.cols();
    if (relations.rows() == 0) {
        out.rank = static_cast<Int>(gens);
        return out;
    }
    const SmithForm s = snf(relations);
    const auto factors = s.invariant_factors();
    out.rank = static_cast<Int>(gens - factors.size());
    for (const auto& f : factors)
        if (f != 1)
            out.torsion.push_back(to_int(f));
    return out;
}

AbelianInvariants abelianize(const Presentation& p) { return cokernel(p.exponent_matrix()); }

std::string render_word(const Word& w, const std::vector<std::string>& names) {
    if (w.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : w.syllables()) {
        if (!first)
            os << "*";
        first = false;
        os << names.at(s.gen);
        if (s.exp != 1)
            os << "^" << s.exp;
    }
    return os.str();
}

std::string render(const Presentation& p) {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < p.generators().size(); ++i)
        os << (i ? "," : "") << p.generators()[i];
    os << " | ";
    for (std::size_t i = 0; i < p.relators().size(); ++i)
        os << (i ? ", " : "") << render_word(p.relators()[i], p.generators());
    os << ">";
    return os.str();
}

namespace {

class PresentationParser {
  public:
    explicit PresentationParser(const std::string& t) : t_(t) {}

    Presentation parse() {
        expect('<');
        std::vector<std::string> gens;
        skip();
        if (peek() != '|') {
            gens.push_back(ident());
            while (accept(','))
                gens.push_back(ident());
        }
        expect('|');
        std::vector<Word> rels;
        skip();
        if (peek() != '>') {
            rels.push_back(word(gens));
            while (accept(','))
                rels.push_back(word(gens));
        }
        expect('>');
        skip();
        if (i_ != t_.size())
            throw ParseError("trailing characters after presentation", i_);
        for (std::size_t a = 0; a < gens.size(); ++a)
            for (std::size_t b = a + 1; b < gens.size(); ++b)
                if (gens[a] == gens[b])
                    throw ParseError("duplicate generator " + gens[a], 0);
        return {gens, rels};
    }

  private:
    void skip() {
        while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_])))
            ++i_;
    }
    char peek() const { return i_ < t_.size() ? t_[i_] : '\0'; }
    bool accept(char c) {
        skip();
        if (peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", i_);
    }
    std::string ident() {
        skip();
        const std::size_t start = i_;
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
            throw ParseError("expected a generator name", i_);
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            ++i_;
        return t_.substr(start, i_ - start);
    }
    Int integer() {
        skip();
        const std::size_t start = i_;
        if (peek() == '-' || peek() == '+')
            ++i_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected an integer", i_);
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++i_;
        try {
            return std::stoll(t_.substr(start, i_ - start));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", start);
        }
    }
    Word factor(const std::vector<std::string>& gens) {
        skip();
        if (peek() == '1') {
            ++i_;
            return {};
        }
        const std::size_t at = i_;
        const std::string name = ident();
        auto it = std::find(gens.begin(), gens.end(), name);
        if (it == gens.end())
            throw ParseError("unknown generator " + name, at);
        Int e = 1;
        if (accept('^'))
            e = integer();
        return Word::gen(static_cast<std::size_t>(it - gens.begin()), e);
    }
    Word word(const std::vector<std::string>& gens) {
        Word w = factor(gens);
        while (accept('*'))
            w *= factor(gens);
        return w;
    }

    const std::string& t_;
    std::size_t i_ = 0;
};

} // namespace

Presentation parse_presentation(const std::string& text) { return PresentationParser(text).parse(); }

} // namespace kodsum
