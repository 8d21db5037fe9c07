#include "kodsum/homology.hpp"

#include <sstream>

namespace kodsum {

SurfaceFamily SurfaceFamily::cp2_blowup(Int k) {
    if (k < 0)
        throw DomainError("blowup count must be non-negative");
    return {Kind::CP2Blowup, 0, k};
}

SurfaceFamily SurfaceFamily::s2xs2() { return {Kind::S2xS2, 0, 0}; }

SurfaceFamily SurfaceFamily::ruled_trivial(Int h, Int k) {
    if (h < 1)
        throw DomainError("ruled surfaces need base genus >= 1");
    if (k < 0)
        throw DomainError("blowup count must be non-negative");
    return {Kind::RuledTrivial, h, k};
}

SurfaceFamily SurfaceFamily::ruled_twisted(Int h) {
    if (h < 1)
        throw DomainError("ruled surfaces need base genus >= 1");
    return {Kind::RuledTwisted, h, 0};
}

bool SurfaceFamily::is_sphere_bundle() const noexcept {
    switch (kind_) {
    case Kind::CP2Blowup:
        return false;
    case Kind::S2xS2:
    case Kind::RuledTwisted:
        return true;
    case Kind::RuledTrivial:
        return k_ == 0;
    }
    return false;
}

bool SurfaceFamily::is_minimal() const noexcept {
    // CP2 # k for k >= 1 always contains E_k.
    return k_ == 0;
}

std::size_t SurfaceFamily::rank() const noexcept {
    switch (kind_) {
    case Kind::CP2Blowup:
        return 1 + static_cast<std::size_t>(k_);
    case Kind::S2xS2:
    case Kind::RuledTwisted:
        return 2;
    case Kind::RuledTrivial:
        return 2 + static_cast<std::size_t>(k_);
    }
    return 0;
}

std::vector<std::string> SurfaceFamily::basis_labels() const {
    std::vector<std::string> labels;
    switch (kind_) {
    case Kind::CP2Blowup:
        labels.push_back("H");
        for (Int i = 1; i <= k_; ++i)
            labels.push_back("E" + std::to_string(i));
        break;
    case Kind::S2xS2:
        labels = {"A", "B"};
        break;
    case Kind::RuledTrivial:
        labels = {"sigma", "f"};
        for (Int i = 1; i <= k_; ++i)
            labels.push_back("e" + std::to_string(i));
        break;
    case Kind::RuledTwisted:
        labels = {"s-", "f"};
        break;
    }
    return labels;
}

std::vector<std::size_t> SurfaceFamily::exceptional_indices() const {
    std::vector<std::size_t> idx;
    std::size_t first = kind_ == Kind::CP2Blowup ? 1 : 2;
    if (kind_ == Kind::CP2Blowup || kind_ == Kind::RuledTrivial)
        for (std::size_t i = 0; i < static_cast<std::size_t>(k_); ++i)
            idx.push_back(first + i);
    return idx;
}

std::string SurfaceFamily::name() const {
    auto base = [this](bool twisted) {
        std::string s = twisted ? "S2~x" : "S2x";
        s += h_ == 1 ? std::string("T2") : "Sigma" + std::to_string(h_);
        return s;
    };
    switch (kind_) {
    case Kind::CP2Blowup:
        return k_ == 0 ? "CP2" : "CP2#" + std::to_string(k_);
    case Kind::S2xS2:
        return "S2xS2";
    case Kind::RuledTrivial:
        return k_ == 0 ? base(false) : base(false) + "#" + std::to_string(k_);
    case Kind::RuledTwisted:
        return base(true);
    }
    return {};
}

H2Class::H2Class(SurfaceFamily family, std::vector<Int> coeffs)
    : family_(std::move(family)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != family_.rank())
        throw DomainError("class has " + std::to_string(coeffs_.size()) + " coefficients but " +
                          family_.name() + " has rank " + std::to_string(family_.rank()));
}

H2Class H2Class::operator+(const H2Class& o) const {
    if (!(family_ == o.family_))
        throw DomainError("adding classes from different families");
    std::vector<Int> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    return {family_, std::move(c)};
}

H2Class H2Class::operator-() const { return -1 * *this; }

H2Class H2Class::operator-(const H2Class& o) const { return *this + (-o); }

H2Class operator*(Int s, const H2Class& c) {
    std::vector<Int> out(c.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = checked_mul(s, c.coeffs_[i]);
    return {c.family_, std::move(out)};
}

Lattice gram(const SurfaceFamily& family) {
    const std::size_t n = family.rank();
    Matrix<Int> g(n, n);
    switch (family.kind()) {
    case SurfaceFamily::Kind::CP2Blowup:
        g(0, 0) = 1;
        for (std::size_t i = 1; i < n; ++i)
            g(i, i) = -1;
        break;
    case SurfaceFamily::Kind::S2xS2:
        g(0, 1) = g(1, 0) = 1;
        break;
    case SurfaceFamily::Kind::RuledTrivial:
        g(0, 1) = g(1, 0) = 1;
        for (std::size_t i = 2; i < n; ++i)
            g(i, i) = -1;
        break;
    case SurfaceFamily::Kind::RuledTwisted:
        g(0, 0) = -1;
        g(0, 1) = g(1, 0) = 1;
        break;
    }
    return {family.basis_labels(), std::move(g)};
}

Int intersect(const H2Class& a, const H2Class& b) {
    if (!(a.family() == b.family()))
        throw DomainError("intersecting classes of " + a.family().name() + " and " + b.family().name());
    const Lattice lat = gram(a.family());
    Int total = 0;
    for (std::size_t i = 0; i < lat.gram.rows(); ++i)
        for (std::size_t j = 0; j < lat.gram.cols(); ++j)
            if (lat.gram(i, j) != 0)
                total = checked_add(total, checked_mul(checked_mul(a[i], lat.gram(i, j)), b[j]));
    return total;
}

H2Class anticanonical(const SurfaceFamily& family) {
    std::vector<Int> c(family.rank(), 0);
    switch (family.kind()) {
    case SurfaceFamily::Kind::CP2Blowup:
        // -PD(kappa) = 3H - sum E_i
        c[0] = 3;
        for (std::size_t i = 1; i < c.size(); ++i)
            c[i] = -1;
        break;
    case SurfaceFamily::Kind::S2xS2:
        c = {2, 2};
        break;
    case SurfaceFamily::Kind::RuledTrivial:
        // PD(kappa) = -2 sigma + (2h-2) f + sum e_i
        c[0] = 2;
        c[1] = 2 - 2 * family.base_genus();
        for (std::size_t i = 2; i < c.size(); ++i)
            c[i] = -1;
        break;
    case SurfaceFamily::Kind::RuledTwisted:
        // PD(kappa) = (2h-3) s+ - (2h-1) s-  with s+ = s- + f
        //           = -2 s- + (2h-3) f
        c[0] = 2;
        c[1] = 3 - 2 * family.base_genus();
        break;
    }
    return {family, std::move(c)};
}

H2Class basis_class(const SurfaceFamily& family, std::size_t index) {
    if (index >= family.rank())
        throw DomainError("basis index out of range");
    std::vector<Int> c(family.rank(), 0);
    c[index] = 1;
    return {family, std::move(c)};
}

AdjunctionGenus adjunction_genus(const H2Class& F) {
    const Int rhs = checked_add(square(F), intersect(canonical(F.family()), F));
    if (mod_floor(rhs, 2) != 0)
        return {AdjunctionGenus::Status::OddRightSide, rhs};
    const Int g = (rhs + 2) / 2;
    if (g < 0)
        return {AdjunctionGenus::Status::NegativeGenus, rhs};
    return {AdjunctionGenus::Status::Defined, g};
}

Int euler(const SurfaceFamily& family) {
    switch (family.kind()) {
    case SurfaceFamily::Kind::CP2Blowup:
        return 3 + family.blowups();
    case SurfaceFamily::Kind::S2xS2:
        return 4;
    case SurfaceFamily::Kind::RuledTrivial:
        return 4 - 4 * family.base_genus() + family.blowups();
    case SurfaceFamily::Kind::RuledTwisted:
        return 4 - 4 * family.base_genus();
    }
    return 0;
}

Int signature(const SurfaceFamily& family) {
    switch (family.kind()) {
    case SurfaceFamily::Kind::CP2Blowup:
        return 1 - family.blowups();
    case SurfaceFamily::Kind::S2xS2:
    case SurfaceFamily::Kind::RuledTwisted:
        return 0;
    case SurfaceFamily::Kind::RuledTrivial:
        return -family.blowups();
    }
    return 0;
}

Int c1sq(const SurfaceFamily& family) { return 2 * euler(family) + 3 * signature(family); }

SurfaceFamily blow_up(const SurfaceFamily& family) {
    switch (family.kind()) {
    case SurfaceFamily::Kind::CP2Blowup:
        return SurfaceFamily::cp2_blowup(family.blowups() + 1);
    case SurfaceFamily::Kind::RuledTrivial:
        return SurfaceFamily::ruled_trivial(family.base_genus(), family.blowups() + 1);
    case SurfaceFamily::Kind::S2xS2:
        throw DomainError("blowing up S2xS2 changes basis; use blow_up_s2xs2()");
    case SurfaceFamily::Kind::RuledTwisted:
        throw DomainError("blowups of the twisted bundle are not modelled");
    }
    throw DomainError("unknown family");
}

SurfaceFamily blow_down(const SurfaceFamily& family) {
    if (family.is_minimal())
        throw DomainError(family.name() + " has no exceptional class to blow down");
    if (family.kind() == SurfaceFamily::Kind::CP2Blowup)
        return SurfaceFamily::cp2_blowup(family.blowups() - 1);
    return SurfaceFamily::ruled_trivial(family.base_genus(), family.blowups() - 1);
}

BlownUpS2xS2 blow_up_s2xs2() { return {}; }

H2Class BlownUpS2xS2::transport(const std::vector<Int>& abe) const {
    if (abe.size() != 3)
        throw DomainError("a class on (S2xS2)#CP2-bar has three coefficients");
    std::vector<Int> out(3, 0);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            out[i] = checked_add(out[i], checked_mul(basis_change(i, j), abe[j]));
    return {family, std::move(out)};
}

std::string render_class(const H2Class& c) {
    const auto labels = c.family().basis_labels();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const Int v = c[i];
        if (v == 0)
            continue;
        if (first)
            os << (v < 0 ? "-" : "");
        else
            os << (v < 0 ? " - " : " + ");
        const Int a = v < 0 ? -v : v;
        if (a != 1)
            os << a;
        os << labels[i];
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

} // namespace kodsum
