#include "kodsum/enumerate.hpp"

#include <optional>

#include <omp.h>

namespace kodsum {

std::vector<GluingData> gluing_grid(Int bound) {
    if (bound < 1)
        throw DomainError("enumeration bound must be at least 1");
    std::vector<GluingData> grid;
    const auto in = [bound](Int v) { return v >= -bound && v <= bound; };
    for (Int b = -bound; b <= bound; ++b)
        for (Int c = -bound; c <= bound; ++c) {
            const Int d = 1 + 2 * b * c;
            if (!in(d))
                continue;
            for (Int e = -bound; e <= bound; ++e)
                for (Int f = -bound; f <= bound; ++f)
                    grid.push_back(GluingData::even(b, c, d, e, f));
        }
    for (Int a = -bound; a <= bound; ++a)
        for (Int d = -bound; d <= bound; ++d) {
            const Int b = a * d - 1;
            if (!in(b))
                continue;
            for (Int e = -bound; e <= bound; ++e)
                for (Int f = -bound; f <= bound; ++f)
                    grid.push_back(GluingData::odd(a, b, d, e, f));
        }
    return grid;
}

namespace {

FamilyTag tag_of(ComplementKind j, ComplementKind k, const GluingData& g) {
    return normal_form(glue_bundle(j, k, g)).tag;
}

std::optional<OracleMismatch> oracle_check(Int j, Int k, const GluingData& g) {
    const ComplementKind J(j), K(k);
    auto lhs = abelianize(glue_presentation(J, K, g));
    auto rhs = h1(glue_bundle(J, K, g));
    if (lhs == rhs)
        return std::nullopt;
    return OracleMismatch{j, k, g, std::move(lhs), std::move(rhs)};
}

} // namespace

std::set<FamilyTag> enumerate_table_serial(ComplementKind j, ComplementKind k, Int bound) {
    std::set<FamilyTag> out;
    for (const auto& g : gluing_grid(bound))
        out.insert(tag_of(j, k, g));
    return out;
}

std::set<FamilyTag> enumerate_table(ComplementKind j, ComplementKind k, Int bound) {
    const auto grid = gluing_grid(bound);
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
    std::vector<std::set<FamilyTag>> partial(static_cast<std::size_t>(omp_get_max_threads()));
    std::string error;
    bool failed = false;

#pragma omp parallel
    {
        auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                mine.insert(tag_of(j, k, grid[static_cast<std::size_t>(i)]));
            } catch (const std::exception& e) {
#pragma omp critical(kodsum_enumerate_error)
                if (!failed) {
                    failed = true;
                    error = e.what();
                }
            }
        }
    }
    if (failed)
        throw DomainError("enumeration failed: " + error);

    std::set<FamilyTag> out;
    for (auto& s : partial)
        out.merge(s);
    return out;
}

std::vector<GridRecord> enumerate_records(ComplementKind j, ComplementKind k, Int bound) {
    std::vector<GridRecord> out;
    for (const auto& g : gluing_grid(bound)) {
        const TorusBundle b = glue_bundle(j, k, g);
        const NormalForm nf = normal_form(b);
        Presentation p = glue_presentation(j, k, g);
        AbelianInvariants ab = abelianize(p);
        out.push_back({g, b, nf.tag, nf.trace, std::move(p), std::move(ab)});
    }
    return out;
}

std::size_t cross_oracle_size(Int bound) { return 4 * gluing_grid(bound).size(); }

std::vector<OracleMismatch> cross_oracle_sweep_serial(Int bound) {
    std::vector<OracleMismatch> out;
    const auto grid = gluing_grid(bound);
    for (Int j = 0; j <= 1; ++j)
        for (Int k = 0; k <= 1; ++k)
            for (const auto& g : grid)
                if (auto mm = oracle_check(j, k, g))
                    out.push_back(std::move(*mm));
    return out;
}

std::vector<OracleMismatch> cross_oracle_sweep(Int bound) {
    const auto grid = gluing_grid(bound);
    const auto per = static_cast<std::ptrdiff_t>(grid.size());
    const std::ptrdiff_t n = 4 * per;
    // One slot per work item keeps the output in grid order.
    std::vector<std::optional<OracleMismatch>> slots(static_cast<std::size_t>(n));

    std::string error;
    bool failed = false;

#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const Int jk = i / per;
        try {
            slots[static_cast<std::size_t>(i)] =
                oracle_check(jk / 2, jk % 2, grid[static_cast<std::size_t>(i % per)]);
        } catch (const std::exception& e) {
#pragma omp critical(kodsum_sweep_error)
            if (!failed) {
                failed = true;
                error = e.what();
            }
        }
    }
    if (failed)
        throw DomainError("cross-oracle sweep failed: " + error);

    std::vector<OracleMismatch> out;
    for (auto& s : slots)
        if (s)
            out.push_back(std::move(*s));
    return out;
}

} // namespace kodsum
