#pragma once

#include <map>

#include "rational.hpp"
#include "simplicial_complex.hpp"

namespace algshift {

/// Reduced simplicial Betti numbers over Q from exact ranks of the augmented boundary maps.
/// entries[i] = beta_{i-1}, i.e. the vector starts at reduced degree -1.
inline BettiNumbers reduced_betti(const SimplicialComplex& c)
{
    BettiNumbers b;
    if (c.is_void()) return b;
    const auto faces = c.faces();
    const auto top = static_cast<std::size_t>(c.dim() + 2); // sizes 0..dim+1
    std::vector<std::vector<Face>> by_size(top);
    for (Face f : faces) by_size[static_cast<std::size_t>(f.size())].push_back(f);

    // rank of boundary from faces of size k to faces of size k-1, for k = 1..top-1.
    std::vector<std::size_t> boundary_rank(top + 1, 0);
    for (std::size_t k = 1; k < top; ++k) {
        const auto& rows = by_size[k - 1];
        const auto& cols = by_size[k];
        std::map<std::uint64_t, std::size_t> row_index;
        for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i].bits()] = i;
        RationalMatrix m(rows.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            int sign = 1;
            for (Vertex v : cols[j].vertices()) {
                m(row_index.at(cols[j].without(v).bits()), j) = sign;
                sign = -sign;
            }
        }
        boundary_rank[k] = rank(std::move(m));
    }
    b.entries.resize(top);
    for (std::size_t k = 0; k < top; ++k) {
        // chains on faces of size k sit in reduced degree k - 1
        const auto dim_chains = static_cast<std::int64_t>(by_size[k].size());
        b.entries[k] = dim_chains - static_cast<std::int64_t>(boundary_rank[k]) -
                       static_cast<std::int64_t>(boundary_rank[k + 1]);
    }
    return b;
}

} // namespace algshift
