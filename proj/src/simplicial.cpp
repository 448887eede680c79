#include "coherent/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>

#include "coherent/cochain.hpp"
#include "coherent/linalg.hpp"

namespace coherent {

SimplicialComplex::SimplicialComplex(
    std::vector<std::string> vertices,
    const std::vector<std::vector<std::string>>& maximal)
    : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        if (vertices_[i] == vertices_[i - 1])
            throw DomainError("DuplicateElement", "duplicate vertex",
                              {{"id", vertices_[i]}});
    for (const auto& s : maximal) {
        std::vector<int> idx;
        for (const auto& name : s) idx.push_back(index_of(name));
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        if (idx.empty())
            throw DomainError("InvalidComplex", "empty simplex");
        // Close under faces: every nonempty subset enters the complex.
        const int m = static_cast<int>(idx.size());
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::vector<int> face;
            for (int b = 0; b < m; ++b)
                if (mask & (1 << b)) face.push_back(idx[b]);
            simplices_.insert(face);
            dim_ = std::max(dim_, static_cast<int>(face.size()) - 1);
        }
    }
}

int SimplicialComplex::index_of(const std::string& name) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end() || *it != name)
        throw DomainError("UnknownElement", "no such vertex", {{"id", name}});
    return static_cast<int>(it - vertices_.begin());
}

std::vector<std::vector<int>> SimplicialComplex::simplices_of_dim(int d) const {
    std::vector<std::vector<int>> out;
    for (const auto& s : simplices_)
        if (static_cast<int>(s.size()) == d + 1) out.push_back(s);
    return out;
}

std::string SimplicialComplex::simplex_name(const std::vector<int>& s) const {
    std::string name;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) name += "|";
        name += vertices_.at(s[i]);
    }
    return name;
}

SimplicialComplex nerve(const Poset& p) {
    // Chains are generated from maximal ones; since every chain extends to
    // a maximal chain, emitting all chains as "maximal" input and letting
    // face closure dedupe is simplest and still exact.
    std::vector<std::vector<std::string>> chains;
    std::vector<int> chain;
    std::function<void(int)> extend = [&](int last) {
        if (!chain.empty()) {
            std::vector<std::string> named;
            for (int i : chain) named.push_back(p.element(i));
            chains.push_back(std::move(named));
        }
        for (int next = 0; next < p.size(); ++next) {
            if (last >= 0 && !(last != next && p.leq(last, next))) continue;
            chain.push_back(next);
            extend(next);
            chain.pop_back();
        }
    };
    extend(-1);
    return SimplicialComplex(p.elements(), chains);
}

Poset barycentric_subdivision(const SimplicialComplex& k) {
    std::vector<std::string> elems;
    std::map<std::vector<int>, std::string> names;
    for (const auto& s : k.simplices()) {
        names[s] = k.simplex_name(s);
        elems.push_back(names[s]);
    }
    std::vector<std::pair<std::string, std::string>> rels;
    for (const auto& a : k.simplices())
        for (const auto& b : k.simplices()) {
            if (a.size() >= b.size()) continue;
            if (std::includes(b.begin(), b.end(), a.begin(), a.end()))
                rels.emplace_back(names[a], names[b]);
        }
    return Poset(elems, rels);
}

std::vector<long> simplicial_betti(const SimplicialComplex& k, int max_degree) {
    // Ordered-vertex sign convention: the coboundary matrix in degree d has
    // entry (-1)^j between a (d+1)-simplex and the face dropping vertex j.
    auto delta = [&](int d) -> linalg::RatMat {
        const auto dom = k.simplices_of_dim(d);
        const auto codom = k.simplices_of_dim(d + 1);
        std::map<std::vector<int>, int> col;
        for (std::size_t i = 0; i < dom.size(); ++i) col[dom[i]] = static_cast<int>(i);
        linalg::RatMat m(codom.size(), std::vector<Rat>(dom.size(), Rat(0)));
        for (std::size_t r = 0; r < codom.size(); ++r) {
            int sign = 1;
            for (std::size_t j = 0; j < codom[r].size(); ++j) {
                std::vector<int> face = codom[r];
                face.erase(face.begin() + j);
                m[r][col.at(face)] += sign;
                sign = -sign;
            }
        }
        return m;
    };
    std::vector<long> betti;
    long prev_rank = 0;
    for (int d = 0; d <= max_degree; ++d) {
        const long dim = static_cast<long>(k.simplices_of_dim(d).size());
        const long r = dim ? linalg::rank(delta(d)) : 0;
        betti.push_back(dim - r - prev_rank);
        prev_rank = r;
    }
    return betti;
}

std::vector<ComparisonRow> compare_poset_cohomology(const Poset& p, int max_degree,
                                                    bool cc0_zero) {
    auto sg = std::make_shared<const SemigroupTable>(poset_semigroup(p));
    const auto betti = simplicial_betti(nerve(p), max_degree);
    std::vector<ComparisonRow> rows;
    for (int d = 0; d <= max_degree; ++d) {
        const auto rep = cohomology_rank(sg, d, cc0_zero);
        rows.push_back({d, rep.dim_cohomology, betti[d],
                        rep.dim_cohomology == betti[d]});
    }
    return rows;
}

}
