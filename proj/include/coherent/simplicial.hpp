#pragma once

#include <set>
#include <string>
#include <vector>

#include "coherent/semigroup.hpp"

namespace coherent {

// Abstract simplicial complex over named vertices.  Simplices are kept as
// sorted vertex-index vectors, closed under taking faces.
class SimplicialComplex {
public:
    SimplicialComplex(std::vector<std::string> vertices,
                      const std::vector<std::vector<std::string>>& maximal);

    const std::vector<std::string>& vertices() const { return vertices_; }
    int index_of(const std::string& name) const;
    const std::set<std::vector<int>>& simplices() const { return simplices_; }
    int dimension() const { return dim_; }

    // Simplices of the given dimension, lexicographic.
    std::vector<std::vector<int>> simplices_of_dim(int d) const;

    // Human-readable simplex identifier: vertex names joined with '|'.
    std::string simplex_name(const std::vector<int>& s) const;

private:
    std::vector<std::string> vertices_;  // sorted
    std::set<std::vector<int>> simplices_;
    int dim_ = -1;
};

// Order complex: simplices are the chains x_0 < x_1 < ... of the poset.
SimplicialComplex nerve(const Poset& p);

// Face poset of the complex: one poset element per nonempty simplex,
// ordered by face inclusion.  Its nerve is the barycentric subdivision.
Poset barycentric_subdivision(const SimplicialComplex& k);

// Rational Betti numbers b_0..b_max_degree via exact coboundary ranks.
std::vector<long> simplicial_betti(const SimplicialComplex& k, int max_degree);

struct ComparisonRow {
    int degree;
    long semigroup_rank;
    long simplicial_rank;
    bool match;
};

// Semigroup-cochain cohomology of the poset's interval semigroup against
// the Betti numbers of its nerve, degree by degree.  Degree 0 compares the
// kernel of the object-function coboundary (0 under cc0_zero).
std::vector<ComparisonRow> compare_poset_cohomology(const Poset& p, int max_degree,
                                                    bool cc0_zero = false);

}
