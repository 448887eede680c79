#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coherent/errors.hpp"

namespace coherent {

// Optional source/target structure on a semigroup with zero: a set of
// idempotent "object" elements together with start/end maps on the nonzero
// elements.  When present the table must satisfy
//   product(a, b) != 0  =>  end(a) == start(b),
//   product(a, b) = c != 0  =>  start(c) == start(a) and end(c) == end(b),
// and every object is idempotent with itself as start and end.
struct ObjectSpec {
    std::vector<std::string> objects;
    std::map<std::string, std::string> start;  // nonzero element -> object
    std::map<std::string, std::string> end;
};

// Finite semigroup with an absorbing zero, stored as a dense index table.
// Elements are held sorted lexicographically by identifier, so every
// enumeration derived from a table is deterministic.  Instances are
// immutable after construction and safe for concurrent reads.
class SemigroupTable {
public:
    static SemigroupTable from_table(
        const std::vector<std::string>& elements, const std::string& zero,
        const std::map<std::pair<std::string, std::string>, std::string>& product,
        const std::optional<ObjectSpec>& objects = std::nullopt);

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& element(int i) const { return elements_.at(i); }
    int index_of(const std::string& name) const;  // UnknownElement
    int zero() const { return zero_; }
    bool is_zero(int i) const { return i == zero_; }

    int product(int a, int b) const { return table_[a * elements_.size() + b]; }
    int product_of(const std::vector<int>& tuple) const;

    bool has_objects() const { return has_objects_; }
    // Object element indices, ascending.
    const std::vector<int>& object_indices() const;
    int start_of(int elem) const;  // object element index; elem nonzero
    int end_of(int elem) const;

    // All indices except the zero, ascending.
    std::vector<int> nonzero() const;

    // Tuples (a_1, ..., a_n) of nonzero elements with a_1 * ... * a_n != 0,
    // in lexicographic order of element indices.  guard > 0 caps the count
    // (TooLarge beyond it).
    std::vector<std::vector<int>> composable_tuples(int n, std::size_t guard = 0) const;

    // Subsemigroup on the named subset (the zero is always included).
    // NotClosed if some product escapes the subset.  Object structure is
    // kept when it restricts cleanly, dropped otherwise.
    SemigroupTable restrict_to(const std::vector<std::string>& subset) const;

    bool same_structure(const SemigroupTable& other) const;

private:
    SemigroupTable() = default;
    void validate() const;

    std::vector<std::string> elements_;  // sorted
    std::map<std::string, int> index_;
    int zero_ = -1;
    std::vector<int> table_;  // size * size products, row-major
    bool has_objects_ = false;
    std::vector<int> object_indices_;
    std::vector<int> start_;  // per element, -1 for zero
    std::vector<int> end_;
};

// Finite poset: identifiers plus the reflexive-transitive closure of the
// given relation pairs.  Antisymmetry violations raise InvalidPoset.
class Poset {
public:
    Poset(std::vector<std::string> elements,
          const std::vector<std::pair<std::string, std::string>>& relations);

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& element(int i) const { return elements_.at(i); }
    int index_of(const std::string& name) const;
    bool leq(int i, int j) const { return leq_[i * elements_.size() + j]; }

    // Pairs (i, j) with i <= j, lexicographic in element order.
    std::vector<std::pair<int, int>> pairs() const;

private:
    std::vector<std::string> elements_;  // sorted
    std::map<std::string, int> index_;
    std::vector<char> leq_;
};

struct QuiverArrow {
    std::string label, from, to;
};

// Directed multigraph; max_len bounds the path length kept before products
// truncate to zero.  Unbounded quivers must be acyclic (error: Infinite).
struct Quiver {
    std::vector<std::string> nodes;
    std::vector<QuiverArrow> arrows;
    std::optional<int> max_len;
};

// Elements e(i;j) for i <= j plus zero; e(i;j) * e(k;l) = e(i;l) when
// j == k, zero otherwise.  Objects are the e(i;i).
SemigroupTable poset_semigroup(const Poset& p);

// Paths of the quiver composed diagrammatically (first path, then second);
// identity paths e(v) are the objects.  With max_len set, concatenations
// longer than max_len are zero.
SemigroupTable quiver_path_semigroup(const Quiver& q);

// Commutative monomials in num_vars variables of total degree <= max_degree
// (the degree-0 unit included) plus zero; products exceeding max_degree
// truncate to zero.  The unit is the single object.
SemigroupTable monomial_semigroup(int num_vars, int max_degree);

// Identifier of the monomial with the given exponents, e.g. "x^2*y".
std::string monomial_name(const std::vector<int>& exponents);

}
