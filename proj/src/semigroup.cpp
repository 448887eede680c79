#include "coherent/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace coherent {

namespace {

void check_identifier(const std::string& id) {
    if (id.empty())
        throw DomainError("BadIdentifier", "element identifiers must be nonempty");
    if (id.find(',') != std::string::npos)
        throw DomainError("BadIdentifier",
                          "element identifiers must not contain commas",
                          {{"id", id}});
}

constexpr std::size_t kMaxElements = 4096;

}  // namespace

SemigroupTable SemigroupTable::from_table(
    const std::vector<std::string>& elements, const std::string& zero,
    const std::map<std::pair<std::string, std::string>, std::string>& product,
    const std::optional<ObjectSpec>& objects) {
    SemigroupTable s;
    s.elements_ = elements;
    std::sort(s.elements_.begin(), s.elements_.end());
    if (s.elements_.size() > kMaxElements)
        throw DomainError("TooLarge", "semigroup exceeds the element guard",
                          {{"elements", std::to_string(s.elements_.size())},
                           {"guard", std::to_string(kMaxElements)}});
    for (std::size_t i = 0; i < s.elements_.size(); ++i) {
        check_identifier(s.elements_[i]);
        if (i > 0 && s.elements_[i] == s.elements_[i - 1])
            throw DomainError("DuplicateElement", "duplicate element identifier",
                              {{"id", s.elements_[i]}});
        s.index_[s.elements_[i]] = static_cast<int>(i);
    }
    auto zit = s.index_.find(zero);
    if (zit == s.index_.end())
        throw DomainError("UnknownElement", "zero is not among the elements",
                          {{"id", zero}});
    s.zero_ = zit->second;

    const int n = s.size();
    s.table_.assign(static_cast<std::size_t>(n) * n, -1);
    for (const auto& [pair, result] : product) {
        auto a = s.index_.find(pair.first);
        auto b = s.index_.find(pair.second);
        auto c = s.index_.find(result);
        if (a == s.index_.end() || b == s.index_.end() || c == s.index_.end())
            throw DomainError("UnknownElement", "product entry names an unknown element",
                              {{"left", pair.first},
                               {"right", pair.second},
                               {"result", result}});
        s.table_[a->second * n + b->second] = c->second;
    }
    // Products with the zero are forced by absorption, so missing entries
    // in the zero row/column are filled in; all other pairs must be given.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (s.table_[a * n + b] < 0) {
                if (a == s.zero_ || b == s.zero_)
                    s.table_[a * n + b] = s.zero_;
                else
                    throw DomainError("MissingProduct", "product table is not total",
                                      {{"left", s.elements_[a]}, {"right", s.elements_[b]}});
            }

    if (objects) {
        s.has_objects_ = true;
        s.start_.assign(n, -1);
        s.end_.assign(n, -1);
        for (const auto& name : objects->objects) {
            auto it = s.index_.find(name);
            if (it == s.index_.end())
                throw DomainError("UnknownElement", "object is not an element",
                                  {{"id", name}});
            s.object_indices_.push_back(it->second);
        }
        std::sort(s.object_indices_.begin(), s.object_indices_.end());
        auto resolve = [&](const std::map<std::string, std::string>& m,
                           std::vector<int>& out, const char* what) {
            for (const auto& [elem, obj] : m) {
                auto e = s.index_.find(elem);
                auto o = s.index_.find(obj);
                if (e == s.index_.end() || o == s.index_.end())
                    throw DomainError("UnknownElement",
                                      std::string(what) + " map names an unknown element",
                                      {{"element", elem}, {"object", obj}});
                if (!std::binary_search(s.object_indices_.begin(),
                                        s.object_indices_.end(), o->second))
                    throw DomainError("ObjectStructureViolation",
                                      std::string(what) + " of an element must be an object",
                                      {{"element", elem}, {"object", obj}});
                out[e->second] = o->second;
            }
        };
        resolve(objects->start, s.start_, "start");
        resolve(objects->end, s.end_, "end");
        for (int i = 0; i < n; ++i) {
            if (i == s.zero_) continue;
            if (s.start_[i] < 0 || s.end_[i] < 0)
                throw DomainError("ObjectStructureViolation",
                                  "every nonzero element needs a start and an end",
                                  {{"element", s.elements_[i]}});
        }
    }

    s.validate();
    return s;
}

void SemigroupTable::validate() const {
    const int n = size();
    const int z = zero_;
    for (int a = 0; a < n; ++a) {
        if (table_[a * n + z] != z || table_[z * n + a] != z)
            throw DomainError("ZeroNotAbsorbing", "zero must absorb every element",
                              {{"element", elements_[a]}});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = table_[a * n + b];
            for (int c = 0; c < n; ++c) {
                if (table_[ab * n + c] != table_[a * n + table_[b * n + c]])
                    throw DomainError("AssociativityViolation",
                                      "product table is not associative",
                                      {{"a", elements_[a]},
                                       {"b", elements_[b]},
                                       {"c", elements_[c]}});
            }
        }
    if (has_objects_) {
        for (int e : object_indices_) {
            if (e == z)
                throw DomainError("ObjectStructureViolation", "zero cannot be an object");
            if (table_[e * n + e] != e || start_[e] != e || end_[e] != e)
                throw DomainError("ObjectStructureViolation",
                                  "objects must be idempotent with themselves as start and end",
                                  {{"object", elements_[e]}});
        }
        for (int a = 0; a < n; ++a) {
            if (a == z) continue;
            for (int b = 0; b < n; ++b) {
                if (b == z) continue;
                const int ab = table_[a * n + b];
                if (end_[a] != start_[b]) {
                    if (ab != z)
                        throw DomainError("ObjectStructureViolation",
                                          "nonzero product with mismatched end/start",
                                          {{"left", elements_[a]}, {"right", elements_[b]}});
                } else if (ab != z) {
                    if (start_[ab] != start_[a] || end_[ab] != end_[b])
                        throw DomainError("ObjectStructureViolation",
                                          "products must propagate start and end",
                                          {{"left", elements_[a]}, {"right", elements_[b]}});
                }
            }
        }
    }
}

int SemigroupTable::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw DomainError("UnknownElement", "no such element", {{"id", name}});
    return it->second;
}

int SemigroupTable::product_of(const std::vector<int>& tuple) const {
    if (tuple.empty())
        throw DomainError("IndexOutOfRange", "cannot multiply an empty tuple");
    int acc = tuple[0];
    for (std::size_t i = 1; i < tuple.size(); ++i) acc = product(acc, tuple[i]);
    return acc;
}

const std::vector<int>& SemigroupTable::object_indices() const {
    if (!has_objects_)
        throw DomainError("Degree0WithoutObjects", "semigroup carries no object structure");
    return object_indices_;
}

int SemigroupTable::start_of(int elem) const {
    if (!has_objects_)
        throw DomainError("Degree0WithoutObjects", "semigroup carries no object structure");
    return start_.at(elem);
}

int SemigroupTable::end_of(int elem) const {
    if (!has_objects_)
        throw DomainError("Degree0WithoutObjects", "semigroup carries no object structure");
    return end_.at(elem);
}

std::vector<int> SemigroupTable::nonzero() const {
    std::vector<int> out;
    out.reserve(size() - 1);
    for (int i = 0; i < size(); ++i)
        if (i != zero_) out.push_back(i);
    return out;
}

std::vector<std::vector<int>> SemigroupTable::composable_tuples(
    int n, std::size_t guard) const {
    if (n < 1)
        throw DomainError("IndexOutOfRange", "tuple length must be at least 1",
                          {{"n", std::to_string(n)}});
    std::vector<std::vector<int>> out;
    std::vector<int> tuple;
    // The zero is absorbing, so a zero running product can never recover;
    // pruning on it keeps the search exact.
    std::function<void(int, int)> extend = [&](int depth, int running) {
        if (depth == n) {
            if (guard > 0 && out.size() >= guard)
                throw DomainError("TooLarge", "composable tuple enumeration exceeds guard",
                                  {{"n", std::to_string(n)},
                                   {"guard", std::to_string(guard)}});
            out.push_back(tuple);
            return;
        }
        for (int e = 0; e < size(); ++e) {
            if (e == zero_) continue;
            const int next = depth == 0 ? e : product(running, e);
            if (next == zero_) continue;
            tuple.push_back(e);
            extend(depth + 1, next);
            tuple.pop_back();
        }
    };
    extend(0, -1);
    return out;
}

SemigroupTable SemigroupTable::restrict_to(const std::vector<std::string>& subset) const {
    std::set<int> keep;
    keep.insert(zero_);
    for (const auto& name : subset) keep.insert(index_of(name));
    for (int a : keep)
        for (int b : keep)
            if (!keep.count(product(a, b)))
                throw DomainError("NotClosed", "subset is not closed under the product",
                                  {{"left", elements_[a]},
                                   {"right", elements_[b]},
                                   {"product", elements_[product(a, b)]}});

    std::vector<std::string> elems;
    for (int i : keep) elems.push_back(elements_[i]);
    std::map<std::pair<std::string, std::string>, std::string> prod;
    for (int a : keep)
        for (int b : keep)
            prod[{elements_[a], elements_[b]}] = elements_[product(a, b)];

    std::optional<ObjectSpec> objs;
    if (has_objects_) {
        // Keep the object structure only when it restricts cleanly: every
        // retained element must have both endpoints retained as objects.
        bool clean = true;
        std::set<int> kept_objects;
        for (int i : keep)
            if (i != zero_ && std::binary_search(object_indices_.begin(),
                                                 object_indices_.end(), i))
                kept_objects.insert(i);
        for (int i : keep) {
            if (i == zero_) continue;
            if (!kept_objects.count(start_[i]) || !kept_objects.count(end_[i])) {
                clean = false;
                break;
            }
        }
        if (clean && !kept_objects.empty()) {
            ObjectSpec spec;
            for (int o : kept_objects) spec.objects.push_back(elements_[o]);
            for (int i : keep) {
                if (i == zero_) continue;
                spec.start[elements_[i]] = elements_[start_[i]];
                spec.end[elements_[i]] = elements_[end_[i]];
            }
            objs = std::move(spec);
        }
    }
    return from_table(elems, elements_[zero_], prod, objs);
}

bool SemigroupTable::same_structure(const SemigroupTable& other) const {
    if (this == &other) return true;
    return elements_ == other.elements_ && zero_ == other.zero_ &&
           table_ == other.table_ && has_objects_ == other.has_objects_ &&
           object_indices_ == other.object_indices_ && start_ == other.start_ &&
           end_ == other.end_;
}

Poset::Poset(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& relations)
    : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        check_identifier(elements_[i]);
        if (i > 0 && elements_[i] == elements_[i - 1])
            throw DomainError("DuplicateElement", "duplicate poset element",
                              {{"id", elements_[i]}});
        index_[elements_[i]] = static_cast<int>(i);
    }
    const int n = size();
    leq_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) leq_[i * n + i] = 1;
    for (const auto& [a, b] : relations) {
        auto ia = index_.find(a), ib = index_.find(b);
        if (ia == index_.end() || ib == index_.end())
            throw DomainError("UnknownElement", "relation names an unknown element",
                              {{"left", a}, {"right", b}});
        leq_[ia->second * n + ib->second] = 1;
    }
    // Warshall transitive closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq_[i * n + k])
                for (int j = 0; j < n; ++j)
                    if (leq_[k * n + j]) leq_[i * n + j] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (leq_[i * n + j] && leq_[j * n + i])
                throw DomainError("InvalidPoset", "relation closure is not antisymmetric",
                                  {{"a", elements_[i]}, {"b", elements_[j]}});
}

int Poset::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw DomainError("UnknownElement", "no such poset element", {{"id", name}});
    return it->second;
}

std::vector<std::pair<int, int>> Poset::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (leq(i, j)) out.emplace_back(i, j);
    return out;
}

SemigroupTable poset_semigroup(const Poset& p) {
    // e(i;j) rather than e(i,j): commas are reserved for product-table keys.
    auto interval_name = [&](int i, int j) {
        return "e(" + p.element(i) + ";" + p.element(j) + ")";
    };
    std::vector<std::string> elems{"0"};
    std::map<std::pair<int, int>, std::string> name_of;
    for (auto [i, j] : p.pairs()) {
        std::string name = interval_name(i, j);
        name_of[{i, j}] = name;
        elems.push_back(name);
    }
    std::map<std::pair<std::string, std::string>, std::string> prod;
    for (auto [i, j] : p.pairs())
        for (auto [k, l] : p.pairs()) {
            std::string result = "0";
            if (j == k && p.leq(i, l)) result = name_of.at({i, l});
            prod[{name_of.at({i, j}), name_of.at({k, l})}] = result;
        }
    ObjectSpec objs;
    for (int i = 0; i < p.size(); ++i) objs.objects.push_back(name_of.at({i, i}));
    for (auto [i, j] : p.pairs()) {
        objs.start[name_of.at({i, j})] = name_of.at({i, i});
        objs.end[name_of.at({i, j})] = name_of.at({j, j});
    }
    return SemigroupTable::from_table(elems, "0", prod, objs);
}

SemigroupTable quiver_path_semigroup(const Quiver& q) {
    std::map<std::string, int> node_index;
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        check_identifier(q.nodes[i]);
        if (!node_index.emplace(q.nodes[i], static_cast<int>(i)).second)
            throw DomainError("DuplicateElement", "duplicate quiver node",
                              {{"id", q.nodes[i]}});
    }
    std::set<std::string> labels;
    for (const auto& a : q.arrows) {
        check_identifier(a.label);
        if (!labels.insert(a.label).second)
            throw DomainError("DuplicateElement", "duplicate arrow label",
                              {{"id", a.label}});
        if (!node_index.count(a.from) || !node_index.count(a.to))
            throw DomainError("UnknownElement", "arrow endpoint is not a node",
                              {{"label", a.label}});
    }
    if (q.max_len && *q.max_len < 0)
        throw DomainError("IndexOutOfRange", "max_len must be nonnegative");

    if (!q.max_len) {
        // Unbounded path semigroups exist only for acyclic quivers.
        const int n = static_cast<int>(q.nodes.size());
        std::vector<int> color(n, 0);
        std::vector<std::vector<int>> adj(n);
        for (const auto& a : q.arrows)
            adj[node_index[a.from]].push_back(node_index[a.to]);
        std::function<void(int)> dfs = [&](int v) {
            color[v] = 1;
            for (int w : adj[v]) {
                if (color[w] == 1)
                    throw DomainError("Infinite",
                                      "cyclic quiver without max_len has infinitely many paths");
                if (color[w] == 0) dfs(w);
            }
            color[v] = 2;
        };
        for (int v = 0; v < n; ++v)
            if (color[v] == 0) dfs(v);
    }

    struct Path {
        std::vector<int> arrows;  // indices into q.arrows
        int from, to;
    };
    std::vector<Path> paths;
    for (std::size_t v = 0; v < q.nodes.size(); ++v)
        paths.push_back({{}, static_cast<int>(v), static_cast<int>(v)});
    // Breadth-first extension by one arrow; bounded either by max_len or,
    // in the acyclic case, by the impossibility of repeating a node.
    std::size_t frontier_begin = 0;
    int length = 0;
    while (frontier_begin < paths.size()) {
        const std::size_t frontier_end = paths.size();
        ++length;
        if (q.max_len && length > *q.max_len) break;
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                if (node_index[q.arrows[a].from] != paths[i].to) continue;
                Path ext = paths[i];
                ext.arrows.push_back(static_cast<int>(a));
                ext.to = node_index[q.arrows[a].to];
                paths.push_back(std::move(ext));
                if (paths.size() > kMaxElements)
                    throw DomainError("TooLarge", "quiver has too many paths",
                                      {{"guard", std::to_string(kMaxElements)}});
            }
        }
        frontier_begin = frontier_end;
    }

    auto path_name = [&](const Path& p) -> std::string {
        if (p.arrows.empty()) return "e(" + q.nodes[p.from] + ")";
        std::string s;
        for (std::size_t i = 0; i < p.arrows.size(); ++i) {
            if (i) s += "*";
            s += q.arrows[p.arrows[i]].label;
        }
        return s;
    };

    std::vector<std::string> elems{"0"};
    std::map<std::string, const Path*> by_name;
    for (const auto& p : paths) {
        std::string name = path_name(p);
        if (name == "0" || !by_name.emplace(name, &p).second)
            throw DomainError("DuplicateElement", "path identifiers collide",
                              {{"id", name}});
        elems.push_back(name);
    }
    std::map<std::pair<std::string, std::string>, std::string> prod;
    for (const auto& a : paths)
        for (const auto& b : paths) {
            std::string result = "0";
            if (a.to == b.from) {
                const int total = static_cast<int>(a.arrows.size() + b.arrows.size());
                if (!q.max_len || total <= *q.max_len) {
                    Path c{a.arrows, a.from, b.to};
                    c.arrows.insert(c.arrows.end(), b.arrows.begin(), b.arrows.end());
                    result = path_name(c);
                }
            }
            prod[{path_name(a), path_name(b)}] = result;
        }
    ObjectSpec objs;
    for (const auto& node : q.nodes) objs.objects.push_back("e(" + node + ")");
    for (const auto& p : paths) {
        objs.start[path_name(p)] = "e(" + q.nodes[p.from] + ")";
        objs.end[path_name(p)] = "e(" + q.nodes[p.to] + ")";
    }
    return SemigroupTable::from_table(elems, "0", prod, objs);
}

std::string monomial_name(const std::vector<int>& exponents) {
    static const char* kShort[] = {"x", "y", "z"};
    const bool short_names = exponents.size() <= 3;
    std::string s;
    for (std::size_t v = 0; v < exponents.size(); ++v) {
        if (exponents[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += short_names ? kShort[v] : "x" + std::to_string(v + 1);
        if (exponents[v] > 1) s += "^" + std::to_string(exponents[v]);
    }
    return s.empty() ? "1" : s;
}

SemigroupTable monomial_semigroup(int num_vars, int max_degree) {
    if (num_vars < 1 || max_degree < 0)
        throw DomainError("IndexOutOfRange",
                          "need at least one variable and a nonnegative degree bound");
    std::vector<std::vector<int>> monos;
    std::vector<int> exps(num_vars, 0);
    std::function<void(int, int)> gen = [&](int var, int left) {
        if (var == num_vars) {
            monos.push_back(exps);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exps[var] = e;
            gen(var + 1, left - e);
        }
        exps[var] = 0;
    };
    gen(0, max_degree);
    if (monos.size() + 1 > kMaxElements)
        throw DomainError("TooLarge", "too many monomials",
                          {{"guard", std::to_string(kMaxElements)}});

    auto degree = [](const std::vector<int>& m) {
        return std::accumulate(m.begin(), m.end(), 0);
    };
    std::vector<std::string> elems{"0"};
    for (const auto& m : monos) elems.push_back(monomial_name(m));
    std::map<std::pair<std::string, std::string>, std::string> prod;
    for (const auto& a : monos)
        for (const auto& b : monos) {
            std::vector<int> c(num_vars);
            for (int v = 0; v < num_vars; ++v) c[v] = a[v] + b[v];
            const bool fits = degree(c) <= max_degree;
            prod[{monomial_name(a), monomial_name(b)}] =
                fits ? monomial_name(c) : "0";
        }
    ObjectSpec objs;
    objs.objects.push_back("1");
    for (const auto& m : monos) {
        objs.start[monomial_name(m)] = "1";
        objs.end[monomial_name(m)] = "1";
    }
    return SemigroupTable::from_table(elems, "0", prod, objs);
}

}
