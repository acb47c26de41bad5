#include "ihara/graph_enum.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "ihara/errors.hpp"

namespace ihara {

namespace {

// Branch and bound over degree-respecting labelings. Entries are emitted
// column by column ((0,0), (0,1), (1,1), (0,2), ...) so that a prefix is
// fixed as soon as the first j+1 positions are assigned.
class KeySearch {
public:
    explicit KeySearch(const Multigraph& g) : g_(g), n_(g.n_vertices()) {
        auto deg = g.degrees();
        order_.resize(n_);
        for (int v = 0; v < n_; ++v) order_[v] = v;
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return deg[a] > deg[b]; });
        for (int v : order_) sorted_degrees_.push_back(deg[v]);
        used_.assign(n_, false);
        assigned_.assign(n_, -1);
        current_.reserve(std::size_t(n_) * (n_ + 1) / 2);
    }

    std::vector<int> run() {
        search(0);
        std::vector<int> key;
        key.reserve(1 + n_ + best_.size());
        key.push_back(n_);
        key.insert(key.end(), sorted_degrees_.begin(), sorted_degrees_.end());
        key.insert(key.end(), best_.begin(), best_.end());
        return key;
    }

private:
    int entry(int i, int j) const {
        int a = assigned_[i], b = assigned_[j];
        return a == b ? g_.loops(a) : g_.multiplicity(a, b);
    }

    // Prefix of current_ compared with the same-length prefix of best_; the
    // best may have changed since the parent compared, so no flag is cached.
    bool prefix_above_best() const {
        if (!have_best_) return false;
        return std::lexicographical_compare(best_.begin(), best_.begin() + current_.size(), current_.begin(),
                                            current_.end());
    }

    void search(int pos) {
        if (pos == n_) {
            if (!have_best_ || current_ < best_) {
                best_ = current_;
                have_best_ = true;
            }
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            if (g_.degree(v) != sorted_degrees_[pos]) continue;
            used_[v] = true;
            assigned_[pos] = v;
            const std::size_t start = current_.size();
            for (int i = 0; i <= pos; ++i) current_.push_back(entry(i, pos));
            if (!prefix_above_best()) search(pos + 1);
            current_.resize(start);
            used_[v] = false;
            assigned_[pos] = -1;
        }
    }

    const Multigraph& g_;
    int n_;
    std::vector<int> order_;
    std::vector<int> sorted_degrees_;
    std::vector<bool> used_;
    std::vector<int> assigned_;
    std::vector<int> current_;
    std::vector<int> best_;
    bool have_best_ = false;
};

struct Slot {
    int i, j;
};

// Assigns multiplicities slot by slot in row order (i, i), (i, i+1), ...,
// (i, n-1), so vertex i is complete after its last slot. Labelings are
// restricted to non-increasing degree sequences.
class Enumerator {
public:
    Enumerator(const EnumerationOptions& o, int n)
        : opt_(o), n_(n), loops_(n, 0), mult_(std::size_t(n) * n, 0), degree_(n, 0) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) slots_.push_back({i, j});
    }

    template <class Sink>
    void run(Sink&& sink) {
        recurse(0, opt_.max_edges, sink);
    }

private:
    bool complete_ok(int i) const {
        if (degree_[i] < opt_.min_degree) return false;
        if (opt_.connected && n_ > 1 && degree_[i] == 2 * loops_[i]) return false;
        return true;
    }

    bool budget_ok(int from, int budget) const {
        int deficit = 0;
        for (int v = from; v < n_; ++v) deficit += std::max(0, opt_.min_degree - degree_[v]);
        return deficit <= 2 * budget;
    }

    void apply(int i, int j, int c) {
        if (i == j) {
            loops_[i] += c;
            degree_[i] += 2 * c;
        } else {
            mult_[std::size_t(i) * n_ + j] += c;
            degree_[i] += c;
            degree_[j] += c;
        }
    }

    template <class Sink>
    void recurse(std::size_t s, int budget, Sink& sink) {
        if (s == slots_.size()) {
            if (opt_.max_edges - budget < opt_.min_edges) return;
            Multigraph g(n_);
            for (int a = 0; a < n_; ++a) {
                if (loops_[a]) g.add_edge(a, a, loops_[a]);
                for (int b = a + 1; b < n_; ++b)
                    if (int m = mult_[std::size_t(a) * n_ + b]) g.add_edge(a, b, m);
            }
            sink(g);
            return;
        }
        const auto [i, j] = slots_[s];
        int cap = budget;
        if (i == j && !opt_.allow_loops) cap = 0;
        if (!opt_.allow_multi_edges) cap = std::min(cap, 1);
        for (int c = 0; c <= cap; ++c) {
            apply(i, j, c);
            if (i > 0 && degree_[i] > degree_[i - 1]) {
                apply(i, j, -c);
                break;
            }
            bool ok = budget_ok(i, budget - c);
            if (ok && j == n_ - 1) ok = complete_ok(i);
            if (ok) recurse(s + 1, budget - c, sink);
            apply(i, j, -c);
        }
    }

    const EnumerationOptions& opt_;
    int n_;
    std::vector<Slot> slots_;
    std::vector<int> loops_;
    std::vector<int> mult_;
    std::vector<int> degree_;
};

} // namespace

std::vector<int> canonical_key(const Multigraph& g) { return KeySearch(g).run(); }

bool isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.n_vertices() != b.n_vertices() || a.n_edges() != b.n_edges()) return false;
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_key(a) == canonical_key(b);
}

std::vector<Multigraph> enumerate_multigraphs(const EnumerationOptions& options) {
    if (options.max_edges < 0) throw InputError("max_edges must be non-negative");
    int max_vertices = options.max_edges + 1;
    if (options.min_degree >= 2) max_vertices = options.max_edges;
    else if (options.min_degree == 1 && !options.connected) max_vertices = 2 * options.max_edges;

    std::map<std::tuple<int, int, std::vector<int>>, Multigraph> classes;
    for (int n = 1; n <= max_vertices; ++n) {
        Enumerator e(options, n);
        e.run([&](const Multigraph& g) {
            if (options.connected && !structural_report(g).connected) return;
            auto key = canonical_key(g);
            classes.try_emplace({g.n_edges(), n, std::move(key)}, g);
        });
    }
    std::vector<Multigraph> out;
    out.reserve(classes.size());
    for (auto& [key, g] : classes) out.push_back(std::move(g));
    return out;
}

} // namespace ihara
