#include "excol/set_removal.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "excol/certified.hpp"

namespace excol {

void SetFamily::normalize() {
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
    }
}

void SetFamily::validate() const {
    if (delta < 0) throw ContractError("family: negative delta");
    for (const auto& m : members) {
        if (static_cast<int>(m.size()) > delta)
            throw ContractError("family: member larger than delta");
        for (int u : m)
            if (u < 0 || u >= universe_size)
                throw ContractError("family: element outside the universe");
    }
}

std::vector<int> SetFamily::element_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(universe_size), 0);
    for (const auto& m : members)
        for (int u : m) ++deg[static_cast<std::size_t>(u)];
    return deg;
}

int SetFamily::max_element_degree() const {
    int d = 0;
    for (int x : element_degrees()) d = std::max(d, x);
    return d;
}

namespace {

// Greedy scan keeping members whose elements outside `removed` are unused.
std::vector<int> greedy_disjoint_outside(const SetFamily& f, const std::vector<bool>& removed) {
    std::vector<int> kept;
    std::vector<bool> used(static_cast<std::size_t>(f.universe_size), false);
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        bool free = true;
        for (int u : f.members[i])
            if (!removed[static_cast<std::size_t>(u)] && used[static_cast<std::size_t>(u)]) {
                free = false;
                break;
            }
        if (!free) continue;
        kept.push_back(static_cast<int>(i));
        for (int u : f.members[i])
            if (!removed[static_cast<std::size_t>(u)]) used[static_cast<std::size_t>(u)] = true;
    }
    return kept;
}

}  // namespace

std::vector<int> greedy_disjoint(const SetFamily& f) {
    f.validate();
    std::vector<bool> removed(static_cast<std::size_t>(f.universe_size), false);
    return greedy_disjoint_outside(f, removed);
}

BigInt removal_threshold_count(const Rational& c, int delta) {
    if (c <= 0) throw ContractError("removal: C must be positive");
    if (delta < 1) throw ContractError("removal: delta must be at least 1");
    return floor_exp(Rational(1) + c * delta * delta);
}

Rational removal_rho_lower_bound(const Rational& c, int delta) {
    if (c <= 0) throw ContractError("removal: C must be positive");
    if (delta < 1) throw ContractError("removal: delta must be at least 1");
    Rational m = Rational(1) + c * delta * delta;
    // hi strictly exceeds the irrational e^m, so 1/(delta*hi) sits strictly
    // below the true constant
    RatInterval enc = exp_enclosure(m, 64);
    return Rational(1) / (delta * enc.hi);
}

RemovalResult removal_lemma(const SetFamily& f, const Rational& c) {
    f.validate();
    if (f.members.empty()) throw ContractError("removal: empty family");
    if (c <= 0) throw ContractError("removal: C must be positive");
    if (f.delta < 1) throw ContractError("removal: delta must be at least 1");

    std::vector<int> deg = f.element_degrees();
    int max_deg = 0;
    for (int d : deg) max_deg = std::max(max_deg, d);

    // Thresholds beyond the maximum degree remove nothing, so every d in
    // (max_deg, D] scores exactly like d = max_deg and the scan stops there.
    Rational m = Rational(1) + c * f.delta * f.delta;
    std::int64_t scan_to;
    RatInterval lnmax = ln_enclosure(Rational(std::max(max_deg, 1) + 1), 32);
    if (m > lnmax.hi) {
        scan_to = std::max(max_deg, 1);  // D >= max_deg + 1 without computing D
    } else {
        BigInt d_cap = removal_threshold_count(c, f.delta);
        scan_to = d_cap < std::max(max_deg, 1) ? static_cast<std::int64_t>(d_cap)
                                               : std::max(max_deg, 1);
    }

    std::vector<int> best_kept;
    std::vector<bool> best_removed;
    Rational best_score;
    std::int64_t best_d = 0;
    std::vector<bool> removed(static_cast<std::size_t>(f.universe_size), false);
    for (std::int64_t d = 1; d <= scan_to; ++d) {
        long long removed_count = 0;
        for (int u = 0; u < f.universe_size; ++u) {
            removed[static_cast<std::size_t>(u)] = deg[static_cast<std::size_t>(u)] > d;
            if (removed[static_cast<std::size_t>(u)]) ++removed_count;
        }
        std::vector<int> kept = greedy_disjoint_outside(f, removed);
        Rational score = Rational(static_cast<long long>(kept.size())) - c * removed_count;
        if (best_d == 0 || score > best_score) {
            best_score = score;
            best_d = d;
            best_kept = std::move(kept);
            best_removed = removed;
        }
    }

    RemovalResult out;
    out.kept = std::move(best_kept);
    out.threshold_used = best_d;
    for (int u = 0; u < f.universe_size; ++u)
        if (best_removed[static_cast<std::size_t>(u)]) out.removed_universe.push_back(u);
    out.rho_bound = removal_rho_lower_bound(c, f.delta);
    return out;
}

bool removal_certificate_holds(const SetFamily& f, const Rational& c, const RemovalResult& r) {
    // bullet 1: |F'| > rho |F| + C |U'|
    Rational lhs(static_cast<long long>(r.kept.size()));
    Rational rhs = r.rho_bound * static_cast<long long>(f.members.size()) +
                   c * static_cast<long long>(r.removed_universe.size());
    if (!(lhs > rhs)) return false;
    // bullet 2: pairwise disjoint outside U'
    std::vector<bool> removed(static_cast<std::size_t>(f.universe_size), false);
    for (int u : r.removed_universe) removed[static_cast<std::size_t>(u)] = true;
    std::vector<int> owner(static_cast<std::size_t>(f.universe_size), -1);
    for (int idx : r.kept) {
        for (int u : f.members[static_cast<std::size_t>(idx)]) {
            if (removed[static_cast<std::size_t>(u)]) continue;
            if (owner[static_cast<std::size_t>(u)] >= 0) return false;
            owner[static_cast<std::size_t>(u)] = idx;
        }
    }
    return true;
}

SetFamily hard_instance(int c, int delta, int n) {
    if (c < 1 || delta < 1 || n < 1)
        throw ContractError("hard_instance: C, delta, n must all be at least 1");
    const int arity = c + 1;
    // nodes of the complete (C+1)-ary tree with Delta levels (depth Delta-1)
    long long per_level = 1;
    long long tree_nodes = 0;
    std::vector<long long> level_start(static_cast<std::size_t>(delta));
    for (int lev = 0; lev < delta; ++lev) {
        level_start[static_cast<std::size_t>(lev)] = tree_nodes;
        tree_nodes += per_level;
        per_level *= arity;
    }
    long long leaves = 1;
    for (int lev = 0; lev < delta - 1; ++lev) leaves *= arity;

    SetFamily f;
    f.delta = delta;
    f.universe_size = static_cast<int>(tree_nodes * n);
    for (int copy = 0; copy < n; ++copy) {
        long long base = tree_nodes * copy;
        for (long long leaf = 0; leaf < leaves; ++leaf) {
            // digits of `leaf` in base (C+1) give the child path root-to-leaf
            std::vector<int> path;
            long long node_in_level = 0;
            path.push_back(static_cast<int>(base + level_start[0]));
            long long rest = leaf;
            long long digits_div = leaves;
            for (int lev = 1; lev < delta; ++lev) {
                digits_div /= arity;
                long long digit = rest / digits_div;
                rest %= digits_div;
                node_in_level = node_in_level * arity + digit;
                path.push_back(static_cast<int>(base + level_start[static_cast<std::size_t>(lev)] +
                                                node_in_level));
            }
            for (int copy_of_path = 0; copy_of_path < arity; ++copy_of_path)
                f.members.push_back(path);
        }
    }
    f.normalize();
    f.validate();
    return f;
}

SetFamily load_family(std::istream& in) {
    SetFamily f;
    std::string line;
    int lineno = 0;
    long long count = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (count < 0) {
            std::string first;
            if (!(ls >> first)) continue;
            if (first == "c") continue;
            std::istringstream header(line);
            long long uni = -1, del = -1;
            if (!(header >> uni >> count >> del) || uni < 0 || count < 0 || del < 0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected \"universe_size count delta\"");
            f.universe_size = static_cast<int>(uni);
            f.delta = static_cast<int>(del);
            continue;
        }
        if (static_cast<long long>(f.members.size()) >= count) break;
        std::vector<int> m;
        long long u;
        while (ls >> u) m.push_back(static_cast<int>(u));
        f.members.push_back(std::move(m));
    }
    if (count < 0) throw ParseError("missing family header");
    if (static_cast<long long>(f.members.size()) != count)
        throw ParseError("family: fewer sets than declared");
    f.normalize();
    f.validate();
    return f;
}

SetFamily load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open family file: " + path);
    return load_family(in);
}

std::string emit_family(const SetFamily& f) {
    std::ostringstream out;
    out << f.universe_size << ' ' << f.members.size() << ' ' << f.delta << '\n';
    for (const auto& m : f.members) {
        for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << m[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace excol
