#include "gl6/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "gl6/error.hpp"

namespace gl6 {

GroupPtr FiniteGroup::from_table(std::string name, const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n < 1) throw InconsistentInput("group table is empty");
    if (n > kMaxGroupOrder)
        throw InconsistentInput("group order " + std::to_string(n) + " exceeds " + std::to_string(kMaxGroupOrder));
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n)
            throw InconsistentInput("row " + std::to_string(a) + " has " + std::to_string(table[a].size()) +
                                    " entries, expected " + std::to_string(n));
        for (int x : table[a])
            if (x < 0 || x >= n) throw InconsistentInput("table entry " + std::to_string(x) + " out of range");
    }
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = table[a][x] == x && table[x][a] == x;
        if (ok) e = a;
    }
    if (e < 0) throw InconsistentInput("table has no identity element");

    std::vector<int> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::swap(relabel[0], relabel[e]);  // an involution

    std::shared_ptr<FiniteGroup> g(new FiniteGroup);
    g->name_ = std::move(name);
    g->n_ = n;
    g->table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g->table_[static_cast<std::size_t>(a) * n + b] =
                static_cast<std::uint16_t>(relabel[table[relabel[a]][relabel[b]]]);

    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int x = g->mul(a, b);
            if (seen[x]++) throw InconsistentInput("row " + std::to_string(a) + " repeats an entry");
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int x = g->mul(b, a);
            if (seen[x]++) throw InconsistentInput("column " + std::to_string(a) + " repeats an entry");
        }
    }
    auto assoc = [&](int a, int b, int c) {
        if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
            throw InconsistentInput("multiplication is not associative at (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ", " + std::to_string(c) + ")");
    };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) assoc(a, b, c);
    } else {
        std::mt19937_64 rng(0x6c36);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 200000; ++t) assoc(pick(rng), pick(rng), pick(rng));
    }
    g->analyze();
    return g;
}

void FiniteGroup::analyze() {
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0) {
                inv_[a] = b;
                break;
            }

    elem_order_.assign(n_, 0);
    exponent_ = 1;
    for (int a = 0; a < n_; ++a) {
        int k = 1;
        for (int x = a; x != 0; x = mul(x, a)) ++k;
        elem_order_[a] = a == 0 ? 1 : k;
        exponent_ = std::lcm(exponent_, elem_order_[a]);
    }

    std::vector<int> by_order(n_);
    std::iota(by_order.begin(), by_order.end(), 0);
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](int a, int b) { return elem_order_[a] > elem_order_[b]; });
    std::vector<char> in_h(n_, 0);
    in_h[0] = 1;
    std::vector<int> h{0};
    for (int cand : by_order) {
        if (static_cast<int>(h.size()) == n_) break;
        if (in_h[cand]) continue;
        gens_.push_back(cand);
        for (std::size_t i = 0; i < h.size(); ++i)
            for (int s : gens_) {
                int x = mul(h[i], s);
                if (!in_h[x]) {
                    in_h[x] = 1;
                    h.push_back(x);
                }
            }
    }

    class_of_.assign(n_, -1);
    for (int g = 0; g < n_; ++g) {
        if (class_of_[g] >= 0) continue;
        const int c = static_cast<int>(classes_.size());
        ConjugacyClass cls;
        cls.representative = g;
        cls.members.push_back(g);
        class_of_[g] = c;
        for (std::size_t i = 0; i < cls.members.size(); ++i)
            for (int s : gens_) {
                int x = mul(mul(s, cls.members[i]), inv_[s]);
                if (class_of_[x] < 0) {
                    class_of_[x] = c;
                    cls.members.push_back(x);
                }
            }
        std::sort(cls.members.begin(), cls.members.end());
        classes_.push_back(std::move(cls));
    }
}

int FiniteGroup::power(int g, std::int64_t k) const {
    const int o = elem_order_[g];
    k %= o;
    if (k < 0) k += o;
    int result = 0, base = g;
    while (k) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

const TableRows& FiniteGroup::character_table() const {
    std::call_once(table_once_, [this] { table_rows_ = compute_character_table(*this); });
    return table_rows_;
}

void FiniteGroup::check_supplied_table(TableRows rows) const {
    if (static_cast<int>(rows.size()) != num_classes())
        throw InconsistentInput("supplied table has " + std::to_string(rows.size()) + " rows, group has " +
                                std::to_string(num_classes()) + " classes");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != num_classes())
            throw InconsistentInput("supplied table row has the wrong number of columns");
    sort_table_rows(rows);
    const auto& mine = character_table();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (!(rows[i][j] == mine[i][j]))
                throw InconsistentInput("supplied character table disagrees with the computed one (row " +
                                        std::to_string(i) + ", class " + std::to_string(j) + ")");
}

bool FiniteGroup::is_abelian() const { return num_classes() == n_; }

Subgroup Subgroup::generated(const GroupPtr& parent, const std::vector<int>& gens, std::string name) {
    std::vector<char> in(parent->order(), 0);
    std::vector<int> h{0};
    in[0] = 1;
    for (std::size_t i = 0; i < h.size(); ++i)
        for (int s : gens) {
            int x = parent->mul(h[i], s);
            if (!in[x]) {
                in[x] = 1;
                h.push_back(x);
            }
        }
    return from_members(parent, std::move(h), std::move(name));
}

Subgroup Subgroup::from_members(const GroupPtr& parent, std::vector<int> members, std::string name) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members[0] != 0) throw InconsistentInput("subgroup must contain the identity");
    Subgroup s;
    s.parent_ = parent;
    s.members_ = std::move(members);
    s.local_.assign(parent->order(), -1);
    for (std::size_t i = 0; i < s.members_.size(); ++i) s.local_[s.members_[i]] = static_cast<int>(i);
    const int m = s.order();
    if (parent->order() % m != 0) throw InconsistentInput("subgroup order does not divide the group order");
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int x = s.local_[parent->mul(s.members_[a], s.members_[b])];
            if (x < 0) throw InconsistentInput("subgroup members are not closed under multiplication");
            table[a][b] = x;
        }
    if (name.empty()) name = parent->name() + ".sub" + std::to_string(m);
    s.group_ = FiniteGroup::from_table(std::move(name), table);

    std::vector<char> covered(parent->order(), 0);
    for (int g = 0; g < parent->order(); ++g) {
        if (covered[g]) continue;
        s.transversal_.push_back(g);
        for (int h : s.members_) covered[parent->mul(g, h)] = 1;
    }
    return s;
}

bool Subgroup::is_normal() const {
    for (int s : parent_->generators())
        for (int h : group_->generators()) {
            int x = parent_->mul(parent_->mul(s, members_[h]), parent_->inv(s));
            if (!contains(x)) return false;
        }
    return true;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, std::size_t line) {
    try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw ParseError("bad integer '" + tok + "'", line);
        return static_cast<int>(v);
    } catch (const std::logic_error&) {
        throw ParseError("bad integer '" + tok + "'", line);
    }
}

}  // namespace

GroupPtr parse_group(std::string_view text, std::string name) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    {
        std::istringstream in{std::string(text)};
        std::size_t no = 0;
        for (std::string line; std::getline(in, line);) {
            ++no;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            lines.emplace_back(no, line);
        }
    }
    if (lines.empty()) throw ParseError("empty group description");
    auto header = split_ws(lines[0].second);
    if (header.size() != 4 || header[0] != "order" || header[2] != "classes")
        throw ParseError("expected header 'order n classes k'", lines[0].first);
    const int n = parse_int(header[1], lines[0].first);
    const int k = parse_int(header[3], lines[0].first);
    if (n < 1 || n > kMaxGroupOrder) throw ParseError("order out of range", lines[0].first);
    if (k < 1 || k > n) throw ParseError("class count out of range", lines[0].first);
    if (lines.size() < static_cast<std::size_t>(n) + 1)
        throw ParseError("expected " + std::to_string(n) + " table lines", lines.back().first);
    std::vector<std::vector<int>> table(n);
    for (int a = 0; a < n; ++a) {
        const auto& [no, line] = lines[a + 1];
        auto toks = split_ws(line);
        if (static_cast<int>(toks.size()) != n)
            throw ParseError("table line has " + std::to_string(toks.size()) + " entries, expected " +
                                 std::to_string(n),
                             no);
        for (const auto& t : toks) {
            int x = parse_int(t, no);
            if (x < 0 || x >= n) throw ParseError("table entry out of range", no);
            table[a].push_back(x);
        }
    }
    GroupPtr g;
    try {
        g = FiniteGroup::from_table(std::move(name), table);
    } catch (const InconsistentInput& e) {
        throw ParseError(std::string("invalid group table: ") + e.what(), lines[1].first);
    }
    if (g->num_classes() != k)
        throw ParseError("header declares " + std::to_string(k) + " classes, table has " +
                             std::to_string(g->num_classes()),
                         lines[0].first);
    const std::size_t rest = lines.size() - n - 1;
    if (rest == 0) return g;
    if (rest != static_cast<std::size_t>(k))
        throw ParseError("character table must have exactly " + std::to_string(k) + " lines", lines[n + 1].first);
    TableRows rows;
    for (std::size_t i = n + 1; i < lines.size(); ++i) {
        const auto& [no, line] = lines[i];
        auto toks = split_ws(line);
        if (static_cast<int>(toks.size()) != k) throw ParseError("character table line needs k entries", no);
        std::vector<Cyclotomic> row;
        for (const auto& t : toks) {
            try {
                row.push_back(parse_cyclotomic(t));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), no);
            }
        }
        rows.push_back(std::move(row));
    }
    g->check_supplied_table(std::move(rows));
    return g;
}

std::string format_group(const FiniteGroup& g, bool with_table) {
    std::ostringstream out;
    out << "order " << g.order() << " classes " << g.num_classes() << "\n";
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
        out << "\n";
    }
    if (with_table)
        for (const auto& row : g.character_table()) {
            for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j].to_string();
            out << "\n";
        }
    return out.str();
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::string name) {
    const int na = a->order(), nb = b->order();
    if (static_cast<long>(na) * nb > kMaxGroupOrder) throw DomainError("direct product too large");
    std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
    for (int x = 0; x < na * nb; ++x)
        for (int y = 0; y < na * nb; ++y)
            table[x][y] = a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb);
    if (name.empty()) name = a->name() + "x" + b->name();
    return FiniteGroup::from_table(std::move(name), table);
}

}  // namespace gl6
