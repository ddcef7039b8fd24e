#include "silted/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "silted/error.hpp"

namespace silted {

Quiver::Quiver(std::vector<int> labels, std::vector<Arrow> arrows)
    : labels_(std::move(labels)), arrows_(std::move(arrows)) {
    std::set<int> seen;
    for (int l : labels_)
        if (!seen.insert(l).second) throw ParseError("duplicate vertex label " + std::to_string(l));
    std::set<std::string> ids;
    for (const auto& a : arrows_) {
        if (!ids.insert(a.id).second) throw ParseError("duplicate arrow id '" + a.id + "'");
        if (a.source >= labels_.size() || a.target >= labels_.size())
            throw ParseError("arrow '" + a.id + "' has an endpoint outside the vertex list");
        if (a.source == a.target) throw ParseError("cycle detected: loop '" + a.id + "'");
    }
    // Kahn's algorithm; smallest index first keeps the order deterministic.
    const std::size_t n = labels_.size();
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& a : arrows_) ++indeg[a.target];
    std::set<std::size_t> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.insert(v);
    while (!ready.empty()) {
        const std::size_t v = *ready.begin();
        ready.erase(ready.begin());
        topo_.push_back(v);
        for (const auto& a : arrows_)
            if (a.source == v && --indeg[a.target] == 0) ready.insert(a.target);
    }
    if (topo_.size() != n) throw ParseError("cycle detected");
}

Quiver Quiver::from_edges(std::vector<int> labels, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Arrow> arrows;
    auto idx = [&](int l) -> std::size_t {
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end()) throw ParseError("unknown vertex " + std::to_string(l));
        return static_cast<std::size_t>(it - labels.begin());
    };
    for (std::size_t k = 0; k < edges.size(); ++k)
        arrows.push_back({"a" + std::to_string(k + 1), idx(edges[k].first), idx(edges[k].second)});
    return Quiver(std::move(labels), std::move(arrows));
}

std::optional<std::size_t> Quiver::find(int label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Quiver::index_of(int label) const {
    auto v = find(label);
    if (!v) throw std::out_of_range("no vertex labelled " + std::to_string(label));
    return *v;
}

std::vector<std::vector<std::size_t>> Quiver::components() const {
    const std::size_t n = size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t v) {
        return parent[v] == v ? v : parent[v] = root(parent[v]);
    };
    for (const auto& a : arrows_) parent[root(a.source)] = root(a.target);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < n; ++v) groups[root(v)].push_back(v);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [r, vs] : groups) out.push_back(std::move(vs));
    std::sort(out.begin(), out.end());
    return out;
}

std::string Quiver::to_string() const {
    std::ostringstream os;
    os << "vertices";
    for (int l : labels_) os << ' ' << l;
    for (const auto& a : arrows_) os << "; " << a.id << ':' << labels_[a.source] << "->" << labels_[a.target];
    return os.str();
}

namespace {

Quiver parse_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        std::vector<int> labels = j.at("vertices").get<std::vector<int>>();
        std::vector<std::pair<std::string, std::pair<int, int>>> raw;
        if (j.contains("arrows")) {
            std::size_t k = 0;
            for (const auto& a : j.at("arrows")) {
                ++k;
                std::string id;
                if (!a.contains("id")) id = "a" + std::to_string(k);
                else if (a.at("id").is_string()) id = a.at("id").get<std::string>();
                else id = std::to_string(a.at("id").get<long>());
                raw.push_back({id, {a.at("source").get<int>(), a.at("target").get<int>()}});
            }
        }
        std::vector<Arrow> arrows;
        for (auto& [id, st] : raw) {
            auto s = std::find(labels.begin(), labels.end(), st.first);
            auto t = std::find(labels.begin(), labels.end(), st.second);
            if (s == labels.end() || t == labels.end()) throw ParseError("arrow '" + id + "' uses an undeclared vertex");
            arrows.push_back({id, static_cast<std::size_t>(s - labels.begin()), static_cast<std::size_t>(t - labels.begin())});
        }
        return Quiver(std::move(labels), std::move(arrows));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed quiver JSON: ") + e.what());
    }
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json(text);

    std::optional<std::vector<int>> labels;
    struct RawArrow { std::string id; int s, t; std::size_t line; };
    std::vector<RawArrow> raw;
    static const std::regex arrow_re(R"(^\s*([A-Za-z0-9_.']+)\s*:\s*(-?\d+)\s*->\s*(-?\d+)\s*,?)");

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::stringstream statements(line);
        std::string stmt;
        while (std::getline(statements, stmt, ';')) {
            stmt = trim(stmt);
            if (stmt.empty()) continue;
            const auto sp = stmt.find_first_of(" \t");
            const std::string keyword = stmt.substr(0, sp);
            std::string rest = sp == std::string::npos ? std::string{} : stmt.substr(sp);
            const std::string where = " (line " + std::to_string(lineno) + ")";
            if (keyword == "vertices") {
                if (labels) throw ParseError("second 'vertices' statement" + where);
                std::istringstream ls(rest);
                std::vector<int> vs;
                std::string tok;
                while (ls >> tok) {
                    try {
                        std::size_t used = 0;
                        vs.push_back(std::stoi(tok, &used));
                        if (used != tok.size()) throw std::invalid_argument(tok);
                    } catch (const std::exception&) {
                        throw ParseError("bad vertex label '" + tok + "'" + where);
                    }
                }
                labels = std::move(vs);
            } else if (keyword == "arrow" || keyword == "arrows") {
                std::smatch m;
                std::size_t count = 0;
                while (std::regex_search(rest, m, arrow_re)) {
                    raw.push_back({m[1], std::stoi(m[2]), std::stoi(m[3]), lineno});
                    rest = m.suffix();
                    ++count;
                }
                if (!trim(rest).empty() || count == 0) throw ParseError("cannot parse arrow '" + trim(stmt) + "'" + where);
                if (keyword == "arrow" && count != 1) throw ParseError("'arrow' takes exactly one arrow" + where);
            } else {
                throw ParseError("unknown keyword '" + keyword + "'" + where);
            }
        }
    }
    if (!labels) throw ParseError("missing 'vertices' statement");
    std::vector<Arrow> arrows;
    for (const auto& r : raw) {
        auto s = std::find(labels->begin(), labels->end(), r.s);
        auto t = std::find(labels->begin(), labels->end(), r.t);
        if (s == labels->end() || t == labels->end())
            throw ParseError("arrow '" + r.id + "' uses an undeclared vertex (line " + std::to_string(r.line) + ")");
        arrows.push_back({r.id, static_cast<std::size_t>(s - labels->begin()), static_cast<std::size_t>(t - labels->begin())});
    }
    return Quiver(std::move(*labels), std::move(arrows));
}

Quiver load_quiver(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_quiver(ss.str());
}

std::string quiver_to_text(const Quiver& q) {
    std::ostringstream os;
    os << "vertices";
    for (int l : q.labels()) os << ' ' << l;
    os << '\n';
    for (const auto& a : q.arrows()) os << "arrow " << a.id << ':' << q.label(a.source) << "->" << q.label(a.target) << '\n';
    return os.str();
}

Quiver opposite(const Quiver& q) {
    std::vector<Arrow> arrows = q.arrows();
    for (auto& a : arrows) std::swap(a.source, a.target);
    return Quiver(q.labels(), std::move(arrows));
}

Quiver full_subquiver(const Quiver& q, const std::vector<std::size_t>& keep) {
    std::vector<std::size_t> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    std::vector<long> newidx(q.size(), -1);
    std::vector<int> labels;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        newidx[sorted[k]] = static_cast<long>(k);
        labels.push_back(q.label(sorted[k]));
    }
    std::vector<Arrow> arrows;
    for (const auto& a : q.arrows())
        if (newidx[a.source] >= 0 && newidx[a.target] >= 0)
            arrows.push_back({a.id, static_cast<std::size_t>(newidx[a.source]), static_cast<std::size_t>(newidx[a.target])});
    return Quiver(std::move(labels), std::move(arrows));
}

std::string DynkinComponent::to_string() const { return std::string(1, family) + std::to_string(rank); }

DynkinType DynkinType::canonical() const {
    DynkinType t = *this;
    auto fam = [](char f) { return f == 'E' ? 0 : f == 'D' ? 1 : 2; };
    std::sort(t.components.begin(), t.components.end(), [&](const DynkinComponent& a, const DynkinComponent& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        return fam(a.family) < fam(b.family);
    });
    return t;
}

std::string DynkinType::to_string() const {
    std::string s;
    for (const auto& c : canonical().components) {
        if (!s.empty()) s += "⊔";
        s += c.to_string();
    }
    return s;
}

int DynkinType::rank() const {
    int r = 0;
    for (const auto& c : components) r += c.rank;
    return r;
}

DynkinType dynkin_type(const Quiver& q) {
    DynkinType out;
    for (const auto& comp : q.components()) {
        const std::size_t n = comp.size();
        std::set<std::size_t> in(comp.begin(), comp.end());
        std::map<std::size_t, std::vector<std::size_t>> adj;
        std::size_t edges = 0;
        for (const auto& a : q.arrows())
            if (in.count(a.source)) {
                adj[a.source].push_back(a.target);
                adj[a.target].push_back(a.source);
                ++edges;
            }
        // A connected graph with n-1 edges is a tree, so no multi-edges either.
        if (edges != n - 1) throw NotDynkin("underlying graph contains a cycle or multiple edge");
        std::vector<std::size_t> branch;
        for (std::size_t v : comp) {
            if (adj[v].size() > 3) throw NotDynkin("vertex of degree > 3");
            if (adj[v].size() == 3) branch.push_back(v);
        }
        if (branch.empty()) {
            out.components.push_back({'A', static_cast<int>(n)});
            continue;
        }
        if (branch.size() > 1) throw NotDynkin("more than one branch vertex");
        std::vector<int> arms;
        for (std::size_t start : adj[branch[0]]) {
            int len = 0;
            std::size_t prev = branch[0], cur = start;
            while (true) {
                ++len;
                std::size_t next = prev;
                for (std::size_t w : adj[cur])
                    if (w != prev) next = w;
                if (next == prev) break;
                prev = cur;
                cur = next;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        const int p = arms[0], m = arms[1], r = arms[2];
        if (p == 1 && m == 1) out.components.push_back({'D', r + 3});
        else if (p == 1 && m == 2 && r >= 2 && r <= 4) out.components.push_back({'E', r + 4});
        else throw NotDynkin("branched tree is not of type D or E");
    }
    return out;
}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
    std::vector<int> v(n, 0);
    v.at(i) = 1;
    return DimVector(std::move(v));
}

int DimVector::total() const { return std::accumulate(v_.begin(), v_.end(), 0); }

std::string DimVector::to_string() const {
    const bool wide = std::any_of(v_.begin(), v_.end(), [](int x) { return x > 9 || x < 0; });
    std::string s;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (wide && i) s += ',';
        s += std::to_string(v_[i]);
    }
    return s;
}

long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    long s = 0;
    for (std::size_t i = 0; i < q.size(); ++i) s += static_cast<long>(d[i]) * e[i];
    for (const auto& a : q.arrows()) s -= static_cast<long>(d[a.source]) * e[a.target];
    return s;
}

RatMatrix cartan_matrix(const Quiver& q) {
    const std::size_t n = q.size();
    RatMatrix c(n, n);
    // Count paths by dynamic programming along the topological order.
    const auto& topo = q.topological_order();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> count(n, 0);
        count[i] = 1;
        for (std::size_t v : topo)
            if (count[v])
                for (const auto& a : q.arrows())
                    if (a.source == v) count[a.target] += count[v];
        for (std::size_t j = 0; j < n; ++j) c(i, j) = count[j];
    }
    return c;
}

RatMatrix coxeter_matrix(const Quiver& q) {
    const RatMatrix c = cartan_matrix(q);
    return -(*linalg::inverse(c) * c.transpose());
}

std::vector<Path> path_basis(const Quiver& q) {
    std::vector<Path> out;
    for (std::size_t s = 0; s < q.size(); ++s) {
        std::vector<Path> from{Path{s, s, {}}};
        std::vector<Path> frontier = from;
        while (!frontier.empty()) {
            std::vector<Path> next;
            for (const auto& p : frontier)
                for (std::size_t a = 0; a < q.arrows().size(); ++a)
                    if (q.arrows()[a].source == p.target) {
                        Path e = p;
                        e.arrows.push_back(a);
                        e.target = q.arrows()[a].target;
                        next.push_back(std::move(e));
                    }
            auto ids = [&](const Path& p) {
                std::vector<std::string> v;
                for (auto a : p.arrows) v.push_back(q.arrows()[a].id);
                return v;
            };
            std::sort(next.begin(), next.end(), [&](const Path& x, const Path& y) { return ids(x) < ids(y); });
            from.insert(from.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        out.insert(out.end(), from.begin(), from.end());
    }
    return out;
}

PathAlgebra::PathAlgebra(Quiver q) : q_(std::move(q)) {
    paths_ = path_basis(q_);
    const std::size_t n = q_.size();
    piece_.assign(n, std::vector<std::vector<std::size_t>>(n));
    lazy_.assign(n, 0);
    position_.resize(paths_.size());
    for (std::size_t p = 0; p < paths_.size(); ++p) {
        const Path& path = paths_[p];
        position_[p] = piece_[path.source][path.target].size();
        piece_[path.source][path.target].push_back(p);
        if (path.arrows.empty()) lazy_[path.source] = p;
        else by_arrows_[path.arrows] = p;
    }
}

std::optional<std::size_t> PathAlgebra::find(const std::vector<std::size_t>& arrows) const {
    auto it = by_arrows_.find(arrows);
    if (it == by_arrows_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> PathAlgebra::concat(std::size_t p, std::size_t q) const {
    const Path& a = paths_[p];
    const Path& b = paths_[q];
    if (a.target != b.source) return std::nullopt;
    if (a.arrows.empty()) return q;
    if (b.arrows.empty()) return p;
    std::vector<std::size_t> seq = a.arrows;
    seq.insert(seq.end(), b.arrows.begin(), b.arrows.end());
    return by_arrows_.at(seq);
}

PathVector PathAlgebra::zero(std::size_t i, std::size_t j) const { return {i, j, Vec(piece_dim(i, j))}; }

PathVector PathAlgebra::unit_vector(std::size_t p, const Rational& c) const {
    PathVector v = zero(paths_[p].source, paths_[p].target);
    v.coeffs[position_[p]] = c;
    return v;
}

PathVector PathAlgebra::multiply(const PathVector& x, const PathVector& y) const {
    if (x.target != y.source) throw std::invalid_argument("PathAlgebra::multiply: paths do not compose");
    PathVector out = zero(x.source, y.target);
    const auto& px = piece(x.source, x.target);
    const auto& py = piece(y.source, y.target);
    for (std::size_t a = 0; a < px.size(); ++a) {
        if (sgn(x.coeffs[a]) == 0) continue;
        for (std::size_t b = 0; b < py.size(); ++b) {
            if (sgn(y.coeffs[b]) == 0) continue;
            const std::size_t r = *concat(px[a], py[b]);
            out.coeffs[position_[r]] += x.coeffs[a] * y.coeffs[b];
        }
    }
    return out;
}

std::string PathAlgebra::path_name(std::size_t p) const {
    const Path& path = paths_[p];
    if (path.arrows.empty()) return "e" + std::to_string(q_.label(path.source));
    std::string s;
    for (std::size_t k = 0; k < path.arrows.size(); ++k) {
        if (k) s += '*';
        s += q_.arrows()[path.arrows[k]].id;
    }
    return s;
}

std::string PathAlgebra::to_string(const PathVector& v) const {
    std::string s;
    const auto& pc = piece(v.source, v.target);
    for (std::size_t k = 0; k < pc.size(); ++k) {
        const Rational& c = v.coeffs[k];
        if (sgn(c) == 0) continue;
        if (!s.empty()) s += sgn(c) > 0 ? " + " : " - ";
        else if (sgn(c) < 0) s += "-";
        const Rational a = abs(c);
        if (a != 1) s += a.get_str() + " ";
        s += path_name(pc[k]);
    }
    return s.empty() ? "0" : s;
}

}  // namespace silted
