#include "silted/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace silted {

namespace {

std::string rat(const Rational& r) { return r.get_str(); }

std::vector<std::string> path_ids(const PathAlgebra& alg, std::size_t p) {
    std::vector<std::string> ids;
    for (auto a : alg.path(p).arrows) ids.push_back(alg.quiver().arrows()[a].id);
    return ids;
}

// Vertex walk of a basis path, as labels.
std::vector<int> walk(const PathAlgebra& alg, std::size_t p) {
    const Quiver& q = alg.quiver();
    const Path& path = alg.path(p);
    std::vector<int> out{q.label(path.source)};
    for (auto a : path.arrows) out.push_back(q.label(q.arrows()[a].target));
    return out;
}

std::string join_walk(const std::vector<int>& w, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? sep : "") + std::to_string(w[i]);
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::map<std::size_t, std::size_t> class_of(const std::vector<IsoClass>& classes) {
    std::map<std::size_t, std::size_t> out;
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (auto m : classes[c].members) out[m] = c + 1;
    return out;
}

}  // namespace

Json to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrows())
        arrows.push_back({{"id", a.id}, {"source", q.label(a.source)}, {"target", q.label(a.target)}});
    return {{"vertices", q.labels()}, {"arrows", arrows}};
}

Json to_json(const Quiver& q, const SiltingObject& t) {
    Json shifted = Json::array(), modules = Json::array(), summands = Json::array();
    for (auto v : t.shifted_vertices()) shifted.push_back(q.label(v));
    for (const auto& d : t.modules()) modules.push_back(d.values());
    for (const auto& x : t.summands) summands.push_back(x.to_string());
    return {{"I", shifted}, {"modules", modules}, {"summands", summands}};
}

Json to_json(const Quiver& q, const TiltingModule& t) { return to_json(q, as_silting(t)); }

Json to_json(const BoundQuiverAlgebra& b) {
    const PathAlgebra& alg = b.paths;
    const Quiver& q = alg.quiver();
    Json relations = Json::array();
    for (const auto& r : b.relations) {
        Json terms = Json::array();
        const auto& piece = alg.piece(r.source, r.target);
        for (std::size_t k = 0; k < r.coeffs.size(); ++k)
            if (r.coeffs[k] != 0) terms.push_back({{"coeff", rat(r.coeffs[k])}, {"path", path_ids(alg, piece[k])}});
        relations.push_back({{"source", q.label(r.source)}, {"target", q.label(r.target)}, {"terms", terms}});
    }
    Json out = to_json(q);
    out["relations"] = relations;
    out["dimension"] = b.dimension();
    return out;
}

Json to_json(const Quiver& q, const ClassificationRecord& r) {
    Json blocks = Json::array();
    for (const auto& blk : r.blocks) {
        std::vector<int> labels;
        for (auto v : blk.vertices) labels.push_back(static_cast<int>(v) + 1);
        blocks.push_back({{"vertices", labels},
                          {"gl_dim", blk.gl_dim},
                          {"verdict", blk.strictly_shod ? "strictly shod" : "tilted"},
                          {"type", blk.label()}});
    }
    Json pd = Json::array();
    for (const auto& s : r.resolutions) pd.push_back(s.pd);
    return {{"object", to_json(q, r.object)},
            {"algebra", to_json(r.algebra)},
            {"gl_dim", r.gl_dim},
            {"strictly_shod", r.strictly_shod()},
            {"label", r.label()},
            {"blocks", blocks},
            {"pd_simples", pd},
            {"fingerprint", r.fingerprint.hex()}};
}

Json to_json(const ArQuiver& ar) {
    Json vertices = Json::array(), arrows = Json::array(), tau = Json::array();
    for (std::size_t v = 0; v < ar.vertices.size(); ++v)
        vertices.push_back({{"name", ar.vertices[v].to_string()},
                            {"shifted", ar.vertices[v].is_shifted()},
                            {"slice", ar.slice[v]},
                            {"row", ar.row[v]}});
    for (auto [s, t] : ar.arrows) arrows.push_back({ar.vertices[s].to_string(), ar.vertices[t].to_string()});
    for (auto [x, y] : ar.tau_pairs) tau.push_back({ar.vertices[x].to_string(), ar.vertices[y].to_string()});
    return {{"vertices", vertices}, {"arrows", arrows}, {"tau", tau}};
}

Json to_json(const std::vector<IsoClass>& classes) {
    Json out = Json::array();
    for (std::size_t c = 0; c < classes.size(); ++c)
        out.push_back({{"class", c + 1},
                       {"label", classes[c].label},
                       {"representative", classes[c].representative},
                       {"members", classes[c].members},
                       {"fingerprint", classes[c].fingerprint.hex()}});
    return out;
}

Json silting_report(const Quiver& q, const std::vector<SiltingObject>& objects) {
    Json arr = Json::array();
    for (const auto& t : objects) arr.push_back(to_json(q, t));
    return {{"quiver", to_json(q)}, {"count", objects.size()}, {"objects", arr}};
}

Json classification_report(const Quiver& q, const std::vector<ClassificationRecord>& records,
                           const std::vector<IsoClass>& classes) {
    Json recs = Json::array();
    for (const auto& r : records) recs.push_back(to_json(q, r));
    Json families = Json::object();
    for (const auto& [label, n] : family_counts(classes)) families[label] = n;
    return {{"quiver", to_json(q)}, {"records", recs}, {"classes", to_json(classes)}, {"families", families}};
}

std::string to_dot(const ArQuiver& ar, const std::string& name) {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=LR;\n  node [shape=plaintext];\n";
    for (std::size_t v = 0; v < ar.vertices.size(); ++v)
        os << "  v" << v << " [label=\"" << ar.vertices[v].to_string() << "\", pos=\"" << ar.slice[v] << ","
           << ar.row[v] << "!\"];\n";
    for (auto [s, t] : ar.arrows) os << "  v" << s << " -> v" << t << ";\n";
    for (auto [x, y] : ar.tau_pairs) os << "  v" << x << " -> v" << y << " [style=dashed, constraint=false];\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const BoundQuiverAlgebra& b, const std::string& name) {
    const Quiver& q = b.quiver();
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
    for (auto l : q.labels()) os << "  " << l << ";\n";
    for (const auto& a : q.arrows())
        os << "  " << q.label(a.source) << " -> " << q.label(a.target) << " [label=\"" << a.id << "\"];\n";
    for (const auto& r : b.relations)
        os << "  " << q.label(r.source) << " -> " << q.label(r.target)
           << " [style=dotted, arrowhead=none, constraint=false];\n";
    os << "}\n";
    return os.str();
}

std::string to_ascii(const ArQuiver& ar, const std::set<IndecomposableId>& marked, bool use_marks) {
    if (ar.vertices.empty()) return "";
    const int rows = *std::max_element(ar.row.begin(), ar.row.end()) + 1;
    const int cols = *std::max_element(ar.slice.begin(), ar.slice.end()) + 1;
    std::size_t width = 1;
    if (!use_marks)
        for (const auto& v : ar.vertices) width = std::max(width, v.to_string().size());
    std::vector<std::vector<std::string>> grid(rows, std::vector<std::string>(cols));
    for (std::size_t v = 0; v < ar.vertices.size(); ++v) {
        std::string cell = use_marks ? (marked.count(ar.vertices[v]) ? "•" : "∘") : ar.vertices[v].to_string();
        grid[ar.row[v]][ar.slice[v]] = cell;
    }
    std::ostringstream os;
    for (int r = rows - 1; r >= 0; --r) {
        std::string line;
        for (int c = 0; c < cols; ++c) {
            const std::string& cell = grid[r][c];
            // Multi-byte marks count as one column.
            std::size_t shown = use_marks ? (cell.empty() ? 0 : 1) : cell.size();
            line += cell + std::string(width - shown + (c + 1 < cols ? 1 : 0), ' ');
        }
        line.erase(line.find_last_not_of(' ') + 1);
        os << line << "\n";
    }
    return os.str();
}

std::string sketch(const BoundQuiverAlgebra& b) {
    const Quiver& q = b.quiver();
    const PathAlgebra& alg = b.paths;
    std::string s;
    for (const auto& a : q.arrows())
        s += (s.empty() ? "" : " ") + std::to_string(q.label(a.source)) + "→" + std::to_string(q.label(a.target));
    // Isolated vertices.
    for (std::size_t v = 0; v < q.size(); ++v) {
        bool touched = std::any_of(q.arrows().begin(), q.arrows().end(),
                                   [&](const Arrow& a) { return a.source == v || a.target == v; });
        if (!touched) s += (s.empty() ? "" : " ") + std::to_string(q.label(v));
    }
    std::string rels;
    for (const auto& r : b.relations) {
        const auto& piece = alg.piece(r.source, r.target);
        std::string term;
        std::size_t nonzero = 0;
        for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
            if (r.coeffs[k] == 0) continue;
            ++nonzero;
            const std::string w = join_walk(walk(alg, piece[k]), "·");
            if (term.empty())
                term = (r.coeffs[k] == 1 ? "" : rat(r.coeffs[k]) + "*") + w;
            else
                term += (r.coeffs[k] < 0 ? " - " : " + ") +
                        (abs(r.coeffs[k]) == 1 ? "" : rat(abs(r.coeffs[k])) + "*") + w;
        }
        if (nonzero > 1) term += "=0";
        rels += (rels.empty() ? "" : ", ") + term;
    }
    return rels.empty() ? s : s + " | " + rels;
}

std::string summary_csv(const std::vector<ClassificationRecord>& records, const std::vector<IsoClass>& classes) {
    const auto cls = class_of(classes);
    std::ostringstream os;
    os << "no,silting_object,quiver,type,gl_dim,class\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        os << i + 1 << ',' << csv_field(r.object.to_string()) << ',' << csv_field(sketch(r.algebra)) << ','
           << csv_field(r.label()) << ',' << r.gl_dim << ',' << cls.at(i) << '\n';
    }
    return os.str();
}

std::string summary_text(const std::vector<ClassificationRecord>& records, const std::vector<IsoClass>& classes) {
    std::ostringstream os;
    os << classes.size() << " silted algebras from " << records.size() << " silting objects\n\n";
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& r = records[classes[c].representative];
        os << '(' << c + 1 << ") " << sketch(r.algebra) << "    " << classes[c].label << "\n";
        for (auto m : classes[c].members) os << "      " << records[m].object.to_string() << "\n";
    }
    os << "\nfamilies:\n";
    for (const auto& [label, n] : family_counts(classes)) os << "  " << label << ": " << n << "\n";
    return os.str();
}

}  // namespace silted
