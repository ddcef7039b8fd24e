#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "silted/error.hpp"
#include "silted/fixtures.hpp"
#include "silted/render.hpp"
#include "silted/suite.hpp"

using namespace silted;

namespace {

struct RunConfig {
    std::string quiver_path;
    std::string format = "ascii";
    bool two_term = false;
    bool tilting_only = false;
    bool oracle = false;
    unsigned jobs = 1;
    std::string out;
};

// A file path, or the name of a bundled fixture when no such file exists.
Quiver read_quiver(const std::string& path) {
    if (!std::filesystem::exists(path))
        for (const auto& f : fixtures())
            if (f.name == path) return f.quiver;
    return load_quiver(path);
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + cfg.out);
    os << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_ar(const RunConfig& cfg) {
    const Quiver q = read_quiver(cfg.quiver_path);
    const ArQuiver ar = cfg.two_term ? ar_quiver_two_term(q) : ar_quiver_mod(q);
    check(meshes_complete(ar), "AR quiver has an incomplete mesh");
    if (cfg.format == "json") {
        emit(cfg, dump(to_json(ar)));
    } else if (cfg.format == "dot") {
        emit(cfg, to_dot(ar, cfg.two_term ? "two_term" : "mod"));
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << "name,slice,row,tau\n";
        for (std::size_t v = 0; v < ar.vertices.size(); ++v) {
            const auto t = ar.tau_of(v);
            os << ar.vertices[v].to_string() << ',' << ar.slice[v] << ',' << ar.row[v] << ','
               << (t ? ar.vertices[*t].to_string() : "") << '\n';
        }
        emit(cfg, os.str());
    } else {
        emit(cfg, to_ascii(ar));
    }
    return 0;
}

// Enumerates, optionally against the brute-force oracles. Returns false on a
// mismatch.
bool enumerate(const TwoTermCategory& cat, bool oracle, std::vector<SiltingObject>& silting,
               std::vector<TiltingModule>& tilting) {
    const Quiver& q = cat.quiver();
    silting = silting_alg2(q);
    tilting = tilting_modules_alg1(q);
    if (!oracle) return true;
    bool ok = true;
    if (silting_bruteforce(cat) != silting) {
        std::cerr << "oracle mismatch: silting objects\n";
        ok = false;
    }
    if (tilting_modules_bruteforce(q) != tilting) {
        std::cerr << "oracle mismatch: tilting modules\n";
        ok = false;
    }
    return ok;
}

int cmd_silting(const RunConfig& cfg) {
    const Quiver q = read_quiver(cfg.quiver_path);
    dynkin_type(q);
    const TwoTermCategory cat(q, cfg.jobs);
    std::vector<SiltingObject> silting;
    std::vector<TiltingModule> tilting;
    const bool ok = enumerate(cat, cfg.oracle, silting, tilting);
    std::vector<SiltingObject> objects;
    if (cfg.tilting_only)
        for (const auto& t : tilting) objects.push_back(as_silting(t));
    else
        objects = silting;

    if (cfg.format == "json") {
        emit(cfg, dump(silting_report(q, objects)));
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << "no,summands,shifted,tilting\n";
        for (std::size_t i = 0; i < objects.size(); ++i) {
            std::string shifted;
            for (auto v : objects[i].shifted_vertices()) shifted += (shifted.empty() ? "" : " ") + std::to_string(q.label(v));
            os << i + 1 << ',' << objects[i].to_string() << ',' << shifted << ','
               << (objects[i].is_tilting() ? "yes" : "no") << '\n';
        }
        emit(cfg, os.str());
    } else if (cfg.format == "dot") {
        emit(cfg, to_dot(ar_quiver_two_term(q), "two_term"));
    } else {
        const ArQuiver ar = ar_quiver_two_term(q);
        std::ostringstream os;
        os << objects.size() << (cfg.tilting_only ? " tilting modules\n" : " silting objects\n");
        for (std::size_t i = 0; i < objects.size(); ++i) {
            const std::set<IndecomposableId> marked(objects[i].summands.begin(), objects[i].summands.end());
            os << "\n(" << i + 1 << ") " << objects[i].to_string() << "\n" << to_ascii(ar, marked, true);
        }
        emit(cfg, os.str());
    }
    return ok ? 0 : 1;
}

int cmd_classify(const RunConfig& cfg) {
    const Quiver q = read_quiver(cfg.quiver_path);
    dynkin_type(q);
    const TwoTermCategory cat(q, cfg.jobs);
    std::vector<SiltingObject> silting;
    std::vector<TiltingModule> tilting;
    const bool ok = enumerate(cat, cfg.oracle, silting, tilting);
    const auto records = classify_all(cat, silting, cfg.jobs);
    const auto classes = dedupe(records);

    if (cfg.format == "json") {
        emit(cfg, dump(classification_report(q, records, classes)));
    } else if (cfg.format == "csv") {
        emit(cfg, summary_csv(records, classes));
    } else if (cfg.format == "dot") {
        std::string out;
        for (std::size_t c = 0; c < classes.size(); ++c)
            out += to_dot(records[classes[c].representative].algebra, "class" + std::to_string(c + 1));
        emit(cfg, out);
    } else {
        emit(cfg, summary_text(records, classes));
    }
    return ok ? 0 : 1;
}

int cmd_suite(const RunConfig& cfg) {
    const SuiteReport report = run_suite(cfg.jobs);
    std::ostringstream os;
    os << report.table << '\n';
    for (const auto& c : report.criteria) {
        os << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << "  " << c.title << '\n';
        for (const auto& f : c.failures) os << "    " << f << '\n';
    }
    emit(cfg, os.str());
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-term silting complexes and silted algebras over Dynkin quivers"};
    app.require_subcommand(1);
    RunConfig cfg;
    const std::vector<std::string> formats = {"json", "csv", "dot", "ascii"};

    auto add_common = [&](CLI::App* sub, bool with_quiver) {
        if (with_quiver)
            sub->add_option("quiver", cfg.quiver_path, "Quiver file, or a bundled fixture name")->required();
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out, "Write output here instead of stdout");
    };

    auto* ar = app.add_subcommand("ar", "Auslander-Reiten quiver of mod A or of the two-term category");
    add_common(ar, true);
    ar->add_flag("--two-term", cfg.two_term, "Include the shifted projectives");

    auto* silting = app.add_subcommand("silting", "Enumerate 2-term silting complexes");
    add_common(silting, true);
    silting->add_flag("--tilting-only", cfg.tilting_only, "List tilting modules only");
    silting->add_flag("--oracle", cfg.oracle, "Cross-check against brute force");

    auto* classify = app.add_subcommand("classify", "Classify the endomorphism algebras");
    add_common(classify, true);
    classify->add_flag("--oracle", cfg.oracle, "Cross-check the enumeration against brute force");

    auto* suite = app.add_subcommand("paper-suite", "Run the fixture reproduction suite");
    add_common(suite, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*ar) return cmd_ar(cfg);
        if (*silting) return cmd_silting(cfg);
        if (*classify) return cmd_classify(cfg);
        return cmd_suite(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const NotDynkin& e) {
        std::cerr << "not Dynkin: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
