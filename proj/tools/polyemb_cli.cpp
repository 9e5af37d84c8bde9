// polyemb: enumerate, verify, count and construct polyhedral embeddings of
// cubic graphs in orientable surfaces.

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "polyemb/constructions.hpp"
#include "polyemb/iso.hpp"
#include "polyemb/reference.hpp"
#include "polyemb/search.hpp"

using namespace polyemb;

namespace {

int worst_exit = 0;

void raise_exit(int code) {
    if (code > worst_exit) worst_exit = code;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> lines;
    std::string line;
    if (path == "-") {
        while (std::getline(std::cin, line)) lines.push_back(line);
    } else {
        std::ifstream in(path);
        if (!in) throw CLI::ValidationError("input", "cannot open " + path);
        while (std::getline(in, line)) lines.push_back(line);
    }
    return lines;
}

std::string read_file(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw CLI::ValidationError("input", "cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

// Applies fn to every item on `jobs` workers; results keep input order.
template <typename Out, typename In, typename Fn>
std::vector<Out> map_indexed(const std::vector<In>& items, int jobs, Fn fn) {
    std::vector<Out> results(items.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
        return results;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            results[i] = fn(items[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
}

std::string genus_counts_str(const std::map<int, long long>& per_genus) {
    if (per_genus.empty()) return "-";
    std::string s;
    for (auto [g, c] : per_genus) {
        if (!s.empty()) s += ',';
        s += std::to_string(g) + ":" + std::to_string(c);
    }
    return s;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// enumerate

struct EnumRow {
    std::string status = "ok";
    std::string rot_blocks;
    EmbeddingSummary summary;
};

int cmd_enumerate(const std::string& input, int jobs, bool count_only, bool mirrors,
                  std::optional<int> max_genus, const std::string& rot_out) {
    auto lines = read_lines(input);
    SearchConfig cfg;
    cfg.count_only = count_only;
    cfg.emit_mirrors = mirrors;
    cfg.max_genus = max_genus;
    bool want_rot = !rot_out.empty() && !count_only;

    std::vector<size_t> idx(lines.size());
    for (size_t i = 0; i < lines.size(); ++i) idx[i] = i;
    auto rows = map_indexed<EnumRow>(idx, jobs, [&](size_t i) -> EnumRow {
        EnumRow row;
        const std::string& line = lines[i];
        if (line.empty() || line[0] == '#') {
            row.status = "skip";
            return row;
        }
        CubicGraph g;
        try {
            g = parse_graph6(line);
        } catch (const Graph6Error& e) {
            row.status = (e.kind == Graph6ErrorKind::not_cubic ||
                          e.kind == Graph6ErrorKind::odd_order)
                             ? "not_cubic"
                             : "malformed";
            return row;
        }
        EnumerateResult res = enumerate_polyhedral(g, cfg);
        if (res.reason == EnumerateReason::not_three_connected) row.status = "not_3_connected";
        row.summary = res.summary;
        if (want_rot) {
            std::ostringstream blocks;
            for (const auto& r : res.embeddings) {
                write_rot(blocks, r);
                blocks << '\n';
            }
            row.rot_blocks = blocks.str();
        }
        return row;
    });

    std::ofstream rot_file;
    std::ostream* rot_stream = nullptr;
    std::ostream* tsv = &std::cout;
    if (want_rot) {
        if (rot_out == "-") {
            rot_stream = &std::cout;
            tsv = &std::cerr;  // keep the machine-readable streams apart
        } else {
            rot_file.open(rot_out);
            if (!rot_file) throw CLI::ValidationError("--rot-out", "cannot open " + rot_out);
            rot_stream = &rot_file;
        }
    }

    *tsv << "graph6\tstatus\ttotal\tgenus_counts\tmulti_embedding\tmulti_genus\tmin_genus\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const EnumRow& row = rows[i];
        if (row.status == "skip") continue;
        if (row.status == "malformed") {
            std::cerr << "line " << (i + 1) << ": malformed graph6\n";
            raise_exit(1);
        }
        const auto& s = row.summary;
        *tsv << lines[i] << '\t' << row.status << '\t' << s.total << '\t'
             << genus_counts_str(s.per_genus) << '\t' << (s.multi_embedding ? 1 : 0) << '\t'
             << (s.multi_genus ? 1 : 0) << '\t'
             << (s.min_search_genus ? std::to_string(*s.min_search_genus) : "-") << '\n';
        if (rot_stream) *rot_stream << row.rot_blocks;
    }
    return worst_exit;
}

// ---------------------------------------------------------------------------
// tables

int cmd_tables(int max_n, int jobs) {
    std::cout << "n\tgraphs\twith_embedding\tmulti_embedding\tmulti_genus\tembeddings\t"
                 "min_genus_embeddings\tnot_min_genus_embeddings\n";
    for (int n = 4; n <= max_n; n += 2) {
        auto graphs = gen_cubic(n);
        struct PerGraph {
            bool has = false, multi = false, multig = false;
            long long classes = 0, min_classes = 0;
        };
        auto rows = map_indexed<PerGraph>(graphs, jobs, [&](const CubicGraph& g) -> PerGraph {
            PerGraph out;
            EnumerateResult res = enumerate_polyhedral(g);
            out.has = res.summary.has_any;
            out.multi = res.summary.multi_embedding;
            out.multig = res.summary.multi_genus;
            if (!res.embeddings.empty()) {
                std::map<CanonicalCode, int> classes;
                for (const auto& r : res.embeddings)
                    classes.emplace(canon_embedded(r, true), genus(r));
                out.classes = (long long)classes.size();
                int mg = min_genus(g);
                for (auto& [code, gg] : classes)
                    if (gg == mg) ++out.min_classes;
            }
            return out;
        });
        long long graphs_n = (long long)graphs.size();
        long long with_emb = 0, multi_emb = 0, multi_genus = 0, emb_total = 0, min_genus_emb = 0;
        for (const auto& r : rows) {
            with_emb += r.has;
            multi_emb += r.multi;
            multi_genus += r.multig;
            emb_total += r.classes;
            min_genus_emb += r.min_classes;
        }
        std::cout << n << '\t' << graphs_n << '\t' << with_emb << '\t' << multi_emb << '\t'
                  << multi_genus << '\t' << emb_total << '\t' << min_genus_emb << '\t'
                  << (emb_total - min_genus_emb) << '\n';
        std::cout.flush();
    }
    return worst_exit;
}

// ---------------------------------------------------------------------------
// construct

CubicGraph load_graph_arg(const std::string& arg) {
    if (arg.size() > 3 && arg.substr(arg.size() - 3) == ".g6") {
        for (const auto& line : read_lines(arg))
            if (!line.empty() && line[0] != '#') return parse_graph6(line);
        throw CLI::ValidationError("construct", "no graph6 line in " + arg);
    }
    return named_graph(arg);
}

bool is_rot_path(const std::string& arg) {
    return arg.size() > 4 && arg.substr(arg.size() - 4) == ".rot";
}

RotationSystem load_rot_arg(const std::string& arg) {
    std::istringstream in(read_file(arg));
    auto blocks = parse_rot(in);
    if (blocks.empty()) throw CLI::ValidationError("construct", "no .rot block in " + arg);
    return blocks.front();
}

void verify_system(const RotationSystem& r, bool expect_polyhedral) {
    FaceSet fs = trace_faces(r);
    long long total = 0;
    for (const auto& f : fs.faces) total += (long long)f.darts.size();
    if (total != 3LL * r.graph.n) throw std::runtime_error("face partition broken");
    if (expect_polyhedral && !is_polyhedral(r)) throw std::runtime_error("not polyhedral");
    if (is_polyhedral(r) != dual_is_simple(r))
        throw std::runtime_error("polyhedrality and dual simplicity disagree");
    SmallCycleSet cycles = small_cycles(r.graph);
    if (is_polyhedral(r)) {
        if (!small_cycles_facial(r, cycles)) throw std::runtime_error("small cycle not facial");
        if (!hexagon_rule_holds(r, cycles)) throw std::runtime_error("hexagon rule violated");
    }
}

int cmd_construct(const std::vector<std::string>& args, bool verify, int host_vertex,
                  int guest_vertex, const std::string& petrie_set) {
    if (args.empty()) throw CLI::ValidationError("construct", "missing kind");
    const std::string& kind = args[0];

    if (kind == "named") {
        if (args.size() != 2) throw CLI::ValidationError("construct", "named needs a graph name");
        std::cout << write_graph6(named_graph(args[1])) << '\n';
        return worst_exit;
    }
    if (kind == "hextorus") {
        if (args.size() != 2) throw CLI::ValidationError("construct", "hextorus needs k");
        HexTorus ht = hex_torus(std::stoi(args[1]));
        if (verify) {
            verify_system(ht.rs, true);
            std::cerr << "verify: ok\n";
        }
        std::cout << "# bipartition class 0: even ids, class 1: odd ids\n";
        write_rot(std::cout, ht.rs);
        return worst_exit;
    }
    if (kind == "petrie") {
        RotationSystem base{CubicGraph{}, {}};
        VertexSet sw;
        if (args.size() == 3 && args[1] == "hextorus") {
            HexTorus ht = hex_torus(std::stoi(args[2]));
            base = ht.rs;
            sw = ht.part_zero;
        } else if (args.size() == 2 && is_rot_path(args[1])) {
            base = load_rot_arg(args[1]);
            if (petrie_set.empty())
                throw CLI::ValidationError("construct", "petrie on a .rot needs --set");
            std::stringstream ss(petrie_set);
            std::string tok;
            while (std::getline(ss, tok, ',')) sw.add(std::stoi(tok));
        } else {
            throw CLI::ValidationError("construct", "petrie takes 'hextorus k' or FILE.rot --set");
        }
        RotationSystem switched = petrie_switch(base, sw);
        if (verify) {
            verify_system(switched, false);
            std::cerr << "verify: ok\n";
        }
        write_rot(std::cout, switched);
        return worst_exit;
    }
    if (kind == "star") {
        if (args.size() != 3) throw CLI::ValidationError("construct", "star needs two graphs");
        bool embedded = is_rot_path(args[1]) && is_rot_path(args[2]);
        if (embedded) {
            RotationSystem a = load_rot_arg(args[1]);
            RotationSystem b = load_rot_arg(args[2]);
            RotationSystem prod = star_product_embedded(a, host_vertex, b, guest_vertex);
            if (verify) {
                if (genus(prod) != genus(a) + genus(b))
                    throw std::runtime_error("genus not additive");
                verify_system(prod, is_polyhedral(a) && is_polyhedral(b));
                std::cerr << "verify: ok\n";
            }
            write_rot(std::cout, prod);
        } else {
            CubicGraph a = load_graph_arg(args[1]);
            CubicGraph b = load_graph_arg(args[2]);
            CubicGraph prod = star_product(a, host_vertex, b, guest_vertex);
            if (verify) std::cerr << "verify: ok\n";  // construction validates invariants
            std::cout << write_graph6(prod) << '\n';
        }
        return worst_exit;
    }
    throw CLI::ValidationError("construct", "unknown kind " + kind);
}

// ---------------------------------------------------------------------------
// check

int cmd_check(const std::string& input) {
    std::istringstream in(read_file(input));
    auto blocks = split_rot_blocks(in);
    std::cout << "block\tn\tfaces\tgenus\tpolyhedral\tobstruction\tdual_simple\t"
                 "small_cycles_facial\thexagon_rule\n";
    for (size_t i = 0; i < blocks.size(); ++i) {
        RotationSystem r{CubicGraph{}, {}};
        try {
            r = parse_rot_block(blocks[i]);
        } catch (const RotError& e) {
            std::cerr << "block " << i << ": " << e.what() << '\n';
            std::cout << i << "\terror\t-\t-\t-\t-\t-\t-\t-\n";
            raise_exit(1);
            continue;
        }
        FaceSet fs = trace_faces(r);
        bool poly = is_polyhedral(r);
        auto ob = find_obstruction(r, VertexSet{});
        std::string obs = "-";
        if (ob) {
            if (ob->kind == Obstruction::Kind::repeated_vertex)
                obs = "repeated_vertex(v=" + std::to_string(ob->vertex) +
                      ",face=" + std::to_string(ob->face_a) + ")";
            else
                obs = "face_pair(" + std::to_string(ob->face_a) + "," +
                      std::to_string(ob->face_b) + ")";
        }
        SmallCycleSet cycles = small_cycles(r.graph);
        std::cout << i << '\t' << r.graph.n << '\t' << fs.faces.size() << '\t' << fs.genus << '\t'
                  << yn(poly) << '\t' << obs << '\t' << yn(dual_is_simple(r)) << '\t'
                  << yn(small_cycles_facial(r, cycles)) << '\t'
                  << yn(hexagon_rule_holds(r, cycles)) << '\n';
    }
    return worst_exit;
}

// ---------------------------------------------------------------------------
// oracle / mingen

std::set<std::string> norm_flip_set(const std::vector<RotationSystem>& list) {
    std::set<std::string> out;
    for (const auto& r : list) {
        std::string s(r.flips.begin(), r.flips.end());
        if (s[0])
            for (auto& c : s) c ^= 1;
        out.insert(s);
    }
    return out;
}

int cmd_oracle(const std::string& input, int jobs, bool cross_check, bool override_guards) {
    auto lines = read_lines(input);
    struct Row {
        std::string status = "ok";
        EmbeddingSummary summary;
        bool diff = false;
    };
    std::vector<size_t> idx(lines.size());
    for (size_t i = 0; i < lines.size(); ++i) idx[i] = i;
    auto rows = map_indexed<Row>(idx, jobs, [&](size_t i) -> Row {
        Row row;
        const std::string& line = lines[i];
        if (line.empty() || line[0] == '#') {
            row.status = "skip";
            return row;
        }
        CubicGraph g;
        try {
            g = parse_graph6(line);
        } catch (const Graph6Error&) {
            row.status = "malformed";
            return row;
        }
        if ((g.n > 20 && !override_guards) || g.n > 63) {
            row.status = "guard";
            return row;
        }
        auto oracle = brute_force_polyhedral(g);
        row.summary = summarize(oracle);
        if (cross_check) {
            auto res = enumerate_polyhedral(g);
            row.diff = norm_flip_set(oracle) != norm_flip_set(res.embeddings);
        }
        return row;
    });
    std::cout << "graph6\tstatus\ttotal\tgenus_counts" << (cross_check ? "\tcross_check" : "")
              << "\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const Row& row = rows[i];
        if (row.status == "skip") continue;
        if (row.status == "malformed") {
            std::cerr << "line " << (i + 1) << ": malformed graph6\n";
            raise_exit(1);
            continue;
        }
        if (row.status == "guard") {
            std::cerr << "line " << (i + 1) << ": size guard exceeded (use --override-guards)\n";
            raise_exit(1);
            continue;
        }
        std::cout << lines[i] << '\t' << row.status << '\t' << row.summary.total << '\t'
                  << genus_counts_str(row.summary.per_genus);
        if (cross_check) {
            std::cout << '\t' << (row.diff ? "DIFF" : "ok");
            if (row.diff) {
                std::cerr << "DIFF line " << (i + 1) << ": " << lines[i] << '\n';
                raise_exit(2);
            }
        }
        std::cout << '\n';
    }
    return worst_exit;
}

int cmd_mingen(const std::string& input, int jobs, bool override_guards) {
    auto lines = read_lines(input);
    struct Row {
        std::string status = "ok";
        int mg = -1;
    };
    std::vector<size_t> idx(lines.size());
    for (size_t i = 0; i < lines.size(); ++i) idx[i] = i;
    auto rows = map_indexed<Row>(idx, jobs, [&](size_t i) -> Row {
        Row row;
        const std::string& line = lines[i];
        if (line.empty() || line[0] == '#') {
            row.status = "skip";
            return row;
        }
        CubicGraph g;
        try {
            g = parse_graph6(line);
        } catch (const Graph6Error&) {
            row.status = "malformed";
            return row;
        }
        if ((g.n > 22 && !override_guards) || g.n > 63) {
            row.status = "guard";
            return row;
        }
        row.mg = min_genus(g);
        return row;
    });
    std::cout << "graph6\tmin_genus\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const Row& row = rows[i];
        if (row.status == "skip") continue;
        if (row.status != "ok") {
            std::cerr << "line " << (i + 1) << ": " << row.status << '\n';
            raise_exit(1);
            continue;
        }
        std::cout << lines[i] << '\t' << row.mg << '\n';
    }
    return worst_exit;
}

// ---------------------------------------------------------------------------
// iso

int cmd_iso(const std::string& input) {
    std::istringstream in(read_file(input));
    auto blocks = split_rot_blocks(in);
    std::cout << "block\tcode_mirror\tcode_oriented\tgroup\n";
    std::map<CanonicalCode, int> groups;
    for (size_t i = 0; i < blocks.size(); ++i) {
        RotationSystem r{CubicGraph{}, {}};
        try {
            r = parse_rot_block(blocks[i]);
        } catch (const RotError& e) {
            std::cerr << "block " << i << ": " << e.what() << '\n';
            std::cout << i << "\terror\terror\t-\n";
            raise_exit(1);
            continue;
        }
        CanonicalCode cm = canon_embedded(r, true);
        CanonicalCode co = canon_embedded(r, false);
        auto [it, inserted] = groups.emplace(cm, (int)groups.size());
        std::cout << i << '\t' << to_hex(cm) << '\t' << to_hex(co) << '\t' << it->second << '\n';
    }
    return worst_exit;
}

// ---------------------------------------------------------------------------
// generate

int cmd_generate(int n, bool override_guards) {
    if (n > 16 && !override_guards)
        throw CLI::ValidationError("generate", "n > 16 needs --override-guards");
    for (const CubicGraph& g : gen_cubic(n)) std::cout << write_graph6(g) << '\n';
    return worst_exit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyhedral embeddings of cubic graphs"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for per-graph work")->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate", "all polyhedral embeddings per graph6 line");
    enumerate->fallthrough();
    std::string enum_input = "-";
    bool count_only = false, mirrors = false;
    int max_genus = -1;
    std::string rot_out;
    enumerate->add_option("input", enum_input, "graph6 file or - for stdin");
    enumerate->add_flag("--count-only", count_only, "summaries only");
    enumerate->add_flag("--mirrors", mirrors, "emit both mirror images");
    enumerate->add_option("--max-genus", max_genus, "only embeddings of at most this genus");
    enumerate->add_option("--rot-out", rot_out, "write .rot blocks here (- for stdout)");

    auto* tables = app.add_subcommand("tables", "census rows for n = 4..max_n");
    tables->fallthrough();
    int max_n = 14;
    bool tables_override = false;
    tables->add_option("max_n", max_n, "largest vertex count")->required();
    tables->add_flag("--override-guards", tables_override, "allow max_n > 16");

    auto* construct = app.add_subcommand("construct", "named | hextorus k | petrie ... | star A B");
    std::vector<std::string> cargs;
    bool verify = false;
    int host_vertex = 0, guest_vertex = 0;
    std::string petrie_set;
    construct->add_option("args", cargs, "kind and parameters")->required();
    construct->add_flag("--verify", verify, "run the validators before emitting");
    construct->add_option("--host-vertex", host_vertex, "deleted vertex in the first factor");
    construct->add_option("--guest-vertex", guest_vertex, "deleted vertex in the second factor");
    construct->add_option("--set", petrie_set, "comma-separated vertices for petrie on .rot");

    auto* check = app.add_subcommand("check", "verdicts for .rot blocks");
    std::string check_input = "-";
    check->add_option("input", check_input, ".rot file or -");

    auto* oracle = app.add_subcommand("oracle", "brute-force counts over all rotation systems");
    oracle->fallthrough();
    std::string oracle_input = "-";
    bool cross_check = false, oracle_override = false;
    oracle->add_option("input", oracle_input, "graph6 file or -");
    oracle->add_flag("--cross-check", cross_check, "compare against the search; DIFF on mismatch");
    oracle->add_flag("--override-guards", oracle_override, "allow n > 20");

    auto* mingen = app.add_subcommand("mingen", "exhaustive minimum genus per graph");
    mingen->fallthrough();
    std::string mingen_input = "-";
    bool mingen_override = false;
    mingen->add_option("input", mingen_input, "graph6 file or -");
    mingen->add_flag("--override-guards", mingen_override, "allow n > 22");

    auto* iso = app.add_subcommand("iso", "canonical codes and duplicate groups for .rot blocks");
    std::string iso_input = "-";
    iso->add_option("input", iso_input, ".rot file or -");

    auto* generate = app.add_subcommand("generate", "all connected cubic graphs on n vertices");
    int gen_n = 0;
    bool gen_override = false;
    generate->add_option("n", gen_n, "vertex count (even)")->required();
    generate->add_flag("--override-guards", gen_override, "allow n > 16");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate)
            return cmd_enumerate(enum_input, jobs, count_only, mirrors,
                                 max_genus >= 0 ? std::optional<int>(max_genus) : std::nullopt,
                                 rot_out);
        if (*tables) {
            if (max_n > 16 && !tables_override)
                throw CLI::ValidationError("tables", "max_n > 16 needs --override-guards");
            return cmd_tables(max_n, jobs);
        }
        if (*construct) return cmd_construct(cargs, verify, host_vertex, guest_vertex, petrie_set);
        if (*check) return cmd_check(check_input);
        if (*oracle) return cmd_oracle(oracle_input, jobs, cross_check, oracle_override);
        if (*mingen) return cmd_mingen(mingen_input, jobs, mingen_override);
        if (*iso) return cmd_iso(iso_input);
        if (*generate) return cmd_generate(gen_n, gen_override);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
