// obelisk: compute, construct, verify and render oriented book embeddings.
//
// Exit codes: 0 success, 1 negative verdict (invalid embedding or forbidden
// structure found), 2 usage or parse error, 3 size guard. The only machine
// contracts are exit codes and --porcelain output (key<TAB>value lines).

#include "obelisk.h"

#include "CLI11.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

// Unique-ownership wrappers so error paths cannot leak C handles.
struct GraphDeleter {
    void operator()(obk_graph *g) const { obk_graph_free(g); }
};
struct EmbeddingDeleter {
    void operator()(obk_embedding *e) const { obk_embedding_free(e); }
};
struct ListDeleter {
    void operator()(obk_graph_list *l) const { obk_graph_list_free(l); }
};
using GraphPtr = std::unique_ptr<obk_graph, GraphDeleter>;
using EmbeddingPtr = std::unique_ptr<obk_embedding, EmbeddingDeleter>;
using ListPtr = std::unique_ptr<obk_graph_list, ListDeleter>;

// Grabs a char* result and frees the C-side copy.
std::string take_string(char *s) {
    std::string out = s ? s : "";
    obk_string_free(s);
    return out;
}

int exit_for(obk_status s) {
    if (s == OBK_OK)
        return 0;
    if (s == OBK_SIZE_GUARD)
        return 3;
    if (s == OBK_INVALID_EMBEDDING)
        return 1;
    return 2;
}

int fail(obk_status s) {
    std::cerr << "error: " << obk_last_error() << " [" << obk_status_name(s) << "]\n";
    return exit_for(s);
}

void kv(const std::string &key, const std::string &value) {
    std::cout << key << '\t' << value << '\n';
}

bool read_file(const std::string &path, std::string &out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

bool write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return false;
    }
    out << text;
    return out.good();
}

// Loads a graph file; on failure prints the error and sets the exit code.
bool load_graph(const std::string &path, GraphPtr &out, int &code) {
    std::string text;
    if (!read_file(path, text)) {
        code = 2;
        return false;
    }
    obk_graph *raw = nullptr;
    obk_status s = obk_graph_parse(text.c_str(), 1, &raw);
    if (s != OBK_OK) {
        code = fail(s);
        return false;
    }
    out.reset(raw);
    return true;
}

bool load_embedding(const std::string &path, EmbeddingPtr &out, int &code) {
    std::string text;
    if (!read_file(path, text)) {
        code = 2;
        return false;
    }
    obk_embedding *raw = nullptr;
    obk_status s = obk_embedding_parse(text.c_str(), &raw);
    if (s != OBK_OK) {
        code = fail(s);
        return false;
    }
    out.reset(raw);
    return true;
}

// OBELISK_MAX_N provides the default for every --max-n flag.
int env_max_n() {
    const char *raw = std::getenv("OBELISK_MAX_N");
    if (!raw || !*raw)
        return 0;
    char *end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1) {
        std::cerr << "warning: ignoring OBELISK_MAX_N='" << raw << "' (not a positive integer)\n";
        return 0;
    }
    return static_cast<int>(v);
}

// Compact one-line form for porcelain output: "n=3 m=2 arcs=1>2,1>3".
std::string one_line_graph(const obk_graph *g) {
    std::ostringstream out;
    out << "n=" << obk_graph_vertex_count(g) << " m=" << obk_graph_arc_count(g) << " arcs=";
    char *text = nullptr;
    if (obk_graph_format(g, &text) != OBK_OK)
        return out.str();
    std::istringstream lines(take_string(text));
    std::string line;
    bool first = true;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string tag;
        int tail = 0, head = 0;
        if (fields >> tag >> tail >> head && tag == "a") {
            if (!first)
                out << ',';
            out << tail << '>' << head;
            first = false;
        }
    }
    return out.str();
}

struct ObtArgs {
    std::string file;
    std::string witness_path;
    int max_n = 0;
    int jobs = 1;
    bool porcelain = false;
};

int run_obt(const ObtArgs &a) {
    GraphPtr g;
    int code = 0;
    if (!load_graph(a.file, g, code))
        return code;
    int thickness = 0;
    obk_embedding *raw = nullptr;
    obk_status s = obk_obt(g.get(), a.max_n, a.jobs, &thickness,
                           a.witness_path.empty() ? nullptr : &raw);
    if (s != OBK_OK)
        return fail(s);
    EmbeddingPtr witness(raw);
    if (a.porcelain)
        kv("obt", std::to_string(thickness));
    else
        std::cout << "obt = " << thickness << '\n';
    if (witness) {
        char *text = nullptr;
        if ((s = obk_embedding_format(witness.get(), &text)) != OBK_OK)
            return fail(s);
        if (!write_file(a.witness_path, take_string(text)))
            return 2;
        if (a.porcelain)
            kv("witness", a.witness_path);
    }
    return 0;
}

struct EmbedArgs {
    std::string file;
    std::string method = "auto";
    std::string out_path;
    int max_n = 0;
    int jobs = 1;
    bool porcelain = false;
};

int run_embed(const EmbedArgs &a) {
    GraphPtr g;
    int code = 0;
    if (!load_graph(a.file, g, code))
        return code;
    obk_embedding *raw = nullptr;
    char *used = nullptr;
    char *witness = nullptr;
    int found = 0;
    obk_status s = obk_embed(g.get(), a.method.c_str(), a.max_n, a.jobs, &raw, &used, &witness,
                             &found);
    if (s != OBK_OK)
        return fail(s);
    EmbeddingPtr emb(raw);
    std::string method_used = take_string(used);

    if (!found) {
        std::string report = take_string(witness);
        if (a.porcelain) {
            kv("method", method_used);
            kv("embeddable", "0");
        } else {
            std::cout << "method = " << method_used << '\n';
            std::cout << "no one-page embedding; forbidden structure found:\n" << report;
        }
        return 1;
    }

    char *text = nullptr;
    if ((s = obk_embedding_format(emb.get(), &text)) != OBK_OK)
        return fail(s);
    std::string body = take_string(text);
    if (a.porcelain) {
        kv("method", method_used);
        kv("embeddable", "1");
        kv("pages", std::to_string(obk_embedding_pages(emb.get())));
    } else {
        std::cout << "method = " << method_used << '\n';
        std::cout << "pages = " << obk_embedding_pages(emb.get()) << '\n';
    }
    if (!a.out_path.empty()) {
        if (!write_file(a.out_path, body))
            return 2;
    } else if (!a.porcelain) {
        std::cout << body;
    }
    return 0;
}

struct VerifyArgs {
    std::string graph_file;
    std::string embedding_file;
    bool porcelain = false;
};

int run_verify(const VerifyArgs &a) {
    GraphPtr g;
    EmbeddingPtr e;
    int code = 0;
    if (!load_graph(a.graph_file, g, code))
        return code;
    if (!load_embedding(a.embedding_file, e, code))
        return code;
    int valid = 0;
    char *report = nullptr;
    obk_status s = obk_verify(g.get(), e.get(), &valid, &report);
    if (s != OBK_OK)
        return fail(s);
    std::string text = take_string(report);
    int pages = obk_embedding_pages(e.get());
    if (a.porcelain) {
        kv("valid", valid ? "1" : "0");
        kv("pages", std::to_string(pages));
        if (!valid) {
            std::istringstream lines(text);
            std::string line;
            while (std::getline(lines, line))
                kv("violation", line);
        }
    } else if (valid) {
        std::cout << "valid, " << pages << (pages == 1 ? " page" : " pages") << '\n';
    } else {
        std::cout << text;
    }
    return valid ? 0 : 1;
}

struct RenderArgs {
    std::string graph_file;
    std::string embedding_file;
    std::string out_path;
};

int run_render(const RenderArgs &a) {
    GraphPtr g;
    EmbeddingPtr e;
    int code = 0;
    if (!load_graph(a.graph_file, g, code))
        return code;
    if (!load_embedding(a.embedding_file, e, code))
        return code;
    char *svg = nullptr;
    obk_status s = obk_render_svg(g.get(), e.get(), &svg);
    if (s != OBK_OK)
        return fail(s);
    std::string body = take_string(svg);
    if (a.out_path.empty()) {
        std::cout << body;
        return 0;
    }
    return write_file(a.out_path, body) ? 0 : 2;
}

struct MineArgs {
    int n = 0;
    int k = 0;
    int max_n = 0;
    bool porcelain = false;
};

int run_mine(const MineArgs &a) {
    obk_graph_list *raw = nullptr;
    obk_status s = obk_mine_critical(a.n, a.k, a.max_n, &raw);
    if (s != OBK_OK)
        return fail(s);
    ListPtr list(raw);
    int count = obk_graph_list_count(list.get());
    if (a.porcelain) {
        kv("count", std::to_string(count));
        for (int i = 0; i < count; ++i)
            kv("graph", one_line_graph(obk_graph_list_get(list.get(), i)));
        return 0;
    }
    std::cout << "# " << count << " critical graph" << (count == 1 ? "" : "s") << " (k = " << a.k
              << ", n <= " << a.n << ")\n";
    for (int i = 0; i < count; ++i) {
        char *text = nullptr;
        if ((s = obk_graph_format(obk_graph_list_get(list.get(), i), &text)) != OBK_OK)
            return fail(s);
        std::cout << '\n' << "# graph " << i + 1 << '\n' << take_string(text);
    }
    return 0;
}

struct GenArgs {
    std::string shape;
    int n = 0;
    std::uint64_t seed = 0;
    std::string out_path;
};

int run_gen(const GenArgs &a) {
    obk_graph *raw = nullptr;
    obk_status s = obk_generate(a.shape.c_str(), a.n, a.seed, &raw);
    if (s != OBK_OK)
        return fail(s);
    GraphPtr g(raw);
    char *text = nullptr;
    if ((s = obk_graph_format(g.get(), &text)) != OBK_OK)
        return fail(s);
    std::string body = take_string(text);
    if (a.out_path.empty()) {
        std::cout << body;
        return 0;
    }
    return write_file(a.out_path, body) ? 0 : 2;
}

struct RecognizeArgs {
    std::string file;
    bool porcelain = false;
};

int run_recognize(const RecognizeArgs &a) {
    GraphPtr g;
    int code = 0;
    if (!load_graph(a.file, g, code))
        return code;

    char *shape_raw = nullptr;
    obk_status s = obk_graph_shape(g.get(), &shape_raw);
    if (s != OBK_OK)
        return fail(s);
    std::string shape = take_string(shape_raw);

    int is_m1 = 0;
    char *family_raw = nullptr;
    if ((s = obk_classify_m1(g.get(), &is_m1, &family_raw)) != OBK_OK)
        return fail(s);
    std::string family = is_m1 ? take_string(family_raw) : "";

    if (a.porcelain) {
        kv("shape", shape);
        kv("one-page-critical", is_m1 ? family : "no");
    } else {
        std::cout << "shape = " << shape << '\n';
        if (is_m1)
            std::cout << "one-page-critical: " << family << '\n';
    }

    // Forbidden-structure detection applies to the uni-dicyclic classes only.
    if (shape != "unidicyclic" && shape != "dicycle")
        return 0;
    int found = 0;
    char *report_raw = nullptr;
    if ((s = obk_recognize(g.get(), &found, &report_raw)) != OBK_OK)
        return fail(s);
    std::string report = take_string(report_raw);
    if (a.porcelain) {
        kv("forbidden", found ? "1" : "0");
        if (found) {
            std::istringstream lines(report);
            std::string line;
            while (std::getline(lines, line))
                kv("witness", line);
        }
    } else if (found) {
        std::cout << "forbidden structure found:\n" << report;
    } else {
        std::cout << "forbidden structure: none\n";
    }
    return found ? 1 : 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"oriented book embeddings: compute, construct, verify, render"};
    app.require_subcommand(1);
    int default_max_n = env_max_n();

    ObtArgs obt_args;
    obt_args.max_n = default_max_n;
    auto *obt_cmd = app.add_subcommand("obt", "exact oriented book thickness of a graph file");
    obt_cmd->add_option("file", obt_args.file, "graph file")->required();
    obt_cmd->add_option("--max-n", obt_args.max_n, "raise the exact-search size guard");
    obt_cmd->add_option("--jobs", obt_args.jobs, "worker threads (never changes the result)");
    obt_cmd->add_option("--witness", obt_args.witness_path, "write a witness embedding here");
    obt_cmd->add_flag("--porcelain", obt_args.porcelain, "machine-readable output");

    EmbedArgs embed_args;
    embed_args.max_n = default_max_n;
    auto *embed_cmd = app.add_subcommand("embed", "construct a book embedding");
    embed_cmd->add_option("file", embed_args.file, "graph file")->required();
    embed_cmd->add_option("--method", embed_args.method, "auto (constructive first) or exact")
        ->check(CLI::IsMember({"auto", "exact"}));
    embed_cmd->add_option("-o,--out", embed_args.out_path, "write the embedding here");
    embed_cmd->add_option("--max-n", embed_args.max_n, "raise the exact-search size guard");
    embed_cmd->add_option("--jobs", embed_args.jobs, "worker threads (never changes the result)");
    embed_cmd->add_flag("--porcelain", embed_args.porcelain, "machine-readable output");

    VerifyArgs verify_args;
    auto *verify_cmd = app.add_subcommand("verify", "check an embedding against its graph");
    verify_cmd->add_option("graph", verify_args.graph_file, "graph file")->required();
    verify_cmd->add_option("embedding", verify_args.embedding_file, "embedding file")->required();
    verify_cmd->add_flag("--porcelain", verify_args.porcelain, "machine-readable output");

    RenderArgs render_args;
    auto *render_cmd = app.add_subcommand("render", "render a valid embedding as SVG");
    render_cmd->add_option("graph", render_args.graph_file, "graph file")->required();
    render_cmd->add_option("embedding", render_args.embedding_file, "embedding file")->required();
    render_cmd->add_option("-o,--out", render_args.out_path, "output SVG path");

    MineArgs mine_args;
    mine_args.max_n = default_max_n;
    auto *mine_cmd = app.add_subcommand("mine", "enumerate k-page-critical graphs");
    mine_cmd->add_option("--n", mine_args.n, "maximum vertex count")->required();
    mine_cmd->add_option("--k", mine_args.k, "page count k")->required();
    mine_cmd->add_option("--max-n", mine_args.max_n, "raise the enumeration size guard");
    mine_cmd->add_flag("--porcelain", mine_args.porcelain, "machine-readable output");

    GenArgs gen_args;
    auto *gen_cmd = app.add_subcommand("gen", "generate a reproducible random instance");
    gen_cmd->add_option("--shape", gen_args.shape, "tree, cycle, dicycle, unidicyclic or fountain")
        ->required()
        ->check(CLI::IsMember({"tree", "cycle", "dicycle", "unidicyclic", "fountain"}));
    gen_cmd->add_option("--n", gen_args.n, "vertex count (fountain: spine length)")->required();
    gen_cmd->add_option("--seed", gen_args.seed, "PRNG seed")->required();
    gen_cmd->add_option("-o,--out", gen_args.out_path, "output path (default stdout)");

    RecognizeArgs recognize_args;
    auto *recognize_cmd =
        app.add_subcommand("recognize", "classify a graph and hunt for forbidden structures");
    recognize_cmd->add_option("file", recognize_args.file, "graph file")->required();
    recognize_cmd->add_flag("--porcelain", recognize_args.porcelain, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors are exit 2, --help is success
    }

    if (app.got_subcommand(obt_cmd))
        return run_obt(obt_args);
    if (app.got_subcommand(embed_cmd))
        return run_embed(embed_args);
    if (app.got_subcommand(verify_cmd))
        return run_verify(verify_args);
    if (app.got_subcommand(render_cmd))
        return run_render(render_args);
    if (app.got_subcommand(mine_cmd))
        return run_mine(mine_args);
    if (app.got_subcommand(gen_cmd))
        return run_gen(gen_args);
    if (app.got_subcommand(recognize_cmd))
        return run_recognize(recognize_args);
    return 2;
}
