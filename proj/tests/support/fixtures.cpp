#include "fixtures.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "varkg/genomic_model.hpp"

namespace fixtures {

using namespace varkg;

fs::path data_path(const std::string& name) { return fs::path(VARKG_TEST_DATA_DIR) / name; }

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

ScratchDir::ScratchDir(const std::string& tag) {
    std::string tmpl = (fs::temp_directory_path() / ("varkg-" + tag + "-XXXXXX")).string();
    if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
}

ScratchDir::~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
}

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') {
            out += "'\\''";
        } else {
            out += c;
        }
    }
    return out + "'";
}

CliResult run_cli(const std::string& args, const fs::path& cwd) {
    static int counter = 0;
    const auto tag = std::to_string(getpid()) + "-" + std::to_string(counter++);
    const fs::path out_file = fs::temp_directory_path() / ("varkg-cli-out-" + tag);
    const fs::path err_file = fs::temp_directory_path() / ("varkg-cli-err-" + tag);
    const std::string cmd = "cd " + shell_quote(cwd.string()) + " && " + shell_quote(VARKG_CLI_PATH) + " " + args +
                            " >" + shell_quote(out_file.string()) + " 2>" + shell_quote(err_file.string());
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_file(out_file);
    r.err = read_file(err_file);
    fs::remove(out_file);
    fs::remove(err_file);
    return r;
}

namespace {

Term pick_term(Rng& rng, const char* prefix, std::size_t pool) {
    return Term::iri(std::string("http://ex.org/") + prefix + std::to_string(uniform_below(rng, pool)));
}

Term pick_object(Rng& rng) {
    switch (uniform_below(rng, 3)) {
        case 0:
            return pick_term(rng, "s", 8);  // objects may be subjects too
        case 1:
            return Term::literal(std::to_string(uniform_below(rng, 5)), "http://www.w3.org/2001/XMLSchema#integer");
        default:
            return Term::literal("v" + std::to_string(uniform_below(rng, 4)));
    }
}

std::optional<Term> pick_graph(Rng& rng) {
    auto g = uniform_below(rng, 4);
    if (g == 0) return std::nullopt;
    return Term::iri("sg://G" + std::to_string(g));
}

}  // namespace

std::vector<Quad> random_quads(Rng& rng, std::size_t count) {
    std::vector<Quad> quads;
    for (std::size_t i = 0; i < count; ++i) {
        quads.push_back({pick_term(rng, "s", 8), pick_term(rng, "p", 4), pick_object(rng), pick_graph(rng)});
    }
    return quads;
}

std::vector<Pattern> random_patterns(Rng& rng, std::size_t max_patterns) {
    const std::size_t n = 1 + uniform_below(rng, max_patterns);
    std::vector<Pattern> patterns;
    auto var = [&] { return PatternSlot::var("v" + std::to_string(uniform_below(rng, 4))); };
    for (std::size_t i = 0; i < n; ++i) {
        Pattern p;
        p.subject = uniform_below(rng, 3) ? var() : PatternSlot::constant(pick_term(rng, "s", 9));
        p.predicate = uniform_below(rng, 2) ? var() : PatternSlot::constant(pick_term(rng, "p", 5));
        p.object = uniform_below(rng, 3) ? var() : PatternSlot::constant(pick_object(rng));
        switch (uniform_below(rng, 3)) {
            case 0:
                p.graph = PatternSlot::var("g" + std::to_string(i));
                break;
            case 1:
                p.graph = var();
                break;
            default: {
                auto g = pick_graph(rng);
                p.graph = PatternSlot::constant(g ? *g : Term::default_graph());
            }
        }
        patterns.push_back(std::move(p));
    }
    return patterns;
}

std::vector<DatasetRow> random_rows(Rng& rng, std::size_t n) {
    std::vector<DatasetRow> rows;
    const std::size_t accessions = 1 + uniform_below(rng, 6);
    const std::size_t keys = 1 + uniform_below(rng, std::max<std::size_t>(2, n / 2));
    for (std::size_t i = 0; i < n; ++i) {
        DatasetRow r;
        r.accession = "ACC" + std::to_string(uniform_below(rng, accessions));
        auto k = uniform_below(rng, keys);
        r.chrom = std::to_string(1 + k % 22);
        r.pos = static_cast<std::int64_t>(1000 + k);
        r.ref = "A";
        r.alt = "G";
        r.variant_key = variant_key(".", r.chrom, r.pos, r.ref, r.alt);
        r.ann_effect = uniform_below(rng, 2) ? "missense_variant" : "intron_variant";
        if (uniform_below(rng, 4)) r.raw_score = uniform_between(rng, -2.0, 20.0);
        rows.push_back(std::move(r));
    }
    return rows;
}

ProjectionGraph propagated_label_graph(std::size_t n_nodes, std::uint64_t seed) {
    Rng rng(seed);
    ProjectionGraph g;
    const std::size_t clique = 4;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    g.features = DenseMatrix(n_nodes, 6);
    g.labels.assign(n_nodes, -1);
    for (std::size_t start = 0; start < n_nodes; start += clique) {
        const std::size_t end = std::min(n_nodes, start + clique);
        const int cls = static_cast<int>(uniform_below(rng, kNumCaddCategories));
        const std::size_t sources = 1 + uniform_below(rng, 2);
        for (std::size_t v = start; v < end; ++v) {
            g.labels[v] = cls;
            g.features(v, 5) = 1.0;
            if (v - start < sources) g.features(v, static_cast<std::size_t>(cls)) = 1.0;
            for (std::size_t u = start; u < v; ++u) {
                pairs.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
            }
        }
    }
    g.adjacency = Adjacency::from_pairs(n_nodes, std::move(pairs));
    for (std::size_t v = 0; v < n_nodes; ++v) g.node_meta.push_back({"SYN", "node" + std::to_string(v)});
    g.split = split_masks(g.labels, {}, seed, false).split;
    return g;
}

ProjectionGraph random_graph(Rng& rng, std::size_t n, std::size_t n_features, double edge_probability) {
    ProjectionGraph g;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            if (uniform_unit(rng) < edge_probability) pairs.emplace_back(u, v);
        }
    }
    g.adjacency = Adjacency::from_pairs(n, std::move(pairs));
    g.features = DenseMatrix(n, n_features);
    for (double& x : g.features.data()) x = uniform_between(rng, -1.0, 1.0);
    for (std::size_t v = 0; v < n; ++v) {
        g.labels.push_back(static_cast<int>(uniform_below(rng, kNumCaddCategories)));
        g.node_meta.push_back({"R", std::to_string(v)});
    }
    g.split = split_masks(g.labels, {}, 1, false).split;
    return g;
}

std::vector<std::pair<std::size_t, std::size_t>> edge_list(const Adjacency& adjacency) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t v = 0; v < adjacency.num_nodes(); ++v) {
        for (auto u : adjacency.neighbors_of(v)) {
            if (v < u) out.emplace_back(v, u);
        }
    }
    return out;
}

}  // namespace fixtures
