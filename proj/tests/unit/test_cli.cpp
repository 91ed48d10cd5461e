#include <gtest/gtest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "varkg/graph_io.hpp"
#include "varkg/rdf_emit.hpp"

using fixtures::read_file;
using fixtures::run_cli;
using fixtures::ScratchDir;
using fixtures::shell_quote;
using fixtures::write_file;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& name) { return shell_quote(fixtures::data_path(name).string()); }

const std::string kVcfHeader =
    "##fileformat=VCFv4.2\n"
    "#CHROM\tPOS\tID\tREF\tALT\tQUAL\tFILTER\tINFO\n";
const std::string kCaddHeader = "#Chrom\tPos\tRef\tAlt\tRawScore\tPHRED\n";

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, NoSubcommandIsUsageError) {
    ScratchDir dir("cli");
    auto r = run_cli("", dir.path());
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_TRUE(contains(r.err + r.out, "subcommand")) << r.err;
}

TEST(Cli, HelpExitsZero) {
    ScratchDir dir("cli");
    auto r = run_cli("--help", dir.path());
    EXPECT_EQ(r.exit_code, 0);
    for (const char* sub : {"convert-vcf", "convert-cadd", "emit-ontology", "build", "train", "grid", "query"}) {
        EXPECT_TRUE(contains(r.out, sub)) << sub;
    }
}

TEST(Cli, UnknownOptionValueIsUsageError) {
    ScratchDir dir("cli");
    EXPECT_EQ(run_cli("build x.nq --out o --mode sideways", dir.path()).exit_code, 1);
    EXPECT_EQ(run_cli("train --model gat g.bin --out o", dir.path()).exit_code, 1);
}

TEST(Cli, ConvertVcfPaperRecordGoldenLines) {
    ScratchDir dir("cli");
    auto r = run_cli("convert-vcf " + data("SRR13112995.vcf") + " --out rdf", dir.path());
    ASSERT_EQ(r.exit_code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "1 of 1 files converted"));
    auto nq = read_file(dir / "rdf/SRR13112995.nq");
    varkg::VariantRecord rec;
    rec.accession = "SRR13112995";
    rec.chrom = "1";
    rec.pos = 16963;
    rec.ref_allele = "G";
    rec.alt_alleles = {"A"};
    const auto origin = varkg::origin_iri(rec, 0).value;
    EXPECT_TRUE(contains(nq, "<" + origin +
                                 "> <sg://0.99.11/vcf2rdf/variant/REF> <sg://0.99.11/vcf2rdf/sequence/G> "
                                 "<sg://SRR13112995> .\n"))
        << nq;
    EXPECT_TRUE(contains(nq, "<" + origin + "> <http://biohackathon.org/resource/faldo#position> "
                                            "\"16963\"^^<http://www.w3.org/2001/XMLSchema#integer> <sg://SRR13112995> .\n"));
    // 7 per allele + 5 per ANN entry
    EXPECT_EQ(std::count(nq.begin(), nq.end(), '\n'), 17);
}

TEST(Cli, ConvertCaddPaperRowTurtle) {
    ScratchDir dir("cli");
    auto r = run_cli("convert-cadd " + data("SRR13112995.tsv") + " --out rdf", dir.path());
    ASSERT_EQ(r.exit_code, 0) << r.err;
    auto ttl = read_file(dir / "rdf/SRR13112995.ttl");
    EXPECT_TRUE(contains(ttl, "<http://sg.org/SRR13112995/1/variant1> a ns1:variant ;")) << ttl;
    EXPECT_TRUE(contains(ttl, "ns1:raw_score 0.900784"));
    EXPECT_TRUE(contains(ttl, "ns1:phred 12.72"));
}

TEST(Cli, HeaderOnlyCaddConvertsToNoStatements) {
    ScratchDir dir("cli");
    write_file(dir / "ACC1.tsv", kCaddHeader);
    auto r = run_cli("convert-cadd ACC1.tsv --out rdf", dir.path());
    EXPECT_EQ(r.exit_code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "0 records, 0 statements"));
}

TEST(Cli, EmptyPatternMatchIsZeroFiles) {
    ScratchDir dir("cli");
    auto r = run_cli("convert-vcf 'nothing*.vcf' --out rdf", dir.path());
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "0 files\n");
}

TEST(Cli, MissingInputIsInputError) {
    ScratchDir dir("cli");
    auto r = run_cli("convert-vcf missing.vcf --out rdf", dir.path());
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_TRUE(contains(r.err, "missing.vcf"));
}

TEST(Cli, MixedBatchConvertsGoodFilesAndListsFailures) {
    ScratchDir dir("cli");
    write_file(dir / "in/GOOD.vcf", kVcfHeader + "1\t10\t.\tA\tG\t50\tPASS\tDP=3\n");
    write_file(dir / "in/EMPTY.vcf", "");
    write_file(dir / "in/BAD.vcf", "1\t10\t.\tA\tG\t50\tPASS\tDP=3\n");
    auto r = run_cli("convert-vcf in --out rdf --threads 2", dir.path());
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_TRUE(contains(r.out, "1 of 3 files converted")) << r.out;
    EXPECT_TRUE(contains(r.out, "failures:\n"));
    EXPECT_TRUE(contains(r.out, "EMPTY.vcf"));
    EXPECT_TRUE(contains(r.out, "BAD.vcf"));
    EXPECT_TRUE(fs::exists(dir / "rdf/GOOD.nq"));
    EXPECT_FALSE(fs::exists(dir / "rdf/EMPTY.nq"));
    EXPECT_FALSE(fs::exists(dir / "rdf/BAD.nq"));
}

TEST(Cli, StrictModeFailsOnMalformedLine) {
    ScratchDir dir("cli");
    write_file(dir / "A.vcf", kVcfHeader + "1\tten\t.\tA\tG\t50\tPASS\tDP=3\n1\t11\t.\tA\tG\t50\tPASS\tDP=3\n");
    auto lenient = run_cli("convert-vcf A.vcf --out rdf", dir.path());
    EXPECT_EQ(lenient.exit_code, 0);
    EXPECT_TRUE(contains(lenient.err, "line 3")) << lenient.err;
    auto strict = run_cli("convert-vcf A.vcf --out strict --strict", dir.path());
    EXPECT_EQ(strict.exit_code, 1);
    EXPECT_FALSE(fs::exists(dir / "strict/A.nq"));
}

TEST(Cli, AccessionOverrides) {
    ScratchDir dir("cli");
    write_file(dir / "a.vcf", kVcfHeader + "1\t10\t.\tA\tG\t50\tPASS\t.\n");
    write_file(dir / "b.vcf", kVcfHeader + "1\t10\t.\tA\tG\t50\tPASS\t.\n");
    ASSERT_EQ(run_cli("convert-vcf a.vcf --out one --accession ERR1", dir.path()).exit_code, 0);
    EXPECT_TRUE(contains(read_file(dir / "one/ERR1.nq"), "<sg://ERR1> ."));
    EXPECT_EQ(run_cli("convert-vcf a.vcf b.vcf --out two --accession ERR1", dir.path()).exit_code, 1);
    write_file(dir / "map.txt", "# path accession\na.vcf SRRA\nb.vcf\tSRRB\n");
    ASSERT_EQ(run_cli("convert-vcf a.vcf b.vcf --out three --accession-map map.txt", dir.path()).exit_code, 0);
    EXPECT_TRUE(fs::exists(dir / "three/SRRA.nq"));
    EXPECT_TRUE(fs::exists(dir / "three/SRRB.nq"));
}

TEST(Cli, ConvertIsDeterministic) {
    ScratchDir dir("cli");
    const std::string corpus = shell_quote((fixtures::data_path("corpus") / "vcf").string());
    ASSERT_EQ(run_cli("convert-vcf " + corpus + " --out a --threads 3", dir.path()).exit_code, 0);
    ASSERT_EQ(run_cli("convert-vcf " + corpus + " --out b", dir.path()).exit_code, 0);
    std::size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(dir / "a")) {
        const auto name = entry.path().filename().string();
        if (name == "run-manifest.json") continue;
        EXPECT_EQ(read_file(entry.path()), read_file(dir / "b" / name)) << name;
        ++compared;
    }
    EXPECT_EQ(compared, 5u);
}

TEST(Cli, EmitOntology) {
    ScratchDir dir("cli");
    auto r = run_cli("emit-ontology --out onto", dir.path());
    ASSERT_EQ(r.exit_code, 0);
    auto ttl = read_file(dir / "onto/ontology.ttl");
    EXPECT_TRUE(contains(ttl, "wd:Q37748"));
    EXPECT_TRUE(contains(r.out, std::to_string(varkg::emit_ontology().size()) + " statements"));
}

namespace {

/** Two accessions sharing one variant, CADD scores for one of them. */
void write_pair(const ScratchDir& dir) {
    write_file(dir / "raw/SRRA.vcf", kVcfHeader + "1\t100\t.\tG\tA\t50\tPASS\t.\n");
    write_file(dir / "raw/SRRB.vcf", kVcfHeader + "1\t100\t.\tG\tA\t40\tPASS\t.\n");
    write_file(dir / "raw/SRRA.tsv", kCaddHeader + "1\t100\tG\tA\t0.900784\t12.72\n");
}

}  // namespace

TEST(Cli, BuildTwoAccessionsSharingOneVariant) {
    ScratchDir dir("cli");
    write_pair(dir);
    ASSERT_EQ(run_cli("convert-vcf raw --out rdf", dir.path()).exit_code, 0);
    ASSERT_EQ(run_cli("convert-cadd raw --out rdf", dir.path()).exit_code, 0);
    auto r = run_cli("build rdf --out graph --split 1,0,0", dir.path());
    ASSERT_EQ(r.exit_code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "2 nodes, 1 undirected edge")) << r.out;
    EXPECT_TRUE(contains(r.out, "labels: 0=0 1=1 2=0 3=0 4=0 (labeled 1, unlabeled 1)")) << r.out;
    auto g = varkg::import_graph(dir / "graph/graph.bin");
    EXPECT_EQ(g.num_nodes(), 2u);
    EXPECT_EQ(g.labels, (std::vector<int>{1, -1}));
    for (const char* f : {"dataset.tsv", "dataset.jsonl", "vocab.tsv", "build-report.txt", "run-manifest.json"}) {
        EXPECT_TRUE(fs::exists(dir / "graph" / f)) << f;
    }
    auto manifest = nlohmann::json::parse(read_file(dir / "graph/run-manifest.json"));
    EXPECT_EQ(manifest["command"], "build");
    EXPECT_EQ(manifest["outputs"].size(), 5u);
}

TEST(Cli, BuildWithoutLabelsFails) {
    ScratchDir dir("cli");
    write_pair(dir);
    ASSERT_EQ(run_cli("convert-vcf raw --out rdf", dir.path()).exit_code, 0);
    auto r = run_cli("build rdf --out graph", dir.path());
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_TRUE(contains(r.err, "no labeled nodes"));
}

TEST(Cli, QueryPrintsBindings) {
    ScratchDir dir("cli");
    ASSERT_EQ(run_cli("convert-vcf " + data("SRR13112995.vcf") + " --out rdf", dir.path()).exit_code, 0);
    auto r = run_cli("query rdf -w '?v faldo:position ?p'", dir.path());
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto lines = r.out;
    EXPECT_EQ(lines.substr(0, lines.find('\n')), "?v\t?p");
    EXPECT_TRUE(contains(lines, "\t\"16963\"^^<http://www.w3.org/2001/XMLSchema#integer>\n"));
    EXPECT_TRUE(contains(r.err, "1 result(s)"));

    auto genes = run_cli("query rdf -w '?a <sg://0.99.11/vcf2rdf/info/ANN/gene_name> ?gene ?g'", dir.path());
    ASSERT_EQ(genes.exit_code, 0);
    EXPECT_TRUE(contains(genes.out, "\"MIR6859-1\"\t<sg://SRR13112995>"));
    EXPECT_TRUE(contains(genes.out, "\"WASH7P\""));
    EXPECT_EQ(run_cli("query rdf -w '?a ?b'", dir.path()).exit_code, 1);
}

TEST(Cli, TrainRejectsCorruptGraph) {
    ScratchDir dir("cli");
    write_file(dir / "g.bin", "VKGGRAPH not really");
    auto r = run_cli("train g.bin --model gcn --out m", dir.path());
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_TRUE(contains(r.err, "error:"));
}

TEST(Cli, TrainGridAndConfigReplay) {
    ScratchDir dir("cli");
    const std::string corpus = fixtures::data_path("corpus").string();
    ASSERT_EQ(run_cli("convert-vcf " + shell_quote(corpus + "/vcf") + " --out rdf", dir.path()).exit_code, 0);
    ASSERT_EQ(run_cli("convert-cadd " + shell_quote(corpus + "/cadd") + " --out rdf", dir.path()).exit_code, 0);
    ASSERT_EQ(run_cli("build rdf --out graph --seed 3", dir.path()).exit_code, 0);

    auto t = run_cli("train graph/graph.bin --model sage --hidden 8 --lr 0.01 --epochs 20 --out model", dir.path());
    ASSERT_EQ(t.exit_code, 0) << t.err;
    for (const char* f : {"sage.model", "sage-history.csv", "sage-confusion.csv", "sage-confusion.txt"}) {
        EXPECT_TRUE(fs::exists(dir / "model" / f)) << f;
    }
    auto history = read_file(dir / "model/sage-history.csv");
    EXPECT_EQ(std::count(history.begin(), history.end(), '\n'), 1 + 3 * 20);

    auto g = run_cli("grid graph/graph.bin --hidden 2,4 --lr 0.01 --epochs 5 --out grid", dir.path());
    ASSERT_EQ(g.exit_code, 0) << g.err;
    auto table = read_file(dir / "grid/grid.txt");
    EXPECT_TRUE(contains(table, "GraphSAGE"));
    EXPECT_TRUE(contains(table, "GCN"));

    // Replaying the recorded configuration reproduces the outputs.
    auto manifest = nlohmann::json::parse(read_file(dir / "grid/run-manifest.json"));
    ScratchDir replay("cli-replay");
    fs::create_directories(replay / "graph");
    fs::copy_file(dir / "graph/graph.bin", replay / "graph/graph.bin");
    write_file(replay / "cfg.toml", manifest["config"].get<std::string>());
    auto again = run_cli("--config cfg.toml", replay.path());
    ASSERT_EQ(again.exit_code, 0) << again.err;
    EXPECT_EQ(read_file(replay / "grid/grid.txt"), table);
    EXPECT_EQ(read_file(replay / "grid/grid.csv"), read_file(dir / "grid/grid.csv"));
    EXPECT_EQ(read_file(replay / "grid/run-manifest.json"), read_file(dir / "grid/run-manifest.json"));
}
