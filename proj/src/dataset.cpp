#include "varkg/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <tuple>

#include <json.hpp>

#include "varkg/genomic_model.hpp"
#include "varkg/rdf_emit.hpp"
#include "varkg/vocabulary.hpp"

namespace varkg {

namespace {

using CaddKey = std::tuple<std::string, std::string, std::int64_t, std::string, std::string>;

std::optional<std::int64_t> to_int(std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::optional<double> to_real(std::string_view s) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::optional<std::string> strip_prefix(const Term& t, std::string_view prefix) {
    if (!t.is_iri() || !std::string_view(t.value).starts_with(prefix)) return std::nullopt;
    return t.value.substr(prefix.size());
}

Pattern pat(std::string s, std::string_view p, std::string o, std::string g) {
    return {PatternSlot::var(std::move(s)), PatternSlot::iri(p), PatternSlot::var(std::move(o)),
            PatternSlot::var(std::move(g))};
}

// "http://sg.org/<accession>/<chrom>/variant<n>" -> (accession, chrom)
std::optional<std::pair<std::string, std::string>> cadd_subject_parts(const Term& subject) {
    auto rest = strip_prefix(subject, vocab::kBase);
    if (!rest) return std::nullopt;
    auto first = rest->find('/');
    if (first == std::string::npos) return std::nullopt;
    auto second = rest->find('/', first + 1);
    if (second == std::string::npos || rest->find('/', second + 1) != std::string::npos) return std::nullopt;
    if (!std::string_view(*rest).substr(second + 1).starts_with("variant")) return std::nullopt;
    return std::pair{rest->substr(0, first), rest->substr(first + 1, second - first - 1)};
}

std::map<CaddKey, std::pair<double, double>> collect_cadd(const QuadStore& store) {
    using namespace vocab;
    std::vector<Pattern> q = {
        {PatternSlot::var("s"), PatternSlot::iri(kRdfType), PatternSlot::iri(kVariant), PatternSlot::var("g")},
        pat("s", kHasPos, "pos", "g"),
        pat("s", kHasRefGenome, "ref", "g"),
        pat("s", kHasAltGenome, "alt", "g"),
        pat("s", kHasCaddScores, "c", "g"),
        pat("c", kRawScore, "raw", "g"),
        pat("c", kPhred, "phred", "g"),
    };
    auto bindings = store.match(q);
    // Deterministic winner when two CADD subjects describe the same allele.
    std::sort(bindings.begin(), bindings.end(),
              [](const Binding& a, const Binding& b) { return a.at("s").value < b.at("s").value; });
    std::map<CaddKey, std::pair<double, double>> out;
    for (const auto& b : bindings) {
        auto parts = cadd_subject_parts(b.at("s"));
        auto pos = to_int(b.at("pos").value);
        auto raw = to_real(b.at("raw").value);
        auto phred = to_real(b.at("phred").value);
        if (!parts || !pos || !raw || !phred) continue;
        out.try_emplace({parts->first, parts->second, *pos, b.at("ref").value, b.at("alt").value},
                        std::pair{*raw, *phred});
    }
    return out;
}

}  // namespace

std::vector<DatasetRow> extract_dataset(const QuadStore& store) {
    using namespace vocab;
    const auto cadd = collect_cadd(store);

    std::vector<Pattern> q = {
        pat("v", kFaldoPosition, "pos", "g"),
        pat("v", kVcfRef, "ref", "g"),
        pat("v", kVcfAlt, "alt", "g"),
        {PatternSlot::var("chr"), PatternSlot::iri(kHasVariant), PatternSlot::var("v"), PatternSlot::var("g")},
        pat("chr", kHasChromosomeNumber, "chrom", "g"),
    };

    struct Keyed {
        DatasetRow row;
        std::string origin;
        std::size_t ann_ordinal;
    };
    std::vector<Keyed> keyed;
    for (const auto& b : store.match(q)) {
        const Term& v = b.at("v");
        const Term& g = b.at("g");
        auto accession = strip_prefix(g, kGraphPrefix);
        auto ref = strip_prefix(b.at("ref"), kSequencePrefix);
        auto alt = strip_prefix(b.at("alt"), kSequencePrefix);
        auto pos = to_int(b.at("pos").value);
        if (!accession || !ref || !alt || !pos) continue;

        DatasetRow base;
        base.accession = *accession;
        base.chrom = b.at("chrom").value;
        base.pos = *pos;
        base.ref = *ref;
        base.alt = *alt;
        auto ids = store.objects(v, kVcfId, g);
        base.variant_key = variant_key(ids.empty() ? std::string_view(".") : std::string_view(ids.front().value),
                                       base.chrom, base.pos, base.ref, base.alt);
        if (auto quals = store.objects(v, kVcfQual, g); !quals.empty()) base.qual = to_real(quals.front().value);
        if (auto filters = store.objects(v, kVcfFilter, g); !filters.empty()) base.filter = filters.front().value;
        if (auto it = cadd.find({base.accession, base.chrom, base.pos, base.ref, base.alt}); it != cadd.end()) {
            base.raw_score = it->second.first;
            base.phred = it->second.second;
        }

        std::size_t ordinal = 1;
        for (;; ++ordinal) {
            Term subject = ann_subject(v, ordinal);
            auto allele = store.objects(subject, kAnnAllele, g);
            if (allele.empty()) break;
            DatasetRow row = base;
            auto first = [&](std::string_view pred) {
                auto objs = store.objects(subject, pred, g);
                return objs.empty() ? std::string() : objs.front().value;
            };
            row.ann_allele = allele.front().value;
            row.ann_effect = first(kAnnEffect);
            row.ann_impact = first(kAnnImpact);
            row.gene_name = first(kAnnGeneName);
            row.gene_id = first(kAnnGeneId);
            keyed.push_back({std::move(row), v.value, ordinal});
        }
        if (ordinal == 1) keyed.push_back({std::move(base), v.value, 0});
    }

    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        const auto& x = a.row;
        const auto& y = b.row;
        if (x.accession != y.accession) return x.accession < y.accession;
        if (x.chrom != y.chrom) return chrom_less(x.chrom, y.chrom);
        if (x.pos != y.pos) return x.pos < y.pos;
        if (x.alt != y.alt) return x.alt < y.alt;
        if (x.ref != y.ref) return x.ref < y.ref;
        if (a.origin != b.origin) return a.origin < b.origin;
        return a.ann_ordinal < b.ann_ordinal;
    });
    std::vector<DatasetRow> rows;
    rows.reserve(keyed.size());
    for (auto& k : keyed) rows.push_back(std::move(k.row));
    return rows;
}

void write_dataset_tsv(std::span<const DatasetRow> rows, std::ostream& out) {
    out << "accession\tvariant_key\tchrom\tpos\tref\talt\tqual\tfilter\tann_allele\tann_effect\t"
           "ann_impact\tgene_name\tgene_id\traw_score\tphred\n";
    auto opt = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string("."); };
    for (const auto& r : rows) {
        out << r.accession << '\t' << r.variant_key << '\t' << r.chrom << '\t' << r.pos << '\t' << r.ref << '\t'
            << r.alt << '\t' << opt(r.qual) << '\t' << r.filter << '\t' << r.ann_allele << '\t' << r.ann_effect
            << '\t' << r.ann_impact << '\t' << r.gene_name << '\t' << r.gene_id << '\t' << opt(r.raw_score)
            << '\t' << opt(r.phred) << '\n';
    }
}

void write_dataset_jsonl(std::span<const DatasetRow> rows, std::ostream& out) {
    auto opt = [](const std::optional<double>& v) {
        return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["accession"] = r.accession;
        j["variant_key"] = r.variant_key;
        j["chrom"] = r.chrom;
        j["pos"] = r.pos;
        j["ref"] = r.ref;
        j["alt"] = r.alt;
        j["qual"] = opt(r.qual);
        j["filter"] = r.filter;
        j["ann_allele"] = r.ann_allele;
        j["ann_effect"] = r.ann_effect;
        j["ann_impact"] = r.ann_impact;
        j["gene_name"] = r.gene_name;
        j["gene_id"] = r.gene_id;
        j["raw_score"] = opt(r.raw_score);
        j["phred"] = opt(r.phred);
        out << j.dump() << '\n';
    }
}

}  // namespace varkg
