#include "varkg/features.hpp"
#include "varkg/genomic_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>

#include "varkg/error.hpp"
#include "varkg/parse_common.hpp"

namespace varkg {

std::string_view categorical_value(const DatasetRow& r, std::size_t index) {
    switch (index) {
        case 0: return r.accession;
        case 1: return r.chrom;
        case 2: return r.ref;
        case 3: return r.alt;
        case 4: return r.ann_allele;
        case 5: return r.ann_effect;
        case 6: return r.ann_impact;
        case 7: return r.gene_name;
        case 8: return r.gene_id;
        default: throw std::out_of_range("categorical feature index");
    }
}

namespace {

std::array<std::optional<double>, 2> numeric_values(const DatasetRow& r) {
    return {static_cast<double>(r.pos), r.qual};
}

double scale(double v, double lo, double hi) {
    if (!(hi > lo)) return 0.0;
    return std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
}

bool uses(const FeatureVocab& v, std::size_t f) { return f != 0 || v.include_accession; }

}  // namespace

FeatureVocab FeatureVocab::fit(std::span<const DatasetRow> rows, bool include_accession, std::string fitted_on) {
    FeatureVocab v;
    v.include_accession = include_accession;
    v.fitted_on = std::move(fitted_on);
    for (std::size_t f = 0; f < kCategoricalFeatures.size(); ++f) {
        std::set<std::string> values;
        for (const auto& r : rows) values.emplace(categorical_value(r, f));
        std::size_t i = 0;
        for (const auto& value : values) v.categories[f].emplace(value, i++);
    }
    for (std::size_t k = 0; k < kNumericFeatures.size(); ++k) {
        bool seen = false;
        for (const auto& r : rows) {
            auto x = numeric_values(r)[k];
            if (!x) continue;
            v.min[k] = seen ? std::min(v.min[k], *x) : *x;
            v.max[k] = seen ? std::max(v.max[k], *x) : *x;
            seen = true;
        }
    }
    return v;
}

std::size_t FeatureVocab::dimension(Encoding encoding) const {
    std::size_t d = kNumericFeatures.size();
    for (std::size_t f = 0; f < kCategoricalFeatures.size(); ++f) {
        if (!uses(*this, f)) continue;
        d += encoding == Encoding::onehot ? categories[f].size() : 1;
    }
    return d;
}

DenseMatrix encode_features(std::span<const DatasetRow> rows, const FeatureVocab& vocab, Encoding encoding) {
    if (!rows.empty()) {
        for (std::size_t f = 0; f < kCategoricalFeatures.size(); ++f) {
            if (uses(vocab, f) && vocab.categories[f].empty()) {
                throw std::invalid_argument("feature dimension mismatch: vocabulary has no values for '" +
                                            std::string(kCategoricalFeatures[f]) + "'");
            }
        }
    }
    DenseMatrix x(rows.size(), vocab.dimension(encoding));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t col = 0;
        for (std::size_t f = 0; f < kCategoricalFeatures.size(); ++f) {
            if (!uses(vocab, f)) continue;
            const auto& map = vocab.categories[f];
            auto it = map.find(std::string(categorical_value(rows[i], f)));
            if (encoding == Encoding::onehot) {
                if (it != map.end()) x(i, col + it->second) = 1.0;
                col += map.size();
            } else {
                x(i, col) = it == map.end() ? 0.0 : static_cast<double>(it->second + 1);
                col += 1;
            }
        }
        auto nums = numeric_values(rows[i]);
        for (std::size_t k = 0; k < kNumericFeatures.size(); ++k) {
            x(i, col++) = nums[k] ? scale(*nums[k], vocab.min[k], vocab.max[k]) : 0.0;
        }
    }
    return x;
}

void FeatureVocab::save(std::ostream& out) const {
    out << "#include_accession\t" << (include_accession ? 1 : 0) << "\n";
    out << "#fitted_on\t" << fitted_on << "\n";
    for (std::size_t k = 0; k < kNumericFeatures.size(); ++k) {
        out << "#range\t" << kNumericFeatures[k] << "\t" << format_real(min[k]) << "\t" << format_real(max[k]) << "\n";
    }
    for (std::size_t f = 0; f < kCategoricalFeatures.size(); ++f) {
        // index order, which equals sorted value order
        for (const auto& [value, index] : categories[f]) {
            out << kCategoricalFeatures[f] << "\t" << value << "\t" << index << "\n";
        }
    }
}

FeatureVocab FeatureVocab::load(std::istream& in) {
    FeatureVocab v;
    std::string line;
    std::size_t line_number = 0;
    auto real = [&](std::string_view s) {
        double d = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
        if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(line_number, "bad number in vocabulary");
        return d;
    };
    while (std::getline(in, line)) {
        ++line_number;
        std::string_view l = chomp(line);
        if (l.empty()) continue;
        auto f = split(l, '\t');
        if (f[0] == "#include_accession" && f.size() == 2) {
            v.include_accession = f[1] == "1";
        } else if (f[0] == "#fitted_on" && f.size() == 2) {
            v.fitted_on = f[1];
        } else if (f[0] == "#range" && f.size() == 4) {
            auto it = std::find(kNumericFeatures.begin(), kNumericFeatures.end(), f[1]);
            if (it == kNumericFeatures.end()) throw ParseError(line_number, "unknown numeric feature");
            auto k = static_cast<std::size_t>(it - kNumericFeatures.begin());
            v.min[k] = real(f[2]);
            v.max[k] = real(f[3]);
        } else if (f.size() == 3 && !f[0].starts_with("#")) {
            auto it = std::find(kCategoricalFeatures.begin(), kCategoricalFeatures.end(), f[0]);
            if (it == kCategoricalFeatures.end()) throw ParseError(line_number, "unknown feature '" + std::string(f[0]) + "'");
            std::size_t index = 0;
            auto [p, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), index);
            if (ec != std::errc() || p != f[2].data() + f[2].size()) throw ParseError(line_number, "bad index");
            v.categories[static_cast<std::size_t>(it - kCategoricalFeatures.begin())].emplace(std::string(f[1]), index);
        } else {
            throw ParseError(line_number, "malformed vocabulary line");
        }
    }
    for (const auto& map : v.categories) {
        std::vector<bool> seen(map.size(), false);
        for (const auto& [value, index] : map) {
            if (index >= map.size() || seen[index]) throw ParseError(0, "vocabulary indexes are not dense");
            seen[index] = true;
        }
    }
    return v;
}

std::string to_string(Encoding encoding) { return encoding == Encoding::onehot ? "onehot" : "index"; }

Encoding parse_encoding(std::string_view text) {
    if (text == "onehot") return Encoding::onehot;
    if (text == "index") return Encoding::index;
    throw InputError("unknown encoding '" + std::string(text) + "'");
}

}  // namespace varkg
