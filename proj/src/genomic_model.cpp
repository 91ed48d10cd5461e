#include "varkg/genomic_model.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace varkg {

const InfoEntry* VariantRecord::find_info(std::string_view key) const {
    for (const auto& entry : info) {
        if (entry.key == key) return &entry;
    }
    return nullptr;
}

CaddCategory bin_cadd_score(double raw) {
    if (!std::isfinite(raw)) throw std::invalid_argument("invalid score");
    if (raw < 0.0) return {0};
    if (raw < 1.0) return {1};
    if (raw < 5.0) return {2};
    if (raw < 10.0) return {3};
    return {4};
}

std::string variant_key(std::string_view id, std::string_view chrom, std::int64_t pos,
                        std::string_view ref, std::string_view alt) {
    if (!id.empty() && id != ".") return std::string(id);
    std::string key;
    key.reserve(chrom.size() + ref.size() + alt.size() + 24);
    key.append(chrom).append(":").append(std::to_string(pos)).append(":");
    key.append(ref).append(">").append(alt);
    return key;
}

std::string variant_key(const VariantRecord& record, std::size_t alt_index) {
    if (alt_index >= record.alt_alleles.size()) {
        throw std::out_of_range("alt index " + std::to_string(alt_index) +
                                " out of range for " + std::to_string(record.alt_alleles.size()) +
                                " alleles");
    }
    return variant_key(record.id, record.chrom, record.pos, record.ref_allele,
                       record.alt_alleles[alt_index]);
}

bool is_valid_ref_allele(std::string_view allele) {
    if (allele.empty()) return false;
    for (char c : allele) {
        if (c != 'A' && c != 'C' && c != 'G' && c != 'T' && c != 'N') return false;
    }
    return true;
}

namespace {

std::optional<long> numeric_chrom(std::string_view name) {
    if (name.empty()) return std::nullopt;
    long value = 0;
    auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), value);
    if (ec != std::errc() || ptr != name.data() + name.size()) return std::nullopt;
    return value;
}

}  // namespace

bool chrom_less(std::string_view a, std::string_view b) {
    auto na = numeric_chrom(a);
    auto nb = numeric_chrom(b);
    if (na && nb) return *na < *nb;
    if (na || nb) return na.has_value();  // numeric names first
    return a < b;
}

std::string format_real(double value) {
    char buf[512];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
    if (ec != std::errc()) throw std::runtime_error("cannot format real");
    return std::string(buf, ptr);
}

}  // namespace varkg
