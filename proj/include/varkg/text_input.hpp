#pragma once

#include <filesystem>
#include <istream>
#include <memory>
#include <string>

namespace varkg {

/**
 * Opens a text file for line-oriented reading. Paths ending in ".gz" are
 * decompressed on the fly. Throws InputError when the file cannot be opened.
 */
std::unique_ptr<std::istream> open_text_input(const std::filesystem::path& path);

/**
 * Accession implied by a file name: everything before the first '.', so
 * "SRR13112995.vcf.gz" and "SRR13112995.cadd.tsv" both give "SRR13112995".
 */
std::string accession_from_path(const std::filesystem::path& path);

}  // namespace varkg
