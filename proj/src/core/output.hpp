#pragma once

#include <filesystem>
#include <string>

#include "core/config.hpp"
#include "core/itd.hpp"

namespace tendex {

/// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

/// Transactional output directory: files are staged under "<dir>.staging",
/// the manifest (config, seed, per-file sha256) is written last, and the
/// staging directory is renamed into place on finalize. Nothing appears at
/// the final path until the whole tree is complete.
class OutputDir {
public:
    explicit OutputDir(std::filesystem::path final_dir);
    ~OutputDir();

    OutputDir(const OutputDir&) = delete;
    OutputDir& operator=(const OutputDir&) = delete;

    /// Staging directory to write files into.
    const std::filesystem::path& staging() const { return staging_; }
    std::filesystem::path staged(const std::string& name) const { return staging_ / name; }

    /// Writes manifest.json and atomically publishes the directory.
    void finalize(const RunConfig& config);

private:
    std::filesystem::path final_;
    std::filesystem::path staging_;
    bool finalized_ = false;
};

/// Writes one CSV per level (i, baseline, rotation), a summary.csv with
/// (level, n_extrema, maxep, adf_p) rows for levels 0..D, and the manifest.
/// The adf_p column holds the baseline's own ADF p-value, or nan where the
/// test is undefined (constant or too-short series).
void write_decomposition(const ItdDecomposition& decomp, const std::filesystem::path& dir,
                         const RunConfig& config);

/// Level file name within a decomposition directory ("level_01.csv", ...).
std::string level_file_name(std::size_t level);

/// Same contents as write_decomposition but into an already-open staging
/// area; used by the pipelines that bundle more files into one directory.
void stage_decomposition_files(const ItdDecomposition& decomp, const OutputDir& out);

} // namespace tendex
