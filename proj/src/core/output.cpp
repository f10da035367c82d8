#include "core/output.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <system_error>

#include "core/adf.hpp"
#include "core/criteria.hpp"
#include "core/csv.hpp"
#include "core/errors.hpp"

namespace tendex {

namespace fs = std::filesystem;
using nlohmann::json;

std::string sha256_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Status::Io, "IoError: cannot open \"" + path.string() + "\" for hashing");

    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw Error(Status::Numeric, "IoError: cannot initialize SHA-256");
    }
    char buf[1 << 15];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0)
        EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

OutputDir::OutputDir(fs::path final_dir) : final_(std::move(final_dir)) {
    if (final_.empty())
        throw Error(Status::InvalidArgument, "IoError: empty output directory");
    staging_ = final_;
    staging_ += ".staging";
    std::error_code ec;
    fs::remove_all(staging_, ec);
    fs::create_directories(staging_, ec);
    if (ec)
        throw Error(Status::Io,
                    "IoError: cannot create staging directory \"" + staging_.string() + "\"");
}

OutputDir::~OutputDir() {
    if (!finalized_) {
        std::error_code ec;
        fs::remove_all(staging_, ec);
    }
}

void OutputDir::finalize(const RunConfig& config) {
    // Collect staged files in sorted order for a stable manifest.
    std::map<std::string, std::string> hashes;
    for (const auto& entry : fs::directory_iterator(staging_)) {
        if (!entry.is_regular_file()) continue;
        hashes[entry.path().filename().string()] = sha256_file(entry.path());
    }

    json manifest;
    manifest["config"] = json::parse(run_config_to_json(config));
    manifest["seed"] = config.seed;
    manifest["files"] = json::array();
    for (const auto& [name, sha] : hashes)
        manifest["files"].push_back({{"name", name}, {"sha256", sha}});

    {
        std::ofstream out(staging_ / "manifest.json", std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(Status::Io, "IoError: cannot write manifest");
        out << manifest.dump(2) << '\n';
    }

    std::error_code ec;
    fs::remove_all(final_, ec);
    fs::rename(staging_, final_, ec);
    if (ec)
        throw Error(Status::Io, "IoError: cannot publish output directory \"" + final_.string() +
                                    "\": " + ec.message());
    finalized_ = true;
}

std::string level_file_name(std::size_t level) {
    std::string num = std::to_string(level);
    if (num.size() < 2) num.insert(num.begin(), '0');
    return "level_" + num + ".csv";
}

void stage_decomposition_files(const ItdDecomposition& decomp, const OutputDir& out) {
    for (std::size_t j = 1; j <= decomp.depth(); ++j) {
        write_csv(out.staged(level_file_name(j)),
                  {{"baseline", decomp.baseline(j).values}, {"rotation", decomp.rotation(j).values}},
                  /*with_index=*/true);
    }

    std::vector<CsvColumn> summary(4);
    summary[0].name = "level";
    summary[1].name = "n_extrema";
    summary[2].name = "maxep";
    summary[3].name = "adf_p";
    for (std::size_t j = 0; j <= decomp.depth(); ++j) {
        const TimeSeries& baseline = decomp.baseline(j);
        summary[0].values.push_back(static_cast<double>(j));
        summary[1].values.push_back(static_cast<double>(find_extrema(baseline).interior.size()));
        summary[2].values.push_back(maxep(baseline));
        double p = std::numeric_limits<double>::quiet_NaN();
        try {
            p = adf_pvalue(baseline).p_value;
        } catch (const Error&) {
            // constant or too-short baseline: leave nan
        }
        summary[3].values.push_back(p);
    }
    write_csv(out.staged("summary.csv"), summary, /*with_index=*/false);
}

void write_decomposition(const ItdDecomposition& decomp, const fs::path& dir,
                         const RunConfig& config) {
    OutputDir out(dir);
    stage_decomposition_files(decomp, out);
    out.finalize(config);
}

} // namespace tendex
