#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace binstylo::corpus {

// The artifact kinds a sample may bundle. A sample needs at least one; feature
// extraction simply emits nothing for kinds that are absent.
enum class InputKind {
    listing_linear,
    listing_flow,
    cfg,
    pseudo_c,
    symbols_strings,
};

const char* input_kind_name(InputKind k);
std::optional<InputKind> input_kind_from_name(const std::string& name);

struct Variant {
    enum class Tag { plain, O1, O2, O3, stripped, obfuscated, other };
    Tag tag = Tag::plain;
    std::string other_tag; // set only when tag == other

    bool operator==(const Variant&) const = default;
};

std::string variant_to_string(const Variant& v);
Variant variant_from_string(const std::string& text); // throws MalformedManifest

struct Sample {
    std::string sample_id;
    std::string author_id;
    std::string problem_id;
    Variant variant;
    // Paths are stored resolved against the manifest directory.
    std::map<InputKind, std::string> artifact_paths;

    bool operator==(const Sample&) const = default;
};

struct Corpus {
    std::vector<Sample> samples;          // manifest order
    std::set<std::string> authors;        // derived from samples
    std::string manifest_path;

    bool operator==(const Corpus& o) const {
        return samples == o.samples && authors == o.authors;
    }
};

struct FoldPlan {
    int k = 0;
    std::map<std::string, int> assignment; // sample_id -> fold in [0, k)
};

// Reads and validates a manifest (see README for the format). Every referenced
// artifact must exist and be non-empty.
Corpus load_manifest(const std::string& path);

// Writes a manifest such that load_manifest(write_manifest(c)) == c. Artifact
// paths are relativized against the target directory.
void write_manifest(const Corpus& corpus, const std::string& path);

// Splits the corpus into k folds stratified by author. When every author has
// exactly one sample per problem and there are exactly k problems (the contest
// layout), fold f holds the samples of the f-th problem; otherwise each
// author's samples are dealt round-robin after sorting by sample_id.
FoldPlan stratify_folds(const Corpus& corpus, int k);

} // namespace binstylo::corpus
