#include "binstylo/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "binstylo/errors.hpp"
#include "binstylo/util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace binstylo::corpus {

namespace {

const std::pair<InputKind, const char*> kKindNames[] = {
    {InputKind::listing_linear, "listing_linear"},
    {InputKind::listing_flow, "listing_flow"},
    {InputKind::cfg, "cfg"},
    {InputKind::pseudo_c, "pseudo_c"},
    {InputKind::symbols_strings, "symbols_strings"},
};

} // namespace

const char* input_kind_name(InputKind k) {
    for (const auto& [kind, name] : kKindNames)
        if (kind == k) return name;
    return "?";
}

std::optional<InputKind> input_kind_from_name(const std::string& name) {
    for (const auto& [kind, kname] : kKindNames)
        if (name == kname) return kind;
    return std::nullopt;
}

std::string variant_to_string(const Variant& v) {
    switch (v.tag) {
        case Variant::Tag::plain: return "plain";
        case Variant::Tag::O1: return "O1";
        case Variant::Tag::O2: return "O2";
        case Variant::Tag::O3: return "O3";
        case Variant::Tag::stripped: return "stripped";
        case Variant::Tag::obfuscated: return "obfuscated";
        case Variant::Tag::other: return "other:" + v.other_tag;
    }
    return "plain";
}

Variant variant_from_string(const std::string& text) {
    if (text == "plain") return {Variant::Tag::plain, ""};
    if (text == "O1") return {Variant::Tag::O1, ""};
    if (text == "O2") return {Variant::Tag::O2, ""};
    if (text == "O3") return {Variant::Tag::O3, ""};
    if (text == "stripped") return {Variant::Tag::stripped, ""};
    if (text == "obfuscated") return {Variant::Tag::obfuscated, ""};
    if (text.rfind("other:", 0) == 0) return {Variant::Tag::other, text.substr(6)};
    throw MalformedManifest("unknown variant '" + text + "'");
}

Corpus load_manifest(const std::string& path) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        throw MalformedManifest(e.what());
    }

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedManifest(path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("samples") || !doc["samples"].is_array())
        throw MalformedManifest(path + ": top-level object with a 'samples' array required");

    fs::path base = fs::path(path).parent_path();

    Corpus corpus;
    corpus.manifest_path = path;
    std::set<std::string> seen_ids;

    for (const auto& js : doc["samples"]) {
        if (!js.is_object()) throw MalformedManifest("sample entries must be objects");
        Sample s;
        try {
            s.sample_id = js.at("sample_id").get<std::string>();
            s.author_id = js.at("author_id").get<std::string>();
            s.problem_id = js.at("problem_id").get<std::string>();
            s.variant = variant_from_string(js.value("variant", "plain"));
        } catch (const json::exception& e) {
            throw MalformedManifest(std::string("bad sample entry: ") + e.what());
        }
        if (s.sample_id.empty()) throw MalformedManifest("empty sample_id");
        if (!seen_ids.insert(s.sample_id).second)
            throw DuplicateSampleId(s.sample_id);

        if (!js.contains("artifacts") || !js["artifacts"].is_object())
            throw MalformedManifest("sample '" + s.sample_id + "' lacks an artifacts object");
        for (const auto& [key, value] : js["artifacts"].items()) {
            auto kind = input_kind_from_name(key);
            if (!kind)
                throw MalformedManifest("sample '" + s.sample_id + "': unknown artifact kind '" + key + "'");
            if (!value.is_string())
                throw MalformedManifest("sample '" + s.sample_id + "': artifact path must be a string");
            fs::path p = base / value.get<std::string>();
            s.artifact_paths[*kind] = p.lexically_normal().string();
        }
        if (s.artifact_paths.empty())
            throw MalformedManifest("sample '" + s.sample_id + "' has no artifacts");

        for (const auto& [kind, apath] : s.artifact_paths) {
            std::error_code ec;
            auto status = fs::status(apath, ec);
            if (ec || !fs::is_regular_file(status))
                throw MissingArtifact(apath);
            if (fs::file_size(apath, ec) == 0 || ec)
                throw MissingArtifact(apath + " (empty)");
        }

        corpus.authors.insert(s.author_id);
        corpus.samples.push_back(std::move(s));
    }
    return corpus;
}

void write_manifest(const Corpus& corpus, const std::string& path) {
    fs::path base = fs::path(path).parent_path();
    json samples = json::array();
    for (const auto& s : corpus.samples) {
        json artifacts = json::object();
        for (const auto& [kind, apath] : s.artifact_paths)
            artifacts[input_kind_name(kind)] =
                fs::path(apath).lexically_relative(base).generic_string();
        samples.push_back({
            {"sample_id", s.sample_id},
            {"author_id", s.author_id},
            {"problem_id", s.problem_id},
            {"variant", variant_to_string(s.variant)},
            {"artifacts", artifacts},
        });
    }
    json doc = {{"samples", samples}};
    write_file(path, doc.dump(2) + "\n");
}

FoldPlan stratify_folds(const Corpus& corpus, int k) {
    if (k < 1) throw InsufficientSamples("fold count must be positive");

    std::map<std::string, std::vector<const Sample*>> by_author;
    for (const auto& s : corpus.samples) by_author[s.author_id].push_back(&s);
    for (const auto& [author, samples] : by_author)
        if (static_cast<int>(samples.size()) < k)
            throw InsufficientSamples("author '" + author + "' has " +
                                      std::to_string(samples.size()) + " samples, need " +
                                      std::to_string(k));

    // Contest layout: every author has exactly one sample per problem and the
    // number of problems equals k. Then folds align with problems, so each
    // test fold holds implementations of a task unseen in training.
    std::set<std::string> problems;
    for (const auto& s : corpus.samples) problems.insert(s.problem_id);
    bool aligned = static_cast<int>(problems.size()) == k;
    if (aligned) {
        for (const auto& [author, samples] : by_author) {
            std::set<std::string> own;
            for (const auto* s : samples) own.insert(s->problem_id);
            if (own.size() != samples.size() || own != problems) {
                aligned = false;
                break;
            }
        }
    }

    FoldPlan plan;
    plan.k = k;
    if (aligned) {
        std::map<std::string, int> problem_fold;
        int f = 0;
        for (const auto& p : problems) problem_fold[p] = f++;
        for (const auto& s : corpus.samples)
            plan.assignment[s.sample_id] = problem_fold[s.problem_id];
        return plan;
    }

    // Fallback: deterministic per-author round-robin over sample_id order.
    for (auto& [author, samples] : by_author) {
        std::sort(samples.begin(), samples.end(),
                  [](const Sample* a, const Sample* b) { return a->sample_id < b->sample_id; });
        for (std::size_t i = 0; i < samples.size(); ++i)
            plan.assignment[samples[i]->sample_id] = static_cast<int>(i % k);
    }
    return plan;
}

} // namespace binstylo::corpus
