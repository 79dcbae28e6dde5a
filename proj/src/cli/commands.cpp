#include "texttiger/cli/commands.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <set>

#include "texttiger/cli/manifest.hpp"
#include "texttiger/common/http.hpp"
#include "texttiger/common/io.hpp"
#include "texttiger/common/parallel.hpp"
#include "texttiger/metrics/features.hpp"
#include "texttiger/metrics/report.hpp"
#include "texttiger/promptgen/image_gen.hpp"
#include "texttiger/refine/augment.hpp"
#include "texttiger/refine/summarize.hpp"
#include "texttiger/tokenizer/clip_tokenizer.hpp"
#include "texttiger/witcub/builder.hpp"

namespace texttiger::cli {

using nlohmann::json;
namespace fs = std::filesystem;
using promptgen::PromptMethod;

std::string file_slug(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' ||
                          c == '_' || c == '-';
        out.push_back(keep ? c : '_');
    }
    return out;
}

json prompt_record(const std::string& id, const promptgen::AssembledPrompt& p, bool has_note) {
    return json{{"id", id},
                {"method", promptgen::to_string(p.method)},
                {"text", p.text},
                {"token_count", p.token_count.content_tokens},
                {"text_token_count", p.text_token_count.content_tokens},
                {"truncated_at_t5", p.truncated_at_t5},
                {"truncated_at_clip", p.truncated_at_clip},
                {"note", has_note}};
}

promptgen::AssembledPrompt prompt_from_record(const json& r) {
    promptgen::AssembledPrompt p;
    try {
        p.method = promptgen::parse_prompt_method(r.at("method").get<std::string>());
        p.text = r.at("text").get<std::string>();
        p.token_count = {r.at("token_count").get<std::size_t>()};
        p.text_token_count = {r.value("text_token_count", p.token_count.content_tokens)};
        p.truncated_at_t5 = r.value("truncated_at_t5", false);
        p.truncated_at_clip = r.value("truncated_at_clip", false);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad prompt record: ") + e.what(), 0);
    }
    return p;
}

namespace {

void require_file(const std::optional<fs::path>& path, const char* what) {
    if (!path) throw ConfigError(std::string("missing ") + what);
    if (!fs::is_regular_file(*path)) throw ConfigError(std::string(what) + " not found: " + path->string());
}

fs::path primary_output(const RunConfig& c, const std::string& default_name) {
    return c.out ? *c.out : c.output_dir / default_name;
}

void write_text(const fs::path& path, const std::string& contents) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    io::write_file(path, contents);
}

tokenizer::Vocabulary load_vocab(const RunConfig& c) {
    if (!fs::is_directory(c.vocab_dir)) throw ConfigError("vocabulary directory not found: " + c.vocab_dir.string());
    return tokenizer::Vocabulary::load_directory(c.vocab_dir);
}

std::vector<PromptMethod> summary_methods(const RunConfig& c) {
    std::vector<PromptMethod> out;
    for (auto m : c.methods) {
        if (promptgen::summary_method_for(m)) out.push_back(m);
    }
    return out;
}

bool http_like(const std::string& location) { return http::Url::is_absolute(location); }

fs::path default_summaries_path(const RunConfig& c, PromptMethod m) {
    return c.output_dir / ("summaries." + std::string(promptgen::to_string(m)) + ".jsonl");
}

}  // namespace

// ---------------------------------------------------------------------------

int cmd_build_dataset(const RunConfig& c, CommandIo io) {
    require_file(c.wit_rows, "WiT rows file (--wit-rows)");
    if (c.parallel == 0) throw ConfigError("--parallel must be at least 1");
    const auto vocab = load_vocab(c);
    const auto rows = witcub::read_wit_rows(*c.wit_rows);

    witcub::WikipediaConfig wiki;
    wiki.endpoint = c.wikipedia.endpoint;
    wiki.user_agent = c.wikipedia.user_agent;
    wiki.politeness_delay = std::chrono::milliseconds(c.wikipedia.politeness_ms);
    const witcub::WikipediaClient entities(wiki);
    const witcub::HttpImageProbe images(c.wikipedia.user_agent);

    std::size_t dropped = 0;
    witcub::BuildOptions options;
    options.parallel = c.parallel;
    options.on_drop = [&](const witcub::DroppedRow& d) {
        ++dropped;
        io.err << "dropped row " << d.row_index << " (" << d.id << "): " << d.reason << '\n';
    };

    witcub::Dataset ds;
    try {
        ds = witcub::build_dataset(rows, entities, images, vocab, options);
    } catch (const witcub::EmptyDataset& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitFailure;
    }

    const auto out = primary_output(c, "dataset.jsonl");
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    witcub::save_dataset(ds, out);

    io.out << "instances: " << ds.stats.instance_count << '\n'
           << "mean entities per instance: " << ds.stats.mean_entities_per_instance << '\n'
           << "mean caption tokens: " << ds.stats.mean_caption_tokens << '\n'
           << "dropped rows: " << dropped << '\n';

    Manifest manifest("build-dataset", to_json(c), c.output_dir);
    manifest.add_input(*c.wit_rows);
    manifest.add_output(out);
    manifest.set_summary({{"instances", ds.stats.instance_count},
                          {"dropped", dropped},
                          {"mean_entities_per_instance", ds.stats.mean_entities_per_instance},
                          {"mean_caption_tokens", ds.stats.mean_caption_tokens}});
    manifest.write();
    return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_summarize(const RunConfig& c, CommandIo io) {
    require_file(c.dataset_path, "dataset (--dataset)");
    const auto methods = summary_methods(c);
    if (methods.empty()) {
        throw ConfigError("no summarization method selected (--method texttiger-wo-len|texttiger|iterative-texttiger)");
    }
    if (c.out && methods.size() > 1) throw ConfigError("--out needs exactly one method");
    if (c.summarizer.endpoint.empty()) {
        throw ConfigError(std::string("LLM endpoint is not configured (--llm-endpoint or ") + kEnvLlmEndpoint + ")");
    }
    if (c.parallel == 0) throw ConfigError("--parallel must be at least 1");

    const auto vocab = load_vocab(c);
    const auto ds = witcub::load_dataset(*c.dataset_path);

    refine::ChatCompletionConfig llm_config;
    llm_config.endpoint = c.summarizer.endpoint;
    llm_config.api_key = c.summarizer.api_key;
    llm_config.timeout = std::chrono::milliseconds(c.summarizer.timeout_ms);
    const refine::ChatCompletionClient llm(llm_config);

    Manifest manifest("summarize", to_json(c), c.output_dir);
    manifest.add_input(*c.dataset_path);
    json summary = json::object();
    bool any_failed = false;

    for (auto method : methods) {
        refine::SummarizeConfig sc;
        sc.method = *promptgen::summary_method_for(method);
        sc.budget = c.budget;
        sc.max_iterations = c.summarizer.max_iterations;
        sc.llm = refine::LlmParams::defaults_for(sc.method, c.summarizer.model);
        sc.llm.seed = c.summarizer.seed;
        sc.llm.temperature = c.summarizer.temperature;
        if (c.summarizer.max_output_tokens) sc.llm.max_output_tokens = *c.summarizer.max_output_tokens;
        try {
            sc.validate();
        } catch (const ConfigError& e) {
            throw ConfigError(std::string("summarizer: ") + e.what());
        }

        const std::string method_name(promptgen::to_string(method));
        std::vector<json> records(ds.instances.size());
        parallel_for_index(ds.instances.size(), c.parallel, [&](std::size_t i) {
            const auto& inst = ds.instances[i];
            json r{{"id", inst.id}, {"method", method_name}};
            const auto aug = refine::build_augmentation(inst);
            if (aug.joined_text.empty()) {
                r["status"] = "no_entities";
                records[i] = std::move(r);
                return;
            }
            r["description_tokens"] = tokenizer::count_tokens(aug.joined_text, vocab).content_tokens;
            try {
                const auto s = refine::summarize(aug.joined_text, sc, llm, vocab);
                r["status"] = "ok";
                r["summary"] = s.text;
                r["token_count"] = s.token_count.content_tokens;
                r["iterations_used"] = s.iterations_used;
                r["compliant"] = s.compliant;
                r["raw_outputs"] = s.raw_outputs;
            } catch (const refine::SummaryError& e) {
                r["status"] = "error";
                r["error"] = e.what();
                r["raw_outputs"] = e.raw_outputs();
            } catch (const refine::LlmError& e) {
                r["status"] = "error";
                r["error"] = e.what();
                r["raw_outputs"] = json::array();
            }
            records[i] = std::move(r);
        });

        std::size_t ok = 0, compliant = 0, failed = 0, no_entities = 0, rounds = 0;
        for (const auto& r : records) {
            const auto status = r["status"].get<std::string>();
            if (status == "ok") {
                ++ok;
                if (r["compliant"].get<bool>()) ++compliant;
                rounds += r["iterations_used"].get<std::size_t>();
            } else if (status == "error") {
                ++failed;
                io.err << method_name << ": instance " << r["id"].get<std::string>() << ": "
                       << r["error"].get<std::string>() << '\n';
            } else {
                ++no_entities;
            }
        }
        any_failed = any_failed || failed > 0;

        const auto out = c.out ? *c.out : default_summaries_path(c, method);
        write_text(out, io::to_jsonl(records));
        manifest.add_output(out);
        summary[method_name] = {{"ok", ok},
                                {"compliant", compliant},
                                {"failed", failed},
                                {"no_entities", no_entities},
                                {"total_rounds", rounds}};
        io.out << method_name << ": " << ok << " summarized, " << compliant << " within " << c.budget.summary_budget
               << " tokens, " << failed << " failed, " << no_entities << " without entities, " << rounds
               << " LLM rounds\n";
    }

    manifest.set_summary(summary);
    manifest.write();
    return any_failed ? kExitFailure : kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_assemble(const RunConfig& c, CommandIo io) {
    require_file(c.dataset_path, "dataset (--dataset)");
    if (c.methods.empty()) throw ConfigError("no prompt method selected (--method)");
    try {
        c.budget.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    const auto vocab = load_vocab(c);
    const auto ds = witcub::load_dataset(*c.dataset_path);

    Manifest manifest("assemble", to_json(c), c.output_dir);
    manifest.add_input(*c.dataset_path);

    // (id, method) -> summary record
    std::map<std::pair<std::string, std::string>, json> summaries;
    std::vector<fs::path> sources = c.summaries;
    if (sources.empty()) {
        for (auto m : summary_methods(c)) sources.push_back(default_summaries_path(c, m));
    }
    for (const auto& path : sources) {
        if (!fs::is_regular_file(path)) throw ConfigError("summaries not found: " + path.string());
        for (auto& r : io::read_jsonl(path)) {
            auto key = std::make_pair(r.at("id").get<std::string>(), r.at("method").get<std::string>());
            summaries[std::move(key)] = std::move(r);
        }
        manifest.add_input(path);
    }

    std::vector<json> records;
    std::map<std::string, std::size_t> skipped;
    for (auto method : c.methods) {
        const std::string method_name(promptgen::to_string(method));
        for (const auto& inst : ds.instances) {
            promptgen::PromptDescription description;
            if (method == PromptMethod::CapAugOnly) {
                auto per_entity = refine::build_augmentation(inst).per_entity;
                if (!per_entity.empty()) description = std::move(per_entity);
            } else if (promptgen::summary_method_for(method)) {
                const auto it = summaries.find({inst.id, method_name});
                const std::string status = it == summaries.end() ? "missing" : it->second.value("status", "missing");
                if (status == "ok") {
                    description = it->second.at("summary").get<std::string>();
                } else if (status != "no_entities") {
                    ++skipped[method_name];
                    io.err << method_name << ": no summary for instance " << inst.id << " (" << status << ")\n";
                    continue;
                }
            }
            // an instance without matched entities keeps the bare caption
            const bool has_note = !std::holds_alternative<std::monostate>(description);
            auto prompt = promptgen::assemble_prompt(has_note ? method : PromptMethod::CapOnly, inst.caption,
                                                     description, vocab, c.budget);
            prompt.method = method;
            records.push_back(prompt_record(inst.id, prompt, has_note));
        }
    }

    const auto out = primary_output(c, "prompts.jsonl");
    write_text(out, io::to_jsonl(records));
    manifest.add_output(out);

    json summary = json::object();
    for (auto method : c.methods) {
        const std::string name(promptgen::to_string(method));
        std::size_t n = 0;
        for (const auto& r : records) n += r["method"] == name;
        summary[name] = {{"prompts", n}, {"skipped", skipped[name]}};
        io.out << name << ": " << n << " prompts";
        if (skipped[name] > 0) io.out << ", " << skipped[name] << " skipped";
        io.out << '\n';
    }
    manifest.set_summary(summary);
    manifest.write();

    for (const auto& [_, n] : skipped) {
        if (n > 0) return kExitFailure;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_generate(const RunConfig& c, CommandIo io) {
    const fs::path prompts_path = c.prompts_path.value_or(c.output_dir / "prompts.jsonl");
    require_file(prompts_path, "prompts file (--prompts)");
    if (c.backend.endpoint.empty()) {
        throw ConfigError(std::string("image backend is not configured (--backend-url or ") + kEnvImageBackend + ")");
    }
    if (c.parallel == 0) throw ConfigError("--parallel must be at least 1");
    try {
        c.backend.defaults.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    std::set<std::string> wanted;
    for (auto m : c.methods) wanted.insert(std::string(promptgen::to_string(m)));

    std::vector<json> prompts;
    for (auto& r : io::read_jsonl(prompts_path)) {
        if (wanted.empty() || wanted.contains(r.at("method").get<std::string>())) prompts.push_back(std::move(r));
    }

    const std::string model_slug = file_slug(c.backend.model);
    const fs::path index_path = primary_output(c, "images." + model_slug + ".jsonl");
    const fs::path image_dir = c.output_dir / "images" / model_slug;

    // earlier results keyed by (id, method, model)
    std::map<std::string, json> previous;
    if (fs::is_regular_file(index_path)) {
        for (auto& r : io::read_jsonl(index_path)) {
            if (r.value("status", "") != "ok") continue;
            auto key = r.at("key").get<std::string>();
            previous[std::move(key)] = std::move(r);
        }
    }

    promptgen::ImageBackendConfig backend{c.backend.endpoint, c.backend.model,
                                          std::chrono::milliseconds(c.backend.timeout_ms)};

    std::vector<json> records(prompts.size());
    std::atomic<std::size_t> reused{0};
    parallel_for_index(prompts.size(), c.parallel, [&](std::size_t i) {
        const auto& p = prompts[i];
        const std::string id = p.at("id").get<std::string>();
        const std::string method = p.at("method").get<std::string>();
        const std::string key = id + "|" + method + "|" + c.backend.model;

        promptgen::ImageGenRequest request = c.backend.defaults;
        request.prompt = p.at("text").get<std::string>();
        const json request_json = promptgen::to_json(request, c.backend.model);

        json r{{"key", key}, {"id", id}, {"method", method}, {"model", c.backend.model}};
        if (const auto it = previous.find(key); it != previous.end() && it->second["request"] == request_json) {
            const auto& old = it->second;
            const std::string location = old["location"].get<std::string>();
            const std::string sha = old.value("sha256", "");
            if (sha.empty() ? http_like(location) : (fs::is_regular_file(location) &&
                                                     io::sha256_hex(io::read_file(location)) == sha)) {
                records[i] = old;
                ++reused;
                return;
            }
        }
        try {
            const auto ref = promptgen::generate_image(request, backend, image_dir, file_slug(id) + "__" + method);
            r["status"] = "ok";
            r["location"] = ref.location;
            r["sha256"] = ref.sha256;
            r["request"] = ref.request;
        } catch (const promptgen::GenError& e) {
            r["status"] = "error";
            r["error"] = e.what();
            r["http_status"] = e.status();
            r["request"] = request_json;
        }
        records[i] = std::move(r);
    });

    Manifest manifest("generate", to_json(c), c.output_dir);
    manifest.add_input(prompts_path);
    std::size_t ok = 0, failed = 0;
    for (const auto& r : records) {
        if (r["status"] == "ok") {
            ++ok;
            const fs::path location = r["location"].get<std::string>();
            if (!r["sha256"].get<std::string>().empty() && fs::is_regular_file(location)) {
                manifest.add_output(location);
            }
        } else {
            ++failed;
            io.err << "generation failed for " << r["id"].get<std::string>() << " (" << r["method"].get<std::string>()
                   << "): " << r["error"].get<std::string>() << '\n';
        }
    }
    write_text(index_path, io::to_jsonl(records));
    manifest.add_output(index_path);
    manifest.set_summary({{"generated", ok - reused}, {"reused", reused.load()}, {"failed", failed}});
    manifest.write();

    io.out << ok << " images (" << reused << " reused), " << failed << " failed\n";
    return failed > 0 ? kExitFailure : kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_evaluate(const RunConfig& c, CommandIo io) {
    const auto& f = c.features;
    Manifest manifest("evaluate", to_json(c), c.output_dir);

    auto load = [&](const std::optional<fs::path>& path, metrics::FeatureKind kind, const char* flag) {
        require_file(path, flag);
        manifest.add_input(*path);
        return metrics::load_features(*path, kind).values;
    };

    metrics::ReportInputs in;
    in.splits = c.splits;
    in.workers = std::max<std::size_t>(c.parallel, 1);
    if (f.label_dists) in.label_dists = load(f.label_dists, metrics::FeatureKind::LabelDist, "--label-dists");
    if (f.real || f.gen) {
        in.real_features = load(f.real, metrics::FeatureKind::PoolFeatures, "--real-features");
        in.gen_features = load(f.gen, metrics::FeatureKind::PoolFeatures, "--gen-features");
    }
    if (f.clip_txt || f.clip_ref_img) {
        const auto img = load(f.clip_img, metrics::FeatureKind::ClipImg, "--clip-img");
        if (f.clip_txt) in.txt_pairs = metrics::PairSet{img, load(f.clip_txt, metrics::FeatureKind::ClipTxt, "--clip-txt")};
        if (f.clip_ref_img) {
            in.img_pairs = metrics::PairSet{img, load(f.clip_ref_img, metrics::FeatureKind::ClipImg, "--clip-ref-img")};
        }
    } else if (f.clip_img) {
        throw ConfigError("--clip-img needs --clip-txt or --clip-ref-img");
    }
    if (!in.label_dists && !in.real_features && !in.txt_pairs && !in.img_pairs) {
        throw ConfigError("no feature files given; nothing to evaluate");
    }
    if (in.label_dists && (c.splits < 1 || c.splits > static_cast<std::size_t>(in.label_dists->rows()))) {
        throw ConfigError("--splits must be between 1 and the number of label distributions");
    }

    const auto report = metrics::aggregate_report(in);
    const auto out = primary_output(c, "metrics.json");
    auto table_path = out;
    table_path.replace_extension(".txt");
    write_text(out, metrics::to_json(report).dump(2) + "\n");
    const std::string table = metrics::to_table(report);
    write_text(table_path, table);
    manifest.add_output(out);
    manifest.add_output(table_path);
    manifest.set_summary(metrics::to_json(report));
    manifest.write();

    io.out << table;
    return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_audit(const RunConfig& c, CommandIo io) {
    const fs::path prompts_path = c.prompts_path.value_or(c.output_dir / "prompts.jsonl");
    require_file(prompts_path, "prompts file (--prompts)");
    if (c.audit_limit == 0) throw ConfigError("--limit must be positive");

    std::vector<promptgen::AssembledPrompt> prompts;
    std::ifstream in(prompts_path);
    io::for_each_jsonl(in, [&](const json& r, std::size_t line) {
        try {
            prompts.push_back(prompt_from_record(r));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line);
        }
    });

    audit::AuditReport report;
    try {
        report = audit::audit_prompts(prompts, {c.audit_limit, c.audit_clip_limit});
    } catch (const audit::EmptyAudit& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitFailure;
    }

    const auto out = primary_output(c, "audit.json");
    auto table_path = out;
    table_path.replace_extension(".txt");
    write_text(out, audit::to_json(report).dump(2) + "\n");
    const std::string table = audit::to_table(report);
    write_text(table_path, table);

    Manifest manifest("audit", to_json(c), c.output_dir);
    manifest.add_input(prompts_path);
    manifest.add_output(out);
    manifest.add_output(table_path);
    manifest.set_summary(audit::to_json(report));
    manifest.write();

    io.out << table;
    return kExitOk;
}

}  // namespace texttiger::cli
