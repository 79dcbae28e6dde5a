#include "texttiger/cli/cli.hpp"

#include <CLI11.hpp>

#include "texttiger/cli/commands.hpp"
#include "texttiger/cli/manifest.hpp"

namespace texttiger::cli {

namespace fs = std::filesystem;

namespace {

// Flag values; unset flags leave the resolved configuration alone.
struct Flags {
    std::optional<std::string> config;
    std::optional<std::string> out_dir;
    std::optional<std::string> vocab_dir;
    std::optional<std::size_t> parallel;
    std::optional<std::string> out;

    std::optional<std::string> wit_rows;
    std::optional<std::string> wiki_endpoint;

    std::optional<std::string> dataset;
    std::vector<std::string> methods;
    std::vector<std::string> summaries;
    std::optional<std::string> prompts;

    std::optional<std::string> llm_endpoint;
    std::optional<std::string> llm_model;
    std::optional<int> llm_seed;
    std::optional<int> max_iterations;
    std::optional<int> max_output_tokens;

    std::optional<std::string> backend_url;
    std::optional<std::string> image_model;
    std::optional<int> image_seed;

    std::optional<std::string> label_dists, real_features, gen_features, clip_img, clip_txt, clip_ref_img;
    std::optional<std::size_t> splits;

    std::optional<std::size_t> limit;
    std::optional<std::size_t> clip_limit;
};

template <typename T>
void set_if(const std::optional<T>& flag, T& target) {
    if (flag) target = *flag;
}

void set_path_if(const std::optional<std::string>& flag, std::optional<fs::path>& target) {
    if (flag) target = fs::path(*flag);
}

RunConfig resolve(const Flags& f, const EnvLookup& env) {
    RunConfig c = default_config(env);
    if (f.config) merge_config_file(c, *f.config);

    if (f.out_dir) c.output_dir = *f.out_dir;
    if (f.vocab_dir) c.vocab_dir = *f.vocab_dir;
    set_if(f.parallel, c.parallel);
    set_path_if(f.out, c.out);
    set_path_if(f.wit_rows, c.wit_rows);
    set_if(f.wiki_endpoint, c.wikipedia.endpoint);
    set_path_if(f.dataset, c.dataset_path);
    if (!f.methods.empty()) {
        c.methods.clear();
        for (const auto& m : f.methods) c.methods.push_back(promptgen::parse_prompt_method(m));
    }
    if (!f.summaries.empty()) c.summaries.assign(f.summaries.begin(), f.summaries.end());
    set_path_if(f.prompts, c.prompts_path);

    set_if(f.llm_endpoint, c.summarizer.endpoint);
    set_if(f.llm_model, c.summarizer.model);
    set_if(f.llm_seed, c.summarizer.seed);
    set_if(f.max_iterations, c.summarizer.max_iterations);
    if (f.max_output_tokens) c.summarizer.max_output_tokens = *f.max_output_tokens;

    set_if(f.backend_url, c.backend.endpoint);
    set_if(f.image_model, c.backend.model);
    set_if(f.image_seed, c.backend.defaults.seed);

    set_path_if(f.label_dists, c.features.label_dists);
    set_path_if(f.real_features, c.features.real);
    set_path_if(f.gen_features, c.features.gen);
    set_path_if(f.clip_img, c.features.clip_img);
    set_path_if(f.clip_txt, c.features.clip_txt);
    set_path_if(f.clip_ref_img, c.features.clip_ref_img);
    set_if(f.splits, c.splits);

    set_if(f.limit, c.audit_limit);
    if (f.clip_limit) c.audit_clip_limit = *f.clip_limit;
    return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
    CLI::App app{"Entity-augmented prompt refinement and image-generation evaluation", "texttiger"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    app.fallthrough();

    Flags f;
    app.add_option("--config", f.config, "JSON run configuration; flags override it");
    app.add_option("--out-dir", f.out_dir, "Directory for outputs and manifests");
    app.add_option("--vocab-dir", f.vocab_dir, "Directory with vocab.json and merges.txt");
    app.add_option("--parallel", f.parallel, "Worker threads");

    auto* build = app.add_subcommand("build-dataset", "Build a WiT-Cub dataset from WiT rows");
    build->add_option("--wit-rows", f.wit_rows, "JSON-lines WiT rows");
    build->add_option("--out", f.out, "Dataset file (default <out-dir>/dataset.jsonl)");
    build->add_option("--wiki-endpoint", f.wiki_endpoint, "Wikipedia Action API URL");

    auto* summarize = app.add_subcommand("summarize", "Augment and summarize entity descriptions");
    summarize->add_option("--dataset", f.dataset, "Dataset file");
    summarize->add_option("--method", f.methods, "texttiger-wo-len, texttiger or iterative-texttiger")
        ->delimiter(',');
    summarize->add_option("--out", f.out, "Summary records (default <out-dir>/summaries.<method>.jsonl)");
    summarize->add_option("--llm-endpoint", f.llm_endpoint, "Chat-completions URL");
    summarize->add_option("--model", f.llm_model, "LLM model name");
    summarize->add_option("--seed", f.llm_seed, "LLM seed");
    summarize->add_option("--max-iterations", f.max_iterations, "Iterative rounds");
    summarize->add_option("--max-output-tokens", f.max_output_tokens, "Override the method's output cap");

    auto* assemble = app.add_subcommand("assemble", "Assemble image-generation prompts");
    assemble->add_option("--dataset", f.dataset, "Dataset file");
    assemble->add_option("--method", f.methods, "Prompt methods")->delimiter(',');
    assemble->add_option("--summaries", f.summaries, "Summary record files (default per method in <out-dir>)");
    assemble->add_option("--out", f.out, "Prompt records (default <out-dir>/prompts.jsonl)");

    auto* generate = app.add_subcommand("generate", "Request images for assembled prompts");
    generate->add_option("--prompts", f.prompts, "Prompt records (default <out-dir>/prompts.jsonl)");
    generate->add_option("--method", f.methods, "Only these methods")->delimiter(',');
    generate->add_option("--backend-url", f.backend_url, "Image backend URL");
    generate->add_option("--model", f.image_model, "Image model identifier");
    generate->add_option("--seed", f.image_seed, "Generation seed");
    generate->add_option("--out", f.out, "Image index (default <out-dir>/images.<model>.jsonl)");

    auto* evaluate = app.add_subcommand("evaluate", "IS, FID and CLIPScore from feature files");
    evaluate->add_option("--label-dists", f.label_dists, "TFV1 label distributions (IS)");
    evaluate->add_option("--real-features", f.real_features, "TFV1 pool features of real images (FID)");
    evaluate->add_option("--gen-features", f.gen_features, "TFV1 pool features of generated images (FID)");
    evaluate->add_option("--clip-img", f.clip_img, "TFV1 CLIP embeddings of generated images");
    evaluate->add_option("--clip-txt", f.clip_txt, "TFV1 CLIP embeddings of prompts");
    evaluate->add_option("--clip-ref-img", f.clip_ref_img, "TFV1 CLIP embeddings of reference images");
    evaluate->add_option("--splits", f.splits, "IS splits");
    evaluate->add_option("--out", f.out, "Report (default <out-dir>/metrics.json)");

    auto* audit_cmd = app.add_subcommand("audit", "Token accounting over assembled prompts");
    audit_cmd->add_option("--prompts", f.prompts, "Prompt records (default <out-dir>/prompts.jsonl)");
    audit_cmd->add_option("--limit", f.limit, "Token limit (default 256)");
    audit_cmd->add_option("--clip-limit", f.clip_limit, "Also count prompts over this CLIP limit");
    audit_cmd->add_option("--out", f.out, "Report (default <out-dir>/audit.json)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    const CommandIo io{out, err};
    try {
        const RunConfig config = resolve(f, env);
        if (build->parsed()) return cmd_build_dataset(config, io);
        if (summarize->parsed()) return cmd_summarize(config, io);
        if (assemble->parsed()) return cmd_assemble(config, io);
        if (generate->parsed()) return cmd_generate(config, io);
        if (evaluate->parsed()) return cmd_evaluate(config, io);
        if (audit_cmd->parsed()) return cmd_audit(config, io);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitConfig;
}

}  // namespace texttiger::cli
