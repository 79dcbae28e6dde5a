#include "pipeline_fixture.hpp"

#include <sstream>
#include <vector>

#include "texttiger/common/io.hpp"
#include "texttiger/metrics/features.hpp"

namespace texttiger::stubs {

using nlohmann::json;
namespace fs = std::filesystem;

fs::path write_wit_rows(const WikipediaStub& wiki, const fs::path& dir) {
    const std::string wiki_base = "https://en.wikipedia.org/wiki/";
    std::vector<json> rows{
        {{"id", "nore"},
         {"caption", "The River Nore at Kilkenny"},
         {"image_ref", wiki.image_url("nore.jpg")},
         {"entity_urls", {wiki_base + "River_Nore", wiki_base + "Kilkenny"}}},
        {{"id", "credit"},
         {"caption", "Credit Island seen from Davenport, Iowa in winter"},
         {"image_ref", wiki.image_url("credit.jpg")},
         {"entity_urls", {wiki_base + "Credit_Island", wiki_base + "Davenport"}}},
        {{"id", "phahurat"},
         {"caption", "Fabric shops on Phahurat Road in Phra Nakhon district"},
         {"image_ref", wiki.image_url("phahurat.jpg")},
         {"entity_urls", {wiki_base + "Phahurat_Road", wiki_base + "Phra_Nakhon_district"}}},
        {{"id", "court"},
         {"caption", "Front of the Constitutional Court"},
         {"image_ref", wiki.image_url("court.jpg")},
         {"entity_urls", {wiki_base + "Constitutional_Court"}}},
        {{"id", "dead-image"},
         {"caption", "Kilkenny castle at night"},
         {"image_ref", wiki.image_url("dead.jpg")},
         {"entity_urls", {wiki_base + "Kilkenny"}}},
        {{"id", "unknown-entity"},
         {"caption", "A street in Nowhereville"},
         {"image_ref", wiki.image_url("street.jpg")},
         {"entity_urls", {wiki_base + "Nowhereville"}}},
    };
    fs::create_directories(dir);
    const auto path = dir / "wit_rows.jsonl";
    io::write_file(path, io::to_jsonl(rows));
    return path;
}

std::string complement_of(const std::string& prompt) {
    const std::string open = "Complement:\n";
    const auto b = prompt.find(open);
    const auto e = prompt.rfind("\n\nSummaryStart:");
    if (b == std::string::npos || e == std::string::npos || e < b + open.size()) return {};
    return prompt.substr(b + open.size(), e - b - open.size());
}

namespace {

std::vector<std::string> words_of(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::string take_words(const std::vector<std::string>& words, std::size_t n, bool cycle) {
    std::string out;
    for (std::size_t i = 0; i < n && !words.empty(); ++i) {
        if (!cycle && i >= words.size()) break;
        if (i) out += ' ';
        out += words[i % words.size()];
    }
    return out;
}

LlmReply wrap(const std::string& body) { return {200, " " + body + " <SummaryEnd>"}; }

}  // namespace

LlmStub::Responder truncating_summarizer(std::size_t max_words) {
    return [max_words](const json& request) {
        return wrap(take_words(words_of(complement_of(user_message(request))), max_words, false));
    };
}

LlmStub::Responder escalating_summarizer(std::size_t long_words, std::size_t short_words) {
    return [=](const json& request) {
        const std::string prompt = user_message(request);
        const auto words = words_of(complement_of(prompt));
        const bool still = prompt.starts_with("The current tokens are still");
        return wrap(take_words(words, still ? short_words : long_words, !still));
    };
}

ClosedFormFeatures write_closed_form_features(const fs::path& dir) {
    fs::create_directories(dir);
    auto save = [&](const std::string& name, const Eigen::MatrixXd& m, metrics::FeatureKind kind) {
        const auto path = dir / (name + ".tfv1");
        metrics::save_features(path, m, {kind, "closed-form fixture", "none", "1970-01-01T00:00:00Z", json::object()});
        return path;
    };
    Eigen::MatrixXd label(2, 2), real(3, 1), gen(3, 1), img(4, 2), txt(4, 2);
    label << 1, 0, 0, 1;
    real << -1, 0, 1;
    gen << -1, 1, 3;
    img << 3, 4, 3, 4, 3, 4, 3, 4;
    txt << 4, 3, 4, 3, 4, 3, 4, 3;
    ClosedFormFeatures f;
    f.label_dists = save("label_dists", label, metrics::FeatureKind::LabelDist);
    f.real = save("real_pool", real, metrics::FeatureKind::PoolFeatures);
    f.gen = save("gen_pool", gen, metrics::FeatureKind::PoolFeatures);
    f.clip_img = save("clip_img", img, metrics::FeatureKind::ClipImg);
    f.clip_txt = save("clip_txt", txt, metrics::FeatureKind::ClipTxt);
    f.clip_ref_img = save("clip_ref_img", img, metrics::FeatureKind::ClipImg);
    return f;
}

}  // namespace texttiger::stubs
