#pragma once

// Inputs for running the whole command-line pipeline against the stubs:
// WiT rows that point at a WikipediaStub, scripted summarizers for an
// LlmStub, and feature files whose metrics have closed forms.

#include <cstddef>
#include <filesystem>
#include <string>

#include "stub_servers.hpp"

namespace texttiger::stubs {

/// Six rows: four usable, one with a dead image, one with an unknown entity.
std::filesystem::path write_wit_rows(const WikipediaStub& wiki, const std::filesystem::path& dir);
inline constexpr std::size_t kUsableWitRows = 4;

/// The "Complement:" section of a summarization prompt.
std::string complement_of(const std::string& prompt);

/// Replies with the first `max_words` words of the complement, wrapped in markers.
LlmStub::Responder truncating_summarizer(std::size_t max_words);

/// Rounds with a current-count sentence but no "still" get the complement
/// repeated up to `long_words` words; "still" rounds get `short_words`.
LlmStub::Responder escalating_summarizer(std::size_t long_words, std::size_t short_words);

struct ClosedFormFeatures {
    std::filesystem::path label_dists;  // two one-hot rows over two classes: IS 2
    std::filesystem::path real;         // 1-D samples -1 0 1: mean 0, variance 1
    std::filesystem::path gen;          // 1-D samples -1 1 3: mean 1, variance 4, FID 2
    std::filesystem::path clip_img;     // (3,4) rows
    std::filesystem::path clip_txt;     // (4,3) rows: cosine 0.96
    std::filesystem::path clip_ref_img; // (3,4) rows: cosine 1
};

ClosedFormFeatures write_closed_form_features(const std::filesystem::path& dir);

}  // namespace texttiger::stubs
