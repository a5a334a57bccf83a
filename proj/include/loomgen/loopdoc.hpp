#pragma once

#include <optional>
#include <string>

#include "loomgen/synthesis.hpp"

namespace loomgen {

struct UnsupportedFormat : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Serialisable description of a synthesised loop plus the evidence trail.
/// Rationals are lowest-terms strings, never floats.
struct LoopDocument {
    int schema = 1;
    std::vector<std::string> vars;
    std::vector<Rat> init;
    RatMatrix update;
    // Metadata from the synthesis run; absent fields stay empty.
    std::optional<IntMatrix> a;
    std::vector<Rat> lambdas;
    std::optional<std::size_t> rank;
    std::optional<bool> nontrivial;
    std::optional<ExactnessLevel> exactness;
    std::optional<RatMatrix> transform;

    LinearLoop to_loop() const;
    bool operator==(const LoopDocument& o) const = default;
};

LoopDocument document_from_report(const SynthesisReport& report);

std::string loopdoc_to_json(const LoopDocument& doc);
LoopDocument loopdoc_from_json(const std::string& text);

/// Reads {"matrix": [["p/q", ...], ...]} into a square rational matrix.
RatMatrix transform_from_json(const std::string& text);

/// format is one of "pseudo", "c", "json".
std::string render(const LoopDocument& doc, const std::string& format);

}  // namespace loomgen
