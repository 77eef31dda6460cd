#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sentipulse {

/// Raised by load_lexicon on a malformed line; the message carries the
/// 1-based line number.
struct LexiconParseError : std::runtime_error {
    LexiconParseError(std::size_t line, const std::string& what)
        : std::runtime_error("lexicon line " + std::to_string(line) + ": " +
                             what),
          line(line) {}
    std::size_t line;
};

/// Token -> valence map. Tokens are stored lowercase; lookups are by the
/// lowercased token.
class Lexicon {
public:
    /// Reads `token<TAB>valence` lines. Lines starting with '#' and blank
    /// lines are ignored; columns after the second are ignored so stock
    /// valence files with extra metadata load unchanged. Later duplicates
    /// overwrite earlier entries.
    static Lexicon from_stream(std::istream& in);
    static Lexicon from_file(const std::string& path);

    void insert(std::string token, double valence);
    std::optional<double> valence(std::string_view lowercase_token) const;
    bool contains(std::string_view lowercase_token) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::unordered_map<std::string, double> entries_;
};

/// Numeric knobs of the rule engine. A zero constant disables its rule,
/// which lets tests reduce score_text to the plain lexicon sum.
struct RuleConstants {
    double alpha = 15.0;                  // compound normalization constant
    double booster_increment = 0.293;     // intensity added by degree adverbs
    double negation_factor = -0.74;       // multiplier applied by negators
    double caps_boost = 0.733;            // ALL-CAPS emphasis
    double exclamation_increment = 0.292; // per '!' mark
    int max_exclamations = 3;             // '!' marks counted at most
    double but_pre_weight = 0.5;          // clause weight before "but"
    double but_post_weight = 1.5;         // clause weight after "but"

    /// Everything off except the normalization constant.
    static RuleConstants lexicon_only() {
        return {15.0, 0.0, 0.0, 0.0, 0.0, 0, 0.0, 0.0};
    }
};

struct SentimentScore {
    double neg = 0.0;
    double neu = 0.0;
    double pos = 0.0;
    double compound = 0.0;
};

/// valence_sum / sqrt(valence_sum^2 + alpha), clamped to [-1, 1].
/// Odd and strictly increasing in valence_sum. alpha must be positive.
double normalize_compound(double valence_sum, double alpha);

/// Whitespace split, then ASCII punctuation and control characters are
/// stripped from token edges. Multi-byte UTF-8 (emoji) is never stripped.
/// Tokens that strip to nothing are dropped.
std::vector<std::string> tokenize(std::string_view text);

/// Scores a text against the lexicon.
///
/// Each token gets its lexicon valence (lowercased lookup; 0 when absent),
/// then rule adjustments produce per-token adjusted valences:
///   - degree adverbs ("very", "barely", ...) carry no valence themselves
///     and add +-booster_increment to a lexicon token up to three places
///     later, damped by 0.95 / 0.90 at distances two / three;
///   - a negator ("not", "never", anything with "n't") within the same
///     window multiplies the valence by negation_factor;
///   - an ALL-CAPS lexicon token gains caps_boost (away from zero) when the
///     text mixes cased and all-caps tokens;
///   - every adjusted valence before the first "but" is scaled by
///     but_pre_weight, everything after it by but_post_weight.
/// compound = normalize_compound(sum of adjusted valences + exclamation
/// emphasis, alpha), where the emphasis is exclamation_increment per '!'
/// (at most max_exclamations) pushing the sum away from zero.
/// Proportions follow the reference convention: positive mass
/// sum(v_i + 1), negative mass |sum(v_i - 1)|, neutral mass = count of
/// zero-valence tokens, each divided by their total.
///
/// Empty or all-punctuation text yields the all-zero score. Pure function;
/// safe to call concurrently with shared Lexicon and RuleConstants.
SentimentScore score_text(std::string_view text, const Lexicon& lexicon,
                          const RuleConstants& rules = {});

}  // namespace sentipulse
