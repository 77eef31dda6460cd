#include "sentipulse/sentiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <unordered_set>

namespace sentipulse {

namespace {

bool is_ascii(unsigned char c) { return c < 0x80; }

bool strippable(unsigned char c) {
    return is_ascii(c) && (std::ispunct(c) || std::iscntrl(c));
}

std::string ascii_lower(std::string_view token) {
    std::string out(token);
    for (char& c : out) {
        c = static_cast<char>(
            std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

// A token is ALL CAPS when it has at least one ASCII letter and every
// ASCII letter is uppercase.
bool is_all_caps(std::string_view token) {
    bool has_alpha = false;
    for (unsigned char c : token) {
        if (is_ascii(c) && std::isalpha(c)) {
            has_alpha = true;
            if (std::islower(c)) {
                return false;
            }
        }
    }
    return has_alpha;
}

const std::unordered_set<std::string_view> kNegators{
    "aint",    "arent",    "cannot",  "cant",    "couldnt", "darent",
    "didnt",   "doesnt",   "dont",    "hadnt",   "hasnt",   "havent",
    "isnt",    "mightnt",  "mustnt",  "neither", "neednt",  "never",
    "no",      "none",     "nope",    "nor",     "not",     "nothing",
    "nowhere", "oughtnt",  "shant",   "shouldnt", "uhuh",   "uh-uh",
    "wasnt",   "werent",   "without", "wont",    "wouldnt", "rarely",
    "seldom",  "despite"};

// Degree adverbs: +1 intensifies, -1 dampens.
const std::unordered_map<std::string_view, int> kBoosters{
    {"absolutely", 1},   {"amazingly", 1},   {"awfully", 1},
    {"completely", 1},   {"considerably", 1}, {"decidedly", 1},
    {"deeply", 1},       {"enormously", 1},  {"entirely", 1},
    {"especially", 1},   {"exceptionally", 1}, {"extremely", 1},
    {"fabulously", 1},   {"fully", 1},       {"greatly", 1},
    {"highly", 1},       {"hugely", 1},      {"incredibly", 1},
    {"intensely", 1},    {"majorly", 1},     {"more", 1},
    {"most", 1},         {"particularly", 1}, {"purely", 1},
    {"quite", 1},        {"really", 1},      {"remarkably", 1},
    {"so", 1},           {"substantially", 1}, {"thoroughly", 1},
    {"totally", 1},      {"tremendously", 1}, {"unbelievably", 1},
    {"unusually", 1},    {"utterly", 1},     {"very", 1},
    {"almost", -1},      {"barely", -1},     {"hardly", -1},
    {"kinda", -1},       {"less", -1},       {"little", -1},
    {"marginally", -1},  {"occasionally", -1}, {"partly", -1},
    {"scarcely", -1},    {"slightly", -1},   {"somewhat", -1},
    {"sorta", -1}};

bool is_negator(std::string_view lower) {
    return kNegators.contains(lower) ||
           lower.find("n't") != std::string_view::npos;
}

// Damping of a booster's effect by its distance from the scored token.
constexpr double kDistanceDamp[3] = {1.0, 0.95, 0.90};

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

}  // namespace

Lexicon Lexicon::from_stream(std::istream& in) {
    Lexicon lex;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            throw LexiconParseError(line_no, "expected token<TAB>valence");
        }
        std::string token = ascii_lower(std::string_view(line).substr(0, tab));
        auto value_end = line.find('\t', tab + 1);
        if (value_end == std::string::npos) {
            value_end = line.size();
        }
        const std::string value = line.substr(tab + 1, value_end - tab - 1);
        std::size_t consumed = 0;
        double valence = 0.0;
        try {
            valence = std::stod(value, &consumed);
        } catch (const std::exception&) {
            throw LexiconParseError(line_no, "unparseable valence '" + value + "'");
        }
        if (consumed != value.size() || !std::isfinite(valence)) {
            throw LexiconParseError(line_no, "unparseable valence '" + value + "'");
        }
        lex.insert(std::move(token), valence);
    }
    return lex;
}

Lexicon Lexicon::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open lexicon file: " + path);
    }
    return from_stream(in);
}

void Lexicon::insert(std::string token, double valence) {
    entries_[std::move(token)] = valence;
}

std::optional<double> Lexicon::valence(std::string_view lowercase_token) const {
    const auto it = entries_.find(std::string(lowercase_token));
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool Lexicon::contains(std::string_view lowercase_token) const {
    return entries_.contains(std::string(lowercase_token));
}

double normalize_compound(double valence_sum, double alpha) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("normalize_compound: alpha must be positive");
    }
    const double denom = std::sqrt(valence_sum * valence_sum + alpha);
    if (!std::isfinite(denom)) {
        return valence_sum > 0.0 ? 1.0 : -1.0;
    }
    return std::clamp(valence_sum / denom, -1.0, 1.0);
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() &&
               std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        std::size_t j = i;
        while (j < text.size() &&
               !std::isspace(static_cast<unsigned char>(text[j]))) {
            ++j;
        }
        if (j > i) {
            std::size_t beg = i;
            std::size_t end = j;
            while (beg < end && strippable(static_cast<unsigned char>(text[beg]))) {
                ++beg;
            }
            while (end > beg &&
                   strippable(static_cast<unsigned char>(text[end - 1]))) {
                --end;
            }
            if (end > beg) {
                tokens.emplace_back(text.substr(beg, end - beg));
            }
        }
        i = j;
    }
    return tokens;
}

SentimentScore score_text(std::string_view text, const Lexicon& lexicon,
                          const RuleConstants& rules) {
    const std::vector<std::string> tokens = tokenize(text);
    if (tokens.empty()) {
        return SentimentScore{};  // empty-text convention
    }

    std::vector<std::string> lower;
    lower.reserve(tokens.size());
    for (const auto& t : tokens) {
        lower.push_back(ascii_lower(t));
    }

    std::size_t caps_count = 0;
    for (const auto& t : tokens) {
        caps_count += is_all_caps(t) ? 1 : 0;
    }
    const bool cap_differential = caps_count > 0 && caps_count < tokens.size();

    std::vector<double> adjusted(tokens.size(), 0.0);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (kBoosters.contains(lower[i])) {
            continue;  // degree adverbs carry no valence of their own
        }
        const auto base = lexicon.valence(lower[i]);
        if (!base) {
            continue;
        }
        double valence = *base;
        if (cap_differential && is_all_caps(tokens[i])) {
            valence += sign_of(valence) * rules.caps_boost;
        }
        for (std::size_t dist = 1; dist <= 3 && dist <= i; ++dist) {
            const std::size_t j = i - dist;
            if (lexicon.contains(lower[j])) {
                continue;  // preceding sentiment words are scored themselves
            }
            if (const auto booster = kBoosters.find(lower[j]);
                booster != kBoosters.end()) {
                double s = booster->second * rules.booster_increment *
                           sign_of(valence);
                if (s != 0.0 && cap_differential && is_all_caps(tokens[j])) {
                    s += sign_of(valence) * rules.caps_boost;
                }
                valence += s * kDistanceDamp[dist - 1];
            }
            if (rules.negation_factor != 0.0 && is_negator(lower[j])) {
                valence *= rules.negation_factor;
            }
        }
        adjusted[i] = valence;
    }

    // "but" shifts emphasis to the clause after it.
    if (rules.but_pre_weight != 0.0 || rules.but_post_weight != 0.0) {
        const auto but = std::find(lower.begin(), lower.end(), "but");
        if (but != lower.end()) {
            const std::size_t b = static_cast<std::size_t>(but - lower.begin());
            for (std::size_t i = 0; i < b; ++i) {
                adjusted[i] *= rules.but_pre_weight;
            }
            for (std::size_t i = b + 1; i < adjusted.size(); ++i) {
                adjusted[i] *= rules.but_post_weight;
            }
        }
    }

    double sum = 0.0;
    double pos_mass = 0.0;
    double neg_mass = 0.0;
    std::size_t neutral = 0;
    for (double v : adjusted) {
        sum += v;
        if (v > 0.0) {
            pos_mass += v + 1.0;
        } else if (v < 0.0) {
            neg_mass += v - 1.0;
        } else {
            ++neutral;
        }
    }

    const long marks = std::count(text.begin(), text.end(), '!');
    const double emphasis =
        std::min<long>(marks, std::max(rules.max_exclamations, 0)) *
        rules.exclamation_increment;
    if (sum > 0.0) {
        sum += emphasis;
    } else if (sum < 0.0) {
        sum -= emphasis;
    }
    if (pos_mass > -neg_mass) {
        pos_mass += emphasis;
    } else if (pos_mass < -neg_mass) {
        neg_mass -= emphasis;
    }

    SentimentScore score;
    score.compound = normalize_compound(sum, rules.alpha);
    const double total = pos_mass - neg_mass + static_cast<double>(neutral);
    score.pos = pos_mass / total;
    score.neg = -neg_mass / total;
    score.neu = static_cast<double>(neutral) / total;
    return score;
}

}  // namespace sentipulse
