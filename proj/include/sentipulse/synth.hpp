#pragma once

#include <chrono>
#include <cstdint>
#include <string>

namespace sentipulse {

/// Parameters of the bundled synthetic dataset: fake companies with
/// hourly bars and per-entity tweet streams over the study window.
struct SynthSpec {
    int n_companies = 10;
    std::chrono::year_month_day start{std::chrono::year{2023},
                                      std::chrono::month{2},
                                      std::chrono::day{1}};
    std::chrono::year_month_day end{std::chrono::year{2023},
                                    std::chrono::month{3},
                                    std::chrono::day{19}};
    std::uint64_t seed = 42;
};

/// Writes tweets/<label>.csv, stocks/<company>.csv, lexicon.tsv and
/// config.conf under out_dir. Deterministic in the seed: identical spec,
/// identical bytes. Weekends, the 2023-02-20 holiday and off-session hours
/// are included on purpose so the calendar filter has something to drop.
void write_synthetic_dataset(const std::string& out_dir, const SynthSpec& spec);

}  // namespace sentipulse
