#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sfm/datetime.hpp"

namespace sfm {

struct MatchResult {
  std::string match_id;
  int season = 0;  // 2000 means the 2000/01 season
  std::string league;
  UtcSeconds kickoff = 0;
  std::string home_team;
  std::string away_team;
  int home_goals = 0;
  int away_goals = 0;
};

struct Appearance {
  std::string match_id;
  std::string player_id;
  std::string team;
  int goals = 0;
};

enum class PlayerGroup { kElite, kRlp };

struct Roster {
  std::map<std::string, PlayerGroup> groups;

  std::vector<std::string> players_in(PlayerGroup g) const;
};

struct MatchObservation {
  std::string player_id;
  std::string match_id;
  int season = 0;
  UtcSeconds kickoff = 0;
  int goal_category = 0;         // min(goals, 3)
  double is_home = 0.0;          // {0, 1}, kept on its raw scale
  double point_diff = 0.0;       // standardized points differential
  double point_diff_raw = 0.0;   // team points - opponent points at kickoff
  double days_since_first = 0.0; // days since the player's first game this season
  int season_index = 0;          // 1-based count of the player's observed seasons
};

struct FactorStandardization {
  double mean = 0.0;
  double sd = 1.0;
};

// Fully assembled design data, canonically ordered by (player_id, kickoff,
// match_id) so each player's observations form one contiguous block.
struct Dataset {
  std::vector<MatchObservation> observations;
  std::vector<std::string> factor_names;
  std::vector<FactorStandardization> factor_standardization;

  std::vector<std::string> player_ids;              // sorted, defines player indices
  std::vector<std::pair<int, int>> player_spans;    // [begin, end) per player index

  int num_players() const { return static_cast<int>(player_ids.size()); }
  int num_observations() const { return static_cast<int>(observations.size()); }
  int player_index(const std::string& player_id) const;  // -1 if absent
};

struct IngestConfig {
  // Month/day splitting consecutive seasons; kickoffs must fall inside their
  // declared season's window.
  unsigned season_boundary_month = 7;
  unsigned season_boundary_day = 1;
};

// min(goals, 3); goals must be non-negative.
int winsorize_goals(int goals);

// Points (win 3, draw 1, loss 0) collected by `team` in `season` over matches
// whose kickoff is strictly before `as_of`. A postponed match therefore counts
// only once its actual kickoff has passed. Throws DataError if the team plays
// no match in that season.
int standings_points(const std::vector<MatchResult>& matches, const std::string& team,
                     int season, UtcSeconds as_of);

Dataset build_dataset(const std::vector<MatchResult>& matches,
                      const std::vector<Appearance>& appearances,
                      const Roster& roster, const IngestConfig& config = {});

std::vector<MatchResult> load_matches(const std::string& path);
std::vector<Appearance> load_appearances(const std::string& path);
Roster load_roster(const std::string& path);

// Successive empirical-CDF gaps of the winsorized categories: entry k is the
// share of observations in category k+1 (one entry per cutpoint).
std::vector<double> empirical_category_gaps(const Dataset& dataset);

}  // namespace sfm
