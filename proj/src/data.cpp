#include "sfm/data.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sfm/csv.hpp"
#include "sfm/util.hpp"

namespace sfm {

std::vector<std::string> Roster::players_in(PlayerGroup g) const {
  std::vector<std::string> out;
  for (const auto& [id, group] : groups) {
    if (group == g) out.push_back(id);
  }
  return out;
}

int Dataset::player_index(const std::string& player_id) const {
  const auto it = std::lower_bound(player_ids.begin(), player_ids.end(), player_id);
  if (it == player_ids.end() || *it != player_id) return -1;
  return static_cast<int>(it - player_ids.begin());
}

int winsorize_goals(int goals) {
  if (goals < 0) throw InvalidArgument(concat("winsorize_goals: negative goals ", goals));
  return std::min(goals, 3);
}

int standings_points(const std::vector<MatchResult>& matches, const std::string& team,
                     int season, UtcSeconds as_of) {
  int points = 0;
  bool known = false;
  for (const auto& m : matches) {
    if (m.season != season) continue;
    const bool home = m.home_team == team;
    const bool away = m.away_team == team;
    if (!home && !away) continue;
    known = true;
    if (m.kickoff >= as_of) continue;  // only information available at kickoff
    const int us = home ? m.home_goals : m.away_goals;
    const int them = home ? m.away_goals : m.home_goals;
    if (us > them) points += 3;
    else if (us == them) points += 1;
  }
  if (!known) {
    throw DataError(concat("standings_points: team \"", team, "\" plays no match in season ",
                           season));
  }
  return points;
}

namespace {

UtcSeconds season_window_start(int season, const IngestConfig& config) {
  return utc_from_civil(season, config.season_boundary_month, config.season_boundary_day);
}

int parse_int_field(const CsvTable& table, const CsvRow& row, int col,
                    const std::string& name, int min_value) {
  const std::string& text = row.fields[col];
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != text.size() || text.empty()) {
    throw DataError(concat(table.path, ":", row.line, ": column \"", name,
                           "\": not an integer: \"", text, "\""));
  }
  if (value < min_value) {
    throw DataError(concat(table.path, ":", row.line, ": column \"", name,
                           "\": value ", value, " below minimum ", min_value));
  }
  return value;
}

}  // namespace

std::vector<MatchResult> load_matches(const std::string& path) {
  const CsvTable table = read_csv(path);
  const int c_id = table.column("match_id");
  const int c_season = table.column("season");
  const int c_league = table.column("league");
  const int c_kickoff = table.column("kickoff");
  const int c_home = table.column("home_team");
  const int c_away = table.column("away_team");
  const int c_hg = table.column("home_goals");
  const int c_ag = table.column("away_goals");

  std::vector<MatchResult> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    MatchResult m;
    m.match_id = row.fields[c_id];
    m.season = parse_int_field(table, row, c_season, "season", 0);
    m.league = row.fields[c_league];
    try {
      m.kickoff = parse_iso8601(row.fields[c_kickoff]);
    } catch (const DataError& e) {
      throw DataError(concat(path, ":", row.line, ": column \"kickoff\": ", e.what()));
    }
    m.home_team = row.fields[c_home];
    m.away_team = row.fields[c_away];
    m.home_goals = parse_int_field(table, row, c_hg, "home_goals", 0);
    m.away_goals = parse_int_field(table, row, c_ag, "away_goals", 0);
    if (m.match_id.empty()) {
      throw DataError(concat(path, ":", row.line, ": column \"match_id\": empty"));
    }
    if (m.home_team == m.away_team) {
      throw DataError(concat(path, ":", row.line,
                             ": home_team equals away_team (\"", m.home_team, "\")"));
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Appearance> load_appearances(const std::string& path) {
  const CsvTable table = read_csv(path);
  const int c_match = table.column("match_id");
  const int c_player = table.column("player_id");
  const int c_team = table.column("team");
  const int c_goals = table.column("goals");

  std::vector<Appearance> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    Appearance a;
    a.match_id = row.fields[c_match];
    a.player_id = row.fields[c_player];
    a.team = row.fields[c_team];
    a.goals = parse_int_field(table, row, c_goals, "goals", 0);
    if (a.match_id.empty() || a.player_id.empty()) {
      throw DataError(concat(path, ":", row.line, ": empty match_id or player_id"));
    }
    out.push_back(std::move(a));
  }
  return out;
}

Roster load_roster(const std::string& path) {
  const CsvTable table = read_csv(path);
  const int c_player = table.column("player_id");
  const int c_group = table.column("group");

  Roster roster;
  for (const auto& row : table.rows) {
    const std::string& id = row.fields[c_player];
    const std::string& group = row.fields[c_group];
    PlayerGroup g;
    if (group == "ELITE") g = PlayerGroup::kElite;
    else if (group == "RLP") g = PlayerGroup::kRlp;
    else {
      throw DataError(concat(path, ":", row.line, ": column \"group\": expected ELITE or RLP, got \"",
                             group, "\""));
    }
    const auto [it, inserted] = roster.groups.emplace(id, g);
    if (!inserted) {
      throw DataError(concat(path, ":", row.line, ": duplicate player_id \"", id, "\""));
    }
  }
  return roster;
}

Dataset build_dataset(const std::vector<MatchResult>& matches,
                      const std::vector<Appearance>& appearances,
                      const Roster& roster, const IngestConfig& config) {
  std::map<std::string, const MatchResult*> by_id;
  for (const auto& m : matches) {
    if (m.home_team == m.away_team) {
      throw DataError(concat("build_dataset: match ", m.match_id,
                             ": home_team equals away_team"));
    }
    if (!by_id.emplace(m.match_id, &m).second) {
      throw DataError(concat("build_dataset: duplicate match_id \"", m.match_id, "\""));
    }
    const UtcSeconds lo = season_window_start(m.season, config);
    const UtcSeconds hi = season_window_start(m.season + 1, config);
    if (m.kickoff < lo || m.kickoff >= hi) {
      throw DataError(concat("build_dataset: match ", m.match_id, " kickoff ",
                             format_iso8601(m.kickoff), " outside season ", m.season,
                             " window"));
    }
  }

  std::set<std::pair<std::string, std::string>> seen;  // (player_id, match_id)
  std::vector<MatchObservation> obs;
  obs.reserve(appearances.size());
  for (const auto& a : appearances) {
    const auto it = by_id.find(a.match_id);
    if (it == by_id.end()) {
      throw DataError(concat("build_dataset: appearance of \"", a.player_id,
                             "\" references unknown match \"", a.match_id, "\""));
    }
    const MatchResult& m = *it->second;
    if (!seen.emplace(a.player_id, a.match_id).second) {
      throw DataError(concat("build_dataset: duplicate appearance of \"", a.player_id,
                             "\" in match \"", a.match_id, "\""));
    }
    if (!roster.groups.empty() && roster.groups.find(a.player_id) == roster.groups.end()) {
      throw DataError(concat("build_dataset: player \"", a.player_id,
                             "\" appears in the data but is not in the roster"));
    }
    const bool home = a.team == m.home_team;
    if (!home && a.team != m.away_team) {
      throw DataError(concat("build_dataset: appearance of \"", a.player_id, "\" in match \"",
                             a.match_id, "\": team \"", a.team,
                             "\" plays neither side of the match"));
    }
    const int team_goals = home ? m.home_goals : m.away_goals;
    if (a.goals > team_goals) {
      throw DataError(concat("build_dataset: \"", a.player_id, "\" credited ", a.goals,
                             " goals in match \"", a.match_id, "\" but the team scored ",
                             team_goals));
    }

    MatchObservation o;
    o.player_id = a.player_id;
    o.match_id = a.match_id;
    o.season = m.season;
    o.kickoff = m.kickoff;
    o.goal_category = winsorize_goals(a.goals);
    o.is_home = home ? 1.0 : 0.0;
    const std::string& opponent = home ? m.away_team : m.home_team;
    o.point_diff_raw =
        static_cast<double>(standings_points(matches, a.team, m.season, m.kickoff)) -
        static_cast<double>(standings_points(matches, opponent, m.season, m.kickoff));
    obs.push_back(std::move(o));
  }

  std::sort(obs.begin(), obs.end(), [](const MatchObservation& a, const MatchObservation& b) {
    if (a.player_id != b.player_id) return a.player_id < b.player_id;
    if (a.kickoff != b.kickoff) return a.kickoff < b.kickoff;
    return a.match_id < b.match_id;
  });

  // Per-player career features, using the canonical time ordering above.
  {
    size_t i = 0;
    while (i < obs.size()) {
      size_t j = i;
      while (j < obs.size() && obs[j].player_id == obs[i].player_id) ++j;
      std::map<int, UtcSeconds> first_in_season;
      std::set<int> seasons;
      for (size_t k = i; k < j; ++k) {
        const auto [it, fresh] = first_in_season.emplace(obs[k].season, obs[k].kickoff);
        seasons.insert(obs[k].season);
        obs[k].days_since_first =
            static_cast<double>(obs[k].kickoff - it->second) / 86400.0;
        (void)fresh;
      }
      for (size_t k = i; k < j; ++k) {
        obs[k].season_index = static_cast<int>(
            std::distance(seasons.begin(), seasons.upper_bound(obs[k].season)));
      }
      i = j;
    }
  }

  Dataset ds;
  ds.factor_names = {"is_home", "point_diff"};

  // is_home stays on its raw {0,1} scale; point_diff is standardized with the
  // training-sample mean/sd (sample sd; identity fallback for degenerate
  // columns so tiny fixtures remain usable).
  double mean = 0.0;
  for (const auto& o : obs) mean += o.point_diff_raw;
  if (!obs.empty()) mean /= static_cast<double>(obs.size());
  double ss = 0.0;
  for (const auto& o : obs) ss += square(o.point_diff_raw - mean);
  double sd = obs.size() > 1 ? std::sqrt(ss / static_cast<double>(obs.size() - 1)) : 0.0;
  if (!(sd > 0.0)) sd = 1.0;
  if (!std::isfinite(mean) || !std::isfinite(sd)) {
    throw DataError("build_dataset: non-finite point_diff standardization");
  }
  for (auto& o : obs) o.point_diff = (o.point_diff_raw - mean) / sd;

  ds.factor_standardization = {{0.0, 1.0}, {mean, sd}};
  ds.observations = std::move(obs);

  for (const auto& o : ds.observations) {
    if (ds.player_ids.empty() || ds.player_ids.back() != o.player_id) {
      ds.player_ids.push_back(o.player_id);
      ds.player_spans.emplace_back(0, 0);
    }
  }
  int row = 0;
  for (int p = 0; p < ds.num_players(); ++p) {
    const int begin = row;
    while (row < ds.num_observations() &&
           ds.observations[row].player_id == ds.player_ids[p]) {
      ++row;
    }
    ds.player_spans[p] = {begin, row};
  }
  return ds;
}

std::vector<double> empirical_category_gaps(const Dataset& dataset) {
  std::vector<double> counts(4, 0.0);
  for (const auto& o : dataset.observations) counts[o.goal_category] += 1.0;
  const double n = std::max<double>(1.0, static_cast<double>(dataset.num_observations()));
  return {counts[1] / n, counts[2] / n, counts[3] / n};
}

}  // namespace sfm
