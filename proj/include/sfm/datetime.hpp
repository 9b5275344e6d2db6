#pragma once

#include <cstdint>
#include <string>

namespace sfm {

// UTC timestamp, seconds since the Unix epoch. All kickoff arithmetic in the
// engine happens on this type; offsets in the input are normalized away at
// parse time.
using UtcSeconds = std::int64_t;

// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(int year, unsigned month, unsigned day);

void civil_from_days(std::int64_t days, int& year, unsigned& month, unsigned& day);

// Parses ISO-8601 timestamps of the forms
//   YYYY-MM-DDTHH:MM:SS(±HH:MM|Z)   and   YYYY-MM-DD HH:MM:SS(±HH:MM|Z)
// Seconds may be omitted. Throws DataError on malformed input.
UtcSeconds parse_iso8601(const std::string& text);

// Renders a UTC timestamp as YYYY-MM-DDTHH:MM:SSZ.
std::string format_iso8601(UtcSeconds t);

UtcSeconds utc_from_civil(int year, unsigned month, unsigned day, int hour = 0,
                          int minute = 0, int second = 0);

}  // namespace sfm
