#include "sfm/datetime.hpp"

#include <cctype>
#include <cstdio>

#include "sfm/util.hpp"

namespace sfm {

// Howard Hinnant's days-from-civil algorithm (public domain).
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, unsigned& month, unsigned& day) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  day = doy - (153 * mp + 2) / 5 + 1;
  month = mp + (mp < 10 ? 3 : -9);
  year = static_cast<int>(y + (month <= 2));
}

UtcSeconds utc_from_civil(int year, unsigned month, unsigned day, int hour,
                          int minute, int second) {
  return days_from_civil(year, month, day) * 86400 + hour * 3600 + minute * 60 +
         second;
}

namespace {

bool take_int(const std::string& s, size_t& pos, int digits, int& out) {
  if (pos + digits > s.size()) return false;
  int v = 0;
  for (int i = 0; i < digits; ++i) {
    const char c = s[pos + i];
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    v = v * 10 + (c - '0');
  }
  pos += digits;
  out = v;
  return true;
}

bool take_char(const std::string& s, size_t& pos, char want) {
  if (pos >= s.size() || s[pos] != want) return false;
  ++pos;
  return true;
}

}  // namespace

UtcSeconds parse_iso8601(const std::string& text) {
  size_t pos = 0;
  int year, month, day, hour, minute, second = 0;
  const auto fail = [&] {
    throw DataError(concat("invalid ISO-8601 timestamp: \"", text, "\""));
  };
  if (!take_int(text, pos, 4, year)) fail();
  if (!take_char(text, pos, '-')) fail();
  if (!take_int(text, pos, 2, month)) fail();
  if (!take_char(text, pos, '-')) fail();
  if (!take_int(text, pos, 2, day)) fail();
  if (pos >= text.size() || (text[pos] != 'T' && text[pos] != ' ')) fail();
  ++pos;
  if (!take_int(text, pos, 2, hour)) fail();
  if (!take_char(text, pos, ':')) fail();
  if (!take_int(text, pos, 2, minute)) fail();
  if (pos < text.size() && text[pos] == ':') {
    ++pos;
    if (!take_int(text, pos, 2, second)) fail();
  }
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 ||
      minute > 59 || second > 60) {
    fail();
  }

  std::int64_t offset = 0;
  if (pos < text.size()) {
    const char c = text[pos];
    if (c == 'Z') {
      ++pos;
    } else if (c == '+' || c == '-') {
      ++pos;
      int oh, om = 0;
      if (!take_int(text, pos, 2, oh)) fail();
      if (pos < text.size() && text[pos] == ':') ++pos;
      if (pos < text.size() && !take_int(text, pos, 2, om)) fail();
      offset = (c == '+' ? 1 : -1) * (oh * 3600 + om * 60);
    } else {
      fail();
    }
  }
  if (pos != text.size()) fail();

  return utc_from_civil(year, static_cast<unsigned>(month),
                        static_cast<unsigned>(day), hour, minute, second) -
         offset;
}

std::string format_iso8601(UtcSeconds t) {
  std::int64_t days = t / 86400;
  std::int64_t rem = t % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  int year;
  unsigned month, day;
  civil_from_days(days, year, month, day);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ", year, month,
                day, static_cast<int>(rem / 3600),
                static_cast<int>((rem % 3600) / 60), static_cast<int>(rem % 60));
  return buf;
}

}  // namespace sfm
