#include "loadcast/timestamp.hpp"

#include <charconv>
#include <cstdio>

#include "loadcast/errors.hpp"

namespace loadcast {

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int last_day_of_month(int year, int month) {
    static constexpr std::array<int, 12> days{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap_year(year)) return 29;
    return days[static_cast<std::size_t>(month - 1)];
}

std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, int& month, int& day) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    day = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    month = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    year = static_cast<int>(y + (month <= 2));
}

int day_of_year(int year, int month, int day) {
    return static_cast<int>(days_from_civil(year, month, day) - days_from_civil(year, 1, 1)) + 1;
}

int weekday_mon0(int year, int month, int day) {
    // days_from_civil(1970,1,1) == 0, a Thursday.
    const std::int64_t z = days_from_civil(year, month, day);
    return static_cast<int>(((z % 7) + 10) % 7); // Thursday=3 in Mon0 terms
}

Timestamp Timestamp::from_serial(std::int64_t serial_hour) {
    std::int64_t days = serial_hour / 24;
    int hour = static_cast<int>(serial_hour % 24);
    if (hour < 0) {
        hour += 24;
        days -= 1;
    }
    Timestamp ts;
    civil_from_days(days, ts.year, ts.month, ts.day);
    ts.hour = hour + 1;
    return ts;
}

bool Timestamp::valid() const {
    return month >= 1 && month <= 12 && day >= 1 && day <= last_day_of_month(year, month) &&
           hour >= 1 && hour <= 24;
}

std::string Timestamp::iso() const {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:00:00", year, month, day, hour - 1);
    return buf;
}

namespace {

int parse_int(const char* first, const char* last, const char* what, const std::string& text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw IngestError(std::string("unparseable ") + what + " in timestamp '" + text + "'");
    return value;
}

} // namespace

Timestamp Timestamp::parse_iso(const std::string& text) {
    // Accepts YYYY-MM-DD[T ]HH[:MM[:SS]]; HH is the hour-beginning, 0..23.
    if (text.size() < 13 || text[4] != '-' || text[7] != '-' || (text[10] != 'T' && text[10] != ' '))
        throw IngestError("unparseable timestamp '" + text + "'");
    Timestamp ts;
    const char* s = text.data();
    ts.year = parse_int(s, s + 4, "year", text);
    ts.month = parse_int(s + 5, s + 7, "month", text);
    ts.day = parse_int(s + 8, s + 10, "day", text);
    const int hour_begin = parse_int(s + 11, s + 13, "hour", text);
    if (hour_begin < 0 || hour_begin > 23)
        throw IngestError("hour out of range in timestamp '" + text + "'");
    ts.hour = hour_begin + 1;
    if (!ts.valid()) throw IngestError("invalid calendar date in timestamp '" + text + "'");
    for (std::size_t i = 13; i < text.size(); ++i) {
        const char c = text[i];
        if (c != ':' && c != '0') throw IngestError("non-hourly timestamp '" + text + "'");
    }
    return ts;
}

std::int64_t hours_between(const Timestamp& from, const Timestamp& to) {
    return to.serial() - from.serial();
}

namespace {

// Day of month of the n-th (1-based) given weekday in a month.
int nth_weekday(int year, int month, int wd_mon0, int n) {
    const int first_wd = weekday_mon0(year, month, 1);
    int day = 1 + (wd_mon0 - first_wd + 7) % 7 + (n - 1) * 7;
    return day;
}

int last_weekday(int year, int month, int wd_mon0) {
    const int last = last_day_of_month(year, month);
    const int last_wd = weekday_mon0(year, month, last);
    return last - (last_wd - wd_mon0 + 7) % 7;
}

constexpr int kSunday = 6;

} // namespace

bool DstCalendar::spring_forward_date(int year, int& month, int& day) const {
    if (rules == Rules::None) return false;
    if (year >= 2007) {
        month = 3;
        day = nth_weekday(year, 3, kSunday, 2);
    } else {
        month = 4;
        day = nth_weekday(year, 4, kSunday, 1);
    }
    return true;
}

bool DstCalendar::fall_back_date(int year, int& month, int& day) const {
    if (rules == Rules::None) return false;
    if (year >= 2007) {
        month = 11;
        day = nth_weekday(year, 11, kSunday, 1);
    } else {
        month = 10;
        day = last_weekday(year, 10, kSunday);
    }
    return true;
}

bool DstCalendar::is_spring_forward(int year, int month, int day) const {
    int m = 0, d = 0;
    return spring_forward_date(year, m, d) && m == month && d == day;
}

bool DstCalendar::is_fall_back(int year, int month, int day) const {
    int m = 0, d = 0;
    return fall_back_date(year, m, d) && m == month && d == day;
}

bool is_us_federal_holiday(int year, int month, int day) {
    if (month == 1 && day == 1) return true;                                  // New Year's Day
    if (month == 1 && day == nth_weekday(year, 1, 0, 3)) return true;         // MLK, 3rd Monday
    if (month == 2 && day == nth_weekday(year, 2, 0, 3)) return true;         // Washington, 3rd Monday
    if (month == 5 && day == last_weekday(year, 5, 0)) return true;           // Memorial, last Monday
    if (month == 7 && day == 4) return true;                                  // Independence Day
    if (month == 9 && day == nth_weekday(year, 9, 0, 1)) return true;         // Labor, 1st Monday
    if (month == 10 && day == nth_weekday(year, 10, 0, 2)) return true;       // Columbus, 2nd Monday
    if (month == 11 && day == 11) return true;                                // Veterans Day
    if (month == 11 && day == nth_weekday(year, 11, 3, 4)) return true;       // Thanksgiving, 4th Thursday
    if (month == 12 && day == 25) return true;                                // Christmas
    return false;
}

} // namespace loadcast
