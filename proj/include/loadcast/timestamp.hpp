#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace loadcast {

// Proleptic-Gregorian civil date helpers (era-split algorithm, no library tz
// machinery; everything in this project is civil local time).
bool is_leap_year(int year);
int last_day_of_month(int year, int month);
std::int64_t days_from_civil(int year, int month, int day);
void civil_from_days(std::int64_t z, int& year, int& month, int& day);
int day_of_year(int year, int month, int day); // 1..366
int weekday_mon0(int year, int month, int day); // Monday = 0 .. Sunday = 6

// A civil local date-time at hourly resolution.  `hour` is hour-*ending*,
// 1..24: hour 2 covers the wall-clock interval (01:00, 02:00].
struct Timestamp {
    int year = 2017;
    int month = 1; // 1..12
    int day = 1;   // 1..31
    int hour = 1;  // hour-ending, 1..24

    // Hours since the civil epoch; total order and arithmetic live here.
    std::int64_t serial() const {
        return days_from_civil(year, month, day) * 24 + (hour - 1);
    }
    static Timestamp from_serial(std::int64_t serial_hour);

    Timestamp add_hours(std::int64_t n) const { return from_serial(serial() + n); }
    Timestamp add_days(std::int64_t n) const { return from_serial(serial() + n * 24); }

    int weekday() const { return weekday_mon0(year, month, day); }
    int yearday() const { return day_of_year(year, month, day); }
    // Hour within the week, 0..167, Monday hour-ending-1 first.
    int week_hour() const { return weekday() * 24 + (hour - 1); }

    bool valid() const;

    // "2016-03-13T01:00:00" marks the *start* of the hour, so hour-ending 2
    // renders as T01:00:00.
    std::string iso() const;
    static Timestamp parse_iso(const std::string& text);

    friend auto operator<=>(const Timestamp& a, const Timestamp& b) {
        return a.serial() <=> b.serial();
    }
    friend bool operator==(const Timestamp& a, const Timestamp& b) {
        return a.serial() == b.serial();
    }
};

std::int64_t hours_between(const Timestamp& from, const Timestamp& to);

// Daylight-saving transition dates.  US federal rules are computed per era:
// 1987-2006 first Sunday of April / last Sunday of October, 2007 onward
// second Sunday of March / first Sunday of November.
struct DstCalendar {
    enum class Rules { UsFederal, None };
    Rules rules = Rules::UsFederal;

    static DstCalendar us() { return DstCalendar{Rules::UsFederal}; }
    static DstCalendar none() { return DstCalendar{Rules::None}; }

    // Date whose day has 23 hourly samples (clocks jump forward).
    bool spring_forward_date(int year, int& month, int& day) const;
    // Date whose day has 25 hourly samples (clocks fall back).
    bool fall_back_date(int year, int& month, int& day) const;

    bool is_spring_forward(int year, int month, int day) const;
    bool is_fall_back(int year, int month, int day) const;
};

// US federal holidays, computed (no observance shifting): New Year's Day,
// MLK, Washington's Birthday, Memorial Day, Independence Day, Labor Day,
// Columbus Day, Veterans Day, Thanksgiving, Christmas.
bool is_us_federal_holiday(int year, int month, int day);

} // namespace loadcast
