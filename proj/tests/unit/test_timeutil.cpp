#include <doctest.h>

#include "support/timeutil.hpp"

using namespace provaud::timeutil;

TEST_CASE("iso parse and format roundtrip") {
    auto t = parse_iso_utc("2024-03-12T08:13:00Z");
    REQUIRE(t.has_value());
    CHECK(format_iso_utc(*t) == "2024-03-12T08:13:00Z");
    CHECK(*t == 1710231180);

    CHECK(format_iso_utc(0) == "1970-01-01T00:00:00Z");
    CHECK(parse_iso_utc("1970-01-01T00:00:00Z") == 0);
}

TEST_CASE("iso parse rejects malformed input") {
    CHECK_FALSE(parse_iso_utc(""));
    CHECK_FALSE(parse_iso_utc("2024-03-12 08:13:00Z"));
    CHECK_FALSE(parse_iso_utc("2024-03-12T08:13:00"));
    CHECK_FALSE(parse_iso_utc("2024-03-12T08:13:00+00:00"));
    CHECK_FALSE(parse_iso_utc("2024-13-12T08:13:00Z"));
    CHECK_FALSE(parse_iso_utc("2024-02-30T08:13:00Z"));
    CHECK_FALSE(parse_iso_utc("2023-02-29T08:13:00Z")); // not a leap year
    CHECK(parse_iso_utc("2024-02-29T08:13:00Z"));       // leap year
    CHECK_FALSE(parse_iso_utc("2024-03-12T24:00:00Z"));
    CHECK_FALSE(parse_iso_utc("2024-03-12T08:60:00Z"));
    CHECK_FALSE(parse_iso_utc("2024-03-12T08:13:60Z"));
    CHECK_FALSE(parse_iso_utc("2024-3-12T08:13:00Z"));
    CHECK_FALSE(parse_iso_utc("2024-03-12T08:13:00Zx"));
}

TEST_CASE("civil date conversions agree in both directions") {
    for (std::int64_t days = -1000; days <= 30000; days += 97) {
        int y, m, d;
        civil_from_days(days, y, m, d);
        CHECK(days_from_civil(y, m, d) == days);
    }
    CHECK(days_from_civil(1970, 1, 1) == 0);
    CHECK(days_from_civil(2024, 3, 12) == 19794);
}

TEST_CASE("weekday and weekend classification") {
    // 2024-03-12 is a Tuesday, 2024-03-09 a Saturday, 2024-03-10 a Sunday.
    auto tue = *parse_iso_utc("2024-03-12T12:00:00Z");
    auto sat = *parse_iso_utc("2024-03-09T12:00:00Z");
    auto sun = *parse_iso_utc("2024-03-10T12:00:00Z");
    CHECK(weekday_of(tue) == 2);
    CHECK(weekday_of(sat) == 6);
    CHECK(weekday_of(sun) == 0);
    CHECK_FALSE(is_weekend(tue));
    CHECK(is_weekend(sat));
    CHECK(is_weekend(sun));
    // 1970-01-01 was a Thursday.
    CHECK(weekday_of(0) == 4);
}

TEST_CASE("day parts") {
    auto t = *parse_iso_utc("2024-03-12T08:13:27Z");
    CHECK(second_of_day(t) == 8 * 3600 + 13 * 60 + 27);
    CHECK(minute_of_day(t) == 8 * 60 + 13);
    CHECK(date_part(t) == "2024-03-12");
    CHECK(hh_mm_part(t) == "08:13");
    CHECK(hh_mm_of_minutes(0) == "00:00");
    CHECK(hh_mm_of_minutes(493) == "08:13");
    CHECK(hh_mm_of_minutes(1440) == "24:00");
}
