#include "seagrid/common.hpp"

#include <stdexcept>

namespace seagrid {

std::int64_t civil_to_epoch(int year, unsigned month, unsigned day, unsigned hour, unsigned minute,
                            unsigned second) {
    using namespace std::chrono;
    const year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                             std::chrono::day{day}};
    if (!ymd.ok()) throw std::invalid_argument("invalid civil date");
    if (hour > 23 || minute > 59 || second > 60) throw std::invalid_argument("invalid time of day");
    const sys_days sd{ymd};
    return sd.time_since_epoch().count() * kSecondsPerDay + std::int64_t(hour) * 3600 +
           std::int64_t(minute) * 60 + std::int64_t(second);
}

std::int64_t day_start_of(std::uint32_t date_id) {
    const int year = int(date_id / 10000);
    const unsigned month = (date_id / 100) % 100;
    const unsigned day = date_id % 100;
    return civil_to_epoch(year, month, day, 0, 0, 0);
}

} // namespace seagrid
