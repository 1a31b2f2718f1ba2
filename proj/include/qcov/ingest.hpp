// Raw tick-file parsing and session cleaning for the empirical pipeline.
//
// Two input schemas are accepted:
//   timestamp_ns,price  — integer nanoseconds since epoch; filtered to a
//                         wall-clock session window and mapped to
//                         day-fraction times in (0, 1]
//   timestamp,price     — already day-fraction times (the simulator's
//                         output format); only the series-level cleaning
//                         rules apply
#pragma once

#include <cstdint>
#include <string>

#include "qcov/simulate.hpp"

namespace qcov {

struct RawTick {
  std::int64_t timestamp_ns = 0;
  double price = 0.0;
};

struct RawTickFile {
  std::vector<RawTick> rows;     // sorted (stably) by timestamp on load
  long long skipped_rows = 0;    // malformed rows dropped during parsing
};

// Wall-clock session window within a trading day, e.g. 09:45-15:45.
struct SessionWindow {
  std::int64_t open_ns = 0;   // nanoseconds after local midnight
  std::int64_t close_ns = 0;

  std::int64_t span_ns() const { return close_ns - open_ns; }
};

// "HH:MM-HH:MM" -> SessionWindow; throws FormatError on bad syntax or
// open >= close.
SessionWindow parse_session(const std::string& text);

// "+HH:MM" / "-HH:MM" / "Z" -> signed offset in nanoseconds.
std::int64_t parse_tz_offset(const std::string& text);

// Loads a timestamp_ns,price file. Malformed rows are counted and
// skipped; missing header throws FormatError, zero valid rows EmptyInput.
RawTickFile parse_ticks(const std::string& path);

// Session filter, positivity filter, equal-timestamp collapse (median
// price) and day-fraction mapping. Throws EmptyInput when nothing
// survives the window.
TickSeries clean(const RawTickFile& raw, const SessionWindow& window,
                 std::int64_t tz_offset_ns);

// Series-level cleaning used by both ingest paths: sorts, collapses
// equal-time groups to the median price, enforces strict increase.
// Idempotent. Does not filter price sign (simulated series are log-prices
// and may be negative).
TickSeries clean_series(const TickSeries& series);

// Reads either accepted schema, dispatching on the header line; ns files
// are cleaned against the given session/tz, day-fraction files pass
// through clean_series.
TickSeries load_any_ticks(const std::string& path, const SessionWindow& window,
                          std::int64_t tz_offset_ns);

// Reads a timestamp,price day-fraction file (simulator/cleaned format).
TickSeries read_tick_csv(const std::string& path);

void write_tick_csv(const std::string& path, const TickSeries& ticks);

}  // namespace qcov
