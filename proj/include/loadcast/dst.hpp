#pragma once

#include "loadcast/series.hpp"
#include "loadcast/timestamp.hpp"

namespace loadcast {

struct DstOptions {
    DstCalendar calendar = DstCalendar::us();

    // Historical files may store the fall-back day as 24 rows whose hour-2
    // value is the double-counted sum of both wall-clock hours; there is no
    // structural marker, so the halving is applied to complete fall-back days
    // of years before `clean_from_year` only.  A fall-back day stored as two
    // duplicate hour-2 rows is detected structurally and merged in any year.
    bool assume_summed_fallback = true;
    int clean_from_year = 2016;
};

// Forces exactly 24 samples per calendar day:
//  - spring-forward day: the missing hour-ending-2 sample is inserted as the
//    mean of the hour-ending-1 and hour-ending-3 samples;
//  - fall-back day, duplicate hour-2 rows: replaced by half their sum;
//  - fall-back day, single summed hour-2 row (pre clean_from_year): the load
//    is halved in place;
//  - complete days pass through unchanged.
// Gaps or duplicates anywhere else raise DataQualityError; more than one
// anomaly on a single day raises NormalizationError.  A dataset that already
// carries dst_normalized is returned as-is, which makes the operation
// idempotent.  Note that the summed-row halving is not re-detectable after a
// dump/re-ingest cycle; re-normalizing exported data needs
// assume_summed_fallback = false.
ZoneDataset normalize_dst(const ZoneDataset& raw, const DstOptions& options = {});

} // namespace loadcast
