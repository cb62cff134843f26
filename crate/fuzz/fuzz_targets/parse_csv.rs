#![no_main]
use libfuzzer_sys::fuzz_target;

use cavity_cli::SeriesTable;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(table) = SeriesTable::parse_csv(text) else { return };
    // Re-serialising and parsing again must give the same numbers (NaN aside).
    let again = SeriesTable::parse_csv(&table.to_csv()).expect("own output parses");
    assert_eq!(again.columns(), table.columns());
    assert_eq!(again.rows().len(), table.rows().len());
    for (a, b) in again.rows().iter().flatten().zip(table.rows().iter().flatten()) {
        assert!(a == b || (a.is_nan() && b.is_nan()));
    }
});
