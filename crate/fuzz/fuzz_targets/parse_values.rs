#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(values) = cavity_cli::parse_values(s) {
        assert!(!values.is_empty() && values.len() <= cavity_cli::config::MAX_AXIS_POINTS);
        assert!(values.iter().all(|v| v.is_finite()));
    }
});
