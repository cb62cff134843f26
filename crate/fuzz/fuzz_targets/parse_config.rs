#![no_main]
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let text = String::from_utf8_lossy(data);
    if let Ok(mut spec) = cavity_cli::parse_config_str(&text) {
        // Anything the parser accepts has already passed validation.
        assert!(spec.validate().is_ok());
    }
});
