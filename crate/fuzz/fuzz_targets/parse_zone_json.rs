#![no_main]

use libfuzzer_sys::fuzz_target;

// Anything that parses must survive a round trip unchanged.
fuzz_target!(|data: &[u8]| {
    if let Ok(zones) = setmosaic::parse_zone_json(data) {
        let text = setmosaic::to_zone_json(&zones);
        assert_eq!(setmosaic::parse_zone_json(text.as_bytes()).unwrap(), zones);
    }
});
