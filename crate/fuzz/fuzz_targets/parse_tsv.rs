#![no_main]

use libfuzzer_sys::fuzz_target;
use setmosaic::order::{order_heuristic, segment_count};

fuzz_target!(|data: &[u8]| {
    let Ok(system) = setmosaic::parse_membership_tsv(data) else {
        return;
    };
    if let Ok(zones) = system.zones() {
        let order = order_heuristic(&zones);
        assert!(segment_count(&zones, &order).unwrap() >= zones.set_count());
    }
});
