#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(zones) = setmosaic::parse_snap_circles(data).and_then(|s| s.zones()) else {
        return;
    };
    let counts = zones.relation_counts();
    let n = zones.set_count();
    assert_eq!(counts.intersections + counts.disjoint, n * (n - 1) / 2);
});
