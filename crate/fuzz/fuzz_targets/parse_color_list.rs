#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(colors) = setmosaic::color::parse_color_list(text) {
        for c in colors {
            assert_eq!(c.to_string().parse::<setmosaic::Rgb>().unwrap(), c);
        }
    }
});
