#![no_main]

use cylindric_cli::grid::{parse_list, MAX_VALUES};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_list(s) {
        assert!(!v.is_empty() && v.len() <= MAX_VALUES);
        assert!(v.windows(2).all(|p| p[0] < p[1]));
    }
});
