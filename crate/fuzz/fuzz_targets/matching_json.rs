#![no_main]

use cylindric::walks_matchings::{crossing_nesting_profile, Matching};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = Matching::parse_json(s) {
        if m.n() > 64 {
            return;
        }
        assert_eq!(Matching::parse_json(&m.to_json()).unwrap(), m);
        let _ = crossing_nesting_profile(&m);
    }
});
