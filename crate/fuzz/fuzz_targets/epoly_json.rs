#![no_main]

use cylindric::EPoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = EPoly::parse_json(s) {
        assert_eq!(EPoly::parse_json(&p.to_json()).unwrap(), p);
    }
});
