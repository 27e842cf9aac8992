#![no_main]

use cylindric::Partition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = Partition::parse_json(s) {
        assert_eq!(Partition::parse_json(&p.to_json()).unwrap(), p);
    }
});
