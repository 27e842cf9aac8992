#![no_main]

use cylindric::littlewood::VerificationReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = VerificationReport::parse_json(s) {
        assert_eq!(VerificationReport::parse_json(&r.to_json()).unwrap(), r);
    }
});
