#![no_main]

use cylindric::updown::UpDownTableau;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&hw, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let (h, w) = (usize::from(hw >> 4) + 1, usize::from(hw & 15) + 1);
    if let Ok(t) = UpDownTableau::parse_json(s, h, w) {
        assert_eq!(UpDownTableau::parse_json(&t.to_json(), h, w).unwrap(), t);
    }
});
