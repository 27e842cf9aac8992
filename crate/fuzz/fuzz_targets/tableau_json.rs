#![no_main]

use cylindric::tableaux::{is_cylindric, Kind, Tableau};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&hw, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    if let Ok(t) = Tableau::parse_json(s) {
        let again = Tableau::parse_json(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(again, t);
        let (h, w) = (usize::from(hw >> 4) + 1, usize::from(hw & 15) + 1);
        let _ = is_cylindric(&t, h, w, Kind::Ssyt);
        let _ = is_cylindric(&t, h, w, Kind::Rst);
    }
});
