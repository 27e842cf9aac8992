#![no_main]

use cylindric::walks_matchings::{chen_phi_inverse, VacillatingTableau, VtVariant};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let [a, b, rest @ ..] = data else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let h = usize::from(a & 7) + 1;
    let w = (b & 8 == 0).then_some(usize::from(b & 7) + 1);
    let variant = VtVariant::ALL[usize::from(b >> 4) % 4];
    if let Ok(t) = VacillatingTableau::parse_json(s, h, w, variant) {
        assert_eq!(VacillatingTableau::parse_json(&t.to_json(), h, w, variant).unwrap(), t);
        if variant == VtVariant::Plain && w.is_some() {
            let _ = chen_phi_inverse(&t);
        }
    }
});
