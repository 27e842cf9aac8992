#![no_main]

use cylindric::paths_h1::{
    dershowitz, dershowitz_inverse, psi, psi_inverse, special_involution, DyckPrefix, MotzkinPath, MotzkinVariant,
    TriangleWalk, UpDownPath,
};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&bound, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let w = usize::from(bound % 8);
    if let Ok(p) = MotzkinPath::parse(s, w) {
        assert_eq!(p.to_string(), s.to_ascii_uppercase());
        if p.is_in(MotzkinVariant::BottomOrTopH) {
            match special_involution(&p) {
                Ok(q) => assert_eq!(special_involution(&q).unwrap(), p),
                Err(_) => assert_eq!(w, 0),
            }
        }
    }
    if let Ok(t) = TriangleWalk::parse(s, w) {
        assert_eq!(t.to_string(), s.to_ascii_uppercase());
    }
    if let Ok(p) = DyckPrefix::parse(s, w) {
        let q = dershowitz(&p);
        assert_eq!(dershowitz_inverse(&q).unwrap(), p);
    }
    if let Ok(q) = UpDownPath::parse(s, w) {
        let r = psi(&q).unwrap();
        assert_eq!(psi_inverse(&r, w).unwrap(), q);
    }
});
