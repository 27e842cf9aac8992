#![no_main]

use cylindric::littlewood::{IdentityId, StructureKind};
use cylindric::paths_h1::{Family, H1Check};
use cylindric::updown::Marking;
use cylindric::walks_matchings::{Half, VtVariant};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(x) = s.parse::<Half>() {
        assert_eq!(x.to_string().parse::<Half>().unwrap(), x);
    }
    if let Ok(id) = s.parse::<IdentityId>() {
        assert_eq!(id.to_string().parse::<IdentityId>().unwrap(), id);
    }
    let _ = s.parse::<StructureKind>();
    let _ = s.parse::<Family>();
    let _ = s.parse::<H1Check>();
    let _ = s.parse::<Marking>();
    let _ = s.parse::<VtVariant>();
});
