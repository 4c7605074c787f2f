#![no_main]

use degree_roots::families::{FamilyRange, FamilySpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = s.parse::<FamilySpec>() {
        assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        if spec.validate().is_ok() && spec.order() <= 64 {
            let g = spec.realize();
            if let Ok(g) = g {
                assert_eq!(g.degree_polynomial(), spec.degree_poly().unwrap());
            }
        }
    }
    if let Ok(range) = s.parse::<FamilyRange>() {
        assert!(range.from <= range.to);
    }
});
