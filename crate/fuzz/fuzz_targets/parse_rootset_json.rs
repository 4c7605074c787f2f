#![no_main]

use degree_roots::RootSet;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(rs) = serde_json::from_slice::<RootSet>(data) {
        let again: RootSet = serde_json::from_str(&rs.to_json()).expect("own output parses");
        assert_eq!(again.to_json(), rs.to_json());
    }
});
