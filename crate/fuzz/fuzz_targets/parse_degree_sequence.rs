#![no_main]

use degree_roots::{DegreeSequence, IntPolynomial};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(seq) = s.parse::<DegreeSequence>() {
        assert_eq!(seq.to_string().parse::<DegreeSequence>().unwrap(), seq);
        if seq.max_degree() < 1 << 16 {
            let p = IntPolynomial::from_degrees(&seq);
            assert_eq!(p.to_degree_sequence().unwrap(), seq);
        }
    }
});
