#![no_main]

use degree_roots::IntPolynomial;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = IntPolynomial::from_json_coeffs(s) {
        assert_eq!(
            IntPolynomial::from_json_coeffs(&p.to_json_coeffs()).unwrap(),
            p
        );
    }
});
