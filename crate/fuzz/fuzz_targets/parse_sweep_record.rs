#![no_main]

use degree_roots::sweep::{parse_jsonl, SweepRecord};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(records) = parse_jsonl(s) {
        for rec in records {
            let line = rec.to_json_line();
            assert_eq!(
                SweepRecord::from_json_line(&line).unwrap().to_json_line(),
                line
            );
        }
    }
});
