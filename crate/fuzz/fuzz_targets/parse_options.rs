#![no_main]

use degree_roots::asymptotics::BkwForm;
use degree_roots::bounds::BoundName;
use degree_roots::graphical::SequenceKind;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(kind) = s.parse::<SequenceKind>() {
        assert_eq!(kind.to_string().parse::<SequenceKind>().unwrap(), kind);
    }
    if let Ok(b) = s.parse::<BoundName>() {
        assert_eq!(b.to_string().parse::<BoundName>().unwrap(), b);
    }
    if let Ok(form) = s.parse::<BkwForm>() {
        assert!(form.validate().is_ok());
    }
});
