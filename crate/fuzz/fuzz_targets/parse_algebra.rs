//! Document parsing must never panic, and every accepted document must
//! survive an emit/parse round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((algebra, _warnings)) = nilalg::io::parse_algebra(text) {
        let emitted = nilalg::io::emit_algebra(&algebra);
        let (again, warnings) = nilalg::io::parse_algebra(&emitted).expect("emitted documents parse");
        assert!(warnings.is_empty());
        assert_eq!(again, algebra);
    }
});
