//! Rational parsing must never panic; accepted scalars round-trip through
//! their display form.

#![no_main]

use std::str::FromStr;

use libfuzzer_sys::fuzz_target;
use nilalg::Scalar;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = Scalar::from_str(text) {
        let back = Scalar::from_str(&s.to_string()).expect("display form parses");
        assert_eq!(s, back);
    }
});
