//! Invariant computations on arbitrary parsed tables must never panic.
//! Dimension is capped to keep single runs fast.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok((algebra, _)) = nilalg::io::parse_algebra(text) else { return };
    if algebra.dim() > 8 {
        return;
    }
    let _ = algebra.associativity_defects();
    let series = algebra.power_series();
    let dims = series.dims();
    // the series is weakly decreasing whatever the table
    assert!(dims.windows(2).all(|w| w[1] <= w[0]));
    let _ = algebra.nilindex();
    let _ = algebra.annihilator_invariants();
    if series.stabilized() && algebra.dim() >= 1 {
        let _ = nilalg::char_seq_algebra(&algebra, 3, 1);
        let _ = nilalg::natural_gradation(&algebra);
    }
});
