#![no_main]

use libfuzzer_sys::fuzz_target;
use zccs::{parse_sign_matrix, render_sign_matrix};

// Sign-matrix text is hand-editable input: parsing must never panic, and
// anything it accepts must survive a render/reparse cycle.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(set) = parse_sign_matrix(text) else {
        return;
    };
    let rendered = render_sign_matrix(&set);
    let reparsed = parse_sign_matrix(&rendered).expect("rendered text reparses");
    assert_eq!(reparsed.codes(), set.codes());
});
