#![no_main]

use libfuzzer_sys::fuzz_target;
use zccs_cli::{parse_family, parse_seed, parse_source, parse_weight};

// The recipe spec-string grammar must reject garbage without panicking.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    let _ = parse_source(s);
    let _ = parse_seed(s);
    let _ = parse_family(s);
    let _ = parse_weight(s);
});
