#![no_main]

use libfuzzer_sys::fuzz_target;
use zccs::SetDocument;

// The document parser must never panic, and any accepted document must
// re-serialize and re-parse to the same set.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = SetDocument::parse_json(text) else {
        return;
    };
    if let Ok(set) = doc.to_set() {
        let rewritten = SetDocument::from_set(&set, doc.provenance.clone());
        let reparsed = SetDocument::parse_json(&rewritten.to_json())
            .expect("rendered document parses");
        assert_eq!(reparsed.to_set().expect("rendered document decodes"), set);
    }
});
