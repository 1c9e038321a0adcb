#![no_main]

use libfuzzer_sys::fuzz_target;

// The ideal-file parser (text and JSON forms) must reject malformed input
// with an error, never a panic.
fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = vnum_cli::parse::parse_ideal(text);
    }
});
