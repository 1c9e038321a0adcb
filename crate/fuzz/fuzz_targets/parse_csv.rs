#![no_main]

use libfuzzer_sys::fuzz_target;

// The CSV table reader consumes files written by other runs; arbitrary
// bytes must produce an error, not a panic.
fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = vnum_cli::csv::read_csv(text);
    }
});
