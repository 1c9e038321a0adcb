#![no_main]

use libfuzzer_sys::fuzz_target;
use vnum_core::RingContext;

// The monomial-expression grammar over a fixed small ring.
fuzz_target!(|data: &[u8]| {
    if let Ok(expr) = std::str::from_utf8(data) {
        let ctx = RingContext::new(["x", "y", "z"]).unwrap();
        let _ = vnum_cli::parse::parse_monomial(expr, &ctx);
    }
});
