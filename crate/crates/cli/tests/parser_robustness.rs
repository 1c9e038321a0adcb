//! The parsers must return errors, never panic, on arbitrary input. The
//! fuzz targets under `fuzz/` drive this property with libFuzzer; this test
//! replays the checked-in corpus plus deterministic mutations so the same
//! property is exercised by `cargo test` alone.

use std::path::PathBuf;

use vnum_core::RingContext;

fn corpus_dir(target: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target)
}

fn corpus(target: &str) -> Vec<Vec<u8>> {
    let dir = corpus_dir(target);
    let mut seeds: Vec<(PathBuf, Vec<u8>)> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            let bytes = std::fs::read(&path).unwrap();
            (path, bytes)
        })
        .collect();
    seeds.sort();
    assert!(!seeds.is_empty(), "empty corpus for {target}");
    seeds.into_iter().map(|(_, bytes)| bytes).collect()
}

struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }
}

/// Truncations, byte flips, and splices of every seed.
fn mutations(seeds: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let mut rng = Rng(0xf002);
    let mut out = Vec::new();
    for seed in seeds {
        for cut in [0, seed.len() / 2, seed.len().saturating_sub(1)] {
            out.push(seed[..cut].to_vec());
        }
        for _ in 0..64 {
            let mut m = seed.clone();
            if m.is_empty() {
                continue;
            }
            let flips = rng.next() % 4 + 1;
            for _ in 0..flips {
                let i = (rng.next() % m.len() as u64) as usize;
                m[i] = (rng.next() & 0xff) as u8;
            }
            out.push(m);
        }
        let other = &seeds[(rng.next() % seeds.len() as u64) as usize];
        let cut = seed.len() / 2;
        let mut spliced = seed[..cut].to_vec();
        spliced.extend_from_slice(&other[other.len() / 2..]);
        out.push(spliced);
    }
    out.push(Vec::new());
    out.push(vec![0xff, 0xfe, 0x00]);
    out.push(b"{".to_vec());
    out.push(b"vars:".to_vec());
    out.push(b"[".repeat(4096));
    out
}

#[test]
fn parse_ideal_never_panics() {
    let seeds = corpus("parse_ideal");
    for input in seeds.iter().cloned().chain(mutations(&seeds)) {
        if let Ok(text) = std::str::from_utf8(&input) {
            let _ = vnum_cli::parse::parse_ideal(text);
        }
    }
}

#[test]
fn parse_monomial_never_panics() {
    let ctx = RingContext::new(["x", "y", "z"]).unwrap();
    let seeds = corpus("parse_monomial");
    for input in seeds.iter().cloned().chain(mutations(&seeds)) {
        if let Ok(text) = std::str::from_utf8(&input) {
            let _ = vnum_cli::parse::parse_monomial(text, &ctx);
        }
    }
}

#[test]
fn parse_csv_never_panics() {
    let seeds = corpus("parse_csv");
    for input in seeds.iter().cloned().chain(mutations(&seeds)) {
        if let Ok(text) = std::str::from_utf8(&input) {
            let _ = vnum_cli::csv::read_csv(text);
        }
    }
}

#[test]
fn corpus_seeds_for_valid_files_parse() {
    for name in ["worked_text", "worked_json", "vectors", "three_vars"] {
        let bytes = std::fs::read(corpus_dir("parse_ideal").join(name)).unwrap();
        let text = String::from_utf8(bytes).unwrap();
        assert!(vnum_cli::parse::parse_ideal(&text).is_ok(), "{name}");
    }
    let table = std::fs::read_to_string(corpus_dir("parse_csv").join("worked_table")).unwrap();
    assert!(vnum_cli::csv::read_csv(&table).is_ok());
}
