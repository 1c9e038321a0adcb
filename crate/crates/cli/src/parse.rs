//! Ideal description parsers.
//!
//! Two input formats describe the same thing, a variable list plus a list of
//! generators, where each generator is either a monomial expression like
//! `x^4*y^3` or an exponent vector like `[4, 3]`:
//!
//! ```text
//! # comment lines and blank lines are ignored
//! vars: x, y
//! gens: x^5, x^4*y^3, [2, 4]
//! ```
//!
//! and the equivalent JSON document (detected by a leading `{`):
//!
//! ```text
//! {"vars": ["x", "y"], "gens": ["x^5", [4, 3], [2, 4]]}
//! ```
//!
//! Parsing is whitespace-insensitive, deterministic, and never panics on
//! malformed input; errors carry a 1-based line and column. Generators are
//! minimized on load, with a warning when the input list was not minimal.

use serde::Deserialize;

use vnum_core::{Monomial, MonomialIdeal, RingContext};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Self {
            line,
            col,
            msg: msg.into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    pub warnings: Vec<String>,
}

/// Parses either input format, deciding by the first non-space character.
pub fn parse_ideal(text: &str) -> Result<ParsedIdeal, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits on top-level commas (commas inside `[...]` belong to the item).
/// Returns byte offsets of each item within `value`.
fn split_top_level(value: &str) -> Vec<(usize, &str)> {
    let mut items = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in value.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                items.push((start, &value[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    items.push((start, &value[start..]));
    items
}

/// Offset of the first non-space byte, for error columns.
fn lead(s: &str) -> usize {
    s.len() - s.trim_start().len()
}

fn parse_text(text: &str) -> Result<ParsedIdeal, ParseError> {
    let mut vars: Option<Vec<String>> = None;
    // (value, line number, byte offset of the value within the line)
    let mut gens_line: Option<(String, usize, usize)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let key_start = lead(raw);
        if let Some(rest) = trimmed.strip_prefix("vars:") {
            if vars.is_some() {
                return Err(ParseError::new(
                    line_no,
                    key_start + 1,
                    "duplicate `vars:` line",
                ));
            }
            let value_off = key_start + "vars:".len();
            vars = Some(parse_vars(rest, line_no, value_off)?);
        } else if let Some(rest) = trimmed.strip_prefix("gens:") {
            if gens_line.is_some() {
                return Err(ParseError::new(
                    line_no,
                    key_start + 1,
                    "duplicate `gens:` line",
                ));
            }
            let value_off = key_start + "gens:".len();
            gens_line = Some((rest.to_string(), line_no, value_off));
        } else {
            return Err(ParseError::new(
                line_no,
                key_start + 1,
                "expected a `vars:` or `gens:` line",
            ));
        }
    }

    let vars = vars.ok_or_else(|| ParseError::new(1, 1, "missing `vars:` line"))?;
    let (gens_value, gens_line_no, gens_off) =
        gens_line.ok_or_else(|| ParseError::new(1, 1, "missing `gens:` line"))?;

    let ctx = RingContext::new(vars.clone()).map_err(|e| ParseError::new(1, 1, e.to_string()))?;

    let mut gens = Vec::new();
    if !gens_value.trim().is_empty() {
        for (item_off, item) in split_top_level(&gens_value) {
            let off = gens_off + item_off;
            gens.push(parse_generator(item, &ctx, gens_line_no, off)?);
        }
    }
    finish(ctx, gens)
}

fn parse_vars(value: &str, line: usize, value_off: usize) -> Result<Vec<String>, ParseError> {
    let mut names = Vec::new();
    for (item_off, item) in split_top_level(value) {
        let col = value_off + item_off + lead(item) + 1;
        let name = item.trim();
        if name.is_empty() {
            return Err(ParseError::new(
                line,
                value_off + item_off + 1,
                "empty variable name",
            ));
        }
        if !is_identifier(name) {
            return Err(ParseError::new(
                line,
                col,
                format!("`{name}` is not a valid variable name"),
            ));
        }
        if names.iter().any(|n| n == name) {
            return Err(ParseError::new(
                line,
                col,
                format!("duplicate variable `{name}`"),
            ));
        }
        names.push(name.to_string());
    }
    Ok(names)
}

/// One generator: an exponent vector in brackets or a monomial expression.
fn parse_generator(
    item: &str,
    ctx: &RingContext,
    line: usize,
    item_off: usize,
) -> Result<Monomial, ParseError> {
    let body = item.trim();
    let col0 = item_off + lead(item);
    if body.is_empty() {
        return Err(ParseError::new(line, item_off + 1, "empty generator"));
    }
    if let Some(inner) = body.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| ParseError::new(line, col0 + body.len(), "missing `]`"))?;
        let mut exps = Vec::new();
        for (part_off, part) in split_top_level(inner) {
            let col = col0 + 1 + part_off + lead(part) + 1;
            let digits = part.trim();
            if digits.starts_with('-') {
                return Err(ParseError::new(line, col, "negative exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| {
                ParseError::new(line, col, format!("`{digits}` is not a valid exponent"))
            })?;
            exps.push(e);
        }
        if exps.len() != ctx.n() {
            return Err(ParseError::new(
                line,
                col0 + 1,
                format!(
                    "exponent vector has {} entries, expected {}",
                    exps.len(),
                    ctx.n()
                ),
            ));
        }
        Ok(Monomial::new(exps))
    } else {
        parse_monomial_at(body, ctx, line, col0)
    }
}

/// Parses a monomial expression against `ctx`, reporting errors at
/// 1-based columns. The grammar: `1`, or `*`-separated factors
/// `name` / `name^exp`.
pub fn parse_monomial(expr: &str, ctx: &RingContext) -> Result<Monomial, ParseError> {
    parse_monomial_at(expr.trim_end(), ctx, 1, lead(expr))
}

fn parse_monomial_at(
    expr: &str,
    ctx: &RingContext,
    line: usize,
    off: usize,
) -> Result<Monomial, ParseError> {
    let bytes = expr.as_bytes();
    let n = ctx.n();
    let mut exps = vec![0u32; n];
    let mut pos = 0usize;
    let col = |p: usize| off + p + 1;

    let mut expect_factor = true;
    while pos < bytes.len() {
        while pos < bytes.len() && (bytes[pos] == b' ' || bytes[pos] == b'\t') {
            pos += 1;
        }
        if pos >= bytes.len() {
            break;
        }
        if !expect_factor {
            if bytes[pos] == b'*' {
                pos += 1;
                expect_factor = true;
                continue;
            }
            return Err(ParseError::new(
                line,
                col(pos),
                "expected `*` between factors",
            ));
        }
        let c = bytes[pos];
        if c == b'1' {
            pos += 1;
            expect_factor = false;
            continue;
        }
        if !(c.is_ascii_alphabetic() || c == b'_') {
            return Err(ParseError::new(
                line,
                col(pos),
                format!("unexpected character `{}`", bytes[pos] as char),
            ));
        }
        let name_start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
            pos += 1;
        }
        let name = &expr[name_start..pos];
        let var = ctx.names().iter().position(|v| v == name).ok_or_else(|| {
            ParseError::new(line, col(name_start), format!("unknown variable `{name}`"))
        })?;
        let mut exp: u32 = 1;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            if pos < bytes.len() && bytes[pos] == b'-' {
                return Err(ParseError::new(line, col(pos), "negative exponent"));
            }
            let digit_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if digit_start == pos {
                return Err(ParseError::new(
                    line,
                    col(digit_start),
                    "expected an exponent after `^`",
                ));
            }
            exp = expr[digit_start..pos]
                .parse()
                .map_err(|_| ParseError::new(line, col(digit_start), "exponent out of range"))?;
        }
        exps[var] = exps[var]
            .checked_add(exp)
            .ok_or_else(|| ParseError::new(line, col(name_start), "exponent out of range"))?;
        expect_factor = false;
    }
    if expect_factor {
        return Err(ParseError::new(line, col(pos), "empty monomial"));
    }
    Ok(Monomial::new(exps))
}

#[derive(Deserialize)]
struct IdealSpecFile {
    vars: Vec<String>,
    gens: Vec<GenEntry>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GenEntry {
    Exps(Vec<u32>),
    Expr(String),
}

fn parse_json(text: &str) -> Result<ParsedIdeal, ParseError> {
    let spec: IdealSpecFile = serde_json::from_str(text)
        .map_err(|e| ParseError::new(e.line().max(1), e.column().max(1), e.to_string()))?;
    for name in &spec.vars {
        if !is_identifier(name) {
            return Err(ParseError::new(
                1,
                1,
                format!("`{name}` is not a valid variable name"),
            ));
        }
    }
    let ctx = RingContext::new(spec.vars).map_err(|e| ParseError::new(1, 1, e.to_string()))?;
    let mut gens = Vec::new();
    for entry in spec.gens {
        match entry {
            GenEntry::Exps(exps) => {
                if exps.len() != ctx.n() {
                    return Err(ParseError::new(
                        1,
                        1,
                        format!(
                            "exponent vector has {} entries, expected {}",
                            exps.len(),
                            ctx.n()
                        ),
                    ));
                }
                gens.push(Monomial::new(exps));
            }
            GenEntry::Expr(expr) => {
                gens.push(parse_monomial(&expr, &ctx).map_err(|e| {
                    ParseError::new(1, 1, format!("in generator `{expr}`: {}", e.msg))
                })?);
            }
        }
    }
    finish(ctx, gens)
}

fn finish(ctx: RingContext, gens: Vec<Monomial>) -> Result<ParsedIdeal, ParseError> {
    let given = gens.len();
    let ideal = MonomialIdeal::new(&ctx, gens).expect("arity already validated");
    let mut warnings = Vec::new();
    let kept = ideal.gens().len();
    if kept != given {
        warnings.push(format!(
            "input generators were not minimal: {given} given, {kept} kept"
        ));
    }
    Ok(ParsedIdeal { ideal, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> RingContext {
        RingContext::new(["x", "y"]).unwrap()
    }

    #[test]
    fn text_and_json_forms_agree() {
        let text = parse_ideal("vars: x, y\ngens: x^5, x^4*y^3, x^2*y^4\n").unwrap();
        let json =
            parse_ideal(r#"{"vars": ["x", "y"], "gens": [[5, 0], "x^4*y^3", [2, 4]]}"#).unwrap();
        assert_eq!(text.ideal, json.ideal);
        assert!(text.warnings.is_empty());
        assert_eq!(text.ideal.display(), "x^5, x^2*y^4, x^4*y^3");
    }

    #[test]
    fn whitespace_and_comments_are_ignored() {
        let a =
            parse_ideal("# the worked ideal\n\nvars:x,y\ngens:  x^5 ,x^4 * y^3,  [2,4]\n").unwrap();
        let b = parse_ideal("vars: x, y\ngens: x^5, x^4*y^3, x^2*y^4").unwrap();
        assert_eq!(a.ideal, b.ideal);
    }

    #[test]
    fn simple_generators() {
        let parsed = parse_ideal("vars: x, y\ngens: x, y\n").unwrap();
        assert_eq!(parsed.ideal.display(), "y, x");
    }

    #[test]
    fn non_minimal_input_warns() {
        let parsed = parse_ideal("vars: x, y\ngens: x^2, x^3\n").unwrap();
        assert_eq!(parsed.ideal.display(), "x^2");
        assert_eq!(parsed.warnings.len(), 1);
        assert!(parsed.warnings[0].contains("not minimal"));
    }

    #[test]
    fn unknown_variable_has_a_position() {
        let err = parse_ideal("vars: x, y\ngens: x^2, z*y\n").unwrap_err();
        assert_eq!((err.line, err.col), (2, 12));
        assert!(err.msg.contains("unknown variable `z`"));
    }

    #[test]
    fn negative_exponent_is_rejected_in_both_encodings() {
        let err = parse_ideal("vars: x, y\ngens: x^-2\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.msg.contains("negative exponent"));

        let err = parse_ideal("vars: x, y\ngens: [3, -1]\n").unwrap_err();
        assert!(err.msg.contains("negative exponent"));
    }

    #[test]
    fn malformed_tokens_are_rejected() {
        assert!(parse_ideal("vars: x, y\ngens: x^\n").is_err());
        assert!(parse_ideal("vars: x, y\ngens: x y\n").is_err());
        assert!(parse_ideal("vars: x, y\ngens: [1, 2, 3]\n").is_err());
        assert!(parse_ideal("vars: x, x\ngens: x\n").is_err());
        assert!(parse_ideal("gens: x\n").is_err());
        assert!(parse_ideal("vars: x\nwat: 1\n").is_err());
    }

    #[test]
    fn unit_and_zero_parse() {
        assert!(parse_ideal("vars: x, y\ngens: 1\n")
            .unwrap()
            .ideal
            .is_unit());
        assert!(parse_ideal("vars: x, y\ngens:\n").unwrap().ideal.is_zero());
    }

    #[test]
    fn monomial_expression_grammar() {
        let ctx = xy();
        assert_eq!(
            parse_monomial("x^4*y^3", &ctx).unwrap(),
            Monomial::new(vec![4, 3])
        );
        assert_eq!(
            parse_monomial("y * x", &ctx).unwrap(),
            Monomial::new(vec![1, 1])
        );
        assert_eq!(
            parse_monomial("x*x^2", &ctx).unwrap(),
            Monomial::new(vec![3, 0])
        );
        assert_eq!(parse_monomial("1", &ctx).unwrap(), Monomial::one(2));
        assert!(parse_monomial("", &ctx).is_err());
        assert!(parse_monomial("^2", &ctx).is_err());
        assert!(parse_monomial("x**y", &ctx).is_err());
    }

    #[test]
    fn display_round_trips_through_the_parser() {
        let parsed = parse_ideal("vars: x, y\ngens: x^5, x^4*y^3, x^2*y^4\n").unwrap();
        let again =
            parse_ideal(&format!("vars: x, y\ngens: {}\n", parsed.ideal.display())).unwrap();
        assert_eq!(parsed.ideal, again.ideal);
    }
}
