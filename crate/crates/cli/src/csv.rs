//! CSV serialization of v-function tables.
//!
//! Layout: one metadata comment line, a header row, then one row of integer
//! cells per power. Cells of a prime column are empty for powers where the
//! prime is not associated. Column names carry the prime's variable set,
//! e.g. `v_(x,y)`; names containing a comma are quoted. The metadata line
//! holds the fields of the table that are not cells (variables, alpha,
//! omega), so a written table re-parses to an identical value.

use vnum_core::asymptotics::{VFunctionTable, VRow};
use vnum_core::primes::MonomialPrime;
use vnum_core::vnumber::VValue;
use vnum_core::RingContext;

use crate::parse::ParseError;

fn quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

pub fn write_csv(table: &VFunctionTable, ctx: &RingContext) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# vars={} alpha={} omega={} k_max={}\n",
        ctx.names().join(","),
        table.alpha,
        table.omega,
        table.k_max
    ));

    let mut header = vec!["k".to_string(), "v".to_string()];
    for p in &table.primes {
        let name = p.label(ctx);
        header.push(quote(&format!("v_{name}")));
        header.push(quote(&format!("alpha_{name}")));
        header.push(quote(&format!("omega_{name}")));
    }
    out.push_str(&header.join(","));
    out.push('\n');

    for row in &table.rows {
        let mut cells = vec![row.k.to_string(), row.v.to_string()];
        for cell in &row.cells {
            match cell {
                Some(vv) => {
                    cells.push(vv.v.to_string());
                    cells.push(vv.alpha_mod.to_string());
                    cells.push(vv.omega_mod.to_string());
                }
                None => {
                    cells.extend(["", "", ""].map(String::from));
                }
            }
        }
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Splits one CSV line, honoring double-quoted fields.
fn split_csv_line(line: &str, line_no: usize) -> Result<Vec<String>, ParseError> {
    let mut fields = Vec::new();
    let mut cur = String::new();
    let mut chars = line.chars().peekable();
    let mut in_quotes = false;
    while let Some(c) = chars.next() {
        if in_quotes {
            match c {
                '"' if chars.peek() == Some(&'"') => {
                    chars.next();
                    cur.push('"');
                }
                '"' => in_quotes = false,
                _ => cur.push(c),
            }
        } else {
            match c {
                '"' => in_quotes = true,
                ',' => fields.push(std::mem::take(&mut cur)),
                _ => cur.push(c),
            }
        }
    }
    if in_quotes {
        return Err(ParseError {
            line: line_no,
            col: line.len(),
            msg: "unterminated quoted field".to_string(),
        });
    }
    fields.push(cur);
    Ok(fields)
}

fn meta_value<'a>(
    pairs: &'a [(String, String)],
    key: &str,
    line: usize,
) -> Result<&'a str, ParseError> {
    pairs
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.as_str())
        .ok_or_else(|| ParseError {
            line,
            col: 1,
            msg: format!("metadata line is missing `{key}=`"),
        })
}

fn parse_int<T: std::str::FromStr>(s: &str, line: usize, what: &str) -> Result<T, ParseError> {
    s.parse().map_err(|_| ParseError {
        line,
        col: 1,
        msg: format!("`{s}` is not a valid {what}"),
    })
}

/// Re-parses a table written by `write_csv`, reconstructing the ring from
/// the metadata line.
pub fn read_csv(text: &str) -> Result<(VFunctionTable, RingContext), ParseError> {
    let mut lines = text.lines().enumerate();

    let (_, meta) = lines.next().ok_or_else(|| ParseError {
        line: 1,
        col: 1,
        msg: "empty table".to_string(),
    })?;
    let meta = meta.strip_prefix("# ").ok_or_else(|| ParseError {
        line: 1,
        col: 1,
        msg: "expected a `# vars=... alpha=... omega=... k_max=...` line".to_string(),
    })?;
    let pairs: Vec<(String, String)> = meta
        .split_whitespace()
        .filter_map(|kv| kv.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
    let vars: Vec<String> = meta_value(&pairs, "vars", 1)?
        .split(',')
        .map(str::to_string)
        .collect();
    let ctx = RingContext::new(vars).map_err(|e| ParseError {
        line: 1,
        col: 1,
        msg: e.to_string(),
    })?;
    let alpha: u64 = parse_int(meta_value(&pairs, "alpha", 1)?, 1, "alpha")?;
    let omega: u64 = parse_int(meta_value(&pairs, "omega", 1)?, 1, "omega")?;
    let k_max: u32 = parse_int(meta_value(&pairs, "k_max", 1)?, 1, "k_max")?;

    let (header_no, header_line) = lines.next().ok_or_else(|| ParseError {
        line: 2,
        col: 1,
        msg: "missing header row".to_string(),
    })?;
    let header = split_csv_line(header_line, header_no + 1)?;
    if header.len() < 2 || header[0] != "k" || header[1] != "v" || (header.len() - 2) % 3 != 0 {
        return Err(ParseError {
            line: header_no + 1,
            col: 1,
            msg: "header must be k,v followed by v_/alpha_/omega_ triples".to_string(),
        });
    }
    let mut primes = Vec::new();
    for triple in header[2..].chunks(3) {
        let name = triple[0]
            .strip_prefix("v_(")
            .and_then(|s| s.strip_suffix(')'));
        let name = name.ok_or_else(|| ParseError {
            line: header_no + 1,
            col: 1,
            msg: format!("`{}` is not a prime column name", triple[0]),
        })?;
        let vars = name
            .split(',')
            .map(|v| {
                ctx.names()
                    .iter()
                    .position(|n| n == v)
                    .ok_or_else(|| ParseError {
                        line: header_no + 1,
                        col: 1,
                        msg: format!("unknown variable `{v}` in column name"),
                    })
            })
            .collect::<Result<Vec<usize>, ParseError>>()?;
        primes.push(MonomialPrime::new(vars).map_err(|e| ParseError {
            line: header_no + 1,
            col: 1,
            msg: e.to_string(),
        })?);
    }

    let mut rows = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let cells = split_csv_line(line, line_no)?;
        if cells.len() != 2 + 3 * primes.len() {
            return Err(ParseError {
                line: line_no,
                col: 1,
                msg: format!(
                    "expected {} cells, found {}",
                    2 + 3 * primes.len(),
                    cells.len()
                ),
            });
        }
        let k: u32 = parse_int(&cells[0], line_no, "power index")?;
        let v: u64 = parse_int(&cells[1], line_no, "v value")?;
        let mut row_cells = Vec::new();
        for (p, triple) in primes.iter().zip(cells[2..].chunks(3)) {
            let empty = triple.iter().filter(|c| c.is_empty()).count();
            match empty {
                3 => row_cells.push(None),
                0 => row_cells.push(Some(VValue {
                    prime: p.clone(),
                    v: parse_int(&triple[0], line_no, "v value")?,
                    alpha_mod: parse_int(&triple[1], line_no, "alpha value")?,
                    omega_mod: parse_int(&triple[2], line_no, "omega value")?,
                })),
                _ => {
                    return Err(ParseError {
                        line: line_no,
                        col: 1,
                        msg: "a prime's triple must be all present or all empty".to_string(),
                    })
                }
            }
        }
        rows.push(VRow {
            k,
            v,
            cells: row_cells,
        });
    }

    Ok((
        VFunctionTable {
            k_max,
            alpha,
            omega,
            primes,
            rows,
        },
        ctx,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use vnum_core::asymptotics::v_function;
    use vnum_core::{Monomial, MonomialIdeal};

    #[test]
    fn round_trip_is_exact() {
        let ctx = RingContext::new(["x", "y"]).unwrap();
        let ideal = MonomialIdeal::new(
            &ctx,
            vec![
                Monomial::new(vec![5, 0]),
                Monomial::new(vec![4, 3]),
                Monomial::new(vec![2, 4]),
            ],
        )
        .unwrap();
        let table = v_function(&ideal, 6).unwrap();
        let text = write_csv(&table, &ctx);
        let (parsed, parsed_ctx) = read_csv(&text).unwrap();
        assert_eq!(parsed, table);
        assert_eq!(parsed_ctx, ctx);
        // writing again is byte-identical
        assert_eq!(write_csv(&parsed, &parsed_ctx), text);
    }

    #[test]
    fn quoted_prime_columns_parse() {
        let ctx = RingContext::new(["x", "y"]).unwrap();
        let ideal = MonomialIdeal::new(
            &ctx,
            vec![Monomial::new(vec![1, 0]), Monomial::new(vec![0, 1])],
        )
        .unwrap();
        let table = v_function(&ideal, 3).unwrap();
        let text = write_csv(&table, &ctx);
        assert!(text.contains("\"v_(x,y)\""));
        assert_eq!(read_csv(&text).unwrap().0, table);
    }

    #[test]
    fn malformed_tables_error_with_positions() {
        assert!(read_csv("").is_err());
        assert!(read_csv("# vars=x,y alpha=1 omega=2 k_max=1\nk,w\n").is_err());
        let bad_row = "# vars=x,y alpha=1 omega=1 k_max=1\nk,v,v_(x),alpha_(x),omega_(x)\n1,0,5,\n";
        let err = read_csv(bad_row).unwrap_err();
        assert_eq!(err.line, 3);
    }
}
